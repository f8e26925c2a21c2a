#include "mukai/k3num.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace mukai::k3;

namespace {

MukaiVector line(int g, long m) { return twist({g, 1, 0, 1}, m); }

// Exhaustive scan over denominators 1, 2, ...; the smallest numerator wins ties.
mpq_class scan_min_denominator(const mpq_class& a, const mpq_class& b, long max_den) {
    for (long q = 1; q <= max_den; ++q) {
        mpz_class lo;
        mpz_class num = a.get_num() * q;
        mpz_fdiv_q(lo.get_mpz_t(), num.get_mpz_t(), a.get_den_mpz_t());
        for (mpz_class p = lo; mpq_class(p, q) <= b; ++p) {
            mpq_class x(p, q);
            x.canonicalize();
            if (a < x && x < b) return x;
        }
    }
    throw std::runtime_error("scan bound too small");
}

} // namespace

TEST(EulerChi, Examples) {
    for (long r = 2; r <= 5; ++r)
        for (long s = 2; s <= 5; ++s) EXPECT_EQ(euler_chi(mukai_bundle_vector(r, s)), r + s);
    EXPECT_EQ(euler_chi(dual(genus7_us())), 10);
    EXPECT_EQ(euler_chi({7, 0, 0, 0}), 0);
    EXPECT_THROW(mukai_vector(1, 1, 0, 1), std::invalid_argument);
}

TEST(EulerPairing, Examples) {
    for (long r = 2; r <= 5; ++r)
        for (long s = 2; s <= 5; ++s) {
            const auto v = mukai_bundle_vector(r, s);
            EXPECT_EQ(euler_pairing_chi(v, v), 2);
        }
    EXPECT_EQ(euler_pairing_chi(genus7_r2(), genus7_r2()), 0);
    EXPECT_EQ(euler_pairing_chi(genus7_r3(), genus7_r3()), 0);
    EXPECT_EQ(euler_pairing_chi({7, 3, 1, 2}, {7, 2, -1, 3}), 25);
    EXPECT_EQ(euler_pairing_chi(genus7_us(), genus7_us()), 2);
    EXPECT_THROW(euler_pairing_chi({7, 1, 0, 1}, {8, 1, 0, 1}), std::invalid_argument);
}

TEST(EulerPairingProperty, SymmetricBilinearDiagonal) {
    testgen::Rng rng(51);
    auto rv = [&](int g) {
        return MukaiVector{g, rng.range(-6, 6), rng.range(-4, 4), rng.range(-10, 10)};
    };
    for (int t = 0; t < 300; ++t) {
        const int g = 2 + static_cast<int>(rng.below(12));
        const auto u = rv(g), v = rv(g), w = rv(g);
        EXPECT_EQ(euler_pairing_chi(u, v), euler_pairing_chi(v, u));
        EXPECT_EQ(euler_pairing_chi(direct_sum(u, v), w), euler_pairing_chi(u, w) + euler_pairing_chi(v, w));
        EXPECT_EQ(euler_pairing_chi(v, v), 2 * v.r * v.s - v.d * v.d * (2L * g - 2));
        // chi(O, F) = chi(F).
        EXPECT_EQ(euler_pairing_chi({g, 1, 0, 1}, v), euler_chi(v));
    }
}

TEST(Twist, Examples) {
    const auto t10 = twist({10, 5, -1, 2}, 1);
    EXPECT_EQ(t10, (MukaiVector{10, 5, 4, 29}));
    EXPECT_EQ(euler_chi(t10), 34);
    EXPECT_EQ(euler_chi(twist({9, 3, -1, 3}, 1)), 14);
    EXPECT_EQ(4 * 9 / 3 + 2, 14);
    const MukaiVector v{7, 3, -1, 2};
    EXPECT_EQ(twist(v, 0), v);
}

TEST(TwistProperty, Composes) {
    testgen::Rng rng(52);
    for (int t = 0; t < 300; ++t) {
        const MukaiVector v{2 + static_cast<int>(rng.below(12)), rng.range(-6, 6), rng.range(-4, 4), rng.range(-10, 10)};
        const long m = rng.range(-4, 4), n = rng.range(-4, 4);
        EXPECT_EQ(twist(twist(v, m), n), twist(v, m + n));
        // Twisting is tensoring with a line bundle.
        EXPECT_EQ(euler_chi(twist(v, m)), chi_tensor(line(v.g, m), v));
    }
}

TEST(ExteriorAndSymmetricSquares, MatchSumsOfLineBundles) {
    // For F = O(a) + O(b): Lambda^2 F = O(a + b), Sym^2 F = O(2a) + O(a + b) + O(2b).
    for (int g : {3, 7, 12})
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b) {
                const auto f = direct_sum(line(g, a), line(g, b));
                EXPECT_EQ(wedge2(f), line(g, a + b));
                EXPECT_EQ(sym2(f), direct_sum(direct_sum(line(g, 2 * a), line(g, a + b)), line(g, 2 * b)));
                const auto f3 = direct_sum(f, line(g, a - b));
                EXPECT_EQ(wedge2(f3), direct_sum(direct_sum(line(g, a + b), line(g, 2 * a - b)), line(g, a)));
                EXPECT_EQ(chi_tensor(f3, f3), euler_chi(wedge2(f3)) + euler_chi(sym2(f3)));
            }
}

TEST(Genus7, TableColumns) {
    const auto rows = verify_genus7_tables();
    ASSERT_EQ(rows.size(), 9u);
    for (const auto& r : rows) EXPECT_TRUE(r.holds()) << r.name << " " << r.tabulated() << " vs " << r.computed;
    EXPECT_EQ(rows[0].computed, 8);
    EXPECT_EQ(euler_chi(twist({7, 1, 0, 1}, -1)), 8);
    EXPECT_EQ(rows[1].computed, 11);
    EXPECT_EQ(wedge2(genus7_r3()), twist(dual(genus7_r3()), -1));
    EXPECT_EQ(rows[4].computed, 16);
    EXPECT_EQ(chi_tensor(genus7_r2(), genus7_r2()), 24);
    EXPECT_EQ(rows[5].computed, 13);
    EXPECT_EQ(rows[8].computed, 44);
    EXPECT_EQ(rows[6].computed, 0);
}

TEST(Genus7, CorruptedTableIsCaught) {
    Genus7Data bad;
    bad.sym2_r3.h1 = 1;
    const auto rows = verify_genus7_tables(bad);
    EXPECT_FALSE(rows[5].holds());
}

TEST(SectionCounts, PerGenus) {
    EXPECT_EQ(section_count(9).chi, 14);
    EXPECT_EQ(section_count(9).twisted, (MukaiVector{9, 3, 2, 11}));
    EXPECT_EQ(section_count(12).chi, 18);
    EXPECT_EQ(section_count(12).twisted, (MukaiVector{12, 3, 2, 15}));
    EXPECT_EQ(section_count(10).bundle, (MukaiVector{10, 5, -1, 2}));
    EXPECT_EQ(section_count(10).chi, 34);
    for (int g : {9, 12}) EXPECT_EQ(section_count(g).chi, 4 * g / 3 + 2);
    EXPECT_THROW(section_count(8), std::invalid_argument);
}

TEST(BrillNoether, Examples) {
    EXPECT_EQ(bn_number({7, 3, 6}), -2);
    EXPECT_EQ(bn_number({7, 2, 4}), -1);
    for (long r = 2; r <= 5; ++r)
        for (long s = 2; s <= 5; ++s) {
            EXPECT_EQ(bn_number({r * s, r, (r - 1) * (s + 1)}), 0);
            EXPECT_EQ(bn_number({r * s, s, (r + 1) * (s - 1)}), 0);
        }
}

TEST(MinDenominator, Examples) {
    EXPECT_EQ(min_denominator_in_interval(mpq_class(-1, 2), mpq_class(-1, 3)), mpq_class(-2, 5));
    EXPECT_EQ(min_denominator_in_interval(0, 1), mpq_class(1, 2));
    EXPECT_EQ(min_denominator_in_interval(mpq_class(1, 3), mpq_class(1, 2)), mpq_class(2, 5));
    EXPECT_EQ(scan_min_denominator(mpq_class(1, 3), mpq_class(1, 2), 10), mpq_class(2, 5));
    EXPECT_EQ(min_denominator_in_interval(mpq_class(-3, 2), 2), -1);
    EXPECT_THROW(min_denominator_in_interval(1, 1), std::invalid_argument);
}

TEST(MinDenominatorProperty, AgreesWithExhaustiveScan) {
    testgen::Rng rng(53);
    for (int t = 0; t < 500; ++t) {
        mpq_class a(static_cast<long>(rng.range(-40, 40)), static_cast<unsigned long>(rng.range(1, 13)));
        mpq_class b(static_cast<long>(rng.range(-40, 40)), static_cast<unsigned long>(rng.range(1, 13)));
        a.canonicalize();
        b.canonicalize();
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        const mpq_class x = min_denominator_in_interval(a, b);
        EXPECT_TRUE(a < x && x < b);
        EXPECT_EQ(x, scan_min_denominator(a, b, 200)) << a << " " << b;
    }
}

TEST(ConormalSlopes, Examples) {
    EXPECT_EQ(conormal_factor_slope(3, 3, 2), mpq_class(-1, 3));
    EXPECT_EQ(conormal_factor_slope(2, 4, 2), mpq_class(-1, 2));
    EXPECT_EQ(conormal_factor_slope(2, 2, 2), -1);
    EXPECT_THROW(conormal_factor_slope(3, 3, 4), std::invalid_argument);
    EXPECT_THROW(conormal_factor_slope(3, 3, 1), std::invalid_argument);
}

TEST(ConormalSlopes, NegativeExactlyWhenTheSlopeInequalityHolds) {
    // All slopes negative iff the i = 2 slope is, iff 1/r + 1/s > 1/2.
    for (long r = 2; r <= 8; ++r)
        for (long s = 2; s <= 8; ++s) {
            bool all_negative = true;
            for (long i = 2; i <= r; ++i) all_negative = all_negative && sgn(conormal_factor_slope(r, s, i)) < 0;
            EXPECT_EQ(all_negative, mpq_class(1, r) + mpq_class(1, s) > mpq_class(1, 2)) << r << " " << s;
        }
}

TEST(Cone, TruthTable) {
    const std::vector<std::pair<ConeCase, long>> cases{
        {ConeCase::Plain, 2}, {ConeCase::GeneralQuadric, 2}, {ConeCase::VertexInQuadric, 3}, {ConeCase::VertexMult2, 4}};
    for (auto [c, threshold] : cases)
        for (long m = 1; m <= 5; ++m) EXPECT_EQ(cone_terminality(m, c), m >= threshold);
    EXPECT_EQ(parse_cone_case("vertex_mult2"), ConeCase::VertexMult2);
    EXPECT_THROW(parse_cone_case("cusp"), std::invalid_argument);
    EXPECT_THROW(cone_terminality(-1, ConeCase::Plain), std::invalid_argument);
}
