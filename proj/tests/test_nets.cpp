#include "mukai/nets.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mukai;
using namespace mukai::nets;
using Kind = NondegeneracyCertificate::Kind;

namespace {

const Field Q = Field::rationals();

Matrix pairs_form(std::initializer_list<std::pair<unsigned, unsigned>> pairs, Field f = Q) {
    Matrix m(7, 7, f);
    for (auto [i, j] : pairs) {
        m.set(i, j, Scalar::one(f));
        m.set(j, i, -Scalar::one(f));
    }
    return m;
}

// Random integer nets until one is certified nondegenerate over the given prime field.
SkewNet nondegenerate_mod(testgen::Rng& rng, std::uint64_t p) {
    const Field f = Field::prime(p);
    for (;;) {
        SkewNet n = testgen::random_net(rng, 3).to_field(f);
        if (!n.forms_independent()) continue;
        if (is_nondegenerate_net(n).kind == Kind::NondegenerateOverClosure) return n;
    }
}

// Brute force: ordered independent isotropic pairs divided by |GL_2(F_q)|.
std::uint64_t count_isotropic_planes(const SkewNet& net) {
    const std::uint64_t q = net.field().modulus();
    std::uint64_t total = 1;
    for (int i = 0; i < 7; ++i) total *= q;
    auto vec = [&](std::uint64_t code) {
        Vector v;
        for (int i = 0; i < 7; ++i) {
            v.push_back(Scalar::from_int(static_cast<long long>(code % q), net.field()));
            code /= q;
        }
        return v;
    };
    std::vector<Vector> all;
    for (std::uint64_t c = 1; c < total; ++c) all.push_back(vec(c));
    std::uint64_t pairs = 0;
    for (const auto& u : all) {
        std::array<Vector, 3> su{net.form(0).apply(u), net.form(1).apply(u), net.form(2).apply(u)};
        for (const auto& w : all) {
            bool iso = true;
            for (const auto& s : su) {
                Scalar acc = Scalar::zero(net.field());
                for (std::size_t k = 0; k < 7; ++k) acc += s[k] * w[k];
                if (!acc.is_zero()) {
                    iso = false;
                    break;
                }
            }
            if (iso && rank(Matrix::from_rows({u, w})) == 2) ++pairs;
        }
    }
    return pairs / ((q * q - 1) * (q * q - q));
}

} // namespace

TEST(SkewNet, RejectsBadForms) {
    Matrix sym(7, 7);
    sym.set(0, 1, Scalar(1));
    sym.set(1, 0, Scalar(1));
    EXPECT_THROW(SkewNet({sym, pairs_form({{0, 1}}), pairs_form({{2, 3}})}), std::invalid_argument);
    EXPECT_THROW(SkewNet({pairs_form({{0, 1}}), pairs_form({{0, 1}}), pairs_form({{2, 3}})}), std::invalid_argument);
    EXPECT_THROW(SkewNet({Matrix(6, 6), pairs_form({{0, 1}}), pairs_form({{2, 3}})}), std::invalid_argument);
    EXPECT_NO_THROW(SkewNet({Matrix(7, 7), Matrix(7, 7), Matrix(7, 7)}, false));
}

TEST(DividedPower, MatchesWedgePowersOverQ) {
    testgen::Rng rng(61);
    for (int t = 0; t < 30; ++t) {
        const auto s = exterior::MultiVector::from_skew_matrix(testgen::random_skew(rng, 7, 4));
        EXPECT_EQ(Scalar(2) * divided_power(s, 2), s.wedge(s));
        EXPECT_EQ(Scalar(6) * divided_power(s, 3), s.wedge(s).wedge(s));
        EXPECT_EQ(divided_power(s, 1), s);
    }
}

TEST(Kappa, StandardForm) {
    const SkewNet net({pairs_form({{0, 1}, {2, 3}, {4, 5}}), pairs_form({{0, 2}}), pairs_form({{1, 3}})});
    const Vector v = kappa(net, parameter(1, 0, 0));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(v[i].is_zero());
    EXPECT_EQ(v[6], Scalar(1));
    EXPECT_TRUE(is_zero_vector(kappa(net, parameter(0, 1, 0))));
    EXPECT_THROW(kappa(net, parameter(0, 0, 0)), std::invalid_argument);
}

TEST(KappaProperty, SpansTheKernelExactlyAtRankSix) {
    testgen::Rng rng(62);
    for (int t = 0; t < 60; ++t) {
        const Field f = t % 3 == 0 ? Field::prime(2) : t % 3 == 1 ? Field::prime(101) : Q;
        const SkewNet net = testgen::random_net(rng, 3, f);
        const Parameter a = testgen::random_parameter(rng, 4, f);
        const Matrix s = net.combination(a);
        const Vector v = kappa(net, a);
        EXPECT_TRUE(is_zero_vector(s.apply(v)));
        EXPECT_EQ(!is_zero_vector(v), rank(s) == 6);
    }
}

TEST(Cubics, EvaluateToKappa) {
    testgen::Rng rng(63);
    for (int t = 0; t < 20; ++t) {
        const Field f = t % 2 ? Field::prime(3) : Q;
        const SkewNet net = testgen::random_net(rng, 3, f);
        const auto cubics = net_cubics(net);
        ASSERT_EQ(cubics.size(), 7u);
        const Parameter a = testgen::random_parameter(rng, 5, f);
        const Vector v = kappa(net, a);
        for (std::size_t m = 0; m < 7; ++m) {
            EXPECT_TRUE(cubics[m].is_homogeneous());
            EXPECT_EQ(cubics[m].evaluate({a[0], a[1], a[2]}), v[m]);
        }
    }
}

TEST(Cubics, ZeroNetAndRank) {
    const SkewNet zero({Matrix(7, 7), Matrix(7, 7), Matrix(7, 7)}, false);
    const auto cubics = net_cubics(zero);
    for (const auto& c : cubics) EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(rank(cubic_coefficient_matrix(cubics)), 0u);

    testgen::Rng rng(64);
    const SkewNet net = testgen::random_net(rng, 3);
    EXPECT_EQ(cubic_coefficient_matrix(net_cubics(net)).cols(), 10u);
    EXPECT_EQ(rank(cubic_coefficient_matrix(net_cubics(net))), 7u);
}

TEST(Nondegeneracy, DegenerateNetHasWitness) {
    // s_1 has rank 4.
    const SkewNet net({pairs_form({{0, 1}, {2, 3}}), pairs_form({{0, 4}, {1, 5}, {2, 6}}), pairs_form({{3, 4}, {5, 6}})});
    const auto c = is_nondegenerate_net(net);
    ASSERT_EQ(c.kind, Kind::DegenerateWitness);
    ASSERT_TRUE(c.witness);
    EXPECT_LE(rank(net.combination(*c.witness)), 4u);
    EXPECT_EQ(c.witness_rank, rank(net.combination(*c.witness)));

    const SkewNet zero({Matrix(7, 7), Matrix(7, 7), Matrix(7, 7)}, false);
    EXPECT_EQ(is_nondegenerate_net(zero).kind, Kind::DegenerateWitness);
}

TEST(Nondegeneracy, ForcedDegeneracyOverF2) {
    // s_1 + s_2 = S with S of rank 4 (3-dimensional kernel).
    testgen::Rng rng(65);
    const Field f2 = Field::prime(2);
    const Matrix s = pairs_form({{0, 1}, {2, 3}}, f2);
    for (int t = 0; t < 10; ++t) {
        const Matrix s1 = testgen::random_skew(rng, 7, 1, f2);
        const Matrix s2 = s1 + s;  // = s - s1 in characteristic 2
        const Matrix s3 = testgen::random_skew(rng, 7, 1, f2);
        SkewNet net({s1, s2, s3}, false);
        if (!net.forms_independent()) continue;
        const auto c = is_nondegenerate_net(net);
        EXPECT_EQ(c.kind, Kind::DegenerateWitness);
        EXPECT_LE(c.witness_rank, 4u);
    }
}

TEST(NondegeneracyProperty, CertificatesAreConsistent) {
    testgen::Rng rng(66);
    int certified = 0;
    for (int t = 0; t < 25; ++t) {
        const SkewNet net = testgen::random_net(rng, 3);
        const auto c = is_nondegenerate_net(net);
        if (c.kind == Kind::DegenerateWitness) {
            EXPECT_LE(rank(net.combination(*c.witness)), 4u);
            continue;
        }
        ASSERT_EQ(c.kind, Kind::NondegenerateOverClosure);
        ++certified;
        EXPECT_GE(c.degree, 3u);
        EXPECT_LE(c.degree, 8u);
        // Recheck the surjectivity over Q itself.
        std::vector<MultiPoly> gens;
        for (const auto& p : net_cubics(net))
            if (!p.is_zero()) gens.push_back(p);
        const Matrix m = graded_multiplication_map(gens, c.degree);
        EXPECT_EQ(rank(m), m.rows());
        // No rank drop at small parameters.
        EXPECT_TRUE(constant_rank_check(net, rational_points(2)));
    }
    EXPECT_GT(certified, 15);
}

TEST(Points, Counts) {
    EXPECT_EQ(projective_plane_points(Field::prime(3)).size(), 13u);
    EXPECT_EQ(projective_plane_points(Field::prime(2)).size(), 7u);
    EXPECT_EQ(rational_points(1).size(), 13u);
    EXPECT_THROW(projective_plane_points(Q), std::invalid_argument);
}

TEST(Conic, SmoothAtRandomRationalParameters) {
    testgen::Rng rng(67);
    for (int k = 0; k < 2; ++k) {
        SkewNet net = testgen::random_net(rng, 3);
        while (is_nondegenerate_net(net).kind != Kind::NondegenerateOverClosure) net = testgen::random_net(rng, 3);
        for (int t = 0; t < 20; ++t) {
            const auto c = conic_at(net, testgen::random_parameter(rng, 6));
            EXPECT_EQ(c.v5_dimension, 5u);
            EXPECT_EQ(c.annihilator_dimension, 3u);
            EXPECT_EQ(c.rank, 3u);
        }
    }
}

TEST(Conic, NeverAPlaneOverAPrimeField) {
    // Singular conics occur along a discriminant curve; a plane (rank 0) never does.
    testgen::Rng rng(73);
    const Field f = Field::prime(101);
    SkewNet net = testgen::random_net(rng, 3, f);
    while (is_nondegenerate_net(net).kind != Kind::NondegenerateOverClosure) net = testgen::random_net(rng, 3, f);
    int smooth = 0;
    for (int t = 0; t < 60; ++t) {
        const auto c = conic_at(net, testgen::random_parameter(rng, 50, f));
        EXPECT_EQ(c.annihilator_dimension, 3u);
        EXPECT_GE(c.rank, 2u);
        smooth += c.rank == 3;
    }
    EXPECT_GT(smooth, 40);
}

TEST(ConicProperty, InvariantUnderBasisChange) {
    testgen::Rng rng(74);
    SkewNet net = testgen::random_net(rng, 3);
    while (is_nondegenerate_net(net).kind != Kind::NondegenerateOverClosure) net = testgen::random_net(rng, 3);
    for (int t = 0; t < 5; ++t) {
        const Matrix g = testgen::random_invertible(rng, 7, 2);
        const SkewNet moved({g.transpose() * net.form(0) * g, g.transpose() * net.form(1) * g, g.transpose() * net.form(2) * g});
        const Parameter a = testgen::random_parameter(rng, 4);
        EXPECT_EQ(conic_at(moved, a).rank, conic_at(net, a).rank);
        // kappa moves by g^{-1} up to the factor det g.
        EXPECT_TRUE(is_zero_vector(moved.combination(a).apply(kappa(moved, a))));
    }
}

TEST(Conic, Errors) {
    const SkewNet deg({pairs_form({{0, 1}, {2, 3}}), pairs_form({{0, 4}, {1, 5}, {2, 6}}), pairs_form({{3, 4}, {5, 6}})});
    EXPECT_THROW(conic_at(deg, parameter(1, 0, 0)), std::domain_error);
    testgen::Rng rng(68);
    const SkewNet n2 = nondegenerate_mod(rng, 2);
    EXPECT_THROW(conic_at(n2, parameter(1, 0, 0, Field::prime(2))), std::invalid_argument);
}

TEST(GaussianBinomial, Values) {
    EXPECT_EQ(gaussian_binomial(7, 4, 2), 11811u);
    EXPECT_EQ(gaussian_binomial(7, 3, 2), 11811u);
    EXPECT_EQ(gaussian_binomial(7, 1, 2), 127u);
    EXPECT_EQ(gaussian_binomial(4, 2, 3), 130u);
}

TEST(IsotropicScan, ZeroNetGivesTheWholeGrassmannian) {
    const Field f2 = Field::prime(2);
    const SkewNet zero({Matrix(7, 7, f2), Matrix(7, 7, f2), Matrix(7, 7, f2)}, false);
    const auto all = isotropic_scan(zero, 4);
    EXPECT_EQ(all.size(), 11811u);
    std::set<std::string> seen;
    for (const auto& u : all) {
        std::ostringstream os;
        os << u.basis();
        seen.insert(os.str());
    }
    EXPECT_EQ(seen.size(), all.size());
    EXPECT_EQ(isotropic_scan(zero, 1).size(), 127u);
    EXPECT_THROW(isotropic_scan(testgen::random_net(*std::make_unique<testgen::Rng>(1), 2), 3), std::invalid_argument);
}

TEST(IsotropicScan, PlaneCountMatchesBruteForce) {
    testgen::Rng rng(69);
    for (int t = 0; t < 3; ++t) {
        const SkewNet net = testgen::random_net(rng, 1, Field::prime(2));
        const auto planes = isotropic_scan(net, 2);
        for (const auto& u : planes) EXPECT_TRUE(is_isotropic(net, u));
        EXPECT_EQ(planes.size(), count_isotropic_planes(net));
    }
}

TEST(IsotropicScanProperty, NondegenerateNetsOverSmallFields) {
    // No isotropic 4-spaces, and every isotropic 3-space lies on a conic.
    testgen::Rng rng(70);
    for (std::uint64_t q : {2u, 2u, 2u, 3u}) {
        const SkewNet net = nondegenerate_mod(rng, q);
        EXPECT_TRUE(isotropic_scan(net, 4).empty());
        const auto threes = isotropic_scan(net, 3);
        for (const auto& u : threes) {
            EXPECT_TRUE(is_isotropic(net, u));
            const auto cc = covering_conic_exists(net, u);
            EXPECT_TRUE(cc.exists);
            EXPECT_EQ(cc.minors.size(), 4u);
            if (cc.witness) {
                for (const auto& m : cc.minors) EXPECT_TRUE(m.evaluate({(*cc.witness)[0], (*cc.witness)[1], (*cc.witness)[2]}).is_zero());
            }
        }
    }
}

TEST(CoveringConic, RejectsNonIsotropic) {
    testgen::Rng rng(71);
    const SkewNet net = nondegenerate_mod(rng, 2);
    const Field f2 = Field::prime(2);
    Matrix b(3, 7, f2);
    for (std::size_t i = 0; i < 3; ++i) b.set(i, i, Scalar::one(f2));
    const exterior::Subspace u(b);
    if (!is_isotropic(net, u)) {
        EXPECT_THROW(covering_conic_exists(net, u), std::invalid_argument);
    }
    Matrix b2(2, 7, f2);
    b2.set(0, 0, Scalar::one(f2));
    b2.set(1, 1, Scalar::one(f2));
    EXPECT_THROW(covering_conic_exists(net, exterior::Subspace(b2)), std::invalid_argument);
}

TEST(ConstantRank, LiftedPointsOfTheProjectivePlane) {
    testgen::Rng rng(72);
    SkewNet net = testgen::random_net(rng, 3);
    while (is_nondegenerate_net(net).kind != Kind::NondegenerateOverClosure) net = testgen::random_net(rng, 3);
    std::vector<Parameter> lifts;
    for (const auto& a : projective_plane_points(Field::prime(3)))
        lifts.push_back(parameter(static_cast<long>(a[0].residue()), static_cast<long>(a[1].residue()),
                                  static_cast<long>(a[2].residue())));
    EXPECT_TRUE(constant_rank_check(net, lifts));
    for (const auto& a : lifts) EXPECT_TRUE(is_zero_vector(net.combination(a).apply(kappa(net, a))));
    const SkewNet deg({pairs_form({{0, 1}, {2, 3}}), pairs_form({{0, 4}, {1, 5}, {2, 6}}), pairs_form({{3, 4}, {5, 6}})});
    EXPECT_FALSE(constant_rank_check(deg, lifts));
}
