#pragma once

// Riemann-Roch arithmetic on a K3 surface S with Pic(S) = Z.H, H^2 = 2g - 2.
//
// A Mukai vector (r, dH, s) has rank r, first Chern class dH and
// s = ch_2 + r, so that chi(F) = r + s. The Euler pairing is
//   chi(E, F) = r_E s_F + r_F s_E - d_E d_F (2g - 2) = chi(E^dual (x) F),
// with the dual given by (r, d, s) -> (r, -d, s).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::k3 {

struct MukaiVector {
    int g;
    long r;
    long d;
    long s;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

    std::string to_string() const {
        return "(" + std::to_string(r) + "," + std::to_string(d) + "H," + std::to_string(s) + ")";
    }
};

inline MukaiVector mukai_vector(int g, long r, long d, long s) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    return {g, r, d, s};
}

inline long h_squared(int g) { return 2L * g - 2; }

inline long euler_chi(const MukaiVector& v) { return v.r + v.s; }

inline long euler_pairing_chi(const MukaiVector& v, const MukaiVector& w) {
    if (v.g != w.g) throw std::invalid_argument("Mukai vectors of different genus");
    return v.r * w.s + w.r * v.s - v.d * w.d * h_squared(v.g);
}

inline MukaiVector dual(const MukaiVector& v) { return {v.g, v.r, -v.d, v.s}; }

/// v (x) O(mH).
inline MukaiVector twist(const MukaiVector& v, long m) {
    return {v.g, v.r, v.d + v.r * m, v.s + m * v.d * h_squared(v.g) + v.r * m * m * (v.g - 1)};
}

inline MukaiVector direct_sum(const MukaiVector& v, const MukaiVector& w) {
    if (v.g != w.g) throw std::invalid_argument("Mukai vectors of different genus");
    return {v.g, v.r + w.r, v.d + w.d, v.s + w.s};
}

/// chi(E (x) F) = chi(E^dual, F).
inline long chi_tensor(const MukaiVector& e, const MukaiVector& f) { return euler_pairing_chi(dual(e), f); }

/// Mukai vector of Lambda^2 F. With ch = (r, D, c) and c = s - r:
/// ch(Lambda^2 F) = (r(r-1)/2, (r-1)D, (r-2)c + D^2/2).
inline MukaiVector wedge2(const MukaiVector& v) {
    const long rank = v.r * (v.r - 1) / 2;
    const long c = v.s - v.r;
    const long ch2 = (v.r - 2) * c + v.d * v.d * (v.g - 1);
    return {v.g, rank, (v.r - 1) * v.d, ch2 + rank};
}

/// Mukai vector of Sym^2 F: ch = (r(r+1)/2, (r+1)D, (r+2)c + D^2/2).
inline MukaiVector sym2(const MukaiVector& v) {
    const long rank = v.r * (v.r + 1) / 2;
    const long c = v.s - v.r;
    const long ch2 = (v.r + 2) * c + v.d * v.d * (v.g - 1);
    return {v.g, rank, (v.r + 1) * v.d, ch2 + rank};
}

/// Brill-Noether number g - r(g - 1 - d + r) for line bundles of degree d
/// with at least r sections on a curve of genus g.
struct BNProblem {
    long g;
    long r;
    long d;
};

inline long bn_number(const BNProblem& p) {
    if (p.g < 0 || p.r < 0 || p.d < 0) throw std::invalid_argument("Brill-Noether data must be nonnegative");
    return p.g - p.r * (p.g - 1 - p.d + p.r);
}

/// The rational in the open interval (a, b) of smallest denominator, and
/// among those the smallest. Found by continued-fraction descent.
inline mpq_class min_denominator_in_interval(const mpq_class& a, const mpq_class& b) {
    if (!(a < b)) throw std::invalid_argument("empty interval");
    // Leftmost integer strictly above a.
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    const mpz_class next = f + 1;
    if (mpq_class(next) < b) return mpq_class(next);
    // Here f <= a < b <= f + 1; recurse on the reciprocal interval.
    const mpq_class lo = a - f;
    const mpq_class hi = b - f;
    const mpq_class rlo = 1 / hi;
    mpq_class x;
    if (sgn(lo) == 0) {
        mpz_class c;
        mpz_fdiv_q(c.get_mpz_t(), rlo.get_num_mpz_t(), rlo.get_den_mpz_t());
        x = mpq_class(c + 1);
    } else {
        x = min_denominator_in_interval(rlo, 1 / lo);
    }
    mpq_class out = mpq_class(f) + 1 / x;
    out.canonicalize();
    return out;
}

/// Slope 1 - i (1/r + 1/s) of the i-th factor in the conormal filtration.
inline mpq_class conormal_factor_slope(long r, long s, long i) {
    if (i < 2 || i > r) throw std::invalid_argument("factor index must satisfy 2 <= i <= r");
    if (r <= 0 || s <= 0) throw std::invalid_argument("r and s must be positive");
    mpq_class v = 1 - mpq_class(i) * (mpq_class(1, static_cast<unsigned long>(r)) + mpq_class(1, static_cast<unsigned long>(s)));
    v.canonicalize();
    return v;
}

enum class ConeCase { Plain, GeneralQuadric, VertexInQuadric, VertexMult2 };

inline long cone_threshold(ConeCase c) {
    switch (c) {
    case ConeCase::Plain:
    case ConeCase::GeneralQuadric: return 2;
    case ConeCase::VertexInQuadric: return 3;
    case ConeCase::VertexMult2: return 4;
    }
    throw std::logic_error("unknown cone case");
}

inline bool cone_terminality(long m0, ConeCase c) {
    if (m0 < 0) throw std::invalid_argument("m0 must be nonnegative");
    return m0 >= cone_threshold(c);
}

inline std::string to_string(ConeCase c) {
    switch (c) {
    case ConeCase::Plain: return "plain";
    case ConeCase::GeneralQuadric: return "general_quadric";
    case ConeCase::VertexInQuadric: return "vertex_in_quadric";
    case ConeCase::VertexMult2: return "vertex_mult2";
    }
    throw std::logic_error("unknown cone case");
}

inline ConeCase parse_cone_case(const std::string& s) {
    for (auto c : {ConeCase::Plain, ConeCase::GeneralQuadric, ConeCase::VertexInQuadric, ConeCase::VertexMult2})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown cone case '" + s + "'");
}

/// One Euler-characteristic comparison: a tabulated alternating sum against
/// the value computed from Mukai vectors.
struct ChiCheck {
    std::string name;
    long h0;
    long h1;
    long h2;
    long computed;

    long tabulated() const { return h0 - h1 + h2; }
    bool holds() const { return tabulated() == computed; }
};

/// Genus-7 Lazarsfeld bundles R_2, R_3 and the extension U_S.
inline MukaiVector genus7_r2() { return {7, 2, -1, 3}; }
inline MukaiVector genus7_r3() { return {7, 3, -1, 2}; }
inline MukaiVector genus7_us() { return {7, 5, -2, 5}; }

struct Genus7Table {
    long h0;
    long h1;
    long h2;
};

/// The tabulated cohomology of the genus-7 bundles, in column order
/// Lambda^2 R2, Lambda^2 R3, R2 (x) R3^dual, R2 (x) R3, Sym^2 R2, Sym^2 R3,
/// then End(R_i) and Lambda^2 U_S.
struct Genus7Data {
    Genus7Table wedge2_r2{0, 0, 8};
    Genus7Table wedge2_r3{0, 0, 11};
    Genus7Table r2_r3dual{0, 1, 2};
    Genus7Table r2_r3{0, 1, 26};
    Genus7Table sym2_r2{0, 0, 16};
    Genus7Table sym2_r3{0, 2, 15};
    Genus7Table end_ri{1, 2, 1};
    Genus7Table wedge2_us{0, 1, 45};
};

inline std::vector<ChiCheck> verify_genus7_tables(const Genus7Data& t = {}) {
    const auto r2 = genus7_r2();
    const auto r3 = genus7_r3();
    const auto us = genus7_us();
    auto row = [](std::string name, const Genus7Table& x, long computed) {
        return ChiCheck{std::move(name), x.h0, x.h1, x.h2, computed};
    };
    auto sym2_chi = [](const MukaiVector& f) { return chi_tensor(f, f) - euler_chi(wedge2(f)); };
    return {
        row("Lambda^2 R2", t.wedge2_r2, euler_chi(wedge2(r2))),
        row("Lambda^2 R3", t.wedge2_r3, euler_chi(wedge2(r3))),
        row("R2 (x) R3^*", t.r2_r3dual, euler_pairing_chi(r3, r2)),
        row("R2 (x) R3", t.r2_r3, chi_tensor(r2, r3)),
        row("Sym^2 R2", t.sym2_r2, sym2_chi(r2)),
        row("Sym^2 R3", t.sym2_r3, sym2_chi(r3)),
        row("End R2", t.end_ri, euler_pairing_chi(r2, r2)),
        row("End R3", t.end_ri, euler_pairing_chi(r3, r3)),
        row("Lambda^2 U_S", t.wedge2_us, euler_chi(wedge2(us))),
    };
}

/// Mukai bundle of type (r, s) in genus g = r s: v = (r, -H, s).
inline MukaiVector mukai_bundle_vector(long r, long s) {
    return {static_cast<int>(r * s), r, -1, s};
}

/// Sections of the twist by H that cut out the K3 surface in genus 9, 10, 12:
/// U_S(H) for g = 9 and 12, U_S^perp(H) for g = 10, where U_S^perp is the
/// kernel of V_7^dual (x) O -> U_S^dual.
struct SectionCount {
    int genus;
    MukaiVector bundle;
    MukaiVector twisted;
    long chi;
    long expected;
};

inline SectionCount section_count(int g) {
    switch (g) {
    case 9: {
        const auto v = mukai_bundle_vector(3, 3);
        const auto t = twist(v, 1);
        return {9, v, t, euler_chi(t), 14};
    }
    case 10: {
        const auto us = mukai_bundle_vector(2, 5);
        const MukaiVector trivial7{10, 7, 0, 7};
        const auto usd = dual(us);
        const MukaiVector perp{10, trivial7.r - usd.r, trivial7.d - usd.d, trivial7.s - usd.s};
        const auto t = twist(perp, 1);
        return {10, perp, t, euler_chi(t), 34};
    }
    case 12: {
        const auto v = mukai_bundle_vector(3, 4);
        const auto t = twist(v, 1);
        return {12, v, t, euler_chi(t), 18};
    }
    default: throw std::invalid_argument("no section count in genus " + std::to_string(g));
    }
}

} // namespace mukai::k3
