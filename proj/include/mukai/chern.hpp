#pragma once

// Chern classes of homogeneous bundles on Gr(k, n) by formal splitting.
//
// Chern classes are first computed as polynomials over Q in the variables
//   h, u_1..u_k, q_1..q_{n-k}
// standing for c_1(O(1)), c_i(U^dual) and c_j(V/U), then evaluated in the
// Chow ring with h -> sigma_1, u_i -> sigma_{1^i}, q_j -> sigma_j.

#include "mukai/multipoly.hpp"
#include "mukai/schur.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::schur {

class BundleExpr {
public:
    enum class Kind { SubDual, Quotient, Line, Dual, Sum, Twist, Wedge2 };

    static BundleExpr sub_dual() { return BundleExpr(Kind::SubDual); }
    static BundleExpr quotient() { return BundleExpr(Kind::Quotient); }
    static BundleExpr line(int t) {
        BundleExpr b(Kind::Line);
        b.t_ = t;
        return b;
    }
    static BundleExpr dual(const BundleExpr& e) { return BundleExpr(Kind::Dual, {e}); }
    static BundleExpr sum(std::vector<BundleExpr> parts) { return BundleExpr(Kind::Sum, std::move(parts)); }
    static BundleExpr copies(const BundleExpr& e, int m) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        return sum(std::vector<BundleExpr>(static_cast<std::size_t>(m), e));
    }
    static BundleExpr twist(const BundleExpr& e, int t) {
        BundleExpr b(Kind::Twist, {e});
        b.t_ = t;
        return b;
    }
    static BundleExpr wedge2(const BundleExpr& e) { return BundleExpr(Kind::Wedge2, {e}); }

    Kind kind() const { return kind_; }
    int t() const { return t_; }
    const std::vector<BundleExpr>& children() const { return *children_; }

    int rank(int k, int n) const {
        switch (kind_) {
        case Kind::SubDual: return k;
        case Kind::Quotient: return n - k;
        case Kind::Line: return 1;
        case Kind::Dual:
        case Kind::Twist: return children().front().rank(k, n);
        case Kind::Sum: {
            int r = 0;
            for (const auto& c : children()) r += c.rank(k, n);
            return r;
        }
        case Kind::Wedge2: {
            const int r = children().front().rank(k, n);
            return r * (r - 1) / 2;
        }
        }
        throw std::logic_error("unknown bundle constructor");
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::SubDual: return "U^*";
        case Kind::Quotient: return "V/U";
        case Kind::Line: return "O(" + std::to_string(t_) + ")";
        case Kind::Dual: return "(" + children().front().describe() + ")^*";
        case Kind::Twist: return children().front().describe() + "(" + std::to_string(t_) + ")";
        case Kind::Wedge2: return "L2(" + children().front().describe() + ")";
        case Kind::Sum: {
            if (children().empty()) return "0";
            std::string s;
            for (std::size_t i = 0; i < children().size(); ++i) s += (i ? " + " : "") + children()[i].describe();
            return s;
        }
        }
        throw std::logic_error("unknown bundle constructor");
    }

private:
    explicit BundleExpr(Kind k, std::vector<BundleExpr> ch = {})
        : kind_(k), children_(std::make_shared<const std::vector<BundleExpr>>(std::move(ch))) {}

    Kind kind_;
    int t_ = 0;
    std::shared_ptr<const std::vector<BundleExpr>> children_;
};

/// Chern polynomial variables on Gr(k, n): index 0 is h, 1..k are u_i,
/// k+1..n are q_j.
struct ChernRing {
    int k;
    int n;

    std::size_t nvars() const { return static_cast<std::size_t>(n) + 1; }
    MultiPoly one() const { return MultiPoly::constant(nvars(), Scalar(1)); }
    MultiPoly zero() const { return MultiPoly(nvars()); }
    MultiPoly h() const { return MultiPoly::variable(nvars(), 0); }
    MultiPoly u(int i) const {
        if (i == 0) return one();
        if (i < 0 || i > k) return zero();
        return MultiPoly::variable(nvars(), static_cast<std::size_t>(i));
    }
    MultiPoly q(int j) const {
        if (j == 0) return one();
        if (j < 0 || j > n - k) return zero();
        return MultiPoly::variable(nvars(), static_cast<std::size_t>(k + j));
    }
    std::vector<std::string> names() const {
        std::vector<std::string> v{"h"};
        for (int i = 1; i <= k; ++i) v.push_back("u" + std::to_string(i));
        for (int j = 1; j <= n - k; ++j) v.push_back("q" + std::to_string(j));
        return v;
    }
};

namespace detail {

using Total = std::vector<MultiPoly>;  // c_0 .. c_rank

inline Total multiply_total(const ChernRing& R, const Total& a, const Total& b) {
    Total c(a.size() + b.size() - 1, R.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Power sums of the Chern roots from the elementary symmetric functions.
inline Total power_sums(const ChernRing& R, const Total& c, std::size_t upto) {
    const long r = static_cast<long>(c.size()) - 1;
    Total p(upto + 1, R.zero());
    p[0] = Scalar(static_cast<int>(r)) * R.one();
    for (std::size_t m = 1; m <= upto; ++m) {
        // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
        MultiPoly s = R.zero();
        for (std::size_t i = 1; i < m; ++i) {
            if (i >= c.size()) break;
            const MultiPoly t = c[i] * p[m - i];
            if (i % 2) s += t;
            else s -= t;
        }
        if (m < c.size()) {
            const MultiPoly t = Scalar(static_cast<int>(m)) * c[m];
            if (m % 2) s += t;
            else s -= t;
        }
        p[m] = s;
    }
    return p;
}

// Elementary symmetric functions e_0..e_rank from power sums (Newton).
inline Total elementary_from_power(const ChernRing& R, const Total& p, std::size_t rank) {
    Total e(rank + 1, R.zero());
    e[0] = R.one();
    for (std::size_t m = 1; m <= rank; ++m) {
        MultiPoly s = R.zero();
        for (std::size_t i = 1; i <= m; ++i) {
            const MultiPoly t = e[m - i] * p[i];
            if (i % 2) s += t;
            else s -= t;
        }
        e[m] = Scalar::rational(1, static_cast<long>(m)) * s;
    }
    return e;
}

inline Total total_chern(const ChernRing& R, const BundleExpr& b) {
    using K = BundleExpr::Kind;
    switch (b.kind()) {
    case K::SubDual: {
        Total t;
        for (int i = 0; i <= R.k; ++i) t.push_back(R.u(i));
        return t;
    }
    case K::Quotient: {
        Total t;
        for (int j = 0; j <= R.n - R.k; ++j) t.push_back(R.q(j));
        return t;
    }
    case K::Line: return {R.one(), Scalar(b.t()) * R.h()};
    case K::Dual: {
        Total t = total_chern(R, b.children().front());
        for (std::size_t i = 1; i < t.size(); i += 2) t[i] = Scalar(-1) * t[i];
        return t;
    }
    case K::Sum: {
        Total t{R.one()};
        for (const auto& c : b.children()) t = multiply_total(R, t, total_chern(R, c));
        return t;
    }
    case K::Twist: {
        const Total c = total_chern(R, b.children().front());
        const long r = static_cast<long>(c.size()) - 1;
        const MultiPoly l = Scalar(b.t()) * R.h();
        Total t(c.size(), R.zero());
        for (long kk = 0; kk <= r; ++kk)
            for (long i = 0; i <= kk; ++i)
                t[static_cast<std::size_t>(kk)] +=
                    Scalar(mpz_class(binom(r - i, kk - i))) * c[static_cast<std::size_t>(i)] *
                    l.pow(static_cast<unsigned>(kk - i));
        return t;
    }
    case K::Wedge2: {
        const Total c = total_chern(R, b.children().front());
        const std::size_t r = c.size() - 1;
        const std::size_t r2 = r * (r - 1) / 2;
        const Total p = power_sums(R, c, r2);
        // Roots x_i + x_j (i < j): P_m = (sum_a C(m,a) p_a p_{m-a} - 2^m p_m) / 2.
        Total P(r2 + 1, R.zero());
        P[0] = Scalar(static_cast<int>(r2)) * R.one();
        for (std::size_t m = 1; m <= r2; ++m) {
            MultiPoly s = R.zero();
            for (std::size_t a = 0; a <= m; ++a)
                s += Scalar(mpz_class(binom(static_cast<long>(m), static_cast<long>(a)))) * (p[a] * p[m - a]);
            mpz_class two_m = 1;
            two_m <<= static_cast<mp_bitcnt_t>(m);
            s -= Scalar(two_m) * p[m];
            P[m] = Scalar::rational(1, 2) * s;
        }
        return elementary_from_power(R, P, r2);
    }
    }
    throw std::logic_error("unknown bundle constructor");
}

} // namespace detail

/// c_0 .. c_rank of the bundle as polynomials in h, u_i, q_j.
inline std::vector<MultiPoly> chern_polynomials(const BundleExpr& b, int k, int n) {
    const ChernRing R{k, n};
    auto t = detail::total_chern(R, b);
    t.resize(static_cast<std::size_t>(b.rank(k, n)) + 1, R.zero());
    return t;
}

/// Evaluates a Chern polynomial in the Chow ring of Gr(k, n).
/// Coefficients must be integers.
inline SchurClass evaluate(const MultiPoly& poly, int k, int n) {
    if (poly.nvars() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("polynomial ring mismatch");
    SchurClass result(k, n);
    std::map<std::pair<std::size_t, std::uint32_t>, SchurClass> powers;
    auto generator = [&](std::size_t var) {
        if (var == 0) return SchurClass::sigma(k, n, {1});
        if (var <= static_cast<std::size_t>(k)) return SchurClass::elementary(k, n, static_cast<int>(var));
        return SchurClass::special(k, n, static_cast<int>(var) - k);
    };
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const SchurClass& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, power(generator(var), e)).first;
        return it->second;
    };
    for (const auto& [exp, c] : poly.terms()) {
        const mpq_class& q = c.rational_value();
        if (q.get_den() != 1) throw std::domain_error("non-integral Chern polynomial coefficient");
        SchurClass t = SchurClass::unit(k, n);
        for (std::size_t v = 0; v < exp.size() && !t.is_zero(); ++v)
            if (exp[v]) t = t * power_of(v, exp[v]);
        result += q.get_num() * t;
    }
    return result;
}

inline std::vector<SchurClass> chern_classes(const BundleExpr& b, int k, int n) {
    std::vector<SchurClass> out;
    for (const auto& p : chern_polynomials(b, k, n)) out.push_back(evaluate(p, k, n));
    return out;
}

/// Ambient Grassmannian and E_0 of the Mukai model in genus 8, 9, 10, 12.
struct DegreeModel {
    int genus;
    int k;
    int n;
    int n_g;
    BundleExpr e0;
};

inline bool has_degree_model(int g) { return g == 8 || g == 9 || g == 10 || g == 12; }

inline DegreeModel degree_model(int g) {
    using B = BundleExpr;
    switch (g) {
    case 8: return {8, 2, 6, 8, B::sum({})};
    case 9: return {9, 3, 6, 6, B::wedge2(B::sub_dual())};
    case 10: return {10, 2, 7, 5, B::twist(B::dual(B::quotient()), 1)};
    case 12: return {12, 3, 7, 3, B::copies(B::wedge2(B::sub_dual()), 3)};
    default: throw std::invalid_argument("no Mukai degree model in genus " + std::to_string(g));
    }
}

/// E = O(1)^(n_g - 2) + E_0, whose top Chern class is the class of the model.
inline BundleExpr full_bundle(const DegreeModel& m) {
    return BundleExpr::sum({BundleExpr::copies(BundleExpr::line(1), m.n_g - 2), m.e0});
}

/// Degree of c_top(E_0) * sigma_1^(n_g) on the ambient Grassmannian.
inline mpz_class mukai_degree(int g) {
    const DegreeModel m = degree_model(g);
    const auto c = chern_classes(m.e0, m.k, m.n);
    const SchurClass h = SchurClass::sigma(m.k, m.n, {1});
    return grassmannian_integral(c.back() * power(h, static_cast<unsigned>(m.n_g)));
}

/// The same degree through E: c_{g-2}(E) * sigma_1^2.
inline mpz_class mukai_degree_via_full_bundle(int g) {
    const DegreeModel m = degree_model(g);
    const auto c = chern_classes(full_bundle(m), m.k, m.n);
    const SchurClass h = SchurClass::sigma(m.k, m.n, {1});
    return grassmannian_integral(c.back() * h * h);
}

} // namespace mukai::schur
