#pragma once

// Borel-Bott-Weil for GL(n)-equivariant bundles on Gr(r, n).
//
// Weight convention: a weight is (a_1 >= ... >= a_r | b_1 >= ... >= b_{n-r}).
// U^dual has weight (1, 0, ..., 0 | 0, ..., 0), O(1) = det U^dual is
// (1, ..., 1 | 0, ..., 0), V/U is (0, ..., 0 | 0, ..., 0, -1), and
// S^lambda U^dual (t) is (lambda + t | 0). The canonical bundle is O(-n).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::bbw {

using Weight = std::vector<int>;

class GLWeight {
public:
    GLWeight(int r, Weight entries) : r_(r), w_(std::move(entries)) {
        const int n = static_cast<int>(w_.size());
        if (r < 0 || r > n) throw std::invalid_argument("block size out of range");
        for (int i = 1; i < n; ++i)
            if (i != r && w_[static_cast<std::size_t>(i)] > w_[static_cast<std::size_t>(i - 1)])
                throw std::invalid_argument("weight is not nonincreasing within blocks");
    }

    /// S^lambda U^dual (t) on Gr(r, n); lambda may have fewer than r parts.
    static GLWeight schur_sub_dual(int r, int n, const std::vector<int>& lambda, int t) {
        if (static_cast<int>(lambda.size()) > r) throw std::invalid_argument("partition longer than rank");
        Weight w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < r; ++i)
            w[static_cast<std::size_t>(i)] = (i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0) + t;
        return GLWeight(r, w);
    }

    int n() const { return static_cast<int>(w_.size()); }
    int r() const { return r_; }
    const Weight& entries() const { return w_; }

    GLWeight twisted(int t) const {
        Weight w = w_;
        for (int i = 0; i < r_; ++i) w[static_cast<std::size_t>(i)] += t;
        return GLWeight(r_, w);
    }

    /// Weight of the dual bundle: negate and reverse within each block.
    GLWeight dual() const {
        Weight w(w_.size());
        const auto r = static_cast<std::size_t>(r_);
        for (std::size_t i = 0; i < r; ++i) w[i] = -w_[r - 1 - i];
        for (std::size_t i = r; i < w_.size(); ++i) w[i] = -w_[w_.size() - 1 - (i - r)];
        return GLWeight(r_, w);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (i) os << (static_cast<int>(i) == r_ ? " | " : ",");
            os << w_[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const GLWeight&, const GLWeight&) = default;

private:
    int r_;
    Weight w_;
};

/// Weyl dimension formula prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
inline mpz_class weyl_dim(const Weight& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i] > mu[i - 1]) throw std::invalid_argument("weight is not dominant");
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j) {
            num *= mu[i] - mu[j] + static_cast<int>(j - i);
            den *= static_cast<int>(j - i);
        }
    return num / den;
}

struct Cohomology {
    int degree;
    Weight highest_weight;
    mpz_class dimension;
};

/// The unique nonzero cohomology group of the bundle, if any.
inline std::optional<Cohomology> bbw_cohomology(const GLWeight& w) {
    const int n = w.n();
    Weight mu = w.entries();
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] += n - i;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int a = mu[static_cast<std::size_t>(i)];
            const int b = mu[static_cast<std::size_t>(j)];
            if (a == b) return std::nullopt;
            if (a < b) ++inversions;
        }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] -= n - i;
    mpz_class d = weyl_dim(mu);
    return Cohomology{inversions, std::move(mu), std::move(d)};
}

/// Serre dual weight: F -> F^dual (x) K on Gr(r, n).
inline GLWeight serre_dual(const GLWeight& w) { return w.dual().twisted(-w.n()); }

/// Ambient Grassmannian and E_0 data for the weight computations.
struct BbwModel {
    int genus;
    int r;
    int n;
    int n_g;
    int e0_rank;
};

inline bool has_bbw_model(int g) { return g == 8 || g == 9 || g == 10 || g == 12; }

inline BbwModel bbw_model(int g) {
    switch (g) {
    case 8: return {8, 2, 6, 8, 0};
    case 9: return {9, 3, 6, 6, 3};
    case 10: return {10, 2, 7, 5, 5};
    case 12: return {12, 3, 7, 3, 9};
    default: throw std::invalid_argument("no Borel-Bott-Weil model in genus " + std::to_string(g));
    }
}

struct Summand {
    GLWeight weight;
    mpz_class multiplicity;
};

/// Decomposition of Lambda^i E_0^dual into irreducible equivariant bundles.
///   g = 9:  E_0 = Lambda^2 U^dual on Gr(3,6); Lambda^i E_0^dual = Lambda^i U^dual (-i).
///   g = 10: E_0 = U^perp(1) on Gr(2,7); Lambda^i E_0^dual = Lambda^i (V/U) (-i).
///   g = 12: E_0 = Lambda^2 U^dual (x) k^3 on Gr(3,7); Cauchy formula
///           Lambda^i (U^dual (x) k^3) = sum_lambda S^lambda U^dual (x) S^lambda' k^3, twisted by -i.
///   g = 8:  E_0 = 0.
inline std::vector<Summand> exterior_power_summands(int g, int i) {
    const BbwModel m = bbw_model(g);
    if (i < 0 || i > m.e0_rank) throw std::invalid_argument("exterior power index out of range");
    std::vector<Summand> out;
    switch (g) {
    case 8: out.push_back({GLWeight::schur_sub_dual(m.r, m.n, {}, 0), 1}); break;
    case 9: out.push_back({GLWeight::schur_sub_dual(m.r, m.n, std::vector<int>(static_cast<std::size_t>(i), 1), -i), 1}); break;
    case 10: {
        Weight w(static_cast<std::size_t>(m.n), 0);
        for (int k = 0; k < m.r; ++k) w[static_cast<std::size_t>(k)] = -i;
        for (int k = 0; k < i; ++k) w[static_cast<std::size_t>(m.n - 1 - k)] = -1;
        out.push_back({GLWeight(m.r, w), 1});
        break;
    }
    case 12: {
        for (int a = 3; a >= 0; --a)
            for (int b = a; b >= 0; --b) {
                const int c = i - a - b;
                if (c < 0 || c > b) continue;
                std::vector<int> lambda{a, b, c};
                std::vector<int> conj(3, 0);
                for (int part : lambda)
                    for (int k = 0; k < part; ++k) ++conj[static_cast<std::size_t>(k)];
                out.push_back({GLWeight::schur_sub_dual(m.r, m.n, lambda, -i), weyl_dim(conj)});
            }
        break;
    }
    }
    return out;
}

struct TableEntry {
    int i;
    int j;
    int p;
    mpz_class dimension;
};

struct HiWeTable {
    int genus;
    int cells;                       // number of (i, j) pairs examined
    std::vector<TableEntry> nonzero;  // nonzero H^p, summed over summands
    bool matches;                    // exactly the two predicted one-dimensional entries
};

/// H^p(Gr, Lambda^i E_0^dual (-j)) for 0 <= i <= rank E_0, 0 <= j <= n_g - 2.
/// The prediction is H^0 = k at i = j = 0 and H^g = k at i = g - n_g, j = n_g - 2.
inline HiWeTable verify_hi_we(int g) {
    const BbwModel m = bbw_model(g);
    HiWeTable t{g, 0, {}, false};
    for (int i = 0; i <= m.e0_rank; ++i)
        for (int j = 0; j <= m.n_g - 2; ++j) {
            ++t.cells;
            std::vector<TableEntry> cell;
            for (const auto& s : exterior_power_summands(g, i)) {
                const auto c = bbw_cohomology(s.weight.twisted(-j));
                if (!c) continue;
                auto it = std::find_if(cell.begin(), cell.end(), [&](const TableEntry& e) { return e.p == c->degree; });
                if (it == cell.end()) cell.push_back({i, j, c->degree, s.multiplicity * c->dimension});
                else it->dimension += s.multiplicity * c->dimension;
            }
            std::sort(cell.begin(), cell.end(), [](const TableEntry& a, const TableEntry& b) { return a.p < b.p; });
            t.nonzero.insert(t.nonzero.end(), cell.begin(), cell.end());
        }
    const int i1 = g - m.n_g;
    const int j1 = m.n_g - 2;
    t.matches = t.nonzero.size() == 2 && t.nonzero[0].i == 0 && t.nonzero[0].j == 0 && t.nonzero[0].p == 0 &&
                t.nonzero[0].dimension == 1 && t.nonzero[1].i == i1 && t.nonzero[1].j == j1 &&
                t.nonzero[1].p == g && t.nonzero[1].dimension == 1;
    return t;
}

struct VanishingViolation {
    int q;
    int i;
    int p;
    mpz_class dimension;
};

struct VanishingResult {
    int genus;
    int summands_checked;
    std::vector<VanishingViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// H^p(Lambda^q E^dual) = 0 for 1 <= q <= g - 2 and p <= q, where
/// E = O(1)^(n_g - 2) + E_0 and
/// Lambda^q E^dual = sum_i Lambda^i E_0^dual (i - q)^(C(n_g - 2, q - i)).
inline VanishingResult verify_connectedness_vanishing(int g) {
    const BbwModel m = bbw_model(g);
    VanishingResult res{g, 0, {}};
    for (int q = 1; q <= g - 2; ++q)
        for (int i = 0; i <= std::min(q, m.e0_rank); ++i) {
            if (q - i > m.n_g - 2) continue;
            for (const auto& s : exterior_power_summands(g, i)) {
                ++res.summands_checked;
                const auto c = bbw_cohomology(s.weight.twisted(i - q));
                if (c && c->degree <= q) res.violations.push_back({q, i, c->degree, c->dimension});
            }
        }
    return res;
}

} // namespace mukai::bbw
