#pragma once

// Schubert calculus on the Grassmannian Gr(k, n) of k-dimensional subspaces.
//
// A SchurClass is an integer combination of Schubert classes sigma_lambda,
// lambda inside the k x (n-k) box. sigma_i (one row) is c_i of the
// universal quotient bundle and sigma_{1^i} (one column) is c_i of the dual
// of the tautological subbundle.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::schur {

using Partition = std::vector<int>;

/// Drops trailing zeros; throws unless the entries are weakly decreasing and nonnegative.
inline Partition normalize(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i && p[i] > p[i - 1]) throw std::invalid_argument("partition is not weakly decreasing");
    }
    return p;
}

inline int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition conjugate(const Partition& p) {
    Partition c(p.empty() ? 0 : static_cast<std::size_t>(p.front()), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

inline bool fits(const Partition& p, int rows, int cols) {
    return static_cast<int>(p.size()) <= rows && (p.empty() || p.front() <= cols);
}

inline std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

/// Number of standard Young tableaux of shape p, by the hook length formula.
inline mpz_class syt_count(const Partition& p0) {
    const Partition p = normalize(p0);
    const Partition c = conjugate(p);
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(size(p)));
    mpz_class den = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            const int hook = p[i] - j + c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            den *= hook;
        }
    return num / den;
}

/// All partitions fitting in the rows x cols box, of any size.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int v = 1; v <= max_part; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    return out;
}

/// Partitions of m with at most `rows` parts, each at most `cols`.
inline std::vector<Partition> partitions_of(int m, int rows, int cols) {
    std::vector<Partition> out;
    for (auto& p : partitions_in_box(rows, cols))
        if (size(p) == m) out.push_back(p);
    return out;
}

class SchurClass {
public:
    using Terms = std::map<Partition, mpz_class>;

    SchurClass(int k, int n) : k_(k), n_(n) {
        if (k < 0 || n < k) throw std::invalid_argument("Grassmannian needs 0 <= k <= n");
    }

    static SchurClass unit(int k, int n) { return sigma(k, n, {}); }

    static SchurClass sigma(int k, int n, const Partition& p, const mpz_class& c = 1) {
        SchurClass s(k, n);
        s.add(normalize(p), c);
        return s;
    }

    /// sigma_i = c_i(V/U); zero outside the box.
    static SchurClass special(int k, int n, int i) {
        return i == 0 ? unit(k, n) : sigma(k, n, {i});
    }

    /// sigma_{1^i} = c_i(U^dual); zero outside the box.
    static SchurClass elementary(int k, int n, int i) { return sigma(k, n, Partition(static_cast<std::size_t>(i), 1)); }

    int k() const { return k_; }
    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * sigma_p, discarding p if it leaves the box.
    void add(const Partition& p, const mpz_class& c) {
        if (sgn(c) == 0 || !fits(p, k_, n_ - k_)) return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (inserted) return;
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }

    mpz_class coefficient(const Partition& p) const {
        auto it = terms_.find(normalize(p));
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    SchurClass& operator+=(const SchurClass& o) {
        check(o);
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    SchurClass& operator-=(const SchurClass& o) {
        check(o);
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    friend SchurClass operator+(SchurClass a, const SchurClass& b) { return a += b; }
    friend SchurClass operator-(SchurClass a, const SchurClass& b) { return a -= b; }
    friend SchurClass operator*(const mpz_class& s, const SchurClass& a) {
        SchurClass r(a.k_, a.n_);
        for (const auto& [p, c] : a.terms_) r.add(p, s * c);
        return r;
    }

    friend bool operator==(const SchurClass& a, const SchurClass& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const SchurClass& s) {
        if (s.terms_.empty()) return os << '0';
        bool first = true;
        for (const auto& [p, c] : s.terms_) {
            os << (first ? "" : " + ") << c << "*s" << to_string(p);
            first = false;
        }
        return os;
    }

    void check(const SchurClass& o) const {
        if (k_ != o.k_ || n_ != o.n_) throw std::invalid_argument("Schubert classes on different Grassmannians");
    }

private:
    int k_;
    int n_;
    Terms terms_;
};

namespace detail {

// All mu obtained from p by adding m boxes, no two in the same column
// (horizontal strip) or, with vertical = true, no two in the same row.
inline void strips(const Partition& p, int m, bool vertical, int max_rows, int max_cols,
                   std::vector<Partition>& out) {
    if (vertical) {
        // A vertical strip on p is a horizontal strip on the conjugate.
        std::vector<Partition> conj;
        strips(conjugate(p), m, false, max_cols, max_rows, conj);
        for (auto& c : conj) out.push_back(conjugate(c));
        return;
    }
    const std::size_t rows = std::min<std::size_t>(p.size() + 1, static_cast<std::size_t>(max_rows));
    Partition mu(rows, 0);
    for (std::size_t i = 0; i < p.size() && i < rows; ++i) mu[i] = p[i];
    if (p.size() > rows) return;
    // Row i may grow up to p[i-1] (interlacing) and within the column bound.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == rows) {
            if (left == 0) out.push_back(normalize(mu));
            return;
        }
        const int base = i < p.size() ? p[i] : 0;
        const int cap = std::min(i == 0 ? max_cols : p[i - 1], max_cols);
        for (int add = 0; add <= left && base + add <= cap; ++add) {
            mu[i] = base + add;
            self(self, i + 1, left - add);
        }
        mu[i] = base;
    };
    rec(rec, 0, m);
}

} // namespace detail

/// Pieri rule: sigma_i * a (horizontal strips).
inline SchurClass pieri_row(int i, const SchurClass& a) {
    SchurClass r(a.k(), a.n());
    if (i < 0) return r;
    for (const auto& [p, c] : a.terms()) {
        std::vector<Partition> out;
        detail::strips(p, i, false, a.k(), a.n() - a.k(), out);
        for (const auto& mu : out) r.add(mu, c);
    }
    return r;
}

/// Dual Pieri rule: sigma_{1^i} * a (vertical strips).
inline SchurClass pieri_column(int i, const SchurClass& a) {
    SchurClass r(a.k(), a.n());
    if (i < 0) return r;
    for (const auto& [p, c] : a.terms()) {
        std::vector<Partition> out;
        detail::strips(p, i, true, a.k(), a.n() - a.k(), out);
        for (const auto& mu : out) r.add(mu, c);
    }
    return r;
}

/// sigma_lambda * a through the dual Jacobi-Trudi determinant
/// s_lambda = det(e_{lambda'_i - i + j}), each e_m acting by the column Pieri rule.
/// Truncation to the box happens after every Pieri step; this is compatible
/// with the ring structure because classes outside the box span an ideal.
inline SchurClass multiply_by_sigma(const Partition& lambda, const SchurClass& a) {
    const Partition lc = conjugate(normalize(lambda));
    const std::size_t l = lc.size();
    SchurClass result(a.k(), a.n());
    if (l == 0) return a;
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        SchurClass t = a;
        for (std::size_t i = 0; i < l && !t.is_zero(); ++i) {
            const int m = lc[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
            if (m < 0) {
                t = SchurClass(a.k(), a.n());
                break;
            }
            if (m > 0) t = pieri_column(m, t);
        }
        if (inversions % 2) result -= t;
        else result += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

inline SchurClass schur_multiply(const SchurClass& a, const SchurClass& b) {
    a.check(b);
    SchurClass r(a.k(), a.n());
    for (const auto& [p, c] : b.terms()) r += c * multiply_by_sigma(p, a);
    return r;
}

inline SchurClass operator*(const SchurClass& a, const SchurClass& b) { return schur_multiply(a, b); }

inline SchurClass power(const SchurClass& a, unsigned e) {
    SchurClass r = SchurClass::unit(a.k(), a.n());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

/// Coefficient of the point class (n-k)^k.
inline mpz_class grassmannian_integral(const SchurClass& c) {
    return c.coefficient(Partition(static_cast<std::size_t>(c.k()), c.n() - c.k()));
}

/// Image under Gr(k, n) = Gr(n-k, n), which conjugates every partition.
inline SchurClass transpose(const SchurClass& c) {
    SchurClass r(c.n() - c.k(), c.n());
    for (const auto& [p, coeff] : c.terms()) r.add(conjugate(p), coeff);
    return r;
}

} // namespace mukai::schur
