#pragma once

// Exterior algebra of a based vector space of dimension n <= 16.
//
// A MultiVector of degree k is a combination of basis elements e_S, where S
// is a k-subset of {0, ..., n-1} stored as a bitmask. The same type is used
// for forms (elements of the exterior algebra of the dual space); the module
// never needs to distinguish the two beyond naming.

#include "mukai/matrix.hpp"
#include "mukai/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace mukai::exterior {

using Mask = std::uint32_t;

inline constexpr std::size_t max_dimension = 16;

namespace detail {

// Sign of e_a ^ e_b relative to e_{a|b}: (-1)^(#pairs i in a, j in b, i > j).
inline int shuffle_sign(Mask a, Mask b) {
    unsigned inversions = 0;
    while (b) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(b));
        inversions += static_cast<unsigned>(std::popcount(a >> (j + 1)));
        b &= b - 1;
    }
    return (inversions & 1u) ? -1 : 1;
}

inline void enumerate_subsets(std::size_t n, std::size_t k, std::vector<Mask>& out) {
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
}

} // namespace detail

/// All k-subsets of {0..n-1} as masks, ordered by increasing mask value
/// (colexicographic order).
inline std::vector<Mask> subsets(std::size_t n, std::size_t k) {
    std::vector<Mask> out;
    detail::enumerate_subsets(n, k, out);
    return out;
}

/// The subsets of subsets(n, k) in lexicographic order of their sorted
/// index lists (e.g. {0,1}, {0,2}, ..., {n-2,n-1}).
inline std::vector<Mask> lex_subsets(std::size_t n, std::size_t k) {
    auto out = subsets(n, k);
    auto key = [](Mask m) {
        std::vector<unsigned> idx;
        for (Mask t = m; t; t &= t - 1) idx.push_back(static_cast<unsigned>(std::countr_zero(t)));
        return idx;
    };
    std::sort(out.begin(), out.end(), [&](Mask a, Mask b) { return key(a) < key(b); });
    return out;
}

class MultiVector {
public:
    using Terms = std::map<Mask, Scalar>;

    MultiVector(std::size_t n, std::size_t degree, Field field = Field::rationals())
        : n_(n), degree_(degree), field_(field) {
        if (n > max_dimension) throw std::invalid_argument("ambient dimension above 16");
        if (degree > n) throw std::invalid_argument("degree exceeds ambient dimension");
    }

    /// e_{i_1} ^ ... ^ e_{i_k} for 0-based indices in the given order.
    static MultiVector basis(std::size_t n, std::initializer_list<unsigned> indices, Field f = Field::rationals()) {
        return basis(n, std::vector<unsigned>(indices), f);
    }

    static MultiVector basis(std::size_t n, const std::vector<unsigned>& indices, Field f = Field::rationals()) {
        MultiVector r(n, 0, f);
        r.terms_.emplace(0, Scalar::one(f));
        for (unsigned i : indices) {
            if (i >= n) throw std::invalid_argument("basis index out of range");
            MultiVector e(n, 1, f);
            e.terms_.emplace(Mask{1} << i, Scalar::one(f));
            r = r.wedge(e);
        }
        return r;
    }

    static MultiVector from_vector(std::span<const Scalar> v, Field f) {
        MultiVector r(v.size(), 1, f);
        for (std::size_t i = 0; i < v.size(); ++i) r.add(Mask{1} << i, v[i]);
        return r;
    }

    /// Two-form sum_{i<j} A_ij e_i ^ e_j of a skew-symmetric matrix.
    static MultiVector from_skew_matrix(const Matrix& a) {
        if (!a.is_skew_symmetric()) throw std::invalid_argument("matrix is not skew-symmetric");
        MultiVector r(a.rows(), 2, a.field());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = i + 1; j < a.cols(); ++j) r.add((Mask{1} << i) | (Mask{1} << j), a(i, j));
        return r;
    }

    std::size_t dimension() const { return n_; }
    std::size_t degree() const { return degree_; }
    Field field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    void add(Mask m, const Scalar& c) {
        if (static_cast<std::size_t>(std::popcount(m)) != degree_ || (m >> n_) != 0)
            throw std::invalid_argument("index set does not match degree/dimension");
        require_same_field(field_, c.field());
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// Coordinates in the order of lex_subsets(n, degree).
    Vector coordinates() const {
        Vector v;
        for (Mask m : lex_subsets(n_, degree_)) v.push_back(coefficient(m));
        return v;
    }

    MultiVector to_field(Field f) const {
        MultiVector r(n_, degree_, f);
        for (const auto& [m, c] : terms_) r.add(m, c.to_field(f));
        return r;
    }

    /// Wedge product with the shuffle sign; k + l must not exceed n.
    MultiVector wedge(const MultiVector& o) const {
        check_compatible(o);
        if (degree_ + o.degree_ > n_) throw std::invalid_argument("wedge degree exceeds ambient dimension");
        MultiVector r(n_, degree_ + o.degree_, field_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                if (ma & mb) continue;
                const Scalar c = ca * cb;
                r.add(ma | mb, detail::shuffle_sign(ma, mb) > 0 ? c : -c);
            }
        return r;
    }

    MultiVector& operator+=(const MultiVector& o) {
        check_compatible(o);
        if (degree_ != o.degree_) throw std::invalid_argument("adding multivectors of different degree");
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    MultiVector& operator-=(const MultiVector& o) { return *this += (-Scalar::one(field_)) * o; }
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }

    friend MultiVector operator*(const Scalar& s, const MultiVector& a) {
        MultiVector r(a.n_, a.degree_, a.field_);
        for (const auto& [m, c] : a.terms_) r.add(m, s * c);
        return r;
    }

    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiVector& w) {
        if (w.terms_.empty()) return os << '0';
        bool first = true;
        for (const auto& [m, c] : w.terms_) {
            os << (first ? "" : " + ") << c << "*e{";
            first = false;
            bool f2 = true;
            for (Mask t = m; t; t &= t - 1) {
                os << (f2 ? "" : ",") << std::countr_zero(t) + 1;
                f2 = false;
            }
            os << '}';
        }
        return os;
    }

private:
    void check_compatible(const MultiVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ambient dimension mismatch");
        require_same_field(field_, o.field_);
    }

    std::size_t n_;
    std::size_t degree_;
    Field field_;
    Terms terms_;
};

inline MultiVector wedge(const MultiVector& a, const MultiVector& b) { return a.wedge(b); }

/// Interior product with the basis vector e_i: e_S -> (-1)^{#(S below i)} e_{S - i}.
inline MultiVector contract_basis(std::size_t i, const MultiVector& w) {
    if (w.degree() == 0) throw std::invalid_argument("cannot contract a degree-0 element");
    MultiVector r(w.dimension(), w.degree() - 1, w.field());
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : w.terms()) {
        if (!(m & bit)) continue;
        const bool odd = std::popcount(m & (bit - 1)) & 1;
        r.add(m & ~bit, odd ? -c : c);
    }
    return r;
}

/// Interior product: a graded derivation of the wedge product.
inline MultiVector contract(std::span<const Scalar> v, const MultiVector& w) {
    if (v.size() != w.dimension()) throw std::invalid_argument("vector length does not match ambient dimension");
    if (w.degree() == 0) throw std::invalid_argument("cannot contract a degree-0 element");
    MultiVector r(w.dimension(), w.degree() - 1, w.field());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r += v[i] * contract_basis(i, w);
    return r;
}

inline Matrix skew_matrix(const MultiVector& sigma) {
    if (sigma.degree() != 2) throw std::invalid_argument("not a 2-form");
    const std::size_t n = sigma.dimension();
    Matrix a(n, n, sigma.field());
    for (const auto& [m, c] : sigma.terms()) {
        const auto i = static_cast<std::size_t>(std::countr_zero(m));
        const auto j = static_cast<std::size_t>(31 - std::countl_zero(m));
        a.set(i, j, c);
        a.set(j, i, -c);
    }
    return a;
}

inline std::size_t two_form_rank(const MultiVector& sigma) { return rank(skew_matrix(sigma)); }

/// Matrix of v -> contract(v, w), columns indexed by basis vectors, rows by
/// lex_subsets(n, deg w - 1).
inline Matrix contraction_matrix(const MultiVector& w) {
    const auto rows = lex_subsets(w.dimension(), w.degree() - 1);
    Matrix m(rows.size(), w.dimension(), w.field());
    for (std::size_t i = 0; i < w.dimension(); ++i) {
        const MultiVector c = contract_basis(i, w);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Scalar x = c.coefficient(rows[r]);
            if (!x.is_zero()) m.set(r, i, std::move(x));
        }
    }
    return m;
}

/// True iff w = f_1 ^ ... ^ f_r, decided by the contraction map having rank r.
inline bool is_decomposable(const MultiVector& w) {
    if (w.is_zero()) throw std::invalid_argument("decomposability of the zero form is undefined");
    if (w.degree() <= 1) return true;
    return rank(contraction_matrix(w)) == w.degree();
}

/// Dimension of the GL(7)-orbit of a 3-form: rank of the infinitesimal action
/// X -> X.sigma of gl_7 (the derivation replacing e_a by e_b, for all a, b).
/// A 3-form lies in the open orbit iff the result is 35.
inline std::size_t three_form_orbit_dim(const MultiVector& sigma) {
    if (sigma.dimension() != 7) throw std::invalid_argument("orbit dimension needs ambient dimension 7");
    if (sigma.degree() != 3) throw std::invalid_argument("not a 3-form");
    const auto rows = lex_subsets(7, 3);
    std::map<Mask, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    Matrix m(rows.size(), 49, sigma.field());
    for (unsigned a = 0; a < 7; ++a)
        for (unsigned b = 0; b < 7; ++b) {
            const std::size_t col = a * 7 + b;
            const Mask ba = Mask{1} << a;
            const Mask bb = Mask{1} << b;
            for (const auto& [mask, c] : sigma.terms()) {
                if (!(mask & ba)) continue;
                if (a == b) {
                    m.add_to(row_of.at(mask), col, c);
                    continue;
                }
                if (mask & bb) continue;
                // e_a at its position replaced by e_b, then re-sorted.
                const Mask rest = mask & ~ba;
                const int s1 = (std::popcount(rest & (ba - 1)) & 1) ? -1 : 1;
                const int s2 = (std::popcount(rest & (bb - 1)) & 1) ? -1 : 1;
                m.add_to(row_of.at(rest | bb), col, s1 * s2 > 0 ? c : -c);
            }
        }
    return rank(m);
}

/// Image of w under the linear map sending e_i to column i of g.
inline MultiVector transform(const Matrix& g, const MultiVector& w) {
    const std::size_t n = w.dimension();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("transform needs an n x n matrix");
    require_same_field(g.field(), w.field());
    std::vector<MultiVector> images;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector col = g.column(i);
        images.push_back(MultiVector::from_vector(col, w.field()));
    }
    MultiVector r(n, w.degree(), w.field());
    for (const auto& [m, c] : w.terms()) {
        MultiVector t = MultiVector::basis(n, {}, w.field());
        for (Mask s = m; s; s &= s - 1) t = t.wedge(images[static_cast<std::size_t>(std::countr_zero(s))]);
        r += c * t;
    }
    return r;
}

/// The vector v with contract(v, e_1 ^ ... ^ e_n) = w, for w of degree n - 1.
/// Since contract(e_i, vol) = (-1)^i e_{[n] - i} (0-based i), v_i = (-1)^i w_{[n] - i}.
/// This is the single identification of the codimension-one exterior power
/// with the space itself used across the library.
inline Vector volume_dual(const MultiVector& w) {
    const std::size_t n = w.dimension();
    if (w.degree() + 1 != n) throw std::invalid_argument("volume_dual needs degree n - 1");
    const Mask full = (Mask{1} << n) - 1;
    Vector v;
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar c = w.coefficient(full & ~(Mask{1} << i));
        v.push_back(i % 2 ? -c : c);
    }
    return v;
}

/// A linear subspace given by a full-rank basis matrix (one basis vector per row).
class Subspace {
public:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
        if (rank(basis_) != basis_.rows()) throw std::invalid_argument("subspace basis is rank-deficient");
    }

    std::size_t ambient_dimension() const { return basis_.cols(); }
    std::size_t dimension() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Field field() const { return basis_.field(); }

private:
    Matrix basis_;
};

/// Plucker coordinates: the wedge of the basis rows.
inline MultiVector plucker(const Subspace& u) {
    const std::size_t n = u.ambient_dimension();
    MultiVector r = MultiVector::basis(n, {}, u.field());
    for (std::size_t i = 0; i < u.dimension(); ++i) {
        const Vector row = u.basis().row(i);
        r = r.wedge(MultiVector::from_vector(row, u.field()));
    }
    return r;
}

} // namespace mukai::exterior
