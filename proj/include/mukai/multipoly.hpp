#pragma once

// Sparse multivariate polynomials with exact coefficients, plus the graded
// multiplication map used to certify that homogeneous forms have no common
// projective zero.

#include "mukai/matrix.hpp"
#include "mukai/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable largest.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da < db;
        return a < b;
    }
};

/// All exponent vectors of total degree d in n variables, in ascending grlex
/// order (so x_1^d comes last).
inline std::vector<Exponent> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Exponent> out;
    Exponent e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (nvars == 0) {
            if (left == 0) out.push_back(e);
            return;
        }
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

class MultiPoly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars, Field field = Field::rationals()) : nvars_(nvars), field_(field) {}

    static MultiPoly constant(std::size_t nvars, const Scalar& c) {
        MultiPoly p(nvars, c.field());
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t nvars, std::size_t i, Field f = Field::rationals()) {
        MultiPoly p(nvars, f);
        Exponent e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, Scalar::one(f));
        return p;
    }

    static MultiPoly monomial(const Exponent& e, const Scalar& c) {
        MultiPoly p(e.size(), c.field());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    Field field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Scalar& c) {
        if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
        require_same_field(field_, c.field());
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Scalar coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        const auto& e = terms_.rbegin()->first;
        return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = degree();
        for (const auto& [e, c] : terms_)
            if (static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0})) != d) return false;
        return true;
    }

    MultiPoly to_field(Field f) const {
        MultiPoly p(nvars_, f);
        for (const auto& [e, c] : terms_) p.add_term(e, c.to_field(f));
        return p;
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
        Scalar sum = Scalar::zero(field_);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
            sum += t;
        }
        return sum;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly p(a.nvars_, a.field_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    friend MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
        MultiPoly p(a.nvars_, a.field_);
        for (const auto& [e, c] : a.terms_) p.add_term(e, s * c);
        return p;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(nvars_, Scalar::one(field_));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << " + ";
            first = false;
            os << c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << '*' << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
                if (e[i] > 1) os << '^' << e[i];
            }
        }
        return os.str();
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials in different numbers of variables");
        require_same_field(field_, o.field_);
    }

    std::size_t nvars_ = 0;
    Field field_{};
    Terms terms_;
};

/// Matrix of (q_1, ..., q_m) -> sum q_i g_i from the direct sum of degree
/// D - d pieces onto the degree-D piece, in grlex monomial bases. Rows index
/// degree-D monomials; columns index pairs (generator, multiplier monomial).
/// Surjectivity (rank = number of rows) shows the g_i have no common zero in
/// projective space over the algebraic closure.
inline Matrix graded_multiplication_map(const std::vector<MultiPoly>& generators, std::uint32_t target_degree) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = generators.front().nvars();
    const Field f = generators.front().field();
    std::optional<int> d;
    for (const auto& g : generators) {
        if (g.nvars() != n) throw std::invalid_argument("generators in different numbers of variables");
        require_same_field(f, g.field());
        if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator");
        if (g.is_zero()) continue;
        if (d && *d != g.degree()) throw std::invalid_argument("generators of unequal degree");
        d = g.degree();
    }
    const std::uint32_t gd = d ? static_cast<std::uint32_t>(*d) : 0;
    if (gd > target_degree) throw std::invalid_argument("target degree below generator degree");

    const auto targets = monomials_of_degree(n, target_degree);
    std::map<Exponent, std::size_t, GrlexLess> row_of;
    for (std::size_t i = 0; i < targets.size(); ++i) row_of.emplace(targets[i], i);
    const auto multipliers = monomials_of_degree(n, target_degree - gd);

    Matrix m(targets.size(), generators.size() * multipliers.size(), f);
    std::size_t col = 0;
    Exponent e(n);
    for (const auto& g : generators)
        for (const auto& mono : multipliers) {
            for (const auto& [ge, c] : g.terms()) {
                for (std::size_t i = 0; i < n; ++i) e[i] = ge[i] + mono[i];
                m.add_to(row_of.at(e), col, c);
            }
            ++col;
        }
    return m;
}

/// Smallest D in [min_degree, max_degree] at which the graded multiplication
/// map is surjective, if any.
inline std::optional<std::uint32_t> nullstellensatz_degree(const std::vector<MultiPoly>& generators,
                                                           std::uint32_t min_degree, std::uint32_t max_degree) {
    for (std::uint32_t D = min_degree; D <= max_degree; ++D) {
        const Matrix m = graded_multiplication_map(generators, D);
        if (rank(m) == m.rows()) return D;
    }
    return std::nullopt;
}

} // namespace mukai
