#pragma once

// Nets of skew forms on a 7-dimensional space V.
//
// A net is a triple of alternating 7 x 7 matrices s_1, s_2, s_3; a parameter
// a = (a_1, a_2, a_3) gives the form s(a) = a_1 s_1 + a_2 s_2 + a_3 s_3. The net
// is nondegenerate if s(a) has rank 6 for every nonzero a over the algebraic
// closure. kappa(a) = s(a) ^ s(a) ^ s(a), read as a vector through
// exterior::volume_dual, is nonzero exactly when rank s(a) = 6 and then spans
// its kernel.

#include "mukai/exterior.hpp"
#include "mukai/matrix.hpp"
#include "mukai/multipoly.hpp"
#include "mukai/scalar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::nets {

using exterior::Mask;
using exterior::MultiVector;
using exterior::Subspace;

using Parameter = std::array<Scalar, 3>;

class SkewNet {
public:
    /// Throws unless every form is a 7 x 7 alternating matrix over one field
    /// and, when `require_independent`, the three forms are linearly independent.
    explicit SkewNet(std::array<Matrix, 3> forms, bool require_independent = true) : forms_(std::move(forms)) {
        field_ = forms_[0].field();
        for (const auto& m : forms_) {
            if (m.rows() != 7 || m.cols() != 7) throw std::invalid_argument("net forms must be 7 x 7");
            require_same_field(field_, m.field());
            if (!m.is_skew_symmetric()) throw std::invalid_argument("net form is not skew-symmetric");
            for (std::size_t i = 0; i < 7; ++i)
                if (!m(i, i).is_zero()) throw std::invalid_argument("net form has a nonzero diagonal entry");
        }
        if (require_independent && !forms_independent())
            throw std::invalid_argument("net forms are linearly dependent");
    }

    Field field() const { return field_; }
    const std::array<Matrix, 3>& forms() const { return forms_; }
    const Matrix& form(std::size_t i) const { return forms_.at(i); }

    bool forms_independent() const {
        Matrix m(3, 21, field_);
        for (std::size_t f = 0; f < 3; ++f) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < 7; ++i)
                for (std::size_t j = i + 1; j < 7; ++j) m.set(f, c++, forms_[f](i, j));
        }
        return rank(m) == 3;
    }

    /// s(a) = sum a_i s_i.
    Matrix combination(const Parameter& a) const {
        Matrix m(7, 7, field_);
        for (std::size_t f = 0; f < 3; ++f) {
            require_same_field(field_, a[f].field());
            if (!a[f].is_zero()) m = m + a[f] * forms_[f];
        }
        return m;
    }

    /// Reduction to a prime field; throws if a denominator vanishes there.
    SkewNet to_field(Field f, bool require_independent = false) const {
        return SkewNet({forms_[0].to_field(f), forms_[1].to_field(f), forms_[2].to_field(f)}, require_independent);
    }

private:
    std::array<Matrix, 3> forms_;
    Field field_;
};

inline bool is_zero_parameter(const Parameter& a) {
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

inline Parameter parameter(long a1, long a2, long a3, Field f = Field::rationals()) {
    return {Scalar::from_int(a1, f), Scalar::from_int(a2, f), Scalar::from_int(a3, f)};
}

inline std::string to_string(const Parameter& a) {
    return "[" + a[0].to_string() + ":" + a[1].to_string() + ":" + a[2].to_string() + "]";
}

/// Divided power sigma^[k] = sigma^k / k! of a 2-form, computed over the
/// integers as a sum over k disjoint index pairs.
inline MultiVector divided_power(const MultiVector& sigma, std::size_t k) {
    if (sigma.degree() != 2) throw std::invalid_argument("divided power needs a 2-form");
    const std::size_t n = sigma.dimension();
    const Field f = sigma.field();
    if (2 * k > n) throw std::invalid_argument("divided power degree exceeds the dimension");
    MultiVector out(n, 2 * k, f);
    std::vector<std::pair<Mask, Scalar>> pairs;
    for (Mask m : exterior::subsets(n, 2)) {
        const Scalar c = sigma.coefficient(m);
        if (!c.is_zero()) pairs.emplace_back(m, c);
    }
    std::vector<unsigned> idx;
    auto rec = [&](auto&& self, std::size_t start, Mask used, const Scalar& coef) -> void {
        if (idx.size() == 2 * k) {
            out = out + coef * MultiVector::basis(n, idx, f);
            return;
        }
        for (std::size_t p = start; p < pairs.size(); ++p) {
            const Mask m = pairs[p].first;
            if (m & used) continue;
            const auto lo = static_cast<unsigned>(std::countr_zero(m));
            const auto hi = static_cast<unsigned>(31 - std::countl_zero(m));
            idx.push_back(lo);
            idx.push_back(hi);
            self(self, p + 1, used | m, coef * pairs[p].second);
            idx.pop_back();
            idx.pop_back();
        }
    };
    rec(rec, 0, 0, Scalar::one(f));
    return out;
}

/// kappa(a) in V: the divided cube s(a)^3 / 3! read through volume_dual. Its
/// coordinates are signed 6 x 6 Pfaffians, so it makes sense in every
/// characteristic; it is zero iff rank s(a) <= 4.
inline Vector kappa(const SkewNet& net, const Parameter& a) {
    if (is_zero_parameter(a)) throw std::invalid_argument("kappa needs a nonzero parameter");
    return exterior::volume_dual(divided_power(MultiVector::from_skew_matrix(net.combination(a)), 3));
}

/// The seven coordinate functions of kappa as cubics in (a_1, a_2, a_3):
/// (sum a_i s_i)^[3] = sum over |alpha| = 3 of a^alpha s_1^[alpha_1] s_2^[alpha_2] s_3^[alpha_3].
inline std::vector<MultiPoly> net_cubics(const SkewNet& net) {
    const Field f = net.field();
    std::vector<std::vector<MultiVector>> powers(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const MultiVector s = MultiVector::from_skew_matrix(net.form(i));
        for (std::size_t k = 0; k <= 3; ++k) powers[i].push_back(divided_power(s, k));
    }
    std::vector<MultiPoly> cubics(7, MultiPoly(3, f));
    for (const auto& e : monomials_of_degree(3, 3)) {
        const Vector v = exterior::volume_dual(powers[0][e[0]].wedge(powers[1][e[1]]).wedge(powers[2][e[2]]));
        for (std::size_t m = 0; m < 7; ++m)
            if (!v[m].is_zero()) cubics[m].add_term(e, v[m]);
    }
    return cubics;
}

/// 7 x 10 coefficient matrix of the cubics in the grlex basis of degree-3 monomials.
inline Matrix cubic_coefficient_matrix(const std::vector<MultiPoly>& cubics) {
    const auto monos = monomials_of_degree(3, 3);
    const Field f = cubics.empty() ? Field::rationals() : cubics.front().field();
    Matrix m(cubics.size(), monos.size(), f);
    for (std::size_t r = 0; r < cubics.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) m.set(r, c, cubics[r].coefficient(monos[c]));
    return m;
}

/// All points of P^2(F_q) as [1:a:b], [0:1:b], [0:0:1].
inline std::vector<Parameter> projective_plane_points(Field f) {
    if (f.is_rational()) throw std::invalid_argument("enumeration needs a prime field");
    const auto q = static_cast<long long>(f.modulus());
    std::vector<Parameter> pts;
    auto s = [&](long long v) { return Scalar::from_int(v, f); };
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) pts.push_back({s(1), s(a), s(b)});
    for (long long b = 0; b < q; ++b) pts.push_back({s(0), s(1), s(b)});
    pts.push_back({s(0), s(0), s(1)});
    return pts;
}

/// Primitive integer points of P^2 with coordinates in [-h, h], first
/// nonzero coordinate positive, ordered by height.
inline std::vector<Parameter> rational_points(long h) {
    std::vector<Parameter> pts;
    for (long height = 1; height <= h; ++height)
        for (long a = -height; a <= height; ++a)
            for (long b = -height; b <= height; ++b)
                for (long c = -height; c <= height; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != height) continue;
                    const long first = a != 0 ? a : b != 0 ? b : c;
                    if (first <= 0) continue;
                    if (std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)) != 1) continue;
                    pts.push_back(parameter(a, b, c));
                }
    return pts;
}

struct NondegeneracyCertificate {
    enum class Kind { NondegenerateOverClosure, DegenerateWitness, Undetermined };

    Kind kind = Kind::Undetermined;
    std::uint32_t degree = 0;         // certificate degree D
    std::uint64_t certified_mod = 0;  // prime the certificate was found over; 0 for the net's own field
    std::optional<Parameter> witness;
    std::size_t witness_rank = 0;
    std::uint32_t max_degree_tried = 0;
    std::size_t points_searched = 0;
};

inline std::string to_string(NondegeneracyCertificate::Kind k) {
    switch (k) {
    case NondegeneracyCertificate::Kind::NondegenerateOverClosure: return "NondegenerateOverClosure";
    case NondegeneracyCertificate::Kind::DegenerateWitness: return "DegenerateWitness";
    case NondegeneracyCertificate::Kind::Undetermined: return "Undetermined";
    }
    return "?";
}

struct NondegeneracyOptions {
    std::uint32_t max_degree = 8;
    std::vector<std::uint64_t> primes{101, 9973};
    long witness_height = 3;                 // rational nets
    std::uint64_t exhaustive_field_limit = 400;  // prime-field nets with q above this are sampled by lifts
};

namespace detail {

inline std::optional<std::uint32_t> certificate_degree(const SkewNet& net, std::uint32_t max_degree) {
    const auto cubics = net_cubics(net);
    if (std::all_of(cubics.begin(), cubics.end(), [](const MultiPoly& p) { return p.is_zero(); })) return std::nullopt;
    std::vector<MultiPoly> nonzero;
    for (const auto& c : cubics)
        if (!c.is_zero()) nonzero.push_back(c);
    return nullstellensatz_degree(nonzero, 3, max_degree);
}

} // namespace detail

/// Decides nondegeneracy where it can.
///
/// A degenerate witness is a parameter with rank s(a) <= 4. Nondegeneracy is
/// certified by surjectivity of the graded multiplication map of the seven
/// cubics in some degree D: then they have no common zero over the closure.
/// For rational nets the map may be checked modulo a prime p: its matrix has
/// p-integral entries, and a maximal minor that is nonzero mod p is nonzero
/// over Q, so surjectivity mod p implies surjectivity over Q.
inline NondegeneracyCertificate is_nondegenerate_net(const SkewNet& net, const NondegeneracyOptions& opt = {}) {
    using Kind = NondegeneracyCertificate::Kind;
    NondegeneracyCertificate cert;
    cert.max_degree_tried = opt.max_degree;

    auto try_witness = [&](const Parameter& a) {
        ++cert.points_searched;
        const std::size_t r = rank(net.combination(a));
        if (r < 6) {
            cert.kind = Kind::DegenerateWitness;
            cert.witness = a;
            cert.witness_rank = r;
            return true;
        }
        return false;
    };

    const Field f = net.field();
    if (f.is_rational()) {
        for (const auto& a : rational_points(opt.witness_height))
            if (try_witness(a)) return cert;
        for (std::uint64_t p : opt.primes) {
            const Field fp = Field::prime(p);
            std::optional<SkewNet> reduced;
            try {
                reduced = net.to_field(fp);
            } catch (const std::domain_error&) {
                continue;  // a denominator vanishes mod p
            }
            if (auto d = detail::certificate_degree(*reduced, opt.max_degree)) {
                cert.kind = Kind::NondegenerateOverClosure;
                cert.degree = *d;
                cert.certified_mod = p;
                return cert;
            }
        }
        if (auto d = detail::certificate_degree(net, opt.max_degree)) {
            cert.kind = Kind::NondegenerateOverClosure;
            cert.degree = *d;
            return cert;
        }
        return cert;
    }

    if (f.modulus() <= opt.exhaustive_field_limit) {
        for (const auto& a : projective_plane_points(f))
            if (try_witness(a)) return cert;
    } else {
        for (const auto& a : rational_points(opt.witness_height)) {
            Parameter r{a[0].to_field(f), a[1].to_field(f), a[2].to_field(f)};
            if (is_zero_parameter(r)) continue;
            if (try_witness(r)) return cert;
        }
    }
    if (auto d = detail::certificate_degree(net, opt.max_degree)) {
        cert.kind = Kind::NondegenerateOverClosure;
        cert.degree = *d;
    }
    return cert;
}

/// rank s(a) = 6 at every sample.
inline bool constant_rank_check(const SkewNet& net, const std::vector<Parameter>& samples) {
    return std::all_of(samples.begin(), samples.end(), [&](const Parameter& a) {
        if (is_zero_parameter(a)) throw std::invalid_argument("zero parameter in sample list");
        return rank(net.combination(a)) == 6;
    });
}

struct ConicData {
    Vector kernel_vector;       // v = kappa(a)
    std::size_t v5_dimension;   // dim {w : s_i(v, w) = 0 for all i}
    std::size_t annihilator_dimension;  // dim of the annihilator of the induced net in Lambda^2 (V5/v)
    std::size_t rank;           // rank of the Plucker quadric restricted to the annihilator
};

/// The conic cut out over kappa(a): with v = kappa(a) and V5 the common
/// orthogonal of v, the net descends to V5/kv (4-dimensional); the
/// Plucker quadric of Gr(2, V5/kv) restricted to the annihilator of the
/// induced net is a ternary form whose rank is returned (3: smooth conic).
inline ConicData conic_at(const SkewNet& net, const Parameter& a) {
    const Field f = net.field();
    if (!f.is_rational() && f.modulus() == 2) throw std::invalid_argument("conic rank is not defined in characteristic 2");
    ConicData out;
    out.kernel_vector = kappa(net, a);
    const Vector& v = out.kernel_vector;
    if (is_zero_vector(v)) throw std::domain_error("kappa vanishes: the parameter is degenerate");

    Matrix pairing(3, 7, f);
    for (std::size_t i = 0; i < 3; ++i) {
        const Vector row = net.form(i).transpose().apply(v);  // w -> v^T s_i w
        for (std::size_t j = 0; j < 7; ++j) pairing.set(i, j, row[j]);
    }
    const auto v5 = kernel_basis(pairing);
    out.v5_dimension = v5.size();
    if (v5.size() != 5) throw std::domain_error("the orthogonal of kappa is not 5-dimensional");

    // Complete v to a basis of V5 with four kernel vectors.
    std::vector<Vector> w;
    std::vector<Vector> chosen{v};
    for (const auto& b : v5) {
        chosen.push_back(b);
        if (rank(Matrix::from_rows(chosen)) == chosen.size()) w.push_back(b);
        else chosen.pop_back();
        if (w.size() == 4) break;
    }
    const Matrix W = Matrix::from_columns(w, 7, f);  // 7 x 4

    // Induced forms on V5/kv as coordinates on the Plucker basis (kl), k < l.
    static constexpr std::array<std::pair<std::size_t, std::size_t>, 6> pairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    Matrix induced(3, 6, f);
    for (std::size_t i = 0; i < 3; ++i) {
        const Matrix b = W.transpose() * net.form(i) * W;
        for (std::size_t c = 0; c < 6; ++c) induced.set(i, c, b(pairs[c].first, pairs[c].second));
    }
    const auto ann = kernel_basis(induced);
    out.annihilator_dimension = ann.size();

    // Polar form of p12 p34 - p13 p24 + p14 p23.
    auto polar = [](const Vector& x, const Vector& y) {
        return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
    };
    Matrix gram(ann.size(), ann.size(), f);
    for (std::size_t r = 0; r < ann.size(); ++r)
        for (std::size_t c = 0; c < ann.size(); ++c) gram.set(r, c, polar(ann[r], ann[c]));
    out.rank = rank(gram);
    return out;
}

/// Gaussian binomial [n choose k]_q: the number of k-subspaces of F_q^n.
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        std::uint64_t a = 1, b = 1;
        for (unsigned j = 0; j < n - i; ++j) a *= q;
        for (unsigned j = 0; j < i + 1; ++j) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

namespace detail {

struct ScanContext {
    std::uint64_t q;
    unsigned k;
    std::array<std::array<std::array<std::uint64_t, 7>, 7>, 3> forms;
};

inline bool orthogonal(const ScanContext& ctx, const std::array<std::uint64_t, 7>& x, const std::array<std::uint64_t, 7>& y) {
    for (const auto& s : ctx.forms) {
        std::uint64_t acc = 0;
        for (std::size_t r = 0; r < 7; ++r) {
            if (!x[r]) continue;
            std::uint64_t row = 0;
            for (std::size_t c = 0; c < 7; ++c)
                if (y[c] && s[r][c]) row = (row + s[r][c] * y[c]) % ctx.q;
            acc = (acc + x[r] * row) % ctx.q;
        }
        if (acc) return false;
    }
    return true;
}

// All isotropic subspaces whose reduced row echelon form has the given pivots.
inline std::vector<std::vector<std::array<std::uint64_t, 7>>> scan_pivots(const ScanContext& ctx,
                                                                          const std::vector<unsigned>& pivots) {
    std::vector<std::vector<std::array<std::uint64_t, 7>>> found;
    std::vector<std::array<std::uint64_t, 7>> rows;
    std::array<bool, 7> is_pivot{};
    for (unsigned p : pivots) is_pivot[p] = true;

    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == pivots.size()) {
            found.push_back(rows);
            return;
        }
        std::vector<unsigned> free;
        for (unsigned c = pivots[t] + 1; c < 7; ++c)
            if (!is_pivot[c]) free.push_back(c);
        std::array<std::uint64_t, 7> row{};
        row[pivots[t]] = 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= ctx.q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (unsigned col : free) {
                row[col] = c % ctx.q;
                c /= ctx.q;
            }
            bool ok = true;
            for (const auto& prev : rows)
                if (!orthogonal(ctx, prev, row)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            rows.push_back(row);
            self(self, t + 1);
            rows.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

} // namespace detail

/// All k-dimensional subspaces of F_q^7 isotropic for the three forms, in
/// lexicographic order of (pivot set, row entries). Pivot sets are scanned in
/// parallel and merged in order.
inline std::vector<Subspace> isotropic_scan(const SkewNet& net, unsigned k) {
    const Field f = net.field();
    if (f.is_rational()) throw std::invalid_argument("isotropic scan needs a prime field");
    if (k == 0 || k > 7) throw std::invalid_argument("subspace dimension out of range");
    detail::ScanContext ctx{f.modulus(), k, {}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < 7; ++c) ctx.forms[i][r][c] = net.form(i)(r, c).residue();

    std::vector<std::vector<unsigned>> pivot_sets;
    for (auto mask : exterior::lex_subsets(7, k)) {
        std::vector<unsigned> p;
        for (unsigned i = 0; i < 7; ++i)
            if (mask & (1u << i)) p.push_back(i);
        pivot_sets.push_back(p);
    }
    std::vector<std::future<std::vector<std::vector<std::array<std::uint64_t, 7>>>>> jobs;
    for (const auto& p : pivot_sets)
        jobs.push_back(std::async(std::launch::async, [&ctx, p] { return detail::scan_pivots(ctx, p); }));

    std::vector<Subspace> out;
    for (auto& job : jobs)
        for (const auto& rows : job.get()) {
            Matrix m(rows.size(), 7, f);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < 7; ++c)
                    if (rows[r][c]) m.set(r, c, Scalar::from_int(static_cast<long long>(rows[r][c]), f));
            out.emplace_back(std::move(m));
        }
    return out;
}

inline bool is_isotropic(const SkewNet& net, const Subspace& u) {
    require_same_field(net.field(), u.field());
    for (std::size_t i = 0; i < 3; ++i) {
        const Matrix g = u.basis() * net.form(i) * u.basis().transpose();
        if (!g.is_zero()) return false;
    }
    return true;
}

struct CoveringConicResult {
    bool exists;                         // minors have (by the Hilbert function test) a common zero
    std::uint32_t degrees_checked;       // graded pieces 3..degrees_checked were not filled
    std::optional<Parameter> witness;    // a base-field parameter where the pencil drops rank, if any
    std::vector<MultiPoly> minors;
};

/// For a totally isotropic 3-space U, each form gives a map U -> (V/U)^dual,
/// a 4 x 3 matrix linear in a. Conics through U exist when this matrix drops
/// to rank <= 2 somewhere, i.e. when its four 3 x 3 minors (cubics in a) have
/// a common projective zero. The minors' graded multiplication map must then
/// fail to be surjective in every degree; that is what is checked.
inline CoveringConicResult covering_conic_exists(const SkewNet& net, const Subspace& u, std::uint32_t max_degree = 8) {
    if (u.dimension() != 3 || u.ambient_dimension() != 7) throw std::invalid_argument("need a 3-dimensional subspace of V");
    if (!is_isotropic(net, u)) throw std::invalid_argument("subspace is not isotropic for the net");
    const Field f = net.field();

    // Complete the basis of U with standard vectors.
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < 3; ++i) basis.push_back(u.basis().row(i));
    std::vector<Vector> complement;
    for (std::size_t e = 0; e < 7 && complement.size() < 4; ++e) {
        Vector x(7, Scalar::zero(f));
        x[e] = Scalar::one(f);
        basis.push_back(x);
        if (rank(Matrix::from_rows(basis)) == basis.size()) complement.push_back(x);
        else basis.pop_back();
    }

    // Entry (r, c) of the pencil: sum_i a_i s_i(u_c, w_r), a linear form in a.
    std::vector<std::vector<MultiPoly>> pencil(4, std::vector<MultiPoly>(3, MultiPoly(3, f)));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            MultiPoly p(3, f);
            const Vector uc = u.basis().row(c);
            for (std::size_t i = 0; i < 3; ++i) {
                const Vector su = net.form(i).transpose().apply(uc);
                Scalar val = Scalar::zero(f);
                for (std::size_t j = 0; j < 7; ++j) val += su[j] * complement[r][j];
                Exponent e(3, 0);
                e[i] = 1;
                p.add_term(e, val);
            }
            pencil[r][c] = p;
        }

    CoveringConicResult res{false, 0, std::nullopt, {}};
    auto det3 = [](const std::array<const std::vector<MultiPoly>*, 3>& m) {
        const auto& a = *m[0];
        const auto& b = *m[1];
        const auto& c = *m[2];
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
    };
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::array<const std::vector<MultiPoly>*, 3> rows{};
        std::size_t idx = 0;
        for (std::size_t r = 0; r < 4; ++r)
            if (r != drop) rows[idx++] = &pencil[r];
        res.minors.push_back(det3(rows));
    }

    std::vector<MultiPoly> nonzero;
    for (const auto& m : res.minors)
        if (!m.is_zero()) nonzero.push_back(m);
    res.degrees_checked = max_degree;
    res.exists = nonzero.empty() || !nullstellensatz_degree(nonzero, 3, max_degree).has_value();

    if (!f.is_rational() && f.modulus() <= 400) {
        for (const auto& a : projective_plane_points(f)) {
            const auto vals = [&] {
                std::vector<Scalar> pt{a[0], a[1], a[2]};
                return std::all_of(res.minors.begin(), res.minors.end(),
                                   [&](const MultiPoly& m) { return m.evaluate(pt).is_zero(); });
            }();
            if (vals) {
                res.witness = a;
                break;
            }
        }
    }
    return res;
}

} // namespace mukai::nets
