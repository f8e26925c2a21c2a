#pragma once

// Per-genus bookkeeping for the Mukai models M_g and their defining sections.

#include "mukai/exterior.hpp"
#include "mukai/matrix.hpp"
#include "mukai/nets.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mukai::models {

using exterior::MultiVector;

struct MukaiModel {
    int genus;
    int r;
    int s;
    int n_g;  // dim M_g
    int N_g;  // M_g spans P^{N_g}
    std::string variety;
    std::string ambient;  // Grassmannian containing M_g
    std::string e0;       // E_0 on the Grassmannian, or recorded constants
};

/// One row per genus in {6, 7, 8, 9, 10, 12}.
inline std::vector<MukaiModel> raw_model_table() {
    return {
        {6, 2, 3, 6, 9, "Gr(2,5)", "Gr(2,5)", "Gr(2,5) in P^9"},
        {7, 5, 5, 10, 15, "OGr+(5,10)", "Gr(5,10)", "spinor embedding of degree 12 cut out by 10 quadrics"},
        {8, 2, 4, 8, 14, "Gr(2,6)", "Gr(2,6)", "0"},
        {9, 3, 3, 6, 13, "LGr(3,6)", "Gr(3,6)", "Lambda^2 U^dual"},
        {10, 2, 5, 5, 13, "G2/P2", "Gr(2,7)", "U^perp(1)"},
        {12, 3, 4, 3, 13, "M12", "Gr(3,7)", "Lambda^2 U^dual (x) k^3"},
    };
}

/// Returns a description of the first broken invariant, if any.
inline std::optional<std::string> check_model(const MukaiModel& m) {
    if (m.genus >= 7 && m.N_g != m.n_g + m.genus - 2)
        return "g=" + std::to_string(m.genus) + ": N_g != n_g + g - 2";
    if (m.genus == 6 && m.N_g - m.n_g != 3) return "g=6: codimension is not 3";
    if (m.genus != 7 && m.genus != m.r * m.s) return "g=" + std::to_string(m.genus) + ": g != r s";
    return std::nullopt;
}

inline std::vector<MukaiModel> model_table() {
    auto rows = raw_model_table();
    for (const auto& m : rows)
        if (auto err = check_model(m)) throw std::logic_error("model table: " + *err);
    return rows;
}

inline MukaiModel model(int g) {
    for (const auto& m : model_table())
        if (m.genus == g) return m;
    throw std::invalid_argument("no Mukai model in genus " + std::to_string(g));
}

/// h^0(O_{M_g}(1)) = N_g + 1 = n_g + g - 1 for g >= 7.
inline long expected_h0(int g) {
    const auto m = model(g);
    return m.N_g + 1;
}

inline long binom_small(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// h^0(O(1)) on the ambient Grassmannian Gr(r, r + s).
inline long ambient_h0(int g) {
    const auto m = model(g);
    return binom_small(m.r + m.s, m.r);
}

/// sigma_0 in H^0(Gr, E_0): a 2-form on V_6 (g = 9), a 3-form on V_7
/// (g = 10) or a net of 2-forms on V_7 (g = 12).
class Section {
public:
    static Section two_form(MultiVector sigma) {
        if (sigma.dimension() != 6 || sigma.degree() != 2) throw std::invalid_argument("genus 9 needs a 2-form on V_6");
        return Section(9, std::move(sigma));
    }
    static Section three_form(MultiVector sigma) {
        if (sigma.dimension() != 7 || sigma.degree() != 3) throw std::invalid_argument("genus 10 needs a 3-form on V_7");
        return Section(10, std::move(sigma));
    }
    static Section net(nets::SkewNet n) { return Section(12, std::move(n)); }

    int genus() const { return genus_; }
    Field field() const {
        if (const auto* f = std::get_if<MultiVector>(&data_)) return f->field();
        return std::get<nets::SkewNet>(data_).field();
    }
    const MultiVector& form() const {
        if (const auto* f = std::get_if<MultiVector>(&data_)) return *f;
        throw std::logic_error("genus 12 section is a net, not a form");
    }
    const nets::SkewNet& skew_net() const {
        if (const auto* n = std::get_if<nets::SkewNet>(&data_)) return *n;
        throw std::logic_error("section is not a net");
    }

    /// Image under a change of basis: vectors transform by g, forms by its inverse transpose.
    Section transformed(const Matrix& g) const {
        // A form w on V pulls back along g^{-1}: w'(x, ...) = w(g^{-1} x, ...), i.e.
        // its coefficient matrix transforms by the inverse transpose.
        const Matrix ginv = inverse(g);
        const Matrix h = ginv.transpose();
        if (genus_ == 12) {
            const auto& n = skew_net();
            std::array<Matrix, 3> forms{ginv.transpose() * n.form(0) * ginv, ginv.transpose() * n.form(1) * ginv,
                                        ginv.transpose() * n.form(2) * ginv};
            return Section(12, nets::SkewNet(forms));
        }
        return Section(genus_, exterior::transform(h, form()));
    }

private:
    Section(int g, std::variant<MultiVector, nets::SkewNet> d) : genus_(g), data_(std::move(d)) {}

    static Matrix inverse(const Matrix& g) {
        const std::size_t n = g.rows();
        if (g.cols() != n) throw std::invalid_argument("change of basis must be square");
        Matrix aug(n, 2 * n, g.field());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug.set(i, j, g(i, j));
            aug.set(i, n + i, Scalar::one(g.field()));
        }
        std::vector<std::size_t> piv;
        const Matrix r = rref(aug, &piv);
        if (piv.size() < n || piv[n - 1] != n - 1) throw std::invalid_argument("change of basis is singular");
        Matrix inv(n, n, g.field());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r(i, n + j));
        return inv;
    }

    int genus_;
    std::variant<MultiVector, nets::SkewNet> data_;
};

enum class Verdict { Nondegenerate, Degenerate, Undetermined };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Nondegenerate: return "nondegenerate";
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

inline Verdict section_verdict(const Section& s, const nets::NondegeneracyOptions& opt = {}) {
    switch (s.genus()) {
    case 9: return exterior::two_form_rank(s.form()) == 6 ? Verdict::Nondegenerate : Verdict::Degenerate;
    case 10: return exterior::three_form_orbit_dim(s.form()) == 35 ? Verdict::Nondegenerate : Verdict::Degenerate;
    case 12: {
        using K = nets::NondegeneracyCertificate::Kind;
        switch (nets::is_nondegenerate_net(s.skew_net(), opt).kind) {
        case K::NondegenerateOverClosure: return Verdict::Nondegenerate;
        case K::DegenerateWitness: return Verdict::Degenerate;
        case K::Undetermined: return Verdict::Undetermined;
        }
    }
    }
    throw std::invalid_argument("no section notion in genus " + std::to_string(s.genus()));
}

/// True only when nondegeneracy is established; an undetermined net counts as false.
inline bool is_nondegenerate_section(const Section& s) { return section_verdict(s) == Verdict::Nondegenerate; }

struct KernelMap {
    Matrix matrix;  // columns are images of the source basis, rows in lex coordinates
    std::size_t rank;
    bool injective;
    long h0;  // dim of the ambient sections minus the rank
};

/// The map whose cokernel computes h^0(O_{M_g}(1)):
///   g = 9:  V^dual -> Lambda^3 V^dual,        f -> f ^ sigma
///   g = 10: V -> Lambda^2 V^dual,              v -> sigma(v, -, -)
///   g = 12: (V^dual)^3 -> Lambda^3 V^dual,     (f_i) -> sum f_i ^ sigma_i
inline KernelMap section_kernel_map(const Section& s) {
    const Field f = s.field();
    std::vector<Vector> columns;
    std::size_t rows = 0;
    auto covector = [&](std::size_t n, unsigned i) { return MultiVector::basis(n, {i}, f); };
    switch (s.genus()) {
    case 9:
        rows = 20;
        for (unsigned i = 0; i < 6; ++i) columns.push_back(covector(6, i).wedge(s.form()).coordinates());
        break;
    case 10:
        rows = 21;
        for (unsigned i = 0; i < 7; ++i) columns.push_back(exterior::contract_basis(i, s.form()).coordinates());
        break;
    case 12: {
        rows = 35;
        for (std::size_t k = 0; k < 3; ++k) {
            const MultiVector sk = MultiVector::from_skew_matrix(s.skew_net().form(k));
            for (unsigned i = 0; i < 7; ++i) columns.push_back(covector(7, i).wedge(sk).coordinates());
        }
        break;
    }
    default: throw std::invalid_argument("no kernel map in genus " + std::to_string(s.genus()));
    }
    Matrix m = Matrix::from_columns(columns, rows, f);
    const std::size_t r = rank(m);
    return {std::move(m), r, r == columns.size(), static_cast<long>(rows) - static_cast<long>(r)};
}

struct DegenerateWitness {
    std::optional<nets::Parameter> parameter;  // g = 12: a combination of rank <= 4
    Vector element;                            // covector (g = 9, 12) or vector (g = 10)
    MultiVector decomposable;                  // the resulting nonzero decomposable form
    std::size_t trials;
};

namespace detail {

inline Vector unit(std::size_t n, std::size_t i, Field f) {
    Vector v(n, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
}

// Candidates: basis vectors, then the rows of `extra`, then seeded random
// integer vectors of growing height. Stops at the first accepted candidate.
template <class Accept>
std::optional<std::pair<Vector, std::size_t>> search(std::size_t n, Field f, const std::vector<Vector>& extra,
                                                     Accept accept, std::size_t cap = 10000) {
    std::size_t trials = 0;
    for (std::size_t i = 0; i < n && trials < cap; ++i, ++trials)
        if (accept(unit(n, i, f))) return std::pair{unit(n, i, f), trials + 1};
    for (const auto& v : extra) {
        if (trials >= cap) break;
        ++trials;
        if (!is_zero_vector(v) && accept(v)) return std::pair{v, trials};
    }
    std::mt19937_64 rng(0x5eed);
    long height = 1;
    while (trials < cap) {
        for (int rep = 0; rep < 50 && trials < cap; ++rep, ++trials) {
            std::uniform_int_distribution<long> d(-height, height);
            Vector v(n, Scalar::zero(f));
            for (auto& x : v) x = Scalar::from_int(d(rng), f);
            if (!is_zero_vector(v) && accept(v)) return std::pair{v, trials + 1};
        }
        ++height;
    }
    return std::nullopt;
}

inline std::optional<DegenerateWitness> two_form_witness(const MultiVector& sigma) {
    // For rank sigma <= 4, wedging with a covector from its support gives a
    // 3-form in a 4-dimensional space, which is decomposable.
    const Matrix m = exterior::skew_matrix(sigma);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::optional<MultiVector> hit;
    auto accept = [&](const Vector& fv) {
        MultiVector w = sigma.wedge(MultiVector::from_vector(fv, sigma.field()));
        if (w.is_zero() || !exterior::is_decomposable(w)) return false;
        hit = std::move(w);
        return true;
    };
    auto found = search(sigma.dimension(), sigma.field(), rows, accept);
    if (!found) return std::nullopt;
    return DegenerateWitness{std::nullopt, found->first, *hit, found->second};
}

} // namespace detail

/// A certificate that the section is degenerate, or nullopt if the bounded
/// search fails (inconclusive). Throws on a nondegenerate section.
inline std::optional<DegenerateWitness> degenerate_witness(const Section& s) {
    const Verdict v = section_verdict(s);
    if (v == Verdict::Nondegenerate) throw std::invalid_argument("section is nondegenerate");
    switch (s.genus()) {
    case 9: return detail::two_form_witness(s.form());
    case 10: {
        const MultiVector& sigma = s.form();
        std::optional<MultiVector> hit;
        auto accept = [&](const Vector& x) {
            MultiVector w = exterior::contract(x, sigma);
            if (w.is_zero() || !exterior::is_decomposable(w)) return false;
            hit = std::move(w);
            return true;
        };
        auto found = detail::search(7, sigma.field(), {}, accept);
        if (!found) return std::nullopt;
        return DegenerateWitness{std::nullopt, found->first, *hit, found->second};
    }
    case 12: {
        const auto cert = nets::is_nondegenerate_net(s.skew_net());
        if (!cert.witness) return std::nullopt;
        const MultiVector sa = MultiVector::from_skew_matrix(s.skew_net().combination(*cert.witness));
        auto w = detail::two_form_witness(sa);
        if (!w) return std::nullopt;
        w->parameter = cert.witness;
        return w;
    }
    }
    throw std::invalid_argument("no section notion in genus " + std::to_string(s.genus()));
}

} // namespace mukai::models
