// gen_fixtures: regenerates the committed fixture files from fixed seeds.
//
//   reference.net      integer net, certified nondegenerate over Q and over F_2
//   degenerate.net     net whose first form has rank 4
//   g9_section.json    standard symplectic form on V_6
//   g9_degenerate.json rank-4 form on V_6
//   g10_section.json  integer 3-form on V_7 with a 35-dimensional orbit
//   g12_section.json   the reference net as a genus-12 section
//
// Usage: gen_fixtures [--out DIR] [--seed N]

#include "mukai/netio.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

using namespace mukai;
using netio::json;
using Kind = nets::NondegeneracyCertificate::Kind;

namespace {

constexpr long entry_bound = 2;

Matrix random_skew(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-entry_bound, entry_bound);
    Matrix m(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            const long v = d(rng);
            m.set(i, j, Scalar::from_int(v, Field::rationals()));
            m.set(j, i, Scalar::from_int(-v, Field::rationals()));
        }
    return m;
}

void write(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
}

json reference_net(std::uint64_t seed, nets::SkewNet& out) {
    std::mt19937_64 rng(seed);
    const Field f2 = Field::prime(2);
    for (long candidate = 0;; ++candidate) {
        std::array<Matrix, 3> forms{random_skew(rng), random_skew(rng), random_skew(rng)};
        nets::SkewNet net(forms, false);
        if (!net.forms_independent()) continue;
        const nets::SkewNet mod2 = net.to_field(f2);
        if (!mod2.forms_independent()) continue;
        const auto cert = nets::is_nondegenerate_net(net);
        if (cert.kind != Kind::NondegenerateOverClosure) continue;
        const auto cert2 = nets::is_nondegenerate_net(mod2);
        if (cert2.kind != Kind::NondegenerateOverClosure) continue;
        out = net;
        json meta{{"seed", seed},
                  {"candidate", candidate},
                  {"entry_bound", entry_bound},
                  {"certificate_degree", cert.degree},
                  {"certificate_prime", cert.certified_mod},
                  {"mod2_certificate_degree", cert2.degree},
                  {"cubic_rank", rank(nets::cubic_coefficient_matrix(nets::net_cubics(net)))},
                  {"mod2_isotropic_v3", nets::isotropic_scan(mod2, 3).size()}};
        return meta;
    }
}

nets::SkewNet degenerate_net() {
    auto form = [](std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
        Matrix m(7, 7);
        for (auto [i, j] : pairs) {
            m.set(i, j, Scalar(1));
            m.set(j, i, Scalar(-1));
        }
        return m;
    };
    return nets::SkewNet({form({{0, 1}, {2, 3}}), form({{0, 4}, {1, 5}, {2, 6}}), form({{3, 4}, {5, 6}})});
}

models::Section g10_section(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-1, 1);
    for (;;) {
        exterior::MultiVector w(7, 3);
        for (auto m : exterior::subsets(7, 3)) w.add(m, Scalar::from_int(d(rng), Field::rationals()));
        if (exterior::three_form_orbit_dim(w) == 35) return models::Section::three_form(w);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regenerate fixture files"};
    std::string out_dir = "fixtures";
    std::uint64_t seed = 12;
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--seed", seed, "Base seed");
    CLI11_PARSE(app, argc, argv);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    nets::SkewNet ref = degenerate_net();
    const json meta = reference_net(seed, ref);
    write(dir / "reference.net", netio::net_to_json(ref, meta));
    write(dir / "degenerate.net", netio::net_to_json(degenerate_net(), json{{"note", "first form has rank 4"}}));

    const auto sym = exterior::MultiVector::basis(6, {0, 1}) + exterior::MultiVector::basis(6, {2, 3}) +
                     exterior::MultiVector::basis(6, {4, 5});
    write(dir / "g9_section.json", netio::section_to_json(models::Section::two_form(sym)));
    const auto rank4 = exterior::MultiVector::basis(6, {0, 1}) + exterior::MultiVector::basis(6, {2, 3});
    write(dir / "g9_degenerate.json", netio::section_to_json(models::Section::two_form(rank4)));
    write(dir / "g10_section.json", netio::section_to_json(g10_section(seed + 1)));
    write(dir / "g12_section.json", netio::section_to_json(models::Section::net(ref)));
    return 0;
}
