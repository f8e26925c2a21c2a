#pragma once

// The verification commands behind the CLI. Each returns a list of reports;
// bad input raises report::InputError.

#include "mukai/bbw.hpp"
#include "mukai/chern.hpp"
#include "mukai/k3num.hpp"
#include "mukai/models.hpp"
#include "mukai/nets.hpp"
#include "mukai/netio.hpp"
#include "mukai/report.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mukai::commands {

using report::InputError;
using report::json;
using report::Report;
using report::Status;

struct Options {
    std::uint64_t seed = 1;
    std::uint32_t nss_bound = 8;
    std::optional<std::uint64_t> field;  // reduce the input net modulo this prime
    std::uint64_t max_q = 5;
    unsigned k = 4;
    std::vector<long> sigma{1, 0, 0};
    unsigned samples = 0;
};

inline json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline json to_json(const nets::Parameter& a) {
    return json::array({netio::scalar_to_json(a[0]), netio::scalar_to_json(a[1]), netio::scalar_to_json(a[2])});
}

inline json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(netio::scalar_to_json(x));
    return out;
}

inline std::vector<Report> cmd_tables(const std::vector<models::MukaiModel>& rows = models::raw_model_table()) {
    std::vector<Report> out;
    for (const auto& m : rows) {
        json expected = json::object();
        json computed = json::object();
        expected["N_g - n_g"] = m.genus >= 7 ? m.genus - 2 : 3;
        computed["N_g - n_g"] = m.N_g - m.n_g;
        if (m.genus != 7) {
            expected["r*s"] = m.genus;
            computed["r*s"] = m.r * m.s;
        }
        json row{{"variety", m.variety}, {"ambient", m.ambient}, {"n_g", m.n_g}, {"N_g", m.N_g},
                 {"r", m.r}, {"s", m.s}, {"E0", m.e0}};
        out.push_back(Report::compare("tables g=" + std::to_string(m.genus), expected, computed, row));
    }
    return out;
}

inline std::vector<Report> cmd_degree(int g) {
    if (!schur::has_degree_model(g)) throw InputError("degree: genus must be one of 8, 9, 10, 12");
    const auto m = schur::degree_model(g);
    json payload{{"grassmannian", "Gr(" + std::to_string(m.k) + "," + std::to_string(m.n) + ")"},
                 {"via_full_bundle", to_json(schur::mukai_degree_via_full_bundle(g))}};
    return {Report::compare("degree g=" + std::to_string(g), 2 * g - 2, to_json(schur::mukai_degree(g)), payload)};
}

inline std::vector<Report> cmd_bbw(int g) {
    if (!bbw::has_bbw_model(g)) throw InputError("bbw: genus must be one of 8, 9, 10, 12");
    const auto m = bbw::bbw_model(g);
    const auto t = bbw::verify_hi_we(g);
    json expected = json::array({json::array({0, 0, 0, 1}), json::array({g - m.n_g, m.n_g - 2, g, 1})});
    json computed = json::array();
    for (const auto& e : t.nonzero) computed.push_back(json::array({e.i, e.j, e.p, to_json(e.dimension)}));
    std::vector<Report> out;
    out.push_back(Report::compare("bbw table g=" + std::to_string(g) + " [i,j,p,dim]", expected, computed,
                                  json{{"cells", t.cells}}));

    const auto v = bbw::verify_connectedness_vanishing(g);
    json violations = json::array();
    for (const auto& x : v.violations) violations.push_back(json::array({x.q, x.i, x.p, to_json(x.dimension)}));
    out.push_back(Report::compare("bbw vanishing g=" + std::to_string(g) + " [q,i,p,dim]", json::array(), violations,
                                  json{{"summands_checked", v.summands_checked}}));
    return out;
}

inline std::vector<Report> cmd_euler(int g) {
    std::vector<Report> out;
    auto vec = [](const k3::MukaiVector& v) { return json::array({v.r, v.d, v.s}); };
    if (g == 7) {
        for (const auto& row : k3::verify_genus7_tables())
            out.push_back(Report::compare("euler g=7 chi(" + row.name + ")", row.tabulated(), row.computed,
                                          json{{"h0", row.h0}, {"h1", row.h1}, {"h2", row.h2}}));
        const auto us = k3::genus7_us();
        out.push_back(Report::compare("euler g=7 chi(U_S,U_S)", 2, k3::euler_pairing_chi(us, us), json{{"v", vec(us)}}));
        return out;
    }
    if (g != 6 && g != 8 && g != 9 && g != 10 && g != 12)
        throw InputError("euler: genus must be one of 6, 7, 8, 9, 10, 12");
    const auto m = models::model(g);
    const auto us = k3::mukai_bundle_vector(m.r, m.s);
    out.push_back(Report::compare("euler g=" + std::to_string(g) + " chi(U_S,U_S)", 2, k3::euler_pairing_chi(us, us),
                                  json{{"v", vec(us)}}));
    out.push_back(Report::compare("euler g=" + std::to_string(g) + " chi(U_S)", m.r + m.s, k3::euler_chi(us)));
    if (g == 9 || g == 10 || g == 12) {
        const auto sc = k3::section_count(g);
        out.push_back(Report::compare("euler g=" + std::to_string(g) + " h0 count", sc.expected, sc.chi,
                                      json{{"bundle", vec(sc.bundle)}, {"twisted", vec(sc.twisted)}}));
    }
    return out;
}

inline std::vector<Report> cmd_model_h0(int g, const std::optional<models::Section>& section) {
    const std::string name = "model h0 g=" + std::to_string(g);
    if (g == 8) return {Report::compare(name, models::expected_h0(8), models::ambient_h0(8), json{{"ambient", "Gr(2,6)"}})};
    if (g != 9 && g != 10 && g != 12) throw InputError("model h0: genus must be one of 8, 9, 10, 12");
    if (!section) throw InputError("model h0: genus " + std::to_string(g) + " needs --section FILE");
    if (section->genus() != g) throw InputError("model h0: section is for genus " + std::to_string(section->genus()));

    const auto verdict = models::section_verdict(*section);
    const auto km = models::section_kernel_map(*section);
    json payload{{"section", models::to_string(verdict)}, {"rank", km.rank}, {"injective", km.injective}};
    if (verdict == models::Verdict::Undetermined)
        return {Report(name, Status::Undetermined, models::expected_h0(g), km.h0, payload)};
    if (verdict == models::Verdict::Degenerate) {
        if (const auto w = models::degenerate_witness(*section)) {
            json wj{{"element", to_json(w->element)}, {"trials", w->trials}};
            if (w->parameter) wj["parameter"] = to_json(*w->parameter);
            payload["witness"] = wj;
        }
        // A degenerate section is not a model; report it as a failed check.
        return {Report(name, Status::Failed, models::expected_h0(g), km.h0, payload)};
    }
    return {Report::compare(name, models::expected_h0(g), km.h0, payload)};
}

inline nets::SkewNet prepare_net(const netio::NetFile& file, const Options& opt) {
    if (!opt.field) return file.net;
    try {
        return file.net.to_field(Field::prime(*opt.field), true);
    } catch (const std::exception& e) {
        throw InputError(std::string("--field: ") + e.what());
    }
}

inline std::vector<Report> cmd_net_check(const nets::SkewNet& net, const Options& opt) {
    nets::NondegeneracyOptions no;
    no.max_degree = opt.nss_bound;
    const auto c = nets::is_nondegenerate_net(net, no);
    json payload{{"field", net.field().name()}, {"max_degree", c.max_degree_tried}};
    Status s = Status::Undetermined;
    switch (c.kind) {
    case nets::NondegeneracyCertificate::Kind::NondegenerateOverClosure:
        s = Status::Verified;
        payload["degree"] = c.degree;
        payload["certified_mod"] = c.certified_mod;
        break;
    case nets::NondegeneracyCertificate::Kind::DegenerateWitness:
        s = Status::Failed;
        payload["witness"] = to_json(*c.witness);
        payload["witness_rank"] = c.witness_rank;
        break;
    case nets::NondegeneracyCertificate::Kind::Undetermined: payload["points_searched"] = c.points_searched; break;
    }
    return {Report("net check", s, "NondegenerateOverClosure", nets::to_string(c.kind), payload)};
}

inline std::vector<Report> cmd_net_conic(const nets::SkewNet& net, const Options& opt) {
    const Field f = net.field();
    if (!f.is_rational() && f.modulus() == 2) throw InputError("net conic: characteristic 2 is not supported");
    if (opt.sigma.size() != 3) throw InputError("net conic: --sigma needs three entries");
    std::vector<nets::Parameter> params{nets::Parameter{Scalar::from_int(opt.sigma[0], f), Scalar::from_int(opt.sigma[1], f),
                                                        Scalar::from_int(opt.sigma[2], f)}};
    if (nets::is_zero_parameter(params[0])) throw InputError("net conic: --sigma must be nonzero");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> d(-50, 50);
    while (params.size() < 1 + opt.samples) {
        nets::Parameter a{Scalar::from_int(d(rng), f), Scalar::from_int(d(rng), f), Scalar::from_int(d(rng), f)};
        if (!nets::is_zero_parameter(a)) params.push_back(a);
    }
    std::vector<Report> out;
    for (const auto& a : params) {
        const std::string name = "net conic " + nets::to_string(a);
        try {
            const auto c = nets::conic_at(net, a);
            out.push_back(Report::compare(name, 3, c.rank, json{{"kappa", to_json(c.kernel_vector)}}));
        } catch (const std::domain_error& e) {
            out.push_back(Report(name, Status::Failed, 3, e.what()));
        }
    }
    return out;
}

inline std::vector<Report> cmd_net_scan(const nets::SkewNet& net, const Options& opt) {
    const Field f = net.field();
    if (f.is_rational()) throw InputError("net scan: needs a prime field (use --field p)");
    if (f.modulus() > opt.max_q) throw InputError("net scan: q exceeds --max-q");
    if (opt.k != 3 && opt.k != 4) throw InputError("net scan: --k must be 3 or 4");
    const auto subs = nets::isotropic_scan(net, opt.k);
    const json searched{{"field", f.name()}, {"subspaces_checked", nets::gaussian_binomial(7, opt.k, f.modulus())}};
    if (opt.k == 4) return {Report::compare("net scan k=4 isotropic count", 0, subs.size(), searched)};

    std::vector<Report> out;
    out.push_back(Report("net scan k=3 isotropic count",
                         subs.empty() ? Status::Failed : Status::Verified, "nonempty", subs.size(), searched));
    std::size_t covered = 0;
    json witnesses = json::array();
    for (const auto& u : subs) {
        const auto cc = nets::covering_conic_exists(net, u, opt.nss_bound);
        covered += cc.exists;
        witnesses.push_back(cc.witness ? to_json(*cc.witness) : json(nullptr));
    }
    out.push_back(Report::compare("net scan k=3 covered by conics", subs.size(), covered, json{{"witnesses", witnesses}}));
    return out;
}

inline std::vector<Report> cmd_net_cubics(const nets::SkewNet& net, const Options&) {
    const auto cubics = nets::net_cubics(net);
    json polys = json::array();
    for (const auto& c : cubics) polys.push_back(c.to_string({"a1", "a2", "a3"}));
    return {Report::compare("net cubics rank", 7, rank(nets::cubic_coefficient_matrix(cubics)), json{{"cubics", polys}})};
}

inline std::vector<Report> cmd_net(const std::string& sub, const netio::NetFile& file, const Options& opt) {
    const nets::SkewNet net = prepare_net(file, opt);
    if (sub == "check") return cmd_net_check(net, opt);
    if (sub == "conic") return cmd_net_conic(net, opt);
    if (sub == "scan") return cmd_net_scan(net, opt);
    if (sub == "cubics") return cmd_net_cubics(net, opt);
    throw InputError("net: unknown subcommand '" + sub + "'");
}

} // namespace mukai::commands
