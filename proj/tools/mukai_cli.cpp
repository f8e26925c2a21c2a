// mukai_cli: runs the verifications and prints reports.
//
// Exit code: 0 all VERIFIED, 1 some FAILED, 2 some UNDETERMINED, 3 bad input.

#include "mukai/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace mukai;
using commands::Options;
using report::InputError;

namespace {

int emit(const std::string& command, const std::vector<report::Report>& reports, const std::string& format, bool timing) {
    if (format == "json") std::cout << report::document(command, reports, timing).dump(2) << "\n";
    else std::cout << report::render_text(reports, timing);
    return report::exit_code(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Mukai-model computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    bool no_timing = false;
    Options opt;
    std::optional<std::uint64_t> field;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-timing", no_timing, "Omit wall-clock times (reproducible output)");
    app.add_option("--seed", opt.seed, "Seed for randomized searches");
    app.add_option("--nss-bound", opt.nss_bound, "Largest degree tried for Nullstellensatz certificates");
    app.add_option("--field", field, "Reduce the input net modulo this prime");
    app.add_option("--max-q", opt.max_q, "Largest field size allowed for exhaustive scans");

    auto* tables = app.add_subcommand("tables", "Model table self-check");

    int genus = 0;
    auto* degree = app.add_subcommand("degree", "Degree of M_g by Schubert calculus");
    degree->add_option("--genus", genus)->required();

    auto* bbw = app.add_subcommand("bbw", "Borel-Bott-Weil tables and vanishing");
    bbw->add_option("--genus", genus)->required();

    auto* euler = app.add_subcommand("euler", "Mukai-vector Euler characteristics");
    euler->add_option("--genus", genus)->required();

    auto* model = app.add_subcommand("model", "Section bookkeeping");
    model->require_subcommand(1);
    auto* h0 = model->add_subcommand("h0", "h^0(O_M(1)) from the kernel map of a section");
    std::string section_file;
    h0->add_option("--genus", genus)->required();
    h0->add_option("--section", section_file, "Section file (JSON)");

    auto* net = app.add_subcommand("net", "Nets of skew forms");
    net->require_subcommand(1);
    std::string net_file;
    std::string sigma_text = "1,0,0";
    auto* check = net->add_subcommand("check", "Nondegeneracy certificate");
    auto* conic = net->add_subcommand("conic", "Conic rank over kappa");
    auto* scan = net->add_subcommand("scan", "Isotropic subspace scan over F_q");
    auto* cubics = net->add_subcommand("cubics", "The seven kappa cubics");
    for (auto* sub : {check, conic, scan, cubics}) sub->add_option("file", net_file, "Net file (JSON)")->required();
    conic->add_option("--sigma", sigma_text, "Parameter a1,a2,a3");
    conic->add_option("--samples", opt.samples, "Additional seeded random parameters");
    scan->add_option("--k", opt.k, "Subspace dimension (3 or 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return report::input_error_exit;
    }
    opt.field = field;

    try {
        if (*tables) return emit("tables", report::timed([] { return commands::cmd_tables(); }), format, !no_timing);
        if (*degree) return emit("degree", report::timed([&] { return commands::cmd_degree(genus); }), format, !no_timing);
        if (*bbw) return emit("bbw", report::timed([&] { return commands::cmd_bbw(genus); }), format, !no_timing);
        if (*euler) return emit("euler", report::timed([&] { return commands::cmd_euler(genus); }), format, !no_timing);
        if (*h0) {
            std::optional<models::Section> section;
            if (!section_file.empty()) section = netio::section_from_json(netio::read_file(section_file), genus);
            return emit("model h0", report::timed([&] { return commands::cmd_model_h0(genus, section); }), format,
                        !no_timing);
        }
        if (*net) {
            const auto file = netio::read_net(net_file);
            std::string sub;
            for (auto* s : {check, conic, scan, cubics})
                if (*s) sub = s->get_name();
            if (sub == "conic") {
                opt.sigma.clear();
                std::stringstream ss(sigma_text);
                std::string part;
                while (std::getline(ss, part, ',')) {
                    try {
                        opt.sigma.push_back(std::stol(part));
                    } catch (const std::exception&) {
                        throw InputError("--sigma: cannot parse '" + part + "'");
                    }
                }
            }
            return emit("net " + sub, report::timed([&] { return commands::cmd_net(sub, file, opt); }), format,
                        !no_timing);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return report::input_error_exit;
    } catch (const netio::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return report::input_error_exit;
    }
    return report::input_error_exit;
}
