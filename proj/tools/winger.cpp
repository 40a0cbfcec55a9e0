#include "winger/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace winger;

namespace {

std::set<std::string> split_modules(const std::string& s) {
    std::set<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    f.close();
    return static_cast<bool>(f);
}

// text goes to path, or to stdout when path is empty
int emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    if (!write_file(path, text)) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

int verify(const RunConfig& cfg) {
    RunResult r;
    try {
        r = run(cfg);
    } catch (const Overflow& e) {
        std::cerr << "overflow: " << e.what() << " (raise --coset-limit)\n";
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    for (const auto& s : r.suites) {
        std::size_t fails = 0;
        for (const auto& c : s.checks) fails += !c.pass;
        std::cout << "[" << s.name << "] " << s.checks.size() - fails << "/" << s.checks.size() << " pass, "
                  << std::fixed << std::setprecision(1) << s.millis << " ms\n";
        for (const auto& c : s.checks) {
            if (c.pass) {
                std::cout << "  PASS " << c.name << "\n";
            } else {
                std::cout << "  FAIL " << c.name << "\n    expected: " << c.expected << "\n    actual:   " << c.actual
                          << "\n";
            }
        }
    }
    if (r.headline)
        std::cout << "index [SL2(O):G] = " << r.headline->index_in_sl2o << ", [SL2(O):SL2(Oo)] = "
                  << r.headline->index_sl2oo_in_sl2o << ", [SL2(Oo):G] = " << r.headline->index_in_sl2oo << "\n";
    std::cout << "summary: " << r.passed() << " pass, " << r.failed() << " fail\n";
    if (cfg.report_path && !write_file(*cfg.report_path, render_report(r))) {
        std::cerr << "error: cannot write report " << *cfg.report_path << "\n";
        return 1;
    }
    return r.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the E_o monodromy computations"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string modules, report, out;
    std::size_t coset_limit = kDefaultCosetLimit;
    bool emit_tables = false;
    app.add_option("--modules", modules, "comma separated subset of: rep-a5,surface-models,isotypic,monodromy,fp-groups");
    app.add_option("--coset-limit", coset_limit, "maximum number of live cosets")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    app.add_option("--report", report, "write the JSON report to this file");
    app.add_flag("--emit-tables", emit_tables, "include computed matrices and tables in the report");

    auto* verify_cmd = app.add_subcommand("verify", "run the checks (default)");
    auto* dump_complex = app.add_subcommand("dump-complex", "print a cell incidence file");
    std::string model;
    dump_complex->add_option("model", model, "sigma or pi")->required()->check(CLI::IsMember({"sigma", "pi"}));
    dump_complex->add_option("-o,--out", out, "output file (default stdout)");
    auto* dump_cosets = app.add_subcommand("dump-cosets", "print the coset table of the monodromy group");
    dump_cosets->add_option("-o,--out", out, "output file (default stdout)");
    (void)verify_cmd;

    CLI11_PARSE(app, argc, argv);

    if (dump_complex->parsed()) {
        const auto& s = surface_model(model == "sigma" ? Model::sigma : Model::pi);
        return emit(out, export_complex(s.complex));
    }
    if (dump_cosets->parsed()) {
        try {
            FpGroup g = sl2o_presentation();
            CosetTable t = todd_coxeter(g, monodromy_words(), coset_limit);
            return emit(out, t.dump(g));
        } catch (const Overflow& e) {
            std::cerr << "overflow: " << e.what() << " (raise --coset-limit)\n";
            return 2;
        }
    }
    RunConfig cfg;
    cfg.modules = split_modules(modules);
    cfg.coset_limit = coset_limit;
    if (!report.empty()) cfg.report_path = report;
    cfg.emit_tables = emit_tables;
    return verify(cfg);
}
