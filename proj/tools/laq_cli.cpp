#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "laq/commands.hpp"

namespace {

// "P,Q" -> window pair; CLI11 validators reject everything else upstream
std::optional<laq::Window> parse_window(const std::string& text) {
    if (text.empty()) return std::nullopt;
    unsigned long p = 0, q = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lu,%lu%c", &p, &q, &tail) != 2)
        throw CLI::ValidationError("--window", "expected P,Q");
    return laq::Window{p, q};
}

int finish(const laq::Report& report, const std::string& format) {
    std::cout << (format == "json" ? laq::emit_json(report) : laq::emit_text(report));
    return report.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of finite LA-groupoids"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string window;
    std::size_t max_degree = 2;
    std::uint32_t level = 1;
    int page = 1;
    std::string orientation = "delta-first";

    const auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file) cmd->add_option("file", file, "model document")->required();
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return cmd;
    };

    add_common(app.add_subcommand("validate", "check groupoid, LA and multiplicativity axioms"),
               true);
    CLI::App* coh =
        add_common(app.add_subcommand("cohomology", "total cohomology dimensions"), true);
    coh->add_option("--max-degree", max_degree, "highest reported degree");
    coh->add_option("--window", window, "truncation window P,Q");
    CLI::App* spec = add_common(app.add_subcommand("spectral", "E1/E2 page dimensions"), true);
    spec->add_option("--page", page, "1 or 2")->check(CLI::IsMember({1, 2}));
    spec->add_option("--orientation", orientation, "which differential is taken first")
        ->check(CLI::IsMember({"delta-first", "psi-first"}));
    spec->add_option("--window", window, "truncation window P,Q");
    CLI::App* nerve =
        add_common(app.add_subcommand("nerve", "composable tuples and fiber dimensions"), true);
    nerve->add_option("--level", level, "nerve level q");
    add_common(app.add_subcommand("selftest", "run the full acceptance suite"), false);

    try {
        app.parse(argc, argv);

        if (app.got_subcommand("validate")) return finish(laq::cmd_validate(file), format);
        if (app.got_subcommand("cohomology"))
            return finish(laq::cmd_cohomology(file, max_degree, parse_window(window)), format);
        if (app.got_subcommand("spectral")) {
            const laq::Orientation o = orientation == "psi-first"
                                           ? laq::Orientation::psi_first
                                           : laq::Orientation::delta_first;
            return finish(laq::cmd_spectral(file, page, o, parse_window(window)), format);
        }
        if (app.got_subcommand("nerve")) return finish(laq::cmd_nerve(file, level), format);
        return finish(laq::cmd_selftest(), format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // bad usage is an input problem; help/version exits stay 0
        return code == 0 ? 0 : 2;
    }
}
