#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laq/double_complex.hpp"

namespace laq {

struct ReportCheck {
    std::string name;
    bool ok = false;
    std::string witness;  // empty when ok
    friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // cells rendered as strings
    friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

// Everything a command run produces. The JSON emission is lossless:
// parse_report(emit_json(r)) == r, field for field.
struct Report {
    std::string command;  // subcommand and arguments, echoed
    std::vector<ReportCheck> checks;
    std::vector<ReportTable> tables;
    std::vector<std::string> notes;
    std::int64_t elapsed_us = 0;
    int exit_status = 0;  // 0 ok, 1 semantic/validation failure, 2 parse/IO failure
    friend bool operator==(const Report&, const Report&) = default;
};

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);
Report parse_report(const std::string& json_text);

// truncation window (p_max, q_max) override
using Window = std::pair<std::size_t, std::size_t>;

// groupoid axioms, LA structure, multiplicativity; never throws
Report cmd_validate(const std::string& path);

// total cohomology H^0..H^max_degree; the window defaults to the smallest
// certifying one, (max_degree + 1, max_degree + 1)
Report cmd_cohomology(const std::string& path, std::size_t max_degree,
                      std::optional<Window> window = {});

// E1/E2 dimension grid with the truncation mask; window defaults to (4, 4)
Report cmd_spectral(const std::string& path, int page, Orientation orientation,
                    std::optional<Window> window = {});

// tuple count and per-tuple fiber dimensions at one nerve level
Report cmd_nerve(const std::string& path, std::uint32_t level);

// the acceptance suite from laq/selftest.hpp, one check per criterion
Report cmd_selftest();

}  // namespace laq
