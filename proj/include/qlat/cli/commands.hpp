#pragma once

#include "qlat/cli/input.hpp"
#include "qlat/cli/report.hpp"
#include "qlat/filters.hpp"
#include "qlat/lattice.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlat::cli {

/// Exit codes of the `qlat` tool.
enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_expectation_failed = 2 };

/// Comma-separated names: meet-hom, join-hom, complement, top, bottom, plus
/// the shorthands "hom" (meet-hom,join-hom,top,bottom), "all" and "none".
ValuationLaws parse_laws(std::string_view list);
Convention parse_convention(std::string_view name);

/// Meet/join closure of the document's rays, projector images and kernels.
FiniteLattice document_lattice(const InputDocument& doc, ClosureOptions options = {});

/// Projector or context names, contexts expanded to their members. An empty
/// selection means every declared projector.
std::vector<std::pair<std::string, ExactMatrix>> resolve_ops(const InputDocument& doc,
                                                             const std::vector<std::string>& names);

Report lattice_command(const InputDocument& doc);
Report laws_command(const InputDocument& doc, std::size_t max_examples = 10);
Report filters_command(const InputDocument& doc, const std::string& remove, Convention convention);
Report valuations_command(const InputDocument& doc, ValuationLaws laws);
Report invariant_command(const InputDocument& doc, const std::vector<std::string>& ops);
Report burnside_command(const InputDocument& doc, const std::vector<std::string>& ops);
Report contexts_command(const InputDocument& doc);
std::string dot_command(const InputDocument& doc);

struct DemoResult {
    Report report;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Rebuilds the qubit constructions from the built-in projector family and
/// checks each against its expected value.
DemoResult demo_qubit();

/// Each assertion is "key=value"; returns a message per unmet one.
std::vector<std::string> check_assertions(const Report& report, const std::vector<std::string>& assertions);

}  // namespace qlat::cli
