#pragma once
// Output rendering. Counts are serialized as decimal strings everywhere:
// they exceed 64 bits for large r and exactness is the whole point.
// JSON uses a fixed two-space dump so emitted documents round-trip byte
// identically through parse + re-serialize.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankforge/enumerate.hpp"
#include "rankforge/rank_analysis.hpp"

namespace rankforge {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> format_from_name(std::string_view name);

// Tie groups joined with '=' ("FL=SF"), lowest rank first.
std::vector<std::string> ranking_groups(const Ranking& rk);

// Inclusive tables list classes in canonical declaration order; showdown
// tables in ascending showdown count, mirroring the usual presentation.
std::string render_inclusive(const CountTable& t, OutputFormat f, std::string_view method);
std::string render_showdown(const CountTable& t, OutputFormat f, std::string_view ranking_source);

std::string render_ranking(unsigned r, const Ranking& rk, OutputFormat f);
std::string render_breakpoints(const BreakpointReport& report, OutputFormat f);
std::string render_stability(const StabilityReport& report, OutputFormat f);
std::string render_iterations(const std::vector<std::pair<unsigned, IterationResult>>& runs,
                              unsigned max_iter, OutputFormat f);
std::string render_agreement(bool include_hc, unsigned r_max, std::optional<unsigned> found,
                             OutputFormat f);

}  // namespace rankforge
