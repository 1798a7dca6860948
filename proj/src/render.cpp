#include "rankforge/render.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

#include "json.hpp"

namespace rankforge {

using nlohmann::json;

namespace {

constexpr int kJsonIndent = 2;

std::string count_str(const Int& v) { return v.get_str(); }

// Class indices in ascending count order (ties canonical), the order used
// for showdown presentation.
std::array<unsigned, kNumClasses> ascending_count_order(const CountTable& t) {
  std::array<unsigned, kNumClasses> idx{};
  for (unsigned i = 0; i < kNumClasses; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
    const int c = cmp(t.counts[a], t.counts[b]);
    if (c != 0) return c < 0;
    return a < b;
  });
  return idx;
}

std::string table_counts(const CountTable& t, std::span<const unsigned> order,
                         std::string_view title) {
  std::string out(title);
  out += "\nclass  count\n";
  for (unsigned c : order) {
    std::string name(class_name(static_cast<HandClass>(c)));
    out += name + std::string(7 - name.size(), ' ') + count_str(t.counts[c]) + "\n";
  }
  out += "total  " + count_str(t.total) + "\n";
  return out;
}

std::string csv_counts(const CountTable& t, std::span<const unsigned> order) {
  std::string out = "class,count\n";
  for (unsigned c : order) {
    out += std::string(class_name(static_cast<HandClass>(c))) + "," + count_str(t.counts[c]) +
           "\n";
  }
  return out;
}

json counts_json(const CountTable& t) {
  json counts = json::object();
  for (unsigned c = 0; c < kNumClasses; ++c) {
    counts[std::string(class_name(static_cast<HandClass>(c)))] = count_str(t.counts[c]);
  }
  return counts;
}

json groups_json(const Ranking& rk) {
  json arr = json::array();
  for (const std::string& g : ranking_groups(rk)) arr.push_back(g);
  return arr;
}

std::string dump(const json& j) { return j.dump(kJsonIndent) + "\n"; }

}  // namespace

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::vector<std::string> ranking_groups(const Ranking& rk) {
  std::vector<std::string> out;
  for (unsigned pos = 0; pos < kNumClasses;) {
    unsigned end = pos + 1;
    while (end < kNumClasses &&
           rk.level[class_index(rk.order[end])] == rk.level[class_index(rk.order[pos])]) {
      ++end;
    }
    std::string group;
    for (unsigned i = pos; i < end; ++i) {
      if (i > pos) group += "=";
      group += class_name(rk.order[i]);
    }
    out.push_back(std::move(group));
    pos = end;
  }
  return out;
}

std::string render_inclusive(const CountTable& t, OutputFormat f, std::string_view method) {
  std::array<unsigned, kNumClasses> canonical{};
  for (unsigned i = 0; i < kNumClasses; ++i) canonical[i] = i;
  switch (f) {
    case OutputFormat::Table:
      return table_counts(t, canonical,
                          "inclusive frequencies, r=" + std::to_string(t.r) + " (method " +
                              std::string(method) + ")");
    case OutputFormat::Csv:
      return csv_counts(t, canonical);
    case OutputFormat::Json: {
      json j;
      j["command"] = "freq";
      j["r"] = t.r;
      j["method"] = std::string(method);
      j["counts"] = counts_json(t);
      j["total"] = count_str(t.total);
      return dump(j);
    }
  }
  throw std::logic_error("render_inclusive: bad format");
}

std::string render_showdown(const CountTable& t, OutputFormat f,
                            std::string_view ranking_source) {
  const auto order = ascending_count_order(t);
  switch (f) {
    case OutputFormat::Table:
      return table_counts(t, order,
                          "showdown frequencies, r=" + std::to_string(t.r) + " (ranking: " +
                              std::string(ranking_source) + "), rarest first");
    case OutputFormat::Csv:
      return csv_counts(t, order);
    case OutputFormat::Json: {
      json j;
      j["command"] = "showdown";
      j["r"] = t.r;
      j["ranking_source"] = std::string(ranking_source);
      if (t.ranking) j["ranking"] = groups_json(*t.ranking);
      json ord = json::array();
      for (unsigned c : order) ord.push_back(std::string(class_name(static_cast<HandClass>(c))));
      j["order"] = ord;
      j["counts"] = counts_json(t);
      j["total"] = count_str(t.total);
      return dump(j);
    }
  }
  throw std::logic_error("render_showdown: bad format");
}

std::string render_ranking(unsigned r, const Ranking& rk, OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "frequency ranking, r=" + std::to_string(r) + " (lowest first)\n";
      unsigned height = 0;
      for (const std::string& g : ranking_groups(rk)) {
        out += std::to_string(height++) + "  " + g + "\n";
      }
      if (rk.has_ties()) out += "note: '=' marks exact frequency ties\n";
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["command"] = "rank";
      j["r"] = r;
      j["order"] = groups_json(rk);
      json ties = json::array();
      for (const auto& group : rk.ties) {
        json g = json::array();
        for (HandClass c : group) g.push_back(std::string(class_name(c)));
        ties.push_back(g);
      }
      j["ties"] = ties;
      return dump(j);
    }
    case OutputFormat::Csv:
      throw std::invalid_argument("rank: csv applies to count tables only");
  }
  throw std::logic_error("render_ranking: bad format");
}

std::string render_breakpoints(const BreakpointReport& report, OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "frequency-ranking segments, r=" + std::to_string(report.r_min) + ".." +
                        std::to_string(report.r_max) + " (lowest first)\n";
      for (const auto& seg : report.segments) {
        std::string range = std::to_string(seg.r_low);
        if (seg.r_high != seg.r_low) range += "-" + std::to_string(seg.r_high);
        out += range + ": ";
        bool first = true;
        for (const std::string& g : ranking_groups(seg.ranking)) {
          if (!first) out += " < ";
          out += g;
          first = false;
        }
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["command"] = "rank-scan";
      j["r_min"] = report.r_min;
      j["r_max"] = report.r_max;
      json segs = json::array();
      for (const auto& seg : report.segments) {
        json s;
        s["r_low"] = seg.r_low;
        s["r_high"] = seg.r_high;
        s["order"] = groups_json(seg.ranking);
        segs.push_back(s);
      }
      j["segments"] = segs;
      return dump(j);
    }
    case OutputFormat::Csv:
      throw std::invalid_argument("rank --scan: csv applies to count tables only");
  }
  throw std::logic_error("render_breakpoints: bad format");
}

std::string render_stability(const StabilityReport& report, OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "stability certificates from r=" + std::to_string(report.from_r) + "\n";
      out += std::string("high-card dominance: ") + (report.hc_most_common ? "ok" : "FAILED") +
             "\n";
      for (const auto& p : report.pairs) {
        out += std::string(class_name(p.lower)) + " more frequent than " +
               std::string(class_name(p.higher)) + ": ";
        if (p.ok()) {
          out += std::string("certified (") + method_name(p.cert.method) + "; " + p.cert.note +
                 ")";
        } else {
          out += "FAILED";
          if (p.cert.witness) out += " (witness r=" + p.cert.witness->get_str() + ")";
          out += " - " + p.cert.note;
        }
        out += "\n";
      }
      out += std::string("overall: ") + (report.ok() ? "certified" : "NOT certified") + "\n";
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["command"] = "certify";
      j["from_r"] = report.from_r;
      j["ranking"] = groups_json(report.ranking);
      j["hc_most_common"] = report.hc_most_common;
      j["ok"] = report.ok();
      json pairs = json::array();
      for (const auto& p : report.pairs) {
        json e;
        e["lower"] = std::string(class_name(p.lower));
        e["higher"] = std::string(class_name(p.higher));
        e["ok"] = p.ok();
        e["method"] = method_name(p.cert.method);
        e["sign"] = p.cert.sign;
        e["note"] = p.cert.note;
        if (p.cert.witness) e["witness"] = p.cert.witness->get_str();
        pairs.push_back(e);
      }
      j["pairs"] = pairs;
      return dump(j);
    }
    case OutputFormat::Csv:
      throw std::invalid_argument("certify: csv applies to count tables only");
  }
  throw std::logic_error("render_stability: bad format");
}

namespace {

const char* kind_name(IterationResult::Kind k) {
  switch (k) {
    case IterationResult::Kind::Fixpoint:
      return "fixpoint";
    case IterationResult::Kind::Cycle:
      return "cycle";
    case IterationResult::Kind::NoConvergence:
      return "no-convergence";
  }
  return "?";
}

}  // namespace

std::string render_iterations(const std::vector<std::pair<unsigned, IterationResult>>& runs,
                              unsigned max_iter, OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "recursive showdown iteration (max " + std::to_string(max_iter) +
                        " steps)\n";
      for (const auto& [r, res] : runs) {
        out += "r=" + std::to_string(r) + ": " + kind_name(res.kind);
        if (res.kind == IterationResult::Kind::Fixpoint) {
          out += " after " + std::to_string(res.cycle_start) + " step(s)";
        } else if (res.kind == IterationResult::Kind::Cycle) {
          out += " of length " + std::to_string(res.cycle_length) + " from step " +
                 std::to_string(res.cycle_start);
        }
        out += "\n";
        for (unsigned i = 0; i < res.trajectory.size(); ++i) {
          out += "  step " + std::to_string(i) + ": ";
          bool first = true;
          for (const std::string& g : ranking_groups(res.trajectory[i])) {
            if (!first) out += " < ";
            out += g;
            first = false;
          }
          out += "\n";
        }
      }
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["command"] = "iterate";
      j["max_iter"] = max_iter;
      json arr = json::array();
      for (const auto& [r, res] : runs) {
        json e;
        e["r"] = r;
        e["kind"] = kind_name(res.kind);
        e["cycle_start"] = res.cycle_start;
        e["cycle_length"] = res.cycle_length;
        json steps = json::array();
        for (const Ranking& rk : res.trajectory) steps.push_back(groups_json(rk));
        e["trajectory"] = steps;
        arr.push_back(e);
      }
      j["runs"] = arr;
      return dump(j);
    }
    case OutputFormat::Csv:
      throw std::invalid_argument("iterate: csv applies to count tables only");
  }
  throw std::logic_error("render_iterations: bad format");
}

std::string render_agreement(bool include_hc, unsigned r_max, std::optional<unsigned> found,
                             OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: {
      std::string out = "minimal frequency/showdown agreement (";
      out += include_hc ? "all nine classes" : "ignoring HC";
      out += "), searched r=5.." + std::to_string(r_max) + ": ";
      out += found ? "r=" + std::to_string(*found) : std::string("not found");
      out += "\n";
      return out;
    }
    case OutputFormat::Json: {
      json j;
      j["command"] = "agree";
      j["include_hc"] = include_hc;
      j["r_max"] = r_max;
      j["found"] = found.has_value();
      if (found) j["r"] = *found;
      return dump(j);
    }
    case OutputFormat::Csv:
      throw std::invalid_argument("agree: csv applies to count tables only");
  }
  throw std::logic_error("render_agreement: bad format");
}

}  // namespace rankforge
