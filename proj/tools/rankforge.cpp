// Command-line front end. Subcommands map onto the engines: freq (inclusive
// counts via closed forms and/or enumeration), showdown (enumerated showdown
// counts), rank (single ranking or breakpoint scan), certify (stability
// certificates), iterate (recursive showdown rankings), agree (minimal
// frequency/showdown agreement).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rankforge/closed_form.hpp"
#include "rankforge/enumerate.hpp"
#include "rankforge/rank_analysis.hpp"
#include "rankforge/render.hpp"

namespace rf = rankforge;

namespace {

// Exit codes: validation problems, engine disagreements, and failed
// certificates are distinct so scripts can tell them apart.
enum ExitCode {
  kOk = 0,
  kRuntimeError = 1,
  kValidation = 2,
  kEngineMismatch = 3,
  kCertificationFailed = 4,
  kNoConvergence = 5,
};

struct CommonOpts {
  unsigned threads = 0;  // 0: RANKFORGE_THREADS, then hardware
  std::string format = "table";
  bool long_run = false;
  uint64_t progress_mhands = 256;  // progress line every N million hands; 0 off
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--threads", c.threads,
                  "worker threads (default: RANKFORGE_THREADS env, then all cores)");
  cmd->add_option("--format", c.format, "output format: table, json, csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_flag("--long-run", c.long_run, "allow enumeration past the routine ceiling (r > 16)");
  cmd->add_option("--progress-interval", c.progress_mhands,
                  "progress line to stderr every N million hands (0 disables)");
}

rf::SweepOptions sweep_options(const CommonOpts& c) {
  rf::SweepOptions o;
  o.threads = c.threads;
  o.long_run = c.long_run;
  if (c.progress_mhands > 0) {
    o.progress_interval = c.progress_mhands * 1000000ull;
    o.progress = [](unsigned r, uint64_t done, uint64_t total) {
      std::fprintf(stderr, "rankforge: r=%u %.1fM/%.1fM hands (%.1f%%)\n", r, done / 1e6,
                   total / 1e6, 100.0 * double(done) / double(total));
    };
  }
  return o;
}

rf::OutputFormat parse_format(const std::string& name) {
  auto f = rf::format_from_name(name);
  if (!f) throw CLI::ValidationError("--format", "unknown format '" + name + "'");
  return *f;
}

bool parse_scan(const std::string& text, unsigned& lo, unsigned& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoul(text.substr(0, pos));
    hi = std::stoul(text.substr(pos + 2));
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

rf::Ranking ranking_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ranking file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rf::Ranking::parse(buf.str());
}

int cmd_freq(unsigned r, const std::string& method, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);
  rf::Enumerator en(sweep_options(common));

  rf::CountTable table;
  table.r = r;
  table.mode = rf::CountTable::Mode::Inclusive;

  if (method == "closed") {
    for (unsigned c = 0; c < rf::kNumClasses; ++c)
      table.counts[c] = rf::freq_closed(static_cast<rf::HandClass>(c), r);
    table.total = rf::binom(4ll * r, 7);
  } else {
    table = en.inclusive(r);
    if (method == "both") {
      // Cross-check the sweep against every closed form valid at this r;
      // any disagreement is a hard failure.
      for (unsigned c = 0; c < rf::kNumClasses; ++c) {
        const auto cls = static_cast<rf::HandClass>(c);
        if (r < rf::formula_min_valid_r(cls)) continue;
        const rf::Int closed = rf::freq_closed(cls, r);
        if (closed != table.counts[c]) {
          std::cerr << "rankforge: engine mismatch for " << rf::class_name(cls) << " at r=" << r
                    << ": closed form " << closed.get_str() << ", enumeration "
                    << table.counts[c].get_str() << "\n";
          return kEngineMismatch;
        }
      }
      std::cerr << "rankforge: closed forms and enumeration agree at r=" << r << "\n";
    }
  }
  std::cout << rf::render_inclusive(table, fmt, method);
  return kOk;
}

int cmd_showdown(unsigned r, const std::string& ranking_file, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);
  rf::Enumerator en(sweep_options(common));

  rf::Ranking base;
  std::string source;
  if (ranking_file.empty()) {
    base = rf::frequency_ranking(r, en);
    source = "frequency";
  } else {
    base = ranking_from_file(ranking_file);
    source = ranking_file;
  }
  const rf::CountTable table = en.showdown(r, base);
  std::cout << rf::render_showdown(table, fmt, source);
  return kOk;
}

int cmd_rank(unsigned r, bool have_r, const std::string& scan, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);
  rf::Enumerator en(sweep_options(common));

  if (!scan.empty()) {
    unsigned lo = 0, hi = 0;
    if (!parse_scan(scan, lo, hi))
      throw std::invalid_argument("--scan expects A..B with A <= B");
    std::cout << rf::render_breakpoints(rf::scan_breakpoints(lo, hi, en), fmt);
    return kOk;
  }
  if (!have_r) throw std::invalid_argument("rank: pass --ranks R or --scan A..B");
  std::cout << rf::render_ranking(r, rf::frequency_ranking(r, en), fmt);
  return kOk;
}

int cmd_certify(unsigned from_r, const std::string& pair, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);

  rf::StabilityReport report;
  if (pair.empty()) {
    report = rf::certify_stability(from_r);
  } else {
    const auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--pair expects two classes, e.g. FL,1P");
    const auto a = rf::class_from_name(pair.substr(0, comma));
    const auto b = rf::class_from_name(pair.substr(comma + 1));
    if (!a || !b) throw std::invalid_argument("--pair: unknown hand class in '" + pair + "'");
    report = rf::certify_stability_pair(from_r, *a, *b);
  }
  std::cout << rf::render_stability(report, fmt);
  return report.ok() ? kOk : kCertificationFailed;
}

int cmd_iterate(unsigned r, bool have_r, const std::string& scan, const std::string& ranking_file,
                unsigned max_iter, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);
  rf::Enumerator en(sweep_options(common));

  unsigned lo = 0, hi = 0;
  if (!scan.empty()) {
    if (!parse_scan(scan, lo, hi))
      throw std::invalid_argument("--scan expects A..B with A <= B");
  } else if (have_r) {
    lo = hi = r;
  } else {
    throw std::invalid_argument("iterate: pass --ranks R or --scan A..B");
  }

  std::vector<std::pair<unsigned, rf::IterationResult>> runs;
  bool all_converged = true;
  for (unsigned rr = lo; rr <= hi; ++rr) {
    const rf::Ranking base = ranking_file.empty() ? rf::frequency_ranking(rr, en)
                                                  : ranking_from_file(ranking_file);
    runs.emplace_back(rr, rf::iterate_showdown(rr, base, max_iter, en));
    all_converged &= runs.back().second.kind != rf::IterationResult::Kind::NoConvergence;
  }
  std::cout << rf::render_iterations(runs, max_iter, fmt);
  return all_converged ? kOk : kNoConvergence;
}

int cmd_agree(bool include_hc, unsigned r_max, const CommonOpts& common) {
  const rf::OutputFormat fmt = parse_format(common.format);
  rf::Enumerator en(sweep_options(common));
  const auto found = rf::find_min_agreement(include_hc, r_max, en);
  std::cout << rf::render_agreement(include_hc, r_max, found, fmt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact poker hand-frequency analysis for decks with r ranks and 4 suits"};
  app.require_subcommand(1);

  CommonOpts common;

  unsigned freq_r = 0;
  std::string freq_method = "both";
  CLI::App* freq = app.add_subcommand("freq", "inclusive per-class hand counts");
  freq->add_option("--ranks", freq_r, "rank count r (deck has 4r cards)")->required();
  freq->add_option("--method", freq_method, "closed, enum, or both (cross-checked)")
      ->check(CLI::IsMember({"closed", "enum", "both"}));
  add_common(freq, common);

  unsigned sd_r = 0;
  std::string sd_ranking;
  CLI::App* showdown = app.add_subcommand("showdown", "showdown counts under a ranking");
  showdown->add_option("--ranks", sd_r, "rank count r")->required();
  showdown->add_option("--ranking", sd_ranking,
                       "ranking file (default: the frequency ranking for r)");
  add_common(showdown, common);

  unsigned rank_r = 0;
  std::string rank_scan;
  CLI::App* rank = app.add_subcommand("rank", "frequency ranking or breakpoint scan");
  CLI::Option* rank_r_opt = rank->add_option("--ranks", rank_r, "rank count r");
  rank->add_option("--scan", rank_scan, "scan range A..B for ranking breakpoints");
  add_common(rank, common);

  unsigned cert_from = 0;
  std::string cert_pair;
  CLI::App* certify = app.add_subcommand("certify", "sign-permanence stability certificates");
  certify->add_option("--from", cert_from, "certify stability for all r >= this")->required();
  certify->add_option("--pair", cert_pair, "restrict to one class pair, e.g. FL,1P");
  add_common(certify, common);

  unsigned it_r = 0, it_max = rf::kDefaultMaxIterations;
  std::string it_scan, it_ranking;
  CLI::App* iterate = app.add_subcommand("iterate", "recursive showdown-ranking iteration");
  CLI::Option* it_r_opt = iterate->add_option("--ranks", it_r, "rank count r");
  iterate->add_option("--scan", it_scan, "iterate for every r in A..B");
  iterate->add_option("--ranking", it_ranking, "base ranking file (default: frequency)");
  iterate->add_option("--max-iter", it_max, "iteration cap before reporting no convergence");
  add_common(iterate, common);

  bool agree_hc = false;
  unsigned agree_max = 23;
  CLI::App* agree = app.add_subcommand(
      "agree", "smallest r where showdown and frequency rankings agree");
  agree->add_flag("--include-hc", agree_hc, "compare all nine classes, not just the non-HC ones");
  agree->add_option("--max", agree_max, "search r=5..max");
  add_common(agree, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (freq->parsed()) return cmd_freq(freq_r, freq_method, common);
    if (showdown->parsed()) return cmd_showdown(sd_r, sd_ranking, common);
    if (rank->parsed()) return cmd_rank(rank_r, rank_r_opt->count() > 0, rank_scan, common);
    if (certify->parsed()) return cmd_certify(cert_from, cert_pair, common);
    if (iterate->parsed())
      return cmd_iterate(it_r, it_r_opt->count() > 0, it_scan, it_ranking, it_max, common);
    if (agree->parsed()) return cmd_agree(agree_hc, agree_max, common);
  } catch (const rf::FormulaRangeError& e) {
    std::cerr << "rankforge: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rankforge: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "rankforge: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kValidation;
}
