#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schubert/errors.hpp"
#include "schubert/pieri.hpp"
#include "schubert/schubert_schur.hpp"
#include "schubert/structure_constants.hpp"

namespace schubert::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string &text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string &piece) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != piece.size())
      throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
    return value;
  };
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

Json word_json(const Permutation &w) {
  return std::vector<int>(w.word().begin(), w.word().end());
}

Json polynomial_json(const Polynomial &f) {
  Json terms = Json::array();
  for (const auto &[m, c] : f.terms())
    terms.push_back({{"exponents", std::vector<int>(m.exponents().begin(), m.exponents().end())},
                     {"coeff", c}});
  return terms;
}

// Loads the memo table from SCHUBERT_CACHE_DIR and writes it back if it grew.
class CacheSession {
public:
  explicit CacheSession(std::ostream &err) : err_(err) {
    const char *dir = std::getenv("SCHUBERT_CACHE_DIR");
    if (!dir || !*dir)
      return;
    file_ = fs::path(dir) / "schubert-memo.json";
    default_schubert_table().load(*file_);
    initial_ = default_schubert_table().size();
  }

  ~CacheSession() {
    if (!file_ || default_schubert_table().size() == initial_)
      return;
    try {
      fs::create_directories(file_->parent_path());
      default_schubert_table().save(*file_);
    } catch (const std::exception &e) {
      err_ << "warning: could not update cache: " << e.what() << '\n';
    }
  }

private:
  std::ostream &err_;
  std::optional<fs::path> file_;
  std::size_t initial_ = 0;
};

void check_out_path(const std::string &out_path) {
  if (out_path.empty())
    return;
  const auto parent = fs::path(out_path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent))
    throw IoError("output directory does not exist: " + parent.string());
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream file(path);
  if (!file)
    throw IoError("cannot open " + path + " for writing");
  file << content << '\n';
  if (!file)
    throw IoError("failed writing " + path);
}

struct Options {
  std::string w;
  std::string lambda;
  std::string steps;
  std::string census;
  std::string n2_text;
  std::string k_text;
  std::string out_path;
  std::string format = "text";
  std::string method;
  std::string filter = "all";
  int k = 0;
  int m = 0;
  int m1_max = 4;
  unsigned workers = 0;
  bool k_all = false;
  bool chains = false;
  bool verbose = false;
};

void emit(std::ostream &out, const Options &opts, const std::string &json_text,
          const std::string &text) {
  const std::string &body = opts.format == "json" ? json_text : text;
  if (opts.out_path.empty())
    out << body << '\n';
  else
    write_file(opts.out_path, body);
}

int cmd_schubert(const Options &opts, std::ostream &out) {
  const auto w = parse_permutation(opts.w);
  const auto poly = schubert(w);
  Json doc;
  doc["w"] = word_json(w);
  doc["terms"] = polynomial_json(poly);
  emit(out, opts, doc.dump(2), poly.to_string());
  return kOk;
}

int cmd_schur(const Options &opts, std::ostream &out) {
  const auto lambda = parse_partition(opts.lambda);
  const auto poly = opts.method == "jacobi-trudi" ? schur_jacobi_trudi_two_row(lambda, opts.k)
                                                  : schur_ssyt(lambda, opts.k);
  Json doc;
  doc["lambda"] = lambda.parts();
  doc["k"] = opts.k;
  doc["terms"] = polynomial_json(poly);
  emit(out, opts, doc.dump(2), poly.to_string());
  return kOk;
}

int cmd_pieri(const Options &opts, std::ostream &out) {
  const auto w = parse_permutation(opts.w);
  std::string text;
  Json doc;
  doc["w"] = word_json(w);
  doc["k"] = opts.k;
  doc["m"] = opts.m;
  if (opts.chains) {
    Json chains = Json::array();
    for (const auto &chain : enumerate_chains(w, opts.m, opts.k)) {
      text += chain.to_string() + " -> " + chain.endpoint().to_string() + '\n';
      chains.push_back({{"steps", chain.to_string()}, {"v", word_json(chain.endpoint())}});
    }
    if (!text.empty())
      text.pop_back();
    doc["chains"] = std::move(chains);
  } else {
    SchubertExpansion expansion;
    Json terms = Json::array();
    for (const auto &v : pieri_expand(w, opts.m, opts.k)) {
      expansion.add(v, 1);
      terms.push_back({{"v", word_json(v)}, {"coeff", 1}});
    }
    text = expansion.to_string();
    doc["terms"] = std::move(terms);
  }
  emit(out, opts, doc.dump(2), text);
  return kOk;
}

int cmd_expand(const Options &opts, std::ostream &out) {
  const auto w = parse_permutation(opts.w);
  const auto lambda = parse_partition(opts.lambda);
  if (!opts.census.empty()) {
    const auto v = parse_permutation(opts.census);
    std::optional<int> n2;
    if (!opts.n2_text.empty())
      n2 = parse_range(opts.n2_text).lo;
    Json sigs = Json::array();
    std::string text;
    for (const auto &sig : case_census(w, opts.k, lambda, v, n2)) {
      sigs.push_back(sig.to_string());
      text += sig.to_string() + '\n';
    }
    if (!text.empty())
      text.pop_back();
    emit(out, opts, Json(sigs).dump(2), text);
    return kOk;
  }
  SchubertExpansion expansion;
  if (opts.method == "oracle") {
    TwoRow::from(lambda);
    expansion = expand_in_schubert_basis(schur_jacobi_trudi_two_row(lambda, opts.k) * schubert(w));
  } else {
    expansion = lr_two_row(w, opts.k, lambda);
  }
  emit(out, opts, expansion_to_json(w, opts.k, lambda, expansion), expansion.to_string());
  return kOk;
}

int cmd_classify(const Options &opts, std::ostream &out) {
  const PieriChain chain(parse_permutation(opts.w), opts.k, parse_steps(opts.steps));
  const int n2 =
      opts.n2_text.empty() ? std::max(chain.base().size(), opts.k) : parse_range(opts.n2_text).lo;
  const auto sig = classify_chain(chain, n2);
  emit(out, opts, Json(sig.to_string()).dump(), sig.to_string());
  return kOk;
}

std::string summary(const ScanReport &report) {
  std::string text = "kind: " + report.config.kind + '\n';
  text += "cells: " + std::to_string(report.cells.size()) + '\n';
  if (report.cells.size() == 1)
    text += "terms: " + std::to_string(report.cells.front().num_terms) + '\n';
  text += "global_max: " + std::to_string(report.global_max) + '\n';
  text += "violations: " + std::to_string(report.violations.size());
  for (const auto &v : report.violations) {
    text += "\n  w=" + v.w.to_string() + " k=" + std::to_string(v.k) + " lambda=(" +
            std::to_string(v.lambda.m1) + ',' + std::to_string(v.lambda.m2) + ") v=" +
            v.v.to_string() + " c=" + std::to_string(v.coeff) + " bound=" + std::to_string(v.bound);
    for (const auto &line : v.witness)
      text += "\n    " + line;
  }
  if (report.k_equals_n2_bound_relaxed)
    text += "\nnote: k = n2 cells checked against bound 1";
  return text;
}

int cmd_scan(const std::string &kind, const Options &opts, std::ostream &out, std::ostream &err) {
  check_out_path(opts.out_path);
  ScanOptions scan;
  scan.workers = opts.workers;
  if (opts.verbose) {
    scan.progress = [&err, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
      const std::size_t percent = total ? done * 100 / total : 100;
      if (percent != last || done == total) {
        err << "\r[" << done << '/' << total << "] " << percent << '%' << (done == total ? "\n" : "")
            << std::flush;
        last = percent;
      }
    };
  }
  const auto filter = parse_filter(opts.filter);

  ScanReport report;
  if (kind == "cell") {
    report = scan_cell(parse_permutation(opts.w), opts.k, parse_partition(opts.lambda));
  } else {
    if (opts.n2_text.empty())
      throw std::invalid_argument("--n2 is required");
    const auto n2 = parse_range(opts.n2_text);
    if (kind == "conjecture") {
      std::optional<std::pair<int, int>> k_range;
      if (!opts.k_all && !opts.k_text.empty()) {
        const auto k = parse_range(opts.k_text);
        k_range = std::pair{k.lo, k.hi};
      }
      report = scan_conjecture(n2.lo, n2.hi, k_range, opts.m1_max, filter, scan);
    } else if (kind == "theorem1") {
      report = verify_theorem_1(n2.hi, opts.m1_max, scan, n2.lo);
    } else if (!opts.lambda.empty() || !opts.k_text.empty()) {
      if (opts.lambda.empty() || opts.k_text.empty() || n2.lo != n2.hi)
        throw std::invalid_argument("a single theorem2 cell needs --n2 N, --k K and --lambda");
      report = verify_theorem_2(n2.lo, parse_range(opts.k_text).lo, parse_partition(opts.lambda),
                                filter, scan);
    } else {
      report = verify_theorem_2_grid(n2.hi, opts.m1_max, filter, scan, n2.lo);
    }
  }

  const auto json_text = to_json(report, -1);
  if (opts.out_path.empty()) {
    out << (opts.format == "text" ? summary(report) : json_text) << '\n';
  } else {
    write_file(opts.out_path, json_text);
    out << summary(report) << '\n';
  }
  if (opts.verbose)
    err << "elapsed: " << report.seconds << " s\n";
  return report.ok() ? kOk : kViolations;
}

bool is_internal(const Error &e) {
  return dynamic_cast<const Overflow *>(&e) || dynamic_cast<const NegativeCoefficient *>(&e) ||
         dynamic_cast<const NotSchubertSpanned *>(&e) || dynamic_cast<const BoundViolation *>(&e);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Schubert calculus toolkit: Schubert and Schur polynomials, Pieri chains, "
               "two-row structure constants and bound scans.",
               "schubert"};
  app.require_subcommand(1);
  Options opts;

  auto format_option = [&](CLI::App *sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opts.out_path, "Write output to this file");
  };

  auto *schubert_cmd = app.add_subcommand("schubert", "Print the Schubert polynomial of w");
  schubert_cmd->add_option("w", opts.w, "Permutation, e.g. 2,3,4,1,5")->required();
  format_option(schubert_cmd);

  auto *schur_cmd = app.add_subcommand("schur", "Print the Schur polynomial s_lambda(x1..xk)");
  schur_cmd->add_option("--lambda", opts.lambda, "Partition, e.g. 2,1")->required();
  schur_cmd->add_option("--k", opts.k, "Number of variables")->required();
  schur_cmd->add_option("--method", opts.method, "ssyt or jacobi-trudi")
      ->check(CLI::IsMember({"ssyt", "jacobi-trudi"}));
  format_option(schur_cmd);

  auto *pieri_cmd = app.add_subcommand("pieri", "Expand h_m(x1..xk) S_w by the Pieri rule");
  pieri_cmd->add_option("--w", opts.w, "Permutation")->required();
  pieri_cmd->add_option("--m", opts.m, "Degree m")->required();
  pieri_cmd->add_option("--k", opts.k, "Number of variables")->required();
  pieri_cmd->add_flag("--chains", opts.chains, "List every chain instead of the endpoints");
  format_option(pieri_cmd);

  auto *expand_cmd = app.add_subcommand("expand", "Expand S_w s_lambda(x1..xk) in Schubert polynomials");
  expand_cmd->add_option("--w", opts.w, "Permutation")->required();
  expand_cmd->add_option("--lambda", opts.lambda, "Partition with at most two parts")->required();
  expand_cmd->add_option("--k", opts.k, "Number of variables")->required();
  expand_cmd->add_option("--method", opts.method, "pieri (default) or oracle")
      ->check(CLI::IsMember({"pieri", "oracle"}));
  expand_cmd->add_option("--census", opts.census,
                         "Print the case signatures of the intermediates reaching this v");
  expand_cmd->add_option("--n2", opts.n2_text, "n2 for --census (default max(|w|, k))");
  format_option(expand_cmd);

  auto *classify_cmd = app.add_subcommand("classify", "Case signature of a Pieri chain");
  classify_cmd->add_option("--w", opts.w, "Base permutation")->required();
  classify_cmd->add_option("--k", opts.k, "k")->required();
  classify_cmd->add_option("--steps", opts.steps, "Steps, e.g. \"(1,3)(2,4)\"")->required();
  classify_cmd->add_option("--n2", opts.n2_text, "n2 (default max(|w|, k))");
  format_option(classify_cmd);

  auto *scan_cmd = app.add_subcommand("scan", "Exhaustive bound scans");
  scan_cmd->require_subcommand(1);
  std::string scan_kind;
  for (const char *kind : {"conjecture", "theorem1", "theorem2", "cell"}) {
    auto *sub = scan_cmd->add_subcommand(kind);
    sub->callback([&scan_kind, kind] { scan_kind = kind; });
    sub->add_option("--out", opts.out_path, "Write the JSON report here");
    sub->add_option("--format", opts.format, "stdout format when --out is absent")
        ->default_str("json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", opts.workers, "Worker threads (0: all cores)");
    sub->add_flag("-v,--verbose", opts.verbose, "Progress on stderr");
    if (std::string_view(kind) == "cell") {
      sub->add_option("--w", opts.w, "Permutation")->required();
      sub->add_option("--lambda", opts.lambda, "Two-row partition")->required();
      sub->add_option("--k", opts.k, "k")->required();
      continue;
    }
    sub->add_option("--n2", opts.n2_text, "n2 or range A..B")->required();
    sub->add_option("--m1-max", opts.m1_max, "Largest m1");
    sub->add_option("--filter", opts.filter, "all or antidominant_tail");
    if (std::string_view(kind) == "conjecture") {
      sub->add_option("--k", opts.k_text, "k or range A..B (default all)");
      sub->add_flag("--k-all", opts.k_all, "Every k in [2, n2]");
    }
    if (std::string_view(kind) == "theorem2") {
      sub->add_option("--k", opts.k_text, "k for a single cell");
      sub->add_option("--lambda", opts.lambda, "lambda for a single cell");
    }
  }

  bool scan_format_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!scan_kind.empty())
      scan_format_given = scan_cmd->get_subcommand(scan_kind)->count("--format") > 0;
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!scan_kind.empty() && !scan_format_given)
    opts.format = "json";

  try {
    CacheSession cache(err);
    if (app.got_subcommand(schubert_cmd))
      return cmd_schubert(opts, out);
    if (app.got_subcommand(schur_cmd))
      return cmd_schur(opts, out);
    if (app.got_subcommand(pieri_cmd))
      return cmd_pieri(opts, out);
    if (app.got_subcommand(expand_cmd))
      return cmd_expand(opts, out);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(opts, out);
    return cmd_scan(scan_kind, opts, out, err);
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return is_internal(e) ? kFailure : kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace schubert::cli
