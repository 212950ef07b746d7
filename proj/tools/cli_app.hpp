#pragma once

// The `dtm` command line. Kept as a header so tests can drive run_cli()
// in-process against string streams.
//
// Exit codes: 0 normal, 1 mathematical finding or violation, 2 usage or
// input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"

#include "dtm/dtm.hpp"

namespace dtm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

/// Input or usage problem detected after flag parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::shared_ptr<spdlog::logger> logger() {
  static auto log = [] {
    auto l = spdlog::stderr_logger_mt("dtm");
    l->set_pattern("[dtm %l] %v");
    l->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("DTM_LOG")) l->set_level(spdlog::level::from_str(env));
    return l;
  }();
  return log;
}

inline std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  if (dtm::detail::trim_ws(text).empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(dtm::detail::trim_ws(text.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    text.remove_prefix(comma + 1);
  }
}

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto item : split_list(text)) {
    std::int64_t v = 0;
    if (!dtm::detail::parse_index(item, v)) throw UsageError("not an integer: '" + std::string(item) + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct SequenceFlags {
  std::string input;
  std::string values;
  std::int64_t offset = 0;
  bool auto_trim = false;

  void attach(CLI::App& cmd) {
    auto* in = cmd.add_option("--input", input, "sequence file (JSON or '<index> <rational>' lines)");
    auto* vals = cmd.add_option("--seq-values", values, "inline values v1,v2,... (rationals)");
    cmd.add_option("--seq-offset", offset, "index of the first inline value")->needs(vals);
    in->excludes(vals);
    cmd.add_flag("--auto-trim", auto_trim, "drop zero ends instead of rejecting them");
  }

  Sequence load() const {
    const auto trim = auto_trim ? Trim::automatic : Trim::strict;
    try {
      if (!values.empty()) {
        std::vector<Rational> v;
        for (auto item : split_list(values)) v.push_back(Rational::parse(item));
        if (v.empty()) throw UsageError("--seq-values is empty");
        return Sequence(offset, std::move(v), trim);
      }
      if (input.empty()) throw UsageError("one of --input or --seq-values is required");
      return parse_sequence(read_file(input), trim);
    } catch (const ParseError& e) {
      throw UsageError(std::string("parse error: ") + e.what() +
                       (e.line() ? " (line " + std::to_string(e.line()) + ")" : std::string()));
    } catch (const SequenceError& e) {
      throw UsageError(e.what());
    } catch (const RationalFormatError& e) {
      throw UsageError(e.what());
    }
  }
};

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

inline TransformKind require_kind(const std::string& name) {
  const auto k = parse_transform_kind(name);
  if (!k) throw UsageError("unknown kind '" + name + "'");
  return *k;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete maximal transforms and variation checks", "dtm"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string output;
  bool decimal = false;
  auto common = [&](CLI::App& cmd) {
    cmd.add_option("--output", output, "write the result here instead of stdout");
    cmd.add_flag("--decimal", decimal, "add approximate decimal values (marked approx)");
  };

  detail::SequenceFlags seq;

  auto* transform = app.add_subcommand("transform", "tabulate a maximal transform as CSV");
  std::string kind_name = "centered";
  std::int64_t pad = 0;
  seq.attach(*transform);
  common(*transform);
  transform->add_option("--kind", kind_name, "centered | noncentered | noncentered-naive | left | right");
  transform->add_option("--pad", pad, "extra rows on each side of the support")->check(CLI::NonNegativeNumber);

  auto* var = app.add_subcommand("var", "variation and norms of f and of its transforms");
  std::string var_kind;
  detail::SequenceFlags var_seq;
  var_seq.attach(*var);
  common(*var);
  var->add_option("--kind", var_kind, "restrict to one transform kind");

  auto* verify = app.add_subcommand("verify", "run one check and print its JSON report");
  std::string check;
  std::string verify_kind = "noncentered";
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string lemma_seq;
  detail::SequenceFlags verify_seq;
  verify_seq.attach(*verify);
  common(*verify);
  verify->add_option("--check", check,
                     "tanaka | centered-bound | question-b | touch | one-sided | extrema-identity | audit | "
                     "key-inequality | lemma-bounds")
      ->required();
  verify->add_option("--kind", verify_kind, "transform kind for touch and extrema-identity");
  verify->add_option("--n", n, "anchor n (key-inequality, lemma-bounds)");
  verify->add_option("--m", m, "m (key-inequality)");
  verify->add_option("--seq", lemma_seq, "a1,a2,... (lemma-bounds)");

  auto* search = app.add_subcommand("search", "exhaustive or stochastic extremal search");
  std::string mode = "exhaustive";
  std::string objective = "tanaka";
  std::int64_t len = 6;
  std::int64_t vmax = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;
  std::string shard = "0/1";
  unsigned parallel = 1;
  std::string threshold;
  std::string csv_path;
  common(*search);
  search->add_option("--mode", mode, "exhaustive | stochastic");
  search->add_option("--objective", objective, "tanaka | centered-l1 | question-b | lemma-sum");
  auto* len_opt = search->add_option("--len", len, "max support width (lemma-sum: max length, default 5)");
  auto* vmax_opt = search->add_option("--vmax", vmax, "max value (lemma-sum: term range [-vmax,vmax], default 10)");
  search->add_option("--seed", seed, "seed for stochastic mode");
  search->add_option("--budget", budget, "evaluations for stochastic mode");
  search->add_option("--shard", shard, "run shard i of N, as i/N");
  search->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--threshold", threshold, "list every input whose value is >= this rational");
  search->add_option("--csv", csv_path, "write the above-threshold rows as CSV here")->needs("--threshold");

  auto* lemma = app.add_subcommand("lemma-sum", "evaluate the lemma sum and its bounds");
  std::int64_t lemma_n = 0;
  std::string lemma_terms;
  lemma->add_option("--n", lemma_n, "anchor n")->required();
  lemma->add_option("--seq", lemma_terms, "strictly increasing a1,a2,...")->required();
  common(*lemma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto log = detail::logger();
  try {
    if (*transform) {
      const auto f = seq.load();
      const bool naive = kind_name == "noncentered-naive";
      const auto t = naive ? noncentered_transform_naive(f) : compute_transform(f, detail::require_kind(kind_name));
      log->info("transform kind={} width={}", kind_name, f.width());
      detail::Output o(out, output);
      o.stream() << write_transform_csv(t, pad, decimal, naive ? std::string_view(kind_name) : std::string_view());
      return kExitOk;
    }

    if (*var) {
      const auto f = var_seq.load();
      nlohmann::json j;
      j["f"] = sequence_to_json(f);
      j["var"] = total_variation(f).str();
      j["l1"] = lp_norm(f, LpExponent(1)).value.str();
      j["transforms"] = nlohmann::json::object();
      for (auto k : {TransformKind::centered, TransformKind::noncentered, TransformKind::left, TransformKind::right}) {
        if (!var_kind.empty() && detail::require_kind(var_kind) != k) continue;
        const auto v = total_variation_of_transform(compute_transform(f, k));
        j["transforms"][std::string(to_string(k))] = v.str();
        if (decimal) j["transforms_approx"][std::string(to_string(k))] = v.approx();
      }
      detail::Output o(out, output);
      o.stream() << j.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      VerificationReport report;
      if (check == "key-inequality") {
        if (!(m > n && n >= 0)) throw UsageError("key-inequality needs --m > --n >= 0");
        report = check_key_inequality(n, m);
      } else if (check == "lemma-bounds") {
        report = check_lemma_bounds(n, IncreasingIntSeq(detail::parse_int_list(lemma_seq)));
      } else {
        static const std::vector<std::string> sequence_checks{
            "tanaka", "centered-bound", "question-b", "touch", "one-sided", "extrema-identity", "audit"};
        if (std::find(sequence_checks.begin(), sequence_checks.end(), check) == sequence_checks.end()) {
          throw UsageError("unknown check '" + check + "'");
        }
        const auto f = verify_seq.load();
        if (check == "tanaka") report = check_tanaka(f);
        else if (check == "centered-bound") report = check_centered_bound(f);
        else if (check == "question-b") report = check_question_b(f);
        else if (check == "touch") report = check_local_max_touch(f, detail::require_kind(verify_kind));
        else if (check == "one-sided") report = check_one_sided_relation(f);
        else if (check == "extrema-identity") report = check_extrema_variation_identity(f, detail::require_kind(verify_kind));
        else report = contribution_bound_audit(f);
      }
      {
        detail::Output o(out, output);
        o.stream() << to_json(report, decimal).dump() << '\n';
      }
      int code = report.outcome == Outcome::violated ? kExitFinding : kExitOk;
      if (check == "question-b" && report.outcome == Outcome::violated) {
        err << "FINDING: Var(Mf) > Var(f) for " << report.input.dump() << " (ratio " << report.ratio->str() << ")\n";
      }
      if (check == "one-sided" && report.outcome != Outcome::vacuous && !report.details.at("strict").empty()) {
        err << "FINDING: M~f(n) < max(M_Lf(n), M_Rf(n)) at " << report.details.at("strict").size()
            << " point(s), first n=" << report.details.at("strict")[0].at("n") << '\n';
        code = kExitFinding;
      }
      return code;
    }

    if (*search) {
      SearchConfig config;
      if (mode == "exhaustive") config.mode = SearchMode::exhaustive;
      else if (mode == "stochastic") config.mode = SearchMode::stochastic;
      else throw UsageError("unknown mode '" + mode + "'");
      const auto obj = parse_objective(objective);
      if (!obj) throw UsageError("unknown objective '" + objective + "'");
      config.objective = *obj;
      config.support_len_max = len;
      config.value_max = vmax;
      if (config.objective == Objective::lemma_sum) {
        if (len_opt->count() == 0) config.support_len_max = 5;
        if (vmax_opt->count() == 0) config.value_max = 10;
      }
      if (config.support_len_max < 1 || config.value_max < 1) throw UsageError("--len and --vmax must be >= 1");
      config.seed = seed;
      config.budget = budget;
      try {
        config.shard = ShardSpec::parse(shard);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!threshold.empty()) {
        try {
          config.report_threshold = Rational::parse(threshold);
        } catch (const std::exception&) {
          throw UsageError("bad --threshold '" + threshold + "'");
        }
      }
      log->info("search mode={} objective={} len={} vmax={} shard={} parallel={}", mode, objective,
                config.support_len_max, config.value_max, shard, parallel);
      const auto report = run_search(config, parallel);
      log->info("examined {} inputs", report.count_examined);
      {
        detail::Output o(out, output);
        o.stream() << to_json(report, decimal).dump() << '\n';
      }
      if (!csv_path.empty()) {
        detail::Output csv(out, csv_path);
        csv.stream() << above_threshold_csv(report);
      }
      for (const auto& v : report.violations) {
        err << (v.check_name == "question-b" ? "FINDING: " : "VIOLATION: ") << v.check_name << ' ' << v.input.dump()
            << " ratio " << (v.ratio ? v.ratio->str() : "null") << '\n';
      }
      return report.violations.empty() ? kExitOk : kExitFinding;
    }

    if (*lemma) {
      const IncreasingIntSeq a(detail::parse_int_list(lemma_terms));
      const auto report = check_lemma_bounds(lemma_n, a);
      const auto& d = report.details;
      detail::Output o(out, output);
      auto& s = o.stream();
      const Rational value = report.ratio.value_or(Rational());
      s << "lemma_sum " << value.str() << '\n';
      if (decimal) s << "lemma_sum_approx " << value.approx() << '\n';
      s << "outcome " << to_string(report.outcome) << '\n';
      if (report.outcome == Outcome::vacuous) {
        s << "bound 4/3: holds\n";
        s << "bound 388/315: " << (a.gaps_at_least_two() ? "holds" : "not applicable") << '\n';
        return kExitOk;
      }
      s << "bound 4/3: " << d.at("bound_4_3").get<std::string>() << '\n';
      s << "bound 388/315: " << d.at("bound_388_315").get<std::string>() << '\n';
      return report.outcome == Outcome::violated ? kExitFinding : kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dtm::cli
