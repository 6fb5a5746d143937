#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "taglinegen/classification.hpp"
#include "taglinegen/errors.hpp"
#include "taglinegen/eval_metrics.hpp"
#include "taglinegen/ingest.hpp"
#include "taglinegen/link_triangulation.hpp"
#include "taglinegen/occupation.hpp"
#include "taglinegen/pipeline.hpp"
#include "taglinegen/selection.hpp"

namespace {

using namespace taglinegen;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

// Every flag is overridable through TAGLINEGEN_<FLAG> in the environment.
std::string env_name(const std::string& flag) {
  std::string name = "TAGLINEGEN_";
  for (char c : flag) name.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  return name;
}

CLI::Option* add_flag_option(CLI::App& app, const std::string& flag, auto& target,
                             const std::string& help) {
  return app.add_option("--" + flag, target, help)->envname(env_name(flag));
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write output file: " + path);
  return out;
}

struct CommonOptions {
  PipelineConfig config;
  std::string profiles_path;
  std::string lexicon_path;
  std::string kb_path;
  std::string templates_path;
  std::string out_path;
  std::string report_path;
  int threads = 1;
  double min_readability = -1.0;  // negative means unset

  void finish() {
    if (min_readability >= 0.0) config.min_readability = min_readability;
    validate_config(config);
  }
  std::optional<std::string> templates() const {
    return templates_path.empty() ? std::nullopt : std::optional<std::string>(templates_path);
  }
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
  add_flag_option(cmd, "max-chars", opts.config.max_chars,
                  "Tagline character budget (default 70)");
  add_flag_option(cmd, "expert-fraction", opts.config.expert_fraction,
                  "Top fraction of users kept as experts (default 0.30)");
  add_flag_option(cmd, "percentile", opts.config.percentile,
                  "Classification split percentile (default 50)");
  add_flag_option(cmd, "min-readability", opts.min_readability,
                  "Exclude candidates below this Flesch score (off by default)");
  add_flag_option(cmd, "threads", opts.threads, "Worker threads (default 1)");
}

nlohmann::json candidate_record(const Candidate& c, const std::string& screen_name) {
  nlohmann::json record = {
      {"user_id", c.user_id},
      {"screen_name", screen_name},
      {"text", c.text},
      {"method", std::string(method_name(c.method))},
      {"char_length", c.char_length},
  };
  if (c.readability) record["readability"] = *c.readability;
  if (c.score) record["score"] = *c.score;
  return record;
}

int run_pipeline_cmd(const CommonOptions& opts) {
  PipelineInputs inputs;
  inputs.profiles_path = opts.profiles_path;
  inputs.lexicon_path = opts.lexicon_path;
  inputs.kb_path = opts.kb_path;
  inputs.templates_path = opts.templates();
  inputs.out_path = opts.out_path;
  inputs.threads = opts.threads;
  inputs.diagnostics = &std::cerr;
  PipelineReport report = run_pipeline(opts.config, inputs);
  if (!opts.report_path.empty()) {
    std::ofstream out = open_output(opts.report_path);
    write_report(report, out);
  } else {
    write_report(report, std::cerr);
  }
  return kExitOk;
}

int run_generate_cmd(const CommonOptions& opts, const std::string& method_filter) {
  std::vector<UserProfile> experts =
      select_experts(load_profiles(opts.profiles_path), opts.config.expert_fraction);
  bool want_occupation = method_filter == "all" || method_filter == "occupation_pattern";
  bool want_kb = (method_filter == "all" || method_filter == "link_triangulation") &&
                 !opts.kb_path.empty();

  std::optional<OccupationLexicon> lexicon;
  if (want_occupation) lexicon.emplace(load_lexicon(opts.lexicon_path));
  LinkIndex index;
  if (want_kb) index = build_link_index(load_kb(opts.kb_path));

  std::ofstream out = open_output(opts.out_path);
  for (const UserProfile& expert : experts) {
    if (want_occupation) {
      for (const Candidate& c :
           generate_occupation_candidates(expert, *lexicon, opts.config.max_chars)) {
        out << candidate_record(c, expert.screen_name).dump() << '\n';
      }
    }
    if (want_kb) {
      Resolution res = resolve_identity(expert, index);
      if (res.ambiguous) {
        std::cerr << "ambiguous identity: user_id=" << expert.user_id
                  << " url=" << expert.personal_url.value_or("")
                  << " matches=" << res.match_count << '\n';
      } else if (res.page) {
        for (const Candidate& c : kb_candidates_from_page(expert, *res.page, opts.config.max_chars)) {
          out << candidate_record(c, expert.screen_name).dump() << '\n';
        }
      }
    }
  }
  return kExitOk;
}

int run_select_cmd(const CommonOptions& opts, const std::string& candidates_path) {
  std::vector<std::string> screen_names;
  std::vector<Candidate> candidates = load_candidates(candidates_path, &screen_names);
  if (candidates.empty()) throw EmptyCorpus("no candidates in " + candidates_path);
  for (const Candidate& c : candidates) {
    if (c.char_length > opts.config.max_chars)
      throw DomainError("candidate for user " + c.user_id + " exceeds max-chars");
  }
  TermStats stats = build_term_stats(candidates);

  // Group by user, keeping first-seen order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<Candidate>> by_user;
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string& id = candidates[i].user_id;
    if (by_user.find(id) == by_user.end()) order.push_back(id);
    if (!screen_names[i].empty()) names[id] = screen_names[i];
    by_user[id].push_back(candidates[i]);
  }

  std::ofstream out = open_output(opts.out_path);
  for (const std::string& id : order) {
    Tagline t = select_final(by_user[id], stats, opts.config.max_chars,
                             opts.config.min_readability);
    nlohmann::json record = {
        {"user_id", t.user_id},      {"screen_name", names.count(id) ? names[id] : ""},
        {"tagline", t.text},         {"method", std::string(method_name(t.method))},
        {"score", nullptr},
    };
    if (t.score) record["score"] = *t.score;
    out << record.dump() << '\n';
  }
  return kExitOk;
}

int run_classify_cmd(const CommonOptions& opts) {
  std::vector<UserProfile> experts =
      select_experts(load_profiles(opts.profiles_path), opts.config.expert_fraction);
  const TemplateTable table =
      opts.templates() ? TemplateTable::load(*opts.templates()) : TemplateTable::defaults();

  MetricMaxima maxima = batch_maxima(experts);
  std::vector<MetricVector> vectors;
  vectors.reserve(experts.size());
  for (const UserProfile& expert : experts) vectors.push_back(compute_metrics(expert, maxima));
  MetricThresholds thresholds = compute_thresholds(vectors, opts.config.percentile);

  std::ofstream out = open_output(opts.out_path);
  for (std::size_t i = 0; i < experts.size(); ++i) {
    UserClass cls = classify(vectors[i], thresholds);
    Candidate tagline = default_tagline(cls, table, opts.config.max_chars);
    nlohmann::json record = {
        {"user_id", experts[i].user_id},
        {"screen_name", experts[i].screen_name},
        {"tagline", tagline.text},
        {"method", std::string(method_name(Method::user_classification))},
        {"score", nullptr},
        {"class", cls.key()},
    };
    out << record.dump() << '\n';
  }
  return kExitOk;
}

int run_evaluate_cmd(const std::string& generation_path, const std::string& selection_path) {
  if (!generation_path.empty()) {
    std::vector<GenerationRow> rows = load_generation_rows(generation_path);
    for (const std::string& question : {std::string("Q1"), std::string("Q2")}) {
      bool present = false;
      for (const GenerationRow& row : rows) {
        if (row.question == question) {
          present = true;
          break;
        }
      }
      if (!present) continue;
      std::vector<GenerationJudgment> items = group_generation(rows, question);
      std::vector<std::vector<int>> ratings;
      ratings.reserve(items.size());
      for (const GenerationJudgment& item : items) ratings.push_back(item.ratings);
      std::cout << question << "_majority_good_pct: " << majority_good_pct(items) << '\n';
      std::cout << question << "_good_pct: " << good_pct(items) << '\n';
      std::cout << question << "_fleiss_kappa: " << fleiss_kappa(ratings, 3) << '\n';
    }
    auto q3 = q3_distribution(rows);
    if (!q3.empty()) {
      std::cout << "Q3_distribution:";
      for (const auto& [answer, count] : q3) std::cout << ' ' << answer << '=' << count;
      std::cout << '\n';
    }
  }

  if (!selection_path.empty()) {
    std::vector<SelectionJudgment> items = load_selection_judgments(selection_path);
    std::cout << "selection_majority_agreement_pct: " << selection_majority_agreement(items)
              << '\n';
    std::vector<std::vector<int>> choices;
    choices.reserve(items.size());
    for (const SelectionJudgment& item : items) choices.push_back(item.judge_choices);
    std::cout << "selection_fleiss_kappa: " << fleiss_kappa(choices, 3) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expertise tagline generation for social-media experts"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string method_filter = "all";
  std::string candidates_path;
  std::string generation_path;
  std::string selection_path;

  CLI::App* pipeline_cmd =
      app.add_subcommand("pipeline", "Generate, select, and write one tagline per expert");
  add_common(*pipeline_cmd, opts);
  add_flag_option(*pipeline_cmd, "profiles", opts.profiles_path, "Profiles JSONL file")
      ->required();
  add_flag_option(*pipeline_cmd, "lexicon", opts.lexicon_path, "Occupation lexicon file")
      ->required();
  add_flag_option(*pipeline_cmd, "kb", opts.kb_path, "KB snapshot JSONL file")->required();
  add_flag_option(*pipeline_cmd, "templates", opts.templates_path, "Class template table file");
  add_flag_option(*pipeline_cmd, "out", opts.out_path, "Output taglines JSONL file")->required();
  add_flag_option(*pipeline_cmd, "report", opts.report_path,
                  "Report file (defaults to stderr)");

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write per-method candidates without selecting");
  add_common(*generate_cmd, opts);
  add_flag_option(*generate_cmd, "profiles", opts.profiles_path, "Profiles JSONL file")
      ->required();
  add_flag_option(*generate_cmd, "lexicon", opts.lexicon_path, "Occupation lexicon file");
  add_flag_option(*generate_cmd, "kb", opts.kb_path, "KB snapshot JSONL file");
  add_flag_option(*generate_cmd, "out", opts.out_path, "Output candidates JSONL file")
      ->required();
  add_flag_option(*generate_cmd, "method", method_filter,
                  "occupation_pattern, link_triangulation, or all");

  CLI::App* select_cmd =
      app.add_subcommand("select", "Select one tagline per user from a candidates file");
  add_common(*select_cmd, opts);
  add_flag_option(*select_cmd, "candidates", candidates_path, "Candidates JSONL file")
      ->required();
  add_flag_option(*select_cmd, "out", opts.out_path, "Output taglines JSONL file")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Write classification default taglines only");
  add_common(*classify_cmd, opts);
  add_flag_option(*classify_cmd, "profiles", opts.profiles_path, "Profiles JSONL file")
      ->required();
  add_flag_option(*classify_cmd, "templates", opts.templates_path, "Class template table file");
  add_flag_option(*classify_cmd, "out", opts.out_path, "Output taglines JSONL file")->required();

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Compute study statistics from judgment CSV files");
  add_flag_option(*evaluate_cmd, "generation", generation_path, "Generation judgments CSV");
  add_flag_option(*evaluate_cmd, "selection", selection_path, "Selection judgments CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    opts.finish();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  }
  if (evaluate_cmd->parsed() && generation_path.empty() && selection_path.empty()) {
    std::cerr << "evaluate: needs --generation and/or --selection\n";
    return kExitUsageError;
  }

  try {
    if (pipeline_cmd->parsed()) return run_pipeline_cmd(opts);
    if (generate_cmd->parsed()) {
      if (method_filter != "all" && method_filter != "occupation_pattern" &&
          method_filter != "link_triangulation") {
        std::cerr << "unknown --method: " << method_filter << '\n';
        return kExitUsageError;
      }
      if ((method_filter == "all" || method_filter == "occupation_pattern") &&
          opts.lexicon_path.empty()) {
        std::cerr << "generate: --lexicon is required for occupation_pattern\n";
        return kExitUsageError;
      }
      if (method_filter == "link_triangulation" && opts.kb_path.empty()) {
        std::cerr << "generate: --kb is required for link_triangulation\n";
        return kExitUsageError;
      }
      return run_generate_cmd(opts, method_filter);
    }
    if (select_cmd->parsed()) return run_select_cmd(opts, candidates_path);
    if (classify_cmd->parsed()) return run_classify_cmd(opts);
    if (evaluate_cmd->parsed()) return run_evaluate_cmd(generation_path, selection_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsageError;
}
