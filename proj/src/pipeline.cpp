#include "taglinegen/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "taglinegen/classification.hpp"
#include "taglinegen/errors.hpp"
#include "taglinegen/ingest.hpp"
#include "taglinegen/link_triangulation.hpp"
#include "taglinegen/occupation.hpp"
#include "taglinegen/selection.hpp"

namespace taglinegen {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Chunked fan-out over [0, n). Chunk boundaries depend only on n and the
// thread count, and workers write disjoint slots, so results are identical
// for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  std::size_t chunk = (n + worker_count - 1) / worker_count;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < worker_count; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

nlohmann::json report_json(const PipelineReport& r) {
  return {
      {"experts_total", r.experts_total},
      {"candidates_occupation_pattern", r.candidates_occupation_pattern},
      {"candidates_link_triangulation", r.candidates_link_triangulation},
      {"users_occupation_pattern", r.users_occupation_pattern},
      {"users_link_triangulation", r.users_link_triangulation},
      {"users_fallback", r.users_fallback},
      {"ambiguous_identities", r.ambiguous_identities},
      {"malformed_links_skipped", r.malformed_links_skipped},
      {"load_ms", r.load_ms},
      {"generate_ms", r.generate_ms},
      {"stats_ms", r.stats_ms},
      {"select_ms", r.select_ms},
      {"write_ms", r.write_ms},
      {"total_ms", r.total_ms},
  };
}

}  // namespace

void write_taglines(const std::vector<UserProfile>& experts, const std::vector<Tagline>& taglines,
                    std::ostream& out) {
  for (std::size_t i = 0; i < taglines.size(); ++i) {
    nlohmann::json record = {
        {"user_id", taglines[i].user_id},
        {"screen_name", i < experts.size() ? experts[i].screen_name : ""},
        {"tagline", taglines[i].text},
        {"method", std::string(method_name(taglines[i].method))},
        {"score", nullptr},
    };
    if (taglines[i].score) record["score"] = *taglines[i].score;
    out << record.dump() << '\n';
  }
}

void write_report(const PipelineReport& report, std::ostream& out) {
  nlohmann::json data = report_json(report);
  for (const auto& [key, value] : data.items()) {
    out << key << ": " << value.dump() << '\n';
  }
  out << data.dump() << '\n';
}

PipelineReport run_pipeline(const PipelineConfig& config, const PipelineInputs& inputs) {
  validate_config(config);
  PipelineReport report;
  const auto start = Clock::now();

  auto stage = Clock::now();
  std::vector<UserProfile> profiles = load_profiles(inputs.profiles_path);
  OccupationLexicon lexicon = load_lexicon(inputs.lexicon_path);
  LinkIndex index = build_link_index(load_kb(inputs.kb_path));
  const TemplateTable templates = inputs.templates_path ? TemplateTable::load(*inputs.templates_path)
                                                        : TemplateTable::defaults();
  std::vector<UserProfile> experts = select_experts(std::move(profiles), config.expert_fraction);
  report.experts_total = experts.size();
  report.malformed_links_skipped = index.skipped_links();
  report.load_ms = elapsed_ms(stage);

  // Generation fan-out; one candidate pool per expert, diagnostics buffered
  // per expert so their order never depends on scheduling.
  stage = Clock::now();
  const std::size_t n = experts.size();
  std::vector<std::vector<Candidate>> pools(n);
  std::vector<std::string> diag(n);
  std::vector<unsigned char> ambiguous(n, 0);
  parallel_for(n, inputs.threads, [&](std::size_t i) {
    const UserProfile& expert = experts[i];
    pools[i] = generate_occupation_candidates(expert, lexicon, config.max_chars);
    Resolution res = resolve_identity(expert, index);
    if (res.ambiguous) {
      ambiguous[i] = 1;
      diag[i] = "ambiguous identity: user_id=" + expert.user_id + " url=" +
                expert.personal_url.value_or("") + " matches=" + std::to_string(res.match_count);
    } else if (res.page) {
      std::vector<Candidate> kb = kb_candidates_from_page(expert, *res.page, config.max_chars);
      pools[i].insert(pools[i].end(), std::make_move_iterator(kb.begin()),
                      std::make_move_iterator(kb.end()));
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (ambiguous[i]) ++report.ambiguous_identities;
    if (inputs.diagnostics && !diag[i].empty()) *inputs.diagnostics << diag[i] << '\n';
    for (const Candidate& c : pools[i]) {
      if (c.method == Method::occupation_pattern) ++report.candidates_occupation_pattern;
      else ++report.candidates_link_triangulation;
    }
  }
  report.generate_ms = elapsed_ms(stage);

  // Global barrier: term stats over every generated candidate of every
  // user. The corpus never includes classification defaults.
  stage = Clock::now();
  std::vector<Candidate> corpus;
  for (const auto& pool : pools) corpus.insert(corpus.end(), pool.begin(), pool.end());
  TermStats stats;
  if (!corpus.empty()) stats = build_term_stats(corpus);
  report.stats_ms = elapsed_ms(stage);

  // Selection fan-out, classification defaults for empty pools.
  stage = Clock::now();
  bool any_fallback = false;
  for (const auto& pool : pools) {
    if (pool.empty()) any_fallback = true;
  }
  MetricThresholds thresholds;
  MetricMaxima maxima;
  if (any_fallback) {
    maxima = batch_maxima(experts);
    std::vector<MetricVector> vectors;
    vectors.reserve(n);
    for (const UserProfile& expert : experts) vectors.push_back(compute_metrics(expert, maxima));
    thresholds = compute_thresholds(vectors, config.percentile);
  }
  std::vector<Tagline> taglines(n);
  parallel_for(n, inputs.threads, [&](std::size_t i) {
    if (pools[i].empty()) {
      UserClass cls = classify(compute_metrics(experts[i], maxima), thresholds);
      Candidate fallback = default_tagline(cls, templates, config.max_chars);
      taglines[i] = {experts[i].user_id, fallback.text, Method::user_classification, std::nullopt};
    } else {
      taglines[i] = select_final(pools[i], stats, config.max_chars, config.min_readability);
    }
  });
  for (const Tagline& t : taglines) {
    switch (t.method) {
      case Method::occupation_pattern: ++report.users_occupation_pattern; break;
      case Method::link_triangulation: ++report.users_link_triangulation; break;
      case Method::user_classification: ++report.users_fallback; break;
    }
  }
  report.select_ms = elapsed_ms(stage);

  stage = Clock::now();
  std::ofstream out(inputs.out_path, std::ios::binary);
  if (!out) throw IoError("cannot write output file: " + inputs.out_path);
  write_taglines(experts, taglines, out);
  out.flush();
  if (!out) throw IoError("failed writing output file: " + inputs.out_path);
  report.write_ms = elapsed_ms(stage);

  report.total_ms = elapsed_ms(start);
  return report;
}

}  // namespace taglinegen
