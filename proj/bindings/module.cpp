#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <sstream>

#include "taglinegen/classification.hpp"
#include "taglinegen/errors.hpp"
#include "taglinegen/eval_metrics.hpp"
#include "taglinegen/ingest.hpp"
#include "taglinegen/lexicon.hpp"
#include "taglinegen/link_triangulation.hpp"
#include "taglinegen/occupation.hpp"
#include "taglinegen/pipeline.hpp"
#include "taglinegen/selection.hpp"
#include "taglinegen/text_util.hpp"

namespace py = pybind11;
using namespace taglinegen;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Expertise tagline generation: occupation-pattern extraction, "
            "link triangulation against a knowledge base, user classification, "
            "and tf-idf based final selection.";

  py::register_exception<Error>(m, "TaglineError");

  py::enum_<Method>(m, "Method")
      .value("occupation_pattern", Method::occupation_pattern)
      .value("link_triangulation", Method::link_triangulation)
      .value("user_classification", Method::user_classification);

  py::class_<UserProfile>(m, "UserProfile")
      .def(py::init([](std::string user_id, std::string screen_name, std::string bio,
                       std::optional<std::string> url, std::int64_t tweets_count,
                       std::int64_t mentions_count, std::int64_t retweeted_count,
                       double expert_score) {
             UserProfile p{std::move(user_id), std::move(screen_name), std::move(bio),
                           std::move(url),     tweets_count,           mentions_count,
                           retweeted_count,    expert_score};
             validate_profile(p);
             return p;
           }),
           py::arg("user_id"), py::arg("screen_name") = "", py::arg("bio") = "",
           py::arg("url") = std::nullopt, py::arg("tweets_count") = 0,
           py::arg("mentions_count") = 0, py::arg("retweeted_count") = 0,
           py::arg("expert_score") = 0.0)
      .def_readwrite("user_id", &UserProfile::user_id)
      .def_readwrite("screen_name", &UserProfile::screen_name)
      .def_readwrite("bio", &UserProfile::bio)
      .def_readwrite("url", &UserProfile::personal_url)
      .def_readwrite("tweets_count", &UserProfile::tweets_count)
      .def_readwrite("mentions_count", &UserProfile::mentions_count)
      .def_readwrite("retweeted_count", &UserProfile::retweeted_count)
      .def_readwrite("expert_score", &UserProfile::expert_score)
      .def("__repr__", [](const UserProfile& p) {
        return "UserProfile(user_id='" + p.user_id + "')";
      });

  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init([](int max_chars, double expert_fraction, double percentile,
                       std::optional<double> min_readability) {
             PipelineConfig c{max_chars, expert_fraction, percentile, min_readability};
             validate_config(c);
             return c;
           }),
           py::arg("max_chars") = 70, py::arg("expert_fraction") = 0.30,
           py::arg("percentile") = 50.0, py::arg("min_readability") = std::nullopt)
      .def_readwrite("max_chars", &PipelineConfig::max_chars)
      .def_readwrite("expert_fraction", &PipelineConfig::expert_fraction)
      .def_readwrite("percentile", &PipelineConfig::percentile)
      .def_readwrite("min_readability", &PipelineConfig::min_readability);

  py::class_<Candidate>(m, "Candidate")
      .def_readonly("user_id", &Candidate::user_id)
      .def_readonly("text", &Candidate::text)
      .def_readonly("method", &Candidate::method)
      .def_readonly("char_length", &Candidate::char_length)
      .def_readonly("readability", &Candidate::readability)
      .def_readonly("score", &Candidate::score)
      .def("__repr__", [](const Candidate& c) {
        return "Candidate(text='" + c.text + "', method='" +
               std::string(method_name(c.method)) + "')";
      });

  py::class_<Tagline>(m, "Tagline")
      .def_readonly("user_id", &Tagline::user_id)
      .def_readonly("text", &Tagline::text)
      .def_readonly("method", &Tagline::method)
      .def_readonly("score", &Tagline::score)
      .def("__repr__",
           [](const Tagline& t) { return "Tagline(text='" + t.text + "')"; });

  py::class_<NGram>(m, "NGram")
      .def_readonly("text", &NGram::text)
      .def_readonly("position", &NGram::position);

  py::class_<OccupationLexicon>(m, "OccupationLexicon")
      .def(py::init([](const std::vector<std::string>& titles) {
             return OccupationLexicon(std::set<std::string>(titles.begin(), titles.end()));
           }),
           py::arg("titles"))
      .def_property_readonly("titles", &OccupationLexicon::titles)
      .def("__len__", &OccupationLexicon::size)
      .def("__contains__", &OccupationLexicon::contains);

  py::class_<KbPage>(m, "KbPage")
      .def(py::init([](std::string title, std::vector<std::string> external_links,
                       std::optional<std::string> infobox_occupation,
                       std::optional<std::string> first_sentence) {
             return KbPage{std::move(title), std::move(external_links),
                           std::move(infobox_occupation), std::move(first_sentence)};
           }),
           py::arg("title"), py::arg("external_links") = std::vector<std::string>{},
           py::arg("infobox_occupation") = std::nullopt,
           py::arg("first_sentence") = std::nullopt)
      .def_readwrite("title", &KbPage::title)
      .def_readwrite("external_links", &KbPage::external_links)
      .def_readwrite("infobox_occupation", &KbPage::infobox_occupation)
      .def_readwrite("first_sentence", &KbPage::first_sentence);

  py::class_<LinkIndex>(m, "LinkIndex")
      .def_property_readonly("pages", &LinkIndex::pages)
      .def_property_readonly("skipped_links", &LinkIndex::skipped_links)
      .def("__len__", &LinkIndex::key_count);

  py::class_<MetricVector>(m, "MetricVector")
      .def_readonly("popularity", &MetricVector::popularity)
      .def_readonly("activity", &MetricVector::activity)
      .def_readonly("diffusion", &MetricVector::diffusion);

  py::class_<MetricThresholds>(m, "MetricThresholds")
      .def_readonly("popularity", &MetricThresholds::popularity)
      .def_readonly("activity", &MetricThresholds::activity)
      .def_readonly("diffusion", &MetricThresholds::diffusion);

  py::class_<UserClass>(m, "UserClass")
      .def_property_readonly("template_id", &UserClass::template_id)
      .def_property_readonly("key", &UserClass::key)
      .def_static("from_template_id", &UserClass::from_template_id);

  py::class_<TemplateTable>(m, "TemplateTable")
      .def_static("defaults", &TemplateTable::defaults, py::return_value_policy::reference)
      .def_static("load", &TemplateTable::load)
      .def("text_for", &TemplateTable::text_for);

  py::class_<TermStats>(m, "TermStats")
      .def_readonly("total_documents", &TermStats::total_documents)
      .def_readonly("df", &TermStats::df);

  py::class_<ScoredCandidate>(m, "ScoredCandidate")
      .def_readonly("candidate", &ScoredCandidate::candidate)
      .def_readonly("raw_score", &ScoredCandidate::raw_score)
      .def_readonly("final_score", &ScoredCandidate::final_score)
      .def_readonly("word_count", &ScoredCandidate::word_count);

  py::class_<PipelineReport>(m, "PipelineReport")
      .def_readonly("experts_total", &PipelineReport::experts_total)
      .def_readonly("candidates_occupation_pattern",
                    &PipelineReport::candidates_occupation_pattern)
      .def_readonly("candidates_link_triangulation",
                    &PipelineReport::candidates_link_triangulation)
      .def_readonly("users_occupation_pattern", &PipelineReport::users_occupation_pattern)
      .def_readonly("users_link_triangulation", &PipelineReport::users_link_triangulation)
      .def_readonly("users_fallback", &PipelineReport::users_fallback)
      .def_readonly("ambiguous_identities", &PipelineReport::ambiguous_identities)
      .def_readonly("malformed_links_skipped", &PipelineReport::malformed_links_skipped)
      .def_readonly("total_ms", &PipelineReport::total_ms)
      .def("__repr__", [](const PipelineReport& r) {
        std::ostringstream out;
        write_report(r, out);
        return out.str();
      });

  // Ingest.
  m.def("load_profiles", &load_profiles, py::arg("path"));
  m.def("select_experts", &select_experts, py::arg("profiles"), py::arg("fraction"));
  m.def("load_lexicon", &load_lexicon, py::arg("path"));
  m.def("load_kb", &load_kb, py::arg("path"));

  // Occupation-pattern extraction.
  m.def("spot_occupations", &spot_occupations, py::arg("bio"), py::arg("lexicon"));
  m.def("preprocess_bio", &preprocess_bio, py::arg("bio"));
  m.def("tokenize_bio", &tokenize_bio, py::arg("text"));
  m.def("filter_ngrams", &filter_ngrams, py::arg("ngrams"), py::arg("lexicon"));
  m.def("maximal_windows", &maximal_windows, py::arg("fragments"), py::arg("max_chars"));
  m.def("generate_occupation_candidates", &generate_occupation_candidates, py::arg("profile"),
        py::arg("lexicon"), py::arg("max_chars") = 70);

  // Link triangulation.
  m.def("normalize_url", &normalize_url, py::arg("url"));
  m.def("build_link_index", &build_link_index, py::arg("pages"));
  m.def(
      "resolve_identity",
      [](const UserProfile& p, const LinkIndex& index) {
        Resolution res = resolve_identity(p, index);
        return py::make_tuple(res.page ? py::cast(*res.page) : py::none(), res.ambiguous);
      },
      py::arg("profile"), py::arg("index"),
      "Returns (page or None, ambiguous).");
  m.def("parse_infobox_occupation", &parse_infobox_occupation, py::arg("raw"));
  m.def("extract_first_sentence_occupation", &extract_first_sentence_occupation,
        py::arg("sentence"));
  m.def("generate_kb_candidates", &generate_kb_candidates, py::arg("profile"), py::arg("index"),
        py::arg("max_chars") = 70);

  // User classification.
  m.def("normalize_metric", &normalize_metric, py::arg("value"), py::arg("max_value"));
  m.def("batch_maxima", &batch_maxima, py::arg("profiles"));
  m.def("compute_metrics", &compute_metrics, py::arg("profile"), py::arg("maxima"));
  m.def("compute_thresholds", &compute_thresholds, py::arg("vectors"), py::arg("percentile"));
  m.def("classify", &classify, py::arg("vector"), py::arg("thresholds"));
  m.def(
      "default_tagline",
      [](const UserClass& c, int max_chars, std::optional<std::string> templates_path) {
        const TemplateTable table =
            templates_path ? TemplateTable::load(*templates_path) : TemplateTable::defaults();
        return default_tagline(c, table, max_chars);
      },
      py::arg("user_class"), py::arg("max_chars") = 70, py::arg("templates_path") = std::nullopt);

  // Selection.
  m.def("count_syllables", &count_syllables, py::arg("word"));
  m.def("flesch_score", &flesch_score, py::arg("text"));
  m.def("term_tokens", &term_tokens, py::arg("text"));
  m.def("build_term_stats", &build_term_stats, py::arg("candidates"));
  m.def("score_candidate", &score_candidate, py::arg("candidate"), py::arg("stats"),
        py::arg("max_chars") = 70);
  m.def("select_final", &select_final, py::arg("candidates"), py::arg("stats"),
        py::arg("max_chars") = 70, py::arg("min_readability") = std::nullopt);

  // Evaluation metrics.
  m.def(
      "majority_good_pct",
      [](const std::vector<std::vector<int>>& ratings) {
        std::vector<GenerationJudgment> items;
        for (std::size_t i = 0; i < ratings.size(); ++i)
          items.push_back({"item" + std::to_string(i), ratings[i]});
        return majority_good_pct(items);
      },
      py::arg("ratings"));
  m.def(
      "good_pct",
      [](const std::vector<std::vector<int>>& ratings) {
        std::vector<GenerationJudgment> items;
        for (std::size_t i = 0; i < ratings.size(); ++i)
          items.push_back({"item" + std::to_string(i), ratings[i]});
        return good_pct(items);
      },
      py::arg("ratings"));
  m.def("fleiss_kappa", &fleiss_kappa, py::arg("ratings"), py::arg("categories"));
  m.def(
      "selection_majority_agreement",
      [](const std::vector<std::pair<int, std::vector<int>>>& items) {
        std::vector<SelectionJudgment> judged;
        for (std::size_t i = 0; i < items.size(); ++i)
          judged.push_back({"item" + std::to_string(i), items[i].first, items[i].second});
        return selection_majority_agreement(judged);
      },
      py::arg("items"), "items: list of (algorithmic_choice, judge_choices).");

  // Pipeline.
  m.def(
      "run_pipeline",
      [](const PipelineConfig& config, const std::string& profiles, const std::string& lexicon,
         const std::string& kb, const std::string& out,
         std::optional<std::string> templates, int threads) {
        PipelineInputs inputs;
        inputs.profiles_path = profiles;
        inputs.lexicon_path = lexicon;
        inputs.kb_path = kb;
        inputs.out_path = out;
        inputs.templates_path = std::move(templates);
        inputs.threads = threads;
        return run_pipeline(config, inputs);
      },
      py::arg("config"), py::arg("profiles"), py::arg("lexicon"), py::arg("kb"), py::arg("out"),
      py::arg("templates") = std::nullopt, py::arg("threads") = 1);

  m.def("utf8_length", [](const std::string& s) { return utf8_length(s); }, py::arg("text"));

  m.attr("__version__") = "0.1.0";
}
