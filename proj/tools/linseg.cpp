#include <algorithm>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linseg/errors.hpp"
#include "linseg/evaluation.hpp"
#include "linseg/formats.hpp"
#include "linseg/lexicon.hpp"
#include "linseg/segmenter.hpp"
#include "linseg/significance.hpp"
#include "linseg/trainer.hpp"

namespace fs = std::filesystem;
using namespace linseg;

namespace {

enum ExitCode { kOk = 0, kIoError = 2, kMismatch = 3, kInsufficient = 4 };

struct RunConfig {
  std::string lexicon;
  std::string weights;
  std::size_t word_limit = kDefaultClusteringWordLimit;
  double probability = 0.33;
  std::size_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::string grid;
  std::string output;
};

Lexicon load_configured_lexicon(const RunConfig& cfg) {
  return cfg.lexicon.empty() ? Lexicon::builtin() : Lexicon::load(cfg.lexicon);
}

SegmenterOptions segmenter_options(const RunConfig& cfg) {
  SegmenterOptions opts;
  if (!cfg.weights.empty()) opts.weights = load_weight_config(cfg.weights);
  opts.clustering_word_limit = cfg.word_limit;
  return opts;
}

Document load_document(const fs::path& path) { return ingest_document(read_text_file(path), path.stem().string()); }

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(cfg.output, content);
  }
}

std::string score_line(const Document& doc, const std::vector<Score>& totals) {
  std::string line = "# scores doc " + doc.id() + ":";
  for (const auto& s : totals) line += ' ' + format_score(s);
  return line + '\n';
}

int cmd_segment(const RunConfig& cfg, const std::vector<std::string>& inputs, bool dump_scores) {
  const Lexicon lexicon = load_configured_lexicon(cfg);
  const SegmenterOptions opts = segmenter_options(cfg);
  const long n = static_cast<long>(inputs.size());
  std::vector<std::string> blocks(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const Document doc = load_document(inputs[i]);
      const auto terms = extract_terms(doc, lexicon);
      const DocumentAnalysis analysis = analyze(doc, terms, opts);
      if (dump_scores) blocks[i] = score_line(doc, analysis.totals);
      blocks[i] += format_segmentation(analysis.segmentation) + '\n';
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::string out;
  for (const auto& b : blocks) out += b;
  emit(cfg, out);
  return kOk;
}

int cmd_signify(const RunConfig& cfg, const std::string& input, const std::string& boundaries,
                const SignificanceOptions& sig) {
  const Lexicon lexicon = load_configured_lexicon(cfg);
  const Document doc = load_document(input);
  const auto terms = extract_terms(doc, lexicon);
  Segmentation seg;
  if (boundaries.empty()) {
    seg = segment(doc, terms, segmenter_options(cfg));
  } else {
    const auto entries = load_system_file(boundaries);
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == doc.id(); });
    if (it == entries.end()) throw BoundaryMismatch(boundaries + " has no boundaries for '" + doc.id() + "'");
    seg = Segmentation(doc.id(), doc.paragraph_count(), it->second);
  }
  emit(cfg, format_segmentation(seg) + '\n' + format_assessments(signify(seg, terms, sig)));
  return kOk;
}

int cmd_evaluate(const RunConfig& cfg, const std::vector<std::string>& system_files, const std::string& judgments,
                 ScoreOptions opts) {
  std::vector<NamedSystem> systems;
  for (const auto& path : system_files) systems.push_back({fs::path(path).stem().string(), load_system_file(path)});
  const auto judged = load_judgments(judgments);
  opts.mc = {cfg.probability, cfg.trials, cfg.seed};
  emit(cfg, format_report(score_corpus(systems, judged, opts).rows()));
  return kOk;
}

int cmd_train(const RunConfig& cfg, const std::string& corpus_dir, const std::string& judgments,
              TrainerOptions opts, const std::string& log_path) {
  const Lexicon lexicon = load_configured_lexicon(cfg);
  const TrainerGrid grid = cfg.grid.empty() ? TrainerGrid::defaults() : load_trainer_grid(cfg.grid);
  if (!cfg.weights.empty()) opts.base = load_weight_config(cfg.weights);
  opts.clustering_word_limit = cfg.word_limit;

  std::map<std::string, GoldStandard> gold;
  for (const auto& js : load_judgments(judgments)) gold.emplace(js.doc_id, majority_gold(js));

  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(corpus_dir))
    if (entry.is_regular_file()) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  std::vector<TrainingDocument> corpus;
  for (const auto& path : paths) {
    Document doc = load_document(path);
    const auto it = gold.find(doc.id());
    if (it == gold.end()) throw MissingJudgments(doc.id());
    if (it->second.paragraph_count != doc.paragraph_count())
      throw BoundaryMismatch("'" + doc.id() + "' has " + std::to_string(doc.paragraph_count()) +
                             " paragraphs but its judgments cover " + std::to_string(it->second.paragraph_count));
    auto terms = extract_terms(doc, lexicon);
    corpus.push_back({std::move(doc), std::move(terms), it->second.gaps});
  }

  const TrainingResult result = train_weights(corpus, grid, opts);
  emit(cfg, format_weight_config(result.best));
  if (!log_path.empty()) write_file_atomic(log_path, format_training_log(result));
  return kOk;
}

int cmd_agree(const RunConfig& cfg, const std::string& judgments) {
  ScoreOptions opts;
  opts.agreement = true;
  emit(cfg, format_report(score_corpus({}, load_judgments(judgments), opts).rows()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear topical segmentation, segment significance and evaluation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_lexicon = [&](CLI::App* sub) {
    sub->add_option("--lexicon", cfg.lexicon, "POS table (surface<TAB>CAT lines)")->envname("LINSEG_LEXICON");
  };
  auto add_segmenter = [&](CLI::App* sub) {
    add_lexicon(sub);
    sub->add_option("--weights", cfg.weights, "weight config (kind.field=value lines)");
    sub->add_option("--word-limit", cfg.word_limit, "largest document (words) that gets local-maxima clustering")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "output file (default stdout)"); };

  auto* seg = app.add_subcommand("segment", "find topic boundaries");
  std::vector<std::string> seg_inputs;
  bool dump_scores = false;
  seg->add_option("documents", seg_inputs, "text files")->required();
  seg->add_flag("--dump-scores", dump_scores, "add '# scores' lines with paragraph totals");
  add_segmenter(seg);
  add_output(seg);

  auto* sig = app.add_subcommand("signify", "score segment importance and function");
  std::string sig_input;
  std::string sig_boundaries;
  bool sig_compute = false;
  bool tf_document = false;
  bool coverage_occurrences = false;
  SignificanceOptions sig_opts;
  sig->add_option("document", sig_input, "text file")->required();
  auto* b_opt = sig->add_option("--boundaries", sig_boundaries, "segmentation file");
  auto* c_opt = sig->add_flag("--compute", sig_compute, "segment the document first");
  b_opt->excludes(c_opt);
  sig->add_flag("--tf-document", tf_document, "use document-wide term frequency");
  sig->add_flag("--coverage-occurrences", coverage_occurrences, "harmonic credit per occurrence in the segment");
  sig->add_flag("--summary-per-end", sig_opts.summary_per_end, "allow a summary at each end");
  add_segmenter(sig);
  add_output(sig);

  auto* eval = app.add_subcommand("evaluate", "score segmentations against judges");
  std::vector<std::string> systems;
  std::string judgments;
  ScoreOptions score_opts;
  eval->add_option("--system", systems, "system segmentation file (repeatable)");
  eval->add_option("--judgments", judgments, "judgment file")->required();
  eval->add_flag("--mc", score_opts.monte_carlo, "Monte Carlo baseline");
  eval->add_flag("--hg", score_opts.hypergeometric, "hypergeometric baseline");
  eval->add_flag("--agreement", score_opts.agreement, "Cochran's Q and kappa");
  eval->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();
  eval->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
  eval->add_option("--p", cfg.probability, "Monte Carlo cut probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_output(eval);

  auto* train = app.add_subcommand("train", "grid-search weights with cross validation");
  std::string corpus_dir;
  std::string train_judgments;
  std::string log_path;
  std::string objective = "f1";
  TrainerOptions train_opts;
  train->add_option("--corpus", corpus_dir, "directory of text files")->required();
  train->add_option("--judgments", train_judgments, "judgment file")->required();
  train->add_option("--grid", cfg.grid, "grid file (kind.field=v1,v2 lines)");
  train->add_option("--folds", train_opts.folds, "cross-validation folds")->capture_default_str();
  train->add_option("--objective", objective, "f1, precision or recall")
      ->check(CLI::IsMember({"f1", "precision", "recall"}))
      ->capture_default_str();
  train->add_option("--log", log_path, "training log file");
  add_segmenter(train);
  add_output(train);

  auto* agree = app.add_subcommand("agree", "inter-judge agreement");
  std::string agree_judgments;
  agree->add_option("judgments", agree_judgments, "judgment file")->required();
  add_output(agree);

  CLI11_PARSE(app, argc, argv);

  try {
    if (seg->parsed()) return cmd_segment(cfg, seg_inputs, dump_scores);
    if (sig->parsed()) {
      if (!sig_compute && sig_boundaries.empty()) throw CLI::RequiredError("--boundaries or --compute");
      sig_opts.tf = tf_document ? TfMode::Document : TfMode::Segment;
      sig_opts.coverage = coverage_occurrences ? CoverageMode::OccurrenceCount : CoverageMode::SegmentSpread;
      return cmd_signify(cfg, sig_input, sig_boundaries, sig_opts);
    }
    if (eval->parsed()) return cmd_evaluate(cfg, systems, judgments, score_opts);
    if (train->parsed()) {
      train_opts.objective = *parse_objective(objective);
      return cmd_train(cfg, corpus_dir, train_judgments, train_opts, log_path);
    }
    if (agree->parsed()) return cmd_agree(cfg, agree_judgments);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const InsufficientCorpus& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kInsufficient;
  } catch (const MissingJudgments& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kMismatch;
  } catch (const BoundaryMismatch& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kMismatch;
  } catch (const LengthMismatch& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "linseg: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}
