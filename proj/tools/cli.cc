// Copyright 2026 The snpassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "snpassoc/analysis.h"
#include "snpassoc/confidence.h"
#include "snpassoc/corpus.h"
#include "snpassoc/error.h"
#include "snpassoc/evaluation.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/metrics.h"
#include "snpassoc/model_io.h"
#include "snpassoc/nnb.h"
#include "snpassoc/report.h"
#include "snpassoc/textproc.h"
#include "snpassoc/tree.h"
#include "snpassoc/verification.h"

namespace snpassoc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Bad flag values found after parsing; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string config;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string cues;
  std::string connectors;
  std::string modality;
  std::string triggers;
  std::string gazetteer;
  std::string trees;
  bool emit_neutral = false;
  std::string pvalue_buckets;
  bool merge_high_medium = false;
  double C = 1.0;
  double tol = 1e-3;
  int max_passes = 50;
  double lambda = 0.4;
  int n_max = 3;
  int window = 2;
  std::string log_level = "warn";
};

// Values from the [train] and [lexicons] sections of --config. Flags given
// on the command line win.
void apply_config_file(const CLI::App &app, Globals &g) {
  if (g.config.empty()) return;
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(g.config, tree);
  } catch (const pt::ini_parser_error &e) {
    throw ParseError(g.config + ":line " + std::to_string(e.line()), e.message());
  }
  auto set = [&](const char *flag, const std::string &key, auto &field) {
    if (app.get_option(flag)->count() > 0) return;
    using T = std::decay_t<decltype(field)>;
    if (const auto v = tree.get_optional<T>(key)) field = *v;
  };
  try {
    set("--seed", "train.seed", g.seed);
    set("--C", "train.C", g.C);
    set("--tol", "train.tol", g.tol);
    set("--max-passes", "train.max_passes", g.max_passes);
    set("--lambda", "train.lambda", g.lambda);
    set("--n-max", "train.n_max", g.n_max);
    set("--window", "train.window", g.window);
    set("--pvalue-buckets", "train.pvalue_buckets", g.pvalue_buckets);
    set("--emit-neutral", "train.emit_neutral", g.emit_neutral);
    set("--merge-high-medium", "train.merge_high_medium", g.merge_high_medium);
    set("--cues", "lexicons.cues", g.cues);
    set("--connectors", "lexicons.connectors", g.connectors);
    set("--modality-lexicon", "lexicons.modality", g.modality);
    set("--triggers", "lexicons.triggers", g.triggers);
    set("--gazetteer", "lexicons.gazetteer", g.gazetteer);
    set("--trees", "lexicons.trees", g.trees);
  } catch (const pt::ptree_bad_data &e) {
    throw ParseError(g.config, e.what());
  }
}

Lexicons load_lexicons(const Globals &g) {
  Lexicons lex = Lexicons::defaults();
  auto maybe = [](const std::string &path, PhraseLexicon &target) {
    if (!path.empty()) target = PhraseLexicon::load(path);
  };
  maybe(g.cues, lex.cues);
  maybe(g.connectors, lex.connectors);
  maybe(g.modality, lex.modality);
  maybe(g.triggers, lex.triggers);
  maybe(g.gazetteer, lex.gazetteer);
  return lex;
}

IngestionConfig ingestion(const Globals &g) {
  return g.config.empty() ? IngestionConfig{} : IngestionConfig::load(g.config);
}

ExperimentConfig experiment(const Globals &g, const Lexicons &lex) {
  ExperimentConfig c;
  c.seed = g.seed;
  c.smo.C = g.C;
  c.smo.tol = g.tol;
  c.smo.max_passes = g.max_passes;
  c.lambda = g.lambda;
  c.n_max = g.n_max;
  c.window = g.window;
  c.emit_neutral = g.emit_neutral;
  c.merge_high_medium = g.merge_high_medium;
  if (!g.pvalue_buckets.empty()) {
    try {
      c.buckets = PValueBuckets::parse(g.pvalue_buckets);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }
  if (!g.trees.empty()) {
    c.trees = std::make_shared<const TreeSidecar>(load_tree_sidecar(g.trees));
  }
  c.lexicon_fingerprints = lexicon_fingerprints(lex);
  return c;
}

ReportFormat report_format(const Globals &g) {
  return *parse_report_format(g.format);
}

Corpus tagged(Corpus corpus, SplitTag tag) {
  for (Document &d : corpus.documents) d.split = tag;
  return corpus;
}

Corpus load_train_test(const Globals &g, const std::string &train,
                       const std::string &test) {
  const IngestionConfig ic = ingestion(g);
  Corpus out = tagged(ingest_corpus(train, ic), SplitTag::kTrain);
  Corpus t = tagged(ingest_corpus(test, ic), SplitTag::kTest);
  out.documents.insert(out.documents.end(), t.documents.begin(),
                       t.documents.end());
  validate(out);
  return out;
}

void write_file(const fs::path &path, const std::string &content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
  if (!f) throw Error("write failed for " + path.string());
}

// ---- stats -------------------------------------------------------------

void print_stats(const VerificationReport &r, ReportFormat format,
                 std::ostream &out) {
  if (format == ReportFormat::kTsv) {
    out << "metric\tvalue\n";
    out << "n_candidates\t" << r.n_candidates << '\n';
    out << "n_sentences\t" << r.n_sentences << '\n';
    out << fmt::format("avg_tokens_per_sentence\t{:.6f}\n", r.avg_tokens_per_sentence);
    out << fmt::format("concessive_instance_ratio\t{:.6f}\n", r.concessive_instance_ratio);
    out << fmt::format("candidates_with_connector_ratio\t{:.6f}\n",
                       r.candidates_with_connector_ratio);
    out << fmt::format("avg_snp_per_sentence\t{:.6f}\n", r.avg_snp_per_sentence);
    out << fmt::format("avg_phenotype_per_sentence\t{:.6f}\n",
                       r.avg_phenotype_per_sentence);
    out << "innate_positive\t" << r.innate_positive << '\n';
    out << "innate_negative\t" << r.innate_negative << '\n';
    for (const auto &[k, v] : r.top_connectors()) {
      out << "connector:" << k << '\t' << v << '\n';
    }
    return;
  }
  json hist = json::object();
  for (const auto &[k, v] : r.connector_histogram) hist[k] = v;
  json top = json::array();
  for (const auto &[k, v] : r.top_connectors()) top.push_back(k);
  const json j = {
      {"n_candidates", r.n_candidates},
      {"n_sentences", r.n_sentences},
      {"avg_tokens_per_sentence", r.avg_tokens_per_sentence},
      {"connector_histogram", hist},
      {"connectors_by_frequency", top},
      {"concessive_instance_ratio", r.concessive_instance_ratio},
      {"candidates_with_connector_ratio", r.candidates_with_connector_ratio},
      {"avg_snp_per_sentence", r.avg_snp_per_sentence},
      {"avg_phenotype_per_sentence", r.avg_phenotype_per_sentence},
      {"innate_positive", r.innate_positive},
      {"innate_negative", r.innate_negative}};
  out << j.dump(2) << '\n';
}

// ---- extract -----------------------------------------------------------

Corpus read_raw_text(const fs::path &path, const PhraseLexicon &gazetteer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  Document doc;
  doc.id = path.stem().string();
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::string id = fmt::format("{}.s{}", doc.id, n);
    std::string text = line;
    if (const auto tab = line.find('\t'); tab != std::string::npos) {
      id = line.substr(0, tab);
      text = line.substr(tab + 1);
    }
    doc.sentences.push_back(analyze_raw_sentence(id, text, gazetteer));
  }
  Corpus c;
  if (!doc.sentences.empty()) c.documents.push_back(std::move(doc));
  return c;
}

std::string level_name(ConfidenceLevel l) {
  std::string s(to_string(l));
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void print_predictions(const std::vector<Prediction> &preds, bool emit_neutral,
                       ReportFormat format, std::ostream &out) {
  if (format == ReportFormat::kTsv) {
    out << "candidate_id\tdoc_id\tsentence_id\tsnp\tphenotype\tassociated\t"
           "confidence\tneutral_score\tfired";
    if (emit_neutral) out << "\tverdict";
    out << '\n';
  }
  for (const Prediction &p : preds) {
    std::string fired;
    for (const std::string &f : p.rationale) {
      if (!fired.empty()) fired += ',';
      fired += f;
    }
    const std::string verdict = gold_class(p.verdict(), true);
    if (format == ReportFormat::kTsv) {
      out << p.candidate_id << '\t' << p.document_id << '\t' << p.sentence_id
          << '\t' << p.snp << '\t' << p.phenotype << '\t'
          << (p.associated ? "true" : "false") << '\t'
          << (p.confidence ? level_name(*p.confidence) : "") << '\t'
          << (p.neutral_score ? fmt::format("{}", *p.neutral_score) : "")
          << '\t' << fired;
      if (emit_neutral) out << '\t' << verdict;
      out << '\n';
      continue;
    }
    json j = {{"candidate_id", p.candidate_id},
              {"doc_id", p.document_id},
              {"sentence_id", p.sentence_id},
              {"snp", p.snp},
              {"phenotype", p.phenotype},
              {"associated", p.associated},
              {"confidence", p.confidence ? json(level_name(*p.confidence))
                                          : json(nullptr)},
              {"neutral_score",
               p.neutral_score ? json(*p.neutral_score) : json(nullptr)},
              {"fired", p.rationale}};
    if (emit_neutral) j["verdict"] = verdict;
    out << j.dump() << '\n';
  }
}

// Reads predictions written by `extract` in either format.
std::vector<LabeledItem> read_predictions(const fs::path &path,
                                          bool three_way) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::vector<LabeledItem> out;
  std::string line;
  std::size_t n = 0;
  std::vector<std::string> header;
  auto locator = [&] { return fmt::format("{}:line {}", path.string(), n); };
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string id;
    std::string associated;
    std::string verdict;
    if (line.front() == '{') {
      try {
        const json j = json::parse(line);
        id = j.at("candidate_id").get<std::string>();
        associated = j.at("associated").get<bool>() ? "true" : "false";
        if (j.contains("verdict")) verdict = j.at("verdict").get<std::string>();
      } catch (const json::exception &e) {
        throw ParseError(locator(), e.what());
      }
    } else {
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string f;
      while (std::getline(ss, f, '\t')) fields.push_back(f);
      if (header.empty()) {
        header = fields;
        continue;
      }
      auto field = [&](const std::string &name) -> std::string {
        for (std::size_t i = 0; i < header.size(); ++i) {
          if (header[i] == name) return i < fields.size() ? fields[i] : "";
        }
        return "";
      };
      id = field("candidate_id");
      associated = field("associated");
      verdict = field("verdict");
    }
    if (id.empty()) throw ParseError(locator(), "missing candidate_id");
    std::string label;
    if (three_way) {
      if (verdict.empty()) {
        throw ParseError(locator(),
                         "three-way scoring needs a verdict; rerun extract "
                         "with --emit-neutral");
      }
      label = verdict;
    } else {
      label = associated == "true" ? kPositiveClass : kNegativeClass;
    }
    out.push_back({id, label});
  }
  return out;
}

// ---- driver --------------------------------------------------------------

class Runner {
 public:
  Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

  int run(const std::vector<std::string> &args);

 private:
  void add_globals(CLI::App &app);
  int dispatch(CLI::App &app);

  int cmd_stats();
  int cmd_split();
  int cmd_train();
  int cmd_extract();
  int cmd_eval();
  int cmd_cv();

  std::ostream &out_;
  std::ostream &err_;
  Globals g_;

  CLI::App *stats_ = nullptr;
  CLI::App *split_ = nullptr;
  CLI::App *train_ = nullptr;
  CLI::App *extract_ = nullptr;
  CLI::App *eval_ = nullptr;
  CLI::App *cv_ = nullptr;

  std::string corpus_;
  std::string out_path_;
  std::string out_prefix_;
  double ratio_ = 0.8;
  int kfold_ = 0;
  int fold_ = 0;
  std::string model_kind_;
  std::string raw_;
  std::string neutral_model_;
  std::string mms_model_;
  bool no_rank_ = false;
  int table_ = 0;
  std::string train_path_;
  std::string test_path_;
  std::string predictions_;
  std::string gold_;
  int k_ = 10;
  std::string method_ = "nnb";
};

void Runner::add_globals(CLI::App &app) {
  app.add_option("--config", g_.config, "INI file with [ingest], [train], [lexicons]")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", g_.seed, "Seed for every random choice");
  app.add_option("--format", g_.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cues", g_.cues, "Negation cue lexicon")->check(CLI::ExistingFile);
  app.add_option("--connectors", g_.connectors, "Clause connector lexicon")
      ->check(CLI::ExistingFile);
  app.add_option("--modality-lexicon", g_.modality, "Modality marker lexicon")
      ->check(CLI::ExistingFile);
  app.add_option("--triggers", g_.triggers, "Association trigger lexicon")
      ->check(CLI::ExistingFile);
  app.add_option("--gazetteer", g_.gazetteer, "Phenotype gazetteer")
      ->check(CLI::ExistingFile);
  app.add_option("--trees", g_.trees, "Bracketed tree sidecar (id<TAB>tree)")
      ->check(CLI::ExistingFile);
  app.add_flag("--emit-neutral", g_.emit_neutral,
               "Keep neutral as a third class in NNB output and scoring");
  app.add_option("--pvalue-buckets", g_.pvalue_buckets,
                 "Ascending p-value thresholds, e.g. 0.001,0.05");
  app.add_flag("--merge-high-medium", g_.merge_high_medium,
               "Two confidence levels: Medium counts as High");
  app.add_option("--C", g_.C, "SVM box constraint")->check(CLI::PositiveNumber);
  app.add_option("--tol", g_.tol, "SMO KKT tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-passes", g_.max_passes, "SMO passes without progress")
      ->check(CLI::PositiveNumber);
  app.add_option("--lambda", g_.lambda, "Subtree kernel decay")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--n-max", g_.n_max, "Longest context n-gram")
      ->check(CLI::PositiveNumber);
  app.add_option("--window", g_.window, "Local context window")
      ->check(CLI::PositiveNumber);
  app.add_option("--log-level", g_.log_level, "Logging threshold")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));
}

int Runner::run(const std::vector<std::string> &args) {
  CLI::App app("SNP-phenotype association extraction and evaluation",
               "snpassoc");
  app.require_subcommand(1);
  app.fallthrough();
  add_globals(app);

  stats_ = app.add_subcommand("stats", "Corpus verification statistics");
  stats_->add_option("corpus", corpus_, "Corpus file")->required()->check(CLI::ExistingFile);

  split_ = app.add_subcommand("split", "Document-level train/test split");
  split_->add_option("corpus", corpus_, "Corpus file")->required()->check(CLI::ExistingFile);
  split_->add_option("--out-prefix", out_prefix_, "Writes <prefix>.train.jsonl, <prefix>.test.jsonl")
      ->required();
  auto *ratio = split_->add_option("--ratio", ratio_, "Share of documents for training");
  auto *kfold = split_->add_option("--kfold", kfold_, "Cross-validation fold count")
                    ->check(CLI::Range(2, 1000000));
  split_->add_option("--fold", fold_, "Held-out fold with --kfold")->needs(kfold);
  ratio->excludes(kfold);

  train_ = app.add_subcommand("train", "Train a neutral detector or MMS model");
  train_->add_option("corpus", corpus_, "Training corpus")->required()->check(CLI::ExistingFile);
  train_->add_option("--model", model_kind_, "Model kind")
      ->required()
      ->check(CLI::IsMember({"neutral", "mms"}));
  train_->add_option("-o,--out", out_path_, "Model file")->required();

  extract_ = app.add_subcommand("extract", "Ranked association predictions");
  extract_->add_option("corpus", corpus_, "Corpus with gold entities")->check(CLI::ExistingFile);
  extract_->add_option("--raw", raw_, "Plain text, one sentence per line")
      ->check(CLI::ExistingFile);
  extract_->add_option("--neutral-model", neutral_model_, "Neutral detector model")
      ->check(CLI::ExistingFile);
  extract_->add_option("--mms-model", mms_model_, "Confidence model")
      ->check(CLI::ExistingFile);
  extract_->add_flag("--no-rank", no_rank_, "Keep candidate order");
  extract_->add_option("-o,--out", out_path_, "Output file (default stdout)");

  eval_ = app.add_subcommand("eval", "Evaluation tables or saved predictions");
  eval_->add_option("--table", table_, "Table to produce")->check(CLI::IsMember({1, 2, 3}));
  eval_->add_option("--train", train_path_, "Training part")->check(CLI::ExistingFile);
  eval_->add_option("--test", test_path_, "Test part")->check(CLI::ExistingFile);
  eval_->add_option("--corpus", corpus_, "Whole corpus (table 2)")->check(CLI::ExistingFile);
  eval_->add_option("--k", k_, "Folds for table 2")->check(CLI::Range(2, 1000000));
  eval_->add_option("--predictions", predictions_, "Output of extract")
      ->check(CLI::ExistingFile);
  eval_->add_option("--gold", gold_, "Gold corpus for --predictions")
      ->check(CLI::ExistingFile);

  cv_ = app.add_subcommand("cv", "k-fold cross-validation");
  cv_->add_option("corpus", corpus_, "Corpus file")->required()->check(CLI::ExistingFile);
  cv_->add_option("--k", k_, "Fold count")->check(CLI::Range(2, 1000000));
  cv_->add_option("--method", method_, "Method")
      ->check(CLI::IsMember({"nnb", "lck", "gck", "subtree", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err_ << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err_);
  auto logger = std::make_shared<spdlog::logger>("snpassoc", sink);
  logger->set_level(spdlog::level::from_str(g_.log_level));
  logger->set_pattern("%l: %v");
  const auto previous = spdlog::default_logger();
  spdlog::set_default_logger(logger);
  int code = kExitOk;
  try {
    apply_config_file(app, g_);
    code = dispatch(app);
  } catch (const UsageError &e) {
    err_ << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const Error &e) {
    err_ << "error: " << e.what() << '\n';
    code = kExitData;
  } catch (const std::invalid_argument &e) {
    err_ << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::exception &e) {
    err_ << "error: " << e.what() << '\n';
    code = kExitData;
  }
  spdlog::set_default_logger(previous);
  return code;
}

int Runner::dispatch(CLI::App &) {
  if (stats_->parsed()) return cmd_stats();
  if (split_->parsed()) return cmd_split();
  if (train_->parsed()) return cmd_train();
  if (extract_->parsed()) return cmd_extract();
  if (eval_->parsed()) return cmd_eval();
  return cmd_cv();
}

int Runner::cmd_stats() {
  const Lexicons lex = load_lexicons(g_);
  const Corpus corpus = ingest_corpus(corpus_, ingestion(g_));
  print_stats(compute_verification_stats(corpus, lex.connectors, lex.cues,
                                         lex.triggers),
              report_format(g_), out_);
  return kExitOk;
}

int Runner::cmd_split() {
  Corpus corpus = ingest_corpus(corpus_, ingestion(g_));
  Corpus train;
  Corpus test;
  if (kfold_ > 0) {
    if (fold_ < 0 || fold_ >= kfold_) throw UsageError("--fold must be in [0, k)");
    const FoldPlan plan = make_fold_plan(corpus, kfold_, g_.seed);
    for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
      (plan.fold_of[d] == fold_ ? test : train).documents.push_back(corpus.documents[d]);
    }
  } else {
    const Corpus split = split_corpus(std::move(corpus), ratio_, g_.seed);
    for (const Document &d : split.documents) {
      (d.split == SplitTag::kTest ? test : train).documents.push_back(d);
    }
  }
  for (Document &d : train.documents) d.split = SplitTag::kUnsplit;
  for (Document &d : test.documents) d.split = SplitTag::kUnsplit;
  std::ostringstream a;
  std::ostringstream b;
  write_jsonl(train, a);
  write_jsonl(test, b);
  write_file(out_prefix_ + ".train.jsonl", a.str());
  write_file(out_prefix_ + ".test.jsonl", b.str());
  out_ << fmt::format("train\t{}\t{}\ntest\t{}\t{}\n", out_prefix_ + ".train.jsonl",
                      train.documents.size(), out_prefix_ + ".test.jsonl",
                      test.documents.size());
  return kExitOk;
}

int Runner::cmd_train() {
  const Lexicons lex = load_lexicons(g_);
  const ExperimentConfig config = experiment(g_, lex);
  const AnalyzedCorpus corpus(ingest_corpus(corpus_, ingestion(g_)), lex);
  if (model_kind_ == "neutral") {
    save_model(train_neutral_detector(corpus, config.neutral_config()), out_path_);
  } else {
    save_model(mms_train(corpus, config.mms_config()), out_path_);
  }
  out_ << "wrote " << out_path_ << '\n';
  return kExitOk;
}

int Runner::cmd_extract() {
  if (corpus_.empty() == raw_.empty()) {
    throw UsageError("extract needs exactly one of a corpus file or --raw");
  }
  const Lexicons lex = load_lexicons(g_);
  Corpus input = raw_.empty() ? ingest_corpus(corpus_, ingestion(g_))
                              : read_raw_text(raw_, lex.gazetteer);
  const AnalyzedCorpus corpus(std::move(input), lex);
  std::optional<NeutralModel> neutral;
  if (!neutral_model_.empty()) neutral = load_neutral_model(neutral_model_);
  std::optional<MmsModel> mms;
  if (!mms_model_.empty()) mms = load_mms_model(mms_model_);

  std::vector<Prediction> preds;
  const Corpus &c = corpus.corpus();
  for (std::size_t d = 0; d < c.documents.size(); ++d) {
    const Document &doc = c.documents[d];
    std::vector<Prediction> part = extract_associations(
        doc, corpus.analyses(d), neutral ? &*neutral : nullptr);
    if (mms) {
      std::size_t k = 0;
      for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
        for (const CandidatePair &pair : doc.sentences[s].candidates) {
          Prediction &p = part[k++];
          if (!p.associated) continue;
          p.confidence = mms_predict(
              *mms, {doc, doc.sentences[s], pair, corpus.analyses(d)[s]});
        }
      }
    }
    preds.insert(preds.end(), part.begin(), part.end());
  }
  if (!no_rank_) rank_predictions(preds);

  std::ostringstream buffer;
  print_predictions(preds, g_.emit_neutral, report_format(g_), buffer);
  if (out_path_.empty()) {
    out_ << buffer.str();
  } else {
    write_file(out_path_, buffer.str());
  }
  return kExitOk;
}

int Runner::cmd_eval() {
  const Lexicons lex = load_lexicons(g_);
  const ExperimentConfig config = experiment(g_, lex);
  if (!predictions_.empty()) {
    if (gold_.empty()) throw UsageError("--predictions needs --gold");
    if (table_ != 0) throw UsageError("--predictions and --table are exclusive");
    const bool three_way = g_.emit_neutral;
    const Corpus gold_corpus = ingest_corpus(gold_, ingestion(g_));
    std::vector<LabeledItem> gold;
    for (const Document &d : gold_corpus.documents) {
      for (const Sentence &s : d.sentences) {
        for (const CandidatePair &c : s.candidates) {
          if (c.gold_label) gold.push_back({c.id, gold_class(*c.gold_label, three_way)});
        }
      }
    }
    std::vector<LabeledItem> preds;
    std::map<std::string, bool> wanted;
    for (const LabeledItem &g : gold) wanted[g.id] = true;
    for (LabeledItem &p : read_predictions(predictions_, three_way)) {
      if (wanted.contains(p.id)) preds.push_back(std::move(p));
    }
    Report report;
    report.title = "saved predictions";
    report.provenance = config.provenance();
    report.add("predictions", score(preds, gold, association_classes(three_way)));
    write_report(report, report_format(g_), out_);
    return kExitOk;
  }
  if (table_ == 0) throw UsageError("eval needs --table or --predictions");
  Report report;
  if (table_ == 2) {
    if (corpus_.empty()) throw UsageError("--table 2 needs --corpus");
    const AnalyzedCorpus corpus(ingest_corpus(corpus_, ingestion(g_)), lex);
    report = run_table2(corpus, k_, config);
  } else {
    if (train_path_.empty() || test_path_.empty()) {
      throw UsageError("--table 1 and 3 need --train and --test");
    }
    const AnalyzedCorpus corpus(load_train_test(g_, train_path_, test_path_), lex);
    report = table_ == 1 ? run_table1(corpus, config) : run_table3(corpus, config);
  }
  write_report(report, report_format(g_), out_);
  return kExitOk;
}

int Runner::cmd_cv() {
  const Lexicons lex = load_lexicons(g_);
  const ExperimentConfig config = experiment(g_, lex);
  const AnalyzedCorpus corpus(ingest_corpus(corpus_, ingestion(g_)), lex);
  Report report;
  report.title = fmt::format("{}-fold cross-validation", k_);
  report.provenance = config.provenance();
  report.provenance.hyperparameters["k"] = std::to_string(k_);
  std::vector<Method> methods;
  if (method_ == "all") {
    methods = {Method::kNnb, Method::kLck, Method::kGck, Method::kSubtree};
  } else {
    methods = {*parse_method(method_)};
  }
  for (Method m : methods) add_cv_rows(report, cross_validate(corpus, k_, m, config));
  write_report(report, report_format(g_), out_);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  return Runner(out, err).run(args);
}

}  // namespace snpassoc::cli
