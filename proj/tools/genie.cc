// Copyright 2026 The Genie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// genie: command-line front end for the circuit topology toolkit.
//
// Exit codes: 0 success, 1 validation failures (with --strict, or undecodable
// sequences), 2 usage or I/O errors.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "genie/augment.h"
#include "genie/batch.h"
#include "genie/canonical.h"
#include "genie/error.h"
#include "genie/euler.h"
#include "genie/eval.h"
#include "genie/netlist.h"
#include "genie/ngram.h"
#include "genie/parallel.h"
#include "genie/store.h"
#include "genie/topology.h"
#include "genie/validity.h"
#include "genie/vocab.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace genie {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::uint64_t seed = 0;
  std::string vocab_path;
  int jobs = 1;

  Execution exec() const { return Execution::FromJobs(jobs); }

  Vocab LoadVocab() const {
    std::string path = vocab_path;
    if (path.empty()) {
      if (const char* env = std::getenv("GENIE_VOCAB"); env && *env) {
        path = env;
      }
    }
    return path.empty() ? DefaultVocab() : ReadVocabFile(path);
  }
};

void AddCommon(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--vocab", c.vocab_path,
                  "Vocabulary file (default: $GENIE_VOCAB or built-in)");
  app->add_option("--jobs", c.jobs, "Worker threads; 1 = serial, 0 = all")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

const std::map<std::string, NetExpansion> kExpansions = {
    {"clique", NetExpansion::kClique}, {"star", NetExpansion::kStar}};

void AddExpansion(CLI::App* app, NetExpansion& e) {
  app->add_option("--expansion", e, "Net expansion: clique or star")
      ->transform(CLI::CheckedTransformer(kExpansions, CLI::ignore_case));
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void MakeDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir);
}

// Creates the directory an output file goes into.
const std::string& Out(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) MakeDir(parent.string());
  return path;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(Out(path), std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

std::string Join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// Sequences from a .seq text file or a .bin id stream.
std::vector<TokenSequence> ReadAnySequences(const std::string& path,
                                            const Vocab& vocab) {
  if (fs::path(path).extension() == ".bin") return ImportSamples(path, vocab);
  return ReadSequenceFile(path);
}

PinGraph GraphFromNetlist(const std::string& path, NetExpansion expansion) {
  return BuildGraph(Normalize(ParseNetlist(ReadText(path))), expansion);
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  Common common;
  std::string netlists;
  std::string out;
  std::string hashes;
  bool skip_bad = false;
};

int RunIngest(const IngestArgs& a) {
  IngestResult r = IngestDirectory(a.netlists, a.common.exec());
  for (const IngestFailure& f : r.failures) {
    std::cerr << (a.skip_bad ? "warning: " : "error: ") << f.file << ": "
              << f.message << "\n";
  }
  if (!r.failures.empty() && !a.skip_bad) return kExitUsage;
  WriteStoreFile(r.store, Out(a.out));
  std::vector<std::string> hashes;
  for (const StoredCircuit& c : r.store.circuits) hashes.push_back(c.hash);
  const std::string hashes_path =
      a.hashes.empty()
          ? (fs::path(a.out).parent_path() / "hashes.txt").string()
          : a.hashes;
  WriteHashes(hashes, Out(hashes_path));
  std::cout << "files " << r.files << ", unique " << r.store.circuits.size()
            << ", duplicates " << r.duplicates << ", failed "
            << r.failures.size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- corpus

struct CorpusArgs {
  Common common;
  std::string store;
  std::string out;
  int per_circuit = 70;
  double split = 0.9;
  NetExpansion expansion = NetExpansion::kClique;
  std::optional<double> min_fraction;
};

std::vector<std::string> Hashes(const std::vector<CorpusCircuit>& circuits) {
  std::vector<std::string> out;
  for (const CorpusCircuit& c : circuits) out.push_back(c.hash);
  return out;
}

int RunCorpus(const CorpusArgs& a) {
  const Vocab vocab = a.common.LoadVocab();
  const CircuitStore store = ReadStoreFile(a.store);
  std::vector<Topology> topologies;
  for (const StoredCircuit& c : store.circuits) topologies.push_back(c.topology);
  CorpusOptions options;
  options.per_circuit = a.per_circuit;
  options.split_ratio = a.split;
  options.seed = a.common.seed;
  options.expansion = a.expansion;
  const Corpus corpus = BuildCorpus(topologies, options, a.common.exec());

  MakeDir(a.out);
  WriteSequenceFile(Join(a.out, "train.seq"), corpus.train);
  WriteSequenceFile(Join(a.out, "val.seq"), corpus.val);
  ExportCorpus(corpus.train, Join(a.out, "train.bin"), vocab);
  ExportCorpus(corpus.val, Join(a.out, "val.bin"), vocab);
  WriteHashes(Hashes(corpus.train_circuits), Join(a.out, "train_hashes.txt"));
  WriteHashes(Hashes(corpus.val_circuits), Join(a.out, "val_hashes.txt"));

  nlohmann::ordered_json m;
  m["circuits"] = corpus.train_circuits.size() + corpus.val_circuits.size();
  m["per_circuit"] = a.per_circuit;
  m["split_ratio"] = a.split;
  m["seed"] = a.common.seed;
  m["expansion"] = a.expansion == NetExpansion::kClique ? "clique" : "star";
  m["vocab_digest"] = vocab.digest();
  m["counts"] = {{"train_sequences", corpus.train.size()},
                 {"val_sequences", corpus.val.size()},
                 {"train_circuits", corpus.train_circuits.size()},
                 {"val_circuits", corpus.val_circuits.size()},
                 {"duplicates_dropped", corpus.duplicates_dropped}};
  nlohmann::ordered_json shortfalls = nlohmann::ordered_json::array();
  bool below_min = false;
  for (const auto* split : {&corpus.train_circuits, &corpus.val_circuits}) {
    for (const CorpusCircuit& c : *split) {
      if (c.produced >= a.per_circuit) continue;
      shortfalls.push_back({{"hash", c.hash},
                            {"produced", c.produced},
                            {"requested", a.per_circuit}});
      if (a.min_fraction && c.produced < *a.min_fraction * a.per_circuit) {
        below_min = true;
      }
    }
  }
  m["shortfalls"] = shortfalls;
  WriteText(Join(a.out, "manifest.json"), m.dump(2) + "\n");
  std::cout << "train " << corpus.train.size() << " sequences / "
            << corpus.train_circuits.size() << " circuits, val "
            << corpus.val.size() << " / " << corpus.val_circuits.size()
            << ", shortfall circuits " << corpus.shortfall_circuits << "\n";
  if (below_min) {
    std::cerr << "error: augmentation shortfall below --min-fraction\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- fit

struct FitArgs {
  Common common;
  std::string train;
  std::string out;
  int order = kDefaultOrder;
  double alpha = kDefaultBackoffAlpha;
};

int RunFit(const FitArgs& a) {
  const Vocab vocab = a.common.LoadVocab();
  std::vector<IdSequence> corpus;
  if (fs::path(a.train).extension() == ".bin") {
    corpus = ReadIdCorpus(a.train, vocab);
  } else {
    const auto seqs = ReadSequenceFile(a.train);
    corpus = DecodeIdStream(EncodeIdStream(seqs, vocab), vocab);
  }
  const NgramModel model = NgramModel::Fit(corpus, vocab, a.order, a.alpha);
  model.Save(Out(a.out));
  std::cout << "fit order " << a.order << " on " << corpus.size()
            << " sequences\n";
  return kExitOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  Common common;
  std::string model;
  std::string out_dir;
  int n = 100;
  double temperature = 1.0;
  int top_k = 0;
  bool no_mask = false;
  int max_len = kDefaultMaxSeqLen;
  std::vector<std::string> budget;
};

std::string SampleName(std::size_t i) {
  std::ostringstream name;
  name << "sample_" << std::setw(5) << std::setfill('0') << i << ".ckt";
  return name.str();
}

int RunGenerate(const GenerateArgs& a) {
  const Vocab vocab = a.common.LoadVocab();
  const NgramModel model = NgramModel::Load(a.model, vocab);
  SamplerConfig cfg;
  cfg.temperature = a.temperature;
  if (a.top_k > 0) cfg.top_k = a.top_k;
  cfg.legality_mask = !a.no_mask;
  cfg.max_len = a.max_len;
  cfg.seed = a.common.seed;
  for (const std::string& item : a.budget) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "--budget wants KIND=N");
    }
    const std::string kind = item.substr(0, eq);
    if (!FindKind(kind)) throw Error(ErrorCode::kUnknownKind, kind);
    cfg.device_budget[kind] = std::stoi(item.substr(eq + 1));
  }
  const auto results =
      SampleMany(model, cfg, static_cast<std::size_t>(a.n), a.common.exec());
  std::vector<TokenSequence> seqs;
  for (const SampleResult& r : results) seqs.push_back(r.sequence);
  const auto reports = CheckSequences(seqs, a.common.exec());

  MakeDir(a.out_dir);
  const std::string ckt_dir = Join(a.out_dir, "ckt");
  MakeDir(ckt_dir);
  WriteSequenceFile(Join(a.out_dir, "samples.seq"), seqs);
  std::size_t valid = 0;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (!reports[i].valid) continue;
    ++valid;
    WriteText(Join(ckt_dir, SampleName(i)),
              EmitNetlist(NetsFromGraph(Decode(seqs[i]))));
  }
  std::cout << "generated " << seqs.size() << ", valid " << valid << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  Common common;
  std::string in;
  std::string out;
  bool strict = false;
};

int RunValidate(const ValidateArgs& a) {
  const auto seqs = ReadAnySequences(a.in, a.common.LoadVocab());
  const auto reports = CheckSequences(seqs, a.common.exec());
  std::ostringstream lines;
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    lines << ReportJsonLine(i, reports[i]) << "\n";
    if (!reports[i].valid) ++invalid;
  }
  if (a.out.empty()) {
    std::cout << lines.str();
  } else {
    WriteText(a.out, lines.str());
  }
  std::cerr << reports.size() << " sequences, " << invalid << " invalid\n";
  return a.strict && invalid > 0 ? kExitInvalid : kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  Common common;
  std::string samples;
  std::string hashes;
  std::string out;
  std::string csv;
  bool strict = false;
};

int RunEvaluate(const EvaluateArgs& a) {
  const auto seqs = ReadAnySequences(a.samples, a.common.LoadVocab());
  std::unordered_set<std::string> known;
  if (!a.hashes.empty()) {
    for (std::string& h : ReadHashes(a.hashes)) known.insert(std::move(h));
  }
  const Evaluation eval = Evaluate(seqs, known, a.common.exec());
  const std::string json = SummaryJson(eval.summary) + "\n";
  if (a.out.empty()) {
    std::cout << json;
  } else {
    WriteText(a.out, json);
  }
  if (!a.csv.empty()) {
    WriteText(a.csv, DeviceHistogramCsv(eval.summary.device_count_histogram));
  }
  const bool failures = eval.summary.n_valid < eval.summary.n_samples;
  return a.strict && failures ? kExitInvalid : kExitOk;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  Common common;
  std::string store;
  std::string out;
};

int RunStats(const StatsArgs& a) {
  const CircuitStore store = ReadStoreFile(a.store);
  std::vector<Topology> topologies;
  std::vector<std::string> labels;
  bool all_labeled = true;
  for (const StoredCircuit& c : store.circuits) {
    topologies.push_back(c.topology);
    labels.push_back(c.label.value_or(""));
    all_labeled = all_labeled && c.label.has_value();
  }
  if (!all_labeled) labels.clear();
  const DatasetStats stats = ComputeDatasetStats(topologies, labels);
  const std::string csv = DatasetStatsCsv(stats);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    WriteText(a.out, csv);
  }
  std::cerr << stats.n_circuits << " circuits, max devices "
            << stats.max_devices << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- encode

struct EncodeArgs {
  Common common;
  std::string netlist;
  std::string out;
  NetExpansion expansion = NetExpansion::kClique;
};

int RunEncode(const EncodeArgs& a) {
  const PinGraph g = GraphFromNetlist(a.netlist, a.expansion);
  const TokenSequence s = Encode(g, a.common.seed);
  if (a.out.empty()) {
    std::cout << FormatSequenceLine(s) << "\n";
  } else {
    WriteSequenceFile(Out(a.out), std::vector<TokenSequence>{s});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- decode

struct DecodeArgs {
  Common common;
  std::string in;
  std::string out_dir;
};

int RunDecode(const DecodeArgs& a) {
  const auto seqs = ReadAnySequences(a.in, a.common.LoadVocab());
  std::vector<std::optional<std::string>> netlists(seqs.size());
  std::vector<std::string> errors(seqs.size());
  ForEachIndex(seqs.size(), a.common.exec(), [&](std::size_t i) {
    try {
      netlists[i] = EmitNetlist(NetsFromGraph(Decode(seqs[i])));
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  if (!a.out_dir.empty()) MakeDir(a.out_dir);
  int failed = 0;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (!netlists[i]) {
      std::cerr << "sequence " << i << ": " << errors[i] << "\n";
      ++failed;
      continue;
    }
    if (a.out_dir.empty()) {
      std::cout << *netlists[i];
    } else {
      WriteText(Join(a.out_dir, SampleName(i)), *netlists[i]);
    }
  }
  return failed > 0 ? kExitInvalid : kExitOk;
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
  Common common;
  std::string netlist;
  std::string out;
  int count = 70;
  NetExpansion expansion = NetExpansion::kClique;
};

int RunAugment(const AugmentArgs& a) {
  const PinGraph g = GraphFromNetlist(a.netlist, a.expansion);
  const AugmentResult r = Augment(g, a.count, a.common.seed);
  if (a.out.empty()) {
    WriteSequences(std::cout, r.sequences);
  } else {
    WriteSequenceFile(Out(a.out), r.sequences);
  }
  std::cerr << r.sequences.size() << " of " << r.requested
            << " distinct circuits, " << r.seeds_tried << " seeds tried\n";
  return kExitOk;
}

// ---------------------------------------------------------------- vocab

struct VocabArgs {
  Common common;
  std::string out;
};

int RunVocab(const VocabArgs& a) {
  const Vocab vocab = a.common.LoadVocab();
  if (a.out.empty()) {
    std::cout << FormatVocab(vocab);
  } else {
    WriteVocabFile(Out(a.out), vocab);
  }
  std::cerr << vocab.size() << " tokens, digest " << vocab.digest() << "\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Circuit topology toolkit", "genie"};
  app.set_config("--config", "", "key=value config file; flags win");
  app.require_subcommand(1);

  int code = kExitOk;
  auto run = [&code](auto fn, const auto& args) {
    return [&code, fn, &args] { code = fn(args); };
  };

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "Parse netlists into a store");
  AddCommon(c_ingest, ingest.common);
  c_ingest->add_option("--netlists", ingest.netlists, "Directory of .ckt")
      ->required();
  c_ingest->add_option("--out", ingest.out, "Store JSON")->required();
  c_ingest->add_option("--hashes", ingest.hashes,
                       "hashes.txt path (default: next to --out)");
  c_ingest->add_flag("--skip-bad", ingest.skip_bad, "Warn on parse errors");
  c_ingest->callback(run(RunIngest, ingest));

  CorpusArgs corpus;
  auto* c_corpus = app.add_subcommand("corpus", "Augment and split a store");
  AddCommon(c_corpus, corpus.common);
  c_corpus->add_option("--store", corpus.store, "Store JSON")->required();
  c_corpus->add_option("--out", corpus.out, "Output directory")->required();
  c_corpus->add_option("--per-circuit", corpus.per_circuit)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_corpus->add_option("--split", corpus.split, "Train fraction")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  c_corpus->add_option("--min-fraction", corpus.min_fraction,
                       "Fail if a circuit yields fewer than this fraction")
      ->check(CLI::Range(0.0, 1.0));
  AddExpansion(c_corpus, corpus.expansion);
  c_corpus->callback(run(RunCorpus, corpus));

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "Fit the n-gram baseline");
  AddCommon(c_fit, fit.common);
  c_fit->add_option("--train", fit.train, ".seq or .bin corpus")->required();
  c_fit->add_option("--out", fit.out, "Model file")->required();
  c_fit->add_option("--order", fit.order)->capture_default_str();
  c_fit->add_option("--alpha", fit.alpha, "Backoff factor")
      ->capture_default_str();
  c_fit->callback(run(RunFit, fit));

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Sample from a model");
  AddCommon(c_gen, gen.common);
  c_gen->add_option("--model", gen.model, "Model file")->required();
  c_gen->add_option("--out-dir", gen.out_dir, "Output directory")->required();
  c_gen->add_option("--n", gen.n, "Samples")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  c_gen->add_option("--temperature", gen.temperature)->capture_default_str();
  c_gen->add_option("--top-k", gen.top_k, "0 = off")->capture_default_str();
  c_gen->add_flag("--no-mask", gen.no_mask, "Disable the legality mask");
  c_gen->add_option("--max-len", gen.max_len)->capture_default_str();
  c_gen->add_option("--budget", gen.budget, "Per-kind device cap KIND=N");
  c_gen->callback(run(RunGenerate, gen));

  ValidateArgs val;
  auto* c_val = app.add_subcommand("validate", "Check sequences");
  AddCommon(c_val, val.common);
  c_val->add_option("--in", val.in, ".seq or .bin file")->required();
  c_val->add_option("--out", val.out, "JSON-lines report");
  c_val->add_flag("--strict", val.strict, "Exit 1 on any invalid sequence");
  c_val->callback(run(RunValidate, val));

  EvaluateArgs ev;
  auto* c_ev = app.add_subcommand("evaluate", "Validity and novelty summary");
  AddCommon(c_ev, ev.common);
  c_ev->add_option("--samples", ev.samples, ".seq or .bin file")->required();
  c_ev->add_option("--hashes", ev.hashes, "Known topology hashes");
  c_ev->add_option("--out", ev.out, "Summary JSON");
  c_ev->add_option("--csv", ev.csv, "Device-count histogram CSV");
  c_ev->add_flag("--strict", ev.strict, "Exit 1 on any invalid sample");
  c_ev->callback(run(RunEvaluate, ev));

  StatsArgs st;
  auto* c_st = app.add_subcommand("stats", "Dataset statistics");
  AddCommon(c_st, st.common);
  c_st->add_option("--store", st.store, "Store JSON")->required();
  c_st->add_option("--out", st.out, "CSV output");
  c_st->callback(run(RunStats, st));

  EncodeArgs enc;
  auto* c_enc = app.add_subcommand("encode", "Netlist to sequence");
  AddCommon(c_enc, enc.common);
  c_enc->add_option("--netlist", enc.netlist, ".ckt file")->required();
  c_enc->add_option("--out", enc.out, ".seq output");
  AddExpansion(c_enc, enc.expansion);
  c_enc->callback(run(RunEncode, enc));

  DecodeArgs dec;
  auto* c_dec = app.add_subcommand("decode", "Sequences to netlists");
  AddCommon(c_dec, dec.common);
  c_dec->add_option("--in", dec.in, ".seq or .bin file")->required();
  c_dec->add_option("--out-dir", dec.out_dir, "One .ckt per sequence");
  c_dec->callback(run(RunDecode, dec));

  AugmentArgs aug;
  auto* c_aug = app.add_subcommand("augment", "Distinct encodings of one netlist");
  AddCommon(c_aug, aug.common);
  c_aug->add_option("--netlist", aug.netlist, ".ckt file")->required();
  c_aug->add_option("--out", aug.out, ".seq output");
  c_aug->add_option("--count", aug.count)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddExpansion(c_aug, aug.expansion);
  c_aug->callback(run(RunAugment, aug));

  VocabArgs voc;
  auto* c_voc = app.add_subcommand("vocab", "Write the vocabulary file");
  AddCommon(c_voc, voc.common);
  c_voc->add_option("--out", voc.out, "Vocabulary output");
  c_voc->callback(run(RunVocab, voc));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace
}  // namespace genie

int main(int argc, char** argv) { return genie::Main(argc, argv); }
