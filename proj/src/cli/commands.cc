// Copyright 2026 The amrsmith Authors.
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

#include "cli/commands.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "amrsmith/amr.h"
#include "amrsmith/cli.h"
#include "amrsmith/entity_linker.h"
#include "amrsmith/error.h"
#include "amrsmith/parallel.h"
#include "amrsmith/postprocess.h"
#include "amrsmith/preprocess.h"
#include "amrsmith/silver.h"
#include "amrsmith/smatch.h"
#include "amrsmith/tokenize.h"
#include "amrsmith/triples.h"

namespace amrsmith::cli {

namespace {

// An input file, or standard input for "-".
class Input {
 public:
  explicit Input(const std::string &path) {
    if (path == "-") {
      stream_ = &std::cin;
      return;
    }
    file_.open(path);
    if (!file_) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::istream &get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream *stream_ = nullptr;
};

// An output file, or the command's output stream for "-".
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream &get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream *stream_ = nullptr;
};

std::vector<std::string> ReadLines(const std::string &path) {
  Input in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in.get(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string DescribeError(const CorpusError &e) {
  return "AMR " + std::to_string(e.block_index + 1) + " at line " +
         std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
         std::string(ErrorCodeName(e.code)) + ": " + e.message;
}

// A corpus that must parse completely; the first bad block is an error.
std::vector<AmrGraph> LoadStrict(const std::string &path) {
  Input in(path);
  Corpus corpus = ReadCorpus(in.get());
  if (!corpus.errors.empty()) {
    throw Error(corpus.errors.front().code,
                path + ": " + DescribeError(corpus.errors.front()));
  }
  return std::move(corpus.graphs);
}

Layout ParseLayout(const std::string &name) {
  return name == "single" ? Layout::kSingleLine : Layout::kIndented;
}

SmatchOptions MakeSmatchOptions(const Globals &g, const Args &a) {
  SmatchOptions options;
  options.restarts = a.restarts;
  options.seed = g.seed;
  options.triples.normalize_inverse = !a.literal_of;
  return options;
}

void PrintMetrics(std::span<const AmrGraph> pred, std::span<const AmrGraph> gold,
                  const SmatchOptions &options, int jobs, std::ostream &out) {
  for (MetricKind metric : AllMetrics()) {
    ScoreReport r = CorpusFineGrained(pred, gold, metric, options, jobs);
    char name[32];
    std::snprintf(name, sizeof(name), "%-14s", std::string(MetricName(metric)).c_str());
    out << name << FormatScore(r) << '\n';
  }
}

std::unique_ptr<EntityLinker> MakeLinker(const Args &a) {
  if (!a.wiki.empty()) return std::make_unique<Gazetteer>(Gazetteer::Load(a.wiki));
  if (!a.wiki_url.empty()) return std::make_unique<HttpEntityLinker>(a.wiki_url);
  return nullptr;
}

void WriteLog(const std::string &path, const std::vector<PipelineResult> &results,
              std::ostream &fallback) {
  if (path.empty()) return;
  Output log(path, fallback);
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const LogEntry &e : results[i].log) {
      log.get() << i << '\t' << e.stage << '\t' << e.action << '\t' << e.detail << '\n';
    }
  }
}

std::vector<PipelineResult> RunAll(const std::vector<std::string> &lines,
                                   const PipelineOptions &options, int jobs) {
  std::vector<PipelineResult> results(lines.size());
  ParallelFor(lines.size(), jobs,
              [&](std::size_t i) { results[i] = RunPipeline(lines[i], options); });
  return results;
}

// ---------------------------------------------------------------------------

int RunParse(const Args &a, const Io &io) {
  Input in(a.in);
  Corpus corpus = ReadCorpus(in.get());
  for (const CorpusError &e : corpus.errors) io.err << DescribeError(e) << '\n';
  if (!a.check) {
    Output out(a.out, io.out);
    for (const AmrGraph &g : corpus.graphs) WriteAmrBlock(out.get(), g, ParseLayout(a.layout));
  }
  io.Progress("parse: " + std::to_string(corpus.graphs.size()) + " AMRs, " +
              std::to_string(corpus.errors.size()) + " errors");
  return corpus.errors.empty() ? kExitOk : kExitData;
}

int RunTriples(const Args &a, const Io &io) {
  std::vector<AmrGraph> graphs = LoadStrict(a.in);
  TripleOptions options;
  options.normalize_inverse = !a.literal_of;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) io.out << '\n';
    for (const Triple &t : ToTriples(graphs[i], options).triples) {
      io.out << ToString(t) << '\n';
    }
  }
  return kExitOk;
}

int RunSmatch(const Globals &g, const Args &a, const Io &io) {
  std::vector<AmrGraph> pred = LoadStrict(a.pred);
  std::vector<AmrGraph> gold = LoadStrict(a.gold);
  SmatchOptions options = MakeSmatchOptions(g, a);
  std::vector<ScoreReport> per_pair;
  ScoreReport total = CorpusSmatch(pred, gold, options, g.jobs, &per_pair);
  if (!a.metric.empty()) {
    total = CorpusFineGrained(pred, gold, *ParseMetricKind(a.metric), options, g.jobs);
  }
  io.out << FormatScore(total) << '\n';
  if (a.metrics) PrintMetrics(pred, gold, options, g.jobs, io.out);
  if (!a.per_pair.empty()) {
    Output out(a.per_pair, io.out);
    for (std::size_t i = 0; i < per_pair.size(); ++i) {
      out.get() << i << '\t' << FormatScore(per_pair[i]) << '\n';
    }
  }
  io.Progress("smatch: " + std::to_string(pred.size()) + " pairs");
  return kExitOk;
}

// Blocks of a TSV alignment sidecar: one per AMR, blank-line separated.
std::vector<std::string> SplitBlocks(const std::vector<std::string> &lines) {
  std::vector<std::string> out;
  std::string current;
  bool open = false;
  for (const std::string &line : lines) {
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (open) out.push_back(std::move(current));
      current.clear();
      open = false;
      continue;
    }
    current += line;
    current += '\n';
    open = true;
  }
  if (open) out.push_back(std::move(current));
  return out;
}

int RunPreprocess(const Globals &g, const Args &a, const Io &io) {
  Input in(a.corpus);
  Corpus corpus = ReadCorpus(in.get());
  for (const CorpusError &e : corpus.errors) {
    io.err << "skipping " << DescribeError(e) << '\n';
  }
  // Index of every parsed AMR among all records, for sidecar lookup.
  std::set<std::size_t> failed;
  for (const CorpusError &e : corpus.errors) failed.insert(e.block_index);
  std::vector<std::size_t> record;
  for (std::size_t i = 0; record.size() < corpus.graphs.size(); ++i) {
    if (!failed.contains(i)) record.push_back(i);
  }

  const AlignmentFormat format = *ParseAlignmentFormat(a.alignments_format);
  std::vector<std::string> sidecar;
  if (!a.alignments.empty()) {
    std::vector<std::string> lines = ReadLines(a.alignments);
    sidecar = format == AlignmentFormat::kTsv ? SplitBlocks(lines) : lines;
    const std::size_t records = corpus.graphs.size() + corpus.errors.size();
    if (sidecar.size() != records) {
      throw Error(ErrorCode::kAlignmentMismatch,
                  a.alignments + " has " + std::to_string(sidecar.size()) +
                      " entries for " + std::to_string(records) + " AMRs");
    }
  } else if (format == AlignmentFormat::kTsv) {
    throw Error(ErrorCode::kMalformedEntry, "--alignments-format tsv needs --alignments");
  }

  const bool wants_alignment = a.reorder == "best" || a.reorder == "inversions" ||
                               (a.double_data && a.reorder == "none");
  std::vector<TrainingPair> pairs(corpus.graphs.size());
  std::vector<std::vector<std::string>> warnings(corpus.graphs.size());
  ParallelFor(corpus.graphs.size(), g.jobs, [&](std::size_t i) {
    const AmrGraph &graph = corpus.graphs[i];
    VariableRemoval removal = RemoveVariables(graph);
    warnings[i] = std::move(removal.warnings);
    Alignment alignment;
    if (wants_alignment) {
      if (format == AlignmentFormat::kIsi) {
        alignment = std::move(removal.isi_alignment);
      } else if (!sidecar.empty()) {
        alignment = ParseAlignments(sidecar[record[i]], format);
      } else if (auto meta = graph.metadata().Get("alignments")) {
        alignment = ParseAlignments(*meta, format);
      }
    }
    TrainingPair &pair = pairs[i];
    pair.sentence = CleanSentence(graph.metadata().Get("snt").value_or(""));
    if (a.strip_wiki) {
      Reordering stripped = DropRelation(removal.tree, alignment, ":wiki");
      pair.tree = std::move(stripped.tree);
      pair.alignment = std::move(stripped.alignment);
    } else {
      pair.tree = std::move(removal.tree);
      pair.alignment = std::move(alignment);
    }
  });
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    for (const std::string &w : warnings[i]) {
      io.err << "AMR " << record[i] + 1 << ": " << w << '\n';
    }
  }

  OrderStatistics stats;
  if (a.reorder == "consistency") {
    for (const TrainingPair &p : pairs) stats.Observe(p.tree);
  }
  ReorderFn reorder = [&](const TrainingPair &p) -> Reordering {
    if (a.reorder == "inversions") return MinInversionReordering(p.tree, p.alignment);
    if (a.reorder == "alpha") return {AlphabeticalReordering(p.tree), {}};
    if (a.reorder == "consistency") return {stats.Apply(p.tree), {}};
    if (a.reorder == "none" && !a.double_data) return {p.tree, p.alignment};
    return BestReordering(p.tree, p.alignment);
  };

  std::vector<TrainingPair> output;
  if (a.double_data) {
    output = DoubleData(pairs, reorder);
  } else {
    output.resize(pairs.size());
    ParallelFor(pairs.size(), g.jobs, [&](std::size_t i) {
      Reordering r = reorder(pairs[i]);
      output[i] = {pairs[i].sentence, std::move(r.tree), std::move(r.alignment)};
    });
  }

  Output amr(a.out_amr, io.out);
  Output snt(a.out_snt, io.out);
  for (const TrainingPair &p : output) {
    amr.get() << SerializeTree(p.tree) << '\n';
    snt.get() << p.sentence.cleaned << '\n';
  }
  io.Progress("preprocess: " + std::to_string(corpus.graphs.size()) + " AMRs in, " +
              std::to_string(output.size()) + " pairs out");
  return kExitOk;
}

int RunTokenize(const Args &a, const Io &io) {
  std::vector<std::string> lines = ReadLines(a.in);
  Output out(a.out, io.out);
  if (a.decode) {
    for (const std::string &line : lines) {
      TokenSequence tokens = SplitTokens(line);
      out.get() << (a.mode == "amr" ? DecodeAmr(tokens) : DecodeSentence(tokens)) << '\n';
    }
    return kExitOk;
  }
  std::vector<std::vector<std::pair<std::string, std::string>>> tags;
  if (a.pos) {
    if (a.mode != "sent") throw Error(ErrorCode::kMalformedEntry, "--pos needs --mode sent");
    if (a.tags.empty()) throw Error(ErrorCode::kMalformedEntry, "--pos needs --tags");
    Input in(a.tags);
    tags = ReadTagSidecar(in.get());
    if (tags.size() != lines.size()) {
      throw Error(ErrorCode::kAlignmentMismatch,
                  a.tags + " has " + std::to_string(tags.size()) + " sentences for " +
                      std::to_string(lines.size()) + " lines");
    }
  }
  Vocab vocab;
  AmrEncoding encoding{a.super_relations, a.depth_parens};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    TokenSequence tokens;
    if (a.mode == "amr") {
      tokens = EncodeAmr(lines[i], encoding);
    } else {
      SentenceRecord record = CleanSentence(lines[i]);
      if (a.pos) {
        std::vector<std::string> sentence_tags;
        for (const auto &[token, tag] : tags[i]) sentence_tags.push_back(tag);
        record.tags = std::move(sentence_tags);
      }
      tokens = EncodeSentence(record, a.pos);
    }
    vocab.Add(tokens);
    out.get() << JoinTokens(tokens) << '\n';
  }
  if (!a.vocab.empty()) {
    Output v(a.vocab, io.out);
    vocab.Write(v.get());
  }
  io.Progress("tokenize: " + std::to_string(lines.size()) + " lines, vocabulary " +
              std::to_string(vocab.size()));
  return kExitOk;
}

int RunPostprocess(const Globals &g, const Args &a, const Io &io) {
  std::vector<std::string> lines = ReadLines(a.in);
  std::unique_ptr<EntityLinker> linker = MakeLinker(a);
  PipelineOptions options;
  options.prune_method = a.prune;
  options.coreference = !a.no_coref;
  options.linker = linker.get();
  std::vector<PipelineResult> results = RunAll(lines, options, g.jobs);
  Output out(a.out, io.out);
  std::size_t changes = 0;
  for (const PipelineResult &r : results) {
    WriteAmrBlock(out.get(), r.graph, ParseLayout(a.layout));
    changes += r.log.size();
  }
  WriteLog(a.log, results, io.out);
  io.Progress("postprocess: " + std::to_string(lines.size()) + " lines, " +
              std::to_string(changes) + " logged changes");
  return kExitOk;
}

int RunSilver(const Globals &g, const Args &a, const Io &io) {
  CurateOptions options;
  options.mix = {a.total, a.camr_fraction, g.seed};
  options.threshold = a.threshold;
  options.inclusive = a.inclusive;
  options.restarts = a.restarts;
  options.jobs = g.jobs;
  Input camr(a.camr);
  Input jamr(a.jamr);
  CurationResult result = Curate(camr.get(), jamr.get(), options);
  {
    Output out(a.out, io.out);
    for (const SilverRecord &r : result.records) WriteSilverRecord(out.get(), r);
  }
  {
    Output report(a.report, io.out);
    report.get() << result.report.ToJson() << '\n';
  }
  const CurationReport &r = result.report;
  io.Progress("silver: " + std::to_string(r.pairs) + " pairs, " + std::to_string(r.kept) +
              " kept, " + std::to_string(r.camr) + " camr + " + std::to_string(r.jamr) +
              " jamr selected");
  return kExitOk;
}

int RunPipelineEval(const Globals &g, const Args &a, const Io &io) {
  std::vector<std::string> raw = ReadLines(a.raw);
  std::vector<AmrGraph> gold = LoadStrict(a.gold);
  if (raw.size() != gold.size()) {
    throw Error(ErrorCode::kAlignmentMismatch,
                a.raw + " has " + std::to_string(raw.size()) + " lines but " + a.gold +
                    " has " + std::to_string(gold.size()) + " AMRs");
  }
  std::unique_ptr<EntityLinker> linker = MakeLinker(a);
  PipelineOptions options;
  options.prune_method = a.no_prune ? 0 : a.prune;
  options.coreference = !a.no_coref;
  options.linker = linker.get();
  std::vector<PipelineResult> results = RunAll(raw, options, g.jobs);
  std::vector<AmrGraph> pred;
  pred.reserve(results.size());
  for (const PipelineResult &r : results) pred.push_back(r.graph);
  SmatchOptions smatch = MakeSmatchOptions(g, a);
  ScoreReport total = a.metric.empty()
                          ? CorpusSmatch(pred, gold, smatch, g.jobs)
                          : CorpusFineGrained(pred, gold, *ParseMetricKind(a.metric), smatch, g.jobs);
  io.out << FormatScore(total) << '\n';
  if (a.metrics) PrintMetrics(pred, gold, smatch, g.jobs, io.out);
  WriteLog(a.log, results, io.out);
  io.Progress("pipeline-eval: " + std::to_string(raw.size()) + " lines");
  return kExitOk;
}

}  // namespace

int Run(const std::string &command, const Globals &globals, const Args &args,
        const Io &io) {
  if (command == "parse") return RunParse(args, io);
  if (command == "triples") return RunTriples(args, io);
  if (command == "smatch") return RunSmatch(globals, args, io);
  if (command == "preprocess") return RunPreprocess(globals, args, io);
  if (command == "tokenize") return RunTokenize(args, io);
  if (command == "postprocess") return RunPostprocess(globals, args, io);
  if (command == "silver") return RunSilver(globals, args, io);
  if (command == "pipeline-eval") return RunPipelineEval(globals, args, io);
  io.err << "error: unknown command '" << command << "'\n";
  return kExitUsage;
}

}  // namespace amrsmith::cli
