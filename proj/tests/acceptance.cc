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


// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "amrsmith/amr.h"
#include "amrsmith/cli.h"
#include "amrsmith/postprocess.h"
#include "amrsmith/preprocess.h"
#include "amrsmith/silver.h"
#include "amrsmith/smatch.h"
#include "amrsmith/tokenize.h"
#include "amrsmith/triples.h"
#include "testing.h"

namespace amrsmith {
namespace {

// Pinned sample sizes and tolerances.
constexpr int kPruneTrees = 1000;
constexpr int kTokenizerLines = 10000;
constexpr int kOraclePairs = 300;
constexpr int kOracleMaxVars = 7;
constexpr int kOracleRestarts = 8;
constexpr double kOracleAgreement = 0.99;
constexpr int kRenameGraphs = 1000;
constexpr int kReorderPairs = 1000;
constexpr int kFuzzStrings = 10000;
constexpr int kEvalGraphs = 200;
constexpr double kReentrantF = 0.95;
constexpr double kSilverThreshold = 55.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string &what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string Fmt(const char *format, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

std::vector<std::string> TripleStrings(const AmrGraph &g) {
  std::vector<std::string> out;
  for (const Triple &t : ToTriples(g).triples) out.push_back(ToString(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Concept of every re-entrant node with the sorted (relation, source concept)
// pairs that reach it.
std::multiset<std::string> ReentrancyPattern(const AmrGraph &g) {
  std::map<std::string, std::vector<std::string>> incoming;
  for (const Edge &e : g.edges()) {
    if (const auto *v = std::get_if<VarRef>(&e.target)) {
      incoming[v->id].push_back(e.relation + "<" + g.FindInstance(e.source)->concept_name);
    }
  }
  std::multiset<std::string> out;
  for (auto &[id, in] : incoming) {
    if (in.size() < 2) continue;
    std::sort(in.begin(), in.end());
    std::string key = g.FindInstance(id)->concept_name;
    for (const std::string &s : in) key += " " + s;
    out.insert(key);
  }
  return out;
}

std::string RandomLine(Rng &rng) {
  static const std::vector<std::string> alphabet = {
      "a", "b", "t", "h", "0", "1", "-", " ", " ", "(", ")", ":", ":", "\"",
      "+", "\\", "*", "/", ".", "\xc3\xa9", "\xe6\x97\xa5", "q", "A", "~"};
  std::string line;
  const std::size_t n = rng.Uniform(60);
  for (std::size_t i = 0; i < n; ++i) line += testing::Pick(rng, alphabet);
  return line;
}

Outcome TripleFidelity() {
  Outcome o;
  TripleSet set = ToTriples(ParseAmr(testing::kHeatWave));
  std::vector<std::string> expected = {
      "(instance, a, affect-01)", "(instance, w, wave-04)", "(instance, h2, heat)",
      "(instance, c, country)",   "(instance, n, name)",    "(instance, p, person)",
      "(instance, s, strike-02)", "(instance, h, hunger-01)", "(TOP, a, affect-01)",
      "(wiki, c, France)",        "(op1, n, France)",       "(ARG0, a, w)",
      "(ARG1, a, p)",             "(location, w, c)",       "(ARG1, w, h2)",
      "(name, c, n)",             "(ARG0, s, p)",           "(mod, s, h)",
      "(ARG0, h, p)"};
  std::sort(expected.begin(), expected.end());
  o.Check(TripleStrings(ParseAmr(testing::kHeatWave)) == expected, "triple set differs");
  o.Check(set.Count(TripleKind::kInstance) == 8 && set.Count(TripleKind::kAttribute) == 3 &&
              set.Count(TripleKind::kRelation) == 8,
          "kind counts differ");
  if (o.pass) o.detail = "19 triples (8 instance, 3 attribute, 8 relation)";
  return o;
}

Outcome PreprocessingFidelity() {
  Outcome o;
  const std::string free = SerializeTree(RemoveVariables(ParseAmr(testing::kOpium)).tree);
  o.Check(free == testing::kOpiumFree, "variable-free tree: " + free);
  const char *produced =
      "(material :mod (raw) :domain (opium :mod (raw)) :ARG1-of (use-01 :ARG2 "
      "(make-01 :ARG1 (heroin) :ARG2 (opium))))";
  AmrGraph restored = RestoreCoreference(RestoreVariables(Repair(produced)));
  AmrGraph expected = ParseAmr(testing::kCorefRestored);
  const double f = Smatch(restored, expected).report.f;
  o.Check(f == 1.0, Fmt("restored F %.4f", f));
  o.Check(ReentrancyPattern(restored) == ReentrancyPattern(expected), "re-entrancy pattern differs");
  o.Check(ReentrancyPattern(expected).size() == 2, "expected two re-entrant nodes");
  if (o.pass) o.detail = "exact tree; restored F 1.0000, 2 re-entrancies";
  return o;
}

Outcome PruningFidelity() {
  Outcome o;
  struct Case {
    const char *input;
    int method;
    std::vector<std::string> removed;
  };
  const std::vector<Case> cases = {
      {testing::kPruneSiblings, 4, {"0.1"}},
      {testing::kPruneSiblings, 1, {"0.1"}},
      {testing::kPruneSiblings, 2, {"0.1"}},
      {testing::kPruneSiblings, 3, {}},
      {testing::kPruneCousins, 4, {"0.2.0.1"}},
      {testing::kPruneCousins, 1, {"0.1.0", "0.2.0.1"}},
      {testing::kPruneCousins, 2, {}},
      {testing::kPruneCousins, 3, {"0.2.0.1"}},
  };
  for (const Case &c : cases) {
    std::vector<std::string> removed;
    VfNode in = Repair(c.input);
    VfNode out = Prune(in, c.method, &removed);
    o.Check(removed == c.removed, "method " + std::to_string(c.method) + " on " + c.input);
    o.Check(CountNodes(out) + removed.size() == CountNodes(in), "removed subtrees are not leaves");
  }
  o.Check(SerializeTree(Prune(Repair(testing::kPruneSiblings), 4)) == testing::kOpiumFree,
          "method 4 siblings output");
  Rng rng(101);
  for (int i = 0; i < kPruneTrees && o.pass; ++i) {
    VfNode tree = testing::RandomTree(rng, 30);
    std::vector<std::string> r2, r3, r4;
    Prune(tree, 2, &r2);
    Prune(tree, 3, &r3);
    Prune(tree, 4, &r4);
    std::set<std::string> s4(r4.begin(), r4.end());
    for (const std::string &p : r2) o.Check(s4.contains(p), "method 4 misses a method 2 path");
    for (const std::string &p : r3) o.Check(s4.contains(p), "method 4 misses a method 3 path");
  }
  if (o.pass) o.detail = "8 fixed cases; subset law on " + std::to_string(kPruneTrees) + " trees";
  return o;
}

std::vector<std::string> Texts(const TokenSequence &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.text);
  return out;
}

std::vector<std::string> Words(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Outcome TokenizationFidelity() {
  Outcome o;
  o.Check(Texts(EncodeAmr("(thing :quant 1 :polarity -)")) ==
              Words("( t h i n g + :quant + 1 + :polarity + - )"),
          "super-character row");
  SentenceRecord r = CleanSentence("I am not that rich .");
  r.tags = std::vector<std::string>{"PRP", "VBP", "RB", "IN", "JJ", ""};
  o.Check(Texts(EncodeSentence(r, true)) ==
              Words("I PRP + a m VBP + n o t RB + t h a t IN + r i c h JJ + ."),
          "POS row");
  Rng rng(202);
  for (int i = 0; i < kTokenizerLines && o.pass; ++i) {
    const std::string line = RandomLine(rng);
    const AmrEncoding encoding{rng.Uniform(2) == 1, rng.Uniform(2) == 1};
    TokenSequence tokens = EncodeAmr(line, encoding);
    o.Check(DecodeAmr(tokens) == line, "amr round trip: " + line);
    o.Check(DecodeAmr(SplitTokens(JoinTokens(tokens))) == line, "amr text round trip: " + line);
    SentenceRecord s = CleanSentence(line);
    o.Check(DecodeSentence(EncodeSentence(s, false)) == s.cleaned, "sentence round trip: " + line);
  }
  if (o.pass) o.detail = "both rows exact; " + std::to_string(kTokenizerLines) + " round trips";
  return o;
}

Outcome SmatchCorrectness() {
  Outcome o;
  Rng rng(303);
  SmatchOptions options;
  options.restarts = kOracleRestarts;
  int equal = 0;
  for (int i = 0; i < kOraclePairs; ++i) {
    AmrGraph gold = testing::RandomGraph(rng, kOracleMaxVars);
    AmrGraph pred = i % 3 == 0 ? testing::RandomGraph(rng, kOracleMaxVars)
                               : testing::Rename(testing::Perturb(gold, rng), rng);
    options.stream = static_cast<std::uint64_t>(i);
    const ScoreReport hill = Smatch(pred, gold, options).report;
    const ScoreReport exact = SmatchOracle(pred, gold);
    o.Check(hill.f <= exact.f + 1e-12, "hill climbing exceeded the oracle");
    equal += hill.f == exact.f;
  }
  const double agreement = static_cast<double>(equal) / kOraclePairs;
  o.Check(agreement >= kOracleAgreement, Fmt("oracle agreement %.4f", agreement));
  int renamed_ok = 0;
  for (int i = 0; i < kRenameGraphs; ++i) {
    AmrGraph g = testing::RandomGraph(rng, 10);
    options.stream = static_cast<std::uint64_t>(i);
    renamed_ok += Smatch(g, testing::Rename(g, rng), options).report.f == 1.0;
  }
  o.Check(renamed_ok == kRenameGraphs, "rename F below 1.0 on " +
                                           std::to_string(kRenameGraphs - renamed_ok) + " graphs");
  if (o.pass) {
    o.detail = Fmt("oracle agreement %.4f over ", agreement) + std::to_string(kOraclePairs) +
               " pairs; " + std::to_string(kRenameGraphs) + " renames at F 1.0";
  }
  return o;
}

std::optional<int> SubtreeMin(const VfNode &node, const std::string &path,
                              const std::map<std::string, int> &own) {
  std::optional<int> best;
  if (auto it = own.find(path); it != own.end()) best = it->second;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    auto k = SubtreeMin(node.children[i], path + "." + std::to_string(i), own);
    if (k && (!best || *k < *best)) best = k;
  }
  return best;
}

// Smallest token aligned to the node itself, else to anything below it.
std::optional<int> Key(const VfNode &node, const std::string &path,
                       const std::map<std::string, int> &own) {
  if (auto it = own.find(path); it != own.end()) return it->second;
  return SubtreeMin(node, path, own);
}

bool MonotoneKeys(const VfNode &node, const std::string &path,
                  const std::map<std::string, int> &own) {
  std::optional<int> last;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const std::string child = path + "." + std::to_string(i);
    if (auto k = Key(node.children[i], child, own)) {
      if (last && *k < *last) return false;
      last = k;
    }
    if (!MonotoneKeys(node.children[i], child, own)) return false;
  }
  return true;
}

Outcome ReorderingContract() {
  Outcome o;
  Reordering opium = BestReordering(Repair(testing::kOpiumFree), testing::OpiumAlignment());
  o.Check(SerializeTree(opium.tree) == testing::kOpiumReordered, "opium order: " + SerializeTree(opium.tree));
  Rng rng(404);
  std::vector<TrainingPair> corpus;
  for (int i = 0; i < kReorderPairs && o.pass; ++i) {
    VfNode tree = testing::RandomTree(rng, 16);
    Alignment a = testing::RandomAlignment(tree, rng);
    Reordering r = BestReordering(tree, a);
    o.Check(BestReordering(r.tree, r.alignment).tree == r.tree, "not idempotent: " + SerializeTree(tree));
    o.Check(Smatch(RestoreVariables(r.tree), RestoreVariables(tree)).report.f == 1.0,
            "semantics changed: " + SerializeTree(tree));
    std::map<std::string, int> own;
    for (const AlignmentEntry &e : r.alignment.entries) {
      auto [it, fresh] = own.emplace(e.path, e.start);
      if (!fresh) it->second = std::min(it->second, e.start);
    }
    o.Check(MonotoneKeys(r.tree, "0", own), "keys out of order: " + SerializeTree(r.tree));
    corpus.push_back({CleanSentence("s"), tree, a});
  }
  o.Check(DoubleData(corpus).size() == 2 * corpus.size(), "double_data count");
  if (o.pass) o.detail = "opium order; " + std::to_string(kReorderPairs) + " random pairs";
  return o;
}

Outcome SilverCuration() {
  Outcome o;
  std::vector<std::string> camr, jamr;
  std::set<std::size_t> strict;
  const auto &cases = testing::AgreementCases();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto [c, j] = testing::AgreementPair(static_cast<int>(i), cases[i].attributes, cases[i].shared);
    camr.push_back(c);
    jamr.push_back(j);
    if (cases[i].agreement > kSilverThreshold) strict.insert(i);
  }
  CurateOptions options;
  options.threshold = kSilverThreshold;
  options.mix = {strict.size(), 0.75, 2024};
  CurationResult r = Curate(camr, jamr, options);
  std::set<std::size_t> kept;
  for (const SilverRecord &rec : r.records) kept.insert(rec.index);
  o.Check(strict.size() == 8, "fixture should keep 8");
  o.Check(kept == strict, "kept set differs from the strict-exceed set");
  o.Check(r.report.camr == 6 && r.report.jamr == 2,
          "mix " + std::to_string(r.report.camr) + "+" + std::to_string(r.report.jamr));
  CurationResult again = Curate(camr, jamr, options);
  bool same = again.records.size() == r.records.size();
  for (std::size_t i = 0; same && i < r.records.size(); ++i) {
    same = again.records[i].index == r.records[i].index &&
           again.records[i].source == r.records[i].source;
  }
  o.Check(same, "not deterministic");
  if (o.pass) o.detail = "8 of 10 kept, 6 CAMR + 2 JAMR";
  return o;
}

Outcome Totality() {
  Outcome o;
  Rng rng(505);
  const std::string alphabet = "()():::/ \"abcxyz-019~\n";
  for (int i = 0; i < kFuzzStrings && o.pass; ++i) {
    std::string raw;
    const std::size_t n = rng.Uniform(120);
    for (std::size_t k = 0; k < n; ++k) {
      raw += i % 2 == 0 ? alphabet[rng.Uniform(alphabet.size())]
                        : static_cast<char>(rng.Uniform(256));
    }
    try {
      PipelineResult r = RunPipeline(raw);
      o.Check(r.graph.CheckInvariants().empty(), "invariants fail on input " + std::to_string(i));
      o.Check(ParseAmr(SerializeAmr(r.graph)).SameGraph(r.graph), "output does not reparse");
    } catch (const std::exception &e) {
      o.Check(false, std::string("threw: ") + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(kFuzzStrings) + " strings";
  return o;
}

// Gold with childless nodes that a second edge also reaches.
AmrGraph AddReentrancies(AmrGraph g, Rng &rng) {
  std::vector<std::string> leaves, sources;
  for (const Instance &inst : g.instances()) {
    if (g.OutgoingEdges(inst.id).empty() && inst.id != g.top()) leaves.push_back(inst.id);
    sources.push_back(inst.id);
  }
  std::set<std::string> used;
  for (const std::string &leaf : leaves) {
    if (!testing::Chance(rng, 50)) continue;
    const std::string &src = testing::Pick(rng, sources);
    if (src == leaf || used.contains(leaf)) continue;
    used.insert(leaf);
    g.AddEdge({src, ":ARG3", VarRef{leaf}, {}});
  }
  return g;
}

std::optional<double> CliF(const std::vector<AmrGraph> &gold, const std::vector<std::string> &raw) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("amrsmith_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream g(dir / "gold.amr");
    for (const AmrGraph &a : gold) WriteAmrBlock(g, a);
    std::ofstream r(dir / "raw.txt");
    for (const std::string &line : raw) r << line << '\n';
  }
  std::ostringstream out, err;
  const int rc = Dispatch({"--quiet", "pipeline-eval", "--raw", (dir / "raw.txt").string(),
                           "--gold", (dir / "gold.amr").string(), "--jobs", "4"},
                          out, err);
  fs::remove_all(dir);
  const std::string s = out.str();
  if (rc != kExitOk || s.find(" F ") == std::string::npos) return std::nullopt;
  return std::stod(s.substr(s.find(" F ") + 3));
}

Outcome EndToEndIdentity() {
  Outcome o;
  Rng rng(606);
  PipelineOptions options;
  std::vector<AmrGraph> plain, reentrant;
  for (int i = 0; i < kEvalGraphs; ++i) {
    AmrGraph g = RestoreVariables(testing::RandomTree(rng, 15, true));
    plain.push_back(g);
    reentrant.push_back(AddReentrancies(g, rng));
  }
  std::size_t reentrancies = 0;
  auto score = [&](const std::vector<AmrGraph> &gold, std::vector<std::string> *raw) {
    std::vector<AmrGraph> pred;
    for (const AmrGraph &g : gold) {
      raw->push_back(SerializeTree(RemoveVariables(g).tree));
      pred.push_back(RunPipeline(raw->back(), options).graph);
    }
    return CorpusSmatch(pred, gold, {}, 4).f;
  };
  for (const AmrGraph &g : reentrant) reentrancies += ReentrancyPattern(g).size();
  std::vector<std::string> raw_plain, raw_reentrant;
  const double f_plain = score(plain, &raw_plain);
  const double f_reentrant = score(reentrant, &raw_reentrant);
  o.Check(f_plain == 1.0, Fmt("re-entrancy-free F %.6f", f_plain));
  o.Check(f_reentrant >= kReentrantF, Fmt("re-entrant F %.6f", f_reentrant));
  o.Check(reentrancies > 0, "fixture has no re-entrancies");
  std::optional<double> cli_plain = CliF(plain, raw_plain);
  std::optional<double> cli_reentrant = CliF(reentrant, raw_reentrant);
  o.Check(cli_plain && *cli_plain == 1.0, "pipeline-eval command on re-entrancy-free corpus");
  o.Check(cli_reentrant && *cli_reentrant >= kReentrantF, "pipeline-eval command on re-entrant corpus");
  if (o.pass) {
    o.detail = Fmt("F %.4f plain, %.4f with ", f_plain, f_reentrant) +
               std::to_string(reentrancies) + " re-entrancies";
  }
  return o;
}

}  // namespace
}  // namespace amrsmith

int main() {
  using namespace amrsmith;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"triple fidelity", TripleFidelity},
      {"preprocessing fidelity", PreprocessingFidelity},
      {"pruning fidelity", PruningFidelity},
      {"tokenization fidelity", TokenizationFidelity},
      {"smatch correctness", SmatchCorrectness},
      {"reordering contract", ReorderingContract},
      {"silver curation", SilverCuration},
      {"totality", Totality},
      {"end-to-end identity", EndToEndIdentity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("criterion %zu %-24s %s  %s\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
