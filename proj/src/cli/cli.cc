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

#include "amrsmith/cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "amrsmith/error.h"
#include "amrsmith/smatch.h"
#include "cli/commands.h"

namespace amrsmith {

namespace {

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void AddGlobals(CLI::App &app, cli::Globals &g) {
  app.add_option("--seed", g.seed, "Random seed for SMATCH restarts and sampling")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--config", g.config, "File of `key = value` defaults");
  app.add_flag("--quiet", g.quiet, "No progress output");
}

void AddSmatchOptions(CLI::App *sub, cli::Args &a) {
  sub->add_option("--restarts", a.restarts, "Hill-climbing restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_flag("--literal-of", a.literal_of,
                "Score `-of` relations as written instead of inverting them");
  sub->add_option("--metric", a.metric, "Score one fine-grained metric (srl, no-wsd, ...)")
      ->check([](const std::string &name) {
        return ParseMetricKind(name) ? std::string() : "unknown metric '" + name + "'";
      });
}

void AddPostprocessOptions(CLI::App *sub, cli::Args &a) {
  sub->add_option("--prune", a.prune, "Pruning method 0-4")
      ->capture_default_str()
      ->check(CLI::Range(0, 4));
  sub->add_flag("--no-coref", a.no_coref, "Skip co-reference restoration");
  auto *wiki = sub->add_option("--wiki", a.wiki, "Gazetteer TSV (name<TAB>title)");
  sub->add_option("--wiki-url", a.wiki_url, "Entity-linking endpoint (http://)")
      ->excludes(wiki);
  sub->add_option("--log", a.log, "Per-line change log (TSV)");
}

void Build(CLI::App &app, cli::Globals &g, cli::Args &a) {
  app.require_subcommand(1);
  app.fallthrough();
  AddGlobals(app, g);

  auto *parse = app.add_subcommand("parse", "Validate and normalize an AMR corpus");
  parse->add_option("--in", a.in, "Corpus file")->capture_default_str();
  parse->add_option("--out", a.out, "Normalized corpus")->capture_default_str();
  parse->add_flag("--check", a.check, "Only report errors");
  parse->add_option("--layout", a.layout, "indented or single")
      ->capture_default_str()
      ->check(CLI::IsMember({"indented", "single"}));

  auto *triples = app.add_subcommand("triples", "Print the triples of each AMR");
  triples->add_option("--in", a.in, "Corpus file")->capture_default_str();
  triples->add_flag("--literal-of", a.literal_of, "Keep `-of` relations as written");

  auto *smatch = app.add_subcommand("smatch", "Score predicted AMRs against gold");
  smatch->add_option("--pred", a.pred, "Predicted corpus")->required();
  smatch->add_option("--gold", a.gold, "Gold corpus")->required();
  smatch->add_flag("--metrics", a.metrics, "Also print the fine-grained breakdown");
  smatch->add_option("--per-pair", a.per_pair, "One score line per pair, to FILE or stdout")
      ->expected(0, 1)
      ->default_str("-");
  AddSmatchOptions(smatch, a);

  auto *pre = app.add_subcommand("preprocess", "Build variable-free training data");
  pre->add_option("--corpus", a.corpus, "Gold corpus")->required();
  pre->add_flag("--strip-wiki", a.strip_wiki, "Remove :wiki relations");
  pre->add_option("--reorder", a.reorder, "best, inversions, alpha, consistency or none")
      ->capture_default_str()
      ->check(CLI::IsMember({"best", "inversions", "alpha", "consistency", "none"}));
  pre->add_flag("--double", a.double_data, "Originals followed by reordered copies");
  pre->add_option("--alignments-format", a.alignments_format, "jamr, tsv or isi")
      ->capture_default_str()
      ->check(CLI::IsMember({"jamr", "tsv", "isi"}));
  pre->add_option("--alignments", a.alignments,
                  "Alignment sidecar (jamr: one line per AMR; tsv: one block per AMR)");
  pre->add_option("--out-amr", a.out_amr, "One variable-free AMR per line")->required();
  pre->add_option("--out-snt", a.out_snt, "One cleaned sentence per line")->required();

  auto *tok = app.add_subcommand("tokenize", "Character tokens for the seq2seq model");
  tok->add_option("--mode", a.mode, "amr or sent")
      ->required()
      ->check(CLI::IsMember({"amr", "sent"}));
  tok->add_option("--in", a.in, "Input lines")->capture_default_str();
  tok->add_option("--out", a.out, "Output lines")->capture_default_str();
  tok->add_flag("--super-relations", a.super_relations, "Relations as single tokens");
  tok->add_flag("--depth-parens", a.depth_parens, "Parentheses tagged with depth");
  auto *pos = tok->add_flag("--pos", a.pos, "Insert POS tags after each word");
  tok->add_option("--tags", a.tags, "token<TAB>tag sidecar, blank line per sentence")
      ->needs(pos);
  tok->add_option("--vocab", a.vocab, "Write symbol counts");
  tok->add_flag("--decode", a.decode, "Turn token lines back into text");

  auto *post = app.add_subcommand("postprocess", "Repair and restore model output");
  post->add_option("--in", a.in, "Model output, one AMR per line")->capture_default_str();
  post->add_option("--out", a.out, "Restored corpus")->capture_default_str();
  post->add_option("--layout", a.layout, "indented or single")
      ->capture_default_str()
      ->check(CLI::IsMember({"indented", "single"}));
  AddPostprocessOptions(post, a);

  auto *silver = app.add_subcommand("silver", "Curate silver data from CAMR and JAMR");
  silver->add_option("--camr", a.camr, "CAMR corpus")->required();
  silver->add_option("--jamr", a.jamr, "JAMR corpus, aligned by position")->required();
  silver->add_option("--total", a.total, "Sentences to select")->required();
  silver->add_option("--camr-fraction", a.camr_fraction, "Share taken from CAMR")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  silver->add_option("--threshold", a.threshold, "Minimum agreement F (0-100)")
      ->capture_default_str();
  silver->add_flag("--inclusive", a.inclusive, "Keep agreement equal to the threshold");
  silver->add_option("--restarts", a.restarts, "Hill-climbing restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  silver->add_option("--out", a.out, "Selected corpus")->required();
  silver->add_option("--report", a.report, "JSON report")->required();

  auto *eval = app.add_subcommand("pipeline-eval", "Postprocess model output and score it");
  eval->add_option("--raw", a.raw, "Model output, one AMR per line")->required();
  eval->add_option("--gold", a.gold, "Gold corpus")->required();
  eval->add_flag("--no-prune", a.no_prune, "Same as --prune 0");
  eval->add_flag("--metrics", a.metrics, "Also print the fine-grained breakdown");
  AddPostprocessOptions(eval, a);
  AddSmatchOptions(eval, a);
}

CLI::App *Selected(CLI::App &app) {
  auto subs = app.get_subcommands();
  return subs.empty() ? nullptr : subs.front();
}

// Option for a config key: the selected subcommand's first, then global.
CLI::Option *FindOption(CLI::App &app, CLI::App *sub, const std::string &key) {
  const std::string name = "--" + key;
  if (sub != nullptr) {
    if (CLI::Option *opt = sub->get_option_no_throw(name)) return opt;
  }
  return app.get_option_no_throw(name);
}

std::string Describe(CLI::App &app, CLI::App *sub) {
  std::string out = "config: command=" + sub->get_name();
  for (CLI::App *scope : {&app, sub}) {
    for (const CLI::Option *opt : scope->get_options()) {
      if (opt->get_name() == "--help" || opt->get_name() == "-h,--help") continue;
      std::string value;
      if (opt->count() > 0) {
        for (const std::string &r : opt->results()) {
          if (!value.empty()) value += ',';
          value += r;
        }
      } else if (opt->get_expected_min() > 0) {
        value = opt->get_default_str();
      }
      if (value.empty()) continue;
      out += ' ';
      out += opt->get_single_name();
      out += '=';
      out += value;
    }
  }
  return out;
}

int UsageError(CLI::App &app, const CLI::ParseError &e, std::ostream &out,
               std::ostream &err) {
  if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
    app.exit(e, out, err);
    return kExitOk;
  }
  CLI::App *sub = Selected(app);
  err << "error: " << e.what() << "\n\n" << (sub ? sub->help() : app.help());
  return kExitUsage;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> ReadConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::size_t hash = line.find('#');
    std::string body = Trim(line.substr(0, hash));
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedEntry, path + ":" + std::to_string(number) +
                                                  ": expected key = value");
    }
    std::string key = Trim(body.substr(0, eq));
    std::string value = Trim(body.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

std::string FormatScore(const ScoreReport &report) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "P %.4f R %.4f F %.4f", report.precision,
                report.recall, report.f);
  return buffer;
}

int Dispatch(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err) {
  std::vector<std::string> final_args = args;
  {
    // First pass: find the subcommand and the config file, then append
    // config values for every option the command line left unset.
    cli::Globals g;
    cli::Args a;
    CLI::App app{"amrsmith: AMR parsing data tools", "amrsmith"};
    Build(app, g, a);
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError &e) {
      return UsageError(app, e, out, err);
    }
    if (!g.config.empty()) {
      std::vector<std::pair<std::string, std::string>> entries;
      try {
        entries = ReadConfigFile(g.config);
      } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      CLI::App *sub = Selected(app);
      for (const auto &[key, value] : entries) {
        CLI::Option *opt = FindOption(app, sub, key);
        if (opt == nullptr || key == "config") {
          err << "error: unknown config key '" << key << "'\n";
          return kExitUsage;
        }
        if (opt->count() == 0) final_args.push_back("--" + key + "=" + value);
      }
    }
  }

  cli::Globals g;
  cli::Args a;
  CLI::App app{"amrsmith: AMR parsing data tools", "amrsmith"};
  Build(app, g, a);
  try {
    std::vector<std::string> reversed(final_args.rbegin(), final_args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return UsageError(app, e, out, err);
  }
  CLI::App *sub = Selected(app);
  cli::Io io{out, err, g.quiet};
  io.Progress(Describe(app, sub));
  try {
    return cli::Run(sub->get_name(), g, a, io);
  } catch (const Error &e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace amrsmith
