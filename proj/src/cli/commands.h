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

#ifndef AMRSMITH_CLI_COMMANDS_H_
#define AMRSMITH_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>

namespace amrsmith::cli {

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string config;
  bool quiet = false;
};

// Every subcommand flag. Only the selected subcommand's fields are set.
struct Args {
  std::string in = "-";
  std::string out = "-";
  std::string layout = "indented";
  bool check = false;
  bool literal_of = false;
  int restarts = 4;

  std::string pred;
  std::string gold;
  bool metrics = false;
  std::string per_pair;
  std::string metric;

  std::string corpus;
  bool strip_wiki = false;
  std::string reorder = "best";
  bool double_data = false;
  std::string alignments_format = "jamr";
  std::string alignments;
  std::string out_amr;
  std::string out_snt;

  std::string mode;
  bool super_relations = false;
  bool depth_parens = false;
  bool pos = false;
  std::string tags;
  std::string vocab;
  bool decode = false;

  int prune = 4;
  bool no_prune = false;
  bool no_coref = false;
  std::string wiki;
  std::string wiki_url;
  std::string log;

  std::string camr;
  std::string jamr;
  std::size_t total = 0;
  double camr_fraction = 1.0;
  double threshold = 55.0;
  bool inclusive = false;
  std::string report;

  std::string raw;
};

struct Io {
  std::ostream &out;
  std::ostream &err;
  bool quiet = false;

  void Progress(const std::string &message) const {
    if (!quiet) err << message << '\n';
  }
};

int Run(const std::string &command, const Globals &globals, const Args &args, const Io &io);

}  // namespace amrsmith::cli

#endif  // AMRSMITH_CLI_COMMANDS_H_
