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

#ifndef AMRSMITH_ENTITY_LINKER_H_
#define AMRSMITH_ENTITY_LINKER_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace amrsmith {

// Maps a name string ("New York") to a wiki title. Implementations must be
// safe to call from several threads.
class EntityLinker {
 public:
  virtual ~EntityLinker() = default;
  virtual std::optional<std::string> Lookup(const std::string &name) const = 0;
};

// Lowercased (ASCII), quotes removed, whitespace squeezed.
std::string NormalizeName(std::string_view name);

// Offline `name<TAB>title` table.
class Gazetteer : public EntityLinker {
 public:
  Gazetteer() = default;
  explicit Gazetteer(const std::vector<std::pair<std::string, std::string>> &entries);

  // Throws Error(kGazetteerUnavailable) if the file cannot be opened and
  // Error(kMalformedEntry) for a line without a tab.
  static Gazetteer Load(const std::string &path);

  void Add(std::string_view name, std::string title);
  std::size_t size() const { return titles_.size(); }
  std::optional<std::string> Lookup(const std::string &name) const override;

 private:
  std::unordered_map<std::string, std::string> titles_;
};

// POSTs `{"query": name}` to an http:// endpoint and reads `{"title": ...}`.
// Any failure (connection, status, body) counts as a miss.
class HttpEntityLinker : public EntityLinker {
 public:
  explicit HttpEntityLinker(std::string url,
                            std::chrono::milliseconds timeout = std::chrono::seconds(2));

  std::optional<std::string> Lookup(const std::string &name) const override;

 private:
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::chrono::milliseconds timeout_;
};

}  // namespace amrsmith

#endif  // AMRSMITH_ENTITY_LINKER_H_
