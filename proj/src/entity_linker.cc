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

#include "amrsmith/entity_linker.h"

#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "amrsmith/amr.h"
#include "amrsmith/error.h"

namespace amrsmith {

std::string NormalizeName(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == '"') continue;
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  }
  return SqueezeWhitespace(out);
}

Gazetteer::Gazetteer(const std::vector<std::pair<std::string, std::string>> &entries) {
  for (const auto &[name, title] : entries) Add(name, title);
}

Gazetteer Gazetteer::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kGazetteerUnavailable, "cannot open gazetteer '" + path + "'");
  }
  Gazetteer gazetteer;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kMalformedEntry,
                  path + ":" + std::to_string(number) + ": expected name<TAB>title");
    }
    gazetteer.Add(line.substr(0, tab), line.substr(tab + 1));
  }
  return gazetteer;
}

void Gazetteer::Add(std::string_view name, std::string title) {
  titles_.insert_or_assign(NormalizeName(name), std::move(title));
}

std::optional<std::string> Gazetteer::Lookup(const std::string &name) const {
  auto it = titles_.find(NormalizeName(name));
  if (it == titles_.end()) return std::nullopt;
  return it->second;
}

HttpEntityLinker::HttpEntityLinker(std::string url, std::chrono::milliseconds timeout)
    : timeout_(timeout) {
  std::size_t scheme = url.find("://");
  std::size_t slash = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash == std::string::npos) {
    origin_ = url;
    path_ = "/";
  } else {
    origin_ = url.substr(0, slash);
    path_ = url.substr(slash);
  }
}

std::optional<std::string> HttpEntityLinker::Lookup(const std::string &name) const {
  try {
    httplib::Client client(origin_);
    if (!client.is_valid()) return std::nullopt;
    const auto seconds = timeout_.count() / 1000;
    const auto micros = (timeout_.count() % 1000) * 1000;
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);
    nlohmann::json body = {{"query", name}};
    auto response = client.Post(path_, body.dump(), "application/json");
    if (!response || response->status != 200) return std::nullopt;
    nlohmann::json reply = nlohmann::json::parse(response->body, nullptr, false);
    if (!reply.is_object()) return std::nullopt;
    auto it = reply.find("title");
    if (it == reply.end() || !it->is_string()) return std::nullopt;
    std::string title = it->get<std::string>();
    if (title.empty()) return std::nullopt;
    return title;
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

}  // namespace amrsmith
