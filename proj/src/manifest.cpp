// Copyright 2026 The seekfc Authors.
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

#include "seekfc/manifest.hpp"

#include <chrono>
#include <ctime>

#include "seekfc/jsonl.hpp"
#include "seekfc/sha256.hpp"
#include "seekfc/version.hpp"

namespace seekfc {
namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  nlohmann::json out;
  out["command"] = command;
  out["config"] = config;
  out["input_hashes"] = input_hashes;
  out["library_version"] = library_version;
  out["timestamp"] = timestamp;
  return out;
}

RunManifest make_manifest(std::string command, nlohmann::json config,
                          const std::vector<std::filesystem::path>& inputs) {
  RunManifest m;
  m.command = std::move(command);
  m.config = std::move(config);
  for (const auto& p : inputs) m.input_hashes[p.string()] = sha256_file_hex(p);
  m.library_version = std::string(kVersion);
  m.timestamp = utc_timestamp();
  return m;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  p += ".manifest.json";
  return p;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& output) {
  jsonl::write_atomically(manifest_path_for(output), manifest.to_json().dump(2) + "\n");
}

}  // namespace seekfc
