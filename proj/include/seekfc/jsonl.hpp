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

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace seekfc::jsonl {

// Calls `fn(object, line_number)` for every non-blank line. Lines that do not
// parse as a JSON object raise InputError("<path> line N: malformed ...").
void for_each_object(const std::filesystem::path& path,
                     const std::function<void(const nlohmann::json&, std::size_t)>& fn);

// Writes `contents` to a sibling temp file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace seekfc::jsonl
