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

#include "seekfc/segmenter.hpp"

#include <optional>

namespace seekfc {
namespace {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 1;
};

// Lenient UTF-8 decoding: an invalid lead or truncated sequence is consumed
// as a single byte so scanning always makes progress.
CodePoint decode_at(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + len > s.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool is_space(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000;
}

bool is_fullwidth_terminator(char32_t c) { return c == 0x3002 || c == 0xFF01 || c == 0xFF1F; }

bool is_terminator(char32_t c) {
  switch (c) {
    case U'.':
    case U'!':
    case U'?':
    case 0x2026:  // …
    case 0x0964:  // ।
    case 0x0965:  // ॥
    case 0x061F:  // ؟
      return true;
    default:
      return is_fullwidth_terminator(c);
  }
}

bool is_closer(char32_t c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'}':
    case 0x2019:  // ’
    case 0x201D:  // ”
    case 0x00BB:  // »
    case 0x300D:  // 」
    case 0x300F:  // 』
    case 0xFF09:  // ）
      return true;
    default:
      return false;
  }
}

bool is_letter(char32_t c) {
  if (c < 0x80) return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
  return !is_space(c) && !is_terminator(c) && !is_closer(c);
}

// Code point ending right before byte `pos`, if any.
std::optional<std::pair<char32_t, std::size_t>> previous_code_point(std::string_view s,
                                                                     std::size_t pos) {
  if (pos == 0) return std::nullopt;
  std::size_t start = pos - 1;
  while (start > 0 && pos - start < 4 && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) {
    --start;
  }
  auto cp = decode_at(s, start);
  if (start + cp.length != pos) return std::pair{char32_t{0xFFFD}, pos - 1};
  return std::pair{cp.value, start};
}

// "U.S." style: the period at `dot` closes a single letter that itself
// follows a period.
bool closes_dotted_initialism(std::string_view s, std::size_t dot) {
  auto letter = previous_code_point(s, dot);
  if (!letter || !is_letter(letter->first)) return false;
  auto before = previous_code_point(s, letter->second);
  return before && before->first == U'.';
}

// A newline followed, after optional horizontal whitespace, by another newline.
bool starts_blank_line(std::string_view s, std::size_t pos) {
  if (s[pos] != '\n') return false;
  std::size_t i = pos + 1;
  while (i < s.size()) {
    auto cp = decode_at(s, i);
    if (cp.value == U'\n') return true;
    if (!is_space(cp.value)) return false;
    i += cp.length;
  }
  return false;
}

}  // namespace

std::size_t whitespace_length_at(std::string_view text, std::size_t pos) {
  auto cp = decode_at(text, pos);
  return is_space(cp.value) ? cp.length : 0;
}

std::size_t count_tokens(std::string_view text) {
  std::size_t tokens = 0;
  bool in_token = false;
  for (std::size_t pos = 0; pos < text.size();) {
    auto cp = decode_at(text, pos);
    if (is_space(cp.value)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++tokens;
    }
    pos += cp.length;
  }
  return tokens;
}

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> out;
  std::optional<std::size_t> open;  // first byte of the current sentence
  std::size_t content_end = 0;      // one past its last non-whitespace byte

  auto close = [&](std::size_t end) {
    if (!open) return;
    Sentence s;
    s.index = out.size();
    s.char_span = {*open, end};
    s.text = std::string(text.substr(*open, end - *open));
    s.token_count = count_tokens(s.text);
    out.push_back(std::move(s));
    open.reset();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = decode_at(text, pos);
    if (is_space(cp.value)) {
      if (open && starts_blank_line(text, pos)) close(content_end);
      pos += cp.length;
      continue;
    }
    if (!open) open = pos;

    if (!is_terminator(cp.value)) {
      pos += cp.length;
      content_end = pos;
      continue;
    }

    // Terminator run, then trailing closing quotes/brackets.
    const std::size_t run_start = pos;
    bool fullwidth = false;
    std::size_t end = pos;
    while (end < text.size()) {
      auto next = decode_at(text, end);
      if (is_terminator(next.value)) {
        fullwidth = fullwidth || is_fullwidth_terminator(next.value);
      } else if (!is_closer(next.value)) {
        break;
      }
      end += next.length;
    }
    pos = end;
    content_end = end;

    const bool at_gap = end == text.size() || whitespace_length_at(text, end) > 0;
    if (!at_gap && !fullwidth) continue;
    if (text[run_start] == '.' && closes_dotted_initialism(text, run_start)) continue;
    close(end);
  }
  close(content_end);
  return out;
}

}  // namespace seekfc
