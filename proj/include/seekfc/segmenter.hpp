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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seekfc {

// Half-open byte range into the parent document.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const ByteSpan&) const = default;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  ByteSpan char_span;
  std::size_t token_count = 0;

  bool operator==(const Sentence&) const = default;
};

// Rule-based multilingual splitter.
//
// A sentence ends at a terminator (. ! ? … । ॥ ؟ and the full-width 。！？)
// when the terminator run, plus any closing quotes or brackets, is followed
// by whitespace or the end of the text. Full-width CJK terminators end a
// sentence even without trailing whitespace. A blank line always ends a
// sentence. A period closing a dotted initialism such as "U.S." does not.
//
// Sentence text is the span with surrounding whitespace trimmed; every
// non-whitespace byte of `text` belongs to exactly one sentence.
std::vector<Sentence> split_sentences(std::string_view text);

// Number of maximal non-whitespace runs. Whitespace is ASCII whitespace plus
// the Unicode space separators (NBSP, U+2000..U+200A, U+2028/9, U+202F,
// U+205F, U+3000, U+0085, U+1680).
std::size_t count_tokens(std::string_view text);

// Byte length of the whitespace character at `pos`, or 0 if none.
std::size_t whitespace_length_at(std::string_view text, std::size_t pos);

}  // namespace seekfc
