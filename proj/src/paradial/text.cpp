// paradial/text.cpp

// Copyright 2026  The paradial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "paradial/text.hpp"

#include <algorithm>
#include <cctype>

namespace paradial::text {
namespace {

unsigned char byte_at(std::string_view s, std::size_t i) {
  return i < s.size() ? static_cast<unsigned char>(s[i]) : 0;
}

// Byte length of the whitespace code point starting at s[i], 0 if none.
std::size_t whitespace_length(std::string_view s, std::size_t i) {
  const unsigned char c = byte_at(s, i);
  if (c < 0x80) {
    return (c == ' ' || (c >= '\t' && c <= '\r') || (c >= 0x1c && c <= 0x1f))
               ? 1
               : 0;
  }
  const unsigned char d = byte_at(s, i + 1);
  if (c == 0xC2) return (d == 0x85 || d == 0xA0) ? 2 : 0;
  const unsigned char e = byte_at(s, i + 2);
  if (c == 0xE1) return (d == 0x9A && e == 0x80) ? 3 : 0;  // U+1680
  if (c == 0xE2) {
    // U+2000..U+200A, U+2028, U+2029, U+202F
    if (d == 0x80 && (e <= 0x8A || e == 0xA8 || e == 0xA9 || e == 0xAF))
      return 3;
    if (d == 0x81 && e == 0x9F) return 3;  // U+205F
    return 0;
  }
  if (c == 0xE3) return (d == 0x80 && e == 0x80) ? 3 : 0;  // U+3000
  return 0;
}

// Byte length of a punctuation code point starting at s[i], 0 if none.
std::size_t punctuation_length(std::string_view s, std::size_t i) {
  const unsigned char c = byte_at(s, i);
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  const unsigned char d = byte_at(s, i + 1);
  if (c == 0xC2) {
    // inverted marks, guillemets, section sign, middle dot
    return (d == 0xA1 || d == 0xA7 || d == 0xAB || d == 0xB6 || d == 0xB7 ||
            d == 0xBB || d == 0xBF)
               ? 2
               : 0;
  }
  if (c == 0xE2) {
    const unsigned char e = byte_at(s, i + 2);
    // General Punctuation U+2010..U+2027 and U+2030..U+205E
    if (d == 0x80 && e >= 0x90 && e <= 0xA7) return 3;
    if (d == 0x80 && e >= 0xB0) return 3;
    if (d == 0x81 && e <= 0x9E) return 3;
  }
  return 0;
}

}  // namespace

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  std::size_t start = std::string_view::npos;
  while (i < s.size()) {
    const std::size_t ws = whitespace_length(s, i);
    if (ws > 0) {
      if (start != std::string_view::npos) {
        out.push_back(s.substr(start, i - start));
        start = std::string_view::npos;
      }
      i += ws;
    } else {
      if (start == std::string_view::npos) start = i;
      ++i;
    }
  }
  if (start != std::string_view::npos) out.push_back(s.substr(start));
  return out;
}

std::size_t word_count(std::string_view s) { return split_whitespace(s).size(); }

std::string_view trim(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size()) {
    const std::size_t ws = whitespace_length(s, begin);
    if (ws == 0) break;
    begin += ws;
  }
  std::size_t end = begin;
  for (std::size_t i = begin; i < s.size();) {
    const std::size_t ws = whitespace_length(s, i);
    if (ws > 0) {
      i += ws;
    } else {
      ++i;
      end = i;
    }
  }
  return s.substr(begin, end - begin);
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool contains_icase(std::string_view haystack, std::string_view needle) {
  return to_lower_ascii(haystack).find(to_lower_ascii(needle)) !=
         std::string::npos;
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  return to_lower_ascii(s.substr(0, prefix.size())) == to_lower_ascii(prefix);
}

std::string normalize_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size();) {
    const std::size_t punct = punctuation_length(token, i);
    if (punct > 0) {
      i += punct;
      continue;
    }
    out.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(token[i]))));
    ++i;
  }
  return out;
}

}  // namespace paradial::text
