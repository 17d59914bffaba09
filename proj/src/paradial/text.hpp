// paradial/text.hpp

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

#ifndef PARADIAL_TEXT_HPP_
#define PARADIAL_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace paradial::text {

// Splits on runs of Unicode whitespace (the same set Python's str.split()
// uses). Input is UTF-8; invalid sequences are treated as non-space bytes.
std::vector<std::string_view> split_whitespace(std::string_view s);

std::size_t word_count(std::string_view s);

std::string_view trim(std::string_view s);

std::string to_lower_ascii(std::string_view s);

bool contains_icase(std::string_view haystack, std::string_view needle);

bool starts_with_icase(std::string_view s, std::string_view prefix);

// Lowercases ASCII letters and removes ASCII and common Unicode punctuation.
// May return an empty string for punctuation-only tokens.
std::string normalize_token(std::string_view token);

}  // namespace paradial::text

#endif  // PARADIAL_TEXT_HPP_
