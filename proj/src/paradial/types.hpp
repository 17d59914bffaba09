// paradial/types.hpp

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

#ifndef PARADIAL_TYPES_HPP_
#define PARADIAL_TYPES_HPP_

#include <cstddef>
#include <set>
#include <string_view>

namespace paradial {

// 0-based word positions into the whitespace tokenization of an utterance.
using WordSet = std::set<std::size_t>;

enum class Side { kGuest, kHost };

constexpr std::string_view side_name(Side side) {
  return side == Side::kGuest ? "guest" : "host";
}

}  // namespace paradial

#endif  // PARADIAL_TYPES_HPP_
