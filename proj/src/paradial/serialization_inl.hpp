// paradial/serialization_inl.hpp

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

#ifndef PARADIAL_SERIALIZATION_INL_HPP_
#define PARADIAL_SERIALIZATION_INL_HPP_

#include "paradial/errors.hpp"

namespace paradial::io {

template <class F>
auto convert_records(const std::vector<JsonlRecord>& records,
                     std::string_view origin, F convert)
    -> std::vector<decltype(convert(records.front().value))> {
  std::vector<decltype(convert(records.front().value))> out;
  out.reserve(records.size());
  for (const JsonlRecord& r : records) {
    try {
      out.push_back(convert(r.value));
    } catch (const FormatError& e) {
      throw FormatError(std::string(origin) + ":" + std::to_string(r.line) +
                        ": " + e.what());
    }
  }
  return out;
}

}  // namespace paradial::io

#endif  // PARADIAL_SERIALIZATION_INL_HPP_
