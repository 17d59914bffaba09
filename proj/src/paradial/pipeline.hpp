// paradial/pipeline.hpp

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

#ifndef PARADIAL_PIPELINE_HPP_
#define PARADIAL_PIPELINE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "paradial/config.hpp"
#include "paradial/serialization.hpp"

namespace paradial::pipeline {

inline constexpr std::string_view kCommands[] = {
    "preprocess", "sample",       "split",   "aggregate",
    "agree",      "allocate-sim", "extract", "evaluate",
};

struct CommandResult {
  std::string summary;                 // one line
  std::vector<std::string> warnings;
  io::Json document;                   // result document with its config
  std::string stdout_payload;          // what to print when nothing is written
  std::vector<std::string> written;    // files written, in order
};

// Relative output paths are placed under $PARADIAL_OUT_DIR when it is set.
std::string output_path(const std::string& path);

CommandResult preprocess(const RunConfig& config);
CommandResult sample(const RunConfig& config);
CommandResult split(const RunConfig& config);
CommandResult aggregate(const RunConfig& config);
CommandResult agree(const RunConfig& config);
CommandResult allocate_sim(const RunConfig& config);
CommandResult extract(const RunConfig& config);
CommandResult evaluate(const RunConfig& config);

// Dispatches by name; UsageError for unknown commands.
CommandResult run(std::string_view command, const RunConfig& config);

}  // namespace paradial::pipeline

#endif  // PARADIAL_PIPELINE_HPP_
