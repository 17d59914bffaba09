// tools/paradial_cli.cpp

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

#include <cstdio>
#include <deque>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paradial/paradial.h"

namespace {

// A command-line flag forwarded to the session after parsing, so that flags
// override the --config file regardless of their position.
struct Binding {
  enum Kind { kOption, kPath, kStrategy } kind;
  std::string key;
  CLI::Option* opt = nullptr;
  std::string value;
  std::vector<std::string> values;
};

class Bindings {
 public:
  void option(CLI::App* app, const std::string& flag, const std::string& key,
              const std::string& help) {
    Binding& b = add(Binding::kOption, key);
    b.opt = app->add_option(flag, b.value, help);
  }
  void path(CLI::App* app, const std::string& flag, const std::string& role,
            const std::string& help) {
    Binding& b = add(Binding::kPath, role);
    b.opt = app->add_option(flag, b.value, help);
  }
  void strategies(CLI::App* app) {
    Binding& b = add(Binding::kStrategy, "");
    b.opt = app->add_option(
        "--strategy", b.values,
        "Allocation strategy, repeatable: fixed:N, agree:N:MAX or "
        "entropy:T:MIN:MAX (default entropy:0.8:3:15)");
  }

  // Stops at the first rejected value and returns its status.
  pdl_status apply(pdl_session* s) const {
    bool cleared = false;
    for (const Binding& b : items_) {
      if (b.opt->count() == 0) continue;
      pdl_status st = PDL_OK;
      switch (b.kind) {
        case Binding::kOption:
          st = pdl_session_set_option(s, b.key.c_str(), b.value.c_str());
          break;
        case Binding::kPath:
          st = pdl_session_set_path(s, b.key.c_str(), b.value.c_str());
          break;
        case Binding::kStrategy:
          if (!cleared) pdl_session_clear_strategies(s);
          cleared = true;
          for (const std::string& v : b.values) {
            st = pdl_session_add_strategy(s, v.c_str());
            if (st != PDL_OK) break;
          }
          break;
      }
      if (st != PDL_OK) return st;
    }
    return PDL_OK;
  }

 private:
  Binding& add(Binding::Kind kind, std::string key) {
    items_.push_back(Binding{kind, std::move(key), nullptr, {}, {}});
    return items_.back();
  }
  std::deque<Binding> items_;
};

int exit_code(pdl_status st) {
  if (st == PDL_OK) return 0;
  return st == PDL_ERR_USAGE ? 2 : 1;
}

void add_validation(Bindings& b, CLI::App* cmd) {
  b.option(cmd, "--validation", "validation",
           "Annotation checks: strict (fail on violations) or lenient");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annotation, agreement and evaluation toolkit for paraphrase "
               "highlights in dialog.",
               "paradial"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", pdl_version());

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON configuration; command-line flags override it")
      ->check(CLI::ExistingFile);
  Bindings b;
  b.option(&app, "--seed", "seed", "Seed for all randomness (default 0)");
  b.option(&app, "--threads", "threads",
           "Worker threads, 0 for all cores; outputs do not depend on it");

  auto* pre = app.add_subcommand(
      "preprocess", "Filter transcripts and extract (guest, host) pairs");
  b.path(pre, "--in", "transcripts", "Transcripts JSONL (MediaSum layout)");
  b.path(pre, "--out", "pairs", "Pairs JSONL to write (default stdout)");

  auto* smp = app.add_subcommand(
      "sample", "Sample interviews and windows of consecutive pairs");
  b.path(smp, "--in", "pairs", "Pairs JSONL");
  b.path(smp, "--out", "sampled", "Sampled pairs JSONL (default stdout)");
  b.option(smp, "--n-interviews", "n_interviews",
           "Interviews to draw (default all)");
  b.option(smp, "--max-consecutive", "max_consecutive",
           "Consecutive pairs kept per interview (default 5)");

  auto* spl = app.add_subcommand("split", "Split pairs into train/dev/test");
  b.path(spl, "--in", "pairs", "Pairs JSONL");
  b.path(spl, "--train", "train", "Train pairs JSONL");
  b.path(spl, "--dev", "dev", "Dev pairs JSONL");
  b.path(spl, "--test", "test", "Test pairs JSONL");
  b.option(spl, "--train-ratio", "train_ratio", "Default 0.70");
  b.option(spl, "--dev-ratio", "dev_ratio", "Default 0.15");
  b.option(spl, "--test-ratio", "test_ratio", "Default 0.15");

  auto* agg = app.add_subcommand(
      "aggregate", "Majority labels and highlights plus dataset statistics");
  b.path(agg, "--in", "annotations", "Annotations JSONL");
  b.path(agg, "--pairs", "pairs", "Pairs JSONL (enables index checks)");
  b.path(agg, "--out", "gold", "Gold JSONL to write");
  b.path(agg, "--report", "report", "Statistics document (default stdout)");
  b.option(agg, "--highlight-basis", "highlight_basis",
           "all_annotators (default) or paraphrase_voters");
  add_validation(b, agg);

  auto* agr = app.add_subcommand("agree", "Inter-annotator agreement report");
  b.path(agr, "--in", "annotations", "Annotations JSONL");
  b.path(agr, "--pairs", "pairs", "Pairs JSONL (needed for per-word alpha)");
  b.path(agr, "--out", "report", "Report document (default stdout)");
  b.option(agr, "--dataset", "dataset", "Only this annotation set");
  b.option(agr, "--krr-k", "krr_k", "Subset size for kRR (default 1)");
  b.option(agr, "--krr-resamples", "krr_resamples", "Default 1000");
  b.option(agr, "--jaccard-pooling", "jaccard_pooling",
           "per_pair (default) or global");
  add_validation(b, agr);

  auto* alc = app.add_subcommand(
      "allocate-sim", "Simulate annotator allocation strategies on a pool");
  b.path(alc, "--pool", "pool", "Annotations JSONL used as the rater pool");
  b.path(alc, "--out", "report", "Strategy table document (default stdout)");
  b.strategies(alc);
  b.option(alc, "--n-seeds", "n_seeds",
           "Seeds seed, seed+1, ... averaged per strategy (default 10)");
  b.option(alc, "--cost-cap", "cost_cap", "Max average raters (default 8)");
  b.option(alc, "--accuracy-cap", "accuracy_cap",
           "Min accuracy vs full pool (default 0.90)");
  b.option(alc, "--krr-cap", "krr_cap", "Min kRR (default 0.70)");
  b.option(alc, "--krr-resamples", "krr_resamples", "Default 1000");
  b.option(alc, "--krr-k-cap", "krr_k_cap", "Largest kRR subset (default 7)");
  b.option(alc, "--dataset", "dataset", "Only this annotation set");
  add_validation(b, alc);

  auto* ext = app.add_subcommand(
      "extract", "Parse model responses and resolve quotes to word indices");
  b.path(ext, "--in", "predictions", "Predictions JSONL");
  b.path(ext, "--pairs", "pairs", "Pairs JSONL");
  b.path(ext, "--out", "resolved", "Resolved predictions JSONL");
  b.path(ext, "--errors", "errors", "Per-call extraction errors JSONL");
  b.option(ext, "--max-gap", "max_gap",
           "Skipped source words allowed between quote words (default 3)");
  b.option(ext, "--min-coverage", "min_coverage",
           "Share of quote words that must match (default 0.8)");

  auto* evl = app.add_subcommand("evaluate", "Score predictions against gold");
  b.path(evl, "--gold", "gold", "Gold JSONL");
  b.path(evl, "--pred", "resolved", "Resolved predictions JSONL");
  b.path(evl, "--token-probs", "token_probs", "Token probabilities JSONL");
  b.path(evl, "--pairs", "pairs",
         "Restrict to these pairs and check probability lengths");
  b.path(evl, "--out", "report", "Report document (default stdout)");
  b.path(evl, "--table", "table", "Results table to write");
  b.option(evl, "--system", "system", "Model name for the table");
  b.option(evl, "--tau-cls", "tau_cls", "Classification threshold (0.5)");
  b.option(evl, "--tau-hl", "tau_hl", "Highlight threshold (0.5)");
  b.option(evl, "--jaccard-denominator", "jaccard_denominator",
           "gold_positive (default) or both_positive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<pdl_session, decltype(&pdl_session_destroy)> session(
      pdl_session_create(), &pdl_session_destroy);
  if (!session) {
    std::cerr << "error: out of memory\n";
    return 1;
  }
  pdl_status st = PDL_OK;
  if (!config_path.empty())
    st = pdl_session_load_config_file(session.get(), config_path.c_str());
  if (st == PDL_OK) st = b.apply(session.get());
  if (st == PDL_OK) {
    const std::string command = app.get_subcommands().front()->get_name();
    st = pdl_run(session.get(), command.c_str());
  }
  if (st != PDL_OK) {
    std::cerr << "error: " << pdl_last_error() << "\n";
    if (st == PDL_ERR_USAGE) std::cerr << "run with --help for usage\n";
    return exit_code(st);
  }

  for (size_t i = 0; i < pdl_result_warning_count(session.get()); ++i)
    std::cerr << "warning: " << pdl_result_warning(session.get(), i) << "\n";
  const std::string payload = pdl_result_stdout(session.get());
  if (payload.empty()) {
    std::cout << pdl_result_summary(session.get()) << "\n";
  } else {
    std::cout << payload;
    std::cerr << pdl_result_summary(session.get()) << "\n";
  }
  std::cout.flush();
  return std::cout ? 0 : 1;
}
