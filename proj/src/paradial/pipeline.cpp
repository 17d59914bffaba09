// paradial/pipeline.cpp

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

#include "paradial/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "paradial/errors.hpp"
#include "paradial/parallel.hpp"
#include "paradial/text.hpp"

namespace paradial::pipeline {
namespace {

namespace fs = std::filesystem;
using io::Json;

constexpr std::size_t kListedViolations = 50;

std::string require_path(const RunConfig& c, std::string_view role,
                         std::string_view flag) {
  auto p = c.path(role);
  if (!p)
    throw UsageError("missing input: " + std::string(role) + " (" +
                     std::string(flag) + ")");
  return *p;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fmt(const std::optional<double>& v, int digits = 4) {
  return v ? fmt(*v, digits) : std::string("undefined");
}

// Resolves output roles and rejects outputs that would overwrite an input.
class Outputs {
 public:
  Outputs(const RunConfig& c, std::initializer_list<std::string_view> inputs) {
    for (std::string_view role : inputs)
      if (auto p = c.path(role)) inputs_.push_back(*p);
  }

  std::optional<std::string> get(const RunConfig& c, std::string_view role) {
    auto p = c.path(role);
    if (!p) return std::nullopt;
    std::string out = output_path(*p);
    for (const std::string& in : inputs_)
      if (same_file(in, out))
        throw UsageError("output " + std::string(role) + " (" + out +
                         ") would overwrite input " + in);
    for (const std::string& other : outputs_)
      if (same_file(other, out))
        throw UsageError("output " + out + " is named twice");
    outputs_.push_back(out);
    return out;
  }

 private:
  static bool same_file(const std::string& a, const std::string& b) {
    std::error_code ea, eb;
    const fs::path pa = fs::weakly_canonical(a, ea);
    const fs::path pb = fs::weakly_canonical(b, eb);
    if (ea || eb) return a == b;
    return pa == pb;
  }

  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
};

Json base_document(std::string_view command, const RunConfig& c) {
  Json doc;
  doc["command"] = command;
  doc["config"] = config_json(c);
  return doc;
}

// JSONL output with a provenance sidecar, or stdout when no path is set.
void emit_jsonl(CommandResult& r, const std::optional<std::string>& path,
                const std::vector<Json>& records) {
  const std::string body = io::to_jsonl(records);
  if (!path) {
    r.stdout_payload += body;
    return;
  }
  io::write_atomic(*path, body);
  r.written.push_back(*path);
  const std::string sidecar = *path + ".config.json";
  io::write_atomic(sidecar, io::dump_document(r.document));
  r.written.push_back(sidecar);
}

void emit_document(CommandResult& r, const std::optional<std::string>& path) {
  const std::string body = io::dump_document(r.document);
  if (!path) {
    r.stdout_payload += body;
    return;
  }
  io::write_atomic(*path, body);
  r.written.push_back(*path);
}

std::vector<corpus::UtterancePair> load_pairs(const std::string& path) {
  auto pairs =
      io::convert_records(io::read_jsonl(path), path, io::pair_from_json);
  std::unordered_set<std::string> seen;
  for (const auto& p : pairs)
    if (!seen.insert(p.pair_id).second)
      throw ValidationError(path + ": duplicate pair_id " + p.pair_id);
  return pairs;
}

std::vector<annotations::Annotation> load_annotations(const std::string& path) {
  return io::convert_records(io::read_jsonl(path), path,
                             io::annotation_from_json);
}

std::vector<annotations::AggregatedPair> load_gold(const std::string& path) {
  auto gold =
      io::convert_records(io::read_jsonl(path), path, io::gold_from_json);
  std::unordered_set<std::string> seen;
  for (const auto& g : gold)
    if (!seen.insert(g.pair_id).second)
      throw ValidationError(path + ": duplicate pair_id " + g.pair_id);
  return gold;
}

// Validates under the configured mode; strict failures throw.
annotations::ValidationReport check_annotations(
    const RunConfig& c, std::span<const annotations::Annotation> anns,
    const std::vector<corpus::UtterancePair>* pairs, CommandResult& r) {
  annotations::ValidationReport report =
      pairs ? annotations::validate(anns, *pairs, c.validation)
            : annotations::validate(anns, c.validation);
  if (!report.violations.empty()) {
    std::map<std::string, std::size_t> by_kind;
    for (const auto& v : report.violations)
      ++by_kind[std::string(annotations::violation_name(v.kind))];
    std::string counts;
    for (const auto& [k, n] : by_kind)
      counts += (counts.empty() ? "" : ", ") + k + "=" + std::to_string(n);
    const auto& first = report.violations.front();
    const std::string msg =
        std::to_string(report.violations.size()) +
        " annotation violations (" + counts + "); first: " + first.pair_id +
        " / " + first.annotator_id + ": " + first.detail;
    if (!report.passed()) throw ValidationError(msg);
    r.warnings.push_back(msg);
  }
  if (!pairs)
    r.warnings.push_back("no pairs file: word index bounds not checked");
  return report;
}

std::string dataset_of(const annotations::Annotation& a) {
  return a.dataset ? *a.dataset : std::string("UNLABELED");
}

std::vector<annotations::Annotation> filter_dataset(
    const RunConfig& c, std::vector<annotations::Annotation> anns) {
  if (!c.dataset) return anns;
  std::vector<annotations::Annotation> out;
  for (auto& a : anns)
    if (dataset_of(a) == *c.dataset) out.push_back(std::move(a));
  if (out.empty())
    throw ValidationError("no annotations for dataset " + *c.dataset);
  return out;
}

}  // namespace

std::string output_path(const std::string& path) {
  const char* dir = std::getenv("PARADIAL_OUT_DIR");
  if (dir == nullptr || *dir == '\0' || fs::path(path).is_absolute())
    return path;
  return (fs::path(dir) / path).string();
}

CommandResult preprocess(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "transcripts", "--in");
  Outputs outputs(c, {"transcripts"});
  const auto out = outputs.get(c, "pairs");

  const auto interviews = io::convert_records(io::read_jsonl(in), in,
                                              io::interview_from_json);
  std::unordered_set<std::string> ids;
  for (const auto& iv : interviews)
    if (!ids.insert(iv.id).second)
      throw ValidationError(in + ": duplicate interview id " + iv.id);

  struct Outcome {
    corpus::TwoPersonVerdict verdict = corpus::TwoPersonVerdict::kKept;
    bool too_short = false;
    std::vector<corpus::UtterancePair> pairs;
  };
  std::vector<Outcome> outcomes(interviews.size());
  parallel_for(interviews.size(), c.threads, [&](std::size_t i) {
    const corpus::Interview canon = corpus::canonicalize_speakers(interviews[i]);
    Outcome& o = outcomes[i];
    o.verdict = corpus::classify_two_person(canon);
    if (o.verdict != corpus::TwoPersonVerdict::kKept) return;
    o.too_short = corpus::merge_consecutive_turns(canon).size() <
                  corpus::kMinInterviewTurns;
    o.pairs = corpus::extract_pairs(canon);
  });

  std::size_t not_two = 0, host_second = 0, too_short = 0, kept = 0,
              with_pairs = 0;
  std::vector<Json> records;
  for (const Outcome& o : outcomes) {
    if (o.verdict == corpus::TwoPersonVerdict::kNotTwoPerson) ++not_two;
    else if (o.verdict == corpus::TwoPersonVerdict::kSecondSpeakerIsHost)
      ++host_second;
    else ++kept;
    if (o.too_short) ++too_short;
    if (!o.pairs.empty()) ++with_pairs;
    for (const auto& p : o.pairs) records.push_back(io::to_json(p));
  }

  CommandResult r;
  r.document = base_document("preprocess", c);
  r.document["counts"] = Json{{"interviews", interviews.size()},
                              {"not_two_person", not_two},
                              {"second_speaker_host", host_second},
                              {"two_person", kept},
                              {"too_short", too_short},
                              {"with_pairs", with_pairs},
                              {"pairs", records.size()}};
  r.summary = "preprocess: " + std::to_string(interviews.size()) +
              " interviews, " + std::to_string(kept) + " two-person, " +
              std::to_string(records.size()) + " pairs from " +
              std::to_string(with_pairs) + " interviews";
  emit_jsonl(r, out, records);
  return r;
}

CommandResult sample(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "pairs", "--in");
  Outputs outputs(c, {"pairs"});
  const auto out = outputs.get(c, "sampled");
  const auto pairs = load_pairs(in);

  std::set<std::string> interviews;
  for (const auto& p : pairs) interviews.insert(p.interview_id);
  const std::size_t n = c.n_interviews.value_or(interviews.size());
  corpus::SampleResult s =
      corpus::sample_pairs(pairs, n, c.max_consecutive, c.seed);

  std::set<std::string> drawn;
  std::vector<Json> records;
  for (const auto& p : s.pairs) {
    drawn.insert(p.interview_id);
    records.push_back(io::to_json(p));
  }
  CommandResult r;
  r.warnings = std::move(s.warnings);
  r.document = base_document("sample", c);
  r.document["counts"] = Json{{"input_pairs", pairs.size()},
                              {"input_interviews", interviews.size()},
                              {"sampled_interviews", drawn.size()},
                              {"sampled_pairs", records.size()}};
  r.summary = "sample: " + std::to_string(records.size()) + " pairs from " +
              std::to_string(drawn.size()) + " interviews";
  emit_jsonl(r, out, records);
  return r;
}

CommandResult split(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "pairs", "--in");
  Outputs outputs(c, {"pairs"});
  const auto train = outputs.get(c, "train");
  const auto dev = outputs.get(c, "dev");
  const auto test = outputs.get(c, "test");
  const int given = (train ? 1 : 0) + (dev ? 1 : 0) + (test ? 1 : 0);
  if (given != 0 && given != 3)
    throw UsageError("split: give all of --train, --dev and --test or none");
  const auto pairs = load_pairs(in);
  const corpus::DatasetSplit s = corpus::split_dataset(pairs, c.split, c.seed);

  CommandResult r;
  r.document = base_document("split", c);
  r.document["counts"] = Json{
      {"train", s.train.size()}, {"dev", s.dev.size()}, {"test", s.test.size()}};
  r.summary = "split: train " + std::to_string(s.train.size()) + ", dev " +
              std::to_string(s.dev.size()) + ", test " +
              std::to_string(s.test.size());
  auto records = [](const std::vector<corpus::UtterancePair>& part) {
    std::vector<Json> out;
    for (const auto& p : part) out.push_back(io::to_json(p));
    return out;
  };
  if (given == 0) {
    Json members;
    for (const auto& [name, part] :
         {std::pair{"train", &s.train}, std::pair{"dev", &s.dev},
          std::pair{"test", &s.test}}) {
      Json ids = Json::array();
      for (const auto& p : *part) ids.push_back(p.pair_id);
      members[name] = ids;
    }
    r.document["members"] = members;
    emit_document(r, std::nullopt);
    return r;
  }
  emit_jsonl(r, train, records(s.train));
  emit_jsonl(r, dev, records(s.dev));
  emit_jsonl(r, test, records(s.test));
  return r;
}

CommandResult aggregate(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "annotations", "--in");
  Outputs outputs(c, {"annotations", "pairs"});
  const auto gold_out = outputs.get(c, "gold");
  const auto report_out = outputs.get(c, "report");

  const auto anns = load_annotations(in);
  std::optional<std::vector<corpus::UtterancePair>> pairs;
  if (auto p = c.path("pairs")) pairs = load_pairs(*p);

  CommandResult r;
  const auto report =
      check_annotations(c, anns, pairs ? &*pairs : nullptr, r);
  annotations::AggregateOptions opts{c.highlight_basis, c.threads};
  std::vector<annotations::AggregatedPair> gold =
      pairs ? annotations::aggregate(*pairs, anns, opts)
            : annotations::aggregate(anns, opts);
  const auto stats = annotations::dataset_statistics(gold);

  r.document = base_document("aggregate", c);
  r.document["validation"] = io::to_json(report, kListedViolations);
  Json rows = Json::array();
  for (const auto& s : stats) rows.push_back(io::to_json(s));
  r.document["statistics"] = rows;
  const auto& total = stats.back();
  r.summary = "aggregate: " + std::to_string(total.n_pairs) + " pairs, " +
              std::to_string(total.n_paraphrases) + " paraphrases, " +
              std::to_string(total.n_annotations) + " annotations (" +
              fmt(total.mean_annotations, 1) + " per pair)";
  if (gold_out) {
    std::vector<Json> records;
    for (const auto& g : gold) records.push_back(io::to_json(g));
    emit_jsonl(r, gold_out, records);
  }
  emit_document(r, report_out);
  return r;
}

CommandResult agree(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "annotations", "--in");
  Outputs outputs(c, {"annotations", "pairs"});
  const auto report_out = outputs.get(c, "report");

  std::vector<annotations::Annotation> anns = load_annotations(in);
  std::optional<std::vector<corpus::UtterancePair>> pairs;
  if (auto p = c.path("pairs")) pairs = load_pairs(*p);

  CommandResult r;
  const auto validation =
      check_annotations(c, anns, pairs ? &*pairs : nullptr, r);
  anns = filter_dataset(c, std::move(anns));
  if (!pairs)
    r.warnings.push_back(
        "no pairs file: unitizing alpha needs word counts and is undefined");

  std::map<std::string, std::vector<annotations::Annotation>> by_dataset;
  for (const auto& a : anns) by_dataset[dataset_of(a)].push_back(a);
  std::vector<std::pair<std::string, const std::vector<annotations::Annotation>*>>
      groups;
  for (const auto& [name, list] : by_dataset) groups.emplace_back(name, &list);
  if (by_dataset.size() > 1) groups.emplace_back("TOTAL", &anns);

  metrics::AgreementOptions opts;
  opts.krr_k = c.krr_k;
  opts.krr_resamples = c.krr_resamples;
  opts.seed = c.seed;
  opts.jaccard_pooling = c.jaccard_pooling;
  opts.threads = c.threads;

  Json reports = Json::array();
  std::string brief;
  for (const auto& [name, list] : groups) {
    const auto grouped = pairs ? annotations::group_by_pair(*pairs, *list)
                               : annotations::group_by_pair(*list);
    metrics::AgreementReport rep = metrics::agreement_report(name, grouped, opts);
    if (!pairs) {
      rep.unitizing_alpha_guest.reset();
      rep.unitizing_alpha_host.reset();
    }
    reports.push_back(io::to_json(rep));
    brief += (brief.empty() ? "" : "; ") + name + " alpha " +
             fmt(rep.alpha_nominal, 2) + " acc " + fmt(rep.loo_accuracy, 2);
  }
  r.document = base_document("agree", c);
  r.document["validation"] = io::to_json(validation, kListedViolations);
  r.document["reports"] = reports;
  r.summary = "agree: " + brief;
  emit_document(r, report_out);
  return r;
}

CommandResult allocate_sim(const RunConfig& c) {
  check_config(c);
  std::string in;
  if (auto p = c.path("pool")) in = *p;
  else in = require_path(c, "annotations", "--pool");
  Outputs outputs(c, {"pool", "annotations"});
  const auto report_out = outputs.get(c, "report");

  CommandResult r;
  std::vector<annotations::Annotation> anns = load_annotations(in);
  const auto validation = check_annotations(c, anns, nullptr, r);
  r.warnings.pop_back();  // index bounds do not matter for labels
  anns = filter_dataset(c, std::move(anns));
  const metrics::LabelMatrix pool = metrics::LabelMatrix::from_annotations(anns);

  const auto grid = strategy_grid(c);
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < c.n_seeds; ++i) seeds.push_back(c.seed + i);
  allocation::SimulationOptions sim;
  sim.krr_resamples = c.krr_resamples;
  sim.krr_k_cap = c.krr_k_cap;
  sim.threads = c.threads;
  const auto rows =
      allocation::evaluate_strategies(grid, pool, seeds, c.caps, sim);

  r.document = base_document("allocate-sim", c);
  r.document["validation"] = io::to_json(validation, kListedViolations);
  r.document["n_items"] = pool.n_items();
  r.document["n_raters"] = pool.n_raters();
  Json seed_list = Json::array();
  for (auto s : seeds) seed_list.push_back(s);
  r.document["seeds"] = seed_list;
  Json table = Json::array();
  std::size_t admissible = 0;
  std::string brief;
  for (const auto& row : rows) {
    table.push_back(io::to_json(row));
    admissible += row.admissible ? 1 : 0;
    if (brief.empty())
      brief = allocation::to_string(row.strategy) + " avg " +
              fmt(row.avg_annotators, 2) + " acc " +
              fmt(row.accuracy_vs_full, 3) + " krr " + fmt(row.krr, 3);
  }
  r.document["strategies"] = table;
  r.summary = "allocate-sim: " + std::to_string(rows.size()) +
              " strategies over " + std::to_string(seeds.size()) +
              " seeds, " + std::to_string(pool.n_items()) + " items, " +
              std::to_string(admissible) + " admissible; " + brief;
  emit_document(r, report_out);
  return r;
}

CommandResult extract(const RunConfig& c) {
  check_config(c);
  const std::string in = require_path(c, "predictions", "--in");
  const std::string pairs_path = require_path(c, "pairs", "--pairs");
  Outputs outputs(c, {"predictions", "pairs"});
  const auto resolved_out = outputs.get(c, "resolved");
  const auto errors_out = outputs.get(c, "errors");

  const auto pairs = load_pairs(pairs_path);
  std::unordered_map<std::string, const corpus::UtterancePair*> by_id;
  for (const auto& p : pairs) by_id.emplace(p.pair_id, &p);
  const auto records = io::convert_records(io::read_jsonl(in), in,
                                           io::prediction_record_from_json);
  std::unordered_set<std::string> seen;
  for (const auto& rec : records) {
    if (!by_id.count(rec.pair_id))
      throw ValidationError(in + ": unknown pair_id " + rec.pair_id);
    if (!seen.insert(rec.pair_id).second)
      throw ValidationError(in + ": duplicate pair_id " + rec.pair_id);
  }

  struct Item {
    io::ResolvedRecord resolved;
    std::vector<Json> call_errors;
  };
  std::vector<Item> items(records.size());
  parallel_for(records.size(), c.threads, [&](std::size_t i) {
    const io::PredictionRecord& rec = records[i];
    const corpus::UtterancePair& pair = *by_id.at(rec.pair_id);
    std::vector<response::Extracted<response::Prediction>> calls;
    if (rec.parsed) {
      calls.push_back(response::resolve(*rec.parsed, pair, c.match));
    } else {
      for (const std::string& raw : rec.responses) {
        auto parsed = response::parse_response(raw);
        if (auto* e = std::get_if<response::ExtractionError>(&parsed))
          calls.emplace_back(*e);
        else
          calls.push_back(response::resolve(
              std::get<response::ParsedResponse>(parsed), pair, c.match));
      }
    }
    Item& item = items[i];
    item.resolved.pair_id = rec.pair_id;
    item.resolved.n_calls = calls.size();
    for (std::size_t k = 0; k < calls.size(); ++k) {
      if (const auto* e = std::get_if<response::ExtractionError>(&calls[k])) {
        ++item.resolved.n_call_errors;
        item.call_errors.push_back(io::call_error_json(rec.pair_id, k, *e));
      }
    }
    item.resolved.outcome = response::self_consistency(calls);
  });

  std::vector<Json> resolved, errors;
  std::size_t calls = 0, call_errors = 0, item_errors = 0;
  std::map<std::string, std::size_t> by_kind;
  for (const Item& item : items) {
    resolved.push_back(io::to_json(item.resolved));
    errors.insert(errors.end(), item.call_errors.begin(),
                  item.call_errors.end());
    calls += item.resolved.n_calls;
    call_errors += item.resolved.n_call_errors;
    if (const auto* e =
            std::get_if<response::ExtractionError>(&item.resolved.outcome)) {
      ++item_errors;
      ++by_kind[std::string(response::error_kind_name(e->kind))];
    }
  }
  CommandResult r;
  r.document = base_document("extract", c);
  Json kinds = Json::object();
  for (const auto& [k, n] : by_kind) kinds[k] = n;
  r.document["counts"] = Json{{"items", items.size()},
                              {"calls", calls},
                              {"call_errors", call_errors},
                              {"item_errors", item_errors},
                              {"item_errors_by_kind", kinds}};
  r.summary = "extract: " + std::to_string(items.size()) + " items, " +
              std::to_string(item_errors) + " extraction errors, " +
              std::to_string(call_errors) + "/" + std::to_string(calls) +
              " failed calls";
  emit_jsonl(r, resolved_out, resolved);
  if (errors_out) emit_jsonl(r, errors_out, errors);
  return r;
}

CommandResult evaluate(const RunConfig& c) {
  check_config(c);
  const std::string gold_path = require_path(c, "gold", "--gold");
  const auto resolved_path = c.path("resolved");
  const auto probs_path = c.path("token_probs");
  if (resolved_path.has_value() == probs_path.has_value())
    throw UsageError("evaluate: give exactly one of --pred and --token-probs");
  Outputs outputs(c, {"gold", "resolved", "token_probs", "pairs"});
  const auto report_out = outputs.get(c, "report");
  const auto table_out = outputs.get(c, "table");

  std::vector<annotations::AggregatedPair> gold = load_gold(gold_path);
  std::optional<std::vector<corpus::UtterancePair>> pairs;
  if (auto p = c.path("pairs")) pairs = load_pairs(*p);
  if (pairs) {
    std::unordered_set<std::string> keep;
    for (const auto& p : *pairs) keep.insert(p.pair_id);
    std::erase_if(gold, [&](const auto& g) { return !keep.count(g.pair_id); });
    if (gold.empty())
      throw ValidationError("no gold pair is listed in the pairs file");
  }
  if (gold.empty()) throw ValidationError(gold_path + ": no gold pairs");

  evaluation::EvalInput input;
  input.system = c.system;
  if (resolved_path) {
    const auto records = io::convert_records(
        io::read_jsonl(*resolved_path), *resolved_path, io::resolved_from_json);
    std::size_t n_calls = 0, n_call_errors = 0;
    for (const auto& rec : records) {
      input.outcomes.push_back({rec.pair_id, rec.outcome});
      n_calls += rec.n_calls;
      n_call_errors += rec.n_call_errors;
    }
    input.n_calls = n_calls;
    input.n_call_errors = n_call_errors;
  } else {
    input.generative = false;
    const auto probs = io::convert_records(
        io::read_jsonl(*probs_path), *probs_path, io::token_probs_from_json);
    std::unordered_map<std::string, const corpus::UtterancePair*> by_id;
    if (pairs)
      for (const auto& p : *pairs) by_id.emplace(p.pair_id, &p);
    for (const auto& tp : probs) {
      const corpus::UtterancePair* pair = nullptr;
      if (pairs) {
        auto it = by_id.find(tp.pair_id);
        if (it == by_id.end()) continue;  // outside the evaluated pairs
        pair = it->second;
      }
      input.outcomes.push_back(
          {tp.pair_id, evaluation::threshold_token_probs(tp, c.thresholds, pair)});
    }
  }
  if (pairs) {
    std::unordered_set<std::string> keep;
    for (const auto& g : gold) keep.insert(g.pair_id);
    std::erase_if(input.outcomes,
                  [&](const auto& o) { return !keep.count(o.pair_id); });
  }

  const evaluation::EvalReport report =
      evaluation::evaluate(input, gold, c.jaccard_denominator);
  CommandResult r;
  r.document = base_document("evaluate", c);
  r.document["report"] = io::to_json(report);
  const evaluation::TableRow row = evaluation::table_row(report);
  r.summary = "evaluate: " + std::to_string(report.n_items) + " pairs, F1 " +
              fmt(report.classification.f1, 4) + ", P " +
              fmt(report.classification.precision, 4) + ", R " +
              fmt(report.classification.recall, 4) + ", Jaccard " +
              fmt(report.highlights.guest, 2) + "/" +
              fmt(report.highlights.host, 2) + ", extraction errors " +
              fmt(report.extraction_error_rate, 2);
  if (table_out) {
    io::write_atomic(*table_out,
                     evaluation::format_table(std::span(&row, 1)));
    r.written.push_back(*table_out);
  }
  emit_document(r, report_out);
  return r;
}

CommandResult run(std::string_view command, const RunConfig& config) {
  if (command == "preprocess") return preprocess(config);
  if (command == "sample") return sample(config);
  if (command == "split") return split(config);
  if (command == "aggregate") return aggregate(config);
  if (command == "agree") return agree(config);
  if (command == "allocate-sim") return allocate_sim(config);
  if (command == "extract") return extract(config);
  if (command == "evaluate") return evaluate(config);
  throw UsageError("unknown command '" + std::string(command) + "'");
}

}  // namespace paradial::pipeline
