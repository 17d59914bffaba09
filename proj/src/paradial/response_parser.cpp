// paradial/response_parser.cpp

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

#include "paradial/response_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>

#include "paradial/errors.hpp"
#include "paradial/text.hpp"

namespace paradial::response {
namespace {

constexpr std::string_view kClassificationField = "Classification";
constexpr std::string_view kGuestField = "Verbatim Quote Guest";
constexpr std::string_view kHostField = "Verbatim Quote Host";
constexpr std::string_view kExplanationField = "Explanation";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// Value after "<name>:" when the trimmed line starts with the field name.
std::optional<std::string_view> field_value(std::string_view line,
                                            std::string_view name) {
  line = text::trim(line);
  if (!text::starts_with_icase(line, name)) return std::nullopt;
  std::string_view rest = line.substr(name.size());
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  if (rest.empty() || rest.front() != ':') return std::nullopt;
  return text::trim(rest.substr(1));
}

bool is_field_line(std::string_view line) {
  for (std::string_view name :
       {kClassificationField, kGuestField, kHostField, kExplanationField})
    if (field_value(line, name)) return true;
  return false;
}

std::vector<std::string_view> split_lines(std::string_view raw) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t nl = raw.find('\n', start);
    if (nl == std::string_view::npos) nl = raw.size();
    std::string_view line = raw.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

std::optional<bool> parse_yes_no(std::string_view value) {
  const std::string lower = text::to_lower_ascii(value);
  auto word = [&](std::string_view w) {
    if (lower.compare(0, w.size(), w) != 0) return false;
    if (lower.size() == w.size()) return true;
    const unsigned char next = static_cast<unsigned char>(lower[w.size()]);
    return !(std::isalnum(next) || next >= 0x80);
  };
  if (word("yes")) return true;
  if (word("no")) return false;
  return std::nullopt;
}

bool is_none(std::string_view value) {
  const std::string lower = text::to_lower_ascii(text::trim(value));
  return lower == "none" || lower == "none.";
}

// Curly double quotes become ASCII ones.
std::string straighten_quotes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(s[i + 2]) == 0x9C ||
         static_cast<unsigned char>(s[i + 2]) == 0x9D)) {
      out.push_back('"');
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

struct NormalizedTokens {
  std::vector<std::string> tokens;
  std::vector<std::size_t> positions;  // whitespace-token index in the source
};

NormalizedTokens normalize(std::string_view s) {
  NormalizedTokens out;
  const auto words = text::split_whitespace(s);
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string t = text::normalize_token(words[i]);
    if (t.empty()) continue;
    out.tokens.push_back(std::move(t));
    out.positions.push_back(i);
  }
  return out;
}

std::size_t matched_size(const Prediction& p) {
  return p.guest_words.size() + p.host_words.size();
}

}  // namespace

std::string_view error_kind_name(ExtractionErrorKind kind) {
  switch (kind) {
    case ExtractionErrorKind::kMissingClassification:
      return "missing_classification";
    case ExtractionErrorKind::kInconsistentHighlighting:
      return "inconsistent_highlighting";
    case ExtractionErrorKind::kHallucinatedQuote:
      return "hallucinated_quote";
    case ExtractionErrorKind::kUnparseable:
      return "unparseable";
  }
  return "unparseable";
}

ExtractionErrorKind parse_error_kind(std::string_view name) {
  for (ExtractionErrorKind k : kAllErrorKinds)
    if (error_kind_name(k) == name) return k;
  throw FormatError("unknown extraction error kind '" + std::string(name) +
                    "'");
}

std::vector<std::string> split_quotes(std::string_view raw_value) {
  const std::string value = straighten_quotes(text::trim(raw_value));
  std::vector<std::string> quotes;
  if (value.empty() || is_none(value)) return quotes;
  if (value.find('"') == std::string::npos) {
    quotes.emplace_back(value);
    return quotes;
  }
  const std::size_t last_quote = value.rfind('"');
  std::size_t pos = value.find('"');
  while (pos != std::string::npos) {
    const std::size_t open = pos;
    std::size_t close = std::string::npos;
    for (std::size_t j = open + 1; j < value.size(); ++j) {
      if (value[j] != '"') continue;
      std::size_t k = j + 1;
      while (k < value.size() && is_space(value[k])) ++k;
      if (k == value.size() || value[k] == '"') {
        close = j;
        break;
      }
    }
    if (close == std::string::npos)
      close = last_quote > open ? last_quote : value.size();
    const std::string_view segment = text::trim(
        std::string_view(value).substr(open + 1, close - open - 1));
    if (!segment.empty()) quotes.emplace_back(segment);
    if (close >= value.size()) break;
    pos = value.find('"', close + 1);
  }
  return quotes;
}

Extracted<ParsedResponse> parse_response(std::string_view raw) {
  const auto lines = split_lines(raw);
  std::optional<std::string_view> cls, guest, host;
  std::optional<std::size_t> explanation_line;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (auto c = field_value(line, kClassificationField)) {
      cls = c;
    } else if (auto g = field_value(line, kGuestField)) {
      guest = g;
    } else if (auto h = field_value(line, kHostField)) {
      host = h;
    } else if (field_value(line, kExplanationField)) {
      explanation_line = i;
    }
  }
  if (!cls && !guest && !host)
    return ExtractionError{ExtractionErrorKind::kUnparseable,
                           "no classification or quote fields"};
  if (!cls)
    return ExtractionError{ExtractionErrorKind::kMissingClassification,
                           "no classification line"};
  ParsedResponse parsed;
  parsed.classification = parse_yes_no(*cls);
  if (!parsed.classification)
    return ExtractionError{ExtractionErrorKind::kMissingClassification,
                           "classification is neither yes nor no: " +
                               std::string(*cls)};
  if (guest) parsed.guest_quotes = split_quotes(*guest);
  if (host) parsed.host_quotes = split_quotes(*host);
  if (explanation_line) {
    std::string expl(*field_value(lines[*explanation_line], kExplanationField));
    for (std::size_t i = *explanation_line + 1;
         i < lines.size() && !is_field_line(lines[i]); ++i) {
      expl += '\n';
      expl += lines[i];
    }
    parsed.explanation = std::string(text::trim(expl));
  }
  return parsed;
}

std::string render_response(const ParsedResponse& parsed) {
  auto quotes = [](const std::vector<std::string>& qs) {
    if (qs.empty()) return std::string("None.");
    std::string out;
    for (const std::string& q : qs) {
      if (!out.empty()) out += ' ';
      out += '"' + q + '"';
    }
    return out;
  };
  std::string out;
  out += std::string(kExplanationField) + ": " + parsed.explanation + "\n";
  out += std::string(kGuestField) + ": " + quotes(parsed.guest_quotes) + "\n";
  out += std::string(kHostField) + ": " + quotes(parsed.host_quotes) + "\n";
  out += std::string(kClassificationField) + ": ";
  if (parsed.classification)
    out += *parsed.classification ? "Yes." : "No.";
  out += "\n";
  return out;
}

void check_match_options(const MatchOptions& options) {
  if (!(options.min_coverage > 0.0 && options.min_coverage <= 1.0))
    throw UsageError("min_coverage must be in (0, 1]");
}

std::optional<WordSet> match_quote(std::string_view quote,
                                   std::string_view source,
                                   const MatchOptions& options) {
  check_match_options(options);
  const NormalizedTokens q = normalize(quote);
  const NormalizedTokens s = normalize(source);
  const std::size_t m = q.tokens.size();
  const std::size_t n = s.tokens.size();
  if (m == 0 || n == 0) return std::nullopt;

  if (m <= n) {
    for (std::size_t j = 0; j + m <= n; ++j) {
      if (std::equal(q.tokens.begin(), q.tokens.end(),
                     s.tokens.begin() + static_cast<std::ptrdiff_t>(j))) {
        WordSet out;
        for (std::size_t k = 0; k < m; ++k) out.insert(s.positions[j + k]);
        return out;
      }
    }
  }

  // f[i][j]: most matches of an alignment whose first pair is (q_i, s_j).
  // g[i][j]: max over i' >= i of f[i'][j]. Zero means no alignment.
  const std::size_t w = n + 1;
  std::vector<std::size_t> f((m + 1) * w, 0), g((m + 1) * w, 0);
  auto at = [w](std::vector<std::size_t>& v, std::size_t i, std::size_t j)
      -> std::size_t& { return v[i * w + j]; };
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      if (q.tokens[i] == s.tokens[j]) {
        std::size_t best = 0;
        const std::size_t hi = std::min(n - 1, j + options.max_gap + 1);
        for (std::size_t jj = j + 1; jj <= hi; ++jj)
          best = std::max(best, at(g, i + 1, jj));
        at(f, i, j) = 1 + best;
      }
      at(g, i, j) = std::max(at(f, i, j), at(g, i + 1, j));
    }
  }
  const double needed = options.min_coverage * static_cast<double>(m) - 1e-9;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t best = at(g, 0, j);
    if (best == 0 || static_cast<double>(best) < needed) continue;
    std::size_t i = 0;
    while (at(f, i, j) != best) ++i;
    WordSet out;
    out.insert(s.positions[j]);
    std::size_t remaining = best;
    while (remaining > 1) {
      const std::size_t hi = std::min(n - 1, j + options.max_gap + 1);
      bool advanced = false;
      for (std::size_t jj = j + 1; jj <= hi && !advanced; ++jj) {
        if (at(g, i + 1, jj) != remaining - 1) continue;
        std::size_t ii = i + 1;
        while (at(f, ii, jj) != remaining - 1) ++ii;
        i = ii;
        j = jj;
        advanced = true;
      }
      if (!advanced) throw Error("quote alignment reconstruction failed");
      out.insert(s.positions[j]);
      --remaining;
    }
    return out;
  }
  return std::nullopt;
}

Extracted<Prediction> resolve(const ParsedResponse& parsed,
                              const corpus::UtterancePair& pair,
                              const MatchOptions& options) {
  if (!parsed.classification)
    return ExtractionError{ExtractionErrorKind::kMissingClassification,
                           "no classification"};
  Prediction pred;
  pred.pair_id = pair.pair_id;
  if (!*parsed.classification) return pred;
  pred.label = true;
  for (Side side : {Side::kGuest, Side::kHost}) {
    if (parsed.quotes(side).empty())
      return ExtractionError{
          ExtractionErrorKind::kInconsistentHighlighting,
          "paraphrase without " + std::string(side_name(side)) + " quote"};
  }
  for (Side side : {Side::kGuest, Side::kHost}) {
    const std::string& source =
        side == Side::kGuest ? pair.guest_text : pair.host_text;
    WordSet& words = side == Side::kGuest ? pred.guest_words : pred.host_words;
    for (const std::string& quote : parsed.quotes(side)) {
      auto matched = match_quote(quote, source, options);
      if (!matched)
        return ExtractionError{ExtractionErrorKind::kHallucinatedQuote,
                               std::string(side_name(side)) +
                                   " quote not found: " + quote};
      words.insert(matched->begin(), matched->end());
    }
  }
  return pred;
}

Extracted<Prediction> self_consistency(
    std::span<const Extracted<Prediction>> resolved) {
  if (resolved.empty())
    throw ValidationError("self-consistency needs at least one response");
  std::size_t positive = 0;
  std::size_t ok = 0;
  for (const auto& r : resolved) {
    if (const auto* p = std::get_if<Prediction>(&r)) {
      ++ok;
      positive += p->label ? 1 : 0;
    }
  }
  if (ok == 0) {
    std::array<std::size_t, std::size(kAllErrorKinds)> counts{};
    std::array<std::size_t, std::size(kAllErrorKinds)> first{};
    first.fill(std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < resolved.size(); ++i) {
      const auto k = static_cast<std::size_t>(
          std::get<ExtractionError>(resolved[i]).kind);
      ++counts[k];
      first[k] = std::min(first[k], i);
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      if (counts[k] > counts[best] ||
          (counts[k] == counts[best] && first[k] < first[best]))
        best = k;
    }
    return resolved[first[best]];
  }
  const bool label = 2 * positive > ok;
  const Prediction* winner = nullptr;
  for (const auto& r : resolved) {
    const auto* p = std::get_if<Prediction>(&r);
    if (p == nullptr || p->label != label) continue;
    if (winner == nullptr || matched_size(*p) > matched_size(*winner))
      winner = p;
  }
  return *winner;
}

}  // namespace paradial::response
