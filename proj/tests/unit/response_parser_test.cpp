// tests/unit/response_parser_test.cpp

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

#include "doctest.h"
#include "fixtures.hpp"
#include "paradial/errors.hpp"
#include "paradial/response_parser.hpp"

using namespace paradial;
using namespace paradial::response;

namespace {

corpus::UtterancePair pair_with(std::string guest, std::string host) {
  corpus::UtterancePair p = fixtures::make_pair("CNN-7-3", 1, 1);
  p.guest_text = std::move(guest);
  p.host_text = std::move(host);
  return p;
}

ExtractionErrorKind kind_of(const Extracted<Prediction>& e) {
  return std::get<ExtractionError>(e).kind;
}

Prediction positive(const std::string& id, WordSet g, WordSet h) {
  return Prediction{id, true, std::move(g), std::move(h)};
}

const char* kGamer =
    "Well I said, Roblox, who makes that? I had never once heard of it. "
    "My kid plays it all day.";
const char* kGamerHost = "So you had no idea?";

}  // namespace

TEST_CASE("error kind names round trip") {
  for (ExtractionErrorKind k : kAllErrorKinds)
    CHECK(parse_error_kind(error_kind_name(k)) == k);
  CHECK(error_kind_name(ExtractionErrorKind::kHallucinatedQuote) ==
        "hallucinated_quote");
  CHECK_THROWS_AS(parse_error_kind("typo"), FormatError);
}

TEST_CASE("split_quotes") {
  using V = std::vector<std::string>;
  CHECK(split_quotes("None.") == V{});
  CHECK(split_quotes("  None ") == V{});
  CHECK(split_quotes("") == V{});
  CHECK(split_quotes("\"a b\" \"c\"") == V{"a b", "c"});
  CHECK(split_quotes("plain words") == V{"plain words"});
  CHECK(split_quotes("\xE2\x80\x9C" "curly one" "\xE2\x80\x9D") == V{"curly one"});
  CHECK(split_quotes("\"I said, \"Roblox\", who is it\"") ==
        V{"I said, \"Roblox\", who is it"});
  CHECK(split_quotes("\"one\"  \"  \" \"two\"") == V{"one", "two"});
}

TEST_CASE("parse_response") {
  SUBCASE("positive with quotes") {
    const std::string raw =
        "Explanation: the host restates the guest.\n"
        "Verbatim Quote Guest: \"a b\" \"c\"\n"
        "Verbatim Quote Host: \"d\"\n"
        "Classification: Yes.\n";
    const auto r = parse_response(raw);
    REQUIRE_FALSE(std::holds_alternative<ExtractionError>(r));
    const auto& p = std::get<ParsedResponse>(r);
    CHECK(p.classification == true);
    CHECK(p.guest_quotes == std::vector<std::string>{"a b", "c"});
    CHECK(p.host_quotes == std::vector<std::string>{"d"});
    CHECK(p.explanation == "the host restates the guest.");
  }
  SUBCASE("negative with None") {
    const auto r = parse_response(
        "Explanation: unrelated.\nVerbatim Quote Guest: None.\n"
        "Verbatim Quote Host: None.\nClassification: No.");
    const auto& p = std::get<ParsedResponse>(r);
    CHECK(p.classification == false);
    CHECK(p.guest_quotes.empty());
    CHECK(p.host_quotes.empty());
  }
  SUBCASE("last field wins, case insensitive") {
    const auto r = parse_response(
        "classification : yes\nCLASSIFICATION: no, not really");
    CHECK(std::get<ParsedResponse>(r).classification == false);
  }
  SUBCASE("unparseable") {
    const auto r = parse_response("I cannot answer that.");
    REQUIRE(std::holds_alternative<ExtractionError>(r));
    CHECK(std::get<ExtractionError>(r).kind == ExtractionErrorKind::kUnparseable);
  }
  SUBCASE("missing classification") {
    const auto a = parse_response("Verbatim Quote Guest: \"x\"\nVerbatim Quote Host: \"y\"");
    CHECK(std::get<ExtractionError>(a).kind ==
          ExtractionErrorKind::kMissingClassification);
    const auto b = parse_response("Classification: maybe");
    CHECK(std::get<ExtractionError>(b).kind ==
          ExtractionErrorKind::kMissingClassification);
    const auto c = parse_response("Classification: yesterday");
    CHECK(std::get<ExtractionError>(c).kind ==
          ExtractionErrorKind::kMissingClassification);
  }
  SUBCASE("render round trip") {
    ParsedResponse p;
    p.classification = true;
    p.guest_quotes = {"we went home", "later"};
    p.host_quotes = {"you went home"};
    p.explanation = "same event";
    CHECK(std::get<ParsedResponse>(parse_response(render_response(p))) == p);
    p.classification = false;
    p.guest_quotes.clear();
    p.host_quotes.clear();
    CHECK(std::get<ParsedResponse>(parse_response(render_response(p))) == p);
  }
}

TEST_CASE("match_quote") {
  SUBCASE("exact span with punctuation and embedded quotes") {
    const auto m = match_quote(
        "I said, \"Roblox\", who makes that?  I had never once heard of it",
        kGamer);
    REQUIRE(m);
    CHECK(*m == WordSet{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
    CHECK(*match_quote("you had no idea?", kGamerHost) ==
          WordSet{1, 2, 3, 4});
  }
  SUBCASE("gapped match tolerates a misspelled name") {
    const auto m = match_quote("heading home jimmy to a quiet weekend",
                               "we are heading home, Jim, to a very quiet weekend");
    REQUIRE(m);
    CHECK(*m == WordSet{2, 3, 5, 6, 8, 9});
  }
  SUBCASE("a dropped source word is bridged") {
    const auto m = match_quote("heading home to a quiet weekend",
                               "we are heading home jimmy to a quiet weekend soon");
    REQUIRE(m);
    CHECK(*m == WordSet{2, 3, 5, 6, 7, 8});
  }
  SUBCASE("coverage and gap limits") {
    MatchOptions strict;
    strict.min_coverage = 1.0;
    CHECK_FALSE(match_quote("heading home jimmy to a quiet weekend",
                            "we are heading home, Jim, to a very quiet weekend",
                            strict));
    MatchOptions tight;
    tight.max_gap = 0;
    CHECK_FALSE(match_quote("a b c d e", "a x b x c x d x e", tight));
    CHECK(match_quote("a b c d e", "a x b x c x d x e"));
    CHECK_FALSE(match_quote("nothing here", "entirely different words"));
    CHECK_FALSE(match_quote("...", "a b"));
  }
  SUBCASE("exact match preferred over an earlier gapped one") {
    CHECK(*match_quote("a b c", "a x b c z a b c") == WordSet{5, 6, 7});
  }
  SUBCASE("options are validated") {
    MatchOptions bad;
    bad.min_coverage = 0.0;
    CHECK_THROWS_AS(match_quote("a", "a", bad), UsageError);
  }
}

TEST_CASE("resolve") {
  const auto pair = pair_with(kGamer, kGamerHost);
  ParsedResponse p;
  p.classification = true;
  p.guest_quotes = {"who makes that?", "I had never once"};
  p.host_quotes = {"had no idea"};
  const auto ok = resolve(p, pair);
  REQUIRE_FALSE(is_error(ok));
  CHECK(std::get<Prediction>(ok) ==
        positive("CNN-7-3", {4, 5, 6, 7, 8, 9, 10}, {2, 3, 4}));

  ParsedResponse neg;
  neg.classification = false;
  neg.guest_quotes = {"ignored"};
  CHECK(std::get<Prediction>(resolve(neg, pair)) ==
        Prediction{"CNN-7-3", false, {}, {}});

  ParsedResponse one_sided = p;
  one_sided.host_quotes.clear();
  CHECK(kind_of(resolve(one_sided, pair)) ==
        ExtractionErrorKind::kInconsistentHighlighting);

  ParsedResponse invented = p;
  invented.host_quotes = {"that never came up in this conversation"};
  CHECK(kind_of(resolve(invented, pair)) == ExtractionErrorKind::kHallucinatedQuote);

  ParsedResponse unsure;
  CHECK(kind_of(resolve(unsure, pair)) == ExtractionErrorKind::kMissingClassification);
}

TEST_CASE("self_consistency") {
  const Extracted<Prediction> a = positive("p", {1}, {1});
  const Extracted<Prediction> b = positive("p", {1, 2, 3}, {1});
  const Extracted<Prediction> n = Prediction{"p", false, {}, {}};
  const Extracted<Prediction> hall =
      ExtractionError{ExtractionErrorKind::kHallucinatedQuote, "x"};
  const Extracted<Prediction> miss =
      ExtractionError{ExtractionErrorKind::kMissingClassification, "y"};

  SUBCASE("majority positive takes the widest highlight") {
    std::vector<Extracted<Prediction>> v{a, n, b};
    CHECK(std::get<Prediction>(self_consistency(v)) == std::get<Prediction>(b));
  }
  SUBCASE("tie is negative") {
    std::vector<Extracted<Prediction>> v{a, n};
    CHECK(std::get<Prediction>(self_consistency(v)).label == false);
  }
  SUBCASE("errors are ignored when something resolved") {
    std::vector<Extracted<Prediction>> v{hall, a, hall};
    CHECK(std::get<Prediction>(self_consistency(v)) == std::get<Prediction>(a));
  }
  SUBCASE("all errors give the most frequent kind") {
    std::vector<Extracted<Prediction>> v{miss, hall, hall};
    CHECK(kind_of(self_consistency(v)) == ExtractionErrorKind::kHallucinatedQuote);
    std::vector<Extracted<Prediction>> tie{miss, hall};
    CHECK(kind_of(self_consistency(tie)) ==
          ExtractionErrorKind::kMissingClassification);
  }
  SUBCASE("empty input") {
    std::vector<Extracted<Prediction>> none;
    CHECK_THROWS_AS(self_consistency(none), ValidationError);
  }
}
