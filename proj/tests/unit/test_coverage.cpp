// Copyright 2026 The lexcov Authors.
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

#include "lexcov/coverage.hpp"
#include "lexcov/error.hpp"
#include "lexcov/unicode.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace lexcov;

namespace {

auto data(const char* name) -> std::filesystem::path
{
	return std::filesystem::path(LEXCOV_TEST_DATA) / name;
}

auto read_file(const std::filesystem::path& p) -> std::string
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

auto word_list(std::string_view text, FoldMode mode,
               std::string id = "c") -> WordList
{
	auto const s = preprocess(text, id);
	return build_word_list(std::span(&s, 1), mode, id);
}

auto compile_text(std::string_view text) -> Lexicon
{
	auto const f = parse_dict_text(text);
	return Lexicon::compile(std::span(&f, 1));
}

auto pct(std::uint64_t part, std::uint64_t whole) -> std::string
{
	return format_percent(Percent::of(part, whole), NumberLocale::plain);
}

} // namespace

TEST_CASE("word lists")
{
	auto const cased = word_list("Uma uma UMA rosa é a rosa!", FoldMode::cased);
	CHECK(cased.type_count() == 6);
	CHECK(cased.token_count() == 7);
	CHECK(cased.entries.at("rosa") == 2);

	auto const folded =
	    word_list("Uma uma UMA rosa é a rosa!", FoldMode::folded);
	CHECK(folded.type_count() == 4);
	CHECK(folded.token_count() == 7);
	CHECK(folded.entries.at("uma") == 3);
	CHECK(word_list_tsv(folded) == "uma\t3\nrosa\t2\na\t1\né\t1\n");

	// Numbers and punctuation are not words.
	CHECK(word_list("Em 2026, 3 vezes.", FoldMode::cased).token_count() == 2);
	CHECK(word_list("", FoldMode::cased).type_count() == 0);
}

TEST_CASE("percentages of the published table")
{
	struct Row {
		std::uint64_t unknown, total;
		const char* printed;
	};
	Row const rows[] = {
	    {10512, 53966, "19.48"}, {36190, 984465, "3.68"},
	    {9967, 53966, "18.47"},  {34611, 984465, "3.52"},
	    {3048, 22414, "13.60"},  {11624, 215776, "5.39"},
	    {2769, 22414, "12.35"},  {10870, 215776, "5.04"},
	};
	for (auto const& r : rows) {
		CAPTURE(r.unknown);
		CHECK(pct(r.unknown, r.total) == r.printed);
	}
	auto const rep = make_report("DG", "2004", 53966, 10512, 984465, 36190);
	CHECK(format_percent(rep.pct_types_unknown(), NumberLocale::pt_br) ==
	      "19,48");
	CHECK(format_count(rep.types_total, NumberLocale::pt_br) == "53.966");
	CHECK(format_count(rep.tokens_total, NumberLocale::pt_br) == "984.465");
}

TEST_CASE("rounding")
{
	CHECK(pct(0, 10) == "0.00");
	CHECK(pct(0, 0) == "0.00");
	CHECK(pct(10, 10) == "100.00");
	CHECK(pct(1, 8) == "12.50");
	CHECK(pct(1, 16) == "6.25");
	CHECK(pct(1, 32) == "3.13");  // 3.125 rounds up
	CHECK(pct(1, 3) == "33.33");
	CHECK(pct(2, 3) == "66.67");
	CHECK(pct(1, 200000) == "0.00"); // 0.0005
	CHECK(pct(1, 20000) == "0.01");  // 0.005 rounds up
	auto const big = std::uint64_t(1) << 62;
	CHECK(pct(big - 1, big) == "100.00");
	CHECK(format_percent(Percent{-113}, NumberLocale::plain) == "-1.13");
	CHECK(format_percent(Percent{-5}, NumberLocale::pt_br) == "-0,05");
}

TEST_CASE("format_count")
{
	CHECK(format_count(0, NumberLocale::pt_br) == "0");
	CHECK(format_count(999, NumberLocale::pt_br) == "999");
	CHECK(format_count(1000, NumberLocale::pt_br) == "1.000");
	CHECK(format_count(1234567, NumberLocale::pt_br) == "1.234.567");
	CHECK(format_count(1234567, NumberLocale::plain) == "1234567");
	CHECK(parse_number_locale("pt-BR") == NumberLocale::pt_br);
	CHECK(parse_number_locale("plain") == NumberLocale::plain);
	CHECK_FALSE(parse_number_locale("fr"));
}

TEST_CASE("make_report validates counts")
{
	CHECK_THROWS_AS(make_report("c", "d", 5, 6, 10, 1), std::invalid_argument);
	CHECK_THROWS_AS(make_report("c", "d", 5, 1, 10, 11),
	                std::invalid_argument);
	CHECK(make_report("c", "d", 0, 0, 0, 0).pct_types_unknown().hundredths ==
	      0);
}

TEST_CASE("version deltas")
{
	auto const dg04 = make_report("DG", "2004", 53966, 10512, 984465, 36190);
	auto const dg15 = make_report("DG", "2015", 53966, 9967, 984465, 34611);
	auto const ma04 = make_report("MA", "2004", 22414, 3048, 215776, 11624);
	auto const ma15 = make_report("MA", "2015", 22414, 2769, 215776, 10870);

	auto const dg = compare_versions(dg04, dg15);
	auto const ma = compare_versions(ma04, ma15);
	CHECK(dg.types.hundredths == 101);
	CHECK(ma.types.hundredths == 125);
	CHECK(dg.tokens.hundredths == 16);
	CHECK(ma.tokens.hundredths == 35);
	std::vector const both{dg, ma};
	auto const mean = mean_delta(both);
	CHECK(mean.types.hundredths == 113);
	CHECK(mean.tokens.hundredths == 26); // 25.5 rounds up
	CHECK(mean.corpus_id == "mean");

	CHECK(compare_versions(dg04, dg04).types.hundredths == 0);
	CHECK(compare_versions(dg15, dg04).types.hundredths == -101);
	CHECK_THROWS_AS(compare_versions(dg04, ma15), MismatchedCorpus);
	CHECK(mean_delta({}).types.hundredths == 0);

	// Anti-symmetry on random reports.
	std::mt19937_64 rng(3);
	for (int i = 0; i < 1000; ++i) {
		auto const total = rng() % 100000 + 1;
		auto const a = make_report("x", "a", total, rng() % (total + 1), 1, 0);
		auto const b = make_report("x", "b", total, rng() % (total + 1), 1, 0);
		CHECK(compare_versions(a, b).types.hundredths ==
		      -compare_versions(b, a).types.hundredths);
	}
}

TEST_CASE("rendering")
{
	auto const r = make_report("DG", "DELAF-2004", 53966, 10512, 984465, 36190);
	auto const text = render_text(r, NumberLocale::pt_br);
	CHECK(text.find("19,48%") != std::string::npos);
	CHECK(text.find("3,68%") != std::string::npos);
	CHECK(text.find("53.966") != std::string::npos);

	auto const j = nlohmann::json::parse(render_json(r));
	CHECK(j["types_unknown"] == 10512);
	CHECK(j["pct_types_unknown"].get<double>() == doctest::Approx(19.48));

	auto const zero = make_report("c", "d", 10, 0, 20, 0);
	CHECK(render_text(zero, NumberLocale::plain).find("0.00%") !=
	      std::string::npos);

	auto const d = compare_versions(
	    r, make_report("DG", "DELAF-2015", 53966, 9967, 984465, 34611));
	CHECK(render_text(d, NumberLocale::plain).find("1.01") !=
	      std::string::npos);
	CHECK(nlohmann::json::parse(render_json(d))["types_pp"].get<double>() ==
	      doctest::Approx(1.01));
}

TEST_CASE("coverage from a lexicon")
{
	auto const lex = compile_text("uma,um.DET:fs\nrosa,.N:fs\né,ser.V:P3s\n");
	auto const folded = word_list("Uma uma UMA rosa é a rosa!", FoldMode::folded);
	auto const rf = coverage(folded, lex, CaseFoldPolicy::exact, "d");
	CHECK(rf.types_total == 4);
	CHECK(rf.types_unknown == 1); // a
	CHECK(rf.tokens_total == 7);
	CHECK(rf.tokens_unknown == 1);

	auto const cased = word_list("Uma uma UMA rosa é a rosa!", FoldMode::cased);
	auto const exact = coverage(cased, lex, CaseFoldPolicy::exact, "d");
	CHECK(exact.types_unknown == 3); // Uma, UMA, a
	CHECK(exact.tokens_unknown == 3);
	auto const unitex = coverage(cased, lex, CaseFoldPolicy::unitex_like, "d");
	CHECK(unitex.types_unknown == 1);
}

TEST_CASE("coverage from a dictionary run")
{
	auto const f = load_dict_file(data("mini.dic"));
	auto const lex = Lexicon::compile(std::span(&f, 1));
	auto const text = read_file(data("corpus/misc_01.txt"));
	auto const stream = preprocess(text, "misc");
	auto const r = apply_dictionaries(lex, stream, CaseFoldPolicy::unitex_like);

	// Independent count straight from the token stream.
	std::map<std::string, std::uint64_t> freq;
	for (auto const& t : stream.tokens)
		if (t.kind == TokenKind::word)
			++freq[t.text];
	std::uint64_t unknown_types = 0, unknown_tokens = 0, tokens = 0;
	for (auto const& [w, n] : freq) {
		tokens += n;
		if (r.err.count(w)) {
			++unknown_types;
			unknown_tokens += n;
		}
	}

	auto const cased = build_word_list(r, FoldMode::cased);
	CHECK(cased.type_count() == freq.size());
	auto const rep = coverage(cased, r, "mini");
	CHECK(rep.types_total == freq.size());
	CHECK(rep.tokens_total == tokens);
	CHECK(rep.types_unknown == unknown_types);
	CHECK(rep.tokens_unknown == unknown_tokens);

	auto const folded = build_word_list(r, FoldMode::folded);
	auto const frep = coverage(folded, r, "mini");
	CHECK(frep.types_total <= rep.types_total);
	CHECK(frep.types_unknown <= rep.types_unknown);
	CHECK(frep.tokens_total == rep.tokens_total);

	auto other = build_word_list(r, FoldMode::cased);
	other.corpus_id = "elsewhere";
	CHECK_THROWS_AS(coverage(other, r), MismatchedCorpus);
}

TEST_CASE("a larger dictionary never covers less")
{
	std::mt19937 rng(19);
	auto const f = load_dict_file(data("mini.dic"));
	auto const text = read_file(data("corpus/misc_01.txt")) +
	                  read_file(data("corpus/ma_01.txt")) +
	                  read_file(data("corpus/dg_01.txt"));
	auto const words = word_list(text, FoldMode::folded);
	for (int round = 0; round < 20; ++round) {
		DictFile small = f, large = f;
		small.entries.clear();
		for (auto const& e : f.entries)
			if (rng() % 2)
				small.entries.push_back(e);
		if (small.entries.empty())
			small.entries.push_back(f.entries.front());
		auto const a = coverage(words, Lexicon::compile(std::span(&small, 1)),
		                        CaseFoldPolicy::unitex_like);
		auto const b = coverage(words, Lexicon::compile(std::span(&large, 1)),
		                        CaseFoldPolicy::unitex_like);
		CHECK(b.types_unknown <= a.types_unknown);
		CHECK(b.tokens_unknown <= a.tokens_unknown);
	}
}

TEST_CASE("dictionary diffs")
{
	auto const a = parse_dict_text("casa,.N:fs\nCasa,.N+NPR\nrosa,.N:fs\n");
	auto const b = parse_dict_text("casa,.N:fs\nidéia,.N:fs\n");
	auto const d = diff_dictionaries(std::span(&a, 1), std::span(&b, 1),
	                                 FoldMode::cased);
	CHECK(d.common == 1);
	CHECK(d.only_in_a == std::set<std::string>{"Casa", "rosa"});
	CHECK(d.only_in_b == std::set<std::string>{"idéia"});

	auto const f = diff_dictionaries(std::span(&a, 1), std::span(&b, 1),
	                                 FoldMode::folded);
	CHECK(f.common == 1);
	CHECK(f.only_in_a == std::set<std::string>{"rosa"});

	auto const same = diff_dictionaries(std::span(&a, 1), std::span(&a, 1),
	                                    FoldMode::cased);
	CHECK(same.only_in_a.empty());
	CHECK(same.only_in_b.empty());
	CHECK(same.common == 3);

	auto const back = diff_dictionaries(std::span(&b, 1), std::span(&a, 1),
	                                    FoldMode::cased);
	CHECK(back.only_in_a == d.only_in_b);
	CHECK(back.only_in_b == d.only_in_a);

	auto const text = render_text(d, NumberLocale::plain);
	CHECK(text.find("< rosa\n") != std::string::npos);
	CHECK(text.find("> idéia\n") != std::string::npos);
}
