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

#include "lexcov/error.hpp"
#include "lexcov/preprocess.hpp"
#include "lexcov/unicode.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace lexcov;

namespace {

auto read_file(const char* name) -> std::string
{
	std::ifstream in(std::filesystem::path(LEXCOV_TEST_DATA) / name,
	                 std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

auto texts(const TokenStream& s, TokenKind kind) -> std::vector<std::string>
{
	std::vector<std::string> out;
	for (auto const& t : s.tokens)
		if (t.kind == kind)
			out.push_back(t.text);
	return out;
}

auto sentence_count(const TokenStream& s) -> std::size_t
{
	std::size_t n = 0;
	for (auto const& t : s.tokens)
		n = std::max(n, t.sentence_index + 1);
	return n;
}

auto concat(const TokenStream& s) -> std::string
{
	std::string out;
	for (auto const& t : s.tokens)
		out += t.text;
	return out;
}

} // namespace

TEST_CASE("tokenize")
{
	auto const s = tokenize("O time de Neymar corria atrás do prejuízo.");
	CHECK(texts(s, TokenKind::word) ==
	      std::vector<std::string>{"O", "time", "de", "Neymar", "corria",
	                               "atrás", "do", "prejuízo"});
	CHECK(texts(s, TokenKind::punct) == std::vector<std::string>{"."});
	CHECK(s.word_token_count == 8);

	auto const h = tokenize("abordá-lo em 2026, às 10h");
	CHECK(texts(h, TokenKind::word) ==
	      std::vector<std::string>{"abordá", "lo", "em", "às", "h"});
	CHECK(texts(h, TokenKind::number) ==
	      std::vector<std::string>{"2026", "10"});
	CHECK(texts(h, TokenKind::punct) == std::vector<std::string>{"-", ","});

	// A letter followed by combining marks stays one word.
	auto const d = tokenize("ide\xCC\x81ia!");
	CHECK(texts(d, TokenKind::word) ==
	      std::vector<std::string>{"ide\xCC\x81ia"});

	auto const e = tokenize("");
	CHECK(e.tokens.empty());
}

TEST_CASE("offsets")
{
	std::string const text = "Sr. Silva, 3 vezes";
	auto const s = tokenize(text);
	for (auto const& t : s.tokens)
		CHECK(text.substr(t.begin, t.end - t.begin) == t.text);
}

TEST_CASE("tokenize is lossless on random bytes")
{
	std::mt19937 rng(41);
	std::vector<std::string> const pieces = {
	    "a", "É", "ç", " ", "\n", ".", "-", "7", "\xCC\x81", "\xff", "\xC3",
	    "\t", "\xE2\x80\xA6", "\"", "ü"};
	std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
	for (int i = 0; i < 2000; ++i) {
		std::string text;
		for (int n = int(rng() % 30); n > 0; --n)
			text += pieces[pick(rng)];
		auto const s = tokenize(text);
		CHECK(concat(s) == text);
		std::size_t pos = 0;
		for (auto const& t : s.tokens) {
			CHECK(t.begin == pos);
			CHECK(!t.text.empty());
			pos = t.end;
		}
	}
}

TEST_CASE("normalize_delimiters")
{
	CHECK(normalize_delimiters("a\r\nb\rc") == "a\nb\nc");
	CHECK(normalize_delimiters("a \t  b") == "a b");
	CHECK(normalize_delimiters("a\x01z") == "az");
	CHECK(normalize_delimiters("ide\xCC\x81ia") == "idéia");
	CHECK_THROWS_AS(normalize_delimiters("a\xffz"), InvalidUtf8);
	auto const once = normalize_delimiters("x \r\n\r\n  y z");
	CHECK(normalize_delimiters(once) == once);
}

TEST_CASE("sentence segmentation")
{
	SUBCASE("two sentences")
	{
		auto const s =
		    segment_sentences(tokenize("Ele veio. Ela ficou em casa."));
		CHECK(sentence_count(s) == 2);
	}
	SUBCASE("lowercase after a period does not split")
	{
		CHECK(sentence_count(segment_sentences(
		          tokenize("Veio às 10 a.m. e saiu."))) == 1);
	}
	SUBCASE("abbreviations")
	{
		AbbreviationList const abbr{"Sr", "Dr"};
		auto const s =
		    segment_sentences(tokenize("O Sr. Silva chegou. Foi bom."), abbr);
		CHECK(sentence_count(s) == 2);
		auto const plain =
		    segment_sentences(tokenize("O Sr. Silva chegou. Foi bom."));
		CHECK(sentence_count(plain) == 3);
	}
	SUBCASE("initials")
	{
		CHECK(sentence_count(segment_sentences(
		          tokenize("Falou com J. Silva ontem."))) == 1);
	}
	SUBCASE("blank line")
	{
		CHECK(sentence_count(
		          segment_sentences(tokenize("um título\n\nsem ponto"))) == 2);
	}
	SUBCASE("quotes and exclamation")
	{
		auto const s = segment_sentences(
		    tokenize("Ele gritou: \"Vamos!\" Todos foram. \"Sim?\" disse."));
		CHECK(sentence_count(s) == 3);
	}
	SUBCASE("sentence_initial flags")
	{
		auto const s =
		    segment_sentences(tokenize("Ele veio. Ela ficou em casa."));
		std::vector<std::string> initial;
		for (auto const& t : s.tokens)
			if (t.sentence_initial)
				initial.push_back(t.text);
		CHECK(initial == std::vector<std::string>{"Ele", "Ela"});
	}
	SUBCASE("excerpts")
	{
		CHECK(sentence_count(preprocess(read_file("corpus/ma_01.txt"),
		                                "ma")) == 4);
		CHECK(sentence_count(preprocess(read_file("corpus/dg_01.txt"),
		                                "dg")) == 2);
	}
}

TEST_CASE("replacements")
{
	ReplacementTable t;
	t.add("vc", "você");
	t.add("d o", "do");
	CHECK(t.apply("vc viu d o alto") == "você viu do alto");
	CHECK(t.apply("vcs viu") == "vcs viu");
	CHECK(t.apply("avc") == "avc");

	PreprocessOptions opt;
	opt.replacements = t;
	auto const s = preprocess("Vc e vc.", "x", opt);
	CHECK(texts(s, TokenKind::word) ==
	      std::vector<std::string>{"Vc", "e", "você"});
}

TEST_CASE("abbreviation list file")
{
	auto const p = std::filesystem::temp_directory_path() / "lexcov_abbr.txt";
	std::ofstream(p) << "# comment\nSr.\nDra\n\n";
	auto const a = AbbreviationList::load(p);
	CHECK(a.size() == 2);
	CHECK(a.contains("Sr"));
	CHECK(a.contains("Dra"));
	CHECK_FALSE(a.contains("Silva"));
}

TEST_CASE("shipped abbreviation list")
{
	auto const a = AbbreviationList::load(
	    std::filesystem::path(LEXCOV_TEST_DATA) /
	    "../../data/abbreviations-pt.txt");
	CHECK(a.contains("Sr"));
	CHECK(a.contains("pág"));
	auto const s = segment_sentences(
	    tokenize("A Sra. Lima leu a pág. 3 do livro. Depois saiu."), a);
	CHECK(sentence_count(s) == 2);
}
