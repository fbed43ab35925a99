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
#include "lexcov/lexicon.hpp"
#include "lexcov/unicode.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

using namespace lexcov;

namespace {

auto data(const char* name) -> std::filesystem::path
{
	return std::filesystem::path(LEXCOV_TEST_DATA) / name;
}

auto compile_text(std::string_view text,
                  DictRole role = DictRole::general) -> Lexicon
{
	DictFile f = parse_dict_text(text, role, "inline");
	return Lexicon::compile(std::span(&f, 1));
}

auto compile_file(const char* name) -> Lexicon
{
	auto const f = load_dict_file(data(name));
	return Lexicon::compile(std::span(&f, 1));
}

auto lines_of(const Lexicon& lex, std::string_view token,
              CaseFoldPolicy policy = CaseFoldPolicy::unitex_like)
    -> std::set<std::string>
{
	std::set<std::string> out;
	for (auto f : lex.matching_forms(token, policy))
		for (auto a : lex.analyses_of(f))
			out.insert(serialize_entry(lex.analysis(a).to_entry(lex.form(f))));
	return out;
}

// Same forms with the same readings and roles; analysis numbering and
// entry counts may differ.
auto check_equivalent(const Lexicon& a, const Lexicon& b) -> void
{
	auto sa = a.stats();
	auto sb = b.stats();
	sa.entry_count = sb.entry_count = 0;
	CHECK(sa == sb);
	auto readings = [](const Lexicon& lex) {
		std::map<std::string, std::set<std::string>> out;
		lex.automaton().for_each_key(
		    [&](std::u32string_view key, std::uint32_t rank) {
			    auto const form = unicode::to_utf8(key);
			    for (auto id : lex.analyses_of(FormId{rank})) {
				    auto const& an = lex.analysis(id);
				    out[form].insert(serialize_entry(an.to_entry(form)) +
				                     "#" + std::to_string(an.roles));
			    }
		    });
		for (std::size_t i = 0; i < lex.compound_count(); ++i)
			for (auto id : lex.compound(i).analyses)
				out["compound " + lex.compound(i).form].insert(
				    serialize_entry(
				        lex.analysis(id).to_entry(lex.compound(i).form)));
		return out;
	};
	CHECK(readings(a) == readings(b));
}

} // namespace

TEST_CASE("published example lookups")
{
	auto const lex = compile_file("neymar.dic");
	CHECK(lex.stats().entry_count == 12);
	CHECK(lex.stats().unique_form_count == 7);
	CHECK(lex.stats().analysis_count == 12);

	CHECK(lines_of(lex, "corria") ==
	      std::set<std::string>{"corria,correr.V:I1s", "corria,correr.V:I3s"});
	CHECK(lex.lookup("O").size() == 4);
	CHECK(lex.lookup("o").size() == 4);
	CHECK(lex.lookup("do").size() == 2);
	CHECK(lex.lookup("Neymar").empty());
	CHECK(lex.lookup("TIME", CaseFoldPolicy::exact).empty());
	CHECK(lex.lookup("TIME", CaseFoldPolicy::unitex_like).size() == 1);
	CHECK(lex.lookup("TiMe", CaseFoldPolicy::unitex_like).empty());
	CHECK(lex.lookup("TiMe", CaseFoldPolicy::full_fold).size() == 1);
	CHECK(lex.contains("prejuízo"));
	CHECK_FALSE(lex.contains("Prejuízo"));
}

TEST_CASE("uppercase forms only match as written under unitex_like")
{
	auto const lex = compile_text("Neymar,.N+NPR:ms\nUFRJ,.SIGL\n");
	CHECK(lex.lookup("Neymar").size() == 1);
	CHECK(lex.lookup("neymar").empty());
	CHECK(lex.lookup("NEYMAR").empty());
	CHECK(lex.lookup("ufrj").empty());
	CHECK(lex.lookup("ufrj", CaseFoldPolicy::full_fold).size() == 1);
}

TEST_CASE("smallest lexicon")
{
	auto const lex = compile_text("a,.N\n");
	CHECK(lex.stats().unique_form_count == 1);
	CHECK(lex.stats().state_count == 2);
	CHECK(lex.lookup("a").size() == 1);
	CHECK(lex.lookup("b").empty());
}

TEST_CASE("empty input")
{
	DictFile f;
	CHECK_THROWS_AS(Lexicon::compile(std::span(&f, 1)), EmptyLexicon);
}

TEST_CASE("duplicate entries collapse, roles accumulate")
{
	DictFile a = parse_dict_text("casa,.N:fs\ncasa,.N:fs\n");
	DictFile b = parse_dict_text("casa,.N:fs\n", DictRole::user);
	std::vector<DictFile> files{a, b};
	auto const lex = Lexicon::compile(files);
	auto const ids = lex.lookup("casa");
	REQUIRE(ids.size() == 1);
	CHECK(lex.analysis(ids[0]).has_role(DictRole::general));
	CHECK(lex.analysis(ids[0]).has_role(DictRole::user));
	CHECK_FALSE(lex.analysis(ids[0]).has_role(
	    DictRole::abbreviations_acronyms));
}

TEST_CASE("random dictionaries against a map")
{
	std::mt19937 rng(23);
	std::u32string const alpha = U"aeiourstçãéÁ";
	std::uniform_int_distribution<std::size_t> len(1, 8);
	std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
	auto word = [&] {
		std::u32string w;
		for (auto l = len(rng); l > 0; --l)
			w += alpha[pick(rng)];
		return unicode::to_utf8(w);
	};
	std::map<std::string, std::set<std::string>> oracle;
	std::string text;
	for (int i = 0; i < 1000; ++i) {
		auto const w = word();
		auto const code = std::string(1, char('A' + i % 5));
		text += w + ",." + code + "\n";
		oracle[w].insert(w + ",." + code);
	}
	auto const lex = compile_text(text);
	CHECK(lex.stats().unique_form_count == oracle.size());
	for (auto const& [form, lines] : oracle) {
		CHECK(lex.contains(form));
		CHECK(lines_of(lex, form, CaseFoldPolicy::exact) == lines);
	}
	for (int i = 0; i < 1000; ++i) {
		auto const w = word() + "z";
		CHECK(lex.lookup(w, CaseFoldPolicy::full_fold).empty());
	}
}

TEST_CASE("compounds")
{
	auto const lex = compile_file("mini.dic");
	CHECK(lex.stats().compound_form_count >= 4);
	auto const stream = tokenize("a fim de agüentar");
	auto const m =
	    lex.match_compounds(stream.tokens, CaseFoldPolicy::unitex_like);
	REQUIRE(m.size() == 2);
	CHECK(lex.compound(m[0].compound).form == "a fim de");
	CHECK(m[0].token_span == 5);
	CHECK(lex.compound(m[1].compound).form == "a fim");
	CHECK(m[1].token_span == 3);

	auto const upper = tokenize("A fim de");
	CHECK(lex.match_compounds(upper.tokens, CaseFoldPolicy::unitex_like)
	          .size() == 2);
	CHECK(lex.match_compounds(upper.tokens, CaseFoldPolicy::exact).empty());

	auto const hyphen = tokenize("terça-feira");
	CHECK(lex.match_compounds(hyphen.tokens, CaseFoldPolicy::exact).size() ==
	      1);
	// Hyphenated forms are simple keys as well.
	CHECK(lex.contains("terça-feira"));
}

TEST_CASE("binary round trip")
{
	auto const lex = compile_file("sample.dic");
	auto const bytes = lex.to_bytes();
	auto const back = Lexicon::from_bytes(bytes);
	CHECK(back.stats() == lex.stats());
	CHECK(back.to_bytes() == bytes);
	for (auto const* t : {"sambou", "corria", "1,5", "Sr", "UFRJ", "ideia"})
		CHECK(lines_of(back, t) == lines_of(lex, t));

	auto const p = std::filesystem::temp_directory_path() / "lexcov_rt.bin";
	lex.save(p);
	CHECK(Lexicon::load(p).to_bytes() == bytes);
}

TEST_CASE("compiling twice gives identical bytes")
{
	CHECK(compile_file("mini.dic").to_bytes() ==
	      compile_file("mini.dic").to_bytes());
}

TEST_CASE("damaged files")
{
	auto const bytes = compile_file("neymar.dic").to_bytes();

	SUBCASE("truncated")
	{
		for (std::size_t n : {std::size_t(0), std::size_t(7), std::size_t(20),
		                      bytes.size() / 2, bytes.size() - 1})
			CHECK_THROWS_AS(Lexicon::from_bytes(bytes.substr(0, n)),
			                CorruptFile);
	}
	SUBCASE("bad magic")
	{
		auto b = bytes;
		b[0] = 'X';
		CHECK_THROWS_AS(Lexicon::from_bytes(b), CorruptFile);
	}
	SUBCASE("newer version")
	{
		auto b = bytes;
		b[8] = char(Lexicon::format_version + 1);
		CHECK_THROWS_AS(Lexicon::from_bytes(b), FormatVersionMismatch);
	}
	SUBCASE("flipped payload byte")
	{
		auto b = bytes;
		b[30] ^= 0x40;
		CHECK_THROWS_AS(Lexicon::from_bytes(b), CorruptFile);
	}
	SUBCASE("missing file")
	{
		CHECK_THROWS_AS(Lexicon::load(data("nothing.bin")), IoError);
	}
}

TEST_CASE("to_dict_files recompiles to the same lexicon")
{
	auto const lex = compile_file("mini.dic");
	auto const files = lex.to_dict_files();
	check_equivalent(Lexicon::compile(files), lex);
}

TEST_CASE("merged is equivalent to compiling together")
{
	auto const a = load_dict_file(data("mini.dic"));
	auto const b = load_dict_file(data("abbrev.dic"),
	                              DictRole::abbreviations_acronyms);
	std::vector<DictFile> both{a, b};
	std::vector<Lexicon> parts{Lexicon::compile(std::span(&a, 1)),
	                           Lexicon::compile(std::span(&b, 1))};
	check_equivalent(Lexicon::merged(parts), Lexicon::compile(both));
}

TEST_CASE("policy names")
{
	for (auto p : {CaseFoldPolicy::exact, CaseFoldPolicy::unitex_like,
	               CaseFoldPolicy::full_fold})
		CHECK(parse_case_policy(to_string(p)) == p);
	CHECK_FALSE(parse_case_policy("lower"));
	CHECK(token_matches("o", "O", CaseFoldPolicy::unitex_like));
	CHECK_FALSE(token_matches("O", "o", CaseFoldPolicy::unitex_like));
}
