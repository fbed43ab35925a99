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

#include "lexcov/delaf.hpp"
#include "lexcov/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lexcov;

namespace {

auto data(const char* name) -> std::filesystem::path
{
	return std::filesystem::path(LEXCOV_TEST_DATA) / name;
}

auto read_lines(const std::filesystem::path& p) -> std::vector<std::string>
{
	std::ifstream in(p);
	std::vector<std::string> out;
	for (std::string l; std::getline(in, l);)
		if (!l.empty())
			out.push_back(l);
	return out;
}

auto temp_file(const std::string& name, const std::string& content)
    -> std::filesystem::path
{
	auto const p = std::filesystem::temp_directory_path() /
	               ("lexcov_delaf_" + name);
	std::ofstream(p, std::ios::binary) << content;
	return p;
}

} // namespace

TEST_CASE("parse_entry splits the published examples")
{
	auto e = parse_entry("sambou,sambar.V:J3s");
	CHECK(e.surface_form == "sambou");
	CHECK(e.lemma == "sambar");
	CHECK(e.gram_code == "V");
	CHECK(e.sem_traits.empty());
	CHECK(e.flex_codes == std::vector<std::string>{"J3s"});

	e = parse_entry("atrás,.ADV");
	CHECK(e.surface_form == "atrás");
	CHECK(e.lemma == "atrás");
	CHECK(e.gram_code == "ADV");
	CHECK(e.sem_traits.empty());
	CHECK(e.flex_codes.empty());

	e = parse_entry("do,.PREPXD+Art+Def:ms");
	CHECK(e.lemma == "do");
	CHECK(e.gram_code == "PREPXD");
	CHECK(e.sem_traits == std::vector<std::string>{"Art", "Def"});
	CHECK(e.flex_codes == std::vector<std::string>{"ms"});

	e = parse_entry("corria,correr.V:I1s");
	CHECK(e.lemma == "correr");
	CHECK(e.flex_codes == std::vector<std::string>{"I1s"});
}

TEST_CASE("several inflectional codes stay on one entry")
{
	auto const e = parse_entry("corria,correr.V:I1s:I3s");
	CHECK(e.flex_codes == std::vector<std::string>{"I1s", "I3s"});
	CHECK(serialize_entry(e) == "corria,correr.V:I1s:I3s");
}

TEST_CASE("escapes")
{
	auto e = parse_entry("1\\,5,um e meio.NUM");
	CHECK(e.surface_form == "1,5");
	CHECK(e.lemma == "um e meio");
	CHECK(serialize_entry(e) == "1\\,5,um e meio.NUM");

	e = parse_entry("barra\\\\n,.N:ms");
	CHECK(e.surface_form == "barra\\n");
	CHECK(serialize_entry(e) == "barra\\\\n,.N:ms");

	e = parse_entry("Sr,senhor\\..ABREV");
	CHECK(e.lemma == "senhor.");
	CHECK(serialize_entry(e) == "Sr,senhor\\..ABREV");

	// A needless escape is dropped by canonicalization.
	CHECK(canonicalize("\\a,.N") == "a,.N");
	// An explicit lemma equal to the form is emitted empty.
	CHECK(canonicalize("casa,casa.N:fs") == "casa,.N:fs");
}

TEST_CASE("multiword entries")
{
	auto const e = parse_entry("por exemplo,.ADV");
	CHECK(e.is_multiword());
	CHECK_FALSE(parse_entry("terça-feira,.N:fs").is_multiword());
}

TEST_CASE("serialize_entry")
{
	CHECK(serialize_entry({"atrás", "atrás", "ADV", {}, {}}) == "atrás,.ADV");
	CHECK(serialize_entry({"x", "x", "N", {}, {}}) == "x,.N");
	CHECK(serialize_entry({"o", "ele", "PRO", {"Pes"}, {"A3ms"}}) ==
	      "o,ele.PRO+Pes:A3ms");
}

TEST_CASE("malformed lines report reason and column")
{
	auto column_of = [](const char* line) -> std::size_t {
		try {
			parse_entry(line);
		}
		catch (const MalformedEntry& e) {
			CHECK(e.line() == line);
			return e.column();
		}
		FAIL("no exception for " << line);
		return 0;
	};
	CHECK(column_of("bad line without dot") == 21);
	CHECK(column_of("casa,casa") == 10);    // no dot
	CHECK(column_of(",.N") == 1);           // empty form
	CHECK(column_of("casa,.") == 7);        // empty code
	CHECK(column_of("casa,.N+") == 9);      // empty trait
	CHECK(column_of("casa,.N:fs+X") == 11); // trait after flex
	CHECK(column_of("casa,.N,x") == 8);     // unescaped comma in codes
	CHECK(column_of("casa\\") == 5);        // dangling backslash
	CHECK_THROWS_AS(parse_entry("ca\xffsa,.N"), MalformedEntry);
}

TEST_CASE("round trip over the sample dictionary")
{
	auto const lines = read_lines(data("sample.dic"));
	REQUIRE(lines.size() >= 10);
	for (auto const& l : lines) {
		CAPTURE(l);
		CHECK(serialize_entry(parse_entry(l)) == l);
	}
	auto const file = load_dict_file(data("sample.dic"));
	CHECK(file.entries.size() == lines.size());
	CHECK(file.line_numbers.front() == 1);
}

TEST_CASE("round trip of generated entries")
{
	// Fields built from awkward characters; serialize then parse must give
	// the entry back.
	std::string const alphabet = "ab,.\\+: é";
	std::uint32_t seed = 12345;
	auto next = [&] {
		seed = seed * 1103515245u + 12345u;
		return (seed >> 16) & 0x7fff;
	};
	auto word = [&](bool allow_empty) {
		std::string s;
		auto const n = next() % 5 + (allow_empty ? 0 : 1);
		for (std::size_t i = 0; i < n; ++i) {
			auto const k = next() % 9;
			s += k == 8 ? std::string("é") : std::string(1, alphabet[k]);
		}
		return s;
	};
	for (int i = 0; i < 2000; ++i) {
		DictEntry e;
		e.surface_form = word(false);
		e.lemma = word(false);
		e.gram_code = "N";
		if (next() % 2)
			e.sem_traits = {"Hum"};
		if (next() % 2)
			e.flex_codes = {"ms", "fs"};
		auto const line = serialize_entry(e);
		CAPTURE(line);
		CHECK(parse_entry(line) == e);
	}
}

TEST_CASE("load_dict_file")
{
	SUBCASE("three lines")
	{
		auto const p = temp_file("three.dic", "a,.N\nb,.N\nc,.N\n");
		CHECK(load_dict_file(p).entries.size() == 3);
	}
	SUBCASE("blank lines, CRLF and BOM")
	{
		auto const p =
		    temp_file("blank.dic", "\xEF\xBB\xBF" "a,.N\r\n\r\nb,.N\n\n");
		auto const f = load_dict_file(p, DictRole::user);
		REQUIRE(f.entries.size() == 2);
		CHECK(f.entries[0].surface_form == "a");
		CHECK(f.line_numbers == std::vector<std::size_t>{1, 3});
		CHECK(f.role == DictRole::user);
	}
	SUBCASE("malformed line number")
	{
		try {
			load_dict_file(data("malformed.dic"));
			FAIL("expected MalformedEntry");
		}
		catch (const MalformedEntry& e) {
			CHECK(e.line_number() == 3);
			CHECK(e.line() == "bad line without dot");
		}
	}
	SUBCASE("missing file")
	{
		CHECK_THROWS_AS(load_dict_file(data("no-such.dic")), IoError);
	}
}

TEST_CASE("save_dict_file keeps every entry")
{
	auto const in = load_dict_file(data("sample.dic"));
	auto const p = std::filesystem::temp_directory_path() /
	               "lexcov_delaf_saved.dic";
	save_dict_file(p, in, true);
	auto const out = load_dict_file(p);
	CHECK(out.entries.size() == in.entries.size());
	auto const lines = read_lines(p);
	CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("roles")
{
	for (auto r : {DictRole::general, DictRole::abbreviations_acronyms,
	               DictRole::user})
		CHECK(parse_dict_role(to_string(r)) == r);
	CHECK_FALSE(parse_dict_role("names"));
}
