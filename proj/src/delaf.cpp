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
#include "lexcov/unicode.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lexcov {

MalformedEntry::MalformedEntry(std::string reason, std::string line,
                               std::size_t column, std::size_t line_number)
    : Error([&] {
	      std::ostringstream os;
	      if (line_number != 0)
		      os << "line " << line_number << ", ";
	      os << "column " << column << ": " << reason << " in \"" << line
	         << '"';
	      return os.str();
      }()),
      reason_(std::move(reason)), line_(std::move(line)), column_(column),
      line_number_(line_number)
{
}

auto MalformedEntry::with_line_number(std::size_t n) const -> MalformedEntry
{
	return MalformedEntry(reason_, line_, column_, n);
}

InvalidUtf8::InvalidUtf8(std::size_t byte_offset)
    : Error("invalid UTF-8 at byte " + std::to_string(byte_offset)),
      offset_(byte_offset)
{
}

auto to_string(DictRole r) -> std::string_view
{
	switch (r) {
	case DictRole::general:
		return "general";
	case DictRole::abbreviations_acronyms:
		return "abbreviations_acronyms";
	case DictRole::user:
		return "user";
	}
	return "general";
}

auto parse_dict_role(std::string_view s) -> std::optional<DictRole>
{
	if (s == "general")
		return DictRole::general;
	if (s == "abbreviations_acronyms" || s == "abbreviations")
		return DictRole::abbreviations_acronyms;
	if (s == "user")
		return DictRole::user;
	return std::nullopt;
}

namespace {

struct Field {
	std::string value;
	std::size_t end; // index of the terminator
};

// Reads an escaped field up to the first unescaped `stop`.
auto read_field(std::string_view line, std::size_t pos, char stop,
                const char* missing) -> Field
{
	Field f{{}, std::string_view::npos};
	for (auto i = pos; i < line.size(); ++i) {
		auto const c = line[i];
		if (c == '\\') {
			if (i + 1 == line.size())
				throw MalformedEntry("dangling backslash",
				                     std::string(line), i + 1);
			f.value.push_back(line[++i]);
		}
		else if (c == stop) {
			f.end = i;
			return f;
		}
		else {
			f.value.push_back(c);
		}
	}
	throw MalformedEntry(missing, std::string(line), line.size() + 1);
}

auto split_codes(std::string_view line, std::size_t pos, DictEntry& e) -> void
{
	auto fail = [&](const char* why, std::size_t at) {
		throw MalformedEntry(why, std::string(line), at + 1);
	};
	auto const codes = line.substr(pos);
	if (codes.find(',') != std::string_view::npos)
		fail("unescaped comma in codes", pos + codes.find(','));

	auto i = codes.find_first_of("+:");
	e.gram_code = std::string(codes.substr(0, i));
	if (e.gram_code.empty())
		fail("empty grammatical code", pos);
	bool in_flex = false;
	while (i != std::string_view::npos) {
		auto const sep = codes[i];
		if (sep == '+' && in_flex)
			fail("semantic trait after inflectional code", pos + i);
		in_flex = in_flex || sep == ':';
		auto const next = codes.find_first_of("+:", i + 1);
		auto const seg = codes.substr(i + 1, next == std::string_view::npos
		                                         ? std::string_view::npos
		                                         : next - i - 1);
		if (seg.empty())
			fail(sep == '+' ? "empty semantic trait"
			                : "empty inflectional code",
			     pos + i + 1);
		(sep == '+' ? e.sem_traits : e.flex_codes).emplace_back(seg);
		i = next;
	}
}

auto append_escaped(std::string& out, std::string_view s,
                    std::string_view specials) -> void
{
	for (auto c : s) {
		if (c == '\\' || specials.find(c) != std::string_view::npos)
			out.push_back('\\');
		out.push_back(c);
	}
}

} // namespace

auto parse_entry(std::string_view line) -> DictEntry
{
	if (auto const bad = unicode::first_invalid(line);
	    bad != std::string_view::npos)
		throw MalformedEntry("invalid UTF-8", std::string(line), bad + 1);

	DictEntry e;
	auto form = read_field(line, 0, ',', "missing ',' after form");
	if (form.value.empty())
		throw MalformedEntry("empty form", std::string(line), 1);
	auto lemma = read_field(line, form.end + 1, '.',
	                        "missing '.' before grammatical code");
	e.surface_form = std::move(form.value);
	e.lemma = lemma.value.empty() ? e.surface_form : std::move(lemma.value);
	split_codes(line, lemma.end + 1, e);
	return e;
}

auto serialize_entry(const DictEntry& entry) -> std::string
{
	std::string out;
	out.reserve(entry.surface_form.size() * 2 + entry.gram_code.size() + 8);
	append_escaped(out, entry.surface_form, ",");
	out.push_back(',');
	if (entry.lemma != entry.surface_form)
		append_escaped(out, entry.lemma, ",.");
	out.push_back('.');
	out += entry.gram_code;
	for (auto const& s : entry.sem_traits) {
		out.push_back('+');
		out += s;
	}
	for (auto const& f : entry.flex_codes) {
		out.push_back(':');
		out += f;
	}
	return out;
}

auto canonicalize(std::string_view line) -> std::string
{
	return serialize_entry(parse_entry(line));
}

auto parse_dict_text(std::string_view text, DictRole role, std::string source)
    -> DictFile
{
	DictFile file;
	file.role = role;
	file.source = std::move(source);
	if (text.starts_with("\xEF\xBB\xBF"))
		text.remove_prefix(3);

	std::size_t line_no = 0;
	while (!text.empty()) {
		auto const nl = text.find('\n');
		auto line = text.substr(0, nl);
		text.remove_prefix(nl == std::string_view::npos ? text.size()
		                                                : nl + 1);
		++line_no;
		if (line.ends_with('\r'))
			line.remove_suffix(1);
		if (line.empty())
			continue;
		try {
			file.entries.push_back(parse_entry(line));
		}
		catch (const MalformedEntry& e) {
			throw e.with_line_number(line_no);
		}
		file.line_numbers.push_back(line_no);
	}
	return file;
}

auto load_dict_file(const std::filesystem::path& path, DictRole role)
    -> DictFile
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open dictionary " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	if (in.bad())
		throw IoError("cannot read dictionary " + path.string());
	return parse_dict_text(buf.str(), role, path.string());
}

auto save_dict_file(const std::filesystem::path& path, const DictFile& file,
                    bool sorted) -> void
{
	std::vector<std::string> lines;
	lines.reserve(file.entries.size());
	for (auto const& e : file.entries)
		lines.push_back(serialize_entry(e));
	if (sorted)
		std::sort(lines.begin(), lines.end());

	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw IoError("cannot write dictionary " + path.string());
	for (auto const& l : lines)
		out << l << '\n';
	if (!out)
		throw IoError("cannot write dictionary " + path.string());
}

} // namespace lexcov
