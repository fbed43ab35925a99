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

#include "lexcov/preprocess.hpp"
#include "lexcov/error.hpp"
#include "lexcov/unicode.hpp"

#include <algorithm>
#include <fstream>

namespace lexcov {

auto to_string(TokenKind k) -> std::string_view
{
	switch (k) {
	case TokenKind::word:
		return "word";
	case TokenKind::number:
		return "number";
	case TokenKind::punct:
		return "punct";
	case TokenKind::space:
		return "space";
	}
	return "punct";
}

namespace {

auto is_line_break(char32_t cp) -> bool
{
	return cp == U'\n' || cp == U'\r' || cp == 0x85 || cp == 0x2028 ||
	       cp == 0x2029;
}

} // namespace

auto normalize_delimiters(std::string_view raw) -> std::string
{
	if (auto const bad = unicode::first_invalid(raw);
	    bad != std::string_view::npos)
		throw InvalidUtf8(bad);

	std::string out;
	out.reserve(raw.size());
	bool pending_space = false;
	auto emit = [&](char32_t cp) {
		if (pending_space) {
			out.push_back(' ');
			pending_space = false;
		}
		unicode::append(out, cp);
	};
	for (std::size_t i = 0; i < raw.size();) {
		auto const d = unicode::decode(raw, i);
		i += d.length;
		auto const cp = d.cp;
		if (cp == U'\r' && i < raw.size() && raw[i] == '\n')
			continue;
		if (is_line_break(cp))
			emit(U'\n');
		else if (unicode::is_space(cp))
			pending_space = true;
		else if (unicode::is_control(cp) || cp == 0xFEFF)
			continue;
		else
			emit(cp);
	}
	if (pending_space)
		out.push_back(' ');
	return unicode::nfc(out);
}

auto tokenize(std::string_view text, std::string source_id) -> TokenStream
{
	TokenStream stream;
	stream.source_id = std::move(source_id);
	auto& tokens = stream.tokens;
	tokens.reserve(text.size() / 3);

	auto run_end = [&](std::size_t pos, auto accept) {
		while (pos < text.size()) {
			auto const d = unicode::decode(text, pos);
			if (!d.valid || !accept(d.cp))
				break;
			pos += d.length;
		}
		return pos;
	};

	for (std::size_t pos = 0; pos < text.size();) {
		auto const d = unicode::decode(text, pos);
		TokenKind kind;
		std::size_t end;
		if (!d.valid) {
			kind = TokenKind::punct;
			end = pos + 1;
		}
		else if (unicode::is_letter(d.cp)) {
			kind = TokenKind::word;
			end = run_end(pos + d.length, [](char32_t c) {
				return unicode::is_letter(c) || unicode::is_mark(c);
			});
		}
		else if (unicode::is_digit(d.cp)) {
			kind = TokenKind::number;
			end = run_end(pos + d.length, unicode::is_digit);
		}
		else if (unicode::is_space(d.cp)) {
			kind = TokenKind::space;
			end = run_end(pos + d.length, unicode::is_space);
		}
		else {
			kind = TokenKind::punct;
			end = pos + d.length;
		}
		Token t;
		t.kind = kind;
		t.text = std::string(text.substr(pos, end - pos));
		t.begin = pos;
		t.end = end;
		tokens.push_back(std::move(t));
		if (kind == TokenKind::word)
			++stream.word_token_count;
		pos = end;
	}
	return stream;
}

// ------------------------------------------------------------ abbreviations

AbbreviationList::AbbreviationList(
    std::initializer_list<std::string_view> items)
{
	for (auto s : items)
		add(s);
}

auto AbbreviationList::load(const std::filesystem::path& path)
    -> AbbreviationList
{
	std::ifstream in(path);
	if (!in)
		throw IoError("cannot open abbreviation list " + path.string());
	AbbreviationList list;
	std::string line;
	while (std::getline(in, line)) {
		if (!line.empty() && line.back() == '\r')
			line.pop_back();
		if (line.empty() || line[0] == '#')
			continue;
		list.add(line);
	}
	return list;
}

auto AbbreviationList::add(std::string_view abbreviation) -> void
{
	while (abbreviation.ends_with('.'))
		abbreviation.remove_suffix(1);
	if (abbreviation.empty())
		return;
	// Matching ignores case, so only the lowercase form is kept.
	items_.emplace(unicode::to_lower(abbreviation));
}

auto AbbreviationList::contains(std::string_view word) const -> bool
{
	return items_.contains(unicode::to_lower(word));
}

// ----------------------------------------------------------------- sentences

namespace {

auto is_terminal(const Token& t) -> bool
{
	return t.kind == TokenKind::punct &&
	       (t.text == "." || t.text == "!" || t.text == "?" ||
	        t.text == "…");
}

auto is_closing(const Token& t) -> bool
{
	static constexpr std::string_view closers[] = {
	    "\"", "'", ")", "]", "”", "’", "»"};
	return t.kind == TokenKind::punct &&
	       std::find(std::begin(closers), std::end(closers), t.text) !=
	           std::end(closers);
}

auto is_opening(const Token& t) -> bool
{
	static constexpr std::string_view openers[] = {
	    "\"", "'", "(", "[", "“", "‘", "«", "-", "—",
	    "–"};
	return t.kind == TokenKind::punct &&
	       std::find(std::begin(openers), std::end(openers), t.text) !=
	           std::end(openers);
}

auto starts_upper(const Token& t) -> bool
{
	auto const d = unicode::decode(t.text, 0);
	return d.valid && unicode::is_upper(d.cp);
}

auto is_initial_letter(const Token& t) -> bool
{
	return t.kind == TokenKind::word && unicode::length(t.text) == 1 &&
	       starts_upper(t);
}

} // namespace

auto segment_sentences(TokenStream stream,
                       const AbbreviationList& abbreviations) -> TokenStream
{
	auto& tokens = stream.tokens;
	auto const n = tokens.size();
	std::size_t sentence = 0;
	bool has_content = false;
	bool pending_break = false;
	bool need_initial = true;

	for (std::size_t i = 0; i < n; ++i) {
		auto& t = tokens[i];
		t.sentence_initial = false;
		if (t.kind != TokenKind::space && pending_break) {
			++sentence;
			pending_break = false;
			need_initial = true;
			has_content = false;
		}
		t.sentence_index = sentence;

		if (t.kind == TokenKind::space) {
			if (has_content &&
			    std::count(t.text.begin(), t.text.end(), '\n') >= 2)
				pending_break = true;
			continue;
		}
		has_content = true;
		if (t.kind == TokenKind::word && need_initial) {
			t.sentence_initial = true;
			need_initial = false;
		}
		if (!is_terminal(t))
			continue;

		if (t.text == "." && i > 0) {
			auto const& prev = tokens[i - 1];
			if (prev.kind == TokenKind::word &&
			    (is_initial_letter(prev) ||
			     abbreviations.contains(prev.text)))
				continue;
		}

		auto j = i;
		while (j + 1 < n &&
		       (is_terminal(tokens[j + 1]) || is_closing(tokens[j + 1])))
			++j;
		for (auto k = i + 1; k <= j; ++k)
			tokens[k].sentence_index = sentence;

		auto k = j + 1;
		bool boundary;
		if (k == n) {
			boundary = true;
		}
		else if (tokens[k].kind != TokenKind::space) {
			boundary = false;
		}
		else {
			while (k < n && (tokens[k].kind == TokenKind::space ||
			                 is_opening(tokens[k])))
				++k;
			boundary = k == n || (tokens[k].kind == TokenKind::word &&
			                      starts_upper(tokens[k]));
		}
		i = j;
		if (boundary)
			pending_break = true;
	}
	return stream;
}

// -------------------------------------------------------------- replacements

auto ReplacementTable::load(const std::filesystem::path& path)
    -> ReplacementTable
{
	std::ifstream in(path);
	if (!in)
		throw IoError("cannot open replacement table " + path.string());
	ReplacementTable table;
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (!line.empty() && line.back() == '\r')
			line.pop_back();
		if (line.empty() || line[0] == '#')
			continue;
		auto const tab = line.find('\t');
		if (tab == std::string::npos || tab == 0)
			throw ConfigError(path.string() + ":" +
			                  std::to_string(line_no) +
			                  ": expected two tab-separated columns");
		table.add(std::string_view(line).substr(0, tab),
		          std::string_view(line).substr(tab + 1));
	}
	return table;
}

auto ReplacementTable::add(std::string_view from, std::string_view to) -> void
{
	Rule r;
	for (auto& t : tokenize(normalize_delimiters(from)).tokens)
		r.pattern.push_back(std::move(t.text));
	if (r.pattern.empty())
		return;
	r.replacement = std::string(to);
	auto const pos = std::find_if(rules_.begin(), rules_.end(),
	                              [&](const Rule& x) {
		                              return x.pattern.size() <
		                                     r.pattern.size();
	                              });
	rules_.insert(pos, std::move(r));
}

auto ReplacementTable::apply(std::string_view text) const -> std::string
{
	if (rules_.empty())
		return std::string(text);
	auto const stream = tokenize(text);
	auto const& tokens = stream.tokens;
	std::string out;
	out.reserve(text.size());
	for (std::size_t i = 0; i < tokens.size();) {
		const Rule* hit = nullptr;
		if (tokens[i].kind != TokenKind::space) {
			for (auto const& r : rules_) {
				if (i + r.pattern.size() > tokens.size())
					continue;
				if (std::equal(r.pattern.begin(), r.pattern.end(),
				               tokens.begin() + i,
				               [](const std::string& p,
				                  const Token& t) {
					               return p == t.text;
				               })) {
					hit = &r;
					break;
				}
			}
		}
		if (hit) {
			out += hit->replacement;
			i += hit->pattern.size();
		}
		else {
			out += tokens[i].text;
			++i;
		}
	}
	return out;
}

auto preprocess(std::string_view raw, std::string source_id,
                const PreprocessOptions& options) -> TokenStream
{
	auto text = normalize_delimiters(raw);
	if (!options.replacements.empty())
		text = normalize_delimiters(options.replacements.apply(text));
	return segment_sentences(tokenize(text, std::move(source_id)),
	                         options.abbreviations);
}

} // namespace lexcov
