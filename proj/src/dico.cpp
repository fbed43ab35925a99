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

#include "lexcov/dico.hpp"
#include "lexcov/error.hpp"
#include "lexcov/tsv.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

namespace lexcov {

auto to_string(TokenStatus s) -> std::string_view
{
	switch (s) {
	case TokenStatus::known_simple:
		return "known_simple";
	case TokenStatus::in_compound_only:
		return "in_compound_only";
	case TokenStatus::unknown:
		return "unknown";
	}
	return "unknown";
}

namespace {

auto parse_status(std::string_view s) -> std::optional<TokenStatus>
{
	for (auto st : {TokenStatus::known_simple, TokenStatus::in_compound_only,
	                TokenStatus::unknown})
		if (to_string(st) == s)
			return st;
	return std::nullopt;
}

struct Readings {
	std::vector<DictEntry> entries;
	std::vector<std::string> lines;
};

} // namespace

auto apply_dictionaries(const Lexicon& lex, const TokenStream& stream,
                        CaseFoldPolicy policy) -> DicoResult
{
	DicoResult r;
	r.corpus_id = stream.source_id;
	r.policy = policy;
	auto const& tokens = stream.tokens;

	// Compound cover: index of the covering compound per token.
	constexpr auto none = std::uint32_t(-1);
	std::vector<std::uint32_t> cover(tokens.size(), none);
	std::vector<std::size_t> sentence_end(tokens.size());
	for (std::size_t i = tokens.size(); i-- > 0;)
		sentence_end[i] =
		    i + 1 < tokens.size() &&
		            tokens[i + 1].sentence_index == tokens[i].sentence_index
		        ? sentence_end[i + 1]
		        : i + 1;
	for (std::size_t i = 0; i < tokens.size() && lex.compound_count() > 0;) {
		if (tokens[i].kind == TokenKind::space) {
			++i;
			continue;
		}
		auto const matches = lex.match_compounds(
		    std::span<const Token>(tokens).subspan(i, sentence_end[i] - i),
		    policy);
		if (matches.empty()) {
			++i;
			continue;
		}
		auto const& m = matches.front();
		std::fill_n(cover.begin() + i, m.token_span, m.compound);
		auto const& c = lex.compound(m.compound);
		for (auto a : c.analyses)
			++r.dlc[lex.analysis(a).to_entry(c.form)];
		++r.counts.compound_matches;
		i += m.token_span;
	}

	std::unordered_map<std::string, Readings> cache;
	std::size_t last_sentence = std::size_t(-1);
	for (std::size_t i = 0; i < tokens.size(); ++i) {
		auto const& t = tokens[i];
		if (t.kind == TokenKind::number)
			++r.counts.number_tokens;
		if (t.kind != TokenKind::word)
			continue;
		if (t.sentence_index != last_sentence) {
			++r.counts.sentences;
			last_sentence = t.sentence_index;
		}
		auto it = cache.find(t.text);
		if (it == cache.end()) {
			Readings rd;
			for (auto f : lex.matching_forms(t.text, policy)) {
				auto const form = lex.form(f);
				for (auto a : lex.analyses_of(f))
					rd.entries.push_back(
					    lex.analysis(a).to_entry(form));
			}
			for (auto const& e : rd.entries) {
				rd.lines.push_back(serialize_entry(e));
				r.dlf.insert(e);
			}
			std::sort(rd.lines.begin(), rd.lines.end());
			it = cache.emplace(t.text, std::move(rd)).first;
		}

		TokenAnnotation an;
		an.text = t.text;
		an.sentence_index = t.sentence_index;
		an.sentence_initial = t.sentence_initial;
		an.analyses = it->second.lines;
		if (cover[i] != none)
			an.compound = lex.compound(cover[i]).form;
		++r.counts.word_tokens;
		if (!an.analyses.empty()) {
			an.status = TokenStatus::known_simple;
			++r.counts.known_simple;
		} else if (cover[i] != none) {
			an.status = TokenStatus::in_compound_only;
			++r.counts.in_compound_only;
		} else {
			an.status = TokenStatus::unknown;
			++r.counts.unknown;
			r.err.insert(t.text);
		}
		r.annotations.push_back(std::move(an));
	}
	return r;
}

auto merge_results(DicoResult a, const DicoResult& b) -> DicoResult
{
	if (a.policy && b.policy && *a.policy != *b.policy)
		throw PolicyMismatch("cannot merge results of policies " +
		                     std::string(to_string(*a.policy)) + " and " +
		                     std::string(to_string(*b.policy)));
	if (!a.policy)
		a.policy = b.policy;
	if (a.corpus_id.empty())
		a.corpus_id = b.corpus_id;
	else if (!b.corpus_id.empty() && b.corpus_id != a.corpus_id)
		a.corpus_id += "+" + b.corpus_id;
	a.dlf.insert(b.dlf.begin(), b.dlf.end());
	for (auto const& [e, n] : b.dlc)
		a.dlc[e] += n;
	a.err.insert(b.err.begin(), b.err.end());
	a.annotations.insert(a.annotations.end(), b.annotations.begin(),
	                     b.annotations.end());
	auto& c = a.counts;
	auto const& d = b.counts;
	c.word_tokens += d.word_tokens;
	c.known_simple += d.known_simple;
	c.in_compound_only += d.in_compound_only;
	c.unknown += d.unknown;
	c.number_tokens += d.number_tokens;
	c.compound_matches += d.compound_matches;
	c.sentences += d.sentences;
	return a;
}

auto dlf_lines(const DicoResult& r) -> std::vector<std::string>
{
	std::vector<std::string> out;
	out.reserve(r.dlf.size());
	for (auto const& e : r.dlf)
		out.push_back(serialize_entry(e));
	std::sort(out.begin(), out.end());
	return out;
}

auto dlc_lines(const DicoResult& r) -> std::vector<std::string>
{
	std::vector<std::string> out;
	out.reserve(r.dlc.size());
	for (auto const& [e, n] : r.dlc)
		out.push_back(serialize_entry(e));
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

auto write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines) -> void
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw IoError("cannot write " + path.string());
	for (auto const& l : lines)
		out << l << '\n';
	if (!out)
		throw IoError("cannot write " + path.string());
}

} // namespace

auto write_dico_outputs(const DicoResult& r, const std::filesystem::path& dir)
    -> void
{
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec)
		throw IoError("cannot create " + dir.string() + ": " +
		              ec.message());
	write_lines(dir / "dlf", dlf_lines(r));
	write_lines(dir / "dlc", dlc_lines(r));
	write_lines(dir / "err", {r.err.begin(), r.err.end()});

	std::vector<std::string> rows;
	rows.reserve(r.annotations.size() + 1);
	rows.push_back("token\tkind\tsentence_index\tstatus\tanalyses\t"
	               "sentence_initial\tcompound");
	for (auto const& a : r.annotations) {
		std::string analyses;
		for (auto const& l : a.analyses) {
			if (!analyses.empty())
				analyses += " | ";
			analyses += l;
		}
		rows.push_back(tsv::join({a.text, "word",
		                          std::to_string(a.sentence_index),
		                          std::string(to_string(a.status)), analyses,
		                          a.sentence_initial ? "1" : "0",
		                          a.compound}));
	}
	write_lines(dir / "annotations.tsv", rows);
}

auto read_annotations(const std::filesystem::path& path)
    -> std::vector<TokenAnnotation>
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open " + path.string());
	std::vector<TokenAnnotation> out;
	std::string line;
	std::size_t n = 0;
	while (std::getline(in, line)) {
		if (++n == 1 || line.empty())
			continue;
		auto const f = tsv::split(line);
		if (f.size() != 7)
			throw ConfigError(path.string() + ":" + std::to_string(n) +
			                  ": expected 7 columns");
		TokenAnnotation a;
		a.text = f[0];
		try {
			a.sentence_index = std::stoull(f[2]);
		}
		catch (const std::exception&) {
			throw ConfigError(path.string() + ":" + std::to_string(n) +
			                  ": bad sentence index");
		}
		auto const st = parse_status(f[3]);
		if (!st)
			throw ConfigError(path.string() + ":" + std::to_string(n) +
			                  ": bad status '" + f[3] + "'");
		a.status = *st;
		for (std::size_t p = 0; p < f[4].size();) {
			auto q = f[4].find(" | ", p);
			if (q == std::string::npos)
				q = f[4].size();
			a.analyses.push_back(f[4].substr(p, q - p));
			p = q + 3;
		}
		a.sentence_initial = f[5] == "1";
		a.compound = f[6];
		out.push_back(std::move(a));
	}
	return out;
}

} // namespace lexcov
