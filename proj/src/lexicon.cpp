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

#include "lexcov/lexicon.hpp"
#include "lexcov/error.hpp"
#include "lexcov/unicode.hpp"

#include <algorithm>
#include <unordered_set>

namespace lexcov {

auto to_string(CaseFoldPolicy p) -> std::string_view
{
	switch (p) {
	case CaseFoldPolicy::exact:
		return "exact";
	case CaseFoldPolicy::unitex_like:
		return "unitex_like";
	case CaseFoldPolicy::full_fold:
		return "full_fold";
	}
	return "unitex_like";
}

auto parse_case_policy(std::string_view s) -> std::optional<CaseFoldPolicy>
{
	if (s == "exact")
		return CaseFoldPolicy::exact;
	if (s == "unitex_like" || s == "unitex-like")
		return CaseFoldPolicy::unitex_like;
	if (s == "full_fold" || s == "full-fold")
		return CaseFoldPolicy::full_fold;
	return std::nullopt;
}

auto Analysis::to_entry(std::string_view form) const -> DictEntry
{
	DictEntry e;
	e.surface_form = std::string(form);
	e.lemma = lemma;
	e.gram_code = gram_code;
	e.sem_traits = sem_traits;
	if (!flex_code.empty())
		e.flex_codes.push_back(flex_code);
	return e;
}

auto token_matches(std::string_view pattern, std::string_view token,
                   CaseFoldPolicy policy) -> bool
{
	if (pattern == token)
		return true;
	switch (policy) {
	case CaseFoldPolicy::exact:
		return false;
	case CaseFoldPolicy::unitex_like:
		return unicode::to_lower(pattern) == pattern &&
		       (unicode::capitalize_first(pattern) == token ||
		        unicode::to_upper(pattern) == token);
	case CaseFoldPolicy::full_fold:
		return unicode::simple_fold(pattern) == unicode::simple_fold(token);
	}
	return false;
}

namespace {

auto spans_several_tokens(std::string_view form) -> bool
{
	auto const first = unicode::decode(form, 0);
	bool letters = first.valid && unicode::is_letter(first.cp);
	bool digits = first.valid && unicode::is_digit(first.cp);
	for (std::size_t i = 0; i < form.size() && (letters || digits);) {
		auto const d = unicode::decode(form, i);
		i += d.length;
		if (letters && !(d.valid && (unicode::is_letter(d.cp) ||
		                             unicode::is_mark(d.cp))))
			letters = false;
		if (digits && !(d.valid && unicode::is_digit(d.cp)))
			digits = false;
	}
	if (letters || digits)
		return false;
	return tokenize(form).tokens.size() > 1;
}

auto analysis_key(const DictEntry& e, std::string_view flex) -> std::string
{
	std::string k;
	k.reserve(e.lemma.size() + e.gram_code.size() + flex.size() + 8);
	k += e.lemma;
	k += '\x1f';
	k += e.gram_code;
	k += '\x1f';
	for (auto const& s : e.sem_traits) {
		k += s;
		k += '\x1e';
	}
	k += '\x1f';
	k += flex;
	return k;
}

} // namespace

auto Lexicon::compile(std::span<const DictFile> dicts) -> Lexicon
{
	Lexicon lex;
	std::unordered_map<std::string, std::uint32_t> analysis_ids;
	std::vector<std::pair<std::string, std::uint32_t>> simple_pairs;
	std::unordered_map<std::string, std::uint32_t> compound_ids;
	std::uint64_t entries = 0;

	auto intern = [&](const DictEntry& e, std::string_view flex,
	                  DictRole role) {
		auto [it, inserted] = analysis_ids.try_emplace(
		    analysis_key(e, flex),
		    static_cast<std::uint32_t>(lex.analyses_.size()));
		if (inserted) {
			Analysis a;
			a.lemma = e.lemma;
			a.gram_code = e.gram_code;
			a.sem_traits = e.sem_traits;
			a.flex_code = std::string(flex);
			lex.analyses_.push_back(std::move(a));
		}
		lex.analyses_[it->second].roles |=
		    static_cast<std::uint8_t>(1u << static_cast<unsigned>(role));
		return it->second;
	};

	for (auto const& file : dicts) {
		for (auto const& e : file.entries) {
			++entries;
			auto const multiword = e.is_multiword();
			auto const compound =
			    multiword || spans_several_tokens(e.surface_form);
			std::uint32_t cid = 0;
			if (compound) {
				auto [it, inserted] = compound_ids.try_emplace(
				    e.surface_form,
				    static_cast<std::uint32_t>(lex.compounds_.size()));
				if (inserted)
					lex.compounds_.push_back(
					    Compound{e.surface_form, {}, {}});
				cid = it->second;
			}
			auto add = [&](std::string_view flex) {
				auto const id = intern(e, flex, file.role);
				if (!multiword)
					simple_pairs.emplace_back(e.surface_form, id);
				if (compound)
					lex.compounds_[cid].analyses.push_back(
					    AnalysisId{id});
			};
			if (e.flex_codes.empty())
				add({});
			for (auto const& f : e.flex_codes)
				add(f);
		}
	}
	if (entries == 0)
		throw EmptyLexicon();

	std::sort(simple_pairs.begin(), simple_pairs.end());
	simple_pairs.erase(std::unique(simple_pairs.begin(), simple_pairs.end()),
	                   simple_pairs.end());

	std::vector<std::pair<std::string, std::uint32_t>> folded_pairs;
	DafsaBuilder builder;
	lex.form_offsets_.push_back(0);
	std::uint32_t rank = 0;
	for (std::size_t i = 0; i < simple_pairs.size(); ++i) {
		auto const& form = simple_pairs[i].first;
		lex.form_analyses_.push_back(AnalysisId{simple_pairs[i].second});
		if (i + 1 < simple_pairs.size() && simple_pairs[i + 1].first == form)
			continue;
		builder.add(unicode::to_u32(form));
		lex.form_offsets_.push_back(
		    static_cast<std::uint32_t>(lex.form_analyses_.size()));
		folded_pairs.emplace_back(unicode::simple_fold(form), rank++);
	}
	simple_pairs = {};
	lex.simple_ = std::move(builder).finish();

	std::sort(folded_pairs.begin(), folded_pairs.end());
	DafsaBuilder folded_builder;
	lex.folded_offsets_.push_back(0);
	for (std::size_t i = 0; i < folded_pairs.size(); ++i) {
		lex.folded_members_.push_back(FormId{folded_pairs[i].second});
		if (i + 1 < folded_pairs.size() &&
		    folded_pairs[i + 1].first == folded_pairs[i].first)
			continue;
		folded_builder.add(unicode::to_u32(folded_pairs[i].first));
		lex.folded_offsets_.push_back(
		    static_cast<std::uint32_t>(lex.folded_members_.size()));
	}
	lex.folded_ = std::move(folded_builder).finish();

	std::unordered_set<std::string> folded_multiword;
	std::uint64_t multiword_forms = 0;
	for (auto& c : lex.compounds_) {
		std::sort(c.analyses.begin(), c.analyses.end());
		c.analyses.erase(std::unique(c.analyses.begin(), c.analyses.end()),
		                 c.analyses.end());
		if (c.form.find(' ') != std::string::npos) {
			++multiword_forms;
			auto f = unicode::simple_fold(c.form);
			folded_multiword.insert(std::move(f));
		}
	}
	lex.rebuild_compound_index();

	auto& st = lex.stats_;
	st.entry_count = entries;
	st.simple_form_count = lex.simple_.key_count();
	st.compound_form_count = lex.compounds_.size();
	st.unique_form_count = st.simple_form_count + multiword_forms;
	st.folded_unique_form_count =
	    lex.folded_.key_count() + folded_multiword.size();
	st.analysis_count = lex.analyses_.size();
	st.state_count = lex.simple_.state_count();
	st.transition_count = lex.simple_.transition_count();
	return lex;
}

auto Lexicon::rebuild_compound_index() -> void
{
	compound_index_.clear();
	for (std::uint32_t i = 0; i < compounds_.size(); ++i) {
		auto& c = compounds_[i];
		c.pattern.clear();
		for (auto& t : tokenize(c.form).tokens)
			c.pattern.push_back(std::move(t.text));
		compound_index_[unicode::simple_fold(c.pattern.front())]
		    .push_back(i);
	}
}

auto Lexicon::merged(std::span<const Lexicon> parts) -> Lexicon
{
	std::vector<DictFile> files;
	for (auto const& p : parts)
		for (auto& f : p.to_dict_files())
			files.push_back(std::move(f));
	return compile(files);
}

auto Lexicon::find_form(std::string_view form) const -> std::optional<FormId>
{
	if (auto r = simple_.index_of_utf8(form))
		return FormId{*r};
	return std::nullopt;
}

auto Lexicon::matching_forms(std::string_view token,
                             CaseFoldPolicy policy) const -> std::vector<FormId>
{
	std::vector<FormId> out;
	if (token.empty())
		return out;
	switch (policy) {
	case CaseFoldPolicy::exact:
		if (auto f = find_form(token))
			out.push_back(*f);
		break;
	case CaseFoldPolicy::unitex_like:
		if (auto f = find_form(token))
			out.push_back(*f);
		if (unicode::has_upper(token)) {
			auto const lower = unicode::to_lower(token);
			if (lower != token && unicode::to_lower(lower) == lower &&
			    (unicode::capitalize_first(lower) == token ||
			     unicode::to_upper(lower) == token))
				if (auto f = find_form(lower))
					out.push_back(*f);
		}
		std::sort(out.begin(), out.end());
		out.erase(std::unique(out.begin(), out.end()), out.end());
		break;
	case CaseFoldPolicy::full_fold:
		if (auto r = folded_.index_of_utf8(unicode::simple_fold(token)))
			out.assign(folded_members_.begin() + folded_offsets_[*r],
			           folded_members_.begin() + folded_offsets_[*r + 1]);
		break;
	}
	return out;
}

auto Lexicon::lookup(std::string_view token, CaseFoldPolicy policy) const
    -> std::vector<AnalysisId>
{
	std::vector<AnalysisId> out;
	auto const forms = matching_forms(token, policy);
	for (auto f : forms) {
		auto const a = analyses_of(f);
		out.insert(out.end(), a.begin(), a.end());
	}
	if (forms.size() > 1) {
		std::sort(out.begin(), out.end());
		out.erase(std::unique(out.begin(), out.end()), out.end());
	}
	return out;
}

auto Lexicon::contains(std::string_view form) const -> bool
{
	if (find_form(form))
		return true;
	auto const it = std::find_if(compounds_.begin(), compounds_.end(),
	                             [&](const Compound& c) {
		                             return c.form == form;
	                             });
	return it != compounds_.end();
}

auto Lexicon::form(FormId id) const -> std::string
{
	return unicode::to_utf8(simple_.key_at(static_cast<std::uint32_t>(id)));
}

auto Lexicon::analyses_of(FormId id) const -> std::span<const AnalysisId>
{
	auto const r = static_cast<std::uint32_t>(id);
	return std::span<const AnalysisId>(form_analyses_)
	    .subspan(form_offsets_[r], form_offsets_[r + 1] - form_offsets_[r]);
}

auto Lexicon::analysis(AnalysisId id) const -> const Analysis&
{
	return analyses_.at(static_cast<std::uint32_t>(id));
}

auto Lexicon::match_compounds(std::span<const Token> window,
                              CaseFoldPolicy policy) const
    -> std::vector<CompoundMatch>
{
	std::vector<CompoundMatch> out;
	if (compounds_.empty() || window.empty() ||
	    window.front().kind == TokenKind::space)
		return out;
	auto const it =
	    compound_index_.find(unicode::simple_fold(window.front().text));
	if (it == compound_index_.end())
		return out;
	for (auto const idx : it->second) {
		auto const& pattern = compounds_[idx].pattern;
		if (pattern.size() > window.size())
			continue;
		bool ok = true;
		for (std::size_t k = 0; k < pattern.size() && ok; ++k) {
			auto const& t = window[k];
			auto const pattern_space =
			    unicode::is_space(unicode::decode(pattern[k], 0).cp);
			if (pattern_space)
				ok = t.kind == TokenKind::space && t.text == pattern[k];
			else
				ok = t.kind != TokenKind::space &&
				     token_matches(pattern[k], t.text, policy);
		}
		if (ok)
			out.push_back({pattern.size(), idx});
	}
	std::stable_sort(out.begin(), out.end(),
	                 [](const CompoundMatch& a, const CompoundMatch& b) {
		                 return a.token_span > b.token_span;
	                 });
	return out;
}

auto Lexicon::to_dict_files() const -> std::vector<DictFile>
{
	std::vector<DictFile> files;
	for (auto role : {DictRole::general, DictRole::abbreviations_acronyms,
	                  DictRole::user}) {
		DictFile file;
		file.role = role;
		for (auto const& c : compounds_)
			for (auto a : c.analyses)
				if (analysis(a).has_role(role))
					file.entries.push_back(
					    analysis(a).to_entry(c.form));
		simple_.for_each_key([&](std::u32string_view key,
		                         std::uint32_t rank) {
			auto const form = unicode::to_utf8(key);
			if (spans_several_tokens(form))
				return;
			for (auto a : analyses_of(FormId{rank}))
				if (analysis(a).has_role(role))
					file.entries.push_back(
					    analysis(a).to_entry(form));
		});
		if (!file.entries.empty()) {
			file.line_numbers.resize(file.entries.size(), 0);
			files.push_back(std::move(file));
		}
	}
	return files;
}

} // namespace lexcov
