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

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace lexcov {

auto to_string(FoldMode m) -> std::string_view
{
	return m == FoldMode::cased ? "cased" : "folded";
}

auto WordList::token_count() const -> std::uint64_t
{
	std::uint64_t n = 0;
	for (auto const& [form, freq] : entries)
		n += freq;
	return n;
}

auto WordList::key(std::string_view form) const -> std::string
{
	return mode == FoldMode::folded ? unicode::full_fold(form)
	                                : std::string(form);
}

auto build_word_list(std::span<const TokenStream> streams, FoldMode mode,
                     std::string corpus_id) -> WordList
{
	WordList w;
	w.corpus_id = std::move(corpus_id);
	w.mode = mode;
	for (auto const& s : streams)
		for (auto const& t : s.tokens)
			if (t.kind == TokenKind::word)
				++w.entries[w.key(t.text)];
	return w;
}

auto build_word_list(const DicoResult& result, FoldMode mode) -> WordList
{
	WordList w;
	w.corpus_id = result.corpus_id;
	w.mode = mode;
	for (auto const& a : result.annotations)
		++w.entries[w.key(a.text)];
	return w;
}

auto word_list_tsv(const WordList& list) -> std::string
{
	std::vector<std::pair<std::string_view, std::uint64_t>> rows(
	    list.entries.begin(), list.entries.end());
	std::stable_sort(rows.begin(), rows.end(), [](auto& a, auto& b) {
		return a.second > b.second;
	});
	std::string out;
	for (auto const& [form, freq] : rows) {
		out += form;
		out += '\t';
		out += std::to_string(freq);
		out += '\n';
	}
	return out;
}

auto Percent::of(std::uint64_t part, std::uint64_t whole) -> Percent
{
	if (whole == 0)
		return {};
	using u128 = unsigned __int128;
	auto const num = u128(part) * 10000 * 2 + whole;
	return {static_cast<std::int64_t>(num / (u128(whole) * 2))};
}

auto parse_number_locale(std::string_view s) -> std::optional<NumberLocale>
{
	if (s == "plain" || s == "C" || s == "en" || s == "en-US")
		return NumberLocale::plain;
	if (s == "pt-BR" || s == "pt_BR" || s == "pt-br" || s == "pt_br")
		return NumberLocale::pt_br;
	return std::nullopt;
}

auto format_percent(Percent p, NumberLocale locale) -> std::string
{
	auto v = p.hundredths;
	std::string out = v < 0 ? "-" : "";
	auto const a = static_cast<std::uint64_t>(v < 0 ? -v : v);
	out += std::to_string(a / 100);
	out += locale == NumberLocale::pt_br ? ',' : '.';
	auto const frac = a % 100;
	if (frac < 10)
		out += '0';
	out += std::to_string(frac);
	return out;
}

auto format_count(std::uint64_t n, NumberLocale locale) -> std::string
{
	auto digits = std::to_string(n);
	if (locale == NumberLocale::plain)
		return digits;
	std::string out;
	for (std::size_t i = 0; i < digits.size(); ++i) {
		if (i > 0 && (digits.size() - i) % 3 == 0)
			out += '.';
		out += digits[i];
	}
	return out;
}

auto make_report(std::string corpus_id, std::string dict_id,
                 std::uint64_t types_total, std::uint64_t types_unknown,
                 std::uint64_t tokens_total, std::uint64_t tokens_unknown)
    -> CoverageReport
{
	if (types_unknown > types_total || tokens_unknown > tokens_total)
		throw std::invalid_argument("unknown count exceeds total");
	return {std::move(corpus_id), std::move(dict_id), types_total,
	        tokens_total,         types_unknown,      tokens_unknown};
}

auto coverage(const WordList& words, const DicoResult& result,
              std::string dict_id) -> CoverageReport
{
	if (words.corpus_id != result.corpus_id)
		throw MismatchedCorpus("word list is from '" + words.corpus_id +
		                       "', dictionary run is from '" +
		                       result.corpus_id + "'");
	std::unordered_set<std::string> unknown;
	for (auto const& e : result.err)
		unknown.insert(words.key(e));
	CoverageReport r;
	r.corpus_id = words.corpus_id;
	r.dict_id = std::move(dict_id);
	for (auto const& [form, freq] : words.entries) {
		++r.types_total;
		r.tokens_total += freq;
		if (unknown.contains(form)) {
			++r.types_unknown;
			r.tokens_unknown += freq;
		}
	}
	return r;
}

auto coverage(const WordList& words, const Lexicon& lex,
              CaseFoldPolicy policy, std::string dict_id) -> CoverageReport
{
	if (words.mode == FoldMode::folded)
		policy = CaseFoldPolicy::full_fold;
	CoverageReport r;
	r.corpus_id = words.corpus_id;
	r.dict_id = std::move(dict_id);
	for (auto const& [form, freq] : words.entries) {
		++r.types_total;
		r.tokens_total += freq;
		if (lex.matching_forms(form, policy).empty()) {
			++r.types_unknown;
			r.tokens_unknown += freq;
		}
	}
	return r;
}

auto compare_versions(const CoverageReport& old_report,
                      const CoverageReport& new_report) -> VersionDelta
{
	if (old_report.corpus_id != new_report.corpus_id)
		throw MismatchedCorpus("cannot compare reports of corpora '" +
		                       old_report.corpus_id + "' and '" +
		                       new_report.corpus_id + "'");
	VersionDelta d;
	d.corpus_id = old_report.corpus_id;
	d.types.hundredths = old_report.pct_types_unknown().hundredths -
	                     new_report.pct_types_unknown().hundredths;
	d.tokens.hundredths = old_report.pct_tokens_unknown().hundredths -
	                      new_report.pct_tokens_unknown().hundredths;
	return d;
}

namespace {

// floor((2 * sum + n) / (2 * n)): half up, also for negative sums.
auto mean_half_up(std::int64_t sum, std::int64_t n) -> std::int64_t
{
	auto const num = 2 * sum + n;
	auto const den = 2 * n;
	auto q = num / den;
	if ((num % den != 0) && ((num < 0) != (den < 0)))
		--q;
	return q;
}

} // namespace

auto mean_delta(std::span<const VersionDelta> deltas) -> VersionDelta
{
	VersionDelta m;
	m.corpus_id = "mean";
	if (deltas.empty())
		return m;
	std::int64_t types = 0;
	std::int64_t tokens = 0;
	for (auto const& d : deltas) {
		types += d.types.hundredths;
		tokens += d.tokens.hundredths;
	}
	auto const n = static_cast<std::int64_t>(deltas.size());
	m.types.hundredths = mean_half_up(types, n);
	m.tokens.hundredths = mean_half_up(tokens, n);
	return m;
}

namespace {

auto unique_forms(std::span<const DictFile> files, FoldMode mode)
    -> std::set<std::string>
{
	std::set<std::string> out;
	for (auto const& f : files)
		for (auto const& e : f.entries)
			out.insert(mode == FoldMode::folded
			               ? unicode::full_fold(e.surface_form)
			               : e.surface_form);
	return out;
}

} // namespace

auto diff_dictionaries(std::span<const DictFile> a, std::span<const DictFile> b,
                       FoldMode mode) -> DictDiff
{
	auto const fa = unique_forms(a, mode);
	auto const fb = unique_forms(b, mode);
	DictDiff d;
	d.mode = mode;
	std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
	                    std::inserter(d.only_in_a, d.only_in_a.end()));
	std::set_difference(fb.begin(), fb.end(), fa.begin(), fa.end(),
	                    std::inserter(d.only_in_b, d.only_in_b.end()));
	d.common = fa.size() - d.only_in_a.size();
	return d;
}

namespace {

// Two columns: label left-aligned, values right-aligned.
auto table(const std::vector<std::pair<std::string, std::vector<std::string>>>&
               rows) -> std::string
{
	std::size_t label_w = 0;
	std::vector<std::size_t> col_w;
	for (auto const& [label, cols] : rows) {
		label_w = std::max(label_w, unicode::length(label));
		col_w.resize(std::max(col_w.size(), cols.size()), 0);
		for (std::size_t i = 0; i < cols.size(); ++i)
			col_w[i] = std::max(col_w[i], unicode::length(cols[i]));
	}
	std::string out;
	for (auto const& [label, cols] : rows) {
		out += label;
		out.append(label_w - unicode::length(label), ' ');
		for (std::size_t i = 0; i < cols.size(); ++i) {
			out.append(2 + col_w[i] - unicode::length(cols[i]), ' ');
			out += cols[i];
		}
		while (!out.empty() && out.back() == ' ')
			out.pop_back();
		out += '\n';
	}
	return out;
}

auto pct_number(Percent p) -> double
{
	return static_cast<double>(p.hundredths) / 100.0;
}

} // namespace

auto render_text(const CoverageReport& r, NumberLocale locale) -> std::string
{
	auto const pct = [&](Percent p) { return format_percent(p, locale) + "%"; };
	return table({
	    {"corpus", {r.corpus_id}},
	    {"dictionary", {r.dict_id}},
	    {"types", {format_count(r.types_total, locale)}},
	    {"out-of-coverage types",
	     {format_count(r.types_unknown, locale), pct(r.pct_types_unknown())}},
	    {"tokens", {format_count(r.tokens_total, locale)}},
	    {"out-of-coverage tokens",
	     {format_count(r.tokens_unknown, locale),
	      pct(r.pct_tokens_unknown())}},
	});
}

auto render_json(const CoverageReport& r) -> std::string
{
	nlohmann::ordered_json j;
	j["corpus_id"] = r.corpus_id;
	j["dict_id"] = r.dict_id;
	j["types_total"] = r.types_total;
	j["types_unknown"] = r.types_unknown;
	j["pct_types_unknown"] = pct_number(r.pct_types_unknown());
	j["tokens_total"] = r.tokens_total;
	j["tokens_unknown"] = r.tokens_unknown;
	j["pct_tokens_unknown"] = pct_number(r.pct_tokens_unknown());
	return j.dump(2) + "\n";
}

auto render_text(const VersionDelta& d, NumberLocale locale) -> std::string
{
	return table({
	    {"corpus", {d.corpus_id}},
	    {"types delta (pp)", {format_percent(d.types, locale)}},
	    {"tokens delta (pp)", {format_percent(d.tokens, locale)}},
	});
}

auto render_json(const VersionDelta& d) -> std::string
{
	nlohmann::ordered_json j;
	j["corpus_id"] = d.corpus_id;
	j["types_pp"] = pct_number(d.types);
	j["tokens_pp"] = pct_number(d.tokens);
	return j.dump(2) + "\n";
}

auto render_text(const DictDiff& d, NumberLocale locale) -> std::string
{
	auto out = table({
	    {"mode", {std::string(to_string(d.mode))}},
	    {"common", {format_count(d.common, locale)}},
	    {"only in A", {format_count(d.only_in_a.size(), locale)}},
	    {"only in B", {format_count(d.only_in_b.size(), locale)}},
	});
	for (auto const& f : d.only_in_a)
		out += "< " + f + "\n";
	for (auto const& f : d.only_in_b)
		out += "> " + f + "\n";
	return out;
}

auto render_json(const DictDiff& d) -> std::string
{
	nlohmann::ordered_json j;
	j["mode"] = to_string(d.mode);
	j["common"] = d.common;
	j["only_in_a"] = d.only_in_a;
	j["only_in_b"] = d.only_in_b;
	return j.dump(2) + "\n";
}

} // namespace lexcov
