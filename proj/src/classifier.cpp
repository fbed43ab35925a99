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

#include "lexcov/classifier.hpp"
#include "lexcov/error.hpp"
#include "lexcov/tsv.hpp"
#include "lexcov/unicode.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lexcov {

auto to_string(Category c) -> std::string_view
{
	switch (c) {
	case Category::typing_error:
		return "typing_error";
	case Category::old_spelling:
		return "old_spelling";
	case Category::proper_name:
		return "proper_name";
	case Category::abbreviation_acronym:
		return "abbreviation_acronym";
	case Category::foreign_or_slang:
		return "foreign_or_slang";
	case Category::other_noun:
		return "other_noun";
	case Category::other:
		return "other";
	}
	return "other";
}

auto to_string(RuleId r) -> std::string_view
{
	switch (r) {
	case RuleId::acr:
		return "R-acr";
	case RuleId::old:
		return "R-old";
	case RuleId::prop:
		return "R-prop";
	case RuleId::typo:
		return "R-typo";
	case RuleId::foreign:
		return "R-foreign";
	case RuleId::noun:
		return "R-noun";
	}
	return "R-noun";
}

auto parse_rule_id(std::string_view s) -> std::optional<RuleId>
{
	for (auto r : {RuleId::acr, RuleId::old, RuleId::prop, RuleId::typo,
	               RuleId::foreign, RuleId::noun})
		if (to_string(r) == s)
			return r;
	return std::nullopt;
}

auto category_of(RuleId r) -> Category
{
	switch (r) {
	case RuleId::acr:
		return Category::abbreviation_acronym;
	case RuleId::old:
		return Category::old_spelling;
	case RuleId::prop:
		return Category::proper_name;
	case RuleId::typo:
		return Category::typing_error;
	case RuleId::foreign:
		return Category::foreign_or_slang;
	case RuleId::noun:
		return Category::other_noun;
	}
	return Category::other;
}

ClassifierConfig::ClassifierConfig()
    : foreign_bigrams{"th", "sh", "ck", "ph", "wh", "bb", "dd", "ff",
                      "gg", "pp", "tt", "zz", "b$", "d$", "t$", "g$",
                      "p$", "f$", "c$", "k$"}
{
}

namespace {

auto trim(std::string_view s) -> std::string_view
{
	auto const b = s.find_first_not_of(" \t\r");
	if (b == std::string_view::npos)
		return {};
	auto const e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

auto unquote(std::string_view s) -> std::string
{
	s = trim(s);
	if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
	    s.back() == s.front())
		s = s.substr(1, s.size() - 2);
	return std::string(s);
}

auto parse_list(std::string_view v) -> std::vector<std::string>
{
	v = trim(v);
	if (!v.empty() && v.front() == '[' && v.back() == ']')
		v = v.substr(1, v.size() - 2);
	std::vector<std::string> out;
	while (!v.empty()) {
		auto const c = v.find(',');
		auto item = unquote(v.substr(0, c));
		if (!item.empty())
			out.push_back(std::move(item));
		if (c == std::string_view::npos)
			break;
		v = v.substr(c + 1);
	}
	return out;
}

auto read_word_file(const std::filesystem::path& path)
    -> std::vector<std::string>
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open " + path.string());
	std::vector<std::string> out;
	std::string line;
	while (std::getline(in, line)) {
		auto const t = trim(line);
		if (t.empty() || t.front() == '#')
			continue;
		out.emplace_back(t);
	}
	return out;
}

template <class T>
auto parse_number(std::string_view key, std::string_view v) -> T
{
	auto const s = unquote(v);
	T out{};
	auto const [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	if (ec != std::errc() || p != s.data() + s.size())
		throw ConfigError("bad number for " + std::string(key) + ": '" + s +
		                  "'");
	return out;
}

auto parse_ratio(std::string_view key, std::string_view v) -> double
{
	auto const r = parse_number<double>(key, v);
	if (r < 0.0 || r > 1.0)
		throw ConfigError(std::string(key) + " must lie in [0, 1]");
	return r;
}

} // namespace

auto ClassifierConfig::parse(std::string_view text,
                             const std::filesystem::path& base_dir)
    -> ClassifierConfig
{
	ClassifierConfig c;
	std::string section;
	std::size_t n = 0;
	std::istringstream in{std::string(text)};
	std::string raw;
	auto resolve = [&](std::string_view v) {
		std::filesystem::path p(unquote(v));
		return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
	};
	while (std::getline(in, raw)) {
		++n;
		auto line = trim(raw);
		if (line.empty() || line.front() == '#')
			continue;
		if (line.front() == '[' && line.back() == ']') {
			section = std::string(trim(line.substr(1, line.size() - 2)));
			continue;
		}
		auto const eq = line.find('=');
		if (eq == std::string_view::npos)
			throw ConfigError("line " + std::to_string(n) +
			                  ": expected key = value");
		auto key = std::string(trim(line.substr(0, eq)));
		if (!section.empty())
			key = section + "." + key;
		auto const v = trim(line.substr(eq + 1));

		if (key == "precedence") {
			c.precedence.clear();
			for (auto const& id : parse_list(v)) {
				auto const r = parse_rule_id(id);
				if (!r)
					throw ConfigError("unknown rule id '" + id + "'");
				if (std::find(c.precedence.begin(), c.precedence.end(),
				              *r) != c.precedence.end())
					throw ConfigError("rule '" + id +
					                  "' listed twice in precedence");
				c.precedence.push_back(*r);
			}
		} else if (key == "acronym.min_length")
			c.acr_min_length = parse_number<std::size_t>(key, v);
		else if (key == "acronym.max_length")
			c.acr_max_length = parse_number<std::size_t>(key, v);
		else if (key == "acronym.upper_ratio")
			c.acr_upper_ratio = parse_ratio(key, v);
		else if (key == "acronym.vowel_free_min_length")
			c.acr_vowel_free_min_length = parse_number<std::size_t>(key, v);
		else if (key == "acronym.list") {
			for (auto const& w : read_word_file(resolve(v)))
				c.acronyms.insert(unicode::full_fold(w));
		} else if (key == "proper_name.cap_ratio")
			c.prop_cap_ratio = parse_ratio(key, v);
		else if (key == "proper_name.min_non_initial")
			c.prop_min_non_initial = parse_number<std::uint64_t>(key, v);
		else if (key == "typo.min_candidate_length")
			c.typo_min_candidate_length = parse_number<std::size_t>(key, v);
		else if (key == "typo.min_split_part")
			c.typo_min_split_part = parse_number<std::size_t>(key, v);
		else if (key == "foreign.letters")
			c.foreign_letters = unquote(v);
		else if (key == "foreign.exceptions") {
			for (auto const& w : read_word_file(resolve(v)))
				c.foreign_exceptions.insert(unicode::full_fold(w));
		} else if (key == "foreign.bigrams")
			c.foreign_bigrams = parse_list(v);
		else if (key == "foreign.bigram_list")
			c.foreign_bigrams = read_word_file(resolve(v));
		else if (key == "noun.lower_ratio")
			c.noun_lower_ratio = parse_ratio(key, v);
		else if (key == "noun.min_length")
			c.noun_min_length = parse_number<std::size_t>(key, v);
		else
			throw ConfigError("line " + std::to_string(n) +
			                  ": unknown key '" + key + "'");
	}
	return c;
}

auto ClassifierConfig::load(const std::filesystem::path& path)
    -> ClassifierConfig
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse(buf.str(), path.parent_path());
}

auto build_records(std::span<const TokenAnnotation> annotations)
    -> std::vector<UnknownRecord>
{
	std::map<std::string, UnknownRecord> by_form;
	for (auto const& a : annotations) {
		if (a.status != TokenStatus::unknown)
			continue;
		auto key = unicode::full_fold(a.text);
		auto& r = by_form[key];
		r.form = key;
		++r.frequency;
		switch (unicode::casing_of(a.text)) {
		case unicode::Casing::none:
		case unicode::Casing::all_lower:
			++r.casing.all_lower;
			break;
		case unicode::Casing::capitalized:
			++r.casing.capitalized;
			break;
		case unicode::Casing::all_upper:
			++r.casing.all_upper;
			break;
		case unicode::Casing::mixed:
			++r.casing.mixed;
			break;
		}
		if (!a.sentence_initial) {
			++r.non_initial;
			auto const first = unicode::decode(a.text, 0);
			if (first.valid && unicode::is_upper(first.cp))
				++r.non_initial_capitalized;
		}
	}
	std::vector<UnknownRecord> out;
	out.reserve(by_form.size());
	for (auto& [k, r] : by_form)
		out.push_back(std::move(r));
	return out;
}

auto load_records(const std::filesystem::path& path)
    -> std::vector<UnknownRecord>
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open " + path.string());
	std::vector<UnknownRecord> out;
	std::string line;
	std::size_t n = 0;
	bool header = true;
	while (std::getline(in, line)) {
		++n;
		if (trim(line).empty() || line.front() == '#')
			continue;
		if (header) {
			header = false;
			continue;
		}
		auto const f = tsv::split(line);
		auto where = [&] {
			return path.string() + ":" + std::to_string(n) + ": ";
		};
		if (f.size() != 8)
			throw ConfigError(where() + "expected 8 columns");
		UnknownRecord r;
		r.form = unicode::full_fold(f[0]);
		std::uint64_t v[7];
		for (int i = 0; i < 7; ++i)
			v[i] = parse_number<std::uint64_t>("column", f[i + 1]);
		r.frequency = v[0];
		r.casing = {v[1], v[2], v[3], v[4]};
		r.non_initial = v[5];
		r.non_initial_capitalized = v[6];
		if (r.frequency == 0 || r.casing.total() != r.frequency ||
		    r.non_initial > r.frequency ||
		    r.non_initial_capitalized > r.non_initial)
			throw ConfigError(where() + "inconsistent counts for '" +
			                  r.form + "'");
		out.push_back(std::move(r));
	}
	return out;
}

auto edit_distance_1_candidates(std::string_view form, const Lexicon& lex)
    -> std::vector<std::string>
{
	std::vector<std::string> out;
	if (!unicode::is_valid(form) || form.empty())
		return out;
	auto const w = unicode::to_u32(form);
	auto const& dafsa = lex.automaton();
	auto const alphabet = dafsa.alphabet();
	std::u32string probe;
	auto try_probe = [&] {
		if (probe != w && dafsa.index_of(probe))
			out.push_back(unicode::to_utf8(probe));
	};
	for (std::size_t i = 0; i < w.size(); ++i) {
		probe = w;
		probe.erase(i, 1);
		try_probe();
	}
	for (std::size_t i = 0; i < w.size(); ++i)
		for (auto c : alphabet) {
			if (c == w[i])
				continue;
			probe = w;
			probe[i] = c;
			try_probe();
		}
	for (std::size_t i = 0; i <= w.size(); ++i)
		for (auto c : alphabet) {
			probe = w;
			probe.insert(probe.begin() + static_cast<std::ptrdiff_t>(i), c);
			try_probe();
		}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

namespace {

auto ratio(std::uint64_t part, std::uint64_t whole) -> double
{
	return whole == 0 ? 0.0 : double(part) / double(whole);
}

auto format_ratio(double r) -> std::string
{
	std::ostringstream s;
	s.precision(2);
	s << std::fixed << r;
	return s.str();
}

auto is_vowel(char32_t c) -> bool
{
	return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u';
}

class Rules {
      public:
	Rules(const Lexicon& lex_new, const Lexicon* lex_old,
	      const ClassifierConfig& c)
	    : lex_(lex_new), old_(lex_old), c_(c)
	{
	}

	auto run(RuleId id, const UnknownRecord& r) const
	    -> std::optional<std::string>
	{
		switch (id) {
		case RuleId::acr:
			return acronym(r);
		case RuleId::old:
			return old_spelling(r);
		case RuleId::prop:
			return proper_name(r);
		case RuleId::typo:
			return typo(r);
		case RuleId::foreign:
			return foreign(r);
		case RuleId::noun:
			return noun(r);
		}
		return std::nullopt;
	}

      private:
	const Lexicon& lex_;
	const Lexicon* old_;
	const ClassifierConfig& c_;

	auto known(std::string_view form) const -> bool
	{
		return !lex_.matching_forms(form, CaseFoldPolicy::unitex_like)
		            .empty();
	}

	auto acronym(const UnknownRecord& r) const -> std::optional<std::string>
	{
		if (c_.acronyms.contains(r.form))
			return "in acronym list";
		auto const len = unicode::length(r.form);
		auto const upper = ratio(r.casing.all_upper, r.frequency);
		if (len >= c_.acr_min_length && len <= c_.acr_max_length &&
		    upper >= c_.acr_upper_ratio)
			return "all-uppercase ratio " + format_ratio(upper);
		if (len >= c_.acr_vowel_free_min_length) {
			auto const bare = unicode::to_u32(
			    unicode::strip_diacritics(r.form));
			bool letters = true;
			bool vowel = false;
			for (auto ch : bare) {
				letters = letters && unicode::is_letter(ch);
				vowel = vowel || is_vowel(ch);
			}
			if (letters && !vowel)
				return "no vowels";
		}
		return std::nullopt;
	}

	auto old_spelling(const UnknownRecord& r) const
	    -> std::optional<std::string>
	{
		auto const modern = reform_normalize(r.form);
		if (modern == r.form || !known(modern))
			return std::nullopt;
		std::string d = "reformed spelling '" + modern + "' is known";
		if (old_ && !old_->matching_forms(r.form, CaseFoldPolicy::unitex_like)
		                 .empty())
			d += "; old lexicon knows '" + r.form + "'";
		return d;
	}

	auto proper_name(const UnknownRecord& r) const
	    -> std::optional<std::string>
	{
		auto const mid = r.mid_sentence_cap_ratio();
		if (r.non_initial >= c_.prop_min_non_initial &&
		    r.non_initial > 0 && mid >= c_.prop_cap_ratio)
			return "capitalized in " +
			       std::to_string(r.non_initial_capitalized) + " of " +
			       std::to_string(r.non_initial) +
			       " mid-sentence occurrences";
		return std::nullopt;
	}

	auto typo(const UnknownRecord& r) const -> std::optional<std::string>
	{
		std::vector<std::string> near;
		for (auto& cand : edit_distance_1_candidates(r.form, lex_))
			if (unicode::length(cand) >= c_.typo_min_candidate_length)
				near.push_back(std::move(cand));
		if (!near.empty()) {
			std::string d = "distance 1 from";
			for (auto const& n : near)
				d += " '" + n + "'";
			return d;
		}
		auto const w = unicode::to_u32(r.form);
		auto const min = std::max<std::size_t>(c_.typo_min_split_part, 1);
		for (std::size_t i = min; i + min <= w.size(); ++i) {
			auto const left = unicode::to_utf8(w.substr(0, i));
			auto const right = unicode::to_utf8(w.substr(i));
			if (known(left) && known(right))
				return "run-together '" + left + "' + '" + right + "'";
		}
		return std::nullopt;
	}

	auto foreign(const UnknownRecord& r) const -> std::optional<std::string>
	{
		if (!c_.foreign_exceptions.contains(r.form)) {
			auto const letters = unicode::to_u32(c_.foreign_letters);
			for (auto ch : unicode::to_u32(r.form))
				if (letters.find(ch) != std::u32string::npos)
					return "contains '" +
					       unicode::to_utf8(std::u32string(1, ch)) + "'";
		}
		auto const marked = r.form + "$";
		for (auto const& b : c_.foreign_bigrams)
			if (!b.empty() && marked.find(b) != std::string::npos)
				return "bigram '" + b + "'";
		return std::nullopt;
	}

	auto noun(const UnknownRecord& r) const -> std::optional<std::string>
	{
		auto const lower = ratio(r.casing.all_lower, r.frequency);
		if (lower >= c_.noun_lower_ratio &&
		    unicode::length(r.form) >= c_.noun_min_length)
			return "lowercase ratio " + format_ratio(lower);
		return std::nullopt;
	}
};

} // namespace

auto classify(std::vector<UnknownRecord> records, const Lexicon& lex_new,
              const Lexicon* lex_old, const ClassifierConfig& config)
    -> std::vector<UnknownRecord>
{
	Rules const rules(lex_new, lex_old, config);
	for (auto& r : records) {
		r.evidence.clear();
		for (auto id : config.precedence)
			if (auto d = rules.run(id, r))
				r.evidence.push_back({id, std::move(*d)});
		r.category = r.evidence.empty()
		                 ? Category::other
		                 : category_of(r.evidence.front().rule);
	}
	return records;
}

auto classification_tsv(std::span<const UnknownRecord> records)
    -> std::string
{
	std::string out =
	    "form\tfrequency\tcategory\trule\tfired\tevidence\n";
	for (auto const& r : records) {
		std::string fired;
		std::string evidence;
		for (auto const& e : r.evidence) {
			if (!fired.empty()) {
				fired += ',';
				evidence += "; ";
			}
			fired += to_string(e.rule);
			evidence += std::string(to_string(e.rule)) + ": " + e.detail;
		}
		auto const winner = r.evidence.empty()
		                        ? std::string("-")
		                        : std::string(to_string(r.evidence[0].rule));
		out += tsv::join({r.form, std::to_string(r.frequency),
		                  to_string(r.category), winner,
		                  fired.empty() ? "-" : fired, evidence});
		out += '\n';
	}
	return out;
}

auto category_histogram(std::span<const UnknownRecord> records)
    -> std::map<Category, std::uint64_t>
{
	std::map<Category, std::uint64_t> h;
	for (auto c : all_categories)
		h[c] = 0;
	for (auto const& r : records)
		++h[r.category];
	return h;
}

} // namespace lexcov
