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

// Word lists, coverage reports, version deltas and dictionary diffs.

#ifndef LEXCOV_COVERAGE_HPP
#define LEXCOV_COVERAGE_HPP

#include "lexcov/delaf.hpp"
#include "lexcov/dico.hpp"
#include "lexcov/lexicon.hpp"
#include "lexcov/preprocess.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lexcov {

enum class FoldMode : unsigned char { cased, folded };

auto to_string(FoldMode m) -> std::string_view;

/// Distinct word forms with their token frequencies.
struct WordList {
	std::string corpus_id;
	FoldMode mode = FoldMode::folded;
	std::map<std::string, std::uint64_t> entries;

	auto type_count() const -> std::uint64_t { return entries.size(); }
	auto token_count() const -> std::uint64_t;
	/// Applies the list's fold mode to a form.
	auto key(std::string_view form) const -> std::string;
};

/// Counts word tokens only. Folded mode applies full case folding.
auto build_word_list(std::span<const TokenStream> streams, FoldMode mode,
                     std::string corpus_id) -> WordList;
/// Same, from the annotations of a dictionary run.
auto build_word_list(const DicoResult& result, FoldMode mode) -> WordList;

/// Rows "form<TAB>frequency", by descending frequency, then form.
auto word_list_tsv(const WordList& list) -> std::string;

/// A percentage held in hundredths of a point, so 19.48% is 1948.
struct Percent {
	std::int64_t hundredths = 0;

	/// 100 * part / whole, rounded half up. 0 when whole is 0.
	static auto of(std::uint64_t part, std::uint64_t whole) -> Percent;

	auto operator<=>(const Percent&) const = default;
};

enum class NumberLocale : unsigned char { plain, pt_br };

auto parse_number_locale(std::string_view s) -> std::optional<NumberLocale>;

/// "19.48" or, for pt_br, "19,48".
auto format_percent(Percent p, NumberLocale locale) -> std::string;
/// "53966" or, for pt_br, "53.966".
auto format_count(std::uint64_t n, NumberLocale locale) -> std::string;

struct CoverageReport {
	std::string corpus_id;
	std::string dict_id;
	std::uint64_t types_total = 0;
	std::uint64_t tokens_total = 0;
	std::uint64_t types_unknown = 0;
	std::uint64_t tokens_unknown = 0;

	auto pct_types_unknown() const -> Percent
	{
		return Percent::of(types_unknown, types_total);
	}
	auto pct_tokens_unknown() const -> Percent
	{
		return Percent::of(tokens_unknown, tokens_total);
	}
};

/// Throws std::invalid_argument when an unknown count exceeds its total.
auto make_report(std::string corpus_id, std::string dict_id,
                 std::uint64_t types_total, std::uint64_t types_unknown,
                 std::uint64_t tokens_total, std::uint64_t tokens_unknown)
    -> CoverageReport;

/// A type is unknown when some occurrence of it (under the list's fold
/// mode) ended up in err. Throws MismatchedCorpus.
auto coverage(const WordList& words, const DicoResult& result,
              std::string dict_id = {}) -> CoverageReport;
/// A type is unknown when it has no simple reading. A folded list is
/// looked up with full_fold regardless of `policy`.
auto coverage(const WordList& words, const Lexicon& lex,
              CaseFoldPolicy policy, std::string dict_id = {})
    -> CoverageReport;

/// Old minus new unknown percentage, in points; positive means the new
/// dictionary covers more.
struct VersionDelta {
	std::string corpus_id;
	Percent types;
	Percent tokens;
};

/// Throws MismatchedCorpus.
auto compare_versions(const CoverageReport& old_report,
                      const CoverageReport& new_report) -> VersionDelta;
/// Arithmetic mean of the deltas, rounded half up. Empty input gives 0.
auto mean_delta(std::span<const VersionDelta> deltas) -> VersionDelta;

struct DictDiff {
	FoldMode mode = FoldMode::cased;
	std::set<std::string> only_in_a;
	std::set<std::string> only_in_b;
	std::uint64_t common = 0;
};

auto diff_dictionaries(std::span<const DictFile> a, std::span<const DictFile> b,
                       FoldMode mode) -> DictDiff;

auto render_text(const CoverageReport& r, NumberLocale locale) -> std::string;
auto render_json(const CoverageReport& r) -> std::string;
auto render_text(const VersionDelta& d, NumberLocale locale) -> std::string;
auto render_json(const VersionDelta& d) -> std::string;
auto render_text(const DictDiff& d, NumberLocale locale) -> std::string;
auto render_json(const DictDiff& d) -> std::string;

} // namespace lexcov

#endif // LEXCOV_COVERAGE_HPP
