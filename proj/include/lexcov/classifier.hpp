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

// Rule-based grouping of unknown words into seven categories.

#ifndef LEXCOV_CLASSIFIER_HPP
#define LEXCOV_CLASSIFIER_HPP

#include "lexcov/dico.hpp"
#include "lexcov/lexicon.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lexcov {

enum class Category : unsigned char {
	typing_error,
	old_spelling,
	proper_name,
	abbreviation_acronym,
	foreign_or_slang,
	other_noun,
	other,
};

inline constexpr std::array all_categories = {
    Category::typing_error,     Category::old_spelling,
    Category::proper_name,      Category::abbreviation_acronym,
    Category::foreign_or_slang, Category::other_noun,
    Category::other};

auto to_string(Category c) -> std::string_view;

enum class RuleId : unsigned char { acr, old, prop, typo, foreign, noun };

auto to_string(RuleId r) -> std::string_view; // "R-acr", ...
auto parse_rule_id(std::string_view s) -> std::optional<RuleId>;
auto category_of(RuleId r) -> Category;

struct CasingProfile {
	std::uint64_t all_lower = 0;
	std::uint64_t capitalized = 0;
	std::uint64_t all_upper = 0;
	std::uint64_t mixed = 0;

	auto total() const -> std::uint64_t
	{
		return all_lower + capitalized + all_upper + mixed;
	}
};

struct Evidence {
	RuleId rule;
	std::string detail;
};

struct UnknownRecord {
	std::string form; // folded
	std::uint64_t frequency = 0;
	CasingProfile casing;
	std::uint64_t non_initial = 0;             // occurrences not sentence-initial
	std::uint64_t non_initial_capitalized = 0; // ... starting uppercase

	/// 0 when every occurrence is sentence-initial.
	auto mid_sentence_cap_ratio() const -> double
	{
		return non_initial == 0 ? 0.0
		                        : double(non_initial_capitalized) /
		                              double(non_initial);
	}

	Category category = Category::other;
	/// Every rule that fired, in precedence order; the first one won.
	std::vector<Evidence> evidence;
};

struct ClassifierConfig {
	std::vector<RuleId> precedence = {RuleId::acr,  RuleId::old,
	                                  RuleId::prop, RuleId::typo,
	                                  RuleId::foreign, RuleId::noun};

	std::size_t acr_min_length = 2;
	std::size_t acr_max_length = 6;
	double acr_upper_ratio = 0.9;
	std::size_t acr_vowel_free_min_length = 2;
	std::set<std::string> acronyms; // folded

	double prop_cap_ratio = 0.9;
	std::uint64_t prop_min_non_initial = 1;

	std::size_t typo_min_candidate_length = 5;
	std::size_t typo_min_split_part = 2;

	std::string foreign_letters = "kwy";
	std::set<std::string> foreign_exceptions; // folded words allowed k/w/y
	std::vector<std::string> foreign_bigrams; // "$" marks the word end

	double noun_lower_ratio = 0.9;
	std::size_t noun_min_length = 4;

	ClassifierConfig();

	/// Key = value lines; "#" comments; "[section]" headers are
	/// prefixed to the following keys. Relative list paths resolve
	/// against `base_dir`. Throws ConfigError or IoError.
	static auto parse(std::string_view text,
	                  const std::filesystem::path& base_dir = {})
	    -> ClassifierConfig;
	static auto load(const std::filesystem::path& path) -> ClassifierConfig;
};

/// Groups the unknown annotations by folded form.
auto build_records(std::span<const TokenAnnotation> annotations)
    -> std::vector<UnknownRecord>;

/// Fixture format: form, frequency, all_lower, capitalized, all_upper,
/// mixed, non_initial, non_initial_capitalized (tab-separated, header
/// line, "#" comments). Throws IoError or ConfigError.
auto load_records(const std::filesystem::path& path)
    -> std::vector<UnknownRecord>;

/// Lexicon forms at Levenshtein distance exactly 1 from `form`, using
/// single edits over the alphabet of `lex`. Sorted, duplicate-free.
auto edit_distance_1_candidates(std::string_view form, const Lexicon& lex)
    -> std::vector<std::string>;

/// Runs every rule, records the ones that fire in precedence order, and
/// takes the category of the first.
auto classify(std::vector<UnknownRecord> records, const Lexicon& lex_new,
              const Lexicon* lex_old, const ClassifierConfig& config)
    -> std::vector<UnknownRecord>;

/// form, frequency, category, winning rule, firing rules, evidence.
auto classification_tsv(std::span<const UnknownRecord> records)
    -> std::string;
auto category_histogram(std::span<const UnknownRecord> records)
    -> std::map<Category, std::uint64_t>;

} // namespace lexcov

#endif // LEXCOV_CLASSIFIER_HPP
