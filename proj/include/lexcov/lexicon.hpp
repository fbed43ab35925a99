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

#ifndef LEXCOV_LEXICON_HPP
#define LEXCOV_LEXICON_HPP

#include "lexcov/dafsa.hpp"
#include "lexcov/delaf.hpp"
#include "lexcov/preprocess.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexcov {

enum class AnalysisId : std::uint32_t {};
enum class FormId : std::uint32_t {};

/// How a corpus token may match a dictionary form.
///
///   exact        byte-identical only.
///   unitex_like  exact, or the form is all lowercase and the token is its
///                first-letter-capitalized or all-uppercase variant
///                ("O" finds "o"; "neymar" does not find "Neymar").
///   full_fold    simple case folding on both sides.
enum class CaseFoldPolicy : unsigned char { exact, unitex_like, full_fold };

auto to_string(CaseFoldPolicy p) -> std::string_view;
auto parse_case_policy(std::string_view s) -> std::optional<CaseFoldPolicy>;

/// One reading of a form. An entry with several inflectional codes
/// ("V:I1s:I3s") yields one Analysis per code.
struct Analysis {
	std::string lemma;
	std::string gram_code;
	std::vector<std::string> sem_traits;
	std::string flex_code; // empty when the entry has none
	std::uint8_t roles = 0; // bit (1 << DictRole) per source dictionary

	auto has_role(DictRole r) const -> bool
	{
		return (roles >> static_cast<unsigned>(r)) & 1u;
	}
	auto to_entry(std::string_view form) const -> DictEntry;
};

struct LexiconStats {
	std::uint64_t entry_count = 0;
	std::uint64_t unique_form_count = 0;
	std::uint64_t folded_unique_form_count = 0;
	std::uint64_t simple_form_count = 0;
	std::uint64_t compound_form_count = 0;
	std::uint64_t analysis_count = 0;
	std::uint32_t state_count = 0;
	std::uint32_t transition_count = 0;

	auto operator==(const LexiconStats&) const -> bool = default;
};

/// A dictionary form spanning more than one token: multiword units
/// ("por exemplo") and forms with internal separators ("guarda-chuva").
struct Compound {
	std::string form;
	std::vector<std::string> pattern; // token texts, spaces included
	std::vector<AnalysisId> analyses;
};

struct CompoundMatch {
	std::size_t token_span; // tokens consumed, spaces included
	std::uint32_t compound; // index into Lexicon::compound()
};

/// Compiled, immutable dictionary. Forms without spaces live in a minimal
/// acyclic automaton whose key ranks index the analysis lists; a second
/// automaton over case-folded forms serves full_fold lookups. Safe to
/// share between threads.
class Lexicon {
      public:
	/// Throws EmptyLexicon.
	static auto compile(std::span<const DictFile> dicts) -> Lexicon;
	/// Union of several lexicons: same forms and readings as compiling
	/// their sources together (analysis numbering may differ).
	static auto merged(std::span<const Lexicon> parts) -> Lexicon;

	/// Sorted, duplicate-free analyses of every form `token` matches.
	auto lookup(std::string_view token,
	            CaseFoldPolicy policy = CaseFoldPolicy::unitex_like) const
	    -> std::vector<AnalysisId>;
	/// Forms (not analyses) matched by `token`, ascending.
	auto matching_forms(std::string_view token, CaseFoldPolicy policy) const
	    -> std::vector<FormId>;
	auto contains(std::string_view form) const -> bool;

	auto form(FormId id) const -> std::string;
	auto analyses_of(FormId id) const -> std::span<const AnalysisId>;
	auto analysis(AnalysisId id) const -> const Analysis&;
	auto analysis_count() const -> std::size_t { return analyses_.size(); }

	/// Multiword matches anchored at window[0], longest first, then in
	/// dictionary order. The window should end at the sentence boundary.
	auto match_compounds(std::span<const Token> window,
	                     CaseFoldPolicy policy) const
	    -> std::vector<CompoundMatch>;
	auto compound(std::uint32_t i) const -> const Compound&
	{
		return compounds_[i];
	}
	auto compound_count() const -> std::size_t { return compounds_.size(); }

	auto stats() const -> const LexiconStats& { return stats_; }
	auto automaton() const -> const Dafsa& { return simple_; }
	auto folded_automaton() const -> const Dafsa& { return folded_; }

	/// Reconstructs one DictFile per role present: compounds first in
	/// dictionary order, then the other forms in code point order, one
	/// entry per analysis. Compiling the result gives an equivalent lexicon.
	auto to_dict_files() const -> std::vector<DictFile>;

	/// Binary format; see docs/lexicon-binary.md.
	auto to_bytes() const -> std::string;
	/// Throws FormatVersionMismatch or CorruptFile.
	static auto from_bytes(std::string_view bytes) -> Lexicon;
	/// Throws IoError in addition to the from_bytes errors.
	auto save(const std::filesystem::path& path) const -> void;
	static auto load(const std::filesystem::path& path) -> Lexicon;

	static constexpr std::uint32_t format_version = 1;

      private:
	Dafsa simple_;
	std::vector<std::uint32_t> form_offsets_; // keys + 1
	std::vector<AnalysisId> form_analyses_;

	Dafsa folded_;
	std::vector<std::uint32_t> folded_offsets_;
	std::vector<FormId> folded_members_;

	std::vector<Analysis> analyses_;
	std::vector<Compound> compounds_;
	// simple_fold(first pattern token) -> compound indices, ascending
	std::unordered_map<std::string, std::vector<std::uint32_t>>
	    compound_index_;

	LexiconStats stats_;

	auto rebuild_compound_index() -> void;
	auto find_form(std::string_view form) const -> std::optional<FormId>;
};

/// Token-against-pattern comparison used for compound matching.
auto token_matches(std::string_view pattern, std::string_view token,
                   CaseFoldPolicy policy) -> bool;

} // namespace lexcov

#endif // LEXCOV_LEXICON_HPP
