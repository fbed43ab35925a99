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

// Dictionary application: splits the word tokens of a corpus into simple
// words, compound words and unknown words.

#ifndef LEXCOV_DICO_HPP
#define LEXCOV_DICO_HPP

#include "lexcov/delaf.hpp"
#include "lexcov/lexicon.hpp"
#include "lexcov/preprocess.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lexcov {

enum class TokenStatus : unsigned char { known_simple, in_compound_only, unknown };

auto to_string(TokenStatus s) -> std::string_view;

/// One word token of the corpus and what the dictionaries made of it.
struct TokenAnnotation {
	std::string text;
	std::size_t sentence_index = 0;
	bool sentence_initial = false;
	TokenStatus status = TokenStatus::unknown;
	/// Simple-word readings, each rendered as a DELAF line.
	std::vector<std::string> analyses;
	/// Form of the compound covering the token, if any.
	std::string compound;
};

struct DicoCounts {
	std::uint64_t word_tokens = 0;
	std::uint64_t known_simple = 0;
	std::uint64_t in_compound_only = 0;
	std::uint64_t unknown = 0;
	std::uint64_t number_tokens = 0;
	std::uint64_t compound_matches = 0;
	std::uint64_t sentences = 0;

	auto operator==(const DicoCounts&) const -> bool = default;
};

struct DicoResult {
	std::string corpus_id;
	/// Unset only for the empty result, which merges with anything.
	std::optional<CaseFoldPolicy> policy;
	std::set<DictEntry> dlf;
	std::map<DictEntry, std::uint64_t> dlc;
	std::set<std::string> err;
	std::vector<TokenAnnotation> annotations;
	DicoCounts counts;
};

/// Looks up every word token; then, sentence by sentence and left to
/// right, accepts the longest compound starting at each position
/// (earliest dictionary entry on ties) and skips past it. Word tokens
/// with no simple reading and no covering compound are unknown.
auto apply_dictionaries(const Lexicon& lex, const TokenStream& stream,
                        CaseFoldPolicy policy) -> DicoResult;

/// Union of two results over disjoint streams. Throws PolicyMismatch.
auto merge_results(DicoResult a, const DicoResult& b) -> DicoResult;

/// Sorted DELAF lines, one per line; code point order.
auto dlf_lines(const DicoResult& r) -> std::vector<std::string>;
auto dlc_lines(const DicoResult& r) -> std::vector<std::string>;

/// Writes dlf, dlc, err and annotations.tsv into `dir` (created if
/// missing). Throws IoError.
auto write_dico_outputs(const DicoResult& r, const std::filesystem::path& dir)
    -> void;

/// Reads annotations.tsv back (as written by write_dico_outputs).
/// Throws IoError or ConfigError on a malformed file.
auto read_annotations(const std::filesystem::path& path)
    -> std::vector<TokenAnnotation>;

} // namespace lexcov

#endif // LEXCOV_DICO_HPP
