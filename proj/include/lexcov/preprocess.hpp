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

// Text preprocessing: delimiter normalization, tokenization, optional
// replacement of fixed forms, and sentence segmentation.

#ifndef LEXCOV_PREPROCESS_HPP
#define LEXCOV_PREPROCESS_HPP

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexcov {

enum class TokenKind : unsigned char { word, number, punct, space };

auto to_string(TokenKind k) -> std::string_view;

struct Token {
	TokenKind kind = TokenKind::punct;
	std::string text;
	std::size_t begin = 0; // byte offsets into the tokenized text
	std::size_t end = 0;
	std::size_t sentence_index = 0;
	bool sentence_initial = false;
};

struct TokenStream {
	std::vector<Token> tokens;
	std::string source_id;
	std::size_t word_token_count = 0;
};

/// LF line endings, single spaces, NFC, no control characters except LF.
/// Throws InvalidUtf8.
auto normalize_delimiters(std::string_view raw) -> std::string;

/// Lossless: concatenating the token texts gives back `text`. Letters
/// (with any following combining marks) form word tokens, decimal digits
/// form number tokens, whitespace runs form space tokens, and every other
/// code point (or invalid byte) is a punct token of its own.
auto tokenize(std::string_view text, std::string source_id = {})
    -> TokenStream;

/// Known abbreviations, stored without the trailing period.
class AbbreviationList {
      public:
	AbbreviationList() = default;
	AbbreviationList(std::initializer_list<std::string_view> items);

	/// One abbreviation per line; "#" starts a comment line.
	static auto load(const std::filesystem::path& path) -> AbbreviationList;

	auto add(std::string_view abbreviation) -> void;
	auto contains(std::string_view word) const -> bool;
	auto size() const -> std::size_t { return items_.size(); }

      private:
	std::set<std::string, std::less<>> items_;
};

/// Assigns sentence_index and sentence_initial in place and returns the
/// stream. A sentence ends after a run of . ! ? or U+2026 (plus closing
/// quotes or brackets) that is followed by whitespace and then an
/// uppercase-initial word (possibly behind opening quotes or dashes), or
/// by the end of the text.
/// A period right after a single uppercase letter or a listed
/// abbreviation never ends a sentence. A blank line always does.
auto segment_sentences(TokenStream stream,
                       const AbbreviationList& abbreviations = {})
    -> TokenStream;

/// Fixed replacements of token sequences ("normalizing unambiguous forms").
/// Keys and values are plain text; a key matches only on token boundaries.
class ReplacementTable {
      public:
	/// Two tab-separated columns per line; "#" starts a comment line.
	static auto load(const std::filesystem::path& path) -> ReplacementTable;

	auto add(std::string_view from, std::string_view to) -> void;
	auto empty() const -> bool { return rules_.empty(); }
	auto apply(std::string_view text) const -> std::string;

      private:
	struct Rule {
		std::vector<std::string> pattern; // token texts
		std::string replacement;
	};
	std::vector<Rule> rules_; // longest pattern first
};

struct PreprocessOptions {
	AbbreviationList abbreviations;
	ReplacementTable replacements;
};

/// normalize_delimiters, replacements, tokenize, segment_sentences.
auto preprocess(std::string_view raw, std::string source_id,
                const PreprocessOptions& options = {}) -> TokenStream;

/// Old-to-new orthography for a lowercase word (trema removal, accent
/// loss on paroxytone éi/ói, on ôo/êe, and on í/ú after a diphthong).
/// Idempotent; only diacritics change.
auto reform_normalize(std::string_view form) -> std::string;

} // namespace lexcov

#endif // LEXCOV_PREPROCESS_HPP
