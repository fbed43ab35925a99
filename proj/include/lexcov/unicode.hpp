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

// UTF-8 codec and the handful of Unicode property/case operations the rest
// of the library needs. Character properties and normalization come from ICU.

#ifndef LEXCOV_UNICODE_HPP
#define LEXCOV_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace lexcov::unicode {

struct Decoded {
	char32_t cp;
	std::size_t length; // bytes consumed, >= 1 even when invalid
	bool valid;
};

/// Decodes the code point starting at byte `pos`. Overlong forms,
/// surrogates and truncated sequences are reported invalid with length 1.
auto decode(std::string_view s, std::size_t pos) -> Decoded;

auto append(std::string& out, char32_t cp) -> void;

/// Byte offset of the first invalid sequence, or npos.
auto first_invalid(std::string_view s) -> std::size_t;
inline auto is_valid(std::string_view s) -> bool
{
	return first_invalid(s) == std::string_view::npos;
}

/// Throws InvalidUtf8.
auto to_u32(std::string_view s) -> std::u32string;
auto to_utf8(std::u32string_view s) -> std::string;

/// Number of code points (invalid bytes count as one each).
auto length(std::string_view s) -> std::size_t;

auto is_letter(char32_t cp) -> bool;
auto is_mark(char32_t cp) -> bool;
auto is_digit(char32_t cp) -> bool;
auto is_space(char32_t cp) -> bool;
auto is_upper(char32_t cp) -> bool;
auto is_lower(char32_t cp) -> bool;
auto is_control(char32_t cp) -> bool;

/// Canonical composition. Input must be valid UTF-8.
auto nfc(std::string_view s) -> std::string;

// Per-code-point (simple) case mappings.
auto to_lower(std::string_view s) -> std::string;
auto to_upper(std::string_view s) -> std::string;
auto capitalize_first(std::string_view s) -> std::string;
auto simple_fold(std::string_view s) -> std::string;

/// Full Unicode case folding (may change length, e.g. "ß" -> "ss").
auto full_fold(std::string_view s) -> std::string;

auto has_upper(std::string_view s) -> bool;

enum class Casing { none, all_lower, capitalized, all_upper, mixed };

/// Casing shape of a word. A single uppercase letter counts as
/// capitalized; forms without cased letters are `none`.
auto casing_of(std::string_view s) -> Casing;

/// Strips combining marks after canonical decomposition: "agüentar" ->
/// "aguentar", "ação" -> "acao".
auto strip_diacritics(std::string_view s) -> std::string;

} // namespace lexcov::unicode

#endif // LEXCOV_UNICODE_HPP
