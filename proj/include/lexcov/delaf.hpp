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

// DELAF inflected-form entries:
//
//   form ',' lemma '.' gram_code ('+' sem_trait)* (':' flex_code)*
//
// e.g. "sambou,sambar.V:J3s" or "do,.PREPXD+Art+Def:ms". See
// docs/delaf-format.md for the escape rules and canonical form.

#ifndef LEXCOV_DELAF_HPP
#define LEXCOV_DELAF_HPP

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexcov {

struct DictEntry {
	std::string surface_form;
	std::string lemma;
	std::string gram_code;
	std::vector<std::string> sem_traits;
	/// Each code is an alternative inflectional reading ("V:I1s:I3s").
	std::vector<std::string> flex_codes;

	auto is_multiword() const -> bool
	{
		return surface_form.find(' ') != std::string::npos;
	}

	auto operator<=>(const DictEntry&) const = default;
};

/// Which logical dictionary a file plays in a run.
enum class DictRole : unsigned char {
	general = 0,
	abbreviations_acronyms = 1,
	user = 2,
};

auto to_string(DictRole r) -> std::string_view;
auto parse_dict_role(std::string_view s) -> std::optional<DictRole>;

struct DictFile {
	std::vector<DictEntry> entries;
	/// Source line of each entry (1-based), parallel to `entries`.
	std::vector<std::size_t> line_numbers;
	DictRole role = DictRole::general;
	std::string source; // path or label, for diagnostics
};

/// Throws MalformedEntry.
auto parse_entry(std::string_view line) -> DictEntry;

/// Canonical DELAF line: required escapes only, lemma left empty when it
/// equals the form.
auto serialize_entry(const DictEntry& entry) -> std::string;

/// Re-emits a well-formed line in canonical form. Throws MalformedEntry.
auto canonicalize(std::string_view line) -> std::string;

/// Throws IoError or MalformedEntry (carrying the line number).
auto load_dict_file(const std::filesystem::path& path,
                    DictRole role = DictRole::general) -> DictFile;

/// Parses in-memory DELAF text; same rules as load_dict_file.
auto parse_dict_text(std::string_view text, DictRole role = DictRole::general,
                     std::string source = {}) -> DictFile;

/// Writes one canonical line per entry. With `sorted`, lines are ordered
/// by code point, which for UTF-8 is plain byte order.
auto save_dict_file(const std::filesystem::path& path, const DictFile& file,
                    bool sorted = false) -> void;

} // namespace lexcov

#endif // LEXCOV_DELAF_HPP
