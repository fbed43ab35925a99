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

// Rewrites of the 1990 Portuguese Orthographic Agreement that can be done
// from the word alone. Hyphenation changes depend on word lists and are
// left to dictionary lookups.

#include "lexcov/preprocess.hpp"
#include "lexcov/unicode.hpp"

#include <array>

namespace lexcov {

namespace {

auto is_vowel(char32_t c) -> bool
{
	static constexpr std::u32string_view vowels =
	    U"aeiouáàâãéêíóôõúü";
	return vowels.find(c) != std::u32string_view::npos;
}

// Vowel groups approximate syllables well enough to tell a final syllable
// from a penultimate one.
auto syllables(std::u32string_view s) -> std::size_t
{
	std::size_t n = 0;
	bool in_group = false;
	for (auto c : s) {
		auto const v = is_vowel(c);
		if (v && !in_group)
			++n;
		in_group = v;
	}
	return n;
}

// Paroxytones with these endings keep their accent under the general
// rules ("destróier", "Méier"), so the diphthong rule must not touch them.
auto needs_paroxytone_accent(std::u32string_view w) -> bool
{
	static constexpr std::array<std::u32string_view, 16> endings = {
	    U"r",  U"l",   U"n",  U"x",   U"ps", U"i",  U"is",  U"us",
	    U"um", U"uns", U"on", U"ons", U"ã",  U"ãs", U"ão", U"ãos"};
	for (auto e : endings)
		if (w.ends_with(e))
			return true;
	return false;
}

auto strip_accent(char32_t c) -> char32_t
{
	switch (c) {
	case U'é':
	case U'ê':
		return U'e';
	case U'ó':
	case U'ô':
		return U'o';
	case U'í':
		return U'i';
	case U'ú':
	case U'ü':
		return U'u';
	default:
		return c;
	}
}

auto apply_once(std::u32string& w) -> bool
{
	bool changed = false;
	for (std::size_t i = 0; i < w.size(); ++i) {
		auto const c = w[i];
		auto const next = i + 1 < w.size() ? w[i + 1] : U'\0';

		// trema: agüentar -> aguentar
		if (c == U'ü') {
			w[i] = U'u';
			changed = true;
		}
		// double vowel: vôo -> voo, crêem -> creem
		else if ((c == U'ô' && next == U'o') ||
		         (c == U'ê' && next == U'e')) {
			w[i] = strip_accent(c);
			changed = true;
		}
		// open diphthong in a paroxytone: idéia -> ideia
		else if ((c == U'é' || c == U'ó') && next == U'i') {
			auto const rest = std::u32string_view(w).substr(i + 2);
			if (syllables(rest) == 1 && !needs_paroxytone_accent(w)) {
				w[i] = strip_accent(c);
				changed = true;
			}
		}
		// stressed i/u after a diphthong in a paroxytone: feiúra -> feiura
		else if ((c == U'í' || c == U'ú') && i >= 2 &&
		         (w[i - 1] == U'i' || w[i - 1] == U'u') &&
		         is_vowel(w[i - 2])) {
			auto const rest = std::u32string_view(w).substr(i + 1);
			if (syllables(rest) == 1) {
				w[i] = strip_accent(c);
				changed = true;
			}
		}
	}
	return changed;
}

} // namespace

auto reform_normalize(std::string_view form) -> std::string
{
	if (!unicode::is_valid(form))
		return std::string(form);
	auto w = unicode::to_u32(unicode::nfc(form));
	// Each pass only removes accents, so this terminates.
	while (apply_once(w)) {
	}
	return unicode::to_utf8(w);
}

} // namespace lexcov
