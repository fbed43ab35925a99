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

#include "lexcov/unicode.hpp"
#include "lexcov/error.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace lexcov::unicode {

auto decode(std::string_view s, std::size_t pos) -> Decoded
{
	auto const bad = Decoded{0xFFFD, 1, false};
	auto const b0 = static_cast<unsigned char>(s[pos]);
	if (b0 < 0x80)
		return {b0, 1, true};

	std::size_t need;
	char32_t cp;
	char32_t min;
	if ((b0 & 0xE0) == 0xC0) {
		need = 1;
		cp = b0 & 0x1F;
		min = 0x80;
	}
	else if ((b0 & 0xF0) == 0xE0) {
		need = 2;
		cp = b0 & 0x0F;
		min = 0x800;
	}
	else if ((b0 & 0xF8) == 0xF0) {
		need = 3;
		cp = b0 & 0x07;
		min = 0x10000;
	}
	else {
		return bad;
	}
	if (pos + need >= s.size())
		return bad;
	for (std::size_t i = 1; i <= need; ++i) {
		auto const b = static_cast<unsigned char>(s[pos + i]);
		if ((b & 0xC0) != 0x80)
			return bad;
		cp = (cp << 6) | (b & 0x3F);
	}
	if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
		return bad;
	return {cp, need + 1, true};
}

auto append(std::string& out, char32_t cp) -> void
{
	if (cp < 0x80) {
		out.push_back(static_cast<char>(cp));
	}
	else if (cp < 0x800) {
		out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
		out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
	}
	else if (cp < 0x10000) {
		out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
		out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
		out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
	}
	else {
		out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
		out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
		out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
		out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
	}
}

auto first_invalid(std::string_view s) -> std::size_t
{
	for (std::size_t i = 0; i < s.size();) {
		auto const d = decode(s, i);
		if (!d.valid)
			return i;
		i += d.length;
	}
	return std::string_view::npos;
}

auto to_u32(std::string_view s) -> std::u32string
{
	std::u32string out;
	out.reserve(s.size());
	for (std::size_t i = 0; i < s.size();) {
		auto const d = decode(s, i);
		if (!d.valid)
			throw InvalidUtf8(i);
		out.push_back(d.cp);
		i += d.length;
	}
	return out;
}

auto to_utf8(std::u32string_view s) -> std::string
{
	std::string out;
	out.reserve(s.size());
	for (auto cp : s)
		append(out, cp);
	return out;
}

auto length(std::string_view s) -> std::size_t
{
	std::size_t n = 0;
	for (std::size_t i = 0; i < s.size(); ++n)
		i += decode(s, i).length;
	return n;
}

auto is_letter(char32_t cp) -> bool { return u_isalpha(static_cast<UChar32>(cp)); }

auto is_mark(char32_t cp) -> bool
{
	return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_M_MASK) != 0;
}

auto is_digit(char32_t cp) -> bool { return u_isdigit(static_cast<UChar32>(cp)); }

auto is_space(char32_t cp) -> bool
{
	return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

auto is_upper(char32_t cp) -> bool { return u_isUUppercase(static_cast<UChar32>(cp)); }

auto is_lower(char32_t cp) -> bool { return u_isULowercase(static_cast<UChar32>(cp)); }

auto is_control(char32_t cp) -> bool
{
	return u_charType(static_cast<UChar32>(cp)) == U_CONTROL_CHAR;
}

namespace {

template <class F>
auto map_code_points(std::string_view s, F f) -> std::string
{
	std::string out;
	out.reserve(s.size());
	for (std::size_t i = 0; i < s.size();) {
		auto const d = decode(s, i);
		if (d.valid)
			append(out, f(d.cp));
		else
			out.push_back(s[i]);
		i += d.length;
	}
	return out;
}

auto normalizer(bool compose) -> const icu::Normalizer2&
{
	auto status = U_ZERO_ERROR;
	auto const* n = compose ? icu::Normalizer2::getNFCInstance(status)
	                        : icu::Normalizer2::getNFDInstance(status);
	if (U_FAILURE(status) || n == nullptr)
		throw Error("ICU normalizer unavailable");
	return *n;
}

} // namespace

auto nfc(std::string_view s) -> std::string
{
	auto const& n = normalizer(true);
	auto status = U_ZERO_ERROR;
	// Most corpus text is already composed.
	auto const u = icu::UnicodeString::fromUTF8(
	    icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
	if (n.isNormalized(u, status) && U_SUCCESS(status))
		return std::string(s);
	status = U_ZERO_ERROR;
	auto const composed = n.normalize(u, status);
	if (U_FAILURE(status))
		throw Error("NFC normalization failed");
	std::string out;
	composed.toUTF8String(out);
	return out;
}

auto to_lower(std::string_view s) -> std::string
{
	return map_code_points(s, [](char32_t c) {
		return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
	});
}

auto to_upper(std::string_view s) -> std::string
{
	return map_code_points(s, [](char32_t c) {
		return static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
	});
}

auto capitalize_first(std::string_view s) -> std::string
{
	if (s.empty())
		return {};
	auto const d = decode(s, 0);
	if (!d.valid)
		return std::string(s);
	std::string out;
	append(out, static_cast<char32_t>(u_toupper(static_cast<UChar32>(d.cp))));
	out.append(s.substr(d.length));
	return out;
}

auto simple_fold(std::string_view s) -> std::string
{
	return map_code_points(s, [](char32_t c) {
		return static_cast<char32_t>(
		    u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
	});
}

auto full_fold(std::string_view s) -> std::string
{
	auto u = icu::UnicodeString::fromUTF8(
	    icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
	u.foldCase();
	std::string out;
	u.toUTF8String(out);
	return out;
}

auto has_upper(std::string_view s) -> bool
{
	for (std::size_t i = 0; i < s.size();) {
		auto const d = decode(s, i);
		if (d.valid && is_upper(d.cp))
			return true;
		i += d.length;
	}
	return false;
}

auto casing_of(std::string_view s) -> Casing
{
	std::size_t cased = 0, upper = 0;
	bool first_upper = false;
	bool seen_first = false;
	for (std::size_t i = 0; i < s.size();) {
		auto const d = decode(s, i);
		i += d.length;
		if (!d.valid)
			continue;
		auto const up = is_upper(d.cp);
		if (!up && !is_lower(d.cp))
			continue;
		if (!seen_first) {
			first_upper = up;
			seen_first = true;
		}
		++cased;
		upper += up ? 1 : 0;
	}
	if (cased == 0)
		return Casing::none;
	if (upper == 0)
		return Casing::all_lower;
	if (upper == 1 && first_upper)
		return Casing::capitalized;
	if (upper == cased)
		return Casing::all_upper;
	return Casing::mixed;
}

auto strip_diacritics(std::string_view s) -> std::string
{
	auto const& nfd = normalizer(false);
	auto status = U_ZERO_ERROR;
	auto const decomposed = nfd.normalize(
	    icu::UnicodeString::fromUTF8(
	        icu::StringPiece(s.data(), static_cast<int32_t>(s.size()))),
	    status);
	if (U_FAILURE(status))
		throw Error("NFD normalization failed");
	std::string tmp;
	decomposed.toUTF8String(tmp);
	std::string out;
	out.reserve(tmp.size());
	for (std::size_t i = 0; i < tmp.size();) {
		auto const d = decode(tmp, i);
		if (!d.valid || !is_mark(d.cp))
			out.append(tmp, i, d.length);
		i += d.length;
	}
	return out;
}

} // namespace lexcov::unicode
