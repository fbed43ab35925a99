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

// Tab-separated rows. Tabs, newlines and backslashes inside a field are
// written as \t, \n and \\.

#ifndef LEXCOV_TSV_HPP
#define LEXCOV_TSV_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lexcov::tsv {

inline auto escape(std::string_view s) -> std::string
{
	std::string out;
	out.reserve(s.size());
	for (auto c : s) {
		switch (c) {
		case '\t':
			out += "\\t";
			break;
		case '\n':
			out += "\\n";
			break;
		case '\\':
			out += "\\\\";
			break;
		default:
			out += c;
		}
	}
	return out;
}

inline auto unescape(std::string_view s) -> std::string
{
	std::string out;
	out.reserve(s.size());
	for (std::size_t i = 0; i < s.size(); ++i) {
		if (s[i] != '\\' || i + 1 == s.size()) {
			out += s[i];
			continue;
		}
		auto const c = s[++i];
		out += c == 't' ? '\t' : c == 'n' ? '\n' : c;
	}
	return out;
}

inline auto join(std::initializer_list<std::string_view> fields)
    -> std::string
{
	std::string out;
	bool first = true;
	for (auto f : fields) {
		if (!first)
			out += '\t';
		first = false;
		out += escape(f);
	}
	return out;
}

inline auto split(std::string_view line) -> std::vector<std::string>
{
	std::vector<std::string> out;
	if (!line.empty() && line.back() == '\r')
		line.remove_suffix(1);
	std::size_t p = 0;
	for (;;) {
		auto const q = line.find('\t', p);
		out.push_back(unescape(line.substr(p, q - p)));
		if (q == std::string_view::npos)
			break;
		p = q + 1;
	}
	return out;
}

} // namespace lexcov::tsv

#endif // LEXCOV_TSV_HPP
