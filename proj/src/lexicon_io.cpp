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

// Binary lexicon serialization. Layout (all integers little-endian):
//
//   magic "LXCVLEX\0" | u32 version | u32 reserved | u64 payload size
//   payload | u32 CRC-32 of payload
//
// The payload sections are listed in docs/lexicon-binary.md.

#include "lexcov/error.hpp"
#include "lexcov/lexicon.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <sstream>

namespace lexcov {

namespace {

constexpr char magic[8] = {'L', 'X', 'C', 'V', 'L', 'E', 'X', '\0'};
constexpr std::size_t header_size = 8 + 4 + 4 + 8;
constexpr std::size_t trailer_size = 4;

class Writer {
      public:
	auto u8(std::uint8_t v) -> void { buf_.push_back(static_cast<char>(v)); }
	auto u32(std::uint32_t v) -> void
	{
		for (int i = 0; i < 4; ++i)
			u8(static_cast<std::uint8_t>(v >> (8 * i)));
	}
	auto u64(std::uint64_t v) -> void
	{
		for (int i = 0; i < 8; ++i)
			u8(static_cast<std::uint8_t>(v >> (8 * i)));
	}
	auto str(std::string_view s) -> void
	{
		u32(static_cast<std::uint32_t>(s.size()));
		buf_.append(s);
	}
	template <class T>
	auto u32_array(const std::vector<T>& v) -> void
	{
		u32(static_cast<std::uint32_t>(v.size()));
		for (auto x : v)
			u32(static_cast<std::uint32_t>(x));
	}
	auto bytes() -> std::string& { return buf_; }

      private:
	std::string buf_;
};

class Reader {
      public:
	explicit Reader(std::string_view data) : data_(data) {}

	auto u8() -> std::uint8_t
	{
		need(1);
		return static_cast<std::uint8_t>(data_[pos_++]);
	}
	auto u32() -> std::uint32_t
	{
		need(4);
		std::uint32_t v = 0;
		for (int i = 0; i < 4; ++i)
			v |= std::uint32_t(static_cast<unsigned char>(data_[pos_++]))
			     << (8 * i);
		return v;
	}
	auto u64() -> std::uint64_t
	{
		need(8);
		std::uint64_t v = 0;
		for (int i = 0; i < 8; ++i)
			v |= std::uint64_t(static_cast<unsigned char>(data_[pos_++]))
			     << (8 * i);
		return v;
	}
	auto str() -> std::string
	{
		auto const n = u32();
		need(n);
		std::string s(data_.substr(pos_, n));
		pos_ += n;
		return s;
	}
	template <class T>
	auto u32_array() -> std::vector<T>
	{
		auto const n = u32();
		need(std::size_t(n) * 4);
		std::vector<T> v;
		v.reserve(n);
		for (std::uint32_t i = 0; i < n; ++i)
			v.push_back(static_cast<T>(u32()));
		return v;
	}
	auto at_end() const -> bool { return pos_ == data_.size(); }

      private:
	auto need(std::size_t n) -> void
	{
		if (data_.size() - pos_ < n)
			throw CorruptFile("lexicon payload ends early");
	}
	std::string_view data_;
	std::size_t pos_ = 0;
};

auto write_dafsa(Writer& w, const Dafsa& d) -> void
{
	auto const a = d.arrays();
	w.u32_array(a.first_edge);
	w.u32(static_cast<std::uint32_t>(a.final.size()));
	for (auto f : a.final)
		w.u8(f);
	w.u32_array(a.labels);
	w.u32_array(a.targets);
	w.u32_array(a.skip);
	w.u32(a.key_count);
}

auto read_dafsa(Reader& r) -> Dafsa
{
	Dafsa::Arrays a;
	a.first_edge = r.u32_array<std::uint32_t>();
	auto const n = r.u32();
	a.final.reserve(n);
	for (std::uint32_t i = 0; i < n; ++i)
		a.final.push_back(r.u8());
	a.labels = r.u32_array<char32_t>();
	a.targets = r.u32_array<std::uint32_t>();
	a.skip = r.u32_array<std::uint32_t>();
	a.key_count = r.u32();
	return Dafsa::from_arrays(std::move(a));
}

template <class Id>
auto check_offsets(const std::vector<std::uint32_t>& offsets,
                   const std::vector<Id>& members, std::uint32_t keys,
                   std::size_t id_limit) -> void
{
	if (offsets.size() != std::size_t(keys) + 1 || offsets.front() != 0 ||
	    offsets.back() != members.size())
		throw CorruptFile("lexicon payload offsets inconsistent");
	for (std::size_t i = 1; i < offsets.size(); ++i)
		if (offsets[i] < offsets[i - 1])
			throw CorruptFile("lexicon payload offsets not monotone");
	for (auto m : members)
		if (static_cast<std::size_t>(m) >= id_limit)
			throw CorruptFile("lexicon payload id out of range");
}

} // namespace

auto Lexicon::to_bytes() const -> std::string
{
	Writer w;
	auto const& st = stats_;
	w.u64(st.entry_count);
	w.u64(st.unique_form_count);
	w.u64(st.folded_unique_form_count);
	w.u64(st.simple_form_count);
	w.u64(st.compound_form_count);
	w.u64(st.analysis_count);
	w.u32(st.state_count);
	w.u32(st.transition_count);

	w.u32(static_cast<std::uint32_t>(analyses_.size()));
	for (auto const& a : analyses_) {
		w.str(a.lemma);
		w.str(a.gram_code);
		w.u32(static_cast<std::uint32_t>(a.sem_traits.size()));
		for (auto const& s : a.sem_traits)
			w.str(s);
		w.str(a.flex_code);
		w.u8(a.roles);
	}

	write_dafsa(w, simple_);
	w.u32_array(form_offsets_);
	w.u32_array(form_analyses_);
	write_dafsa(w, folded_);
	w.u32_array(folded_offsets_);
	w.u32_array(folded_members_);

	w.u32(static_cast<std::uint32_t>(compounds_.size()));
	for (auto const& c : compounds_) {
		w.str(c.form);
		w.u32_array(c.analyses);
	}

	auto& payload = w.bytes();
	Writer out;
	out.bytes().append(magic, sizeof magic);
	out.u32(format_version);
	out.u32(0);
	out.u64(payload.size());
	out.bytes().append(payload);
	out.u32(static_cast<std::uint32_t>(
	    crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
	          static_cast<uInt>(payload.size()))));
	return std::move(out.bytes());
}

auto Lexicon::from_bytes(std::string_view bytes) -> Lexicon
{
	if (bytes.size() < header_size + trailer_size)
		throw CorruptFile("lexicon file truncated");
	if (std::memcmp(bytes.data(), magic, sizeof magic) != 0)
		throw CorruptFile("not a lexicon file (bad magic)");
	Reader head(bytes.substr(8, header_size - 8));
	auto const version = head.u32();
	if (version != format_version)
		throw FormatVersionMismatch(
		    "lexicon format version " + std::to_string(version) +
		    ", expected " + std::to_string(format_version));
	head.u32();
	auto const size = head.u64();
	if (size != bytes.size() - header_size - trailer_size)
		throw CorruptFile("lexicon file truncated or padded");
	auto const payload = bytes.substr(header_size, size);
	Reader tail(bytes.substr(header_size + size));
	auto const stored = tail.u32();
	auto const actual = static_cast<std::uint32_t>(
	    crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
	          static_cast<uInt>(payload.size())));
	if (stored != actual)
		throw CorruptFile("lexicon checksum mismatch");

	Reader r(payload);
	Lexicon lex;
	auto& st = lex.stats_;
	st.entry_count = r.u64();
	st.unique_form_count = r.u64();
	st.folded_unique_form_count = r.u64();
	st.simple_form_count = r.u64();
	st.compound_form_count = r.u64();
	st.analysis_count = r.u64();
	st.state_count = r.u32();
	st.transition_count = r.u32();

	auto const n_analyses = r.u32();
	lex.analyses_.reserve(n_analyses);
	for (std::uint32_t i = 0; i < n_analyses; ++i) {
		Analysis a;
		a.lemma = r.str();
		a.gram_code = r.str();
		auto const n_sem = r.u32();
		for (std::uint32_t k = 0; k < n_sem; ++k)
			a.sem_traits.push_back(r.str());
		a.flex_code = r.str();
		a.roles = r.u8();
		lex.analyses_.push_back(std::move(a));
	}

	lex.simple_ = read_dafsa(r);
	lex.form_offsets_ = r.u32_array<std::uint32_t>();
	lex.form_analyses_ = r.u32_array<AnalysisId>();
	check_offsets(lex.form_offsets_, lex.form_analyses_,
	              lex.simple_.key_count(), lex.analyses_.size());
	lex.folded_ = read_dafsa(r);
	lex.folded_offsets_ = r.u32_array<std::uint32_t>();
	lex.folded_members_ = r.u32_array<FormId>();
	check_offsets(lex.folded_offsets_, lex.folded_members_,
	              lex.folded_.key_count(), lex.simple_.key_count());

	auto const n_compounds = r.u32();
	for (std::uint32_t i = 0; i < n_compounds; ++i) {
		Compound c;
		c.form = r.str();
		c.analyses = r.u32_array<AnalysisId>();
		if (c.form.empty())
			throw CorruptFile("empty compound form");
		for (auto a : c.analyses)
			if (static_cast<std::size_t>(a) >= lex.analyses_.size())
				throw CorruptFile("compound analysis out of range");
		lex.compounds_.push_back(std::move(c));
	}
	if (!r.at_end())
		throw CorruptFile("trailing bytes in lexicon payload");
	lex.rebuild_compound_index();
	return lex;
}

auto Lexicon::save(const std::filesystem::path& path) const -> void
{
	auto const bytes = to_bytes();
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw IoError("cannot write lexicon " + path.string());
	out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
	if (!out)
		throw IoError("cannot write lexicon " + path.string());
}

auto Lexicon::load(const std::filesystem::path& path) -> Lexicon
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open lexicon " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	if (in.bad())
		throw IoError("cannot read lexicon " + path.string());
	return from_bytes(buf.str());
}

} // namespace lexcov
