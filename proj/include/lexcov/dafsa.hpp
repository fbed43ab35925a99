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

#ifndef LEXCOV_DAFSA_HPP
#define LEXCOV_DAFSA_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexcov {

/// Minimal deterministic acyclic automaton over Unicode scalar values.
///
/// Keys are numbered 0..key_count()-1 in code point order; index_of() and
/// key_at() convert between a key and its rank (perfect hashing), so any
/// per-key payload can live in a plain array next to the automaton.
/// Immutable once built.
class Dafsa {
      public:
	using StateId = std::uint32_t;

	struct Edge {
		char32_t label;
		StateId target;
	};

	Dafsa();

	auto key_count() const -> std::uint32_t { return key_count_; }
	auto state_count() const -> std::uint32_t
	{
		return static_cast<std::uint32_t>(final_.size());
	}
	auto transition_count() const -> std::uint32_t
	{
		return static_cast<std::uint32_t>(labels_.size());
	}
	static constexpr auto root() -> StateId { return 0; }

	auto index_of(std::u32string_view key) const
	    -> std::optional<std::uint32_t>;
	/// UTF-8 convenience; invalid input is never a key.
	auto index_of_utf8(std::string_view key) const
	    -> std::optional<std::uint32_t>;
	auto key_at(std::uint32_t rank) const -> std::u32string;

	auto is_final(StateId s) const -> bool { return final_[s] != 0; }
	auto edges(StateId s) const -> std::vector<Edge>;
	/// Target of the transition on `label`, if any.
	auto next(StateId s, char32_t label) const -> std::optional<StateId>;

	/// Visits keys in rank order.
	auto for_each_key(const std::function<void(std::u32string_view,
	                                           std::uint32_t)>& f) const
	    -> void;

	/// Distinct transition labels, ascending.
	auto alphabet() const -> std::vector<char32_t>;

	// Flat representation, used by the binary lexicon format.
	struct Arrays {
		std::vector<std::uint32_t> first_edge; // states + 1
		std::vector<std::uint8_t> final;
		std::vector<char32_t> labels;
		std::vector<std::uint32_t> targets;
		std::vector<std::uint32_t> skip;
		std::uint32_t key_count = 0;
	};
	auto arrays() const -> Arrays;
	/// Throws CorruptFile when the arrays are inconsistent.
	static auto from_arrays(Arrays a) -> Dafsa;

      private:
	friend class DafsaBuilder;

	// CSR layout: edges of state s are [first_edge_[s], first_edge_[s+1]),
	// sorted by label. skip_[e] is the number of keys ranked before those
	// reachable through edge e (the state's own finality included).
	std::vector<std::uint32_t> first_edge_;
	std::vector<std::uint8_t> final_;
	std::vector<char32_t> labels_;
	std::vector<std::uint32_t> targets_;
	std::vector<std::uint32_t> skip_;
	std::uint32_t key_count_ = 0;

	auto find_edge(StateId s, char32_t label) const -> std::int64_t;
};

/// Incremental construction from keys inserted in strictly increasing code
/// point order; equivalent states are merged as soon as their right
/// language is complete, so memory stays close to the minimal automaton.
class DafsaBuilder {
      public:
	DafsaBuilder();
	~DafsaBuilder();
	DafsaBuilder(DafsaBuilder&&) noexcept;
	auto operator=(DafsaBuilder&&) noexcept -> DafsaBuilder&;

	/// Throws std::invalid_argument if `key` is not greater than the
	/// previous key.
	auto add(std::u32string_view key) -> void;
	auto finish() && -> Dafsa;

      private:
	struct Impl;
	std::unique_ptr<Impl> impl_;
};

/// Builds from an unsorted, possibly duplicated key list.
auto build_dafsa(std::vector<std::u32string> keys) -> Dafsa;

} // namespace lexcov

#endif // LEXCOV_DAFSA_HPP
