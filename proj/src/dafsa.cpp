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

#include "lexcov/dafsa.hpp"
#include "lexcov/error.hpp"
#include "lexcov/unicode.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace lexcov {

Dafsa::Dafsa() : first_edge_{0, 0}, final_{0} {}

auto Dafsa::find_edge(StateId s, char32_t label) const -> std::int64_t
{
	auto const b = labels_.begin() + first_edge_[s];
	auto const e = labels_.begin() + first_edge_[s + 1];
	if (e - b <= 8) {
		for (auto it = b; it != e; ++it)
			if (*it == label)
				return it - labels_.begin();
		return -1;
	}
	auto const it = std::lower_bound(b, e, label);
	if (it == e || *it != label)
		return -1;
	return it - labels_.begin();
}

auto Dafsa::index_of(std::u32string_view key) const
    -> std::optional<std::uint32_t>
{
	StateId s = root();
	std::uint32_t rank = 0;
	for (auto c : key) {
		auto const e = find_edge(s, c);
		if (e < 0)
			return std::nullopt;
		rank += skip_[e];
		s = targets_[e];
	}
	if (!final_[s])
		return std::nullopt;
	return rank;
}

auto Dafsa::index_of_utf8(std::string_view key) const
    -> std::optional<std::uint32_t>
{
	StateId s = root();
	std::uint32_t rank = 0;
	for (std::size_t i = 0; i < key.size();) {
		auto const d = unicode::decode(key, i);
		if (!d.valid)
			return std::nullopt;
		i += d.length;
		auto const e = find_edge(s, d.cp);
		if (e < 0)
			return std::nullopt;
		rank += skip_[e];
		s = targets_[e];
	}
	if (!final_[s])
		return std::nullopt;
	return rank;
}

auto Dafsa::key_at(std::uint32_t rank) const -> std::u32string
{
	if (rank >= key_count_)
		throw std::out_of_range("Dafsa::key_at");
	std::u32string out;
	StateId s = root();
	while (!(final_[s] && rank == 0)) {
		auto const b = skip_.begin() + first_edge_[s];
		auto const e = skip_.begin() + first_edge_[s + 1];
		// last edge whose skip <= rank
		auto const it = std::upper_bound(b, e, rank) - 1;
		auto const idx = it - skip_.begin();
		rank -= *it;
		out.push_back(labels_[idx]);
		s = targets_[idx];
	}
	return out;
}

auto Dafsa::edges(StateId s) const -> std::vector<Edge>
{
	std::vector<Edge> out;
	for (auto e = first_edge_[s]; e < first_edge_[s + 1]; ++e)
		out.push_back({labels_[e], targets_[e]});
	return out;
}

auto Dafsa::next(StateId s, char32_t label) const -> std::optional<StateId>
{
	auto const e = find_edge(s, label);
	if (e < 0)
		return std::nullopt;
	return targets_[e];
}

auto Dafsa::for_each_key(
    const std::function<void(std::u32string_view, std::uint32_t)>& f) const
    -> void
{
	struct Frame {
		StateId state;
		std::uint32_t edge;
	};
	std::u32string key;
	std::vector<Frame> stack{{root(), first_edge_[root()]}};
	std::uint32_t rank = 0;
	if (final_[root()])
		f(key, rank++);
	while (!stack.empty()) {
		auto& top = stack.back();
		if (top.edge == first_edge_[top.state + 1]) {
			stack.pop_back();
			if (!key.empty())
				key.pop_back();
			continue;
		}
		auto const e = top.edge++;
		auto const t = targets_[e];
		key.push_back(labels_[e]);
		if (final_[t])
			f(key, rank++);
		stack.push_back({t, first_edge_[t]});
	}
}

auto Dafsa::alphabet() const -> std::vector<char32_t>
{
	std::vector<char32_t> a(labels_.begin(), labels_.end());
	std::sort(a.begin(), a.end());
	a.erase(std::unique(a.begin(), a.end()), a.end());
	return a;
}

auto Dafsa::arrays() const -> Arrays
{
	return {first_edge_, final_, labels_, targets_, skip_, key_count_};
}

auto Dafsa::from_arrays(Arrays a) -> Dafsa
{
	auto const n = a.final.size();
	auto const m = a.labels.size();
	if (n == 0 || a.first_edge.size() != n + 1 || a.first_edge[0] != 0 ||
	    a.first_edge[n] != m || a.targets.size() != m || a.skip.size() != m)
		throw CorruptFile("automaton arrays have inconsistent sizes");

	// States are numbered topologically, so every edge points forward;
	// recompute right-language sizes back to front and check the ranks.
	std::vector<std::uint64_t> count(n, 0);
	for (auto s = n; s-- > 0;) {
		if (a.first_edge[s] > a.first_edge[s + 1])
			throw CorruptFile("automaton edge offsets not monotone");
		std::uint64_t running = a.final[s] ? 1 : 0;
		for (auto e = a.first_edge[s]; e < a.first_edge[s + 1]; ++e) {
			if (a.targets[e] <= s || a.targets[e] >= n)
				throw CorruptFile("automaton edge target out of order");
			if (e > a.first_edge[s] && a.labels[e] <= a.labels[e - 1])
				throw CorruptFile("automaton labels not sorted");
			if (a.skip[e] != running)
				throw CorruptFile("automaton rank table mismatch");
			running += count[a.targets[e]];
		}
		count[s] = running;
	}
	if (count[0] != a.key_count)
		throw CorruptFile("automaton key count mismatch");

	Dafsa d;
	d.first_edge_ = std::move(a.first_edge);
	d.final_ = std::move(a.final);
	d.labels_ = std::move(a.labels);
	d.targets_ = std::move(a.targets);
	d.skip_ = std::move(a.skip);
	d.key_count_ = a.key_count;
	return d;
}

// ---------------------------------------------------------------- builder

struct DafsaBuilder::Impl {
	struct State {
		std::vector<Dafsa::Edge> edges;
		bool final = false;
	};

	struct Hash {
		const Impl* impl;
		auto operator()(Dafsa::StateId id) const -> std::size_t
		{
			auto const& s = impl->states[id];
			std::size_t h = s.final ? 0x9e3779b97f4a7c15ull : 0;
			for (auto const& e : s.edges) {
				h ^= e.label + 0x9e3779b97f4a7c15ull + (h << 6) +
				     (h >> 2);
				h ^= e.target + 0x9e3779b97f4a7c15ull + (h << 6) +
				     (h >> 2);
			}
			return h;
		}
	};
	struct Equal {
		const Impl* impl;
		auto operator()(Dafsa::StateId a, Dafsa::StateId b) const -> bool
		{
			auto const& x = impl->states[a];
			auto const& y = impl->states[b];
			return x.final == y.final &&
			       std::equal(x.edges.begin(), x.edges.end(),
			                  y.edges.begin(), y.edges.end(),
			                  [](auto const& p, auto const& q) {
				                  return p.label == q.label &&
				                         p.target == q.target;
			                  });
		}
	};

	std::vector<State> states;
	std::vector<Dafsa::StateId> free_list;
	std::unordered_set<Dafsa::StateId, Hash, Equal> registry;
	std::u32string previous;
	std::vector<Dafsa::StateId> path; // path[i]: state after i symbols
	std::uint32_t keys = 0;

	Impl() : states(1), registry(1024, Hash{this}, Equal{this}), path{0} {}

	auto allocate() -> Dafsa::StateId
	{
		if (!free_list.empty()) {
			auto const id = free_list.back();
			free_list.pop_back();
			states[id] = State{};
			return id;
		}
		states.emplace_back();
		return static_cast<Dafsa::StateId>(states.size() - 1);
	}

	// Replaces or registers every path state deeper than `depth`.
	auto minimize(std::size_t depth) -> void
	{
		for (auto i = path.size() - 1; i > depth; --i) {
			auto const child = path[i];
			auto const parent = path[i - 1];
			auto const [it, inserted] = registry.insert(child);
			if (!inserted) {
				states[parent].edges.back().target = *it;
				states[child].edges.clear();
				states[child].edges.shrink_to_fit();
				free_list.push_back(child);
			}
		}
		path.resize(depth + 1);
	}

	auto finish() -> Dafsa
	{
		minimize(0);

		// Reverse postorder numbering makes every edge point forward.
		std::vector<std::uint32_t> order;
		std::vector<std::uint8_t> seen(states.size(), 0);
		struct Frame {
			Dafsa::StateId id;
			std::size_t edge;
		};
		std::vector<Frame> stack{{0, 0}};
		seen[0] = 1;
		while (!stack.empty()) {
			auto& top = stack.back();
			auto const& edges = states[top.id].edges;
			if (top.edge < edges.size()) {
				auto const t = edges[top.edge++].target;
				if (!seen[t]) {
					seen[t] = 1;
					stack.push_back({t, 0});
				}
				continue;
			}
			order.push_back(top.id);
			stack.pop_back();
		}
		std::reverse(order.begin(), order.end());
		std::vector<std::uint32_t> renumber(states.size(), 0);
		for (std::uint32_t i = 0; i < order.size(); ++i)
			renumber[order[i]] = i;

		auto const n = order.size();
		Dafsa d;
		d.first_edge_.assign(n + 1, 0);
		d.final_.assign(n, 0);
		for (std::size_t i = 0; i < n; ++i) {
			auto const& s = states[order[i]];
			d.final_[i] = s.final ? 1 : 0;
			d.first_edge_[i + 1] =
			    d.first_edge_[i] +
			    static_cast<std::uint32_t>(s.edges.size());
		}
		auto const m = d.first_edge_[n];
		d.labels_.resize(m);
		d.targets_.resize(m);
		d.skip_.resize(m);
		for (std::size_t i = 0; i < n; ++i) {
			auto e = d.first_edge_[i];
			for (auto const& edge : states[order[i]].edges) {
				d.labels_[e] = edge.label;
				d.targets_[e] = renumber[edge.target];
				++e;
			}
		}
		std::vector<std::uint32_t> count(n, 0);
		for (auto s = n; s-- > 0;) {
			std::uint32_t running = d.final_[s];
			for (auto e = d.first_edge_[s]; e < d.first_edge_[s + 1];
			     ++e) {
				d.skip_[e] = running;
				running += count[d.targets_[e]];
			}
			count[s] = running;
		}
		d.key_count_ = keys;
		return d;
	}
};

DafsaBuilder::DafsaBuilder() : impl_(std::make_unique<Impl>()) {}
DafsaBuilder::~DafsaBuilder() = default;
DafsaBuilder::DafsaBuilder(DafsaBuilder&&) noexcept = default;
auto DafsaBuilder::operator=(DafsaBuilder&&) noexcept
    -> DafsaBuilder& = default;

auto DafsaBuilder::add(std::u32string_view key) -> void
{
	auto& im = *impl_;
	if (im.keys > 0 && key <= std::u32string_view(im.previous))
		throw std::invalid_argument("DafsaBuilder: keys out of order");

	std::size_t common = 0;
	auto const limit = std::min(key.size(), im.previous.size());
	while (common < limit && key[common] == im.previous[common])
		++common;
	im.minimize(common);
	for (auto i = common; i < key.size(); ++i) {
		auto const s = im.allocate();
		im.states[im.path.back()].edges.push_back({key[i], s});
		im.path.push_back(s);
	}
	im.states[im.path.back()].final = true;
	im.previous.assign(key);
	++im.keys;
}

auto DafsaBuilder::finish() && -> Dafsa { return impl_->finish(); }

auto build_dafsa(std::vector<std::u32string> keys) -> Dafsa
{
	std::sort(keys.begin(), keys.end());
	keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
	DafsaBuilder b;
	for (auto const& k : keys)
		b.add(k);
	return std::move(b).finish();
}

} // namespace lexcov
