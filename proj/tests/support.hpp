#pragma once

// Random models shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tml/laws.hpp"
#include "tml/model.hpp"

namespace tml::sample {

inline Cardinal random_multiplicity(laws::Generator& gen, std::size_t max_index, unsigned infinite_percent = 50) {
  if (gen.chance(infinite_percent)) return Cardinal::aleph(gen.uniform(0, max_index));
  return Cardinal::finite(gen.uniform(1, 3));
}

inline std::vector<std::string> random_valuation(laws::Generator& gen, const std::vector<std::string>& props) {
  std::vector<std::string> v;
  for (const auto& p : props)
    if (gen.chance(50)) v.push_back(p);
  return v;
}

/// Arbitrary graph, cycles and parallel bundles included.
inline KripkeModel random_model(laws::Generator& gen, std::size_t max_worlds = 6, std::size_t max_index = 2) {
  std::vector<std::string> props{"p"};
  if (gen.chance(50)) props.push_back("q");
  const std::size_t count = gen.uniform(1, max_worlds);
  std::vector<World> worlds;
  for (std::size_t i = 0; i < count; ++i) worlds.push_back(World{"w" + std::to_string(i), random_valuation(gen, props)});
  std::vector<Edge> edges;
  const std::size_t edge_count = gen.uniform(0, count * 2);
  for (std::size_t i = 0; i < edge_count; ++i)
    edges.push_back(Edge{gen.uniform(0, count - 1), gen.uniform(0, count - 1), random_multiplicity(gen, max_index)});
  return KripkeModel(std::move(props), std::move(worlds), std::move(edges), WorldIndex{0});
}

/// Tree of the given depth rooted at world 0. Some subtrees are shared between parents.
inline KripkeModel random_tree(laws::Generator& gen, std::size_t depth, std::size_t max_index = 3,
                               std::size_t max_children = 3) {
  std::vector<std::string> props{"p"};
  if (gen.chance(50)) props.push_back("q");
  std::vector<World> worlds;
  std::vector<Edge> edges;
  std::vector<std::vector<WorldIndex>> by_height(depth + 1);
  auto grow = [&](auto& self, std::size_t height) -> WorldIndex {
    if (!by_height[height].empty() && gen.chance(20))
      return by_height[height][gen.uniform(0, by_height[height].size() - 1)];
    const WorldIndex w = worlds.size();
    worlds.push_back(World{"n" + std::to_string(w), random_valuation(gen, props)});
    by_height[height].push_back(w);
    if (height > 0 && (height == depth || gen.chance(75))) {
      const std::size_t children = gen.uniform(1, max_children);
      for (std::size_t i = 0; i < children; ++i) {
        const WorldIndex child = self(self, height - 1);
        edges.push_back(Edge{w, child, random_multiplicity(gen, max_index)});
      }
    }
    return w;
  };
  grow(grow, depth);
  return KripkeModel(std::move(props), std::move(worlds), std::move(edges), WorldIndex{0});
}

inline KripkeModel with_edges(const KripkeModel& m, std::vector<Edge> edges) {
  return KripkeModel(std::vector<std::string>(m.props().begin(), m.props().end()),
                     std::vector<World>(m.worlds().begin(), m.worlds().end()), std::move(edges), m.root());
}

inline KripkeModel shuffled_edges(const KripkeModel& m, laws::Generator& gen) {
  std::vector<Edge> edges(m.edges().begin(), m.edges().end());
  std::shuffle(edges.begin(), edges.end(), gen.engine());
  return with_edges(m, std::move(edges));
}

}  // namespace tml::sample
