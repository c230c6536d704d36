#pragma once

// Finite descriptions of possibly infinite Kripke models. An edge (s, t, mu) is a
// bundle: s has mu pairwise distinct successors, each the root of its own copy of
// the model below t. Copies share t's description.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tml/cardinal.hpp"
#include "tml/error.hpp"

namespace tml {

using WorldIndex = std::size_t;

struct World {
  std::string id;
  std::vector<std::string> props;  // sorted, unique

  friend bool operator==(const World&, const World&) = default;
};

struct Edge {
  WorldIndex from = 0;
  WorldIndex to = 0;
  Cardinal multiplicity = Cardinal::finite(1);

  friend bool operator==(const Edge&, const Edge&) = default;
};

class KripkeModel {
 public:
  /// Validates endpoints, multiplicities and valuations; throws ModelError.
  KripkeModel(std::vector<std::string> props, std::vector<World> worlds, std::vector<Edge> edges,
              std::optional<WorldIndex> root = std::nullopt)
      : props_(std::move(props)), worlds_(std::move(worlds)), edges_(std::move(edges)), root_(root) {
    validate();
    index();
  }

  std::span<const std::string> props() const noexcept { return props_; }
  std::span<const World> worlds() const noexcept { return worlds_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<WorldIndex> root() const noexcept { return root_; }
  std::size_t world_count() const noexcept { return worlds_.size(); }

  /// Edge indices leaving `w`, in canonical (document) order.
  std::span<const std::size_t> outgoing(WorldIndex w) const { return outgoing_[w]; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const World& world(WorldIndex w) const { return worlds_[w]; }
  bool is_dead_end(WorldIndex w) const { return outgoing_[w].empty(); }

  std::optional<WorldIndex> find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }

  WorldIndex index_of(std::string_view id) const {
    if (auto w = find(id)) return *w;
    throw ModelError("unknown world '" + std::string(id) + "'");
  }

  /// Position of `prop` in props(), or nullopt if undeclared.
  std::optional<std::size_t> prop_index(std::string_view prop) const {
    auto it = std::find(props_.begin(), props_.end(), prop);
    if (it == props_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - props_.begin());
  }

  bool holds(WorldIndex w, std::size_t prop) const { return valuation_[w][prop]; }

  /// The designated root if set, else the first world.
  WorldIndex designated() const noexcept { return root_.value_or(0); }

  friend bool operator==(const KripkeModel& a, const KripkeModel& b) {
    return a.props_ == b.props_ && a.worlds_ == b.worlds_ && a.edges_ == b.edges_ && a.root_ == b.root_;
  }

 private:
  void validate() {
    if (worlds_.empty()) throw ModelError("worlds: a model needs at least one world");
    std::set<std::string> declared;
    for (std::size_t i = 0; i < props_.size(); ++i)
      if (!declared.insert(props_[i]).second) throw ModelError("props[" + std::to_string(i) + "]: duplicate proposition '" + props_[i] + "'");
    for (std::size_t i = 0; i < worlds_.size(); ++i) {
      World& w = worlds_[i];
      const std::string where = "worlds[" + std::to_string(i) + "]";
      if (w.id.empty()) throw ModelError(where + ".id: empty world id");
      if (!by_id_.emplace(w.id, i).second) throw ModelError(where + ".id: duplicate world id '" + w.id + "'");
      std::sort(w.props.begin(), w.props.end());
      w.props.erase(std::unique(w.props.begin(), w.props.end()), w.props.end());
      for (const auto& p : w.props)
        if (!declared.count(p)) throw ModelError(where + ".props: undeclared proposition '" + p + "'");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (e.from >= worlds_.size() || e.to >= worlds_.size()) throw ModelError(where + ": endpoint out of range");
      if (e.multiplicity.is_zero()) throw ModelError(where + ".mult: multiplicity must be at least 1");
    }
    if (root_ && *root_ >= worlds_.size()) throw ModelError("root: out of range");
  }

  void index() {
    outgoing_.assign(worlds_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) outgoing_[edges_[i].from].push_back(i);
    valuation_.assign(worlds_.size(), std::vector<bool>(props_.size(), false));
    for (std::size_t w = 0; w < worlds_.size(); ++w)
      for (const auto& p : worlds_[w].props) valuation_[w][*prop_index(p)] = true;
  }

  std::vector<std::string> props_;
  std::vector<World> worlds_;
  std::vector<Edge> edges_;
  std::optional<WorldIndex> root_;

  std::map<std::string, WorldIndex> by_id_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<bool>> valuation_;
};

struct PointedModel {
  const KripkeModel& model;
  WorldIndex world;
};

/// Incremental construction by world id.
class ModelBuilder {
 public:
  ModelBuilder& prop(std::string name) {
    props_.push_back(std::move(name));
    return *this;
  }

  ModelBuilder& props(std::initializer_list<std::string> names) {
    for (const auto& n : names) props_.push_back(n);
    return *this;
  }

  ModelBuilder& world(std::string id, std::vector<std::string> props = {}) {
    ids_.emplace(id, worlds_.size());
    worlds_.push_back(World{std::move(id), std::move(props)});
    return *this;
  }

  ModelBuilder& edge(const std::string& from, const std::string& to, Cardinal multiplicity = Cardinal::finite(1)) {
    edges_.push_back(Edge{lookup(from), lookup(to), multiplicity});
    return *this;
  }

  ModelBuilder& root(const std::string& id) {
    root_ = lookup(id);
    return *this;
  }

  KripkeModel build() const { return KripkeModel(props_, worlds_, edges_, root_); }

 private:
  WorldIndex lookup(const std::string& id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) throw ModelError("unknown world '" + id + "'");
    return it->second;
  }

  std::vector<std::string> props_;
  std::vector<World> worlds_;
  std::vector<Edge> edges_;
  std::optional<WorldIndex> root_;
  std::map<std::string, WorldIndex> ids_;
};

/// kappa_s: cardinal sum of outgoing multiplicities.
inline Cardinal successor_cardinality(const KripkeModel& m, WorldIndex s) {
  Cardinal total;
  for (std::size_t e : m.outgoing(s)) total += m.edge(e).multiplicity;
  return total;
}

/// lambda_s: the same sum restricted to bundles whose target is not a dead end.
inline Cardinal live_successor_cardinality(const KripkeModel& m, WorldIndex s) {
  Cardinal total;
  for (std::size_t e : m.outgoing(s))
    if (!m.is_dead_end(m.edge(e).to)) total += m.edge(e).multiplicity;
  return total;
}

// ---------------------------------------------------------------------------
// Wire format:
// {"props": [..], "worlds": [{"id": "s", "props": [..]}],
//  "edges": [{"from": "s", "to": "t", "mult": "aleph_0"}], "root": "s"}

/// Keys come out in the order props, worlds, edges, root.
inline nlohmann::ordered_json to_json(const KripkeModel& m) {
  nlohmann::ordered_json doc;
  doc["props"] = std::vector<std::string>(m.props().begin(), m.props().end());
  doc["worlds"] = nlohmann::ordered_json::array();
  for (const World& w : m.worlds()) doc["worlds"].push_back({{"id", w.id}, {"props", w.props}});
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : m.edges())
    doc["edges"].push_back({{"from", m.world(e.from).id}, {"to", m.world(e.to).id}, {"mult", to_string(e.multiplicity)}});
  if (m.root()) doc["root"] = m.world(*m.root()).id;
  return doc;
}

inline std::string dump_model(const KripkeModel& m, int indent = 2) { return to_json(m).dump(indent); }

namespace detail {

template <class Json>
const Json& require(const Json& node, const char* key, const std::string& where) {
  if (!node.is_object() || !node.contains(key)) throw ModelError(where + ": missing field '" + key + "'");
  return node.at(key);
}

template <class Json>
std::string require_string(const Json& node, const std::string& where) {
  if (!node.is_string()) throw ModelError(where + ": expected a string");
  return node.template get<std::string>();
}

template <class Json>
std::vector<std::string> require_strings(const Json& node, const std::string& where) {
  if (!node.is_array()) throw ModelError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(require_string(node[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

template <class Json>
KripkeModel model_from_json(const Json& doc, std::size_t max_level = kDefaultMaxLevel) {
  if (!doc.is_object()) throw ModelError("document: expected a JSON object");
  auto props = detail::require_strings(detail::require(doc, "props", "document"), "props");

  const auto& worlds_node = detail::require(doc, "worlds", "document");
  if (!worlds_node.is_array()) throw ModelError("worlds: expected an array");
  std::vector<World> worlds;
  std::map<std::string, WorldIndex> ids;
  for (std::size_t i = 0; i < worlds_node.size(); ++i) {
    const std::string where = "worlds[" + std::to_string(i) + "]";
    std::string id = detail::require_string(detail::require(worlds_node[i], "id", where), where + ".id");
    std::vector<std::string> valuation;
    if (worlds_node[i].contains("props")) valuation = detail::require_strings(worlds_node[i].at("props"), where + ".props");
    ids.emplace(id, worlds.size());
    worlds.push_back(World{std::move(id), std::move(valuation)});
  }

  auto resolve = [&](const std::string& id, const std::string& where) {
    auto it = ids.find(id);
    if (it == ids.end()) throw ModelError(where + ": unknown world id '" + id + "'");
    return it->second;
  };

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& edges_node = doc.at("edges");
    if (!edges_node.is_array()) throw ModelError("edges: expected an array");
    for (std::size_t i = 0; i < edges_node.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& e = edges_node[i];
      WorldIndex from = resolve(detail::require_string(detail::require(e, "from", where), where + ".from"), where + ".from");
      WorldIndex to = resolve(detail::require_string(detail::require(e, "to", where), where + ".to"), where + ".to");
      Cardinal mult = Cardinal::finite(1);
      if (e.contains("mult")) {
        const auto& m = e.at("mult");
        try {
          if (m.is_number_unsigned()) mult = Cardinal::finite(m.template get<Natural>());
          else mult = parse_cardinal(detail::require_string(m, where + ".mult"), max_level);
        } catch (const ModelError&) {
          throw;
        } catch (const Error& err) {
          throw ModelError(where + ".mult: " + err.what());
        }
      }
      if (mult.is_zero()) throw ModelError(where + ".mult: multiplicity must be at least 1");
      edges.push_back(Edge{from, to, mult});
    }
  }

  std::optional<WorldIndex> root;
  if (doc.contains("root") && !doc.at("root").is_null())
    root = resolve(detail::require_string(doc.at("root"), "root"), "root");

  return KripkeModel(std::move(props), std::move(worlds), std::move(edges), root);
}

inline KripkeModel load_model(std::string_view text, std::size_t max_level = kDefaultMaxLevel) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("malformed document: ") + e.what());
  }
  return model_from_json(doc, max_level);
}

}  // namespace tml
