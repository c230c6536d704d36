#pragma once

// Built-in example models. Every fixture is rooted at "s" over the single proposition p.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tml/cardinal.hpp"
#include "tml/error.hpp"
#include "tml/model.hpp"

namespace tml::catalog {

inline Cardinal fin(Natural n) { return Cardinal::finite(n); }
inline Cardinal aleph(std::size_t k, std::size_t max_level = kDefaultMaxLevel) { return Cardinal::aleph(k, max_level); }

/// Finite branching with mixed successors: one ~p child, two p children.
inline KripkeModel ex_fin() {
  return ModelBuilder()
      .prop("p")
      .world("s")
      .world("t0")
      .world("t1", {"p"})
      .world("t2", {"p"})
      .world("u0")
      .world("u1", {"p"})
      .world("u2", {"p"})
      .edge("s", "t0")
      .edge("s", "t1")
      .edge("s", "t2")
      .edge("t0", "u0", fin(4))
      .edge("t1", "u1")
      .edge("t2", "u2")
      .root("s")
      .build();
}

/// One ~p successor against countably many p successors.
inline KripkeModel ex_sim() {
  return ModelBuilder()
      .prop("p")
      .world("s")
      .world("t_neg")
      .world("t_pos", {"p"})
      .edge("s", "t_neg")
      .edge("s", "t_pos", aleph(0))
      .root("s")
      .build();
}

/// The single ~p child carries countably many ~p grandchildren.
inline KripkeModel ex_inf() {
  return ModelBuilder()
      .prop("p")
      .world("s")
      .world("t0")
      .world("t_pos", {"p"})
      .world("u_neg")
      .world("u_pos", {"p"})
      .edge("s", "t0")
      .edge("s", "t_pos", aleph(0))
      .edge("t0", "u_neg", aleph(0))
      .edge("t_pos", "u_pos")
      .root("s")
      .build();
}

inline KripkeModel ex_11to2() { return ex_inf(); }

/// Countably many copies of a child whose own successors favour p.
inline KripkeModel ex_flaw() {
  return ModelBuilder()
      .prop("p")
      .world("s")
      .world("t")
      .world("u_neg")
      .world("u_pos", {"p"})
      .edge("s", "t", aleph(0))
      .edge("t", "u_neg")
      .edge("t", "u_pos", aleph(0))
      .root("s")
      .build();
}

inline KripkeModel ex_fix() { return ex_flaw(); }

inline KripkeModel ex_2to11() {
  return ModelBuilder()
      .prop("p")
      .world("s")
      .world("t0")
      .world("t1")
      .world("u_neg")
      .world("u_pos", {"p"})
      .edge("s", "t0")
      .edge("s", "t1")
      .edge("t0", "u_neg")
      .edge("t1", "u_pos", aleph(0))
      .root("s")
      .build();
}

/// aleph_i supports for ~p against one for p, then aleph_j new evidences for p.
/// `extended` adds the next round: two further p evidences below each p evidence and one
/// ~p evidence below each ~p evidence.
inline KripkeModel ex_det(std::size_t i, std::size_t j, bool extended = false,
                          std::size_t max_level = kDefaultMaxLevel) {
  if (i >= max_level || j >= max_level) throw LevelError("ex_det indices must be below " + std::to_string(max_level));
  ModelBuilder b;
  b.prop("p").world("s").world("t_p", {"p"}).world("t_n").world("u_p", {"p"}).world("u_n");
  b.edge("s", "t_p").edge("s", "t_n", aleph(i, max_level));
  b.edge("t_p", "u_p", aleph(j, max_level)).edge("t_n", "u_n");
  if (extended) {
    b.world("v_p", {"p"}).world("v_n");
    b.edge("u_p", "v_p", fin(2)).edge("u_n", "v_n");
  }
  return b.root("s").build();
}

inline std::vector<std::string> names() {
  return {"ex_fin", "ex_sim", "ex_inf", "ex_flaw", "ex_fix", "ex_2to11", "ex_11to2", "ex_det:I:J"};
}

/// Resolves a catalog name; ex_det takes its indices as "ex_det:I:J".
inline std::optional<KripkeModel> lookup(std::string_view name, bool extended = false,
                                         std::size_t max_level = kDefaultMaxLevel) {
  if (name == "ex_fin") return ex_fin();
  if (name == "ex_sim") return ex_sim();
  if (name == "ex_inf") return ex_inf();
  if (name == "ex_11to2") return ex_11to2();
  if (name == "ex_flaw") return ex_flaw();
  if (name == "ex_fix") return ex_fix();
  if (name == "ex_2to11") return ex_2to11();
  if (name.starts_with("ex_det")) {
    std::string_view rest = name.substr(6);
    if (rest.empty()) return ex_det(0, 1, extended, max_level);
    if (rest.front() != ':') return std::nullopt;
    rest.remove_prefix(1);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ModelError("ex_det expects 'ex_det:I:J'");
    auto i = detail::parse_natural(rest.substr(0, colon));
    auto j = detail::parse_natural(rest.substr(colon + 1));
    if (!i || !j) throw ModelError("ex_det expects 'ex_det:I:J' with natural indices");
    return ex_det(static_cast<std::size_t>(*i), static_cast<std::size_t>(*j), extended, max_level);
  }
  return std::nullopt;
}

}  // namespace tml::catalog
