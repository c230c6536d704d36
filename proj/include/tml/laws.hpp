#pragma once

// Randomized law and oracle-agreement suites for the ordinal engine. Shared by
// the `selftest` subcommand and the acceptance tests; every run is a pure
// function of the seed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tml/ordinal.hpp"
#include "tml/oracle.hpp"

namespace tml::laws {

struct LawResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string counterexample;  // first failure, empty when all passed

  bool ok() const { return passed == total; }
};

inline std::string format(const LawResult& r, std::string_view verb = "pass") {
  std::string line = r.name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.total) + " " + std::string(verb);
  if (!r.ok()) line += " (first failure: " + r.counterexample + ")";
  return line;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool chance(unsigned percent) { return uniform(0, 99) < percent; }

  /// Random ordinal whose levels are all <= max_level; zero allowed.
  Ordinal ordinal(std::size_t max_level, std::size_t max_terms = 4, Natural max_exponent = 2, Natural max_coeff = 4) {
    std::vector<Term> terms;
    const std::size_t count = uniform(0, max_terms);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Natural> levels(max_level + 1, 0);
      for (auto& e : levels) e = chance(50) ? uniform(0, max_exponent) : 0;
      terms.push_back(Term{Exponent::from_levels(std::move(levels)), uniform(1, max_coeff)});
    }
    if (chance(60)) terms.push_back(Term{Exponent{}, uniform(1, max_coeff * 2)});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    return Ordinal::from_terms(terms);
  }

  Ordinal nonzero_ordinal(std::size_t max_level, std::size_t max_terms = 4) {
    Ordinal o = ordinal(max_level, max_terms);
    return o.is_zero() ? Ordinal(uniform(1, 5)) : o;
  }

  /// Nonzero ordinal strictly below aleph_level.
  Ordinal below_aleph(std::size_t level) {
    if (level == 0) return Ordinal(uniform(1, 9));
    return nonzero_ordinal(level - 1);
  }

  /// Nonzero cardinal strictly below aleph_level.
  Cardinal cardinal_below(std::size_t level) {
    if (level > 0 && chance(40)) return Cardinal::aleph(uniform(0, level - 1));
    return Cardinal::finite(uniform(1, 4));
  }

  /// Level-0 CNF below w^4 in the oracle's own representation.
  oracle::PolyOrdinal poly(std::size_t max_terms = 4, oracle::Nat max_exponent = 3, oracle::Nat max_coeff = 9) {
    oracle::PolyOrdinal p;
    const std::size_t count = uniform(0, max_terms);
    std::vector<oracle::Nat> exps;
    for (std::size_t i = 0; i < count; ++i) exps.push_back(uniform(0, max_exponent));
    std::sort(exps.begin(), exps.end(), std::greater<>());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    for (auto e : exps) p.terms.emplace_back(e, uniform(1, max_coeff));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Level-0 ordinal in oracle form; nullopt when a higher level occurs.
inline std::optional<oracle::PolyOrdinal> to_poly(const Ordinal& a) {
  if (auto top = a.top_level(); top && *top > 0) return std::nullopt;
  oracle::PolyOrdinal p;
  for (const Monomial& m : monomials(a)) p.terms.emplace_back(m.exponent, m.coefficient.tail());
  if (a.tail()) p.terms.emplace_back(0, a.tail());
  return p;
}

/// Crosses representations through the text form so no arithmetic is shared.
inline Ordinal from_poly(const oracle::PolyOrdinal& p) { return parse_ordinal(oracle::to_string(p)); }

namespace detail {

template <class Check>
LawResult run(std::string name, std::size_t count, Check&& check) {
  LawResult r{std::move(name), 0, count, {}};
  for (std::size_t i = 0; i < count; ++i) {
    std::string failure = check();
    if (failure.empty()) ++r.passed;
    else if (r.counterexample.empty()) r.counterexample = failure;
  }
  return r;
}

inline std::string show(std::initializer_list<std::pair<const char*, const Ordinal*>> values) {
  std::string s;
  for (auto [label, v] : values) {
    if (!s.empty()) s += ", ";
    s += std::string(label) + " = " + to_string(*v);
  }
  return s;
}

}  // namespace detail

/// add / mul / divmod on random level-0 pairs against the oracle.
inline std::vector<LawResult> oracle_agreement(std::uint64_t seed, std::size_t count) {
  Generator gen(seed);
  std::vector<LawResult> out;
  out.push_back(detail::run("level-0 oracle add", count, [&] {
    auto pa = gen.poly(), pb = gen.poly();
    Ordinal a = from_poly(pa), b = from_poly(pb);
    auto mine = to_poly(a + b);
    auto ref = oracle::poly_add(pa, pb);
    return mine && *mine == ref ? std::string{} : oracle::to_string(pa) + " + " + oracle::to_string(pb);
  }));
  out.push_back(detail::run("level-0 oracle mul", count, [&] {
    auto pa = gen.poly(3, 3, 9), pb = gen.poly(3, 3, 9);
    Ordinal a = from_poly(pa), b = from_poly(pb);
    auto mine = to_poly(a * b);
    auto ref = oracle::poly_mul(pa, pb);
    return mine && *mine == ref ? std::string{} : oracle::to_string(pa) + " * " + oracle::to_string(pb);
  }));
  out.push_back(detail::run("level-0 oracle divmod", count, [&] {
    auto pa = gen.poly();
    if (pa.zero()) pa = oracle::PolyOrdinal::natural(gen.uniform(1, 9));
    Ordinal a = from_poly(pa);
    auto d = divmod(a, 0);
    auto ref = oracle::poly_divmod(pa, 1);
    auto zeta = to_poly(d.coefficient), eta = to_poly(d.remainder);
    const bool same = d.log == ref.log && zeta && *zeta == ref.coefficient && eta && *eta == ref.remainder;
    return same ? std::string{} : "divmod(" + oracle::to_string(pa) + ", w)";
  }));
  out.push_back(detail::run("level-0 oracle compare", count, [&] {
    auto pa = gen.poly(), pb = gen.poly();
    Ordinal a = from_poly(pa), b = from_poly(pb);
    const bool same = (a < b) == oracle::less(pa, pb) && (a == b) == (pa == pb);
    return same ? std::string{} : oracle::to_string(pa) + " vs " + oracle::to_string(pb);
  }));
  return out;
}

/// Algebraic laws and the absorption / logarithm / transfinite-sum lemmas over all levels.
inline std::vector<LawResult> ordinal_laws(std::uint64_t seed, std::size_t count, std::size_t max_level = 3) {
  Generator gen(seed);
  std::vector<LawResult> out;
  auto level = [&] { return static_cast<std::size_t>(gen.uniform(0, max_level)); };

  out.push_back(detail::run("add associativity", count, [&] {
    std::size_t k = level();
    Ordinal a = gen.ordinal(k), b = gen.ordinal(k), c = gen.ordinal(k);
    return (a + b) + c == a + (b + c) ? std::string{} : detail::show({{"a", &a}, {"b", &b}, {"c", &c}});
  }));
  out.push_back(detail::run("add identity", count, [&] {
    Ordinal a = gen.ordinal(level());
    return a + Ordinal{} == a && Ordinal{} + a == a ? std::string{} : detail::show({{"a", &a}});
  }));
  out.push_back(detail::run("mul identity", count, [&] {
    Ordinal a = gen.ordinal(level());
    const Ordinal one(1);
    return a * one == a && one * a == a && (a * Ordinal{}).is_zero() ? std::string{} : detail::show({{"a", &a}});
  }));
  out.push_back(detail::run("mul associativity", count, [&] {
    std::size_t k = level();
    Ordinal a = gen.ordinal(k, 3), b = gen.ordinal(k, 3), c = gen.ordinal(k, 3);
    return (a * b) * c == a * (b * c) ? std::string{} : detail::show({{"a", &a}, {"b", &b}, {"c", &c}});
  }));
  out.push_back(detail::run("left distributivity", count, [&] {
    std::size_t k = level();
    Ordinal a = gen.ordinal(k, 3), b = gen.ordinal(k, 3), c = gen.ordinal(k, 3);
    return a * (b + c) == a * b + a * c ? std::string{} : detail::show({{"a", &a}, {"b", &b}, {"c", &c}});
  }));
  out.push_back(detail::run("right monotonicity of add", count, [&] {
    std::size_t k = level();
    Ordinal a = gen.ordinal(k), b = gen.ordinal(k), c = gen.ordinal(k);
    if (c < b) std::swap(b, c);
    return b == c || a + b < a + c ? std::string{} : detail::show({{"a", &a}, {"b", &b}, {"c", &c}});
  }));
  out.push_back(detail::run("absorption below aleph_k", count, [&] {
    std::size_t k = level();
    Ordinal beta = gen.below_aleph(k);
    const Ordinal ak = Ordinal::aleph(k);
    return beta + ak == ak && beta * ak == ak ? std::string{} : detail::show({{"beta", &beta}}) + ", k = " + std::to_string(k);
  }));
  out.push_back(detail::run("logarithm decomposition", count, [&] {
    std::size_t k = level();
    Ordinal alpha = gen.nonzero_ordinal(k);
    auto d = divmod(alpha, k);
    const Ordinal ak = Ordinal::aleph(k);
    const Ordinal power = pow(ak, d.log);
    const bool ok = power * d.coefficient + d.remainder == alpha && Ordinal(1) <= d.coefficient &&
                    d.coefficient < ak && d.remainder < power;
    return ok ? std::string{} : detail::show({{"alpha", &alpha}}) + ", k = " + std::to_string(k);
  }));
  out.push_back(detail::run("log order matches class order", count, [&] {
    std::size_t k = level();
    Ordinal b = gen.nonzero_ordinal(k), c = gen.nonzero_ordinal(k);
    const Natural lb = log(b, k), lc = log(c, k);
    const ClassOrder order = class_compare(b, c, k);
    const bool ok = (order == ClassOrder::Less) == (lb < lc) && (order == ClassOrder::Same) == (lb == lc) &&
                    (order == ClassOrder::Greater) == (lb > lc);
    return ok ? std::string{} : detail::show({{"beta", &b}, {"gamma", &c}}) + ", k = " + std::to_string(k);
  }));

  // Families indexed by at most aleph_k: small multiplicities, optionally closed by one aleph_k bundle.
  auto family = [&](std::size_t k, auto&& value) {
    std::vector<Bundle> bundles;
    const std::size_t n = gen.uniform(0, 4);
    for (std::size_t i = 0; i < n; ++i) bundles.emplace_back(gen.cardinal_below(k), value());
    if (gen.chance(60)) bundles.emplace_back(Cardinal::aleph(k), value());
    return bundles;
  };
  auto index_type = [](const std::vector<Bundle>& bundles) {
    Ordinal index;
    for (const Bundle& b : bundles) index += Ordinal::from_cardinal(b.multiplicity);
    return index;
  };

  out.push_back(detail::run("regular sum bound", count, [&] {
    std::size_t k = level();
    auto bundles = family(k, [&] { return gen.chance(20) ? Ordinal{} : gen.below_aleph(k); });
    const Ordinal ak = Ordinal::aleph(k);
    if (index_type(bundles) > ak) return std::string("generator produced an index above aleph_k");
    Ordinal sum = transfinite_sum(bundles);
    return sum <= ak ? std::string{} : detail::show({{"sum", &sum}}) + ", k = " + std::to_string(k);
  }));
  out.push_back(detail::run("square sum criterion", count, [&] {
    std::size_t k = level();
    const Ordinal ak = Ordinal::aleph(k);
    auto bundles = family(k, [&] {
      if (gen.chance(35)) return ak;
      return gen.chance(20) ? Ordinal{} : gen.below_aleph(k);
    });
    if (index_type(bundles) > ak) return std::string("generator produced an index above aleph_k");
    Cardinal heavy;
    for (const Bundle& b : bundles)
      if (b.value == ak) heavy += b.multiplicity;
    Ordinal sum = transfinite_sum(bundles);
    const bool square = sum == ak * ak;
    return square == heavy.is_aleph(k) ? std::string{} : detail::show({{"sum", &sum}}) + ", k = " + std::to_string(k);
  }));
  out.push_back(detail::run("text round trip", count, [&] {
    Ordinal a = gen.ordinal(level());
    return parse_ordinal(to_string(a)) == a ? std::string{} : detail::show({{"a", &a}});
  }));
  return out;
}

}  // namespace tml::laws
