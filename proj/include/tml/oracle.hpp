#pragma once

// Brute-force base-w Cantor normal form arithmetic for ordinals below w^w.
// Shares no code with ordinal.hpp on purpose: it is the reference the symbolic
// engine is checked against on level 0.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tml/error.hpp"

namespace tml::oracle {

using Nat = unsigned long long;

inline constexpr Nat kDefaultMaxExponent = 64;

/// sum of w^exponent * coefficient, exponents strictly descending, coefficients positive.
struct PolyOrdinal {
  std::vector<std::pair<Nat, Nat>> terms;

  static PolyOrdinal natural(Nat n) {
    PolyOrdinal p;
    if (n) p.terms.emplace_back(0, n);
    return p;
  }

  static PolyOrdinal power(Nat exponent, Nat coefficient = 1) {
    PolyOrdinal p;
    if (coefficient) p.terms.emplace_back(exponent, coefficient);
    return p;
  }

  bool zero() const { return terms.empty(); }
  Nat degree() const { return terms.empty() ? 0 : terms.front().first; }

  bool valid() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].second == 0) return false;
      if (i && terms[i - 1].first <= terms[i].first) return false;
    }
    return true;
  }

  friend bool operator==(const PolyOrdinal&, const PolyOrdinal&) = default;
};

inline bool less(const PolyOrdinal& a, const PolyOrdinal& b) {
  for (std::size_t i = 0; i < a.terms.size() && i < b.terms.size(); ++i) {
    if (a.terms[i].first != b.terms[i].first) return a.terms[i].first < b.terms[i].first;
    if (a.terms[i].second != b.terms[i].second) return a.terms[i].second < b.terms[i].second;
  }
  return a.terms.size() < b.terms.size();
}

inline std::string to_string(const PolyOrdinal& a) {
  if (a.zero()) return "0";
  std::string out;
  for (auto [e, c] : a.terms) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    out += "w";
    if (e > 1) out += "^" + std::to_string(e);
    if (c > 1) out += "*" + std::to_string(c);
  }
  return out;
}

/// a + b: terms of a below the leading exponent of b are swallowed.
inline PolyOrdinal poly_add(const PolyOrdinal& a, const PolyOrdinal& b) {
  if (b.zero()) return a;
  const Nat lead = b.terms.front().first;
  PolyOrdinal r;
  Nat carried = 0;
  for (auto [e, c] : a.terms) {
    if (e > lead) r.terms.emplace_back(e, c);
    else if (e == lead) carried = c;
  }
  r.terms.emplace_back(lead, b.terms.front().second + carried);
  for (std::size_t i = 1; i < b.terms.size(); ++i) r.terms.push_back(b.terms[i]);
  return r;
}

/// a * b by left distribution over the terms of b, each w^e*c realized as c repeated addenda.
inline PolyOrdinal poly_mul(const PolyOrdinal& a, const PolyOrdinal& b, Nat max_exponent = kDefaultMaxExponent) {
  if (a.zero() || b.zero()) return {};
  PolyOrdinal acc;
  for (auto [e, c] : b.terms) {
    PolyOrdinal addend;
    if (e == 0) {
      addend = a;
    } else {
      if (a.degree() + e > max_exponent) throw OverflowError("oracle exponent bound exceeded");
      addend = PolyOrdinal::power(a.degree() + e);
    }
    for (Nat i = 0; i < c; ++i) acc = poly_add(acc, addend);
  }
  return acc;
}

struct PolyDecomposition {
  Nat log = 0;
  PolyOrdinal coefficient;
  PolyOrdinal remainder;
};

/// a = (w^base_exponent)^log * coefficient + remainder, 1 <= coefficient < w^base_exponent.
inline PolyDecomposition poly_divmod(const PolyOrdinal& a, Nat base_exponent = 1) {
  if (a.zero()) throw ZeroArgument("oracle logarithm of zero");
  if (base_exponent == 0) throw ZeroArgument("oracle logarithm base must exceed 1");
  PolyDecomposition d;
  d.log = a.degree() / base_exponent;
  const Nat cut = d.log * base_exponent;
  for (auto [e, c] : a.terms) {
    if (e >= cut) d.coefficient.terms.emplace_back(e - cut, c);
    else d.remainder.terms.emplace_back(e, c);
  }
  return d;
}

/// Order type of the lexicographic well order over (index, element) pairs, computed by
/// appending every addendum one at a time. Multiplicities must be finite.
inline PolyOrdinal sum_order_type(const std::vector<std::pair<Nat, PolyOrdinal>>& bundles) {
  PolyOrdinal acc;
  for (const auto& [multiplicity, value] : bundles) {
    if (value.degree() >= 4) throw OverflowError("oracle sum supports addenda below w^4 only");
    for (Nat i = 0; i < multiplicity; ++i) acc = poly_add(acc, value);
  }
  return acc;
}

}  // namespace tml::oracle
