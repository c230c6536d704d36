#pragma once

// Symbolic ordinals below aleph_K built from naturals and the regular cardinals
// aleph_0 (= w), aleph_1, ..., aleph_{K-1}.
//
// Storage is a base-w Cantor normal form whose exponents are themselves
// "aleph polynomials" w_{K-1}*e_{K-1} + ... + w_1*e_1 + e_0 with natural e_k.
// A term with exponent vector (e_0, ..., e_j) therefore denotes
// aleph_j^{e_j} * ... * aleph_1^{e_1} * w^{e_0}. The hierarchical view
// (aleph_k^e * coefficient with coefficient below aleph_k) is recovered by
// grouping terms on their top level, see `monomials()`.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tml/cardinal.hpp"
#include "tml/error.hpp"

namespace tml {

/// Exponent of a base-w term, one natural per aleph level, trimmed of high zeros.
class Exponent {
 public:
  Exponent() = default;

  static Exponent at_level(std::size_t level, Natural count) {
    Exponent e;
    if (count != 0) {
      e.by_level_.assign(level + 1, 0);
      e.by_level_[level] = count;
    }
    return e;
  }

  static Exponent from_levels(std::vector<Natural> by_level) {
    Exponent e;
    e.by_level_ = std::move(by_level);
    e.trim();
    return e;
  }

  bool is_zero() const noexcept { return by_level_.empty(); }
  /// Highest level with a nonzero count; only meaningful when nonzero.
  std::size_t top_level() const noexcept { return by_level_.size() - 1; }
  Natural at(std::size_t level) const noexcept { return level < by_level_.size() ? by_level_[level] : 0; }
  std::span<const Natural> levels() const noexcept { return by_level_; }

  /// Same exponent with every level >= `level` cleared.
  Exponent below(std::size_t level) const {
    Exponent e;
    e.by_level_.assign(by_level_.begin(), by_level_.begin() + std::min(level, by_level_.size()));
    e.trim();
    return e;
  }

  /// Ordinal addition of exponents: components of `rhs` absorb every lower component of `lhs`.
  friend Exponent operator+(const Exponent& lhs, const Exponent& rhs) {
    if (rhs.is_zero()) return lhs;
    const std::size_t top = rhs.top_level();
    Exponent e = rhs;
    if (lhs.by_level_.size() > top) {
      e.by_level_.resize(lhs.by_level_.size(), 0);
      for (std::size_t k = top + 1; k < lhs.by_level_.size(); ++k) e.by_level_[k] = lhs.by_level_[k];
      e.by_level_[top] = detail::checked_add(lhs.by_level_[top], rhs.by_level_[top]);
    }
    return e;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.by_level_.size() != b.by_level_.size()) return a.by_level_.size() <=> b.by_level_.size();
    for (std::size_t k = a.by_level_.size(); k-- > 0;)
      if (a.by_level_[k] != b.by_level_[k]) return a.by_level_[k] <=> b.by_level_[k];
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!by_level_.empty() && by_level_.back() == 0) by_level_.pop_back();
  }

  std::vector<Natural> by_level_;
};

/// w^exponent * coefficient, coefficient >= 1.
struct Term {
  Exponent exponent;
  Natural coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;
  explicit Ordinal(Natural n) {
    if (n != 0) terms_.push_back(Term{Exponent{}, n});
  }

  static Ordinal omega() { return aleph(0); }

  static Ordinal aleph(std::size_t level, std::size_t max_level = kDefaultMaxLevel) {
    if (level >= max_level)
      throw LevelError("aleph_" + std::to_string(level) + " exceeds the maximum level " +
                       std::to_string(max_level));
    return single(Exponent::at_level(level, 1), 1);
  }

  static Ordinal from_cardinal(const Cardinal& c) {
    return c.is_finite() ? Ordinal(c.value()) : single(Exponent::at_level(c.index(), 1), 1);
  }

  static Ordinal single(Exponent exponent, Natural coefficient) {
    Ordinal o;
    if (coefficient != 0) o.terms_.push_back(Term{std::move(exponent), coefficient});
    return o;
  }

  /// aleph_level^exponent * coefficient; the coefficient must be nonzero and live strictly below aleph_level.
  static Ordinal monomial(std::size_t level, Natural exponent, const Ordinal& coefficient);

  /// Left-to-right ordinal sum of arbitrary terms, normalized.
  static Ordinal from_terms(std::span<const Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }
  /// The finite part at the right end.
  Natural tail() const noexcept {
    return !terms_.empty() && terms_.back().exponent.is_zero() ? terms_.back().coefficient : 0;
  }
  /// Highest aleph level occurring anywhere, or nullopt for finite ordinals.
  std::optional<std::size_t> top_level() const noexcept {
    if (is_finite()) return std::nullopt;
    return terms_.front().exponent.top_level();
  }

  std::span<const Term> terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
      if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const Term& lead = b.terms_.front();
    Ordinal r;
    auto it = a.terms_.begin();
    for (; it != a.terms_.end() && it->exponent > lead.exponent; ++it) r.terms_.push_back(*it);
    if (it != a.terms_.end() && it->exponent == lead.exponent) {
      r.terms_.push_back(Term{lead.exponent, detail::checked_add(it->coefficient, lead.coefficient)});
    } else {
      r.terms_.push_back(lead);
    }
    r.terms_.insert(r.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
    return r;
  }

  friend Ordinal operator*(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Term& lead = a.terms_.front();
    Ordinal r;
    for (const Term& t : b.terms_) {
      if (!t.exponent.is_zero()) {
        r.terms_.push_back(Term{lead.exponent + t.exponent, t.coefficient});
      } else {
        // a * n: only the leading coefficient of a is scaled.
        r.terms_.push_back(Term{lead.exponent, detail::checked_mul(lead.coefficient, t.coefficient)});
        r.terms_.insert(r.terms_.end(), a.terms_.begin() + 1, a.terms_.end());
      }
    }
    return r;
  }

  Ordinal& operator+=(const Ordinal& o) { return *this = *this + o; }
  Ordinal& operator*=(const Ordinal& o) { return *this = *this * o; }

 private:
  std::vector<Term> terms_;  // strictly descending exponents, nonzero coefficients
};

inline Ordinal Ordinal::from_terms(std::span<const Term> terms) {
  Ordinal r;
  for (const Term& t : terms) r += single(t.exponent, t.coefficient);
  return r;
}

/// Finite power by repeated multiplication; a^0 = 1.
inline Ordinal pow(const Ordinal& base, Natural exponent) {
  Ordinal result(1);
  for (Natural i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Ordinal Ordinal::monomial(std::size_t level, Natural exponent, const Ordinal& coefficient) {
  if (exponent == 0) throw std::invalid_argument("monomial exponent must be at least 1");
  if (coefficient.is_zero()) throw std::invalid_argument("monomial coefficient must be nonzero");
  if (auto top = coefficient.top_level(); top && *top >= level)
    throw std::invalid_argument("monomial coefficient must lie below its own level");
  return pow(aleph(level), exponent) * coefficient;
}

/// aleph_level^exponent * coefficient with every level inside `coefficient` below `level`.
struct Monomial {
  std::size_t level = 0;
  Natural exponent = 1;
  Ordinal coefficient;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Hierarchical view: descending monomials, followed by `tail()`.
inline std::vector<Monomial> monomials(const Ordinal& a) {
  std::vector<Monomial> out;
  for (const Term& t : a.terms()) {
    if (t.exponent.is_zero()) break;
    const std::size_t level = t.exponent.top_level();
    const Natural e = t.exponent.at(level);
    Ordinal piece = Ordinal::single(t.exponent.below(level), t.coefficient);
    if (!out.empty() && out.back().level == level && out.back().exponent == e) {
      out.back().coefficient += piece;
    } else {
      out.push_back(Monomial{level, e, std::move(piece)});
    }
  }
  return out;
}

/// Cardinality of the order type: max level present, or the finite value.
inline Cardinal cardinality(const Ordinal& a) {
  if (auto top = a.top_level()) return Cardinal::aleph(*top, *top + 1);
  return Cardinal::finite(a.tail());
}

/// alpha = aleph_level^log * coefficient + remainder with 1 <= coefficient < aleph_level and
/// remainder < aleph_level^log.
struct Decomposition {
  Natural log = 0;
  Ordinal coefficient;
  Ordinal remainder;
};

inline Decomposition divmod(const Ordinal& alpha, std::size_t level) {
  if (alpha.is_zero()) throw ZeroArgument("logarithm of zero is undefined");
  if (auto top = alpha.top_level(); top && *top > level)
    throw UnsupportedLogarithm("log base aleph_" + std::to_string(level) + " of an ordinal reaching aleph_" +
                               std::to_string(*top) + " has a transfinite exponent");
  Decomposition d;
  d.log = alpha.leading().exponent.at(level);
  auto terms = alpha.terms();
  std::size_t i = 0;
  for (; i < terms.size() && terms[i].exponent.at(level) == d.log; ++i)
    d.coefficient += Ordinal::single(terms[i].exponent.below(level), terms[i].coefficient);
  for (; i < terms.size(); ++i) d.remainder += Ordinal::single(terms[i].exponent, terms[i].coefficient);
  return d;
}

inline Natural log(const Ordinal& alpha, std::size_t level) { return divmod(alpha, level).log; }

/// Same decomposition for naturals with a natural base >= 2.
struct FiniteDecomposition {
  Natural log = 0;
  Natural coefficient = 0;
  Natural remainder = 0;
};

inline FiniteDecomposition divmod(Natural alpha, Natural base) {
  if (alpha == 0) throw ZeroArgument("logarithm of zero is undefined");
  if (base < 2) throw std::invalid_argument("logarithm base must exceed 1");
  FiniteDecomposition d;
  Natural power = 1;
  while (alpha / power >= base) {
    power *= base;
    ++d.log;
  }
  d.coefficient = alpha / power;
  d.remainder = alpha % power;
  return d;
}

/// log_{aleph_level} of a nonzero cardinal as an ordinal: 0 below aleph_level, 1 at it, and
/// aleph_j itself for j > level (where the logarithm leaves the finite exponents).
inline Ordinal log_of_cardinal(const Cardinal& c, std::size_t level) {
  if (c.is_zero()) throw ZeroArgument("logarithm of zero is undefined");
  if (c.is_finite() || c.index() < level) return Ordinal{};
  if (c.index() == level) return Ordinal(1);
  return Ordinal::from_cardinal(c);
}

enum class ClassOrder { Less, Same, Greater };

/// Order of the ~_level classes of beta and gamma, where beta ~ gamma iff
/// beta < gamma*aleph_level and gamma < beta*aleph_level, and 0 forms its own lowest class.
inline ClassOrder class_compare(const Ordinal& beta, const Ordinal& gamma, std::size_t level) {
  if (beta.is_zero() || gamma.is_zero()) {
    if (beta.is_zero() && gamma.is_zero()) return ClassOrder::Same;
    return beta.is_zero() ? ClassOrder::Less : ClassOrder::Greater;
  }
  const Ordinal base = Ordinal::single(Exponent::at_level(level, 1), 1);
  if (beta < gamma * base && gamma < beta * base) return ClassOrder::Same;
  return beta < gamma ? ClassOrder::Less : ClassOrder::Greater;
}

/// `multiplicity` consecutive addenda all equal to `value`.
struct Bundle {
  Bundle(Cardinal multiplicity_, Ordinal value_) : multiplicity(multiplicity_), value(std::move(value_)) {
    if (multiplicity.is_zero()) throw std::invalid_argument("bundle multiplicity must be nonzero");
  }

  Cardinal multiplicity;
  Ordinal value;
};

/// Ordinal sum of the expanded addendum family, bundles in the given order.
inline Ordinal transfinite_sum(std::span<const Bundle> bundles) {
  Ordinal acc;
  for (const Bundle& b : bundles) acc += b.value * Ordinal::from_cardinal(b.multiplicity);
  return acc;
}

// ---------------------------------------------------------------------------
// Text form: `aleph_1^2*3 + aleph_0*5 + 7`, with `w` for aleph_0.

inline std::string to_string(const Ordinal& a);

namespace detail {

inline bool prints_as_single_factor_chain(const Ordinal& a) {
  return a.is_finite() || (a.tail() == 0 && monomials(a).size() == 1);
}

inline std::string monomial_to_string(const Monomial& m) {
  std::string s = m.level == 0 ? "w" : "aleph_" + std::to_string(m.level);
  if (m.exponent > 1) s += "^" + std::to_string(m.exponent);
  if (m.coefficient != Ordinal(1)) {
    const bool bare = prints_as_single_factor_chain(m.coefficient);
    s += bare ? "*" + to_string(m.coefficient) : "*(" + to_string(m.coefficient) + ")";
  }
  return s;
}

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t max_level) : text_(text), max_level_(max_level) {}

  Ordinal parse() {
    Ordinal value = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character in ordinal", pos_);
    return value;
  }

 private:
  Ordinal sum() {
    Ordinal acc = product();
    while (accept('+')) acc += product();
    return acc;
  }

  Ordinal product() {
    Ordinal acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Ordinal factor() {
    Ordinal base = primary();
    if (accept('^')) return pow(base, natural());
    return base;
  }

  Ordinal primary() {
    skip_space();
    if (accept('(')) {
      Ordinal inner = sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (text_.substr(pos_).starts_with("aleph_")) {
      pos_ += 6;
      const std::size_t at = pos_;
      Natural level = natural();
      if (level >= max_level_)
        throw LevelError("aleph_" + std::to_string(level) + " exceeds the maximum level " +
                         std::to_string(max_level_) + " (position " + std::to_string(at) + ")");
      return Ordinal::aleph(static_cast<std::size_t>(level), max_level_);
    }
    if (pos_ < text_.size() && text_[pos_] == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal(natural());
  }

  Natural natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto value = parse_natural(text_.substr(start, pos_ - start));
    if (!value) throw ParseError("expected a natural number", start);
    return *value;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t max_level_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const Monomial& m : monomials(a)) {
    if (!s.empty()) s += " + ";
    s += detail::monomial_to_string(m);
  }
  if (a.tail() != 0) {
    if (!s.empty()) s += " + ";
    s += std::to_string(a.tail());
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

/// Parses sums of products of powers over naturals, `w`, `aleph_k` and parentheses.
inline Ordinal parse_ordinal(std::string_view text, std::size_t max_level = kDefaultMaxLevel) {
  return detail::OrdinalParser(text, max_level).parse();
}

}  // namespace tml
