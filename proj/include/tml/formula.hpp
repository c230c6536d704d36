#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tml/cardinal.hpp"
#include "tml/error.hpp"

namespace tml {

/// Core connectives. Or, implication, equivalence, falsum and diamond desugar into these.
enum class Connective { Prop, Top, Not, And, Box, BoxBox };

/// Immutable formula tree with shared subterms.
class Formula {
 public:
  static Formula prop(std::string name) { return Formula(Connective::Prop, std::move(name), {}, {}); }
  static Formula top() { return Formula(Connective::Top, {}, {}, {}); }
  static Formula bottom() { return negation(top()); }
  static Formula negation(Formula f) { return Formula(Connective::Not, {}, std::move(f), {}); }
  static Formula conjunction(Formula a, Formula b) { return Formula(Connective::And, {}, std::move(a), std::move(b)); }
  static Formula box(Formula f) { return Formula(Connective::Box, {}, std::move(f), {}); }
  static Formula boxbox(Formula f) { return Formula(Connective::BoxBox, {}, std::move(f), {}); }

  static Formula disjunction(Formula a, Formula b) {
    return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
  }
  static Formula implication(Formula a, Formula b) { return negation(conjunction(std::move(a), negation(std::move(b)))); }
  static Formula equivalence(const Formula& a, const Formula& b) {
    return conjunction(implication(a, b), implication(b, a));
  }
  static Formula diamond(Formula f) { return negation(box(negation(std::move(f)))); }

  Connective connective() const noexcept { return node_->connective; }
  /// Proposition name; empty for other connectives.
  const std::string& name() const noexcept { return node_->name; }
  /// Sole operand of a unary connective, or left operand of a conjunction.
  const Formula& operand() const { return *node_->left; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  /// Node count.
  std::size_t size() const noexcept { return node_->size; }
  /// Modal depth with the duplex box counting twice.
  Natural degree() const noexcept { return node_->degree; }

  /// Identity of the shared node, for memo tables.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.connective != y.connective || x.size != y.size) return false;
    switch (x.connective) {
      case Connective::Prop: return x.name == y.name;
      case Connective::Top: return true;
      case Connective::And: return *x.left == *y.left && *x.right == *y.right;
      default: return *x.left == *y.left;
    }
  }

 private:
  struct Node {
    Connective connective;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t size = 1;
    Natural degree = 0;
  };

  Formula(Connective c, std::string name, std::optional<Formula> left, std::optional<Formula> right) {
    auto node = std::make_shared<Node>();
    node->connective = c;
    node->name = std::move(name);
    if (left) {
      node->size += left->size();
      node->degree = left->degree();
      node->left = std::make_shared<const Formula>(std::move(*left));
    }
    if (right) {
      node->size += right->size();
      node->degree = std::max(node->degree, right->degree());
      node->right = std::make_shared<const Formula>(std::move(*right));
    }
    if (c == Connective::Box) node->degree += 1;
    if (c == Connective::BoxBox) node->degree += 2;
    node_ = std::move(node);
  }

  std::shared_ptr<const Node> node_;
};

inline Natural degree(const Formula& f) { return f.degree(); }

inline void collect_propositions(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::Prop: out.insert(f.name()); break;
    case Connective::Top: break;
    case Connective::And:
      collect_propositions(f.left(), out);
      collect_propositions(f.right(), out);
      break;
    default: collect_propositions(f.operand(), out);
  }
}

inline std::set<std::string> propositions(const Formula& f) {
  std::set<std::string> out;
  collect_propositions(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Concrete syntax
//
//   iff     := implies ("<->" implies)*
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "!" | "[]" | "[2]" | "<>") unary | atom
//   atom    := identifier | "true" | "false" | "(" iff ")"

namespace detail {

inline void print_formula(const Formula& f, std::string& out);

inline void print_operand(const Formula& f, std::string& out) {
  if (f.connective() == Connective::And) {
    out += '(';
    print_formula(f, out);
    out += ')';
  } else {
    print_formula(f, out);
  }
}

inline void print_formula(const Formula& f, std::string& out) {
  switch (f.connective()) {
    case Connective::Prop: out += f.name(); break;
    case Connective::Top: out += "true"; break;
    case Connective::Not:
      out += '~';
      print_operand(f.operand(), out);
      break;
    case Connective::Box:
      out += "[]";
      print_operand(f.operand(), out);
      break;
    case Connective::BoxBox:
      out += "[2]";
      print_operand(f.operand(), out);
      break;
    case Connective::And:
      print_formula(f.left(), out);
      out += " & ";
      print_operand(f.right(), out);
      break;
  }
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = iff();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected input '" + std::string(text_.substr(pos_, 8)) + "'", pos_);
    return f;
  }

 private:
  Formula iff() {
    Formula f = implies();
    while (accept("<->")) f = Formula::equivalence(f, implies());
    return f;
  }

  Formula implies() {
    Formula f = disjunction();
    if (accept("->")) return Formula::implication(std::move(f), implies());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    skip_space();
    if (accept("~") || accept("!")) return Formula::negation(unary());
    if (accept("<>")) return Formula::diamond(unary());
    if (pos_ < text_.size() && text_[pos_] == '[') {
      const std::size_t start = pos_++;
      std::size_t digits_begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view digits = text_.substr(digits_begin, pos_ - digits_begin);
      if (pos_ >= text_.size() || text_[pos_] != ']') throw ParseError("expected ']'", pos_);
      ++pos_;
      if (digits.empty()) return Formula::box(unary());
      if (digits == "2") return Formula::boxbox(unary());
      auto n = parse_natural(digits);
      if (n && *n >= 3) throw ParseError("Box^n for n≥3 out of scope", start);
      throw ParseError("unknown modality '[" + std::string(digits) + "]'", start);
    }
    return atom();
  }

  Formula atom() {
    skip_space();
    if (accept("(")) {
      Formula f = iff();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return f;
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return Formula::top();
      if (word == "false") return Formula::bottom();
      return Formula::prop(std::move(word));
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
    throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Prints core connectives only; parse(to_string(f)) == f.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, out);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

/// Every core formula over `props` (no constants) with at most `max_size` nodes and degree at
/// most `max_degree`, ordered by size. Within a size: duplex boxes, boxes, negations, then
/// conjunctions. Syntactically distinct, not distinct up to equivalence.
inline std::vector<Formula> enumerate_formulas(const std::vector<std::string>& props, Natural max_degree,
                                               std::size_t max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1) {
    std::set<std::string> unique(props.begin(), props.end());
    for (const auto& p : unique) by_size[1].push_back(Formula::prop(p));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    auto& out = by_size[n];
    for (const Formula& f : by_size[n - 1])
      if (f.degree() + 2 <= max_degree) out.push_back(Formula::boxbox(f));
    for (const Formula& f : by_size[n - 1])
      if (f.degree() + 1 <= max_degree) out.push_back(Formula::box(f));
    for (const Formula& f : by_size[n - 1]) out.push_back(Formula::negation(f));
    for (std::size_t left = 1; left + 1 < n; ++left)
      for (const Formula& a : by_size[left])
        for (const Formula& b : by_size[n - 1 - left]) out.push_back(Formula::conjunction(a, b));
  }
  std::vector<Formula> all;
  for (auto& group : by_size) all.insert(all.end(), group.begin(), group.end());
  return all;
}

}  // namespace tml
