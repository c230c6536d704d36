#include <gtest/gtest.h>

#include "tml/laws.hpp"
#include "tml/oracle.hpp"
#include "tml/ordinal.hpp"

using namespace tml;

namespace {

Ordinal ord(const char* text) { return parse_ordinal(text); }
Ordinal w() { return Ordinal::omega(); }
Ordinal al(std::size_t k) { return Ordinal::aleph(k); }

}  // namespace

TEST(Cardinal, MaxRule) {
  EXPECT_EQ(Cardinal::aleph(0) + Cardinal::aleph(1), Cardinal::aleph(1));
  EXPECT_EQ(Cardinal::finite(3) * Cardinal::aleph(2), Cardinal::aleph(2));
  EXPECT_EQ(Cardinal::finite(6) * Cardinal::finite(7), Cardinal::finite(42));
  EXPECT_EQ(Cardinal::finite(0) * Cardinal::aleph(3), Cardinal::finite(0));
  EXPECT_EQ(Cardinal::aleph(1) + Cardinal::finite(0), Cardinal::aleph(1));
  EXPECT_LT(Cardinal::finite(1000000), Cardinal::aleph(0));
  EXPECT_LT(Cardinal::aleph(0), Cardinal::aleph(1));
}

TEST(Cardinal, LevelBound) {
  EXPECT_THROW(Cardinal::aleph(8), LevelError);
  EXPECT_NO_THROW(Cardinal::aleph(7));
  EXPECT_NO_THROW(Cardinal::aleph(9, 10));
  EXPECT_THROW(parse_cardinal("aleph_9"), LevelError);
  EXPECT_EQ(parse_cardinal("aleph_3"), Cardinal::aleph(3));
  EXPECT_EQ(parse_cardinal("12"), Cardinal::finite(12));
  EXPECT_THROW(parse_cardinal("twelve"), ParseError);
}

TEST(Cardinal, OverflowIsAnError) {
  const Cardinal big = Cardinal::finite(~Natural{0});
  EXPECT_THROW(big + Cardinal::finite(1), OverflowError);
  EXPECT_THROW(big * Cardinal::finite(2), OverflowError);
}

TEST(Ordinal, Compare) {
  EXPECT_EQ(Ordinal() <=> Ordinal(), std::strong_ordering::equal);
  EXPECT_LT(w(), al(1));
  EXPECT_GT(ord("w*3 + 5"), ord("w*3 + 4"));
  EXPECT_LT(Ordinal(1000), w());
  EXPECT_LT(ord("w^5*9"), al(1));
  EXPECT_LT(ord("aleph_1*w"), ord("aleph_1*(w+1)"));
}

TEST(Ordinal, Addition) {
  EXPECT_EQ(Ordinal(1) + w(), w());
  EXPECT_EQ(Ordinal(5) + al(2), al(2));
  EXPECT_EQ(ord("w*3 + 5") + ord("w*2"), ord("w*5"));
  EXPECT_EQ(w() + Ordinal(1), ord("w + 1"));
  EXPECT_EQ(ord("aleph_1*w + 4") + ord("aleph_1"), ord("aleph_1*(w+1)"));
  EXPECT_EQ(ord("w^2") + al(1), al(1));
}

TEST(Ordinal, Multiplication) {
  EXPECT_EQ(Ordinal(7) * al(1), al(1));
  EXPECT_EQ(ord("w*2 + 3") * Ordinal(2), ord("w*4 + 3"));
  const Ordinal irreducible = al(1) * w();
  const auto ms = monomials(irreducible);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].level, 1u);
  EXPECT_EQ(ms[0].exponent, 1u);
  EXPECT_EQ(ms[0].coefficient, w());
  EXPECT_TRUE(irreducible.tail() == 0);
  EXPECT_EQ(Ordinal(2) * w(), w());
  EXPECT_EQ(w() * Ordinal(2), ord("w*2"));
  EXPECT_EQ(ord("w + 1") * Ordinal(0), Ordinal());
}

TEST(Ordinal, Power) {
  const auto ms = monomials(pow(w(), 2));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].level, 0u);
  EXPECT_EQ(ms[0].exponent, 2u);
  EXPECT_EQ(ms[0].coefficient, Ordinal(1));
  EXPECT_EQ(pow(ord("w + 1"), 2), ord("w^2 + w + 1"));
  EXPECT_EQ(pow(ord("aleph_2*3 + w"), 1), ord("aleph_2*3 + w"));
  EXPECT_EQ(pow(al(3), 0), Ordinal(1));
}

TEST(Ordinal, MonomialValidation) {
  EXPECT_THROW(Ordinal::monomial(1, 1, Ordinal()), std::invalid_argument);
  EXPECT_THROW(Ordinal::monomial(1, 1, al(1)), std::invalid_argument);
  EXPECT_THROW(Ordinal::monomial(0, 1, w()), std::invalid_argument);
  EXPECT_EQ(Ordinal::monomial(2, 1, ord("aleph_1 + 3")), ord("aleph_2*(aleph_1 + 3)"));
}

TEST(Ordinal, Divmod) {
  auto d = divmod(ord("w^2*3 + 5"), 0);
  EXPECT_EQ(d.log, 2u);
  EXPECT_EQ(d.coefficient, Ordinal(3));
  EXPECT_EQ(d.remainder, Ordinal(5));

  d = divmod(al(1), 1);
  EXPECT_EQ(d.log, 1u);
  EXPECT_EQ(d.coefficient, Ordinal(1));
  EXPECT_TRUE(d.remainder.is_zero());

  d = divmod(Ordinal(4), 1);
  EXPECT_EQ(d.log, 0u);
  EXPECT_EQ(d.coefficient, Ordinal(4));
  EXPECT_TRUE(d.remainder.is_zero());

  const Ordinal a = ord("aleph_1*4 + w");
  d = divmod(a, 1);
  EXPECT_EQ(d.log, 1u);
  EXPECT_EQ(pow(al(1), d.log) * d.coefficient + d.remainder, a);
  EXPECT_LT(d.coefficient, al(1));
  EXPECT_LT(d.remainder, al(1));
}

TEST(Ordinal, DivmodErrors) {
  EXPECT_THROW(divmod(Ordinal(), 0), ZeroArgument);
  EXPECT_THROW(divmod(al(2), 1), UnsupportedLogarithm);
  EXPECT_THROW(log(ord("w + aleph_1"), 0), UnsupportedLogarithm);
}

TEST(Ordinal, Logarithm) {
  EXPECT_EQ(log(pow(w(), 2), 0), 2u);
  EXPECT_EQ(log(ord("aleph_1*4 + w"), 1), 1u);
  EXPECT_EQ(log(Ordinal(17), 2), 0u);
  EXPECT_EQ(log(ord("aleph_1^2*w + aleph_1"), 1), 2u);
}

TEST(Ordinal, FiniteBaseDivmod) {
  const auto d = divmod(Natural{100}, Natural{3});
  EXPECT_EQ(d.log, 4u);  // 81 * 1 + 19
  EXPECT_EQ(d.coefficient, 1u);
  EXPECT_EQ(d.remainder, 19u);
}

TEST(Ordinal, ClassCompare) {
  EXPECT_EQ(class_compare(w(), ord("w*5"), 0), ClassOrder::Same);
  EXPECT_EQ(class_compare(Ordinal(3), w(), 0), ClassOrder::Less);
  EXPECT_EQ(class_compare(Ordinal(), Ordinal(1), 0), ClassOrder::Less);
  EXPECT_EQ(class_compare(Ordinal(), Ordinal(), 0), ClassOrder::Same);
  EXPECT_EQ(class_compare(ord("w^2"), ord("w*7 + 1"), 0), ClassOrder::Greater);
  EXPECT_EQ(class_compare(ord("aleph_1*w"), al(1), 1), ClassOrder::Same);
  EXPECT_EQ(class_compare(Ordinal(3), Ordinal(9), 0), ClassOrder::Same);
}

TEST(Ordinal, TransfiniteSum) {
  std::vector<Bundle> square{Bundle(Cardinal::aleph(0), w())};
  EXPECT_EQ(transfinite_sum(square), pow(w(), 2));
  EXPECT_TRUE(transfinite_sum(std::vector<Bundle>{}).is_zero());
  std::vector<Bundle> mixed{Bundle(Cardinal::finite(3), w()), Bundle(Cardinal::finite(1), Ordinal(5))};
  EXPECT_EQ(transfinite_sum(mixed), ord("w*3 + 5"));
  EXPECT_THROW(Bundle(Cardinal::finite(0), w()), std::invalid_argument);
}

TEST(Ordinal, Cardinality) {
  EXPECT_EQ(cardinality(ord("aleph_1*w + 4")), Cardinal::aleph(1));
  EXPECT_EQ(cardinality(Ordinal(42)), Cardinal::finite(42));
  EXPECT_EQ(cardinality(pow(w(), 2)), Cardinal::aleph(0));
}

TEST(Ordinal, LogOfCardinal) {
  EXPECT_TRUE(log_of_cardinal(Cardinal::finite(5), 0).is_zero());
  EXPECT_EQ(log_of_cardinal(Cardinal::aleph(0), 0), Ordinal(1));
  EXPECT_TRUE(log_of_cardinal(Cardinal::aleph(0), 1).is_zero());
  EXPECT_EQ(log_of_cardinal(Cardinal::aleph(2), 1), al(2));
  EXPECT_THROW(log_of_cardinal(Cardinal::finite(0), 0), ZeroArgument);
}

TEST(Ordinal, TextRoundTrip) {
  for (const char* text : {"0", "7", "w", "aleph_1^2*3 + w*5 + 7", "aleph_2*aleph_1*(w + 3)", "w^3*2 + w + 1"}) {
    const Ordinal a = ord(text);
    EXPECT_EQ(ord(to_string(a).c_str()), a) << text;
  }
  EXPECT_EQ(to_string(ord("(w+1)^2")), "w^2 + w + 1");
  EXPECT_EQ(to_string(ord("aleph_1*w + 4")), "aleph_1*w + 4");
  EXPECT_THROW(ord("w +"), ParseError);
  EXPECT_THROW(ord("aleph_8"), LevelError);
}

TEST(Oracle, SpecExamples) {
  using namespace tml::oracle;
  const PolyOrdinal w2_3{{{1, 2}, {0, 3}}};
  EXPECT_EQ(poly_add(w2_3, PolyOrdinal::power(1)), PolyOrdinal::power(1, 3));
  EXPECT_EQ(poly_mul(PolyOrdinal{{{1, 1}, {0, 1}}}, PolyOrdinal::natural(2)), (PolyOrdinal{{{1, 2}, {0, 1}}}));
  const auto d = poly_divmod(PolyOrdinal{{{2, 3}, {0, 5}}});
  EXPECT_EQ(d.log, 2u);
  EXPECT_EQ(d.coefficient, PolyOrdinal::natural(3));
  EXPECT_EQ(d.remainder, PolyOrdinal::natural(5));
  EXPECT_EQ(sum_order_type({{2, PolyOrdinal::power(1)}}), PolyOrdinal::power(1, 2));
  EXPECT_EQ(sum_order_type({{1, PolyOrdinal{{{1, 1}, {0, 1}}}}, {1, PolyOrdinal::power(1)}}), PolyOrdinal::power(1, 2));
  EXPECT_EQ(sum_order_type({{3, PolyOrdinal::natural(2)}}), PolyOrdinal::natural(6));
  EXPECT_THROW(poly_mul(PolyOrdinal::power(40), PolyOrdinal::power(40)), OverflowError);
}

TEST(Oracle, SumOrderTypeMatchesTransfiniteSum) {
  laws::Generator gen(11);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::pair<oracle::Nat, oracle::PolyOrdinal>> raw;
    std::vector<Bundle> bundles;
    const auto n = gen.uniform(0, 4);
    for (std::uint64_t j = 0; j < n; ++j) {
      const Ordinal v = gen.ordinal(0, 3, 3, 3);
      const auto mult = gen.uniform(1, 3);
      raw.emplace_back(mult, *laws::to_poly(v));
      bundles.emplace_back(Cardinal::finite(mult), v);
    }
    EXPECT_EQ(laws::from_poly(oracle::sum_order_type(raw)), transfinite_sum(bundles));
  }
}

TEST(Laws, OracleAgreementSmallRun) {
  for (const auto& r : laws::oracle_agreement(3, 500)) EXPECT_TRUE(r.ok()) << laws::format(r);
}

TEST(Laws, OrdinalLawsSmallRun) {
  for (const auto& r : laws::ordinal_laws(3, 200)) EXPECT_TRUE(r.ok()) << laws::format(r);
}
