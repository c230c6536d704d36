#include <gtest/gtest.h>

#include "support.hpp"
#include "tml/catalog.hpp"
#include "tml/model.hpp"

using namespace tml;

namespace {

std::string error_of(const std::string& text, std::size_t max_level = kDefaultMaxLevel) {
  try {
    load_model(text, max_level);
  } catch (const ModelError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Model, LoadSimDocument) {
  const std::string text = R"({
    "props": ["p"],
    "worlds": [{"id": "s", "props": []}, {"id": "t_neg", "props": []}, {"id": "t_pos", "props": ["p"]}],
    "edges": [{"from": "s", "to": "t_neg", "mult": "1"}, {"from": "s", "to": "t_pos", "mult": "aleph_0"}],
    "root": "s"
  })";
  const KripkeModel m = load_model(text);
  EXPECT_EQ(m.world_count(), 3u);
  ASSERT_EQ(m.edges().size(), 2u);
  EXPECT_EQ(m.edge(0).multiplicity, Cardinal::finite(1));
  EXPECT_EQ(m.edge(1).multiplicity, Cardinal::aleph(0));
  EXPECT_EQ(m.world(m.edge(1).to).id, "t_pos");
  EXPECT_EQ(m.designated(), m.index_of("s"));
  EXPECT_EQ(m, catalog::ex_sim());
}

TEST(Model, LoadErrors) {
  EXPECT_NE(error_of(R"({"props": [], "worlds": []})").find("at least one world"), std::string::npos);
  EXPECT_NE(error_of(R"({"props": [], "worlds": [{"id": "s"}], "edges": [{"from": "s", "to": "x"}]})")
                .find("edges[0].to: unknown world id 'x'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"props": [], "worlds": [{"id": "s"}], "edges": [{"from": "s", "to": "s", "mult": "0"}]})")
                .find("edges[0].mult"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"props": [], "worlds": [{"id": "s"}], "edges": [{"from": "s", "to": "s", "mult": "aleph_9"}]})")
                .find("edges[0].mult"),
            std::string::npos);
  EXPECT_EQ(error_of(R"({"props": [], "worlds": [{"id": "s"}], "edges": [{"from": "s", "to": "s", "mult": "aleph_9"}]})",
                     10),
            "");
  EXPECT_NE(error_of(R"({"props": [], "worlds": [{"id": "s"}, {"id": "s"}]})").find("duplicate world id"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"props": ["p"], "worlds": [{"id": "s", "props": ["q"]}]})").find("undeclared proposition 'q'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"worlds": [{"id": "s"}]})").find("missing field 'props'"), std::string::npos);
  EXPECT_NE(error_of("{not json").find("malformed document"), std::string::npos);
  EXPECT_NE(error_of(R"({"props": [], "worlds": [{"id": "s"}], "root": "x"})").find("root"), std::string::npos);
}

TEST(Model, DuplicateBundlesStaySeparate) {
  const KripkeModel m = load_model(R"({"props": [], "worlds": [{"id": "s"}, {"id": "t"}],
    "edges": [{"from": "s", "to": "t", "mult": "2"}, {"from": "s", "to": "t", "mult": "2"}]})");
  EXPECT_EQ(m.edges().size(), 2u);
  EXPECT_EQ(successor_cardinality(m, 0), Cardinal::finite(4));
}

TEST(Model, SuccessorCardinalities) {
  const KripkeModel sim = catalog::ex_sim();
  EXPECT_EQ(successor_cardinality(sim, sim.index_of("s")), Cardinal::aleph(0));
  EXPECT_EQ(successor_cardinality(sim, sim.index_of("t_pos")), Cardinal::finite(0));
  EXPECT_EQ(live_successor_cardinality(sim, sim.index_of("s")), Cardinal::finite(0));

  const KripkeModel two = catalog::ex_2to11();
  EXPECT_EQ(live_successor_cardinality(two, two.index_of("s")), Cardinal::finite(2));

  const KripkeModel inf = catalog::ex_11to2();
  EXPECT_EQ(live_successor_cardinality(inf, inf.index_of("s")), Cardinal::aleph(0));

  const KripkeModel finite = ModelBuilder().world("s").world("a").world("b").edge("s", "a", Cardinal::finite(3))
                                 .edge("s", "b", Cardinal::finite(4)).build();
  EXPECT_EQ(successor_cardinality(finite, 0), Cardinal::finite(7));
}

TEST(Model, LiveNeverExceedsAll) {
  laws::Generator gen(5);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = sample::random_model(gen);
    for (WorldIndex w = 0; w < m.world_count(); ++w)
      EXPECT_LE(live_successor_cardinality(m, w), successor_cardinality(m, w));
  }
}

TEST(Model, PrintLoadRoundTrip) {
  laws::Generator gen(6);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel m = sample::random_model(gen);
    EXPECT_EQ(load_model(dump_model(m)), m);
  }
  for (const char* name : {"ex_fin", "ex_sim", "ex_inf", "ex_flaw", "ex_2to11", "ex_det:2:1"}) {
    const KripkeModel m = *catalog::lookup(name);
    EXPECT_EQ(load_model(dump_model(m)), m) << name;
  }
}

TEST(Model, NumericMultiplicityAccepted) {
  const KripkeModel m =
      load_model(R"({"props": [], "worlds": [{"id": "s"}, {"id": "t"}], "edges": [{"from": "s", "to": "t", "mult": 5}]})");
  EXPECT_EQ(m.edge(0).multiplicity, Cardinal::finite(5));
  EXPECT_NE(dump_model(m).find("\"mult\": \"5\""), std::string::npos);
}

TEST(Model, BuilderErrors) {
  EXPECT_THROW(ModelBuilder().world("s").edge("s", "t"), ModelError);
  EXPECT_THROW(ModelBuilder().build(), ModelError);
  EXPECT_THROW(ModelBuilder().world("s", {"p"}).build(), ModelError);
}

TEST(Catalog, Names) {
  for (const auto& name : catalog::names()) {
    const std::string concrete = name == "ex_det:I:J" ? "ex_det:0:1" : name;
    EXPECT_TRUE(catalog::lookup(concrete).has_value()) << name;
  }
  EXPECT_FALSE(catalog::lookup("ex_unknown").has_value());
  EXPECT_THROW(catalog::lookup("ex_det:1"), ModelError);
  EXPECT_THROW(catalog::lookup("ex_det:9:0"), LevelError);
  EXPECT_EQ(catalog::ex_det(1, 2, true).world_count(), 7u);
}
