#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "alias_calc/relation.hpp"
#include "generators.hpp"
#include "test_util.hpp"

namespace aliasing {
namespace {

using testing::P;
using testing::R;
using testing::show;

TEST(AliasRelation, AddIsSymmetricAndIrreflexive) {
  AliasRelation r;
  EXPECT_TRUE(r.add(P("x"), P("y")));
  EXPECT_FALSE(r.add(P("y"), P("x")));
  EXPECT_FALSE(r.add(P("z"), P("z")));
  EXPECT_TRUE(r.contains(P("y"), P("x")));
  EXPECT_EQ(r.size(), 1u);
  EXPECT_TRUE(r.remove(P("y"), P("x")));
  EXPECT_TRUE(r.empty());
  EXPECT_TRUE(r.adjacency().empty());
}

TEST(AliasRelation, OverlineOfThreeElements) {
  AliasRelation r = overline(PathSet{P("x"), P("y"), P("z")});
  EXPECT_EQ(r.size(), 3u);
  EXPECT_EQ(show(r), "{x, y, z}");
}

TEST(AliasRelation, OverlineOfPairs) {
  AliasRelation r = overline({{P("x"), P("y")}, {P("y"), P("z")}, {P("u"), P("u")}});
  EXPECT_EQ(show(r), "{x, y}, {y, z}");
}

TEST(AliasRelation, RestrictRemovesVariablesAndPathsHeadedByThem) {
  AliasRelation a = R("{x, y}, {x.a, z}, {y.x, w}, {u, v}");
  AliasRelation r = restrict(a, {"x"});
  EXPECT_EQ(show(r), "{u, v}, {w, y.x}");
}

TEST(AliasRelation, RestrictKeepsNegatedHeads) {
  AliasRelation a = R("{x'.l, c}");
  EXPECT_EQ(restrict(a, {"x"}), a);
}

TEST(Quotient, VariableQuotientIsItsNeighbourhood) {
  AliasRelation a = R("{x, y}, {y, z}, {u, v}");
  EXPECT_EQ(quotient(a, P("y"), 3), (PathSet{P("x"), P("y"), P("z")}));
  EXPECT_EQ(quotient(a, P("w"), 3), (PathSet{P("w")}));
}

TEST(Quotient, DotPathsCombineComponentAliases) {
  AliasRelation a = R("{x, y}, {a, b}");
  EXPECT_EQ(quotient(a, P("x.a"), 3),
            (PathSet{P("x.a"), P("x.b"), P("y.a"), P("y.b")}));
}

TEST(Quotient, RespectsDotBound) {
  AliasRelation a = R("{x, y.c}");
  EXPECT_EQ(quotient(a, P("x.a"), 1), (PathSet{P("x.a")}));
  EXPECT_EQ(quotient(a, P("x.a"), 2), (PathSet{P("x.a"), P("y.c.a")}));
}

TEST(Quotient, NormalizesThroughNegation) {
  AliasRelation a = R("{f, x'.l}");
  EXPECT_TRUE(quotient(a, P("x.f"), 3).contains(P("l")));
}

TEST(Subst, FirstExample) {
  AliasRelation a = R("{b, c, x}, {f, g, x}, {y, z}");
  EXPECT_EQ(show(subst(a, "z", P("f"), 3)), "{b, c, x}, {f, g, x, z}");
}

TEST(Subst, AlwaysAliasesTargetToVariableSource) {
  EXPECT_EQ(show(subst(AliasRelation{}, "x", P("y"), 3)), "{x, y}");
}

TEST(Subst, SelfAssignmentIsIdentity) {
  AliasRelation a = R("{x, y}, {x, z.a}, {x.b, u}, {v, w}");
  EXPECT_EQ(subst(a, "x", P("x"), 3), a);
}

TEST(Subst, DotSourceDoesNotAliasTargetToItself) {
  AliasRelation r = subst(AliasRelation{}, "x", P("x.a"), 3);
  EXPECT_TRUE(r.empty());
}

TEST(Subst, DotSourceThroughPreviousAliases) {
  AliasRelation r = subst(R("{x, y}"), "x", P("x.a"), 3);
  EXPECT_EQ(show(r), "{x, y.a}");
}

TEST(Subst, ListFoldsLeftToRight) {
  AliasRelation r = subst_list(AliasRelation{}, {"b", "c"},
                               {P("x'.Current"), P("x'.f")}, 3);
  EXPECT_EQ(show(r), "{b, x'}, {b.f, c}, {c, x'.f}");
  EXPECT_THROW(subst_list(AliasRelation{}, {"b"}, {}, 3), std::invalid_argument);
}

TEST(Subst, ListIsSequentialNotSimultaneous) {
  AliasRelation r = subst_list(AliasRelation{}, {"x", "y"}, {P("y"), P("x")}, 3);
  EXPECT_EQ(show(r), "{x, y}");
}

TEST(CutPair, RemovesOnlyThatPair) {
  AliasRelation a = R("{x, u, z}");
  EXPECT_EQ(show(cut_pair(a, P("x"), P("u"))), "{u, z}, {x, z}");
}

TEST(Combine, SetOperations) {
  AliasRelation a = R("{x, y}, {u, v}");
  AliasRelation b = R("{x, y}, {p, q}");
  EXPECT_EQ(show(combine(a, b, SetOp::Union)), "{p, q}, {u, v}, {x, y}");
  EXPECT_EQ(show(combine(a, b, SetOp::Intersection)), "{x, y}");
  EXPECT_EQ(show(combine(a, b, SetOp::Difference)), "{u, v}");
}

TEST(Canonical, UnionFormsOfTheSameRelationAgree) {
  EXPECT_EQ(canonical(R("{x, y}, {x, u, z}")),
            canonical(R("{x, y}, {x, u}, {x, u, z}")));
  EXPECT_EQ(show(R("{x, y}, {x, u}, {x, u, z}")), "{u, x, z}, {x, y}");
}

TEST(Canonical, EmptyRelation) {
  EXPECT_EQ(show(AliasRelation{}), "{}");
  EXPECT_TRUE(canonical(AliasRelation{}).cliques.empty());
}

TEST(Canonical, CliquesAreSortedTextually) {
  AliasRelation a = R("{x.b, Current, x.d}, {f, x.a}");
  EXPECT_EQ(show(a), "{Current, x.b, x.d}, {f, x.a}");
}

// Brute force: every subset of the vertex set that is a clique and is not
// contained in a larger clique.
std::set<std::set<PathExpr>> brute_force_cliques(const AliasRelation& a) {
  const PathSet elements = a.elements();
  std::vector<PathExpr> v(elements.begin(), elements.end());
  std::vector<std::set<PathExpr>> cliques;
  for (std::uint32_t mask = 1; mask < (1u << v.size()); ++mask) {
    std::set<PathExpr> s;
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      for (const auto& e : s) ok = ok && a.contains(e, v[i]);
      s.insert(v[i]);
    }
    if (ok && s.size() >= 2) cliques.push_back(std::move(s));
  }
  std::set<std::set<PathExpr>> maximal;
  for (const auto& c : cliques) {
    bool contained = false;
    for (const auto& d : cliques) {
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.insert(c);
  }
  return maximal;
}

TEST(Canonical, MatchesBruteForceMaximalCliques) {
  testing::Rng rng(testing::kDefaultSeed);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  const std::vector<PathExpr> pool{P("a"),   P("b"),   P("c"), P("x.a"),
                                   P("x.b"), P("Current")};
  for (int round = 0; round < 200; ++round) {
    std::vector<PathExpr> universe(pool.begin(), pool.begin() + size(rng));
    AliasRelation a = testing::random_relation(rng, universe, density(rng));
    CanonicalForm form = canonical(a);
    std::set<std::set<PathExpr>> got;
    for (const auto& c : form.cliques) got.emplace(c.begin(), c.end());
    ASSERT_EQ(got.size(), form.cliques.size()) << show(a);
    EXPECT_EQ(got, brute_force_cliques(a)) << show(a);
    EXPECT_EQ(form.to_relation(), a);
    EXPECT_EQ(canonical(form.to_relation()), form);
  }
}

TEST(Assertion, ListsAbsentPairs) {
  AliasRelation a = R("{x, y}");
  PathSet universe{P("x"), P("y"), P("z")};
  EXPECT_EQ(to_assertion(a, universe), "x ≠ z and y ≠ z");
  EXPECT_EQ(to_assertion(overline(universe), universe), "true");
}

TEST(Assertion, IsAntitoneInTheRelation) {
  PathSet universe{P("a"), P("b"), P("c"), P("d")};
  AliasRelation small = R("{a, b}");
  AliasRelation big = R("{a, b, c}");
  // Every clause of big⁻ also appears in small⁻.
  std::string strong = to_assertion(small, universe);
  std::string weak = to_assertion(big, universe);
  EXPECT_NE(strong.find("a ≠ c"), std::string::npos);
  EXPECT_EQ(weak.find("a ≠ c"), std::string::npos);
  EXPECT_NE(strong.find("c ≠ d"), std::string::npos);
  EXPECT_NE(weak.find("c ≠ d"), std::string::npos);
}

TEST(ParseRelation, AcceptsLiterals) {
  EXPECT_TRUE(R("").empty());
  EXPECT_TRUE(R("{}").empty());
  EXPECT_EQ(show(R("{b,c},{f,g}")), "{b, c}, {f, g}");
  EXPECT_EQ(show(R(" { x.a , Current } ")), "{Current, x.a}");
}

TEST(ParseRelation, RejectsMalformedLiterals) {
  EXPECT_THROW(R("{a}"), RelationSyntaxError);
  EXPECT_THROW(R("{a,a}"), RelationSyntaxError);
  EXPECT_THROW(R("{a,b"), RelationSyntaxError);
  EXPECT_THROW(R("{a,b},"), RelationSyntaxError);
  EXPECT_THROW(R("{a,b} {c,d}"), RelationSyntaxError);
  EXPECT_THROW(R("{a,1b}"), RelationSyntaxError);
  try {
    R("{a,b}, x");
    FAIL();
  } catch (const RelationSyntaxError& e) {
    EXPECT_EQ(e.column(), 8u);
  }
}

TEST(ParseRelation, RoundTripsThroughCanonicalText) {
  testing::Rng rng(7);
  const auto universe = testing::as_paths(testing::variable_names(6));
  for (int i = 0; i < 100; ++i) {
    AliasRelation a = testing::random_relation(rng, universe, 0.4);
    EXPECT_EQ(R(show(a)), a);
  }
}

TEST(Aliased, AgreesWithQuotientOnPlainPaths) {
  testing::Rng rng(11);
  std::vector<PathExpr> universe;
  for (const char* v : {"x", "y", "a", "b"}) universe.push_back(P(v));
  for (const char* v : {"x.a", "y.b", "x.b", "a.b"}) universe.push_back(P(v));
  std::vector<PathExpr> probes = universe;
  for (const char* v : {"y.a", "a.a", "x.a.b", "y.b.b", "b.a"}) probes.push_back(P(v));
  for (int i = 0; i < 200; ++i) {
    AliasRelation a = testing::random_relation(rng, universe, 0.25);
    for (const auto& e : probes) {
      PathSet q = quotient(a, e, 3);
      for (const auto& f : probes) {
        if (e == f) continue;
        EXPECT_EQ(q.contains(f), aliased(a, e, f, 3))
            << show(a) << " e=" << e.str() << " f=" << f.str();
      }
    }
  }
}

}  // namespace
}  // namespace aliasing
