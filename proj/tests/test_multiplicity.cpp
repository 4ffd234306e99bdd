#include "doctest.h"

#include "support.hpp"
#include "toric/multiplicity.hpp"

using namespace toric;

namespace {

VertexSet S(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int i : one_based) s |= VertexSet{1} << (i - 1);
  return s;
}

}  // namespace

TEST_CASE("factors for P2") {
  const std::vector<VertexSet> gens{S({1, 2, 3})};
  const auto p = scan_powerset(gens, 3);
  CHECK(multiplicity_factors(p, S({1, 2, 3})) == FactorMap{{1, 1}});
  CHECK(multiplicity_factors(p, 0) == FactorMap{{0, 1}});
  const auto table = multiplicity_table(p, contributing_degrees(p, 3));
  CHECK(table.entries() == std::map<VertexSet, FactorMap>{{0, {{0, 1}}}, {S({1, 2, 3}), {{1, 1}}}});
}

TEST_CASE("factors for P1xP1") {
  const std::vector<VertexSet> gens{S({1, 2}), S({3, 4})};
  const auto p = scan_powerset(gens, 4);
  const auto table = multiplicity_table(p, contributing_degrees(p, 4));
  CHECK(table.entries() == std::map<VertexSet, FactorMap>{{0, {{0, 1}}},
                                                          {S({1, 2}), {{1, 1}}},
                                                          {S({3, 4}), {{1, 1}}},
                                                          {S({1, 2, 3, 4}), {{2, 1}}}});
}

TEST_CASE("three pairwise generators: multiplicity two") {
  // Hochster side: Σ|_{123} is three isolated points, dim H̃^0 = 2 at r = 2
  const std::vector<VertexSet> gens{S({1, 2}), S({2, 3}), S({1, 3})};
  const auto p = scan_powerset(gens, 3);
  CHECK(multiplicity_factors(p, S({1, 2, 3})) == FactorMap{{2, 2}});
}

TEST_CASE("degrees with vanishing factors are kept empty") {
  // path ideal x1x2, x2x3, x3x4: Γ at 1111 is {{1,3},{1,2,3}}, which is acyclic
  const std::vector<VertexSet> gens{S({1, 2}), S({2, 3}), S({3, 4})};
  const auto p = scan_powerset(gens, 4);
  CHECK(multiplicity_factors(p, S({1, 2, 3})) == FactorMap{{2, 1}});
  const std::vector<VertexSet> wanted{S({1, 2, 3, 4})};
  const auto table = multiplicity_table(p, wanted);
  REQUIRE(table.contains(S({1, 2, 3, 4})));
  CHECK(table.at(S({1, 2, 3, 4})).empty());
  const std::vector<VertexSet> missing{S({1, 3})};
  CHECK_THROWS_AS(multiplicity_table(p, missing), ModelError);
}

TEST_CASE("Koszul complex: coordinate generators") {
  const std::vector<VertexSet> gens{S({1}), S({2}), S({3})};
  const auto p = scan_powerset(gens, 3);
  const auto table = multiplicity_table(p, p.degrees());
  CHECK(table.size() == 8);
  for (const auto& [deg, factors] : table.entries()) CHECK(factors == FactorMap{{set_size(deg), 1}});
}

TEST_CASE("factor bounds and table parallelism") {
  for (const auto& name : testing::complete_model_names()) {
    CAPTURE(name);
    const auto model = testing::load_bundled(name);
    const auto p = scan_powerset(model.sr_generators(), model.n());
    const auto serial = multiplicity_table(p, p.degrees(), 1);
    const auto parallel = multiplicity_table(p, p.degrees(), 4);
    CHECK(serial.entries() == parallel.entries());
    CHECK(serial.at(0) == FactorMap{{0, 1}});
    for (const auto& [deg, factors] : serial.entries()) {
      for (const auto& [r, beta] : factors) {
        CHECK(r >= 0);
        CHECK(r <= set_size(deg));
        CHECK(beta > 0);
      }
      // a nonzero factor forces the complement degree into P
      if (!factors.empty()) CHECK(p.contains(full_set(model.n()) & ~deg));
    }
  }
}
