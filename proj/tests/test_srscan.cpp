#include "doctest.h"

#include <random>

#include "support.hpp"
#include "toric/srscan.hpp"

using namespace toric;

namespace {

VertexSet S(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int i : one_based) s |= VertexSet{1} << (i - 1);
  return s;
}

using Classes = std::map<VertexSet, std::vector<VertexSet>>;

// Flatten a DegreeSet into degree -> sorted τ list.
Classes flatten(const DegreeSet& p) {
  Classes out;
  for (const auto& [deg, cls] : p.entries()) {
    auto& v = out[deg];
    for (const auto& bucket : cls.faces_by_size) v.insert(v.end(), bucket.begin(), bucket.end());
    std::sort(v.begin(), v.end());
  }
  return out;
}

// Plain 2^t loop over generator subsets.
Classes naive_scan(std::vector<VertexSet> gens) {
  sort_canonical(gens);
  Classes out;
  const VertexSet limit = VertexSet{1} << gens.size();
  for (VertexSet tau = 0; tau < limit; ++tau) {
    VertexSet uni = 0;
    for (int i : set_indices(tau)) uni |= gens[static_cast<std::size_t>(i)];
    out[uni].push_back(tau);
  }
  for (auto& [deg, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

TEST_CASE("scan of P2") {
  const std::vector<VertexSet> gens{S({1, 2, 3})};
  const auto p = scan_powerset(gens, 3);
  CHECK(flatten(p) == Classes{{0, {0}}, {S({1, 2, 3}), {S({1})}}});
}

TEST_CASE("scan of P1xP1") {
  const std::vector<VertexSet> gens{S({1, 2}), S({3, 4})};
  const auto p = scan_powerset(gens, 4);
  CHECK(flatten(p) == Classes{{0, {0}},
                              {S({1, 2}), {S({1})}},
                              {S({3, 4}), {S({2})}},
                              {S({1, 2, 3, 4}), {S({1, 2})}}});
}

TEST_CASE("degree collisions across cardinalities") {
  const std::vector<VertexSet> gens{S({1, 2}), S({2, 3}), S({1, 3})};
  const auto p = scan_powerset(gens, 3);
  const auto& full = p.entries().at(S({1, 2, 3}));
  REQUIRE(full.faces_by_size.size() == 4);
  CHECK(full.faces_by_size[1].empty());
  CHECK(full.faces_by_size[2].size() == 3);
  CHECK(full.faces_by_size[3].size() == 1);
  CHECK(gamma_complex(p, S({1, 2, 3})) == FaceSet(3, {S({1, 2}), S({1, 3}), S({2, 3}), S({1, 2, 3})}));
}

TEST_CASE("gamma complexes") {
  const std::vector<VertexSet> p2{S({1, 2, 3})};
  CHECK(gamma_complex(scan_powerset(p2, 3), S({1, 2, 3})) == FaceSet(1, {S({1})}));
  CHECK(gamma_complex(scan_powerset(p2, 3), 0) == FaceSet(1, {0}));
  const std::vector<VertexSet> p1p1{S({1, 2}), S({3, 4})};
  CHECK(gamma_complex(scan_powerset(p1p1, 4), S({1, 2, 3, 4})) == FaceSet(2, {S({1, 2})}));
  CHECK_THROWS_AS(gamma_complex(scan_powerset(p2, 3), S({1})), ModelError);
}

TEST_CASE("contributing degrees") {
  const std::vector<VertexSet> p2{S({1, 2, 3})};
  CHECK(contributing_degrees(scan_powerset(p2, 3), 3) == std::vector<VertexSet>{0, S({1, 2, 3})});
  const std::vector<VertexSet> p1p1{S({1, 2}), S({3, 4})};
  CHECK(contributing_degrees(scan_powerset(p1p1, 4), 4).size() == 4);
  // non-complete data: neither 000 nor 110 has its complement in P
  const std::vector<VertexSet> partial{S({1, 2})};
  CHECK(contributing_degrees(scan_powerset(partial, 3), 3).empty());
}

TEST_CASE("generator cap") {
  std::vector<VertexSet> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(VertexSet{1} << i);
  CHECK_THROWS_AS(scan_powerset(gens, 6, ScanOptions{5}), ResourceLimitError);
  CHECK_NOTHROW(scan_powerset(gens, 6, ScanOptions{6}));
}

TEST_CASE("pruned scan equals naive enumeration") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const int t = std::uniform_int_distribution<int>(0, 15)(rng);
    std::vector<VertexSet> gens;
    std::uniform_int_distribution<VertexSet> pick(1, full_set(n));
    for (int k = 0; k < t; ++k) gens.push_back(pick(rng));
    sort_canonical(gens);
    const auto p = scan_powerset(gens, n);
    const auto flat = flatten(p);
    CHECK(flat == naive_scan(gens));
    CHECK(flat.at(0) == std::vector<VertexSet>{0});
    for (VertexSet g : gens) CHECK(p.contains(g));

    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(flatten(scan_powerset(gens, n)) == flat);
  }
}
