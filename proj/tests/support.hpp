#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "toric/model.hpp"
#include "toric/simplicial.hpp"

namespace toric::testing {

ToricVarietyModel load_bundled(const std::string& name);
/// Bundled complete smooth models (all carry fan data).
std::vector<std::string> complete_model_names();

/// Reduced homology of a subset-closed complex from full dense boundary
/// matrices and textbook Gaussian elimination over Q.
HomologyDims naive_reduced_homology(const FaceSet& complex);

/// Every subset-closed collection on n vertices (void included).
std::vector<FaceSet> all_complexes(int n);
/// Closure of a few random facets; never void.
FaceSet random_complex(std::mt19937_64& rng, int n);

/// Complete smooth toric surface from primitive rays in counterclockwise
/// order; (1,0) and (0,1) must be among them.
ToricVarietyModel surface_from_rays(const std::vector<std::pair<int, int>>& rays);
/// P^2 or a Hirzebruch surface followed by random torus-fixed point blowups.
ToricVarietyModel random_surface(std::mt19937_64& rng, int max_rays);
/// X x P^1.
ToricVarietyModel product_with_p1(const ToricVarietyModel& model);

/// All u in [-bound, bound]^n with class alpha, grouped by Neg(u), each list
/// in lexicographic order.
std::map<VertexSet, std::vector<DegreeVector>> brute_force_neg_groups(const ToricVarietyModel& model,
                                                                       const DivisorClass& alpha, int bound);

BigInt binomial(long n, long k);
/// h^•(P^1; O(m)) and h^•(P^2; O(m)).
std::vector<BigInt> p1_dims(long m);
std::vector<BigInt> p2_dims(long m);
/// Künneth product of two cohomology vectors.
std::vector<BigInt> kunneth(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

}  // namespace toric::testing
