#include "toric/multiplicity.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric {

FactorMap multiplicity_factors(const DegreeSet& degrees, VertexSet degree) {
  const HomologyDims h = reduced_homology(gamma_complex(degrees, degree));
  FactorMap factors;
  for (int r = 0; r <= h.top_degree() + 1; ++r) {
    if (const std::size_t beta = h[r - 1]; beta != 0) factors.emplace(r, beta);
  }
  return factors;
}

MultiplicityTable multiplicity_table(const DegreeSet& degrees, std::span<const VertexSet> contributing,
                                     unsigned threads) {
  for (VertexSet deg : contributing) {
    if (!degrees.contains(deg)) {
      throw ModelError("degree " + degree_bitstring(deg, degrees.vertex_count()) + " is not in P(I)");
    }
  }
  std::vector<FactorMap> results(contributing.size());
  if (threads <= 1 || contributing.size() < 2) {
    for (std::size_t k = 0; k < contributing.size(); ++k) results[k] = multiplicity_factors(degrees, contributing[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < contributing.size();) {
        try {
          results[k] = multiplicity_factors(degrees, contributing[k]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(contributing.size()));
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }
  std::map<VertexSet, FactorMap> table;
  for (std::size_t k = 0; k < contributing.size(); ++k) table.emplace(contributing[k], std::move(results[k]));
  return MultiplicityTable(std::move(table));
}

}  // namespace toric
