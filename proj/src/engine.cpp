#include "toric/engine.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace toric {
namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

CohomologyEngine::CohomologyEngine(ToricVarietyModel model, EngineOptions options)
    : model_(std::move(model)),
      options_(options),
      degrees_(scan_powerset(model_.sr_generators(), model_.n(), ScanOptions{options.generator_cap})),
      counter_(model_) {
  const unsigned threads = resolve_threads(options_.threads);
  const auto all = degrees_.degrees();
  if (options_.summation == Summation::kUnfiltered) {
    summed_ = all;
    table_ = multiplicity_table(degrees_, summed_, threads);
    return;
  }
  summed_ = contributing_degrees(degrees_, model_.n());
  table_ = multiplicity_table(degrees_, summed_, threads);

  std::vector<VertexSet> dropped;
  for (VertexSet deg : all) {
    if (!table_.contains(deg)) dropped.push_back(deg);
  }
  const MultiplicityTable dropped_table = multiplicity_table(degrees_, dropped, threads);
  for (const auto& [deg, factors] : dropped_table.entries()) {
    if (!factors.empty()) filter_sound_ = false;
  }
  if (!filter_sound_) {
    auto merged = table_.entries();
    merged.insert(dropped_table.entries().begin(), dropped_table.entries().end());
    table_ = MultiplicityTable(std::move(merged));
    summed_ = all;
  }
}

CohomologyResult CohomologyEngine::cohomology(const DivisorClass& alpha) const {
  model_.check_class(alpha);
  CohomologyResult result;
  result.alpha = alpha;
  result.dims.assign(static_cast<std::size_t>(model_.d() + 1), BigInt(0));
  for (VertexSet deg : summed_) {
    const FactorMap& factors = table_.at(deg);
    if (factors.empty()) continue;
    BreakdownEntry entry;
    entry.degree = deg;
    entry.support_size = set_size(deg);
    entry.count = counter_.count(NegGroupQuery{alpha, deg});
    entry.factors = factors;
    if (entry.count.is_infinite()) throw NonFiniteCohomology();
    for (const auto& [r, beta] : factors) {
      const int i = entry.support_size - r;
      if (i < 0 || i > model_.d()) {
        throw InternalError("multiplicity factor r=" + std::to_string(r) + " at degree " +
                            degree_bitstring(deg, model_.n()) + " maps outside h^0..h^d");
      }
      BigInt c = entry.count.value() * static_cast<unsigned long>(beta);
      result.dims[static_cast<std::size_t>(i)] += c;
      entry.contributions[i] += c;
    }
    result.breakdown.push_back(std::move(entry));
  }
  return result;
}

std::vector<BatchEntry> CohomologyEngine::cohomology_all(std::span<const DivisorClass> alphas) const {
  std::vector<BatchEntry> out(alphas.size());
  auto evaluate = [&](std::size_t k) {
    out[k].alpha = alphas[k];
    try {
      out[k].result = cohomology(alphas[k]);
    } catch (const NonFiniteCohomology& e) {
      out[k].error = e.what();
      out[k].non_finite = true;
    } catch (const std::exception& e) {
      out[k].error = e.what();
    }
  };
  const unsigned threads = std::min<unsigned>(resolve_threads(options_.threads), static_cast<unsigned>(alphas.size()));
  if (threads <= 1) {
    for (std::size_t k = 0; k < alphas.size(); ++k) evaluate(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < alphas.size();) evaluate(k);
    });
  }
  pool.clear();
  return out;
}

SerreReport serre_check(const CohomologyEngine& engine, const DivisorClass& alpha) {
  const auto& model = engine.model();
  DivisorClass dual = canonical_class(model);
  model.check_class(alpha);
  for (std::size_t c = 0; c < dual.size(); ++c) dual.coords[c] -= alpha.coords[c];

  SerreReport report;
  std::ostringstream msg;
  try {
    const auto lhs = engine.cohomology(alpha).dims;
    const auto rhs = engine.cohomology(dual).dims;
    const int d = model.d();
    report.pass = true;
    for (int i = 0; i <= d; ++i) {
      const auto& a = lhs[static_cast<std::size_t>(i)];
      const auto& b = rhs[static_cast<std::size_t>(d - i)];
      if (a != b) {
        report.pass = false;
        msg << "h^" << i << format_class(alpha) << " = " << a << " but h^" << (d - i) << format_class(dual)
            << " = " << b << "; ";
      }
    }
    if (report.pass) msg << format_class(alpha) << " <-> " << format_class(dual) << " agree";
  } catch (const NonFiniteCohomology& e) {
    report.pass = false;
    msg << e.what();
  }
  report.report = msg.str();
  return report;
}

std::vector<DivisorClass> class_box(std::span<const std::pair<std::int64_t, std::int64_t>> ranges) {
  std::vector<DivisorClass> out;
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) return out;
  }
  DivisorClass cur;
  for (const auto& r : ranges) cur.coords.push_back(r.first);
  for (;;) {
    out.push_back(cur);
    std::size_t k = ranges.size();
    while (k-- > 0) {
      if (cur.coords[k] < ranges[k].second) {
        ++cur.coords[k];
        break;
      }
      cur.coords[k] = ranges[k].first;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace toric
