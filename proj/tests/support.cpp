#include "support.hpp"

#include <algorithm>
#include <functional>

#include "toric/linalg.hpp"

namespace toric::testing {

ToricVarietyModel load_bundled(const std::string& name) {
  return load_variety(std::string(TORIC_DATA_DIR) + "/" + name + ".json");
}

std::vector<std::string> complete_model_names() { return {"P2", "P1xP1", "P1xP1xP1", "F1", "dP2", "dP3"}; }

namespace {

std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

HomologyDims naive_reduced_homology(const FaceSet& complex) {
  if (complex.is_void()) return HomologyDims{};
  const int top = complex.max_face_size();
  std::vector<std::map<VertexSet, std::size_t>> index(static_cast<std::size_t>(top + 1));
  for (VertexSet f : complex.faces()) {
    auto& idx = index[static_cast<std::size_t>(set_size(f))];
    idx.emplace(f, idx.size());
  }
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) {
    const auto& hi = index[static_cast<std::size_t>(k)];
    const auto& lo = index[static_cast<std::size_t>(k - 1)];
    if (hi.empty() || lo.empty()) continue;
    std::vector<std::vector<Rational>> m(lo.size(), std::vector<Rational>(hi.size()));
    for (const auto& [tau, col] : hi) {
      const auto verts = set_indices(tau);
      for (std::size_t s = 0; s < verts.size(); ++s) {
        const VertexSet face = tau & ~(VertexSet{1} << verts[s]);
        m[lo.at(face)][col] = (s % 2 == 0) ? 1 : -1;
      }
    }
    rank[static_cast<std::size_t>(k)] = gauss_rank(std::move(m));
  }
  std::vector<std::size_t> dims(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    dims[uk] = index[uk].size() - rank[uk] - rank[uk + 1];
  }
  return HomologyDims(std::move(dims));
}

std::vector<FaceSet> all_complexes(int n) {
  std::vector<VertexSet> order;
  for (VertexSet s = 0; s <= full_set(n); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](VertexSet a, VertexSet b) { return set_size(a) < set_size(b); });
  std::vector<FaceSet> out;
  std::vector<VertexSet> chosen;
  std::vector<bool> in(order.size() + 1, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.emplace_back(n, chosen);
      return;
    }
    rec(k + 1);
    const VertexSet s = order[k];
    for (int i : set_indices(s)) {
      if (!in[s & ~(VertexSet{1} << i)]) return;
    }
    if (s != 0 && !in[0]) return;
    in[s] = true;
    chosen.push_back(s);
    rec(k + 1);
    chosen.pop_back();
    in[s] = false;
  };
  rec(0);
  return out;
}

FaceSet random_complex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<VertexSet> pick(0, full_set(n));
  std::vector<VertexSet> facets;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) facets.push_back(pick(rng));
  return FaceSet::closure(n, facets);
}

ToricVarietyModel surface_from_rays(const std::vector<std::pair<int, int>>& rays) {
  const int n = static_cast<int>(rays.size());
  int ex = -1;
  int ey = -1;
  for (int i = 0; i < n; ++i) {
    if (rays[static_cast<std::size_t>(i)] == std::pair{1, 0}) ex = i;
    if (rays[static_cast<std::size_t>(i)] == std::pair{0, 1}) ey = i;
  }
  if (ex < 0 || ey < 0) throw std::invalid_argument("surface_from_rays needs (1,0) and (0,1)");
  // one relation e_j - a e_x - b e_y per ray other than the two basis rays
  std::vector<std::vector<std::int64_t>> charges(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == ex || j == ey) continue;
    const auto [a, b] = rays[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      std::int64_t v = 0;
      if (i == j) v = 1;
      if (i == ex) v = -a;
      if (i == ey) v = -b;
      charges[static_cast<std::size_t>(i)].push_back(v);
    }
  }
  std::vector<std::string> names;
  std::vector<VertexSet> cones;
  for (int i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    cones.push_back((VertexSet{1} << i) | (VertexSet{1} << ((i + 1) % n)));
  }
  return ToricVarietyModel(names, 2, charges, std::nullopt, cones);
}

ToricVarietyModel random_surface(std::mt19937_64& rng, int max_rays) {
  std::vector<std::pair<int, int>> rays;
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      rays = {{1, 0}, {0, 1}, {-1, -1}};
      break;
    default: {
      const int a = std::uniform_int_distribution<int>(0, 2)(rng);
      rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    }
  }
  const int target = std::uniform_int_distribution<int>(static_cast<int>(rays.size()), max_rays)(rng);
  while (static_cast<int>(rays.size()) < target) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, rays.size() - 1)(rng);
    const auto& a = rays[i];
    const auto& b = rays[(i + 1) % rays.size()];
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i + 1), {a.first + b.first, a.second + b.second});
  }
  return surface_from_rays(rays);
}

ToricVarietyModel product_with_p1(const ToricVarietyModel& model) {
  const int n = model.n();
  auto names = model.coordinate_names();
  names.push_back("p0");
  names.push_back("p1");
  auto charges = model.charges();
  for (auto& row : charges) row.push_back(0);
  std::vector<std::int64_t> extra(static_cast<std::size_t>(model.class_rank()), 0);
  extra.push_back(1);
  charges.push_back(extra);
  charges.push_back(extra);
  std::vector<VertexSet> cones;
  for (VertexSet c : *model.max_cones()) {
    cones.push_back(c | (VertexSet{1} << n));
    cones.push_back(c | (VertexSet{1} << (n + 1)));
  }
  return ToricVarietyModel(names, model.d() + 1, charges, std::nullopt, cones);
}

std::map<VertexSet, std::vector<DegreeVector>> brute_force_neg_groups(const ToricVarietyModel& model,
                                                                       const DivisorClass& alpha, int bound) {
  const int n = model.n();
  std::map<VertexSet, std::vector<DegreeVector>> out;
  DegreeVector u(static_cast<std::size_t>(n), -bound);
  for (;;) {
    bool match = true;
    for (int r = 0; r < model.class_rank() && match; ++r) {
      std::int64_t s = 0;
      for (int i = 0; i < n; ++i) s += u[static_cast<std::size_t>(i)] * model.charge(i)[static_cast<std::size_t>(r)];
      match = s == alpha.coords[static_cast<std::size_t>(r)];
    }
    if (match) {
      VertexSet neg = 0;
      for (int i = 0; i < n; ++i) {
        if (u[static_cast<std::size_t>(i)] < 0) neg |= VertexSet{1} << i;
      }
      out[neg].push_back(u);
    }
    int k = n - 1;
    while (k >= 0 && u[static_cast<std::size_t>(k)] == bound) u[static_cast<std::size_t>(k--)] = -bound;
    if (k < 0) break;
    ++u[static_cast<std::size_t>(k)];
  }
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<BigInt> p1_dims(long m) {
  if (m >= 0) return {BigInt(m + 1), BigInt(0)};
  if (m <= -2) return {BigInt(0), BigInt(-m - 1)};
  return {BigInt(0), BigInt(0)};
}

std::vector<BigInt> p2_dims(long m) {
  if (m >= 0) return {binomial(m + 2, 2), 0, 0};
  if (m <= -3) return {0, 0, binomial(-m - 1, 2)};
  return {0, 0, 0};
}

std::vector<BigInt> kunneth(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) out[p + q] += a[p] * b[q];
  }
  return out;
}

}  // namespace toric::testing
