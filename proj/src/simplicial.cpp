#include "toric/simplicial.hpp"

#include <algorithm>
#include <numeric>

#include "toric/linalg.hpp"

namespace toric {

FaceSet::FaceSet(int vertex_count, std::vector<VertexSet> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
  if (vertex_count_ < 0 || vertex_count_ > kMaxVertices) throw ModelError("FaceSet: bad vertex count");
  const VertexSet all = full_set(vertex_count_);
  for (VertexSet f : faces_) {
    if (!is_subset(f, all)) throw ModelError("FaceSet: face " + format_set(f) + " outside vertex set");
  }
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

FaceSet FaceSet::closure(int vertex_count, std::span<const VertexSet> generators) {
  std::vector<VertexSet> faces;
  for (VertexSet g : generators) {
    // all submasks of g, including g and 0
    for (VertexSet sub = g;; sub = (sub - 1) & g) {
      faces.push_back(sub);
      if (sub == 0) break;
    }
  }
  return FaceSet(vertex_count, std::move(faces));
}

FaceSet FaceSet::simplex(int vertex_count) {
  const VertexSet all = full_set(vertex_count);
  return closure(vertex_count, std::span<const VertexSet>(&all, 1));
}

bool FaceSet::contains(VertexSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

bool FaceSet::is_subset_closed() const {
  for (VertexSet f : faces_) {
    for (VertexSet rest = f; rest != 0; rest &= rest - 1) {
      const VertexSet bit = rest & (~rest + 1);
      if (!contains(f & ~bit)) return false;
    }
  }
  return true;
}

int FaceSet::max_face_size() const {
  int best = -1;
  for (VertexSet f : faces_) best = std::max(best, set_size(f));
  return best;
}

bool HomologyDims::all_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t v) { return v == 0; });
}

std::size_t HomologyDims::total() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

FaceSet restrict(const FaceSet& complex, VertexSet sigma) {
  std::vector<VertexSet> faces;
  for (VertexSet f : complex.faces()) {
    if (is_subset(f, sigma)) faces.push_back(compress_set(f, sigma));
  }
  return FaceSet(set_size(sigma & full_set(complex.vertex_count())), std::move(faces));
}

FaceSet link(const FaceSet& complex, VertexSet sigma) {
  const VertexSet rest = full_set(complex.vertex_count()) & ~sigma;
  std::vector<VertexSet> faces;
  if (complex.contains(sigma)) {
    for (VertexSet f : complex.faces()) {
      if ((f & sigma) == 0 && complex.contains(f | sigma)) faces.push_back(compress_set(f, rest));
    }
  }
  return FaceSet(set_size(rest), std::move(faces));
}

FaceSet alexander_dual(const FaceSet& complex) {
  const int n = complex.vertex_count();
  if (n > 24) throw ResourceLimitError("alexander_dual: vertex set too large to enumerate");
  const VertexSet all = full_set(n);
  std::vector<VertexSet> faces;
  for (VertexSet s = 0; s <= all; ++s) {
    if (!complex.contains(all & ~s)) faces.push_back(s);
  }
  return FaceSet(n, std::move(faces));
}

std::vector<std::size_t> face_counts(const FaceSet& faces) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(faces.max_face_size() + 1), 0);
  for (VertexSet f : faces.faces()) ++counts[static_cast<std::size_t>(set_size(f))];
  return counts;
}

namespace {

// Orientation sign of dropping index i from τ: (-1)^(s-1) for the s-th element.
int boundary_sign(VertexSet tau, int i) {
  const VertexSet below = tau & ((VertexSet{1} << i) - 1);
  return (set_size(below) % 2 == 0) ? 1 : -1;
}

std::ptrdiff_t find_face(const std::vector<VertexSet>& sorted, VertexSet f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  if (it == sorted.end() || *it != f) return -1;
  return it - sorted.begin();
}

}  // namespace

HomologyDims reduced_homology(const FaceSet& faces) {
  if (faces.is_void()) return HomologyDims{};
  const int top = faces.max_face_size();
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top + 1));
  for (VertexSet f : faces.faces()) by_size[static_cast<std::size_t>(set_size(f))].push_back(f);

  // ∂∘∂ = 0 on the projected complex.
  for (int k = 2; k <= top; ++k) {
    const auto& mid = by_size[static_cast<std::size_t>(k - 1)];
    const auto& low = by_size[static_cast<std::size_t>(k - 2)];
    if (mid.empty() || low.empty()) continue;
    for (VertexSet tau : by_size[static_cast<std::size_t>(k)]) {
      std::vector<std::pair<VertexSet, int>> image;
      for (int i : set_indices(tau)) {
        const VertexSet face = tau & ~(VertexSet{1} << i);
        if (find_face(mid, face) < 0) continue;
        const int s1 = boundary_sign(tau, i);
        for (int j : set_indices(face)) {
          const VertexSet sub = face & ~(VertexSet{1} << j);
          if (find_face(low, sub) < 0) continue;
          image.emplace_back(sub, s1 * boundary_sign(face, j));
        }
      }
      std::sort(image.begin(), image.end());
      for (std::size_t a = 0; a < image.size();) {
        int total = 0;
        std::size_t b = a;
        for (; b < image.size() && image[b].first == image[a].first; ++b) total += image[b].second;
        if (total != 0) throw InternalError("projected boundary not a complex");
        a = b;
      }
    }
  }

  // rank[k]: rank of the boundary from k-element faces to (k-1)-element faces
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) {
    const auto& cols = by_size[static_cast<std::size_t>(k)];
    const auto& rows = by_size[static_cast<std::size_t>(k - 1)];
    if (cols.empty() || rows.empty()) continue;
    std::vector<SparseVector> boundary(cols.size());
    bool any = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (int i : set_indices(cols[c])) {
        const auto r = find_face(rows, cols[c] & ~(VertexSet{1} << i));
        if (r < 0) continue;
        boundary[c].emplace_back(static_cast<std::uint32_t>(r), boundary_sign(cols[c], i));
        any = true;
      }
      std::sort(boundary[c].begin(), boundary[c].end());
    }
    if (any) rank[static_cast<std::size_t>(k)] = sparse_rank(boundary);
  }

  std::vector<std::size_t> dims(static_cast<std::size_t>(top + 1), 0);
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    dims[uk] = by_size[uk].size() - rank[uk] - rank[uk + 1];
  }
  return HomologyDims(std::move(dims));
}

}  // namespace toric
