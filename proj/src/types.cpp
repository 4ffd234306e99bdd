#include "toric/types.hpp"

#include <algorithm>

namespace toric {

std::vector<int> set_indices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet set_from_indices(const std::vector<int>& indices) {
  VertexSet s = 0;
  for (int i : indices) s |= VertexSet{1} << i;
  return s;
}

VertexSet compress_set(VertexSet s, VertexSet onto) {
  VertexSet out = 0;
  int pos = 0;
  for (VertexSet rest = onto; rest != 0; rest &= rest - 1, ++pos) {
    const VertexSet bit = rest & (~rest + 1);
    if (s & bit) out |= VertexSet{1} << pos;
  }
  return out;
}

VertexSet expand_set(VertexSet packed, VertexSet onto) {
  VertexSet out = 0;
  int pos = 0;
  for (VertexSet rest = onto; rest != 0; rest &= rest - 1, ++pos) {
    if (contains_index(packed, pos)) out |= rest & (~rest + 1);
  }
  return out;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : set_indices(s)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string degree_bitstring(VertexSet s, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (contains_index(s, i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  // Walk both index lists in ascending order; a proper prefix sorts first.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::string format_class(const DivisorClass& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha.coords[i]);
  }
  return out + ")";
}

}  // namespace toric
