#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

/// Subset of a vertex (or generator) index set, bit i <-> index i (0-based).
using VertexSet = std::uint64_t;

using BigInt = mpz_class;
using Rational = mpq_class;

/// An element of Z^n: exponent vector of a Laurent monomial in the
/// homogeneous coordinates.
using DegreeVector = std::vector<std::int64_t>;

inline constexpr int kMaxVertices = 63;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline bool contains_index(VertexSet s, int i) { return ((s >> i) & 1U) != 0; }

std::vector<int> set_indices(VertexSet s);
VertexSet set_from_indices(const std::vector<int>& indices);

/// Packs the bits of `s` lying in `onto` into the low positions, keeping
/// their relative order (a software pext).
VertexSet compress_set(VertexSet s, VertexSet onto);
/// Inverse of compress_set on subsets of `onto`.
VertexSet expand_set(VertexSet packed, VertexSet onto);

/// "{1,3,4}" with 1-based labels.
std::string format_set(VertexSet s);
/// "1011" with coordinate 1 leftmost.
std::string degree_bitstring(VertexSet s, int n);

/// Lexicographic order on sorted index lists; the canonical storage order
/// for generator and cone lists.
bool lex_less(VertexSet a, VertexSet b);
void sort_canonical(std::vector<VertexSet>& sets);

/// Divisor class in Cl(X) ~ Z^(n-d).
struct DivisorClass {
  std::vector<std::int64_t> coords;

  std::size_t size() const { return coords.size(); }
  auto operator<=>(const DivisorClass&) const = default;
};

std::string format_class(const DivisorClass& alpha);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a count is infinite while its multiplicity factor is nonzero.
class NonFiniteCohomology : public std::runtime_error {
 public:
  NonFiniteCohomology()
      : std::runtime_error("non-finite cohomology: input fan likely not complete") {}
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toric
