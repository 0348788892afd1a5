#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

#include "isex/rational.hpp"

namespace isex {

/// Incremental vertex enumeration (double description) for a bounded
/// polytope that starts as the standard simplex and is cut by inequalities
/// a.x <= b and hyperplanes a.x = b.
///
/// Adjacency of two vertices is decided combinatorially: u and w span an edge
/// iff no third vertex is tight on every inequality tight at both. The vertex
/// list is complete after every cut, which is what makes the test exact.
class VertexEnumerator {
 public:
  /// Vertices e_0, ..., e_{dim-1}; inequality j is -x_j <= 0.
  explicit VertexEnumerator(std::size_t dim);

  void add_inequality(const RationalVector& normal, const Rational& bound);
  void add_equality(const RationalVector& normal, const Rational& value);

  std::size_t dimension() const noexcept { return dim_; }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }

 private:
  struct Cut {
    std::vector<std::size_t> positive;
    std::vector<std::size_t> zero;
    std::vector<RationalVector> new_vertices;
    std::vector<boost::dynamic_bitset<>> new_tight;
  };

  Cut split(const RationalVector& normal, const Rational& bound) const;
  bool adjacent(std::size_t u, std::size_t w) const;
  void grow_tight_sets();

  std::size_t dim_;
  std::size_t inequality_count_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<boost::dynamic_bitset<>> tight_;
};

}  // namespace isex
