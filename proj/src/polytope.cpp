#include "isex/polytope.hpp"

#include "isex/error.hpp"

namespace isex {

VertexEnumerator::VertexEnumerator(std::size_t dim) : dim_(dim), inequality_count_(dim) {
  if (dim == 0) throw Error(ErrorKind::kInvalidArgument, "vertex enumeration needs dimension >= 1");
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector v(dim, Rational(0));
    v[i] = 1;
    vertices_.push_back(std::move(v));
    boost::dynamic_bitset<> tight(dim);
    tight.set();
    tight.reset(i);
    tight_.push_back(std::move(tight));
  }
}

bool VertexEnumerator::adjacent(std::size_t u, std::size_t w) const {
  const boost::dynamic_bitset<> common = tight_[u] & tight_[w];
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (v == u || v == w) continue;
    if (common.is_subset_of(tight_[v])) return false;
  }
  return true;
}

VertexEnumerator::Cut VertexEnumerator::split(const RationalVector& normal, const Rational& bound) const {
  if (normal.size() != dim_) throw Error(ErrorKind::kDimensionMismatch, "cut normal has wrong dimension");
  Cut cut;
  std::vector<Rational> slack(vertices_.size());
  std::vector<std::size_t> negative;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    slack[v] = bound - dot(normal, vertices_[v]);
    const int s = sgn(slack[v]);
    if (s > 0) {
      cut.positive.push_back(v);
    } else if (s == 0) {
      cut.zero.push_back(v);
    } else {
      negative.push_back(v);
    }
  }
  if (negative.empty()) return cut;
  for (std::size_t u : cut.positive) {
    for (std::size_t w : negative) {
      if (!adjacent(u, w)) continue;
      // Point on [u, w] where the slack vanishes.
      const Rational t = slack[u] / (slack[u] - slack[w]);
      RationalVector point(dim_);
      for (std::size_t i = 0; i < dim_; ++i) point[i] = vertices_[u][i] + t * (vertices_[w][i] - vertices_[u][i]);
      cut.new_vertices.push_back(std::move(point));
      cut.new_tight.push_back(tight_[u] & tight_[w]);
    }
  }
  return cut;
}

void VertexEnumerator::grow_tight_sets() {
  ++inequality_count_;
  for (auto& t : tight_) t.resize(inequality_count_);
}

void VertexEnumerator::add_inequality(const RationalVector& normal, const Rational& bound) {
  Cut cut = split(normal, bound);
  const std::size_t index = inequality_count_;
  std::vector<RationalVector> vertices;
  std::vector<boost::dynamic_bitset<>> tight;
  for (std::size_t v : cut.positive) {
    vertices.push_back(std::move(vertices_[v]));
    tight.push_back(std::move(tight_[v]));
  }
  for (std::size_t v : cut.zero) {
    vertices.push_back(std::move(vertices_[v]));
    tight.push_back(std::move(tight_[v]));
    tight.back().resize(index + 1);
    tight.back().set(index);
  }
  for (std::size_t i = 0; i < cut.new_vertices.size(); ++i) {
    vertices.push_back(std::move(cut.new_vertices[i]));
    tight.push_back(std::move(cut.new_tight[i]));
    tight.back().resize(index + 1);
    tight.back().set(index);
  }
  vertices_ = std::move(vertices);
  tight_ = std::move(tight);
  grow_tight_sets();
}

void VertexEnumerator::add_equality(const RationalVector& normal, const Rational& value) {
  // Vertices strictly off the hyperplane are dropped; crossings of edges
  // between the two open sides are the new vertices.
  Cut cut = split(normal, value);
  std::vector<RationalVector> vertices;
  std::vector<boost::dynamic_bitset<>> tight;
  for (std::size_t v : cut.zero) {
    vertices.push_back(std::move(vertices_[v]));
    tight.push_back(std::move(tight_[v]));
  }
  for (std::size_t i = 0; i < cut.new_vertices.size(); ++i) {
    vertices.push_back(std::move(cut.new_vertices[i]));
    tight.push_back(std::move(cut.new_tight[i]));
  }
  vertices_ = std::move(vertices);
  tight_ = std::move(tight);
}

}  // namespace isex
