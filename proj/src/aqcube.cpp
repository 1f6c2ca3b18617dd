#include "aqcross/aqcube.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace aqcross {

int dim_raw(Vertex a, Vertex b) {
  if (a == b) return 0;
  const Vertex x = a ^ b;
  const int t = std::bit_width(x);
  if (t == 1) return 1;
  const bool below_differs = (x >> (t - 2)) & 1u;
  return below_differs ? -t : t;
}

int dim(const VertexLabel& a, const VertexLabel& b) {
  if (a.n != b.n)
    throw std::invalid_argument("dim: labels have different ambient dimensions");
  return dim_raw(a.bits, b.bits);
}

bool adjacent_raw(Vertex a, Vertex b) {
  const Vertex x = a ^ b;
  if (x == 0) return false;
  if ((x & (x - 1)) == 0) return true;               // single bit
  return (x & (x + 1)) == 0;                         // bits 1..t, t >= 2
}

AugmentedCube::AugmentedCube(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("AugmentedCube: dimension must be >= 1");
  if (n > 31) throw std::invalid_argument("AugmentedCube: dimension too large");
}

std::uint64_t AugmentedCube::edge_count() const {
  return std::uint64_t(2 * n_ - 1) << (n_ - 1);
}

bool AugmentedCube::adjacent(Vertex a, Vertex b) const {
  return contains(a) && contains(b) && adjacent_raw(a, b);
}

std::vector<std::pair<Vertex, int>> AugmentedCube::neighbors(Vertex a) const {
  std::vector<std::pair<Vertex, int>> out;
  out.reserve(degree());
  for (int t = -n_; t <= -2; ++t) out.emplace_back(neighbor_along(a, t), t);
  for (int t = 1; t <= n_; ++t) out.emplace_back(neighbor_along(a, t), t);
  return out;
}

Vertex AugmentedCube::neighbor_along(Vertex a, int t) const {
  if (t >= 1 && t <= n_) return a ^ (Vertex{1} << (t - 1));
  if (t <= -2 && t >= -n_) return a ^ ((Vertex{1} << (-t)) - 1);
  throw std::invalid_argument("neighbor_along: dimension label out of range");
}

Edge AugmentedCube::incident_edge(Vertex a, int t) const {
  const Vertex b = neighbor_along(a, t);
  Edge e{std::min(a, b), std::max(a, b), t};
  if (dim_raw(e.a, e.b) != t)
    throw std::logic_error("incident_edge: dimension label mismatch");
  return e;
}

std::vector<Edge> AugmentedCube::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  const Vertex vmax = static_cast<Vertex>(vertex_count());
  for (Vertex a = 0; a < vmax; ++a) {
    for (int i = 1; i <= n_; ++i) {
      const Vertex b = a ^ (Vertex{1} << (i - 1));
      if (a < b) out.push_back({a, b, dim_raw(a, b)});
    }
    for (int t = 2; t <= n_; ++t) {
      const Vertex b = a ^ ((Vertex{1} << t) - 1);
      if (a < b) out.push_back({a, b, dim_raw(a, b)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> edges_between(const AugmentedCube& g,
                                std::span<const Vertex> A,
                                std::span<const Vertex> B) {
  std::unordered_set<Vertex> in_b(B.begin(), B.end());
  std::vector<Edge> out;
  for (Vertex a : A) {
    for (auto [nb, t] : g.neighbors(a)) {
      if (in_b.count(nb)) {
        out.push_back({std::min(a, nb), std::max(a, nb), t});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> edges_recursive(int n) {
  if (n < 1) throw std::invalid_argument("edges_recursive: dimension must be >= 1");
  if (n == 1) return {{0, 1, 1}};
  std::vector<Edge> prev = edges_recursive(n - 1);
  std::vector<Edge> out;
  out.reserve((std::size_t(2 * n - 1) << (n - 1)));
  const Vertex top = Vertex{1} << (n - 1);
  for (const Edge& e : prev) {
    out.push_back(e);
    out.push_back({e.a | top, e.b | top, e.dim});
  }
  // joining matchings: equal low labels (dim n), complemented low labels (dim -n)
  for (Vertex a = 0; a < top; ++a) {
    out.push_back({a, a | top, n});
    const Vertex b = (a ^ (top - 1)) | top;
    out.push_back({std::min(a, b), std::max(a, b), -n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_k44_split(const std::array<Vertex, 4>& left,
                  const std::array<Vertex, 4>& right) {
  for (Vertex a : left)
    for (Vertex b : right)
      if (!adjacent_raw(a, b)) return false;
  return true;
}

K44Witness find_k44_witness() {
  std::vector<K44Witness> found;
  // enumerate 4-subsets containing vertex 0 so each split appears once
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4 || !(mask & 1u)) continue;
    K44Witness w;
    int li = 0, ri = 0;
    for (Vertex v = 0; v < 8; ++v) {
      if (mask & (1u << v))
        w.left[li++] = v;
      else
        w.right[ri++] = v;
    }
    if (is_k44_split(w.left, w.right)) found.push_back(w);
  }
  if (found.size() != 1)
    throw std::logic_error("find_k44_witness: expected exactly one split");
  return found.front();
}

void write_edge_list(std::ostream& os, const AugmentedCube& g) {
  for (const Edge& e : g.edges())
    os << e.a << ' ' << e.b << ' ' << e.dim << '\n';
}

}  // namespace aqcross
