#pragma once
// The n-dimensional augmented cube AQ_n.
//
// Vertices are n-bit labels; bit i of a label v is (v >> (i-1)) & 1, so bit 1
// is the least significant bit. Two labels are adjacent iff they differ in a
// single bit position, or in exactly the low block of bits 1..t for some
// t >= 2. Every edge carries a signed dimension label: +i for a single-bit
// flip at position i, -t for a low-block flip of bits 1..t.
//
// Adjacency is implicit (computed from the bit rules), so the graph is
// immutable and cheap at any dimension the CLI allows.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace aqcross {

using Vertex = std::uint32_t;

// A label together with its ambient dimension; theta(i) is bit i.
struct VertexLabel {
  Vertex bits = 0;
  int n = 0;

  int theta(int i) const { return static_cast<int>((bits >> (i - 1)) & 1u); }
};

struct Edge {
  Vertex a = 0;  // a < b
  Vertex b = 0;
  int dim = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Signed dimension of a pair of labels: 0 iff a == b, else +t or -t where t is
// the highest differing bit position (+t when t = 1 or bit t-1 agrees).
// Defined for every pair, adjacent or not.
int dim_raw(Vertex a, Vertex b);

// Checked variant; throws std::invalid_argument when the ambient dimensions
// differ.
int dim(const VertexLabel& a, const VertexLabel& b);

// True iff ab is an edge of AQ_n (labels differ in one bit or in bits 1..t).
bool adjacent_raw(Vertex a, Vertex b);

class AugmentedCube {
 public:
  explicit AugmentedCube(int n);  // throws std::invalid_argument if n < 1

  int dimension() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const;
  int degree() const { return n_ == 1 ? 1 : 2 * n_ - 1; }

  bool contains(Vertex v) const { return v < vertex_count(); }
  bool adjacent(Vertex a, Vertex b) const;

  // All (neighbor, dim) pairs of a, dims ordered -n..-2, 1..n.
  std::vector<std::pair<Vertex, int>> neighbors(Vertex a) const;

  // The unique neighbor of a along dimension t; throws std::invalid_argument
  // for t outside [-n,-2] u [1,n].
  Vertex neighbor_along(Vertex a, int t) const;
  Edge incident_edge(Vertex a, int t) const;

  // Every edge, sorted by (a, b).
  std::vector<Edge> edges() const;

 private:
  int n_;
};

// Edges with one end in A and the other in B; each edge reported once even
// when A and B overlap (so edges_between(g, A, A) lists E(A)).
std::vector<Edge> edges_between(const AugmentedCube& g,
                                std::span<const Vertex> A,
                                std::span<const Vertex> B);

// Edge set built by the recursive doubling construction (two copies of
// AQ_{n-1} joined by the equal-suffix and complement-suffix matchings).
// Retained as a cross-validation oracle for AugmentedCube::edges().
std::vector<Edge> edges_recursive(int n);

// The unique 4/4 bipartition of V(AQ_3) with all 16 cross pairs adjacent,
// found by exhaustive search; certifies cr(AQ_3) >= cr(K_{4,4}) = 4.
struct K44Witness {
  std::array<Vertex, 4> left{};
  std::array<Vertex, 4> right{};
};
K44Witness find_k44_witness();

// True iff every cross pair of the given 4/4 split is adjacent in AQ_3.
bool is_k44_split(const std::array<Vertex, 4>& left,
                  const std::array<Vertex, 4>& right);

// One line per edge, "u v dim", decimal ids, (u,v) ascending.
void write_edge_list(std::ostream& os, const AugmentedCube& g);

}  // namespace aqcross
