#pragma once
// The vertex partition of AQ_n (n >= 5) into eight canonical parts, the
// lifting maps that carry it from one dimension to the next, the
// black/red/blue edge classes, and the canonical u_{i,j}/v_{i,j} naming of
// part vertices used by the global drawing.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aqcross/aqcube.hpp"
#include "aqcross/arcdiagram.hpp"
#include "aqcross/report.hpp"

namespace aqcross {

// Embeds AQ_n into AQ_{n+1} by duplicating bit n-1: bits 1..n-1 copied,
// bit n of the image = bit n-1, bit n+1 = bit n. Requires n >= 2.
Vertex pi_embed(Vertex a, int n);

// The complement partner inside AQ_m: flips bits 1..m-2, the unique neighbor
// along dimension -(m-2). Requires m >= 4.
Vertex hat_partner(Vertex a, int m);

// Omega: each vertex of AQ_n contributes its embedded image and that image's
// complement partner in AQ_{n+1}. Doubles the set size for n >= 5.
std::vector<Vertex> omega(std::span<const Vertex> A, int n);
// Omega iterated k times starting from AQ_n.
std::vector<Vertex> omega_iter(std::span<const Vertex> A, int n, int k);

// Which of the eight parts: side U/V and index 1..4.
struct PartId {
  char side = 'U';  // 'U' or 'V'
  int index = 1;    // 1..4

  friend bool operator==(const PartId&, const PartId&) = default;
  std::string str() const { return std::string(1, side) + std::to_string(index); }
};
inline constexpr std::array<PartId, 8> kAllParts = {
    PartId{'U', 1}, PartId{'U', 2}, PartId{'U', 3}, PartId{'U', 4},
    PartId{'V', 1}, PartId{'V', 2}, PartId{'V', 3}, PartId{'V', 4}};

struct EightParts {
  int n = 0;
  std::array<std::vector<Vertex>, 4> U;  // U[i-1] = U_i, each of size 2^{n-3}, sorted
  std::array<std::vector<Vertex>, 4> V;

  const std::vector<Vertex>& part(PartId id) const {
    return id.side == 'U' ? U[id.index - 1] : V[id.index - 1];
  }
};

// The verbatim base lists at n = 5, lifted componentwise by Omega for n > 5.
EightParts eight_parts(int n);

// The starting quadruple of each part's column drawing (vertices of AQ_5).
const std::array<Vertex, 4>& part_seed(PartId id);

// The spine of the part's column drawing at dimension n: the level-(n-5)
// diagram over the part's seed quadruple.
ArcDiagram part_diagram(PartId id, int n);

enum class EdgeClass { Black, Red, Blue };

// Black: dims [-(n-1),-2] u [3,n-1]; red: dims {1,2}; blue: dims {-n,n}.
EdgeClass classify_edge(const Edge& e, int n);
EdgeClass classify_dim(int dim, int n);

// Canonical names u_{i,j}, v_{i,j}: each part's column spine read off in the
// orientation (per part) that satisfies all seven dimension-family
// identities; j runs 1..2^{n-3} with j = 1 at the outer end of the column.
class CanonicalNames {
 public:
  explicit CanonicalNames(int n);  // throws if the naming fails verification

  int n() const { return n_; }
  int part_size() const { return 1 << (n_ - 3); }
  int half_index() const { return 1 << (n_ - 4); }  // split U_{i,1} / U_{i,2}

  Vertex at(PartId id, int j) const;  // 1-based j
  const std::vector<Vertex>& family(PartId id) const;

  // True when the part's j-order runs opposite to its diagram's spine order.
  bool reversed(PartId id) const;

  // j-index of a vertex within a part (inverse of at).
  int index_of(PartId id, Vertex v) const;

 private:
  int n_;
  std::array<std::vector<Vertex>, 8> names_;  // order of kAllParts
  std::array<std::vector<int>, 8> inverse_;
};

// Checks the seven dimension-family identities under the canonical naming
// (adjacency verified, not just dimension labels). The dim-2 modular family
// is checked for n >= 8 only.
VerifyReport verify_families(int n);

// Checks the edge-partition lemma: the five dimension rows of the partition
// of E(AQ_n), and the lifting conclusions on |E[Omega(u), Omega(v)]| with the
// lifted dimensions, including emptiness for non-adjacent pairs.
VerifyReport verify_lemma_partition(int n);

// JSON exports (decimal vertex ids, deterministic field order).
void write_eight_parts_json(std::ostream& os, const EightParts& p);
void write_canonical_names_json(std::ostream& os, const CanonicalNames& names);

}  // namespace aqcross
