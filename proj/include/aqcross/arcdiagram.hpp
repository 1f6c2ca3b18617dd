#pragma once
// Inductively doubled arc diagrams (the Upsilon family).
//
// An arc diagram is an ordered spine of 2^{m+2} vertex slots with arcs drawn
// as semicircles above (side +1) or below (side -1) the axis. Two arcs on the
// same side cross iff their endpoint pairs strictly interleave; opposite
// sides never cross. Level 0 is a fixed 4-vertex drawing; each doubling step
// replaces slot i by the pair {2i-1, 2i} and lifts every arc by the parity
// rules below, adding one new innermost arc per pair.
//
// The spine also carries actual augmented-cube labels (seeded from a starting
// quadruple in AQ_5), so every arc knows the dimension of the edge it draws.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aqcross/aqcube.hpp"

namespace aqcross {

struct Arc {
  int lo = 0;   // spine positions, 1-based, lo < hi
  int hi = 0;
  int side = 0;  // +1 above, -1 below
  int dim = 0;   // dimension of the underlying edge

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Named arc subsets: the whole diagram, the two half-internal parts, the
// left-right spanning part, one of the eight octant-internal parts, or the
// arcs crossing an octant boundary (everything minus all octant parts).
struct ArcSubsetId {
  enum Kind { All, LeftHalf, RightHalf, Spanning, OctantInternal, CrossOctant };
  Kind kind = All;
  int octant = 0;  // in [1,8], used by OctantInternal only

  static ArcSubsetId all() { return {All, 0}; }
  static ArcSubsetId left_half() { return {LeftHalf, 0}; }
  static ArcSubsetId right_half() { return {RightHalf, 0}; }
  static ArcSubsetId spanning() { return {Spanning, 0}; }
  static ArcSubsetId octant_internal(int t) { return {OctantInternal, t}; }
  static ArcSubsetId cross_octant() { return {CrossOctant, 0}; }
};

// Per-slot incidence and covering counts of an arc subset: incident arcs by
// side (alpha/beta) and strictly covering arcs by side (gamma/xi). An arc
// (i, j) covers every slot strictly between i and j.
struct CoverProfile {
  std::vector<std::int64_t> incident_above;  // 1-based, index 0 unused
  std::vector<std::int64_t> incident_below;
  std::vector<std::int64_t> cover_above;
  std::vector<std::int64_t> cover_below;

  std::int64_t total_above() const;
  std::int64_t total_below() const;
};

class ArcDiagram {
 public:
  ArcDiagram() = default;  // empty; assign from upsilon()

  // The drawing at level m from the canonical seed quadruple (U_1 of AQ_5).
  static ArcDiagram upsilon(int m);
  // Same drawing over an arbitrary seed quadruple of AQ_{seed_n}. The arc
  // structure is seed-independent; only the spine labels and dims change.
  static ArcDiagram upsilon(int m, const std::array<Vertex, 4>& seed, int seed_n);

  int level() const { return m_; }
  int ambient_dim() const { return seed_n_ + m_; }
  int spine_size() const { return 1 << (m_ + 2); }

  // Label of spine slot i (1-based).
  Vertex spine_label(int i) const { return spine_[i - 1]; }
  const std::vector<Vertex>& spine() const { return spine_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Octant t is the slot interval [(t-1) 2^{m-1} + 1, t 2^{m-1}]; level >= 1.
  std::pair<int, int> octant_interval(int t) const;

  std::vector<Arc> subset(ArcSubsetId id) const;

 private:
  int m_ = 0;
  int seed_n_ = 5;
  std::vector<Vertex> spine_;
  std::vector<Arc> arcs_;
};

// Crossings within A: pairs of same-side arcs whose endpoints strictly
// interleave. Pairwise brute force; this is the oracle every closed form is
// checked against.
std::int64_t count_crossings(std::span<const Arc> a);

// Crossings between disjoint A and B; throws std::invalid_argument when the
// sets share an arc.
std::int64_t count_crossings(std::span<const Arc> a, std::span<const Arc> b);

CoverProfile cover_profile(const ArcDiagram& d, ArcSubsetId f);
CoverProfile cover_profile(const ArcDiagram& d, std::span<const Arc> f);

// Per-octant sums of the covering counts of the full arc set, above and
// below; level >= 1.
struct OctantSums {
  std::array<std::int64_t, 8> above{};
  std::array<std::int64_t, 8> below{};
};
OctantSums octant_cover_sums(const ArcDiagram& d);

// Slot interval occupied k levels up by the descendants of slot t:
// [(t-1) 2^k + 1, t 2^k].
std::pair<int, int> fiber(int t, int k);

}  // namespace aqcross
