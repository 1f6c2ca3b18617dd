#pragma once
// The black sub-drawing of the global layout: eight vertical columns (one per
// part, each drawn as the level-(n-5) arc diagram) at x in {-2,-1,+1,+2},
// plus the straight edges of dims -(n-1) and n-1 joining each (U_i, V_i)
// column pair. Crossings are counted combinatorially:
//   - column-internal: arc interleaving inside each column;
//   - straight-straight: two segments between the same column pair cross iff
//     their height-index pairs interleave;
//   - straight-arc: a segment attached at height j crosses exactly the
//     column arcs that cover j on the side facing the partner column.
// Arcs bulge less than the inter-column gap, so arcs of distinct columns
// never meet, and the side facing the partner is the side drawn below the
// abstract spine axis.

#include <array>
#include <cstdint>
#include <vector>

#include "aqcross/arcdiagram.hpp"
#include "aqcross/partition.hpp"
#include "aqcross/report.hpp"

namespace aqcross {

struct Column {
  PartId part;
  int x = 0;        // -2, -1, +1, +2
  int y_sign = 0;   // +1 upper half-plane, -1 lower
  bool reversed = false;  // j-order vs spine order (canonical naming)
  ArcDiagram diagram;
};

// A straight edge of the pair (U_i, V_i): connects u_{i,u_index} to
// v_{i,v_index}; dim is -(n-1) (horizontal, u_index == v_index) or n-1.
struct StraightEdge {
  int u_index = 0;
  int v_index = 0;
  int dim = 0;
};

class BlackLayout {
 public:
  explicit BlackLayout(int n);  // n >= 5 accepted; closed forms cover n >= 8

  int n() const { return n_; }
  const std::array<Column, 8>& columns() const { return columns_; }
  const Column& column(PartId id) const;

  // Straight edges of pair i (1..4), derived from actual adjacencies of the
  // canonical names, one horizontal and one diagonal per height index.
  const std::vector<StraightEdge>& straight_edges(int i) const;

  const CanonicalNames& names() const { return names_; }

 private:
  int n_;
  CanonicalNames names_;
  std::array<Column, 8> columns_;
  std::array<std::vector<StraightEdge>, 4> straight_;
};

struct BlackBreakdown {
  int n = 0;
  // per column pair i (1..4):
  std::array<std::int64_t, 4> column_internal{};   // both columns of the pair
  std::array<std::int64_t, 4> straight_straight{};
  std::array<std::int64_t, 4> straight_arc{};
  std::int64_t pair_total(int i) const {
    return column_internal[i - 1] + straight_straight[i - 1] + straight_arc[i - 1];
  }
  std::int64_t total = 0;
};

// Geometric crossing count of the black part; throws std::logic_error when
// the count disagrees with the closed form (checked for n >= 8).
BlackBreakdown count_black(int n);

// The layout-level identities behind the count: straight-straight equals
// 2^{n-4} per pair, the straight-arc term equals twice the below-side cover
// total per column, per-pair symmetry, and the closed-form equality.
VerifyReport verify_black(int n);

}  // namespace aqcross
