#include "aqcross/blacklayout.hpp"

#include <stdexcept>

#include "aqcross/formulas.hpp"

namespace aqcross {

namespace {

struct Slot {
  PartId part;
  int x;
  int y_sign;
};

// column placement: pairs (U_i, V_i) occupy horizontally adjacent slots
constexpr std::array<Slot, 8> kSlots = {{
    {{'U', 1}, -2, +1},
    {{'V', 1}, -1, +1},
    {{'V', 2}, +1, +1},
    {{'U', 2}, +2, +1},
    {{'U', 3}, -2, -1},
    {{'V', 3}, -1, -1},
    {{'V', 4}, +1, -1},
    {{'U', 4}, +2, -1},
}};

}  // namespace

BlackLayout::BlackLayout(int n) : n_(n), names_(n) {
  if (n < 5) throw std::invalid_argument("BlackLayout: n must be >= 5");
  for (std::size_t s = 0; s < kSlots.size(); ++s) {
    const Slot& slot = kSlots[s];
    columns_[s] = Column{slot.part, slot.x, slot.y_sign,
                         names_.reversed(slot.part), part_diagram(slot.part, n)};
  }
  const AugmentedCube g(n);
  const int sz = names_.part_size();
  for (int i = 1; i <= 4; ++i) {
    auto& edges = straight_[i - 1];
    edges.reserve(2 * sz);
    for (int j = 1; j <= sz; ++j) {
      const Vertex u = names_.at({'U', i}, j);
      for (int t : {-(n - 1), n - 1}) {
        const Vertex partner = g.neighbor_along(u, t);
        edges.push_back({j, names_.index_of({'V', i}, partner), t});
      }
    }
  }
}

const Column& BlackLayout::column(PartId id) const {
  for (const Column& c : columns_)
    if (c.part == id) return c;
  throw std::invalid_argument("column: unknown part");
}

const std::vector<StraightEdge>& BlackLayout::straight_edges(int i) const {
  if (i < 1 || i > 4) throw std::invalid_argument("straight_edges: i in [1,4]");
  return straight_[i - 1];
}

namespace {

// cover counts on the partner-facing side (below-side arcs), indexed by the
// column's height order j
std::vector<std::int64_t> facing_cover_by_height(const Column& col) {
  const CoverProfile p = cover_profile(col.diagram, ArcSubsetId::all());
  const int sz = col.diagram.spine_size();
  std::vector<std::int64_t> out(sz + 1, 0);
  for (int j = 1; j <= sz; ++j)
    out[j] = p.cover_below[col.reversed ? sz + 1 - j : j];
  return out;
}

}  // namespace

BlackBreakdown count_black(int n) {
  const BlackLayout layout(n);
  BlackBreakdown b;
  b.n = n;
  for (int i = 1; i <= 4; ++i) {
    const Column& cu = layout.column({'U', i});
    const Column& cv = layout.column({'V', i});
    b.column_internal[i - 1] =
        count_crossings(cu.diagram.arcs()) + count_crossings(cv.diagram.arcs());

    const auto& seg = layout.straight_edges(i);
    std::int64_t ss = 0;
    for (std::size_t x = 0; x < seg.size(); ++x)
      for (std::size_t y = x + 1; y < seg.size(); ++y) {
        const auto& e1 = seg[x];
        const auto& e2 = seg[y];
        const long long du = e1.u_index - e2.u_index;
        const long long dv = e1.v_index - e2.v_index;
        ss += du * dv < 0;  // segments cross iff their endpoint orders flip
      }
    b.straight_straight[i - 1] = ss;

    const auto cov_u = facing_cover_by_height(cu);
    const auto cov_v = facing_cover_by_height(cv);
    std::int64_t sa = 0;
    for (const StraightEdge& e : seg) sa += cov_u[e.u_index] + cov_v[e.v_index];
    b.straight_arc[i - 1] = sa;

    b.total += b.pair_total(i);
  }

  if (n >= 8) {
    const Int closed = component(n, Component::Black);
    if (Int(b.total) != closed)
      throw std::logic_error("count_black: geometric " + std::to_string(b.total) +
                             " != closed " + closed.str() + " at n=" + std::to_string(n));
  }
  return b;
}

VerifyReport verify_black(int n) {
  if (n < 8) throw std::invalid_argument("verify_black: n must be >= 8");
  VerifyReport rep;
  BlackBreakdown b;
  try {
    b = count_black(n);
  } catch (const std::logic_error& err) {
    rep.add("black n=" + std::to_string(n) + " geometric == closed form", false, "",
            "", err.what());
    return rep;
  }
  const std::string tag = " n=" + std::to_string(n);
  const Int closed = component(n, Component::Black);
  rep.add("black total" + tag, Int(b.total) == closed, closed.str(),
          std::to_string(b.total));

  const std::int64_t want_ss = std::int64_t{1} << (n - 4);
  const std::int64_t want_sa = 4 * to_int64(to_integer(cover_below_form(n - 5)));
  const std::int64_t want_internal = 2 * to_int64(to_integer(upsilon_form(n - 5)));
  for (int i = 1; i <= 4; ++i) {
    const std::string p = " pair " + std::to_string(i) + tag;
    rep.add("black straight-straight" + p, b.straight_straight[i - 1] == want_ss,
            std::to_string(want_ss), std::to_string(b.straight_straight[i - 1]));
    rep.add("black straight-arc" + p, b.straight_arc[i - 1] == want_sa,
            std::to_string(want_sa), std::to_string(b.straight_arc[i - 1]));
    rep.add("black column-internal" + p, b.column_internal[i - 1] == want_internal,
            std::to_string(want_internal), std::to_string(b.column_internal[i - 1]));
  }
  const bool symmetric = b.pair_total(1) == b.pair_total(2) &&
                         b.pair_total(2) == b.pair_total(3) &&
                         b.pair_total(3) == b.pair_total(4);
  rep.add("black per-pair symmetry" + tag, symmetric,
          std::to_string(b.pair_total(1)),
          std::to_string(b.pair_total(1)) + "," + std::to_string(b.pair_total(2)) +
              "," + std::to_string(b.pair_total(3)) + "," +
              std::to_string(b.pair_total(4)));
  return rep;
}

}  // namespace aqcross
