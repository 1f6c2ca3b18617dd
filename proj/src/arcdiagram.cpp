#include "aqcross/arcdiagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aqcross {

namespace {

// canonical seed: the U_1 quadruple of AQ_5
constexpr std::array<Vertex, 4> kDefaultSeed = {0b00100, 0b00011, 0b00111, 0b00000};

// child slots of parent slot i: the structural copy keeps the parent's
// position parity, the complemented copy takes the other slot of the pair
int child_main(int i) { return (i % 2 == 1) ? 2 * i - 1 : 2 * i; }
int child_comp(int i) { return (i % 2 == 1) ? 2 * i : 2 * i - 1; }

Vertex lift_pi(Vertex a, int n) {
  const Vertex low = a & ((Vertex{1} << (n - 1)) - 1);
  const Vertex b1 = (a >> (n - 2)) & 1u;
  const Vertex b2 = (a >> (n - 1)) & 1u;
  return low | (b1 << (n - 1)) | (b2 << n);
}

Vertex lift_hat(Vertex a, int n_target) {
  return a ^ ((Vertex{1} << (n_target - 2)) - 1);
}

}  // namespace

std::int64_t CoverProfile::total_above() const {
  std::int64_t s = 0;
  for (auto v : cover_above) s += v;
  return s;
}

std::int64_t CoverProfile::total_below() const {
  std::int64_t s = 0;
  for (auto v : cover_below) s += v;
  return s;
}

ArcDiagram ArcDiagram::upsilon(int m) { return upsilon(m, kDefaultSeed, 5); }

ArcDiagram ArcDiagram::upsilon(int m, const std::array<Vertex, 4>& seed, int seed_n) {
  if (m < 0) throw std::invalid_argument("upsilon: level must be >= 0");
  if (seed_n < 5) throw std::invalid_argument("upsilon: seed dimension must be >= 5");

  ArcDiagram d;
  d.m_ = m;
  d.seed_n_ = seed_n;
  d.spine_.assign(seed.begin(), seed.end());
  // level 0: the two dim -(N-2) arcs below, the four remaining arcs above
  d.arcs_ = {{1, 2, -1, 0}, {3, 4, -1, 0}, {1, 3, +1, 0},
             {2, 4, +1, 0}, {1, 4, +1, 0}, {2, 3, +1, 0}};

  for (int level = 1; level <= m; ++level) {
    const int ambient = seed_n + level;
    const int prev_size = 1 << (level + 1);

    std::vector<Vertex> spine(2 * prev_size);
    for (int i = 1; i <= prev_size; ++i) {
      const Vertex p = lift_pi(d.spine_[i - 1], ambient - 1);
      spine[child_main(i) - 1] = p;
      spine[child_comp(i) - 1] = lift_hat(p, ambient);
    }

    std::vector<Arc> arcs;
    arcs.reserve(2 * d.arcs_.size() + 3 * prev_size);

    // side flags of the previous level, for the new innermost arcs
    std::set<std::pair<int, int>> below;
    for (const Arc& a : d.arcs_)
      if (a.side == -1) below.insert({a.lo, a.hi});

    for (int i = 1; i <= prev_size; ++i) {
      const int partner = (i % 2 == 1) ? i + 1 : i - 1;
      const bool partner_below =
          below.count({std::min(i, partner), std::max(i, partner)}) > 0;
      arcs.push_back({2 * i - 1, 2 * i, partner_below ? +1 : -1, 0});
    }

    for (const Arc& a : d.arcs_) {
      const int k = a.lo, l = a.hi;
      if (l == k + 1 && k % 2 == 1) {
        // innermost arcs split into all four cross pairs, sides kept
        for (int x : {2 * k - 1, 2 * k})
          for (int y : {2 * l - 1, 2 * l})
            arcs.push_back({x, y, a.side, 0});
      } else if (l == k + 2 && (k % 4 == 1 || k % 4 == 2)) {
        // distance-2 arcs: structural pair flips side, complemented pair keeps it
        arcs.push_back({child_main(k), child_main(l), -a.side, 0});
        arcs.push_back({child_comp(k), child_comp(l), a.side, 0});
      } else {
        arcs.push_back({child_main(k), child_main(l), a.side, 0});
        arcs.push_back({child_comp(k), child_comp(l), a.side, 0});
      }
    }

    d.spine_ = std::move(spine);
    d.arcs_ = std::move(arcs);
  }

  for (Arc& a : d.arcs_) {
    if (a.lo > a.hi) std::swap(a.lo, a.hi);
    a.dim = dim_raw(d.spine_[a.lo - 1], d.spine_[a.hi - 1]);
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  return d;
}

std::pair<int, int> ArcDiagram::octant_interval(int t) const {
  if (m_ < 1) throw std::invalid_argument("octant_interval: level must be >= 1");
  if (t < 1 || t > 8) throw std::invalid_argument("octant_interval: t in [1,8]");
  const int w = 1 << (m_ - 1);
  return {(t - 1) * w + 1, t * w};
}

std::vector<Arc> ArcDiagram::subset(ArcSubsetId id) const {
  std::vector<Arc> out;
  const int half = spine_size() / 2;
  switch (id.kind) {
    case ArcSubsetId::All:
      return arcs_;
    case ArcSubsetId::LeftHalf:
      for (const Arc& a : arcs_)
        if (a.hi <= half) out.push_back(a);
      return out;
    case ArcSubsetId::RightHalf:
      for (const Arc& a : arcs_)
        if (a.lo > half) out.push_back(a);
      return out;
    case ArcSubsetId::Spanning:
      for (const Arc& a : arcs_)
        if (a.lo <= half && a.hi > half) out.push_back(a);
      return out;
    case ArcSubsetId::OctantInternal: {
      auto [lo, hi] = octant_interval(id.octant);
      for (const Arc& a : arcs_)
        if (a.lo >= lo && a.hi <= hi) out.push_back(a);
      return out;
    }
    case ArcSubsetId::CrossOctant: {
      if (m_ < 1) throw std::invalid_argument("subset: CrossOctant needs level >= 1");
      const int w = 1 << (m_ - 1);
      for (const Arc& a : arcs_)
        if ((a.lo - 1) / w != (a.hi - 1) / w) out.push_back(a);
      return out;
    }
  }
  return out;
}

namespace {

std::int64_t count_same_side(std::span<const Arc> sorted) {
  // sorted by (lo, hi); arcs b with b.lo in (a.lo, a.hi) and b.hi > a.hi cross a
  std::int64_t c = 0;
  const std::size_t n = sorted.size();
  for (std::size_t x = 0; x < n; ++x) {
    const Arc& a = sorted[x];
    for (std::size_t y = x + 1; y < n; ++y) {
      const Arc& b = sorted[y];
      if (b.lo >= a.hi) break;
      c += (b.lo > a.lo && b.hi > a.hi);
    }
  }
  return c;
}

bool interleaves(const Arc& a, const Arc& b) {
  if (a.side != b.side) return false;
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

}  // namespace

std::int64_t count_crossings(std::span<const Arc> a) {
  std::vector<Arc> above, below;
  for (const Arc& x : a) (x.side == +1 ? above : below).push_back(x);
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());
  return count_same_side(above) + count_same_side(below);
}

std::int64_t count_crossings(std::span<const Arc> a, std::span<const Arc> b) {
  std::set<std::tuple<int, int, int>> seen;
  for (const Arc& x : a) seen.insert({x.lo, x.hi, x.side});
  for (const Arc& x : b)
    if (seen.count({x.lo, x.hi, x.side}))
      throw std::invalid_argument("count_crossings: subsets overlap");

  std::int64_t c = 0;
  for (const Arc& x : a)
    for (const Arc& y : b) c += interleaves(x, y);
  return c;
}

CoverProfile cover_profile(const ArcDiagram& d, ArcSubsetId f) {
  auto arcs = d.subset(f);
  return cover_profile(d, arcs);
}

CoverProfile cover_profile(const ArcDiagram& d, std::span<const Arc> f) {
  const int n = d.spine_size();
  CoverProfile p;
  p.incident_above.assign(n + 1, 0);
  p.incident_below.assign(n + 1, 0);
  std::vector<std::int64_t> da(n + 2, 0), db(n + 2, 0);
  for (const Arc& a : f) {
    auto& inc = (a.side == +1) ? p.incident_above : p.incident_below;
    inc[a.lo] += 1;
    inc[a.hi] += 1;
    auto& diff = (a.side == +1) ? da : db;
    diff[a.lo + 1] += 1;
    diff[a.hi] -= 1;
  }
  p.cover_above.assign(n + 1, 0);
  p.cover_below.assign(n + 1, 0);
  std::int64_t ra = 0, rb = 0;
  for (int i = 1; i <= n; ++i) {
    ra += da[i];
    rb += db[i];
    p.cover_above[i] = ra;
    p.cover_below[i] = rb;
  }
  return p;
}

OctantSums octant_cover_sums(const ArcDiagram& d) {
  const CoverProfile p = cover_profile(d, ArcSubsetId::all());
  OctantSums s;
  for (int t = 1; t <= 8; ++t) {
    auto [lo, hi] = d.octant_interval(t);
    for (int i = lo; i <= hi; ++i) {
      s.above[t - 1] += p.cover_above[i];
      s.below[t - 1] += p.cover_below[i];
    }
  }
  return s;
}

std::pair<int, int> fiber(int t, int k) {
  if (t < 1 || k < 0) throw std::invalid_argument("fiber: t >= 1, k >= 0");
  return {(t - 1) * (1 << k) + 1, t * (1 << k)};
}

}  // namespace aqcross
