#include "aqcross/partition.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace aqcross {

namespace {

constexpr std::array<std::array<Vertex, 4>, 8> kSeeds = {{
    {0b00100, 0b00011, 0b00111, 0b00000},  // U1
    {0b00001, 0b00110, 0b00010, 0b00101},  // U2
    {0b10100, 0b10011, 0b10111, 0b10000},  // U3
    {0b10101, 0b10010, 0b10110, 0b10001},  // U4
    {0b01111, 0b01000, 0b01100, 0b01011},  // V1
    {0b01010, 0b01101, 0b01001, 0b01110},  // V2
    {0b11111, 0b11000, 0b11100, 0b11011},  // V3
    {0b11110, 0b11001, 0b11101, 0b11010},  // V4
}};

// Spine orientation per part: true = j counts down the spine
// (u_{i,j} = spine[2^{n-3}+1-j]). The unique assignment (given the U1
// direction that makes the black cover table start at 0) under which all
// seven family identities hold; pinned by verify_families.
constexpr std::array<bool, 8> kReversed = {
    true,   // U1
    false,  // U2
    true,   // U3
    true,   // U4
    false,  // V1
    true,   // V2
    false,  // V3
    false,  // V4
};

int part_slot(PartId id) {
  return (id.side == 'U' ? 0 : 4) + (id.index - 1);
}

}  // namespace

Vertex pi_embed(Vertex a, int n) {
  if (n < 2) throw std::invalid_argument("pi_embed: n must be >= 2");
  const Vertex low = a & ((Vertex{1} << (n - 1)) - 1);
  const Vertex b1 = (a >> (n - 2)) & 1u;
  const Vertex b2 = (a >> (n - 1)) & 1u;
  return low | (b1 << (n - 1)) | (b2 << n);
}

Vertex hat_partner(Vertex a, int m) {
  if (m < 4) throw std::invalid_argument("hat_partner: m must be >= 4");
  return a ^ ((Vertex{1} << (m - 2)) - 1);
}

std::vector<Vertex> omega(std::span<const Vertex> A, int n) {
  std::vector<Vertex> out;
  out.reserve(2 * A.size());
  for (Vertex a : A) {
    const Vertex p = pi_embed(a, n);
    out.push_back(p);
    out.push_back(hat_partner(p, n + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> omega_iter(std::span<const Vertex> A, int n, int k) {
  std::vector<Vertex> cur(A.begin(), A.end());
  for (int i = 0; i < k; ++i) {
    cur = omega(cur, n + i);
  }
  return cur;
}

EightParts eight_parts(int n) {
  if (n < 5) throw std::invalid_argument("eight_parts: n must be >= 5");
  EightParts p;
  p.n = n;
  for (int i = 0; i < 4; ++i) {
    p.U[i].assign(kSeeds[i].begin(), kSeeds[i].end());
    p.V[i].assign(kSeeds[4 + i].begin(), kSeeds[4 + i].end());
    p.U[i] = omega_iter(p.U[i], 5, n - 5);
    p.V[i] = omega_iter(p.V[i], 5, n - 5);
    std::sort(p.U[i].begin(), p.U[i].end());
    std::sort(p.V[i].begin(), p.V[i].end());
  }
  return p;
}

const std::array<Vertex, 4>& part_seed(PartId id) {
  return kSeeds[part_slot(id)];
}

ArcDiagram part_diagram(PartId id, int n) {
  if (n < 5) throw std::invalid_argument("part_diagram: n must be >= 5");
  return ArcDiagram::upsilon(n - 5, part_seed(id), 5);
}

EdgeClass classify_dim(int dim, int n) {
  if (dim == 1 || dim == 2) return EdgeClass::Red;
  if (dim == n || dim == -n) return EdgeClass::Blue;
  if ((dim <= -2 && dim >= -(n - 1)) || (dim >= 3 && dim <= n - 1))
    return EdgeClass::Black;
  throw std::invalid_argument("classify_dim: not an edge dimension of AQ_n");
}

EdgeClass classify_edge(const Edge& e, int n) { return classify_dim(e.dim, n); }

CanonicalNames::CanonicalNames(int n) : n_(n) {
  if (n < 5) throw std::invalid_argument("CanonicalNames: n must be >= 5");
  const int sz = part_size();
  for (const PartId id : kAllParts) {
    const int slot = part_slot(id);
    const ArcDiagram d = part_diagram(id, n);
    auto& arr = names_[slot];
    arr.assign(sz + 1, 0);
    for (int j = 1; j <= sz; ++j)
      arr[j] = kReversed[slot] ? d.spine_label(sz + 1 - j) : d.spine_label(j);
    auto& inv = inverse_[slot];
    inv.assign(std::size_t{1} << n, 0);
    for (int j = 1; j <= sz; ++j) inv[arr[j]] = j;
  }
  VerifyReport rep = verify_families(n);
  // the dim-2 family constrains nothing below n = 8; the other six suffice
  if (!rep.all_pass())
    throw std::logic_error("CanonicalNames: family identities failed at n=" +
                           std::to_string(n));
}

Vertex CanonicalNames::at(PartId id, int j) const {
  return names_[part_slot(id)][j];
}

const std::vector<Vertex>& CanonicalNames::family(PartId id) const {
  return names_[part_slot(id)];
}

bool CanonicalNames::reversed(PartId id) const { return kReversed[part_slot(id)]; }

int CanonicalNames::index_of(PartId id, Vertex v) const {
  const int j = inverse_[part_slot(id)][v];
  if (j == 0) throw std::invalid_argument("index_of: vertex not in part");
  return j;
}

VerifyReport verify_families(int n) {
  VerifyReport rep;
  // raw naming, so verification does not re-enter CanonicalNames
  struct RawNames {
    std::array<std::vector<Vertex>, 8> arr;
    int sz;
    Vertex at(PartId id, int j) const {
      return arr[(id.side == 'U' ? 0 : 4) + id.index - 1][j];
    }
  } nm;
  nm.sz = 1 << (n - 3);
  for (const PartId id : kAllParts) {
    const int slot = (id.side == 'U' ? 0 : 4) + id.index - 1;
    const ArcDiagram d = part_diagram(id, n);
    nm.arr[slot].assign(nm.sz + 1, 0);
    for (int j = 1; j <= nm.sz; ++j)
      nm.arr[slot][j] =
          kReversed[slot] ? d.spine_label(nm.sz + 1 - j) : d.spine_label(j);
  }

  const int sz = nm.sz;
  auto ed = [&](Vertex a, Vertex b, int want) {
    return adjacent_raw(a, b) && dim_raw(a, b) == want;
  };
  auto run = [&](const std::string& name, auto&& gen) {
    std::int64_t total = 0;
    std::string bad;
    gen(total, bad);
    rep.add(name, bad.empty(), std::to_string(total) + " pairs",
            bad.empty() ? std::to_string(total) + " pairs" : "counterexample",
            bad);
  };
  auto note = [](std::string& bad, PartId id, int j, Vertex a, Vertex b) {
    if (bad.empty())
      bad = id.str() + " j=" + std::to_string(j) + ": (" + std::to_string(a) +
            "," + std::to_string(b) + ")";
  };

  run("family dim=-(n-1): u_{i,j} v_{i,j}", [&](std::int64_t& total, std::string& bad) {
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= sz; ++j) {
        const Vertex a = nm.at({'U', i}, j), b = nm.at({'V', i}, j);
        ++total;
        if (!ed(a, b, -(n - 1))) note(bad, {'U', i}, j, a, b);
      }
  });
  run("family dim=(n-1): u_{i,j} v_{i,j+(-1)^{j-1}}",
      [&](std::int64_t& total, std::string& bad) {
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= sz; ++j) {
            const int jj = (j % 2 == 1) ? j + 1 : j - 1;
            const Vertex a = nm.at({'U', i}, j), b = nm.at({'V', i}, jj);
            ++total;
            if (!ed(a, b, n - 1)) note(bad, {'U', i}, j, a, b);
          }
      });
  run("family dim=-(n-2): consecutive pairs", [&](std::int64_t& total, std::string& bad) {
    for (const PartId id : kAllParts)
      for (int j = 1; 2 * j <= sz; ++j) {
        const Vertex a = nm.at(id, 2 * j - 1), b = nm.at(id, 2 * j);
        ++total;
        if (!ed(a, b, -(n - 2))) note(bad, id, j, a, b);
      }
  });
  run("family dim=1: index-aligned pairs", [&](std::int64_t& total, std::string& bad) {
    const std::array<std::pair<PartId, PartId>, 4> pairs = {
        {{{'U', 1}, {'U', 2}}, {{'V', 1}, {'V', 2}}, {{'U', 3}, {'U', 4}}, {{'V', 3}, {'V', 4}}}};
    for (auto [A, B] : pairs)
      for (int j = 1; j <= sz; ++j) {
        const Vertex a = nm.at(A, j), b = nm.at(B, j);
        ++total;
        if (!ed(a, b, 1)) note(bad, A, j, a, b);
      }
  });
  if (n >= 8) {
    run("family dim=2: index shifted by 2^{n-4} mod 2^{n-3}",
        [&](std::int64_t& total, std::string& bad) {
          const std::array<std::pair<PartId, PartId>, 4> pairs = {
              {{{'U', 1}, {'U', 2}}, {{'V', 1}, {'V', 2}}, {{'U', 3}, {'U', 4}}, {{'V', 3}, {'V', 4}}}};
          const int shift = 1 << (n - 4);
          for (auto [A, B] : pairs)
            for (int j = 1; j <= sz; ++j) {
              const int jj = (j + shift - 1) % sz + 1;  // least positive residue
              const Vertex a = nm.at(A, j), b = nm.at(B, jj);
              ++total;
              if (!ed(a, b, 2)) note(bad, A, j, a, b);
            }
        });
  }
  run("family dim=n: index-aligned pairs", [&](std::int64_t& total, std::string& bad) {
    const std::array<std::pair<PartId, PartId>, 4> pairs = {
        {{{'U', 1}, {'U', 3}}, {{'V', 1}, {'V', 3}}, {{'U', 2}, {'U', 4}}, {{'V', 2}, {'V', 4}}}};
    for (auto [A, B] : pairs)
      for (int j = 1; j <= sz; ++j) {
        const Vertex a = nm.at(A, j), b = nm.at(B, j);
        ++total;
        if (!ed(a, b, n)) note(bad, A, j, a, b);
      }
  });
  run("family dim=-n: index-aligned cross pairs", [&](std::int64_t& total, std::string& bad) {
    const std::array<std::pair<PartId, PartId>, 4> pairs = {
        {{{'U', 1}, {'V', 3}}, {{'V', 1}, {'U', 3}}, {{'U', 2}, {'V', 4}}, {{'V', 2}, {'U', 4}}}};
    for (auto [A, B] : pairs)
      for (int j = 1; j <= sz; ++j) {
        const Vertex a = nm.at(A, j), b = nm.at(B, j);
        ++total;
        if (!ed(a, b, -n)) note(bad, A, j, a, b);
      }
  });
  return rep;
}

namespace {

std::string edge_str(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

VerifyReport verify_lemma_partition(int n) {
  if (n < 5) throw std::invalid_argument("verify_lemma_partition: n must be >= 5");
  VerifyReport rep;
  const AugmentedCube g(n);
  const EightParts parts = eight_parts(n);

  // membership lookup: which part holds each vertex
  std::vector<int> slot_of(g.vertex_count(), -1);
  for (int i = 0; i < 4; ++i) {
    for (Vertex v : parts.U[i]) slot_of[v] = i;
    for (Vertex v : parts.V[i]) slot_of[v] = 4 + i;
  }

  auto unordered_slots = [&](const Edge& e) {
    int x = slot_of[e.a], y = slot_of[e.b];
    if (x > y) std::swap(x, y);
    return std::pair<int, int>{x, y};
  };

  const auto edges = g.edges();

  // row 1: dims {1,2} <-> E[U1,U2] u E[U3,U4] u E[V1,V2] u E[V3,V4]
  // row 2: dim n <-> E[U1,U3] u E[U2,U4] u E[V1,V3] u E[V2,V4]
  // row 3: dim -n <-> E[U1,V3] u E[U2,V4] u E[V1,U3] u E[V2,U4]
  // row 4: dims [-(n-2),-2] u [3,n-2] <-> internal to a single part
  // row 5: dims {-(n-1),n-1} <-> E[U_i,V_i]
  struct Row {
    std::string name;
    std::int64_t count = 0;
    std::string bad;
  };
  std::array<Row, 5> rows = {{{"partition row dims {1,2}", 0, ""},
                              {"partition row dim n", 0, ""},
                              {"partition row dim -n", 0, ""},
                              {"partition row internal dims", 0, ""},
                              {"partition row dims {-(n-1),n-1}", 0, ""}}};

  auto fail_row = [&](Row& r, const Edge& e) {
    if (r.bad.empty()) r.bad = "edge " + edge_str(e.a, e.b) + " dim " + std::to_string(e.dim);
  };

  const std::array<std::pair<int, int>, 4> red_pairs = {{{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
  const std::array<std::pair<int, int>, 4> top_pairs = {{{0, 2}, {1, 3}, {4, 6}, {5, 7}}};
  const std::array<std::pair<int, int>, 4> neg_pairs = {{{0, 6}, {1, 7}, {2, 4}, {3, 5}}};
  const std::array<std::pair<int, int>, 4> straight_pairs = {{{0, 4}, {1, 5}, {2, 6}, {3, 7}}};

  auto in_pairs = [](const std::array<std::pair<int, int>, 4>& ps,
                     std::pair<int, int> q) {
    for (auto p : ps)
      if (p == q || (p.first == q.second && p.second == q.first)) return true;
    return false;
  };

  std::string side_bad;
  std::int64_t side_count = 0;
  for (const Edge& e : edges) {
    const auto q = unordered_slots(e);
    const bool is_red = (e.dim == 1 || e.dim == 2);
    const bool is_top = (e.dim == n);
    const bool is_neg = (e.dim == -n);
    const bool is_internal =
        (e.dim >= -(n - 2) && e.dim <= -2) || (e.dim >= 3 && e.dim <= n - 2);
    const bool is_straight = (e.dim == n - 1 || e.dim == -(n - 1));

    rows[0].count += is_red;
    if (is_red != in_pairs(red_pairs, q)) fail_row(rows[0], e);
    rows[1].count += is_top;
    if (is_top != in_pairs(top_pairs, q)) fail_row(rows[1], e);
    rows[2].count += is_neg;
    if (is_neg != in_pairs(neg_pairs, q)) fail_row(rows[2], e);
    rows[3].count += is_internal;
    if (is_internal != (q.first == q.second)) fail_row(rows[3], e);
    rows[4].count += is_straight;
    if (is_straight != in_pairs(straight_pairs, q)) fail_row(rows[4], e);

    // edges across the U/V split carry exactly the dims {-n, -(n-1), n-1}
    const bool crosses_side = ((e.a >> (n - 2)) & 1u) != ((e.b >> (n - 2)) & 1u);
    const bool side_dims = is_neg || is_straight;
    side_count += crosses_side;
    if (crosses_side != side_dims && side_bad.empty())
      side_bad = "edge " + edge_str(e.a, e.b) + " dim " + std::to_string(e.dim);
  }
  for (Row& r : rows)
    rep.add(r.name, r.bad.empty(), std::to_string(r.count) + " edges",
            r.bad.empty() ? std::to_string(r.count) + " edges" : "counterexample",
            r.bad);
  rep.add("U/V cross edges have dims {-n,-(n-1),n-1}", side_bad.empty(),
          std::to_string(side_count) + " edges",
          side_bad.empty() ? std::to_string(side_count) + " edges" : "counterexample",
          side_bad);

  // lifting conclusions: |E[Omega(u), Omega(v)]| and lifted dimensions
  {
    std::int64_t pairs = 0;
    std::string bad;
    const Vertex vmax = static_cast<Vertex>(g.vertex_count());
    auto omega_pair = [&](Vertex a) {
      const Vertex p = pi_embed(a, n);
      return std::array<Vertex, 2>{p, hat_partner(p, n + 1)};
    };
    auto lifted_edges = [&](Vertex u, Vertex v) {
      std::vector<std::pair<Vertex, Vertex>> out;
      for (Vertex x : omega_pair(u))
        for (Vertex y : omega_pair(v))
          if (adjacent_raw(x, y)) out.emplace_back(x, y);
      return out;
    };
    for (Vertex u = 0; u < vmax && bad.empty(); ++u) {
      for (Vertex v = u + 1; v < vmax; ++v) {
        ++pairs;
        const auto lifted = lifted_edges(u, v);
        if (!adjacent_raw(u, v)) {
          if (!lifted.empty()) {
            bad = "nonadjacent " + edge_str(u, v) + " lifts to " +
                  std::to_string(lifted.size()) + " edges";
            break;
          }
          continue;
        }
        const int d = dim_raw(u, v);
        std::size_t want = 2;
        if (d == -(n - 1) || d == -(n - 2)) want = 4;
        if (d == n - 1) want = 0;
        if (lifted.size() != want) {
          bad = "edge " + edge_str(u, v) + " dim " + std::to_string(d) +
                " lifts to " + std::to_string(lifted.size()) + " edges";
          break;
        }
        const Vertex pu = pi_embed(u, n), pv = pi_embed(v, n);
        if (want == 2) {
          // exactly the structural and complemented copies, never a cross pair
          bool has_struct = false, has_comp = false;
          for (auto [x, y] : lifted) {
            has_struct = has_struct || (x == pu && y == pv);
            has_comp = has_comp || (x == hat_partner(pu, n + 1) &&
                                    y == hat_partner(pv, n + 1));
          }
          if (!has_struct || !has_comp) {
            bad = "edge " + edge_str(u, v) + " lifts to a cross pair";
            break;
          }
        }
        // lifted dimensions
        for (auto [x, y] : lifted) {
          const bool structural = (x == pu && y == pv);
          const bool complemented =
              (x == hat_partner(pu, n + 1) && y == hat_partner(pv, n + 1));
          int want_dim;
          if (structural || complemented) {
            if (d == -n || d == -(n - 1))
              want_dim = d - 1;
            else if (d == n)
              want_dim = n + 1;
            else
              want_dim = d;
          } else {
            want_dim = (d == -(n - 1)) ? n : (n - 1);  // cross edges
          }
          if (dim_raw(x, y) != want_dim) {
            bad = "lift of " + edge_str(u, v) + ": " + edge_str(x, y) +
                  " has dim " + std::to_string(dim_raw(x, y)) + " want " +
                  std::to_string(want_dim);
            break;
          }
        }
        if (!bad.empty()) break;
      }
    }
    rep.add("lifting conclusions on E[Omega(u),Omega(v)]", bad.empty(),
            std::to_string(pairs) + " pairs",
            bad.empty() ? std::to_string(pairs) + " pairs" : "counterexample",
            bad);
  }
  return rep;
}

void write_eight_parts_json(std::ostream& os, const EightParts& p) {
  auto emit = [&](const std::vector<Vertex>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  os << "{\"n\":" << p.n << ",\"U\":[";
  for (int i = 0; i < 4; ++i) {
    if (i) os << ',';
    emit(p.U[i]);
  }
  os << "],\"V\":[";
  for (int i = 0; i < 4; ++i) {
    if (i) os << ',';
    emit(p.V[i]);
  }
  os << "]}\n";
}

void write_canonical_names_json(std::ostream& os, const CanonicalNames& names) {
  os << "{\"n\":" << names.n() << ",\"half_index\":" << names.half_index();
  for (char side : {'U', 'V'}) {
    os << ",\"" << static_cast<char>(side + 32) << "\":[";
    for (int i = 1; i <= 4; ++i) {
      if (i > 1) os << ',';
      os << '[';
      for (int j = 1; j <= names.part_size(); ++j)
        os << (j > 1 ? "," : "") << names.at({side, i}, j);
      os << ']';
    }
    os << ']';
  }
  os << "}\n";
}

}  // namespace aqcross
