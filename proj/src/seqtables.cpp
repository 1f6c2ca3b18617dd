#include "aqcross/seqtables.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "aqcross/arcdiagram.hpp"
#include "aqcross/formulas.hpp"
#include "aqcross/partition.hpp"

namespace aqcross {

namespace {

const std::vector<std::int64_t> kSBase = {0, 22, 20, 18, 16, 14, 12, 10, 10, 10,
                                          8,  6,  6,  6,  6,  6,  6,  6};
const std::vector<std::int64_t> kTBase = {0, 0,  10, 16, 22, 24, 30, 32, 34, 32,
                                          38, 40, 42, 40, 42, 40, 38, 32};

void check_n(int n) {
  if (n < 8) throw std::invalid_argument("cover sequences: n must be >= 8");
  if (n > 24) throw std::invalid_argument("cover sequences: n too large");
}

// one doubling step of either sequence; extra = 2 for t, 0 for s
std::vector<std::int64_t> double_step(const std::vector<std::int64_t>& prev,
                                      int prev_n, std::int64_t extra) {
  const int half = 1 << (prev_n - 4);
  std::vector<std::int64_t> out(2 * half + 2, 0);
  for (int j = 1; j <= half + 1; ++j) out[2 * j - 1] = 2 * prev[j];
  for (int j = 1; j <= half; ++j) out[2 * j] = prev[j] + prev[j + 1] + extra;
  return out;
}

}  // namespace

const std::vector<std::int64_t>& s_base_row() { return kSBase; }
const std::vector<std::int64_t>& t_base_row() { return kTBase; }

ColumnCoverCounts column_cover_counts(int n) {
  check_n(n);
  const ArcDiagram d = part_diagram({'U', 1}, n);
  const CanonicalNames names(n);
  const int sz = d.spine_size();          // 2^{n-3}
  const int top = 1 << (n - 4);           // heights of the outer half
  const bool rev = names.reversed({'U', 1});

  ColumnCoverCounts c;
  c.covering.assign(top + 2, 0);
  c.upward.assign(top + 2, 0);
  c.downward.assign(top + 2, 0);

  std::vector<std::int64_t> diff(top + 3, 0);
  auto height = [&](int spine_pos) { return rev ? sz + 1 - spine_pos : spine_pos; };
  for (const Arc& arc : d.arcs()) {
    int a = height(arc.lo), b = height(arc.hi);
    if (a > b) std::swap(a, b);
    // covering: heights strictly inside (a, b), clipped to the outer half
    const int lo = a + 1, hi = std::min(b - 1, top);
    if (lo <= hi) {
      diff[lo] += 1;
      diff[hi + 1] -= 1;
    }
    if (b <= top) c.upward[b] += 1;   // at its lower end the arc heads up
    if (a <= top) c.downward[a] += 1;
  }
  std::int64_t run = 0;
  for (int j = 1; j <= top; ++j) {
    run += diff[j];
    c.covering[j] = run;
  }
  return c;
}

std::vector<std::int64_t> t_prime_geometric(int n) {
  check_n(n);
  const ColumnCoverCounts c = column_cover_counts(n);
  const int top = 1 << (n - 4);
  std::vector<std::int64_t> tp(top + 2, 0);
  for (int j = 1; j <= top; ++j) tp[j] = c.covering[j] + c.upward[j];
  tp[top + 1] = c.covering[top] + c.downward[top];
  return tp;
}

std::vector<std::int64_t> t_table_geometric(int n) {
  std::vector<std::int64_t> t = t_prime_geometric(n);
  // the diagonal straight edge heads upward at even heights
  for (std::size_t j = 1; j < t.size(); ++j)
    if (j % 2 == 0) t[j] += 1;
  return t;
}

std::vector<std::int64_t> t_table_recurrence(int n) {
  check_n(n);
  std::vector<std::int64_t> t = kTBase;
  for (int k = 9; k <= n; ++k) t = double_step(t, k - 1, 2);
  return t;
}

std::vector<std::int64_t> s_table(int n) {
  check_n(n);
  std::vector<std::int64_t> s = kSBase;
  for (int k = 9; k <= n; ++k) s = double_step(s, k - 1, 0);
  return s;
}

CoverSequences cover_sequences(int n) {
  check_n(n);
  CoverSequences seq;
  seq.n = n;
  seq.s = s_table(n);
  seq.t = t_table_recurrence(n);
  if (n <= 20) {
    const auto geo = t_table_geometric(n);
    if (geo != seq.t)
      throw std::logic_error(
          "cover_sequences: geometric and recurrence t tables disagree at n=" +
          std::to_string(n));
    seq.t_prime = t_prime_geometric(n);
  } else {
    seq.t_prime.assign(seq.t.begin(), seq.t.end());
    for (std::size_t j = 1; j < seq.t_prime.size(); ++j)
      if (j % 2 == 0) seq.t_prime[j] -= 1;
  }
  return seq;
}

VerifyReport special_index_identities(int n) {
  check_n(n);
  VerifyReport rep;
  const auto s = s_table(n);
  const auto t = t_table_recurrence(n);
  const std::int64_t q = std::int64_t{1} << (n - 7);
  const std::int64_t scale = std::int64_t{1} << (n - 8);
  const std::string tag = " n=" + std::to_string(n);

  auto check_seq = [&](const std::string& name, auto&& expect, int j_lo, int j_hi,
                       const std::vector<std::int64_t>& table, int offset) {
    std::string bad;
    for (int j = j_lo; j <= j_hi; ++j) {
      const std::int64_t got = table[j * q + offset];
      const std::int64_t want = expect(j);
      if (got != want && bad.empty())
        bad = "j=" + std::to_string(j) + ": " + std::to_string(got) +
              " != " + std::to_string(want);
    }
    rep.add(name + tag, bad.empty(), "all indices", bad.empty() ? "all indices" : bad,
            bad);
  };

  check_seq("s at j*2^{n-7}+1", [&](int j) { return scale * kSBase[2 * j + 1]; }, 0, 8,
            s, 1);
  check_seq("s at j*2^{n-7}",
            [&](int j) { return kSBase[2 * j] + (scale - 1) * kSBase[2 * j + 1]; }, 1,
            8, s, 0);
  check_seq("s at j*2^{n-7}+2",
            [&](int j) { return (scale - 1) * kSBase[2 * j + 1] + kSBase[2 * j + 2]; },
            1, 7, s, 2);
  check_seq("t at j*2^{n-7}+1", [&](int j) { return scale * kTBase[2 * j + 1]; }, 0, 8,
            t, 1);
  check_seq("t at j*2^{n-7}",
            [&](int j) {
              return kTBase[2 * j] + (scale - 1) * kTBase[2 * j + 1] + 2 * (n - 8);
            },
            1, 8, t, 0);
  check_seq("t at j*2^{n-7}+2",
            [&](int j) {
              return (scale - 1) * kTBase[2 * j + 1] + kTBase[2 * j + 2] + 2 * (n - 8);
            },
            1, 7, t, 2);

  std::int64_t s_sum = 0, t_sum = 0;
  const int last = (1 << (n - 4)) + 1;
  for (int j = 1; j <= last; ++j) {
    s_sum += s[j];
    t_sum += t[j];
  }
  const Int s_want = 182 * pow2(2 * n - 16) - 7 * pow2(2 * n - 15) + 7 * pow2(n - 7);
  const Int t_want = 512 * pow2(2 * n - 16);
  rep.add("sum of s" + tag, Int(s_sum) == s_want, s_want.str(), std::to_string(s_sum));
  rep.add("sum of t" + tag, Int(t_sum) == t_want, t_want.str(), std::to_string(t_sum));
  return rep;
}

namespace {

std::int64_t inner_sum(const std::vector<std::int64_t>& tab, int n, bool with_first) {
  const std::int64_t q = std::int64_t{1} << (n - 7);
  const int last = (1 << (n - 4)) + 1;
  std::int64_t total = 0;
  for (int j = 1; j <= last; ++j) total += tab[j];
  for (int j = 2; j <= 6; ++j) total += tab[j * q + 1];
  for (int j = 2; j <= 6; ++j) total -= tab[j * q];
  total -= tab[6 * q + 2];
  // bunch multiplicities entering the column at the special heights
  if (with_first) total += (std::int64_t{1} << (n - 5)) * tab[1];
  total += (std::int64_t{1} << (n - 7)) * tab[4 * q + 1];
  total += (std::int64_t{1} << (n - 8)) * tab[5 * q + 1];
  total += (std::int64_t{1} << (n - 8)) * tab[6 * q + 1];
  total += (std::int64_t{1} << (n - 6)) * tab[8 * q + 1];
  return total;
}

}  // namespace

std::int64_t blue_red_inner(int n) {
  check_n(n);
  const std::int64_t got = inner_sum(s_table(n), n, true);
  const std::int64_t want = to_int64(blue_red_inner_form(n));
  if (got != want)
    throw std::logic_error("blue_red_inner: " + std::to_string(got) +
                           " != " + std::to_string(want) + " at n=" + std::to_string(n));
  return got;
}

std::int64_t blue_black_inner(int n) {
  check_n(n);
  // t_{n,1} = 0, so the height-1 bunch contributes nothing
  std::int64_t got = inner_sum(t_table_recurrence(n), n, true);
  got += to_int64(bunch_sum_form(n));
  const std::int64_t want = to_int64(blue_black_inner_form(n));
  if (got != want)
    throw std::logic_error("blue_black_inner: " + std::to_string(got) +
                           " != " + std::to_string(want) + " at n=" + std::to_string(n));
  return got;
}

void write_cover_sequences_csv(std::ostream& os, const CoverSequences& seq) {
  os << "j,s,t,t_prime\n";
  const int last = (1 << (seq.n - 4)) + 1;
  for (int j = 1; j <= last; ++j)
    os << j << ',' << seq.s[j] << ',' << seq.t[j] << ',' << seq.t_prime[j] << '\n';
}

}  // namespace aqcross
