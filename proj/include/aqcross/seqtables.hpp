#pragma once
// The covering sequences s_{n,j}, t_{n,j}, t'_{n,j} (j in [1, 2^{n-4}+1]).
//
// t'_{n,j} counts, over the internal arcs of the U_1 column, the arcs that
// cover height j plus the arcs attached at j heading toward smaller j
// ("upward", toward larger |Y|); the last entry uses the downward count at
// the previous height instead. t adds the straight dim +-(n-1) edges of the
// pair: the horizontal edge adds nothing, the diagonal adds 1 upward at even
// j and 1 downward at odd j. s is the red-edge analogue; its geometry lives
// only in the base-8 drawing, so the base row is data of record and higher n
// come from the doubling recurrences:
//   s_{n,2j-1} = 2 s_{n-1,j}        t_{n,2j-1} = 2 t_{n-1,j}
//   s_{n,2j}   = s_{n-1,j}+s_{n-1,j+1}   t_{n,2j} = t_{n-1,j}+t_{n-1,j+1}+2
// t is computed both ways (geometry and recurrence) and must agree.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "aqcross/report.hpp"

namespace aqcross {

struct CoverSequences {
  int n = 0;
  // 1-based, size 2^{n-4}+2; index 0 unused
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> t;
  std::vector<std::int64_t> t_prime;
};

// Raw per-height quantities of the U_1 column arcs, heights 1..2^{n-4}
// (the outer half of the column): covering, upward-attached,
// downward-attached.
struct ColumnCoverCounts {
  std::vector<std::int64_t> covering;  // varpi
  std::vector<std::int64_t> upward;    // theta
  std::vector<std::int64_t> downward;  // sigma
};
ColumnCoverCounts column_cover_counts(int n);

std::vector<std::int64_t> t_prime_geometric(int n);      // n >= 8
std::vector<std::int64_t> t_table_geometric(int n);      // t' + parity rule
std::vector<std::int64_t> t_table_recurrence(int n);     // base row + recurrences
std::vector<std::int64_t> s_table(int n);                // base row + recurrences

// Builds all three sequences; throws std::logic_error when the geometric and
// recurrence routes for t disagree (cross-validated for n <= 20).
CoverSequences cover_sequences(int n);

// The fixed base rows at n = 8.
const std::vector<std::int64_t>& s_base_row();
const std::vector<std::int64_t>& t_base_row();

// Closed identities at the special indices j*2^{n-7}, j*2^{n-7}+1,
// j*2^{n-7}+2 plus the two full-sum identities.
VerifyReport special_index_identities(int n);

// Inner sums of the blue-against-red / blue-against-black counts, evaluated
// from the tables; throws std::logic_error when the value disagrees with the
// closed form.
std::int64_t blue_red_inner(int n);
std::int64_t blue_black_inner(int n);

// CSV export: header j,s,t,t_prime then one row per index.
void write_cover_sequences_csv(std::ostream& os, const CoverSequences& seq);

}  // namespace aqcross
