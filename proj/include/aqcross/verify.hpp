#pragma once
// Verification suites: every invariant and closed-form comparison, grouped by
// scope. The CLI's verify command and the acceptance tests are thin wrappers
// over these.

#include "aqcross/report.hpp"

namespace aqcross {

// Arc-diagram brute force vs. every closed form and structural invariant,
// for levels m_lo..m_hi (lift checks build level m+1).
VerifyReport verify_upsilon_scope(int m_lo, int m_hi);

// Black layout geometric counts vs. closed forms, n_lo..n_hi (n >= 8).
VerifyReport verify_black_scope(int n_lo, int n_hi);

// Cover sequences: geometry vs. recurrences, base rows, shift identity,
// special-index identities, inner sums; n_lo..n_hi (n >= 8).
VerifyReport verify_sequences_scope(int n_lo, int n_hi);

// Exact formula layer: component assembly, totals, integrality, bound chain,
// lower bound, small cases; n_lo..n_hi (formulas range, n >= 8).
VerifyReport verify_formulas_scope(int n_lo, int n_hi);

// Graph layer: counts, regularity, recursive vs. direct construction,
// dimension labels; n_lo..n_hi (n >= 1).
VerifyReport verify_graph_scope(int n_lo, int n_hi);

// Partition layer: lifting maps, eight parts, edge classes, partition lemma,
// family identities; n_lo..n_hi (n >= 5).
VerifyReport verify_partition_scope(int n_lo, int n_hi);

}  // namespace aqcross
