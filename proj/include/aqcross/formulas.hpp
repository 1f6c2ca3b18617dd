#pragma once
// Exact evaluation of every closed form: the arc-diagram lemma formulas, the
// six component counts of the global drawing, the assembled total, the upper
// and lower bounds, and the small-case table. All arithmetic is exact
// rational; a non-integral crossing count or a sub-term assembly that
// disagrees with its collapsed form is a hard failure (std::logic_error).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aqcross {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& r);
Int to_integer(const Rational& r);  // throws std::logic_error if not integral
std::int64_t to_int64(const Int& v);

Int pow2(int e);             // 2^e, e >= 0
Int binomial2(const Int& m);  // m parallel-line bunches pairwise cross C(m,2) times
inline Int bunch_crossings(const Int& m) { return binomial2(m); }

// ---- arc-diagram closed forms (level m) ----

// total covering counts above/below the spine, m >= 0
Rational cover_above_form(int m);
Rational cover_below_form(int m);

// per-octant covering sums of the full arc set, t in [1,8]; m >= 1
Rational octant_above_form(int m, int t);
Rational octant_below_form(int m, int t);

// crossings within the spanning arcs, m >= 1
Rational spanning_form(int m);

// crossings between spanning arcs and the left-half internal arcs, m >= 2
Rational spanning_left_form(int m);

// crossings of the whole level-m diagram, m >= 1
Rational upsilon_form(int m);

// All forms defined at level m, as checked integers.
struct LemmaForms {
  int m = 0;
  Int cover_above;
  Int cover_below;
  Int spanning;         // m >= 1
  Int spanning_left;    // m >= 2
  Int upsilon_total;    // m >= 1
  std::array<Int, 8> octant_above{};  // m >= 1
  std::array<Int, 8> octant_below{};
};
LemmaForms lemma_forms(int m);

// ---- global drawing components (n >= 8) ----

enum class Component { Blue, Red, Black, RedBlack, BlueRed, BlueBlack };
const char* component_name(Component c);

// Closed-form inner sums of the blue-against-red and blue-against-black
// calculations (the table-evaluated counterparts live in seqtables).
Int blue_red_inner_form(int n);
Int blue_black_inner_form(int n);
// 2 C(2^{n-7},2) + 4 C(2^{n-8},2) + 2 C(2^{n-6},2) = 11*2^{2n-15} - 2^{n-5}
Int bunch_sum_form(int n);

// Exact component count, assembled from its sub-terms and checked against
// the collapsed closed form.
Int component(int n, Component which);

// Sum of the six components, checked against the collapsed total form.
Int total(int n);

Rational upper_bound(int n);         // the strict upper bound on the total
bool check_bound(int n);             // total(n) < upper_bound(n), strict
Rational lower_bound(int n);         // congestion-based lower bound, n >= 2
int first_positive_lower_bound();    // least n with lower_bound(n) > 0

// Strictly increasing chain between the total and the bound.
Rational chain_step1(int n);  // total < step1
Rational chain_step2(int n);  // step1 < step2 < upper_bound

struct SmallCase {
  int n = 0;
  Int value;
  bool exact = false;  // false: recorded upper bound
};
std::vector<SmallCase> small_cases();

}  // namespace aqcross
