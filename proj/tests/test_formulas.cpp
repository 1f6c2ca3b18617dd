#include <doctest.h>

#include "aqcross/formulas.hpp"

using namespace aqcross;

TEST_CASE("exact value helpers") {
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(7, 3)));
  CHECK(to_integer(Rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_integer(Rational(1, 3)), std::logic_error);
  CHECK(pow2(10) == 1024);
  CHECK_THROWS_AS(pow2(-1), std::invalid_argument);
}

TEST_CASE("parallel bunches") {
  CHECK(bunch_crossings(0) == 0);
  CHECK(bunch_crossings(1) == 0);
  CHECK(bunch_crossings(4) == 6);
  CHECK(bunch_sum_form(8) == 14);  // 2 C(2,2) + 4 C(1,2) + 2 C(4,2)
}

TEST_CASE("lemma forms at pinned levels") {
  const LemmaForms f0 = lemma_forms(0);
  CHECK(f0.cover_above == 4);
  CHECK(f0.cover_below == 0);

  const LemmaForms f1 = lemma_forms(1);
  CHECK(f1.spanning == 2);
  CHECK(f1.upsilon_total == 4);

  const LemmaForms f3 = lemma_forms(3);
  CHECK(f3.upsilon_total == 480);
  CHECK(f3.spanning_left == 128);
  CHECK(lemma_forms(2).spanning_left == 24);
  CHECK(lemma_forms(2).upsilon_total == 72);
  CHECK(lemma_forms(4).spanning_left == 664);

  // octant sums at the three regimes
  const LemmaForms fa = lemma_forms(1);
  CHECK(fa.octant_above == std::array<Int, 8>{0, 1, 3, 5, 5, 3, 1, 0});
  CHECK(fa.octant_below == std::array<Int, 8>{0, 3, 3, 1, 1, 3, 3, 0});
  const LemmaForms fb = lemma_forms(2);
  CHECK(fb.octant_above == std::array<Int, 8>{4, 10, 18, 24, 24, 18, 10, 4});
  CHECK(fb.octant_below == std::array<Int, 8>{2, 12, 12, 6, 6, 12, 12, 2});
  CHECK(lemma_forms(3).octant_above[0] == 20);
  CHECK(lemma_forms(3).octant_above[1] == 46);
  CHECK(lemma_forms(3).octant_below[2] == 58);

  // every form stays integral far beyond the geometric range
  for (int m = 0; m <= 30; ++m) CHECK_NOTHROW(lemma_forms(m));
}

TEST_CASE("components at n = 8") {
  CHECK(component(8, Component::Blue) == 120);
  CHECK(component(8, Component::Red) == 4464);
  CHECK(component(8, Component::Black) == 9408);
  CHECK(component(8, Component::RedBlack) == 10656);
  CHECK(component(8, Component::BlueRed) == 4720);
  CHECK(component(8, Component::BlueBlack) == 12624);
  CHECK_THROWS_AS(component(7, Component::Blue), std::invalid_argument);
}

TEST_CASE("inner closed forms") {
  CHECK(blue_red_inner_form(8) == 402);
  CHECK(blue_red_inner_form(9) == 1610);
  CHECK(blue_red_inner_form(10) == 6426);
  CHECK(blue_black_inner_form(8) == 758);
  CHECK(blue_black_inner_form(9) == 3116);
}

TEST_CASE("totals and bounds") {
  CHECK(total(8) == 41992);
  CHECK(total(9) == 182352);
  CHECK(upper_bound(8) == 43648);
  CHECK(upper_bound(8) - total(8) == 1656);
  CHECK(check_bound(8));

  for (int n = 8; n <= 64; ++n) {
    const Int t = total(n);  // throws unless both routes agree and integral
    CHECK(t > 0);
    CHECK(Rational(t) < chain_step1(n));
    CHECK(chain_step1(n) < chain_step2(n));
    CHECK(chain_step2(n) < upper_bound(n));
  }
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(8) < 0);
  CHECK(first_positive_lower_bound() == 11);
  for (int n = 2; n <= 64; ++n) CHECK_NOTHROW(lower_bound(n));
  for (int n = 8; n <= 64; ++n) CHECK(lower_bound(n) < Rational(total(n)));
  CHECK_THROWS_AS(lower_bound(1), std::invalid_argument);
}

TEST_CASE("small cases") {
  const auto cases = small_cases();
  REQUIRE(cases.size() == 7);
  CHECK(cases[0].n == 1);
  CHECK(cases[0].value == 0);
  CHECK(cases[0].exact);
  CHECK(cases[1].value == 0);
  CHECK(cases[1].exact);
  CHECK(cases[2].n == 3);
  CHECK(cases[2].value == 4);
  CHECK(cases[2].exact);
  for (int k = 3; k < 7; ++k) CHECK_FALSE(cases[k].exact);
  CHECK(cases[3].value == 46);
  CHECK(cases[4].value == 328);
  CHECK(cases[5].value == 1848);
  CHECK(cases[6].value == 9112);
}

TEST_CASE("component names") {
  CHECK(std::string(component_name(Component::Blue)) == "blue");
  CHECK(std::string(component_name(Component::BlueBlack)) == "blue_black");
}
