#include <doctest.h>

#include <numeric>
#include <sstream>

#include "aqcross/seqtables.hpp"
#include "aqcross/formulas.hpp"

using namespace aqcross;

namespace {

const std::vector<std::int64_t> kT8 = {0,  10, 16, 22, 24, 30, 32, 34, 32,
                                       38, 40, 42, 40, 42, 40, 38, 32};
const std::vector<std::int64_t> kS8 = {22, 20, 18, 16, 14, 12, 10, 10, 10,
                                       8,  6,  6,  6,  6,  6,  6,  6};

}  // namespace

TEST_CASE("black cover table from the column geometry") {
  const auto t = t_table_geometric(8);
  REQUIRE(t.size() == 18);  // indices 1..2^{n-4}+1
  for (int j = 1; j <= 17; ++j) CHECK(t[j] == kT8[j - 1]);

  const auto tp = t_prime_geometric(8);
  CHECK(tp[1] == 0);
  CHECK(tp[2] == 9);
  CHECK(t[1] == 0);
  CHECK(t[2] == 10);

  CHECK_THROWS_AS(t_prime_geometric(7), std::invalid_argument);
}

TEST_CASE("recurrence propagation") {
  const auto t9 = t_table_recurrence(9);
  CHECK(t9[2] == kT8[0] + kT8[1] + 2);  // 12
  CHECK(t9[2] == 12);
  CHECK(t9[3] == 2 * kT8[1]);  // 20
  CHECK(t9[3] == 20);

  const auto s9 = s_table(9);
  CHECK(s9[1] == 44);
  CHECK(s9[2] == 42);
  CHECK(s9[33] == 2 * 6);

  CHECK(std::accumulate(kS8.begin(), kS8.end(), std::int64_t{0}) == 182);
  for (int n = 8; n <= 12; ++n) {
    const auto t = t_table_recurrence(n);
    const std::int64_t sum = std::accumulate(t.begin() + 1, t.end(), std::int64_t{0});
    CHECK(Int(sum) == 512 * pow2(2 * n - 16));
  }
}

TEST_CASE("geometry and recurrence agree") {
  for (int n = 8; n <= 12; ++n) {
    const auto geo = t_table_geometric(n);
    const auto rec = t_table_recurrence(n);
    CHECK(geo == rec);
  }
  CHECK_NOTHROW(cover_sequences(10));

  for (int n = 8; n <= 12; ++n) {
    const CoverSequences seq = cover_sequences(n);
    for (int j = 1; j <= (1 << (n - 4)) + 1; ++j) {
      CHECK(seq.s[j] >= 0);
      CHECK(seq.t[j] >= 0);
      CHECK(seq.t_prime[j] >= 0);
    }
  }
}

TEST_CASE("shift identity against the raw column counts") {
  for (int n = 8; n <= 11; ++n) {
    const ColumnCoverCounts c = column_cover_counts(n);
    const auto t = t_table_geometric(n);
    const int top = 1 << (n - 4);
    for (int j = 1; j <= top - 1; ++j)
      CHECK(t[j + 1] == c.covering[j] + c.downward[j] + (j % 2 == 1 ? 1 : 0));
  }
}

TEST_CASE("special index identities") {
  for (int n = 8; n <= 13; ++n) {
    const VerifyReport rep = special_index_identities(n);
    for (const auto& c : rep.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
  // spot values behind the identities
  const auto s10 = s_table(10);
  CHECK(s10[1] == 4 * 22);  // scale 2^{n-8}
  const auto t10 = t_table_recurrence(10);
  CHECK(t10[(1 << 6) + 1] == 4 * 32);  // last index 2^{n-4}+1, t_{8,17} = 32
}

TEST_CASE("inner sums match the closed forms") {
  CHECK(blue_red_inner(8) == 402);
  CHECK(blue_red_inner(9) == 1610);
  CHECK(blue_red_inner(10) == 6426);
  CHECK(blue_black_inner(8) == 758);
  CHECK(blue_black_inner(9) == 3116);
  for (int n = 8; n <= 14; ++n) {
    CHECK(Int(blue_red_inner(n)) == blue_red_inner_form(n));
    CHECK(Int(blue_black_inner(n)) == blue_black_inner_form(n));
  }
}

TEST_CASE("csv export") {
  std::ostringstream os;
  write_cover_sequences_csv(os, cover_sequences(8));
  const std::string s = os.str();
  CHECK(s.substr(0, 14) == "j,s,t,t_prime\n");
  CHECK(s.find("\n1,22,0,0\n") != std::string::npos);
  CHECK(s.find("\n2,20,10,9\n") != std::string::npos);
  CHECK(s.find("\n17,6,32,32\n") != std::string::npos);
}
