#include <doctest.h>

#include <sstream>

#include "aqcross/svg.hpp"
#include "aqcross/verify.hpp"

using namespace aqcross;

TEST_CASE("svg rendering is deterministic and well formed") {
  std::ostringstream a, b;
  write_upsilon_svg(a, ArcDiagram::upsilon(1));
  write_upsilon_svg(b, ArcDiagram::upsilon(1));
  CHECK(a.str() == b.str());
  const std::string s = a.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  // 8 spine vertices and 20 arcs at level 1
  std::size_t circles = 0, paths = 0, pos = 0;
  while ((pos = s.find("<circle", pos)) != std::string::npos) ++circles, pos += 7;
  pos = 0;
  while ((pos = s.find("<path", pos)) != std::string::npos) ++paths, pos += 5;
  CHECK(circles == 8);
  CHECK(paths == 20);
}

TEST_CASE("black svg shows all columns and straight edges") {
  std::ostringstream os;
  write_black_svg(os, BlackLayout(8));
  const std::string s = os.str();
  std::size_t circles = 0, lines = 0, pos = 0;
  while ((pos = s.find("<circle", pos)) != std::string::npos) ++circles, pos += 7;
  pos = 0;
  while ((pos = s.find("<line", pos)) != std::string::npos) ++lines, pos += 5;
  CHECK(circles == 8 * 32);
  CHECK(lines == 4 * 2 * 32);  // 2 * 2^{n-3} straight edges per column pair
}

TEST_CASE("verify scopes aggregate cleanly") {
  const VerifyReport rep = verify_graph_scope(1, 6);
  CHECK(rep.all_pass());
  CHECK(rep.fail_count() == 0);
  CHECK(rep.checks.size() > 10);

  VerifyReport merged;
  merged.add("a", true);
  VerifyReport other;
  other.add("b", false, "1", "2", "off by one");
  merged.merge(std::move(other));
  CHECK(merged.checks.size() == 2);
  CHECK_FALSE(merged.all_pass());
  CHECK(merged.fail_count() == 1);
}
