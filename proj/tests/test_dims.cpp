#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpack/dims.hpp"

using namespace latpack::dims;

namespace {

// d, k, dim S_k(SL2(Z)), dim S_k(Gamma0(2)), delta -- the twelve rows of the
// master table, frozen.
struct Row {
  int d, k, s_full, s_g02, delta;
};
constexpr Row kExpected[12] = {
    {8, 4, 0, 0, 0},   {16, 8, 0, 1, 1},   {24, 12, 1, 2, 1},  {32, 16, 1, 3, 2},
    {40, 20, 1, 4, 3}, {48, 24, 2, 5, 3},  {56, 28, 2, 6, 4},  {64, 32, 2, 7, 5},
    {72, 36, 3, 8, 5}, {80, 40, 3, 9, 6},  {88, 44, 3, 10, 7}, {96, 48, 4, 11, 7},
};

}  // namespace

TEST_CASE("dim_modular: closed forms, including the k = 2 mod 12 drop") {
  CHECK(dim_modular(4, Group::Full) == 1);
  CHECK(dim_modular(14, Group::Full) == 1);  // 14 = 2 mod 12
  CHECK(dim_modular(16, Group::Gamma02) == 5);
  CHECK(dim_modular(0, Group::Full) == 1);
  CHECK(dim_modular(2, Group::Full) == 0);
  CHECK_THROWS_AS(dim_modular(5, Group::Full), std::invalid_argument);
  CHECK_THROWS_AS(dim_modular(2, Group::Gamma02), std::invalid_argument);
}

TEST_CASE("dim_cusp: frozen table values") {
  CHECK(dim_cusp(12, Group::Full) == 1);
  CHECK(dim_cusp(8, Group::Gamma02) == 1);
  CHECK(dim_cusp(48, Group::Full) == 4);
  CHECK(dim_cusp(4, Group::Full) == 0);
  CHECK(dim_cusp(4, Group::Gamma02) == 0);
  CHECK_THROWS_AS(dim_cusp(2, Group::Full), std::invalid_argument);
}

TEST_CASE("dim_oracle: monomial counts in the graded ring generators") {
  CHECK(dim_oracle(12, Group::Full) == 2);  // E4^3 and E6^2
  CHECK(dim_oracle(4, Group::Gamma02) == 2);
  // Weight 26: monomials (a,b) with 4a+6b = 26 are (5,1) and (2,3), and the
  // closed form gives floor(26/12) = 2 as well.
  CHECK(dim_oracle(26, Group::Full) == 2);
  CHECK(dim_oracle(26, Group::Full) == dim_modular(26, Group::Full));
}

TEST_CASE("oracle equals the closed form for all even 4 <= k <= 400") {
  for (int k = 4; k <= 400; k += 2) {
    CAPTURE(k);
    CHECK(dim_oracle(k, Group::Full) == dim_modular(k, Group::Full));
    CHECK(dim_oracle(k, Group::Gamma02) == dim_modular(k, Group::Gamma02));
  }
}

TEST_CASE("cusp dimension gap is nonnegative for all even k in range") {
  for (int k = 4; k <= 400; k += 2) {
    CHECK(dim_cusp(k, Group::Gamma02) - dim_cusp(k, Group::Full) >= 0);
  }
}

TEST_CASE("master table: all twelve rows match the frozen snapshot") {
  const auto rows = master_table(96);
  REQUIRE(rows.size() == 12);
  int prev_delta = -1;
  for (int i = 0; i < 12; ++i) {
    CAPTURE(i);
    CHECK(rows[i].d == kExpected[i].d);
    CHECK(rows[i].k == kExpected[i].k);
    CHECK(rows[i].dim_s_full == kExpected[i].s_full);
    CHECK(rows[i].dim_s_g02 == kExpected[i].s_g02);
    CHECK(rows[i].delta == kExpected[i].delta);
    CHECK(rows[i].delta >= prev_delta);  // nondecreasing along the table
    prev_delta = rows[i].delta;
  }
  CHECK(rows[0].status == "Proved");
  CHECK(rows[2].rootless == "Yes (unique)");
  // Rows the table marks as expected stay that way.
  for (int i = 4; i < 12; ++i) CHECK(rows[i].status == "Expected");
}

TEST_CASE("master table: bounds and larger d") {
  CHECK_THROWS_AS(master_table(10), std::invalid_argument);
  const auto rows = master_table(112);
  CHECK(rows.size() == 14);
  CHECK(rows.back().status.empty());
  CHECK(rows.back().dim_s_g02 == 1 + 56 / 4 - 2);
}

TEST_CASE("renderers produce one line per row") {
  const auto rows = master_table(16);
  const std::string md = render_markdown(rows);
  CHECK(std::count(md.begin(), md.end(), '\n') == 4);  // header, rule, two rows
  const std::string csv = render_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
