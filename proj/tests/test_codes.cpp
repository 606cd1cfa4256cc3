#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "latpack/codes.hpp"
#include "latpack/qseries.hpp"

using namespace latpack;
using namespace latpack::codes;

TEST_CASE("make_code: ranks and rejections") {
  const BinaryCode id4 = make_code({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(id4.n == 4);
  CHECK(id4.k == 4);

  const BinaryCode h8 = builtin_code("hamming8");
  CHECK(h8.n == 8);
  CHECK(h8.k == 4);

  CHECK_THROWS_WITH_AS(static_cast<void>(make_code({{1, 0, 1}, {1, 0, 1}})),
                       doctest::Contains("rank 1"), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(make_code(std::vector<std::vector<int>>{})), std::invalid_argument);
}

TEST_CASE("is_type_ii: shipped codes pass, the identity code fails") {
  CHECK(is_type_ii(builtin_code("hamming8")).ok);
  CHECK(is_type_ii(builtin_code("d16plus")).ok);
  CHECK(is_type_ii(builtin_code("golay24")).ok);

  const auto r = is_type_ii(make_code({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("weight enumerator: hamming8 and the zero-dimensional edge") {
  const WeightEnumerator w = weight_enumerator(builtin_code("hamming8"));
  const std::vector<std::uint64_t> want{1, 0, 0, 0, 14, 0, 0, 0, 1};
  CHECK(w.counts == want);
}

TEST_CASE("weight enumerator: golay24 has A8 = 759 and minimum weight 8") {
  const BinaryCode g = builtin_code("golay24");
  const WeightEnumerator w = weight_enumerator(g);
  CHECK(w.counts[0] == 1);
  CHECK(w.counts[8] == 759);
  CHECK(w.counts[12] == 2576);
  CHECK(w.counts[16] == 759);
  CHECK(w.counts[24] == 1);
  CHECK(min_weight(g) == 8);
}

TEST_CASE("self-dual weight enumerators are palindromic and sum to 2^(n/2)") {
  for (const char* name : {"hamming8", "d16plus", "golay24"}) {
    CAPTURE(name);
    const BinaryCode c = builtin_code(name);
    const WeightEnumerator w = weight_enumerator(c);
    std::uint64_t total = 0;
    for (int i = 0; i <= c.n; ++i) {
      total += w.counts[i];
      CHECK(w.counts[i] == w.counts[c.n - i]);
      if (i % 4 != 0) CHECK(w.counts[i] == 0);  // doubly even
    }
    CHECK(total == (1ull << (c.n / 2)));
  }
}

TEST_CASE("gleason substitution: hamming8 gives E4, d16plus gives E4^2") {
  const QSeries from_h8 = gleason_substitution(weight_enumerator(builtin_code("hamming8")), 8);
  CHECK(from_h8 == eisenstein_series(4, 8));
  CHECK(from_h8.weight().value() == 4);
  CHECK(from_h8.coeff(1) == Rational(240));
  CHECK(from_h8.coeff(2) == Rational(2160));

  const QSeries from_d16 = gleason_substitution(weight_enumerator(builtin_code("d16plus")), 6);
  CHECK(from_d16 == eisenstein_series(4, 6).pow(2));
}

TEST_CASE("gleason substitution rejects a non-doubly-even input") {
  // {00, 11} repeated: self-orthogonal but weight 2 mod 4.
  const BinaryCode c = make_code({{1, 1, 0, 0}, {0, 0, 1, 1}});
  const WeightEnumerator w = weight_enumerator(c);
  CHECK_THROWS_AS(static_cast<void>(gleason_substitution(w, 4)), std::domain_error);
}

TEST_CASE("load_code round-trips a generator file") {
  const std::string path = "test_code_io.txt";
  {
    std::ofstream out(path);
    out << "# extended hamming\n";
    out << "1 0 0 0 0 1 1 1\n0100 1011\n0010 1101\n0001 1110\n";
  }
  const BinaryCode c = load_code(path);
  CHECK(c.n == 8);
  CHECK(c.k == 4);
  CHECK(weight_enumerator(c).counts == weight_enumerator(builtin_code("hamming8")).counts);
  std::remove(path.c_str());
  CHECK_THROWS_AS(static_cast<void>(load_code("does_not_exist.txt")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(builtin_code("nope")), std::invalid_argument);
}
