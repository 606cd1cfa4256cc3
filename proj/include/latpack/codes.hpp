// Binary linear codes of length <= 64, stored as row-reduced generator
// bitmasks. Covers Type II verification, exhaustive weight enumerators, and
// the Gleason substitution x -> theta3, y -> theta2 into the quarter-nome.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latpack/qseries.hpp"

namespace latpack::codes {

// Bit j of a row is column j. Rows are kept in reduced row-echelon form.
struct BinaryCode {
  int n = 0;  // length
  int k = 0;  // dimension
  std::vector<std::uint64_t> rows;
};

// Row-reduces and validates; rank-deficient input is rejected (the achieved
// rank is reported in the exception message).
BinaryCode make_code(const std::vector<std::vector<int>>& bits);
BinaryCode make_code(std::vector<std::uint64_t> rows, int n);

struct TypeIIReport {
  bool ok = false;
  std::string reason;  // set when ok is false
};

// k = n/2, self-dual, every codeword weight divisible by 4. Checked through
// generator criteria (doubly-even rows, pairwise even intersections) and,
// for n <= 32, an exhaustive scan of all codewords as a second route.
TypeIIReport is_type_ii(const BinaryCode& c);

struct WeightEnumerator {
  int n = 0;
  std::vector<std::uint64_t> counts;  // A_0 .. A_n
};

// Exact counts by enumeration of all 2^k codewords; guarded at k <= 28.
WeightEnumerator weight_enumerator(const BinaryCode& c);

// W_C(theta3, theta2) in the quarter-nome, checked to land on u-exponents
// divisible by 4 and projected to a q-series of the given order. Throws on
// a non-doubly-even input. The result carries weight annotation n/2.
QSeries gleason_substitution(const WeightEnumerator& w, int order);

// Shipped generator matrices: "hamming8", "d16plus", "golay24".
BinaryCode builtin_code(const std::string& name);

// Plain-text format: one row per line, entries '0'/'1', optional spaces.
BinaryCode load_code(const std::string& path);

int min_weight(const BinaryCode& c);

}  // namespace latpack::codes
