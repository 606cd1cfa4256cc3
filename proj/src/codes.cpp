#include "latpack/codes.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace latpack::codes {

namespace {

// In-place reduced row echelon form over GF(2); returns the rank.
int rref(std::vector<std::uint64_t>& rows, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    const std::uint64_t mask = 1ull << col;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

void for_each_codeword(const BinaryCode& c, const std::function<void(std::uint64_t)>& fn) {
  // Gray-code walk: each step toggles one generator.
  const std::uint64_t total = 1ull << c.k;
  std::uint64_t word = 0;
  fn(word);
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= c.rows[std::countr_zero(i)];
    fn(word);
  }
}

}  // namespace

BinaryCode make_code(std::vector<std::uint64_t> rows, int n) {
  if (rows.empty()) throw std::invalid_argument("make_code: no rows");
  if (n < 1 || n > 64) throw std::invalid_argument("make_code: length must be in [1, 64]");
  if (n < 64) {
    const std::uint64_t valid = (1ull << n) - 1;
    for (auto r : rows)
      if (r & ~valid) throw std::invalid_argument("make_code: row has bits beyond the code length");
  }
  const int k = static_cast<int>(rows.size());
  const int rank = rref(rows, n);
  if (rank < k)
    throw std::invalid_argument("make_code: rows are linearly dependent (rank " + std::to_string(rank) +
                                " < " + std::to_string(k) + ")");
  return BinaryCode{n, k, std::move(rows)};
}

BinaryCode make_code(const std::vector<std::vector<int>>& bits) {
  if (bits.empty()) throw std::invalid_argument("make_code: empty matrix");
  const int n = static_cast<int>(bits[0].size());
  std::vector<std::uint64_t> rows;
  rows.reserve(bits.size());
  for (const auto& row : bits) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("make_code: ragged matrix");
    std::uint64_t r = 0;
    for (int j = 0; j < n; ++j) {
      if (row[j] != 0 && row[j] != 1) throw std::invalid_argument("make_code: entries must be 0 or 1");
      if (row[j]) r |= 1ull << j;
    }
    rows.push_back(r);
  }
  return make_code(std::move(rows), n);
}

TypeIIReport is_type_ii(const BinaryCode& c) {
  if (c.n % 8 != 0) return {false, "length is not a multiple of 8"};
  if (2 * c.k != c.n) return {false, "dimension is not n/2"};
  for (int i = 0; i < c.k; ++i) {
    if (std::popcount(c.rows[i]) % 4 != 0)
      return {false, "generator row " + std::to_string(i) + " has weight not divisible by 4"};
    for (int j = i + 1; j < c.k; ++j) {
      if (std::popcount(c.rows[i] & c.rows[j]) % 2 != 0)
        return {false, "rows " + std::to_string(i) + "," + std::to_string(j) + " have odd intersection"};
    }
  }
  // Doubly-even rows with pairwise even intersections force every codeword
  // weight to 0 mod 4; for n <= 32 scan all codewords anyway as a second,
  // independent route.
  if (c.n <= 32) {
    bool ok = true;
    for_each_codeword(c, [&](std::uint64_t w) {
      if (std::popcount(w) % 4 != 0) ok = false;
    });
    if (!ok) return {false, "exhaustive scan found a codeword of weight not divisible by 4"};
  }
  return {true, ""};
}

WeightEnumerator weight_enumerator(const BinaryCode& c) {
  if (c.k > 28) throw std::invalid_argument("weight_enumerator: dimension above the k <= 28 enumeration guard");
  WeightEnumerator w;
  w.n = c.n;
  w.counts.assign(static_cast<size_t>(c.n) + 1, 0);
  for_each_codeword(c, [&](std::uint64_t word) { ++w.counts[static_cast<size_t>(std::popcount(word))]; });
  return w;
}

QSeries gleason_substitution(const WeightEnumerator& w, int order) {
  if (order < 0) throw std::invalid_argument("gleason_substitution: order must be >= 0");
  const int order_u = 4 * order + 3;
  const QSeries t3 = theta_constant(3, order_u);
  const QSeries t2 = theta_constant(2, order_u);

  // Powers theta3^(n-w) * theta2^w for every weight with A_w > 0.
  std::vector<QSeries> p3, p2;
  p3.reserve(w.n + 1);
  p2.reserve(w.n + 1);
  p3.push_back(QSeries::constant(4, 1, order_u));
  p2.push_back(QSeries::constant(4, 1, order_u));
  for (int i = 1; i <= w.n; ++i) {
    p3.push_back(p3.back() * t3);
    p2.push_back(p2.back() * t2);
  }

  QSeries acc(4, order_u);
  for (int wt = 0; wt <= w.n; ++wt) {
    if (w.counts[wt] == 0) continue;
    acc = acc + (p3[w.n - wt] * p2[wt]) * Rational(Integer(w.counts[wt]));
  }
  QSeries q = acc.projected_to_nome().truncated(order);
  q.set_weight(w.n / 2);
  return q;
}

BinaryCode builtin_code(const std::string& name) {
  if (name == "hamming8") {
    // Extended [8,4,4] Hamming code.
    return make_code({{1, 0, 0, 0, 0, 1, 1, 1},
                      {0, 1, 0, 0, 1, 0, 1, 1},
                      {0, 0, 1, 0, 1, 1, 0, 1},
                      {0, 0, 0, 1, 1, 1, 1, 0}});
  }
  if (name == "d16plus") {
    // Seven overlapping weight-4 "d"-rows plus the alternating glue row.
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 7; ++i) {
      std::vector<int> r(16, 0);
      for (int j = 0; j < 4; ++j) r[2 * i + j] = 1;
      rows.push_back(std::move(r));
    }
    std::vector<int> glue(16, 0);
    for (int j = 0; j < 16; j += 2) glue[j] = 1;
    rows.push_back(std::move(glue));
    return make_code(rows);
  }
  if (name == "golay24") {
    // Extended binary Golay code [I | B], B the standard bordered circulant.
    const std::vector<std::vector<int>> b = {
        {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
        {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1}, {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
        {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
        {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1}, {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
        {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0}, {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0},
        {1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0}, {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1}};
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 12; ++i) {
      std::vector<int> r(24, 0);
      r[i] = 1;
      for (int j = 0; j < 12; ++j) r[12 + j] = b[i][j];
      rows.push_back(std::move(r));
    }
    return make_code(rows);
  }
  throw std::invalid_argument("builtin_code: unknown code '" + name + "'");
}

BinaryCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_code: cannot open '" + path + "'");
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> row;
    for (char ch : line) {
      if (ch == '0') row.push_back(0);
      else if (ch == '1') row.push_back(1);
      else if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      else if (ch == '#') break;
      else throw std::runtime_error("load_code: unexpected character '" + std::string(1, ch) + "'");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("load_code: no rows in '" + path + "'");
  return make_code(rows);
}

int min_weight(const BinaryCode& c) {
  if (c.k > 28) throw std::invalid_argument("min_weight: dimension above the k <= 28 enumeration guard");
  int best = c.n + 1;
  for_each_codeword(c, [&](std::uint64_t w) {
    const int pw = std::popcount(w);
    if (pw > 0 && pw < best) best = pw;
  });
  return best;
}

}  // namespace latpack::codes
