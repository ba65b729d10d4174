#include <random>

#include "doctest.h"
#include "moduli/linear_algebra.hpp"
#include "oracles.hpp"

using namespace moduli;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> v(-3, 3), keep(0, 2);
  SparseMatrix m{rows, cols, std::vector<SparseVector>(rows)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const int x = keep(rng) == 0 ? v(rng) : 0;
      if (x != 0) m.row_data[r].emplace_back(c, Rational(x));
    }
  return m;
}

Rational dot(const SparseVector& a, const SparseVector& b) {
  Rational s = 0;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      if (i == j) s += x * y;
  return s;
}

}  // namespace

TEST_CASE("axpy drops cancelled entries") {
  const SparseVector v{{0, 1}, {2, 3}};
  const SparseVector w{{2, 1}, {5, 2}};
  CHECK(axpy(v, -3, w) == SparseVector{{0, 1}, {5, -6}});
}

TEST_CASE("echelon form, rank and kernels against Bareiss") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<std::size_t> dim(0, 9);
  for (int trial = 0; trial < 150; ++trial) {
    const SparseMatrix m = random_matrix(rng, dim(rng), 1 + dim(rng));
    const std::size_t r = rank(m);
    CHECK(r == oracle::bareiss_rank(m.dense()));
    const RowEchelon ech = echelon_of(m);
    const auto null = ech.nullspace();
    CHECK(null.size() + r == m.cols);
    for (const auto& v : null)
      for (const auto& row : m.row_data) CHECK(dot(row, v) == 0);
    // Kernel vectors are independent.
    SparseMatrix n{null.size(), m.cols, null};
    CHECK(oracle::bareiss_rank(n.dense()) == null.size());
    // Reduced rows have unit pivots that are zero in every other row.
    const auto rows = ech.reduced_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].front().second == 1);
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (j != i)
          for (const auto& [c, x] : rows[j]) CHECK(c != rows[i].front().first);
    }
    for (const auto& row : m.row_data) CHECK(ech.contains(row));
  }
}

TEST_CASE("insert reports dependence") {
  RowEchelon e(3);
  CHECK(e.insert({{0, 1}, {1, 2}}));
  CHECK(e.insert({{1, 1}}));
  CHECK(!e.insert({{0, 2}, {1, 7}}));
  CHECK(!e.insert({}));
  CHECK(e.rank() == 2);
  CHECK(e.nullspace() == std::vector<SparseVector>{{{2, 1}}});
}

TEST_CASE("coordinates round trip") {
  auto g = std::make_shared<const GeneratorSet>(GeneratorSet({{"a", 2, Parity::even}, {"b", 4, Parity::even}}));
  const DegreeBasis basis(*g, 8);
  CHECK(basis.size() == 3);
  GradedPolynomial p(g);
  p.add_term(basis[0], 5);
  p.add_term(basis[2], ratio(-1, 3));
  CHECK(from_coordinates(g, basis, to_coordinates(basis, p)) == p);
}
