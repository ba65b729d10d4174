#include "moduli/linear_algebra.hpp"

#include <algorithm>

#include "moduli/error.hpp"

namespace moduli {

SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Rational s = v[i].second + c * w[j].second;
      if (s != 0) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& [col, value] : row_data.at(r))
    if (col == c) return value;
  return 0;
}

std::vector<std::vector<Rational>> SparseMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, value] : row_data[r]) out[r][c] = value;
  return out;
}

SparseVector RowEchelon::reduce(SparseVector row) const {
  std::size_t i = 0;
  while (i < row.size()) {
    auto it = pivots_.find(row[i].first);
    if (it == pivots_.end()) {
      ++i;
      continue;
    }
    // The pivot row only touches columns >= its pivot, so entries before i stay put.
    const Rational c = -row[i].second;
    row = axpy(row, c, it->second);
  }
  return row;
}

bool RowEchelon::insert(SparseVector row) {
  for (const auto& entry : row)
    if (entry.first >= cols_) throw Error(ErrorKind::invalid_argument, "row index out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& entry : row) entry.second /= lead;
  const std::size_t pivot = row.front().first;
  pivots_.emplace(pivot, std::move(row));
  return true;
}

bool RowEchelon::contains(const SparseVector& row) const { return reduce(row).empty(); }

std::vector<SparseVector> RowEchelon::reduced_rows() const {
  // Back-substitute from the last pivot column to the first.
  std::map<std::size_t, SparseVector> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVector row = it->second;
    std::size_t i = 1;
    while (i < row.size()) {
      auto p = reduced.find(row[i].first);
      if (p == reduced.end()) {
        ++i;
        continue;
      }
      const Rational c = -row[i].second;
      row = axpy(row, c, p->second);
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> out;
  out.reserve(reduced.size());
  for (auto& [pivot, row] : reduced) out.push_back(std::move(row));
  return out;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  const std::vector<SparseVector> rows = reduced_rows();
  std::vector<char> is_pivot(cols_, 0);
  for (const auto& row : rows) is_pivot[row.front().first] = 1;
  // For each free column, collect -R[p][f] from every pivot row.
  std::map<std::size_t, SparseVector> by_free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) by_free[c] = SparseVector{};
  for (const auto& row : rows) {
    const std::size_t p = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k)
      by_free[row[k].first].emplace_back(p, -row[k].second);
  }
  std::vector<SparseVector> out;
  out.reserve(by_free.size());
  for (auto& [f, entries] : by_free) {
    entries.emplace_back(f, Rational(1));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(entries));
  }
  return out;
}

RowEchelon echelon_of(const SparseMatrix& m) {
  RowEchelon e(m.cols);
  for (const auto& row : m.row_data) e.insert(row);
  return e;
}

std::size_t rank(const SparseMatrix& m) { return echelon_of(m).rank(); }

SparseVector to_coordinates(const DegreeBasis& basis, const GradedPolynomial& p) {
  SparseVector v;
  v.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = basis.index_of(m);
    if (!idx)
      throw Error(ErrorKind::invalid_argument,
                  "polynomial has a term outside degree " + std::to_string(basis.degree()));
    v.emplace_back(*idx, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

GradedPolynomial from_coordinates(const GeneratorSetPtr& gens, const DegreeBasis& basis,
                                  const SparseVector& v) {
  GradedPolynomial p(gens);
  for (const auto& [i, c] : v) p.add_term(basis[i], c);
  return p;
}

}  // namespace moduli
