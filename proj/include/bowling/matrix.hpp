#pragma once

// Square matrices stored sparsely by column. Entries that compare equal to
// zero are never stored.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "bowling/qpoly.hpp"

namespace bowling {

template <class Scalar>
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, Scalar>;

  explicit SparseMatrix(std::size_t dim = 0) : columns_(dim) {}

  static SparseMatrix identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.columns_[i].emplace(i, Scalar{1});
    return m;
  }

  std::size_t dim() const { return columns_.size(); }
  const Column& column(std::size_t col) const { return columns_.at(col); }

  Scalar at(std::size_t row, std::size_t col) const {
    const Column& c = columns_.at(col);
    auto it = c.find(row);
    return it == c.end() ? Scalar{} : it->second;
  }

  /// Adds value to entry (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value) {
    if (row >= dim() || col >= dim()) throw std::out_of_range("matrix index out of range");
    if (is_zero(value)) return;
    Column& c = columns_[col];
    auto [it, inserted] = c.try_emplace(row, value);
    if (!inserted) {
      it->second += value;
      if (is_zero(it->second)) c.erase(it);
    }
  }

  void set_column(std::size_t col, Column entries) {
    std::erase_if(entries, [](const auto& kv) { return is_zero(kv.second); });
    columns_.at(col) = std::move(entries);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero_matrix() const {
    for (const auto& c : columns_)
      if (!c.empty()) return false;
    return true;
  }

  SparseMatrix& operator+=(const SparseMatrix& r) {
    require_same_dim(r);
    for (std::size_t col = 0; col < dim(); ++col)
      for (const auto& [row, v] : r.columns_[col]) add(row, col, v);
    return *this;
  }

  SparseMatrix& operator-=(const SparseMatrix& r) {
    require_same_dim(r);
    for (std::size_t col = 0; col < dim(); ++col)
      for (const auto& [row, v] : r.columns_[col]) add(row, col, Scalar{} - v);
    return *this;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  SparseMatrix scaled(const Scalar& s) const {
    SparseMatrix out(dim());
    for (std::size_t col = 0; col < dim(); ++col)
      for (const auto& [row, v] : columns_[col]) out.add(row, col, v * s);
    return out;
  }

  /// Ordinary matrix product: (A*B) applies B to a column vector first.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    a.require_same_dim(b);
    SparseMatrix out(a.dim());
    for (std::size_t col = 0; col < b.dim(); ++col)
      for (const auto& [mid, bv] : b.columns_[col])
        for (const auto& [row, av] : a.columns_[mid]) out.add(row, col, av * bv);
    return out;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  /// First entry, in (col, row) order, where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMatrix& r) const {
    require_same_dim(r);
    for (std::size_t col = 0; col < dim(); ++col) {
      if (columns_[col] == r.columns_[col]) continue;
      auto a = columns_[col].begin(), ae = columns_[col].end();
      auto b = r.columns_[col].begin(), be = r.columns_[col].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) return std::pair{a->first, col};
        if (a == ae || b->first < a->first) return std::pair{b->first, col};
        if (!(a->second == b->second)) return std::pair{a->first, col};
        ++a;
        ++b;
      }
    }
    return std::nullopt;
  }

  /// All stored entries as (row, col, value), sorted by (col, row).
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    out.reserve(nonzeros());
    for (std::size_t col = 0; col < dim(); ++col)
      for (const auto& [row, v] : columns_[col]) out.emplace_back(row, col, v);
    return out;
  }

 private:
  void require_same_dim(const SparseMatrix& r) const {
    if (r.dim() != dim()) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::vector<Column> columns_;
};

using PolyMatrix = SparseMatrix<QPoly>;
using RationalMatrix = SparseMatrix<QScalar>;

/// Entrywise evaluation at q = x.
RationalMatrix evaluate(const PolyMatrix& m, const QScalar& x);

}  // namespace bowling
