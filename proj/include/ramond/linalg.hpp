#pragma once

#include <cstddef>
#include <vector>

#include "ramond/rational.hpp"

namespace ramond {

/// Incrementally maintained row space over the rationals, kept in reduced
/// row echelon form. Exact arithmetic throughout.
class RowSpace {
public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// Reduces the vector against the current basis; returns true (and grows
  /// the basis) when it was independent.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t p = pivot_of(v);
    if (p == width_) return false;
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    // Back-substitute into existing rows to keep RREF.
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      Rational f = row[p];
      for (std::size_t j = 0; j < width_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(), [this](const auto& a, const auto& b) {
      return pivot_of(a) < pivot_of(b);
    });
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    return pivot_of(v) == width_;
  }

private:
  std::size_t pivot_of(const std::vector<Rational>& v) const {
    for (std::size_t j = 0; j < width_; ++j)
      if (!v[j].is_zero()) return j;
    return width_;
  }

  void reduce(std::vector<Rational>& v) const {
    for (const auto& row : rows_) {
      std::size_t p = pivot_of(row);
      if (p == width_ || v[p].is_zero()) continue;
      Rational f = v[p];
      for (std::size_t j = 0; j < width_; ++j) v[j] -= f * row[j];
    }
  }

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace ramond
