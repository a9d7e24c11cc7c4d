#pragma once

#include <vector>

#include "ramond/gamma.hpp"

namespace ramond {

/// Contiguous range of retained support offsets, lo <= hi.
struct Window {
  int lo;
  int hi;

  Window(int l, int h) : lo(l), hi(h) {
    if (l > h) throw std::invalid_argument("Window: lo must not exceed hi");
  }
  int offsets() const { return hi - lo + 1; }
  /// Basis size 2*(hi-lo+1): pairs (i,r) with i in [lo,hi], r in {0,1}.
  int dim() const { return 2 * offsets(); }
  bool contains(int i) const { return lo <= i && i <= hi; }
  /// Column/row index of e(i,r).
  int pos(int i, int r) const { return 2 * (i - lo) + r; }
};

/// Exact matrix of an operator of a single weight shift on the truncated
/// basis of a window. Entry (target, source) can be nonzero only when
/// target offset - source offset equals the shift; images falling outside
/// the window are dropped and counted in `spill`.
struct WindowedOperator {
  Window window;
  int shift;
  int spill;
  std::vector<Scalar> entries;  // dense, row-major, window.dim() squared

  const Scalar& at(int row, int col) const { return entries[row * window.dim() + col]; }
  Scalar& at(int row, int col) { return entries[row * window.dim() + col]; }

  bool is_banded() const;
};

/// Matrix product; windows must agree. The composite records the summed
/// weight shift and the combined spill.
WindowedOperator operator*(const WindowedOperator& a, const WindowedOperator& b);

/// Tabulates gamma_act of a homogeneous Lie element on the window.
/// Throws on mixed weight shifts.
WindowedOperator window_matrix(const LieElement& g, const Scalar& lambda, const Scalar& b,
                               const Window& w);

/// Same for an enveloping element whose words all share one total shift.
WindowedOperator window_matrix(const EnvElement& g, const Scalar& lambda, const Scalar& b,
                               const Window& w);

}  // namespace ramond
