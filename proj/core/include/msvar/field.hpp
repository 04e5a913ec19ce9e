#pragma once

#include <cstddef>
#include <vector>

namespace msvar {

// Dense 2-D scalar grid, row-major. Used for images, bias fields and single
// mask channels alike.
struct Field {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  Field() = default;
  Field(int w, int h, double fill = 0.0);

  int size() const { return width * height; }
  bool empty() const { return data.empty(); }

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

  bool same_shape(const Field& o) const { return width == o.width && height == o.height; }
};

// Forward differences with replicate boundary: the last column of gx and the
// last row of gy are zero.
struct GradientPair {
  Field gx;
  Field gy;
};

GradientPair forward_diff(const Field& f);

// Smoothed total variation: sum over pixels of sqrt(gx^2 + gy^2 + eps^2),
// offset by W*H*eps so a constant field scores exactly zero. grad is the
// derivative w.r.t. every pixel via the adjoint of the forward differencing.
struct TvResult {
  double value = 0.0;
  Field grad;
};

TvResult tv_value_and_grad(const Field& f, double eps, bool with_grad = true);
double tv_value(const Field& f, double eps);

// Weighted mean sum(f*w)/sum(w). Accumulated with a running-mean update so a
// constant f is returned exactly, whatever the weights. Support below 1e-12
// yields value 0 and the degenerate flag.
struct MaskedMean {
  double value = 0.0;
  bool degenerate = false;
};

MaskedMean masked_mean(const Field& f, const Field& w);

// Throws std::invalid_argument if any value is non-finite.
void require_finite(const Field& f, const char* what);

}  // namespace msvar
