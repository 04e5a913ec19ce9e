#include "msvar/field.hpp"

#include <cmath>
#include <stdexcept>

namespace msvar {

Field::Field(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw std::invalid_argument("Field dimensions must be >= 1");
  data.assign(static_cast<size_t>(w) * h, fill);
}

GradientPair forward_diff(const Field& f) {
  if (f.empty()) throw std::invalid_argument("forward_diff: empty field");
  const int w = f.width, h = f.height;
  GradientPair g{Field(w, h, 0.0), Field(w, h, 0.0)};
  for (int y = 0; y < h; ++y) {
    const double* row = &f.data[static_cast<size_t>(y) * w];
    double* gx = &g.gx.data[static_cast<size_t>(y) * w];
    for (int x = 0; x + 1 < w; ++x) gx[x] = row[x + 1] - row[x];
  }
  for (int y = 0; y + 1 < h; ++y) {
    const double* row = &f.data[static_cast<size_t>(y) * w];
    const double* next = &f.data[static_cast<size_t>(y + 1) * w];
    double* gy = &g.gy.data[static_cast<size_t>(y) * w];
    for (int x = 0; x < w; ++x) gy[x] = next[x] - row[x];
  }
  return g;
}

TvResult tv_value_and_grad(const Field& f, double eps, bool with_grad) {
  if (eps <= 0.0) throw std::invalid_argument("tv_value_and_grad: eps must be > 0");
  if (f.empty()) throw std::invalid_argument("tv_value_and_grad: empty field");
  const int w = f.width, h = f.height;
  GradientPair g = forward_diff(f);

  TvResult out;
  if (with_grad) out.grad = Field(w, h, 0.0);
  double value = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      const double gx = g.gx.data[i];
      const double gy = g.gy.data[i];
      const double r = std::sqrt(gx * gx + gy * gy + eps * eps);
      value += r - eps;
      if (with_grad) {
        // d r / d gx = gx / r; push through the difference stencil.
        const double wx = gx / r;
        const double wy = gy / r;
        if (x + 1 < w) {
          out.grad.data[i + 1] += wx;
          out.grad.data[i] -= wx;
        }
        if (y + 1 < h) {
          out.grad.data[i + w] += wy;
          out.grad.data[i] -= wy;
        }
      }
    }
  }
  out.value = value;
  return out;
}

double tv_value(const Field& f, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("tv_value: eps must be > 0");
  const int w = f.width, h = f.height;
  double value = 0.0;
  for (int y = 0; y < h; ++y) {
    const double* row = &f.data[static_cast<size_t>(y) * w];
    const double* next = (y + 1 < h) ? &f.data[static_cast<size_t>(y + 1) * w] : nullptr;
    for (int x = 0; x < w; ++x) {
      const double gx = (x + 1 < w) ? row[x + 1] - row[x] : 0.0;
      const double gy = next ? next[x] - row[x] : 0.0;
      value += std::sqrt(gx * gx + gy * gy + eps * eps) - eps;
    }
  }
  return value;
}

MaskedMean masked_mean(const Field& f, const Field& w) {
  if (!f.same_shape(w)) throw std::invalid_argument("masked_mean: dimension mismatch");
  // West's incremental weighted mean: a constant f comes back bit-exact.
  double mean = 0.0;
  double wsum = 0.0;
  const size_t n = f.data.size();
  for (size_t i = 0; i < n; ++i) {
    const double wi = w.data[i];
    if (wi == 0.0) continue;
    wsum += wi;
    if (wsum != 0.0) mean += (f.data[i] - mean) * (wi / wsum);
  }
  if (std::abs(wsum) < 1e-12) return {0.0, true};
  return {mean, false};
}

void require_finite(const Field& f, const char* what) {
  for (double v : f.data) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace msvar
