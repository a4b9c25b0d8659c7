// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
//
// The four unitary sparsity bases: canonical, Fourier (inverse unitary DFT),
// cosine (orthonormal DCT-III), and a 4-stage orthonormal Haar synthesis.
// Fast apply paths avoid materializing the matrix; the matrix itself is
// built on demand and cached for spectral computations at desk scale.
#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "common.hpp"

namespace parcs {

enum class BasisKind { Canonical, Fourier, Cosine, HaarWavelet };

inline std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Canonical: return "canonical";
    case BasisKind::Fourier: return "fourier";
    case BasisKind::Cosine: return "cosine";
    case BasisKind::HaarWavelet: return "haar";
  }
  return "unknown";
}

inline BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "canonical") return BasisKind::Canonical;
  if (name == "fourier") return BasisKind::Fourier;
  if (name == "cosine") return BasisKind::Cosine;
  if (name == "haar") return BasisKind::HaarWavelet;
  throw InvalidInput("unknown basis kind: " + name);
}

namespace detail {

inline bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place radix-2 Cooley-Tukey, unnormalized. sign=-1 forward, +1 inverse.
// Twiddles come from polar() per butterfly; at desk scale the transform is
// never hot enough to justify a table, and this keeps rounding minimal.
inline void fft_pow2(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex w = std::polar(1.0, step * static_cast<double>(k));
        const Complex u = a[i + k];
        const Complex v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

// Bluestein chirp-z for arbitrary length, built on the radix-2 kernel.
inline void dft_any(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  if (is_pow2(n)) {
    fft_pow2(a, sign);
    return;
  }
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<Complex> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t t = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    chirp[j] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(t) /
                                   static_cast<double>(n));
  }
  std::vector<Complex> p(m, Complex(0, 0));
  std::vector<Complex> q(m, Complex(0, 0));
  for (std::size_t j = 0; j < n; ++j) p[j] = a[j] * chirp[j];
  q[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) q[j] = q[m - j] = std::conj(chirp[j]);
  fft_pow2(p, -1);
  fft_pow2(q, -1);
  for (std::size_t j = 0; j < m; ++j) p[j] *= q[j];
  fft_pow2(p, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = chirp[k] * p[k] * scale;
}

inline std::vector<Complex> to_std(const Vec& x) {
  return std::vector<Complex>(x.data(), x.data() + x.size());
}

inline Vec from_std(const std::vector<Complex>& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

// Unnormalized DCT-II: out[k] = sum_j x[j] cos(pi (2j+1) k / (2n)).
inline std::vector<double> dct2_core(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 1) return x;
  std::vector<Complex> v(n, Complex(0, 0));
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) v[i] = Complex(x[2 * i], 0);
  for (std::size_t i = 0; i < n / 2; ++i) v[n - 1 - i] = Complex(x[2 * i + 1], 0);
  dft_any(v, -1);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = -std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    out[k] = (v[k] * std::polar(1.0, ang)).real();
  }
  return out;
}

// Inverse of dct2_core (recovers x from its unnormalized DCT-II spectrum).
inline std::vector<double> dct2_core_inverse(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n == 1) return c;
  std::vector<Complex> vhat(n);
  vhat[0] = Complex(c[0], 0);
  for (std::size_t k = 1; k < n; ++k) {
    const double ang = std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    vhat[k] = Complex(c[k], -c[n - k]) * std::polar(1.0, ang);
  }
  dft_any(vhat, +1);
  std::vector<double> x(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) x[2 * i] = vhat[i].real() * scale;
  for (std::size_t i = 0; i < n / 2; ++i) x[2 * i + 1] = vhat[n - 1 - i].real() * scale;
  return x;
}

inline constexpr int kHaarStages = 4;

// Orthonormal Haar synthesis: coefficients ordered [approximation | detail
// blocks coarsest to finest], block sizes n/16, n/16, n/8, n/4, n/2.
inline Vec haar_synthesize(const Vec& coeff) {
  const Eigen::Index n = coeff.size();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Eigen::Index len = n >> kHaarStages;
  Vec a = coeff.head(len);
  for (int stage = 0; stage < kHaarStages; ++stage) {
    const auto d = coeff.segment(len, len);
    Vec next(2 * len);
    for (Eigen::Index i = 0; i < len; ++i) {
      next[2 * i] = (a[i] + d[i]) * inv_sqrt2;
      next[2 * i + 1] = (a[i] - d[i]) * inv_sqrt2;
    }
    a = std::move(next);
    len *= 2;
  }
  return a;
}

inline Vec haar_analyze(const Vec& x) {
  const Eigen::Index n = x.size();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Vec out(n);
  Vec a = x;
  Eigen::Index len = n / 2;
  for (int stage = 0; stage < kHaarStages; ++stage) {
    Vec approx(len);
    for (Eigen::Index i = 0; i < len; ++i) {
      approx[i] = (a[2 * i] + a[2 * i + 1]) * inv_sqrt2;
      out[len + i] = (a[2 * i] - a[2 * i + 1]) * inv_sqrt2;
    }
    a = std::move(approx);
    len /= 2;
  }
  out.head(a.size()) = a;
  return out;
}

}  // namespace detail

// Forward unitary DFT, entry (k, j) = exp(-2*pi*i*k*j/n)/sqrt(n).
inline Vec unitary_dft(const Vec& x) {
  auto a = detail::to_std(x);
  detail::dft_any(a, -1);
  Vec out = detail::from_std(a);
  return out / std::sqrt(static_cast<double>(x.size()));
}

// Adjoint of unitary_dft.
inline Vec unitary_idft(const Vec& x) {
  auto a = detail::to_std(x);
  detail::dft_any(a, +1);
  Vec out = detail::from_std(a);
  return out / std::sqrt(static_cast<double>(x.size()));
}

class UnitaryBasis {
 public:
  BasisKind kind() const { return state_->kind; }
  int size() const { return state_->n; }
  int wavelet_levels() const {
    return state_->kind == BasisKind::HaarWavelet ? detail::kHaarStages : 0;
  }

  // U x without materializing U.
  Vec apply(const Vec& x) const {
    require(x.size() == state_->n, "apply: vector length does not match basis dimension");
    switch (state_->kind) {
      case BasisKind::Canonical: return x;
      case BasisKind::Fourier: return unitary_idft(x);
      case BasisKind::Cosine: return cosine_apply(x, /*adjoint=*/false);
      case BasisKind::HaarWavelet: return detail::haar_synthesize(x);
    }
    throw RuntimeFailure("apply: unreachable basis kind");
  }

  // U* y.
  Vec apply_adjoint(const Vec& y) const {
    require(y.size() == state_->n, "apply_adjoint: vector length does not match basis dimension");
    switch (state_->kind) {
      case BasisKind::Canonical: return y;
      case BasisKind::Fourier: return unitary_dft(y);
      case BasisKind::Cosine: return cosine_apply(y, /*adjoint=*/true);
      case BasisKind::HaarWavelet: return detail::haar_analyze(y);
    }
    throw RuntimeFailure("apply_adjoint: unreachable basis kind");
  }

  // Materialized U, cached after the first request. Safe to share across
  // threads; entries come from direct formulas where one exists.
  const Mat& matrix() const {
    std::call_once(state_->once, [this] { state_->cache = materialize(); });
    return state_->cache;
  }

 private:
  friend UnitaryBasis build_basis(BasisKind, int);

  struct State {
    BasisKind kind;
    int n;
    mutable std::once_flag once;
    mutable Mat cache;
  };

  explicit UnitaryBasis(std::shared_ptr<const State> state) : state_(std::move(state)) {}

  Vec cosine_apply(const Vec& x, bool adjoint) const {
    const int n = state_->n;
    std::vector<double> re(static_cast<std::size_t>(n)), im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      re[static_cast<std::size_t>(i)] = x[i].real();
      im[static_cast<std::size_t>(i)] = x[i].imag();
    }
    const double s0 = std::sqrt(1.0 / n);
    const double sk = std::sqrt(2.0 / n);
    Vec out(n);
    if (adjoint) {
      // U* = orthonormal DCT-II: scale after the core transform.
      auto cre = detail::dct2_core(re);
      auto cim = detail::dct2_core(im);
      for (int k = 0; k < n; ++k) {
        const double s = (k == 0) ? s0 : sk;
        out[k] = Complex(cre[static_cast<std::size_t>(k)] * s,
                         cim[static_cast<std::size_t>(k)] * s);
      }
    } else {
      // U = orthonormal DCT-III = inverse of the DCT-II: unscale, then invert.
      for (int k = 0; k < n; ++k) {
        const double s = (k == 0) ? s0 : sk;
        re[static_cast<std::size_t>(k)] /= s;
        im[static_cast<std::size_t>(k)] /= s;
      }
      auto xre = detail::dct2_core_inverse(re);
      auto xim = detail::dct2_core_inverse(im);
      for (int j = 0; j < n; ++j) {
        out[j] = Complex(xre[static_cast<std::size_t>(j)], xim[static_cast<std::size_t>(j)]);
      }
    }
    return out;
  }

  Mat materialize() const {
    const int n = state_->n;
    Mat u(n, n);
    switch (state_->kind) {
      case BasisKind::Canonical:
        u = Mat::Identity(n, n);
        break;
      case BasisKind::Fourier:
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            const auto t = (static_cast<std::uint64_t>(j) * static_cast<std::uint64_t>(k)) %
                           static_cast<std::uint64_t>(n);
            u(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                                 2.0 * std::numbers::pi * static_cast<double>(t) / n);
          }
        }
        break;
      case BasisKind::Cosine: {
        const double s0 = std::sqrt(1.0 / n);
        const double sk = std::sqrt(2.0 / n);
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            const double s = (k == 0) ? s0 : sk;
            u(j, k) = Complex(
                s * std::cos(std::numbers::pi * (2.0 * j + 1.0) * k / (2.0 * n)), 0.0);
          }
        }
        break;
      }
      case BasisKind::HaarWavelet: {
        Vec e = Vec::Zero(n);
        for (int j = 0; j < n; ++j) {
          e[j] = Complex(1, 0);
          u.col(j) = detail::haar_synthesize(e);
          e[j] = Complex(0, 0);
        }
        break;
      }
    }
    return u;
  }

  std::shared_ptr<const State> state_;
};

inline UnitaryBasis build_basis(BasisKind kind, int n) {
  require(n >= 2, "build_basis: dimension must be at least 2");
  if (kind == BasisKind::HaarWavelet) {
    const bool pow2 = detail::is_pow2(static_cast<std::size_t>(n));
    require(pow2 && n >= 32,
            "build_basis: Haar basis needs n = 2^k with k >= 5 for a 4-stage decomposition");
  }
  auto state = std::make_shared<UnitaryBasis::State>();
  state->kind = kind;
  state->n = n;
  return UnitaryBasis(std::shared_ptr<const UnitaryBasis::State>(std::move(state)));
}

inline Vec apply(const UnitaryBasis& u, const Vec& x) { return u.apply(x); }
inline Vec apply_adjoint(const UnitaryBasis& u, const Vec& y) { return u.apply_adjoint(y); }

}  // namespace parcs
