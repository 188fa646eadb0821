#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "weylmin/hbar.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

// Truncated Fock representation: a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>,
// Lambda = sqrt(2 hbar) a, Lambda* = sqrt(2 hbar) a^dag, basis cut at dim-1.
// Columns 0..safe_rows are the window where truncated identities are trusted.

using OpMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

struct FockConfig {
  int dim = 64;
  double hbar = 1.0;
  int safe_rows = 21;

  static FockConfig with_default_window(int dim, double hbar) { return {dim, hbar, dim / 3}; }

  void validate() const {
    if (!(hbar > 0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be a positive finite number");
    if (safe_rows <= 0 || safe_rows >= dim)
      throw std::invalid_argument("need 0 < safe_rows < dim (got safe_rows=" + std::to_string(safe_rows) +
                                  ", dim=" + std::to_string(dim) + ")");
  }
};

struct Ladder {
  OpMatrix a, adag;
};

inline Ladder ladder(const FockConfig& cfg) {
  cfg.validate();
  OpMatrix a = OpMatrix::Zero(cfg.dim, cfg.dim);
  for (int n = 1; n < cfg.dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  OpMatrix adag = a.adjoint();
  return {a, adag};
}

/// Largest column 2-norm over columns 0..safe_rows.
inline double window_norm(const OpMatrix& m, int safe_rows) {
  double worst = 0;
  const int last = std::min<int>(safe_rows, static_cast<int>(m.cols()) - 1);
  for (int n = 0; n <= last; ++n) worst = std::max(worst, m.col(n).norm());
  return worst;
}

/// Matrix of a normal-form element: sum c_kl(hbar) (2 hbar)^{(k+l)/2} a^k (a^dag)^l,
/// with the same truncation as the product of the truncated ladder matrices.
inline OpMatrix weyl_matrix(const WeylElement& x, const FockConfig& cfg) {
  cfg.validate();
  const int dim = cfg.dim;
  OpMatrix m = OpMatrix::Zero(dim, dim);
  const double s = std::sqrt(2.0 * cfg.hbar);
  for (const auto& [key, c] : x.terms()) {
    const cplx coeff = evaluate(c, cfg.hbar) * std::pow(s, key.total());
    for (int n = 0; n < dim; ++n) {
      const int top = n + key.l;
      if (top >= dim) continue;
      if (key.k > top) continue;
      double amp = 1.0;
      for (int j = n + 1; j <= top; ++j) amp *= std::sqrt(static_cast<double>(j));
      for (int j = top; j > top - key.k; --j) amp *= std::sqrt(static_cast<double>(j));
      m(top - key.k, n) += coeff * amp;
    }
  }
  return m;
}

/// exp(lambda a) (dagger = false) or exp(lambda a^dag), summed column by
/// column. exp(lambda a) is exact per column; exp(lambda a^dag) is cut at
/// row dim-1 and its series stops once terms fall below 1e-18 and decrease.
inline OpMatrix exp_ladder(cplx lambda, bool dagger, int dim) {
  OpMatrix m = OpMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    cplx t = 1.0;
    m(n, n) = t;
    for (int k = 1;; ++k) {
      const int row = dagger ? n + k : n - k;
      if (row < 0 || row >= dim) break;
      const double growth = std::sqrt(static_cast<double>(dagger ? n + k : n - k + 1));
      t *= lambda * growth / static_cast<double>(k);
      m(row, n) = t;
      const bool decreasing = std::abs(lambda) * std::sqrt(static_cast<double>(n + k + 1)) < k + 1;
      if (dagger && decreasing && std::abs(t) < 1e-18) break;
    }
  }
  return m;
}

/// e^{sign Lambda} or e^{sign Lambda*}.
inline OpMatrix exp_lambda(int sign, bool dagger, const FockConfig& cfg) {
  cfg.validate();
  return exp_ladder(cplx(sign * std::sqrt(2.0 * cfg.hbar), 0.0), dagger, cfg.dim);
}

/// Truncation error bound of e^{lambda a^dag} at column n: the discarded tail
/// sum_{k > dim-1-n} |lambda|^k sqrt((n+k)!/n!) / k!. Maximum over the window.
inline double exp_dagger_tail_bound(double abs_lambda, const FockConfig& cfg) {
  double worst = 0;
  for (int n = 0; n <= cfg.safe_rows; ++n) {
    double t = 1.0, tail = 0.0;
    for (int k = 1; k < 100000; ++k) {
      t *= abs_lambda * std::sqrt(static_cast<double>(n + k)) / k;
      if (n + k >= cfg.dim) {
        tail += t;
        const bool decreasing = abs_lambda * std::sqrt(static_cast<double>(n + k + 1)) < k + 1;
        if (decreasing && t < 1e-30 * std::max(tail, 1e-300)) break;
        if (decreasing && t == 0.0) break;
      }
    }
    worst = std::max(worst, tail);
  }
  return worst;
}

namespace detail {

// Products with the truncated ladder matrices, computed from their sparsity.
inline OpMatrix right_a(const OpMatrix& m) {  // m * a
  OpMatrix r = OpMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index n = 1; n < m.cols(); ++n) r.col(n) = m.col(n - 1) * std::sqrt(static_cast<double>(n));
  return r;
}
inline OpMatrix right_adag(const OpMatrix& m) {  // m * a^dag
  OpMatrix r = OpMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index n = 0; n + 1 < m.cols(); ++n) r.col(n) = m.col(n + 1) * std::sqrt(static_cast<double>(n + 1));
  return r;
}
inline OpMatrix left_a(const OpMatrix& m) {  // a * m
  OpMatrix r = OpMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index row = 0; row + 1 < m.rows(); ++row)
    r.row(row) = m.row(row + 1) * std::sqrt(static_cast<double>(row + 1));
  return r;
}
inline OpMatrix left_adag(const OpMatrix& m) {  // a^dag * m
  OpMatrix r = OpMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index row = 1; row < m.rows(); ++row) r.row(row) = m.row(row - 1) * std::sqrt(static_cast<double>(row));
  return r;
}

}  // namespace detail

/// Commutator derivations on matrices:
///   d_u M = ([M,a^dag] - [M,a]) / sqrt(2 hbar)     ( = [M,V]/(i hbar) )
///   d_v M = i ([M,a^dag] + [M,a]) / sqrt(2 hbar)   ( = -[M,U]/(i hbar) )
///   d M = [M,a^dag] / sqrt(2 hbar),  dbar M = -[M,a] / sqrt(2 hbar)
inline OpMatrix derive_matrix(const OpMatrix& m, Direction dir, const FockConfig& cfg) {
  const double inv = 1.0 / std::sqrt(2.0 * cfg.hbar);
  const cplx i(0.0, 1.0);
  auto com_adag = [&] { return OpMatrix(detail::right_adag(m) - detail::left_adag(m)); };
  auto com_a = [&] { return OpMatrix(detail::right_a(m) - detail::left_a(m)); };
  switch (dir) {
    case Direction::u: return (com_adag() - com_a()) * inv;
    case Direction::v: return (com_adag() + com_a()) * (i * inv);
    case Direction::d: return com_adag() * inv;
    case Direction::dbar: return com_a() * (-inv);
  }
  return m;
}

/// Delta_0 M = d_u^2 M + d_v^2 M.
inline OpMatrix laplace0_matrix(const OpMatrix& m, const FockConfig& cfg) {
  return derive_matrix(derive_matrix(m, Direction::u, cfg), Direction::u, cfg) +
         derive_matrix(derive_matrix(m, Direction::v, cfg), Direction::v, cfg);
}

struct CatenoidOps {
  OpMatrix X1, X2, X3;
};

/// X1 = (e^L + e^-L + e^L* + e^-L*)/4, X2 = -i(e^L - e^-L - e^L* + e^-L*)/4, X3 = U.
inline CatenoidOps catenoid(const FockConfig& cfg) {
  const OpMatrix ep = exp_lambda(1, false, cfg), em = exp_lambda(-1, false, cfg);
  const OpMatrix dp = exp_lambda(1, true, cfg), dm = exp_lambda(-1, true, cfg);
  const cplx i(0.0, 1.0);
  return {(ep + em + dp + dm) * 0.25, (ep - em - dp + dm) * (-0.25 * i), weyl_matrix(WeylElement::U(), cfg)};
}

/// Phi = 2 d X of the catenoid: ((e^L - e^-L)/2, -i(e^L + e^-L)/2, 1).
inline std::array<OpMatrix, 3> catenoid_phi(const FockConfig& cfg) {
  const OpMatrix ep = exp_lambda(1, false, cfg), em = exp_lambda(-1, false, cfg);
  const cplx i(0.0, 1.0);
  return {(ep - em) * 0.5, (ep + em) * (-0.5 * i), OpMatrix::Identity(cfg.dim, cfg.dim)};
}

struct ResidualReport {
  int dim = 0;
  double hbar = 0;
  int safe_rows = 0;
  double x1 = 0, x2 = 0, x3 = 0;  // max_n ||Delta_0(X^i)|n>||
  double phi_isotropy = 0;        // max_n ||sum_i (Phi^i)^2 |n>||
  double phi_consistency = 0;     // max_n ||(2 d X^i - Phi^i)|n>||
  double tail_bound = 0;          // truncation bound of e^{+-Lambda*} on the window

  double max_residual() const { return std::max({x1, x2, x3, phi_isotropy}); }
};

inline ResidualReport residual_report(const FockConfig& cfg) {
  cfg.validate();
  const auto cat = catenoid(cfg);
  const auto phi = catenoid_phi(cfg);
  ResidualReport r;
  r.dim = cfg.dim;
  r.hbar = cfg.hbar;
  r.safe_rows = cfg.safe_rows;
  r.x1 = window_norm(laplace0_matrix(cat.X1, cfg), cfg.safe_rows);
  r.x2 = window_norm(laplace0_matrix(cat.X2, cfg), cfg.safe_rows);
  r.x3 = window_norm(laplace0_matrix(cat.X3, cfg), cfg.safe_rows);
  r.phi_isotropy = window_norm(phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2], cfg.safe_rows);
  const OpMatrix* xs[3] = {&cat.X1, &cat.X2, &cat.X3};
  for (int i = 0; i < 3; ++i)
    r.phi_consistency = std::max(
        r.phi_consistency, window_norm(derive_matrix(*xs[i], Direction::d, cfg) * 2.0 - phi[i], cfg.safe_rows));
  r.tail_bound = exp_dagger_tail_bound(std::sqrt(2.0 * cfg.hbar), cfg);
  return r;
}

}  // namespace weylmin
