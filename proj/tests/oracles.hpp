#pragma once

// Reference computations used only by the tests. Each one is written with
// explicit loops over three qubits so it shares no code path with the
// library routine it checks.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "eur/entropy.hpp"

namespace eur::oracle {

using C = std::complex<double>;
using Mat8 = std::array<std::array<C, 8>, 8>;
using Mat4 = std::array<std::array<C, 4>, 4>;
using Mat2 = std::array<std::array<C, 2>, 2>;

inline Mat8 to_mat8(const CMatrix& m) {
  Mat8 out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out[i][j] = m(i, j);
  return out;
}

// rho[(a b c), (a' b' c')] with index 4a + 2b + c.
inline C at(const Mat8& rho, int a, int b, int c, int ap, int bp, int cp) {
  return rho[4 * a + 2 * b + c][4 * ap + 2 * bp + cp];
}

inline Mat2 trace_bc(const Mat8& rho) {
  Mat2 out{};
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) out[a][ap] += at(rho, a, b, c, ap, b, c);
  return out;
}

inline Mat4 trace_c(const Mat8& rho) {
  Mat4 out{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          for (int c = 0; c < 2; ++c) out[2 * a + b][2 * ap + bp] += at(rho, a, b, c, ap, bp, c);
  return out;
}

inline Mat4 trace_b(const Mat8& rho) {
  Mat4 out{};
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int ap = 0; ap < 2; ++ap)
        for (int cp = 0; cp < 2; ++cp)
          for (int b = 0; b < 2; ++b) out[2 * a + c][2 * ap + cp] += at(rho, a, b, c, ap, b, cp);
  return out;
}

/// Power sums tr(A^k), k = 1..n, which fix the characteristic polynomial.
inline std::vector<double> power_sums(const CMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<double> out;
  CMatrix power = CMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    CMatrix next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next(i, j) += power(i, l) * a(l, j);
    power = next;
    C tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += power(i, i);
    out.push_back(tr.real());
  }
  return out;
}

/// Entropy of a 2x2 Hermitian unit-trace matrix from its closed-form
/// eigenvalues (1 +- sqrt((a-d)^2 + 4|b|^2)) / 2.
inline double qubit_entropy(const Mat2& m) {
  const double a = m[0][0].real();
  const double d = m[1][1].real();
  const double r = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(m[0][1]));
  double h = 0.0;
  for (double l : {(a + d + r) / 2.0, (a + d - r) / 2.0}) {
    if (l > 1e-15) h -= l * std::log2(l);
  }
  return h;
}

inline double sq_overlap(const CVector& u, const CVector& v) {
  C s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return std::norm(s);
}

/// b for exactly three bases, nested loops.
inline double liu_b_three(const ProjectiveBasis& u1, const ProjectiveBasis& u2,
                          const ProjectiveBasis& u3) {
  const std::size_t d = u1.dim();
  double best = 0.0;
  for (std::size_t i3 = 0; i3 < d; ++i3) {
    double sum = 0.0;
    for (std::size_t i2 = 0; i2 < d; ++i2) {
      double first = 0.0;
      for (std::size_t i1 = 0; i1 < d; ++i1) {
        first = std::max(first, sq_overlap(u1.vectors()[i1], u2.vectors()[i2]));
      }
      sum += first * sq_overlap(u2.vectors()[i2], u3.vectors()[i3]);
    }
    best = std::max(best, sum);
  }
  return best;
}

/// -sum_{i3} p(i3) log2 sum_{i2} max_{i1} |<u1|u2>|^2 |<u2|u3>|^2 for one
/// ordering of three bases.
inline double zhang_three(const ProjectiveBasis& u1, const ProjectiveBasis& u2,
                          const ProjectiveBasis& u3, const CMatrix& rho_a) {
  const std::size_t d = u1.dim();
  double value = 0.0;
  for (std::size_t i3 = 0; i3 < d; ++i3) {
    const CVector& w = u3.vectors()[i3];
    C p = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p += std::conj(w[i]) * rho_a(i, j) * w[j];
    double sum = 0.0;
    for (std::size_t i2 = 0; i2 < d; ++i2) {
      double first = 0.0;
      for (std::size_t i1 = 0; i1 < d; ++i1) {
        first = std::max(first, sq_overlap(u1.vectors()[i1], u2.vectors()[i2]));
      }
      sum += first * sq_overlap(u2.vectors()[i2], w);
    }
    if (p.real() > 0.0) value -= p.real() * std::log2(sum);
  }
  return value;
}

}  // namespace eur::oracle
