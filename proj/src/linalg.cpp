#include "eur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "eur/error.hpp"

namespace eur {

namespace {

void check_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("matrix entry is not finite");
    }
  }
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch " << a.dim() << " vs " << b.dim();
    throw DimensionError(msg.str());
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("CMatrix: entry count " +
                         std::to_string(entries_.size()) + " != dim^2 = " +
                         std::to_string(dim_ * dim_));
  }
  check_finite(entries_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DimensionError("CMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  check_finite(entries_);
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex scale, CMatrix a) { return a *= scale; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  if (v.size() != a.dim()) throw DimensionError("matrix-vector: size mismatch");
  CVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, std::abs(ea[k] - eb[k]));
  return m;
}

double hermiticity_defect(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

Complex inner(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw DimensionError("inner: size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const CVector& v) { return std::sqrt(std::abs(inner(v, v))); }

CMatrix outer(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw DimensionError("outer: size mismatch");
  CMatrix out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t cap) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (nb != 0 && na > cap / nb) {
    throw DimensionError("kron: result dimension " + std::to_string(na) + "*" +
                         std::to_string(nb) + " exceeds cap " +
                         std::to_string(cap));
  }
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>{});
}

CMatrix embed(const CMatrix& op, std::span<const std::size_t> dims,
              std::size_t target) {
  if (target >= dims.size()) throw DimensionError("embed: target out of range");
  if (op.dim() != dims[target]) {
    throw DimensionError("embed: operator dimension " + std::to_string(op.dim()) +
                         " != subsystem dimension " +
                         std::to_string(dims[target]));
  }
  CMatrix out = CMatrix::identity(1);
  for (std::size_t s = 0; s < dims.size(); ++s) {
    out = kron(out, s == target ? op : CMatrix::identity(dims[s]));
  }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep) {
  if (product(dims) != rho.dim()) {
    throw DimensionError("partial_trace: product of dims " +
                         std::to_string(product(dims)) + " != matrix dim " +
                         std::to_string(rho.dim()));
  }
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");

  std::vector<bool> kept(dims.size(), false);
  for (std::size_t s : keep) {
    if (s >= dims.size()) throw DimensionError("partial_trace: subsystem index out of range");
    if (kept[s]) throw DimensionError("partial_trace: repeated subsystem index");
    kept[s] = true;
  }

  // Strides of each subsystem inside the full index.
  const std::size_t n = dims.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * dims[s];

  std::vector<std::size_t> kept_subs;
  std::vector<std::size_t> traced_subs;
  for (std::size_t s = 0; s < n; ++s) (kept[s] ? kept_subs : traced_subs).push_back(s);

  // Offsets into the full index contributed by every kept / traced
  // configuration, enumerated with the leftmost subsystem most significant.
  auto offsets_of = [&](const std::vector<std::size_t>& subs) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t s : subs) {
      std::vector<std::size_t> next;
      next.reserve(offsets.size() * dims[s]);
      for (std::size_t base : offsets) {
        for (std::size_t d = 0; d < dims[s]; ++d) next.push_back(base + d * stride[s]);
      }
      offsets = std::move(next);
    }
    return offsets;
  };
  const auto kept_off = offsets_of(kept_subs);
  const auto traced_off = offsets_of(traced_subs);

  CMatrix out(kept_off.size());
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return out;
}

namespace {

constexpr double kOffDiagonalThreshold = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary G = D R, where D rephases column q so
// the pivot becomes real and R is the classical real Jacobi rotation.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

// Returns the diagonalized working copy and the accumulated rotations.
std::pair<CMatrix, CMatrix> jacobi(const CMatrix& input) {
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "hermitian_eig: input is not Hermitian (||A - A^dagger||_max = "
        << defect << ")";
    throw ContractError(msg.str());
  }
  const std::size_t n = input.dim();
  // Symmetrize so roundoff in the lower triangle does not leak in.
  CMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double threshold = kOffDiagonalThreshold * std::max(1.0, frobenius_norm(a));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return {std::move(a), std::move(v)};
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  const double residual = off_diagonal_norm(a);
  if (residual <= threshold) return {std::move(a), std::move(v)};
  std::ostringstream msg;
  msg << "hermitian_eig: no convergence after " << kMaxSweeps
      << " sweeps (off-diagonal norm " << residual << ")";
  throw NumericalError(msg.str());
}

std::vector<std::size_t> ascending_order(const CMatrix& diag) {
  std::vector<std::size_t> order(diag.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return diag(i, i).real() < diag(j, j).real();
  });
  return order;
}

}  // namespace

Spectrum hermitian_eig(const CMatrix& a) {
  auto [diag, vecs] = jacobi(a);
  const auto order = ascending_order(diag);
  Spectrum out;
  out.eigenvalues.reserve(order.size());
  out.eigenvectors.reserve(order.size());
  for (std::size_t k : order) {
    out.eigenvalues.push_back(diag(k, k).real());
    CVector col(diag.dim());
    for (std::size_t i = 0; i < diag.dim(); ++i) col[i] = vecs(i, k);
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  auto [diag, vecs] = jacobi(a);
  std::vector<double> values;
  for (std::size_t k : ascending_order(diag)) values.push_back(diag(k, k).real());
  return values;
}

}  // namespace eur
