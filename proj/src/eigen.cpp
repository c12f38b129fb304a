#include "hermspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hermspec/error.hpp"

namespace hermspec {

namespace {

constexpr int max_sweeps = 50;
constexpr double off_tol = 1e-12;

double off_norm(const std::vector<Complex>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c) sum += std::norm(a[r * n + c]);
    }
  }
  return std::sqrt(sum);
}

// Annihilate a(p, q). With a(p, q) = g e^{i phi}, the rotation is
//   U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]   on columns (p, q)
// i.e. a phase that makes the pivot real followed by the classical real
// Jacobi rotation. A <- U* A U and V <- V U.
void rotate(std::vector<Complex>& a, std::vector<Complex>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const Complex apq = a[p * n + q];
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = std::conj(apq) / g;  // e^{-i phi}
  const double app = a[p * n + p].real();
  const double aqq = a[q * n + q].real();

  const double theta = (aqq - app) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_qp = -s * phase;
  const Complex u_qq = c * phase;

  // Columns: A U.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a[k * n + p];
    const Complex akq = a[k * n + q];
    a[k * n + p] = akp * c + akq * u_qp;
    a[k * n + q] = akp * s + akq * u_qq;
  }
  // Rows: U* (A U).
  const Complex uc_qp = std::conj(u_qp);
  const Complex uc_qq = std::conj(u_qq);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a[p * n + k];
    const Complex aqk = a[q * n + k];
    a[p * n + k] = c * apk + uc_qp * aqk;
    a[q * n + k] = s * apk + uc_qq * aqk;
  }
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  a[p * n + p] = a[p * n + p].real();
  a[q * n + q] = a[q * n + q].real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v[k * n + p];
    const Complex vkq = v[k * n + q];
    v[k * n + p] = vkp * c + vkq * u_qp;
    v[k * n + q] = vkp * s + vkq * u_qq;
  }
}

}  // namespace

double default_zero_tol(const std::vector<double>& sorted_values) {
  double rho = 0.0;
  for (double x : sorted_values) rho = std::max(rho, std::abs(x));
  return 1e-8 * std::max(1.0, rho);
}

EigenDecomposition hermitian_eigen(const HermitianMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  std::vector<Complex> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double target = off_tol * m.frobenius_norm();
  int sweeps = 0;
  while (off_norm(a, n) > target) {
    if (sweeps == max_sweeps) {
      fail(ErrorKind::numerical, "Jacobi iteration did not converge in 50 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, n, p, q);
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Stable so equal eigenvalues keep their column order.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() > a[j * n + j].real();
  });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.spectrum.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t j : order) {
    out.spectrum.values.push_back(a[j * n + j].real());
    std::vector<Complex> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + j];
    out.vectors.push_back(std::move(col));
  }
  out.spectrum.zero_tol = default_zero_tol(out.spectrum.values);
  return out;
}

Spectrum spectrum(const HermitianMatrix& m) { return hermitian_eigen(m).spectrum; }

double CharPoly::evaluate(double x) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

double coeff_scale(const HermitianMatrix& m, std::size_t k) {
  return std::pow(std::max(1.0, m.frobenius_norm()), static_cast<double>(k));
}

CharPoly char_poly(const HermitianMatrix& m) {
  const std::size_t n = m.order();
  CharPoly poly;
  poly.coeffs.assign(n + 1, 0.0);
  poly.coeffs[0] = 1.0;
  if (n == 0) return poly;

  const auto entries = m.entries();
  std::vector<Complex> b(n * n, 0.0);   // B_k
  std::vector<Complex> mb(n * n, 0.0);  // M B_k
  for (std::size_t i = 0; i < n; ++i) b[i * n + i] = 1.0;

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += entries[r * n + j] * b[j * n + c];
        mb[r * n + c] = acc;
      }
    }
    Complex trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += mb[i * n + i];
    const Complex ck = -trace / static_cast<double>(k);
    if (std::abs(ck.imag()) > 1e-8 * coeff_scale(m, k)) {
      fail(ErrorKind::numerical, "characteristic polynomial coefficient has a non-negligible imaginary part");
    }
    poly.coeffs[k] = ck.real();
    if (k == n) break;
    b = mb;
    for (std::size_t i = 0; i < n; ++i) b[i * n + i] += ck;
  }
  return poly;
}

double multiset_tol(const HermitianMatrix& m) { return 1e-8 * std::max(1.0, m.frobenius_norm()); }

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace hermspec
