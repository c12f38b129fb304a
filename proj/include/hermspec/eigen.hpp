#pragma once

#include <cstddef>
#include <vector>

#include "hermspec/hermitian.hpp"

namespace hermspec {

// Eigenvalues sorted non-increasing. zero_tol is the band used downstream to
// classify an eigenvalue as zero, non-negative or non-positive.
struct Spectrum {
  std::vector<double> values;
  double zero_tol = 0.0;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

// Default classification band: 1e-8 * max(1, spectral radius).
double default_zero_tol(const std::vector<double>& sorted_values);

struct EigenDecomposition {
  Spectrum spectrum;
  // vectors[j] is the unit eigenvector paired with spectrum.values[j].
  std::vector<std::vector<Complex>> vectors;
  int sweeps = 0;
};

// Cyclic complex Jacobi. Each sweep visits the pairs (p, q), p < q, in row
// order and zeroes entry (p, q) with a 2 x 2 unitary rotation. Iteration stops
// once the off-diagonal Frobenius norm is at most 1e-12 * ||M||_F; 50 sweeps
// without reaching that throw ErrorKind::numerical.
EigenDecomposition hermitian_eigen(const HermitianMatrix& m);

Spectrum spectrum(const HermitianMatrix& m);

// phi(v) = det(vI - M) = sum_k coeffs[k] v^(n-k), coeffs[0] = 1.
struct CharPoly {
  std::vector<double> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double evaluate(double x) const;
};

// Faddeev-LeVerrier trace recursion in complex arithmetic:
//   B_1 = I, c_1 = -tr(M),  B_k = M B_{k-1} + c_{k-1} I,  c_k = -tr(M B_k) / k.
// The imaginary part of each c_k must be at most 1e-8 * coeff_scale(m, k).
CharPoly char_poly(const HermitianMatrix& m);

// max(1, ||M||_F)^k: magnitude scale used for coefficient tolerances.
double coeff_scale(const HermitianMatrix& m, std::size_t k);

// Tolerance used when comparing two eigenvalue multisets of M:
// 1e-8 * max(1, ||M||_F).
double multiset_tol(const HermitianMatrix& m);

// Sort both lists and compare elementwise.
bool same_multiset(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace hermspec
