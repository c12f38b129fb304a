#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermspec/digraph.hpp"

namespace hermspec {

using Complex = std::complex<double>;

// Unit-modulus parameter alpha = a + bi with a >= 0. Construction rejects
// anything else, so every matrix built from an AlphaParam satisfies the
// hypotheses of the radius bounds.
class AlphaParam {
 public:
  // Accepts |alpha| within 1e-12 of 1 and renormalizes onto the unit circle.
  AlphaParam(double a, double b);

  static AlphaParam omega();      // (1 + i sqrt 3) / 2
  static AlphaParam imaginary();  // i, the first-kind matrix
  static AlphaParam one();        // 1, the symmetric adjacency matrix

  // "omega", "i", "1", or "a,b".
  static AlphaParam parse(std::string_view text);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  Complex value() const noexcept { return {a_, b_}; }
  Complex conj() const noexcept { return {a_, -b_}; }

  bool is_omega() const noexcept;

  std::string to_string() const;

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  double a_;
  double b_;
};

// Dense n x n complex matrix that is conjugate-symmetric by construction:
// the only mutators write an entry together with its mirror.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  // Accepts a row-major matrix whose deviation from Hermitian is at most
  // tol * ||A||_F, storing the Hermitian part (A + A*) / 2. Larger deviations
  // throw ErrorKind::numerical.
  static HermitianMatrix from_entries(std::size_t n, std::span<const Complex> entries,
                                      double tol = 1e-12);

  std::size_t order() const noexcept { return n_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  void set(std::size_t row, std::size_t col, Complex value);
  void set_diagonal(std::size_t v, double value);
  void add(std::size_t row, std::size_t col, Complex value);

  std::span<const Complex> entries() const noexcept { return entries_; }

  double frobenius_norm() const;

  std::vector<Complex> multiply(std::span<const Complex> z) const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> entries_;
};

// N^alpha(D): off-diagonal entry e(u,v) alpha + e(v,u) conj(alpha), diagonal
// 2a per loop.
HermitianMatrix build_matrix(const Digraph& g, const AlphaParam& alpha);

// M(D) = N^omega(D).
HermitianMatrix build_second_kind(const Digraph& g);

// z* M z. The imaginary residue of the raw sum must stay below
// 1e-10 * ||M||_F * ||z||^2; otherwise ErrorKind::numerical is thrown.
double quadratic_form(const HermitianMatrix& m, std::span<const Complex> z);

// Per-arc split of z* N^alpha z for z = x + iy:
//   X = 2a sum x_v x_u,  Y = 2a sum y_v y_u,  Z = 2b sum (y_v x_u - x_v y_u)
// over arcs v -> u with multiplicity. Loops add 2a(x_v^2 + y_v^2) to X + Y.
struct QuadFormDecomp {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double total() const noexcept { return x + y + z; }
};

QuadFormDecomp quad_form_decomposition(const Digraph& g, const AlphaParam& alpha,
                                       std::span<const Complex> z);

// {"n": n, "re": [...], "im": [...]}, row-major.
std::string matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(std::string_view text);

}  // namespace hermspec
