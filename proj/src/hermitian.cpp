#include "hermspec/hermitian.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "hermspec/error.hpp"

namespace hermspec {

AlphaParam::AlphaParam(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    fail(ErrorKind::invalid_argument, "alpha must be finite");
  }
  const double modulus = std::hypot(a, b);
  if (std::abs(modulus - 1.0) > 1e-12) {
    fail(ErrorKind::invalid_argument, "alpha must have modulus 1 (got " + std::to_string(modulus) + ")");
  }
  if (a < 0.0) fail(ErrorKind::invalid_argument, "alpha must have non-negative real part");
  a_ = a / modulus;
  b_ = b / modulus;
}

AlphaParam AlphaParam::omega() { return {0.5, std::sqrt(3.0) / 2.0}; }
AlphaParam AlphaParam::imaginary() { return {0.0, 1.0}; }
AlphaParam AlphaParam::one() { return {1.0, 0.0}; }

bool AlphaParam::is_omega() const noexcept {
  const AlphaParam w = omega();
  return std::abs(a_ - w.a_) <= 1e-12 && std::abs(b_ - w.b_) <= 1e-12;
}

AlphaParam AlphaParam::parse(std::string_view text) {
  if (text == "omega" || text == "w") return omega();
  if (text == "i") return imaginary();
  if (text == "1") return one();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    fail(ErrorKind::parse, "alpha must be 'omega', 'i', '1' or 'a,b' (got '" + std::string(text) + "')");
  }
  auto parse_double = [&](std::string_view s) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail(ErrorKind::parse, "bad number '" + std::string(s) + "' in alpha");
    }
    return value;
  };
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string AlphaParam::to_string() const {
  if (*this == omega()) return "omega";
  if (*this == imaginary()) return "i";
  if (*this == one()) return "1";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g", a_, b_);
  return buf;
}

// ---------------------------------------------------------------------------

HermitianMatrix HermitianMatrix::from_entries(std::size_t n, std::span<const Complex> entries,
                                              double tol) {
  if (entries.size() != n * n) {
    fail(ErrorKind::invalid_argument, "matrix entry count does not match order");
  }
  double norm2 = 0.0;
  double skew2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      norm2 += std::norm(entries[r * n + c]);
      skew2 += std::norm(entries[r * n + c] - std::conj(entries[c * n + r]));
    }
  }
  if (std::sqrt(skew2) > tol * std::sqrt(norm2)) {
    fail(ErrorKind::numerical, "matrix is not Hermitian");
  }
  HermitianMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m.set_diagonal(r, entries[r * n + r].real());
    for (std::size_t c = r + 1; c < n; ++c) {
      m.set(r, c, 0.5 * (entries[r * n + c] + std::conj(entries[c * n + r])));
    }
  }
  return m;
}

void HermitianMatrix::set(std::size_t row, std::size_t col, Complex value) {
  if (row == col) {
    set_diagonal(row, value.real());
    return;
  }
  entries_[row * n_ + col] = value;
  entries_[col * n_ + row] = std::conj(value);
}

void HermitianMatrix::set_diagonal(std::size_t v, double value) { entries_[v * n_ + v] = value; }

void HermitianMatrix::add(std::size_t row, std::size_t col, Complex value) {
  set(row, col, (*this)(row, col) + value);
}

double HermitianMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

std::vector<Complex> HermitianMatrix::multiply(std::span<const Complex> z) const {
  if (z.size() != n_) fail(ErrorKind::invalid_argument, "vector dimension does not match matrix order");
  std::vector<Complex> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += entries_[r * n_ + c] * z[c];
    out[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------

HermitianMatrix build_matrix(const Digraph& g, const AlphaParam& alpha) {
  const std::size_t n = g.order();
  HermitianMatrix m(n);
  const Complex a = alpha.value();
  const Complex abar = alpha.conj();
  for (Vertex u = 0; u < n; ++u) {
    m.set_diagonal(u, 2.0 * alpha.a() * g.loop_mult(u));
    for (Vertex v = u + 1; v < n; ++v) {
      const double fwd = g.arc_mult(u, v);
      const double bwd = g.arc_mult(v, u);
      m.set(u, v, fwd * a + bwd * abar);
    }
  }
  return m;
}

HermitianMatrix build_second_kind(const Digraph& g) { return build_matrix(g, AlphaParam::omega()); }

double quadratic_form(const HermitianMatrix& m, std::span<const Complex> z) {
  const std::size_t n = m.order();
  if (z.size() != n) fail(ErrorKind::invalid_argument, "vector dimension does not match matrix order");
  Complex acc = 0.0;
  double z_norm2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < n; ++c) row += m(r, c) * z[c];
    acc += std::conj(z[r]) * row;
    z_norm2 += std::norm(z[r]);
  }
  const double limit = 1e-10 * m.frobenius_norm() * z_norm2;
  if (std::abs(acc.imag()) > limit && std::abs(acc.imag()) > 1e-300) {
    fail(ErrorKind::numerical, "quadratic form has a non-negligible imaginary part");
  }
  return acc.real();
}

QuadFormDecomp quad_form_decomposition(const Digraph& g, const AlphaParam& alpha,
                                       std::span<const Complex> z) {
  const std::size_t n = g.order();
  if (z.size() != n) fail(ErrorKind::invalid_argument, "vector dimension does not match digraph order");
  double sum_xx = 0.0;
  double sum_yy = 0.0;
  double sum_cross = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const double xv = z[v].real();
    const double yv = z[v].imag();
    // Each loop adds 2a (x_v^2 + y_v^2) and nothing to Z.
    if (auto m = g.loop_mult(v); m > 0) {
      sum_xx += m * xv * xv;
      sum_yy += m * yv * yv;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const Multiplicity m = g.arc_mult(v, u);
      if (m == 0) continue;
      const double xu = z[u].real();
      const double yu = z[u].imag();
      sum_xx += m * xv * xu;
      sum_yy += m * yv * yu;
      sum_cross += m * (yv * xu - xv * yu);
    }
  }
  return {2.0 * alpha.a() * sum_xx, 2.0 * alpha.a() * sum_yy, 2.0 * alpha.b() * sum_cross};
}

std::string matrix_to_json(const HermitianMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (const Complex& e : m.entries()) {
    re.push_back(e.real());
    im.push_back(e.imag());
  }
  nlohmann::json doc = {{"n", m.order()}, {"re", std::move(re)}, {"im", std::move(im)}};
  return doc.dump();
}

HermitianMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("matrix JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    const auto re = doc.at("re").get<std::vector<double>>();
    const auto im = doc.at("im").get<std::vector<double>>();
    if (re.size() != n * n || im.size() != n * n) {
      fail(ErrorKind::parse, "matrix JSON: 're'/'im' must hold n*n values");
    }
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries[i] = {re[i], im[i]};
    return HermitianMatrix::from_entries(n, entries);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace hermspec
