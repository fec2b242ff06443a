#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bos::poly {

// Variable convention used project-wide: index 0 is time t, indices 1..n are
// the states.

/// A monomial over a fixed variable list, stored as one exponent per variable.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}
  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  double evaluate(std::span<const double> z) const;

  bool operator==(const Monomial& other) const { return exponents == other.exponents; }
};

/// Graded-lexicographic order: lower total degree first; within a degree,
/// larger exponent on the earliest variable first (1, t, x, t^2, t*x, x^2, ...).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with double coefficients in canonical form:
/// coefficients with |c| < kCoeffDropTol are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, double, GrlexLess>;

  static constexpr double kCoeffDropTol = 1e-14;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, double value);
  static Polynomial variable(int nvars, int var);

  int nvars() const { return nvars_; }
  int degree() const;  // -1 convention is not used; zero polynomial has degree 0
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  double coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, double coeff);

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(double s) const;
  Polynomial operator-() const { return *this * -1.0; }
  Polynomial& operator+=(const Polynomial& q);

  Polynomial differentiate(int var) const;
  double evaluate(std::span<const double> z) const;

  /// Replaces variable `var` by the polynomial `r` (same variable list).
  Polynomial substitute(int var, const Polynomial& r) const;

  /// Drops all terms of total degree greater than maxdeg.
  Polynomial truncate(int maxdeg) const;

  double coeff_norm1() const;  // sum of |coefficients|
  double coeff_norm_inf() const;

  bool operator==(const Polynomial& q) const {
    return nvars_ == q.nvars_ && terms_ == q.terms_;
  }

 private:
  void check_compatible(const Polynomial& q) const;

  int nvars_;
  TermMap terms_;
};

/// All monomials in `nvars` variables of total degree <= maxdeg, in graded-lex
/// order. Size is C(nvars + maxdeg, maxdeg).
std::vector<Monomial> monomial_basis(int nvars, int maxdeg);

/// Integral of the monomial over the axis-aligned box, i.e. the product of
/// (hi^{k+1} - lo^{k+1})/(k+1) over the variables.
double lebesgue_box_moment(const Monomial& mono,
                           std::span<const std::array<double, 2>> box);

/// Textual serialization: one line per term, "coefficient e0 e1 ... ek".
std::string to_lines(const Polynomial& p);
Polynomial from_lines(const std::string& text, int nvars);

/// Flattened copy of a polynomial for fast repeated evaluation. Shares a
/// per-variable power table across evaluations at the same point.
class Evaluator {
 public:
  Evaluator() = default;
  explicit Evaluator(const Polynomial& p);

  double operator()(std::span<const double> z) const;
  int nvars() const { return nvars_; }

 private:
  int nvars_ = 0;
  int maxdeg_ = 0;
  std::vector<double> coeffs_;
  std::vector<std::int8_t> exps_;  // coeffs_.size() * nvars_
  mutable std::vector<double> powers_;
};

}  // namespace bos::poly
