#include "bos/poly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bos::poly {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

double Monomial::evaluate(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != nvars()) {
    throw std::invalid_argument("Monomial::evaluate: point dimension mismatch");
  }
  double out = 1.0;
  for (int i = 0; i < nvars(); ++i) {
    for (int e = 0; e < exponents[i]; ++e) out *= z[i];
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: the monomial with the larger exponent on the earliest
  // differing variable comes first (t^2 before t*x before x^2).
  return a.exponents > b.exponents;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("Polynomial: negative variable count");
}

Polynomial Polynomial::constant(int nvars, double value) {
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars), value);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
  Polynomial p(nvars);
  Monomial m = Monomial::unit(nvars);
  m.exponents[var] = 1;
  p.add_term(m, 1.0);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

double Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Monomial& m, double coeff) {
  if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial::add_term: variable count mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kCoeffDropTol) terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) < kCoeffDropTol) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& q) const {
  if (nvars_ != q.nvars_) throw std::invalid_argument("polynomial variable counts differ");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_compatible(q);
  Polynomial out = *this;
  for (const auto& [m, c] : q.terms_) out.add_term(m, c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_compatible(q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  check_compatible(q);
  Polynomial out = *this;
  for (const auto& [m, c] : q.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_compatible(q);
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : q.terms_) {
      Monomial m = ma;
      for (int i = 0; i < nvars_; ++i) m.exponents[i] += mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

Polynomial Polynomial::differentiate(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("differentiate: variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponents[var];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponents[var] = e - 1;
    out.add_term(dm, c * e);
  }
  return out;
}

double Polynomial::evaluate(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != nvars_) {
    throw std::invalid_argument("Polynomial::evaluate: point dimension mismatch");
  }
  double out = 0.0;
  for (const auto& [m, c] : terms_) out += c * m.evaluate(z);
  return out;
}

Polynomial Polynomial::substitute(int var, const Polynomial& r) const {
  check_compatible(r);
  if (var < 0 || var >= nvars_) throw std::invalid_argument("substitute: variable index out of range");
  // Cache powers of r up to the maximum exponent of `var`.
  int emax = 0;
  for (const auto& [m, c] : terms_) emax = std::max(emax, m.exponents[var]);
  std::vector<Polynomial> rpow;
  rpow.reserve(emax + 1);
  rpow.push_back(Polynomial::constant(nvars_, 1.0));
  for (int e = 1; e <= emax; ++e) rpow.push_back(rpow.back() * r);

  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const int e = rest.exponents[var];
    rest.exponents[var] = 0;
    Polynomial base(nvars_);
    base.add_term(rest, c);
    out += base * rpow[e];
  }
  return out;
}

Polynomial Polynomial::truncate(int maxdeg) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= maxdeg) out.add_term(m, c);
  }
  return out;
}

double Polynomial::coeff_norm1() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s += std::abs(c);
  return s;
}

double Polynomial::coeff_norm_inf() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

namespace {

void enumerate_exponents(int nvars, int maxdeg, int var, Monomial& current,
                         int used, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e + used <= maxdeg; ++e) {
    current.exponents[var] = e;
    enumerate_exponents(nvars, maxdeg, var + 1, current, used + e, out);
  }
  current.exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Monomial> out;
  Monomial current = Monomial::unit(nvars);
  enumerate_exponents(nvars, maxdeg, 0, current, 0, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

double lebesgue_box_moment(const Monomial& mono,
                           std::span<const std::array<double, 2>> box) {
  if (static_cast<int>(box.size()) != mono.nvars()) {
    throw std::invalid_argument("lebesgue_box_moment: box dimension mismatch");
  }
  double out = 1.0;
  for (int i = 0; i < mono.nvars(); ++i) {
    const double lo = box[i][0], hi = box[i][1];
    if (!(lo < hi)) throw std::invalid_argument("lebesgue_box_moment: degenerate box");
    const int k = mono.exponents[i];
    out *= (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
  }
  return out;
}

std::string to_lines(const Polynomial& p) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [m, c] : p.terms()) {
    os << c;
    for (int e : m.exponents) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

Polynomial from_lines(const std::string& text, int nvars) {
  Polynomial p(nvars);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double c;
    if (!(ls >> c)) throw std::runtime_error("polynomial parse: bad coefficient in '" + line + "'");
    Monomial m = Monomial::unit(nvars);
    for (int i = 0; i < nvars; ++i) {
      if (!(ls >> m.exponents[i])) {
        throw std::runtime_error("polynomial parse: expected " + std::to_string(nvars) +
                                 " exponents in '" + line + "'");
      }
      if (m.exponents[i] < 0) throw std::runtime_error("polynomial parse: negative exponent");
    }
    int extra;
    if (ls >> extra) throw std::runtime_error("polynomial parse: trailing fields in '" + line + "'");
    p.add_term(m, c);
  }
  return p;
}

Evaluator::Evaluator(const Polynomial& p) : nvars_(p.nvars()), maxdeg_(p.degree()) {
  coeffs_.reserve(p.terms().size());
  exps_.reserve(p.terms().size() * nvars_);
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c);
    for (int e : m.exponents) exps_.push_back(static_cast<std::int8_t>(e));
  }
  powers_.resize(static_cast<size_t>(nvars_) * (maxdeg_ + 1));
}

double Evaluator::operator()(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != nvars_) {
    throw std::invalid_argument("Evaluator: point dimension mismatch");
  }
  const int np = maxdeg_ + 1;
  for (int v = 0; v < nvars_; ++v) {
    double* row = powers_.data() + static_cast<size_t>(v) * np;
    row[0] = 1.0;
    for (int e = 1; e < np; ++e) row[e] = row[e - 1] * z[v];
  }
  double out = 0.0;
  const std::int8_t* ep = exps_.data();
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    double term = coeffs_[k];
    for (int v = 0; v < nvars_; ++v) {
      term *= powers_[static_cast<size_t>(v) * np + ep[v]];
    }
    ep += nvars_;
    out += term;
  }
  return out;
}

}  // namespace bos::poly
