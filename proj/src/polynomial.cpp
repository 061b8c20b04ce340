#include "stiefel/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stiefel/errors.hpp"

namespace stiefel {

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_ring(const Variables& a, const Variables& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::size_t variable_index(const Variables& vars, std::string_view name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw VariableMismatch("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars->begin());
}

namespace {
const Variables& empty_ring() {
  static const Variables vars = make_variables({});
  return vars;
}
}  // namespace

Polynomial::Polynomial() : vars_(empty_ring()) {}

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(Variables vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_->size()) throw DimensionError("monomial length differs from ring size");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(Variables vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.emplace(Monomial(p.num_vars()), c);
  return p;
}

Polynomial Polynomial::variable(Variables vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.num_vars()) throw VariableMismatch("variable index out of range");
  p.terms_.emplace(Monomial::variable(p.num_vars(), index), Rational(1));
  return p;
}

Polynomial Polynomial::variable(Variables vars, std::string_view name) {
  auto index = variable_index(vars, name);
  return variable(std::move(vars), index);
}

Polynomial Polynomial::term(Variables vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.num_vars()) throw DimensionError("monomial length differs from ring size");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(num_vars())); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const noexcept {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.degree()));
  return d;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(vars_, other.vars_)) throw VariableMismatch("polynomials belong to different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& shift) {
  check_ring(other);
  if (c == 0) return;
  for (const auto& [m, coeff] : other.terms_) {
    Rational delta = c * coeff;
    auto [it, inserted] = terms_.try_emplace(m * shift, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial result(a.vars_);
  for (const auto& [mb, cb] : b.terms_) result.add_scaled(a, cb, mb);
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.variables(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial differentiate(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw VariableMismatch("differentiation variable out of range");
  Polynomial::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d(m);
    d[var] -= 1;
    out.emplace(std::move(d), c * m[var]);
  }
  return Polynomial(p.variables(), std::move(out));
}

Polynomial differentiate(const Polynomial& p, std::string_view var) {
  return differentiate(p, variable_index(p.variables(), var));
}

namespace {

template <class T>
std::vector<std::vector<T>> power_table(const Polynomial& p, std::span<const T> point) {
  std::vector<std::vector<T>> powers(p.num_vars());
  std::vector<Monomial::Exponent> max_exp(p.num_vars(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  for (std::size_t i = 0; i < powers.size(); ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = T(1);
    for (std::size_t e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  return powers;
}

}  // namespace

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.num_vars()) throw DimensionError("evaluation point has wrong length");
  auto powers = power_table<Rational>(p, point);
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= powers[i][m[i]];
    sum += t;
  }
  return sum;
}

double evaluate(const Polynomial& p, std::span<const double> point) {
  if (point.size() != p.num_vars()) throw DimensionError("evaluation point has wrong length");
  auto powers = power_table<double>(p, point);
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= powers[i][m[i]];
    sum += t;
  }
  return sum;
}

double evaluation_scale(const Polynomial& p, std::span<const double> point) {
  if (point.size() != p.num_vars()) throw DimensionError("evaluation point has wrong length");
  auto powers = power_table<double>(p, point);
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = std::fabs(c.get_d());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= std::fabs(powers[i][m[i]]);
    sum += t;
  }
  return sum;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.num_vars()) throw DimensionError("substitution needs one image per variable");
  if (images.empty()) return p;
  const Variables& target = images.front().variables();
  for (const auto& img : images)
    if (!same_ring(img.variables(), target)) throw VariableMismatch("substitution images differ in ring");

  std::vector<std::vector<Polynomial>> powers(p.num_vars());
  for (std::size_t i = 0; i < powers.size(); ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power = [&](std::size_t i, std::size_t e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    result += t;
  }
  return result;
}

Polynomial embed(const Polynomial& p, const Variables& target) {
  std::vector<std::size_t> where(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) where[i] = variable_index(target, (*p.variables())[i]);
  Polynomial::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    Monomial e(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) e[where[i]] = m[i];
    out.emplace(std::move(e), c);
  }
  return Polynomial(target, std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  MonomialOrder order = MonomialOrder::degrevlex(p.num_vars());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    bool need_star = false;
    if (m.is_one() || magnitude != 1) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << (*p.variables())[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace stiefel
