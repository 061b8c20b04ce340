#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stiefel/monomial.hpp"
#include "stiefel/rational.hpp"

namespace stiefel {

/// Ordered variable names of a polynomial ring. Shared between polynomials of the same ring.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);

/// Same pointer, or equal name lists.
bool same_ring(const Variables& a, const Variables& b) noexcept;

/// Index of `name` in the ring, throws VariableMismatch when absent.
std::size_t variable_index(const Variables& vars, std::string_view name);

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector with no zero coefficients,
/// so two polynomials over the same ring are equal iff their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  /// Zero polynomial in the ring with no variables.
  Polynomial();
  explicit Polynomial(Variables vars);
  Polynomial(Variables vars, TermMap terms);

  static Polynomial constant(Variables vars, const Rational& c);
  static Polynomial variable(Variables vars, std::size_t index);
  static Polynomial variable(Variables vars, std::string_view name);
  static Polynomial term(Variables vars, Monomial m, const Rational& c);

  const Variables& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_->size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (0 if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  long total_degree() const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  /// this += c * m * other
  void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  Variables vars_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, const Rational& c);

Polynomial pow(const Polynomial& p, unsigned exponent);

Polynomial differentiate(const Polynomial& p, std::size_t var);
Polynomial differentiate(const Polynomial& p, std::string_view var);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
double evaluate(const Polynomial& p, std::span<const double> point);

/// Sum of |c_m| |x^m| over all terms; the natural magnitude against which to judge |p(x)|.
double evaluation_scale(const Polynomial& p, std::span<const double> point);

/// Replace variable i by images[i]; every image must live in one common target ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Re-express p in a ring whose variable list contains all of p's variables (matched by name).
Polynomial embed(const Polynomial& p, const Variables& target);

/// Canonical text form accepted by parse_polynomial. Terms are printed by descending total degree.
std::string to_string(const Polynomial& p);

}  // namespace stiefel
