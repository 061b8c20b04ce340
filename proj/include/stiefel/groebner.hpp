#pragma once

#include <map>
#include <vector>

#include "stiefel/monomial.hpp"
#include "stiefel/polynomial.hpp"

namespace stiefel {

/// Generators plus the term order used to compute with them. Zero generators are dropped.
class Ideal {
 public:
  Ideal(Variables vars, std::vector<Polynomial> generators);  // degrevlex
  Ideal(Variables vars, std::vector<Polynomial> generators, MonomialOrder order);

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Variables& variables() const noexcept { return vars_; }

 private:
  Variables vars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
};

/// Reduced Groebner basis: monic elements, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Variables vars, MonomialOrder order, std::vector<Polynomial> elements);

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const Variables& variables() const noexcept { return vars_; }

  bool is_unit() const noexcept;  // basis == {1}

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  friend Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

  Variables vars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  // Same elements with terms sorted by the basis order, ready for reduction.
  std::vector<std::map<Monomial, Rational, MonomialOrder>> ordered_;
};

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

/// Buchberger's algorithm with the coprime and chain criteria and normal pair selection.
GroebnerBasis buchberger(const Ideal& ideal);

/// Fully reduced remainder of p modulo G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Monomials not divisible by any leading monomial, ascending in the basis order.
/// Throws NotZeroDimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// True iff the generators span the unit ideal.
bool contains_one(const std::vector<Polynomial>& generators, const MonomialOrder& order);

}  // namespace stiefel
