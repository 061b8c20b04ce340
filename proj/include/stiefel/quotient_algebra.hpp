#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stiefel/groebner.hpp"
#include "stiefel/matrix.hpp"

namespace stiefel {

/// The finite-dimensional algebra R[x]/I with the standard-monomial basis.
///
/// Coordinates of an element are taken with respect to basis(), which is sorted
/// ascending by the Groebner order, so basis()[0] == 1 whenever dim() > 0.
class QuotientAlgebra {
 public:
  /// Throws NotZeroDimensional.
  explicit QuotientAlgebra(GroebnerBasis gb);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const GroebnerBasis& groebner_basis() const noexcept { return gb_; }
  const Variables& variables() const noexcept { return gb_.variables(); }

  /// Multiplication-by-x_v matrix; column j holds the coordinates of x_v * e_j.
  const RationalMatrix& variable_matrix(std::size_t v) const { return var_mats_.at(v); }

  /// Coordinates of normal_form(p).
  std::vector<Rational> coordinates(const Polynomial& p) const;

  /// Index of a standard monomial in the basis, or dim() if m is not standard.
  std::size_t basis_index(const Monomial& m) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<RationalMatrix> var_mats_;
};

/// Matrix of a -> h*a on the algebra. h -> mult_matrix(h) is a ring homomorphism.
RationalMatrix mult_matrix(const QuotientAlgebra& algebra, const Polynomial& h);

/// Trace of multiplication by h.
Rational trace(const QuotientAlgebra& algebra, const Polynomial& h);

/// Values of a linear functional on the basis monomials.
struct LinearFunctional {
  std::vector<Rational> values;

  Rational operator()(std::span<const Rational> coordinates) const;
};

enum class FormLabel { theta_delta, theta_omega_delta, phi_form, psi_form };

std::string to_string(FormLabel label);

/// Exact symmetric bilinear form on the algebra, given by its Gram matrix.
struct SymmetricForm {
  RationalMatrix gram;
  FormLabel label = FormLabel::theta_delta;
};

/// Gram matrix of a -> T(delta * a^2): entry (i, j) = T(delta * e_i * e_j).
SymmetricForm trace_form(const QuotientAlgebra& algebra, const Polynomial& delta,
                         FormLabel label = FormLabel::theta_delta);

/// Gram matrix (i, j) = phi(weight * e_i * e_j).
SymmetricForm functional_form(const QuotientAlgebra& algebra, const LinearFunctional& phi, const Polynomial& weight,
                              FormLabel label = FormLabel::phi_form);

/// Deterministic functional with integer values uniform in [-100, 100].
LinearFunctional random_functional(const QuotientAlgebra& algebra, std::uint64_t seed);

/// Number of positive minus number of negative eigenvalues, computed exactly.
int signature(const SymmetricForm& form);
int signature(const RationalMatrix& symmetric);

/// Sign of det(gram).
int det_sign(const SymmetricForm& form);

/// Exact characteristic polynomial det(t*I - M), coefficients low to high.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// Counts of (positive, negative, zero) eigenvalues of a symmetric matrix, exact.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Inertia inertia(const RationalMatrix& symmetric);

}  // namespace stiefel
