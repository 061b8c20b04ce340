#include "stiefel/quotient_algebra.hpp"

#include <algorithm>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

// Coordinates of monomials in the algebra, memoised per call site.
// coords(m) = M_v * coords(m / x_v) for any v dividing m, bottoming out at basis monomials.
class MonomialCoordinates {
 public:
  explicit MonomialCoordinates(const QuotientAlgebra& algebra) : algebra_(algebra) {}

  const std::vector<Rational>& of(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::vector<Rational> coords;
    std::size_t idx = algebra_.basis_index(m);
    if (idx < algebra_.dim()) {
      coords.assign(algebra_.dim(), Rational(0));
      coords[idx] = 1;
    } else {
      std::size_t v = 0;
      while (m[v] == 0) ++v;
      Monomial lower(m);
      lower[v] -= 1;
      std::vector<Rational> below = of(lower);
      coords = algebra_.variable_matrix(v).apply(below);
    }
    return memo_.emplace(m, std::move(coords)).first->second;
  }

  std::vector<Rational> of(const Polynomial& p, const Monomial& shift) {
    std::vector<Rational> out(algebra_.dim());
    for (const auto& [m, c] : p.terms()) {
      const auto& v = of(m * shift);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (v[i] != 0) out[i] += c * v[i];
    }
    return out;
  }

 private:
  const QuotientAlgebra& algebra_;
  std::map<Monomial, std::vector<Rational>> memo_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// gram(i, j) = weights . coords(e_i e_j)
RationalMatrix product_gram(const QuotientAlgebra& algebra, MonomialCoordinates& coords,
                            std::span<const Rational> weights) {
  const std::size_t d = algebra.dim();
  RationalMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = dot(weights, coords.of(algebra.basis()[i] * algebra.basis()[j]));
      gram(i, j) = v;
      gram(j, i) = v;
    }
  return gram;
}

void check_ring(const QuotientAlgebra& algebra, const Polynomial& p) {
  if (!same_ring(algebra.variables(), p.variables())) throw VariableMismatch("polynomial is not in the algebra's ring");
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
  basis_ = standard_monomials(gb_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  const std::size_t n = gb_.variables()->size();
  const std::size_t d = basis_.size();
  var_mats_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    RationalMatrix m(d, d);
    Polynomial xv = Polynomial::variable(gb_.variables(), v);
    for (std::size_t j = 0; j < d; ++j) {
      Polynomial image = normal_form(Polynomial::term(gb_.variables(), basis_[j], 1) * xv, gb_);
      for (const auto& [mono, c] : image.terms()) m(basis_index(mono), j) = c;
    }
    var_mats_.push_back(std::move(m));
  }
}

std::size_t QuotientAlgebra::basis_index(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? basis_.size() : it->second;
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p) const {
  if (!same_ring(p.variables(), variables())) throw VariableMismatch("polynomial is not in the algebra's ring");
  std::vector<Rational> out(dim());
  for (const auto& [m, c] : normal_form(p, gb_).terms()) {
    std::size_t idx = basis_index(m);
    if (idx >= dim()) throw Error("normal form contains a non-standard monomial");
    out[idx] = c;
  }
  return out;
}

RationalMatrix mult_matrix(const QuotientAlgebra& algebra, const Polynomial& h) {
  check_ring(algebra, h);
  MonomialCoordinates coords(algebra);
  const std::size_t d = algebra.dim();
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = coords.of(h, algebra.basis()[j]);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = std::move(col[i]);
  }
  return m;
}

Rational trace(const QuotientAlgebra& algebra, const Polynomial& h) {
  check_ring(algebra, h);
  MonomialCoordinates coords(algebra);
  Rational t = 0;
  for (std::size_t j = 0; j < algebra.dim(); ++j) t += coords.of(h, algebra.basis()[j])[j];
  return t;
}

Rational LinearFunctional::operator()(std::span<const Rational> coordinates) const {
  if (coordinates.size() != values.size()) throw DimensionError("functional applied to wrong-size vector");
  return dot(values, coordinates);
}

std::string to_string(FormLabel label) {
  switch (label) {
    case FormLabel::theta_delta:
      return "theta_delta";
    case FormLabel::theta_omega_delta:
      return "theta_omega_delta";
    case FormLabel::phi_form:
      return "phi_form";
    case FormLabel::psi_form:
      return "psi_form";
  }
  return "unknown";
}

SymmetricForm trace_form(const QuotientAlgebra& algebra, const Polynomial& delta, FormLabel label) {
  check_ring(algebra, delta);
  const std::size_t d = algebra.dim();
  MonomialCoordinates coords(algebra);
  // t_l = T(e_l) = sum_j coords(e_l e_j)[j]
  std::vector<Rational> traces(d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t j = 0; j < d; ++j) traces[l] += coords.of(algebra.basis()[l] * algebra.basis()[j])[j];
  // T(delta * q) = (M_delta^T t) . coords(q)
  RationalMatrix m_delta = mult_matrix(algebra, delta);
  auto weights = m_delta.apply_transpose(traces);
  return {product_gram(algebra, coords, weights), label};
}

SymmetricForm functional_form(const QuotientAlgebra& algebra, const LinearFunctional& phi, const Polynomial& weight,
                              FormLabel label) {
  check_ring(algebra, weight);
  if (phi.values.size() != algebra.dim()) throw DimensionError("functional size differs from algebra dimension");
  MonomialCoordinates coords(algebra);
  auto weights = mult_matrix(algebra, weight).apply_transpose(phi.values);
  return {product_gram(algebra, coords, weights), label};
}

LinearFunctional random_functional(const QuotientAlgebra& algebra, std::uint64_t seed) {
  std::uint64_t state = seed;
  LinearFunctional phi;
  phi.values.reserve(algebra.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    phi.values.emplace_back(static_cast<long>(splitmix64(state) % 201) - 100);
  return phi;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& input) {
  if (!input.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix h = input;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    Rational pivot = h(m, m - 1);
    for (i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      Rational u = h(i, m - 1) / pivot;
      for (std::size_t c = 0; c < n; ++c)
        if (h(m, c) != 0) h(i, c) -= u * h(m, c);
      for (std::size_t r = 0; r < n; ++r)
        if (h(r, i) != 0) h(r, m) += u * h(r, i);
    }
  }

  // p_m = (t - h_mm) p_{m-1} - sum_{i<m} h_im (h_{i+1,i} ... h_{m,m-1}) p_{i-1}, 1-based.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> next(m + 1);
    const auto& prev = p[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] += prev[k];
      next[k] -= h(m - 1, m - 1) * prev[k];
    }
    Rational t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t == 0) break;
      Rational f = t * h(i - 1, m - 1);
      if (f == 0) continue;
      const auto& q = p[i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) next[k] -= f * q[k];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DimensionError("inertia requires a symmetric matrix");
  // Congruence reduction: 1x1 pivots on nonzero diagonal entries, otherwise a
  // hyperbolic 2x2 pivot [[0, b], [b, 0]], which contributes one of each sign.
  RationalMatrix m = symmetric;
  std::vector<std::size_t> active(m.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Inertia out;
  auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return m(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational pivot = m(p, p);
      (pivot > 0 ? out.positive : out.negative) += 1;
      drop(p);
      for (std::size_t a : active) {
        if (m(a, p) == 0) continue;
        Rational f = m(a, p) / pivot;
        for (std::size_t b : active)
          if (m(p, b) != 0) m(a, b) -= f * m(p, b);
      }
      continue;
    }
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size() && !found; ++a)
      for (std::size_t b = a + 1; b < active.size() && !found; ++b)
        if (m(active[a], active[b]) != 0) {
          pi = active[a];
          pj = active[b];
          found = true;
        }
    if (!found) {
      out.zero += active.size();
      break;
    }
    const Rational inv = 1 / m(pi, pj);
    out.positive += 1;
    out.negative += 1;
    drop(pi);
    drop(pj);
    // Schur complement: m_ab -= (m_a,i m_j,b + m_a,j m_i,b) / m_ij
    std::vector<Rational> ci, cj;
    for (std::size_t a : active) {
      ci.push_back(m(a, pi));
      cj.push_back(m(a, pj));
    }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y) {
        Rational t = ci[x] * cj[y] + cj[x] * ci[y];
        if (t != 0) m(active[x], active[y]) -= t * inv;
      }
  }
  return out;
}

int signature(const RationalMatrix& symmetric) {
  Inertia i = inertia(symmetric);
  return static_cast<int>(i.positive) - static_cast<int>(i.negative);
}

int signature(const SymmetricForm& form) { return signature(form.gram); }

int det_sign(const SymmetricForm& form) { return rational_matrix_det_sign(form.gram); }

}  // namespace stiefel
