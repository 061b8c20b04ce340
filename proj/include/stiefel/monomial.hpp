#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace stiefel {

/// Exponent vector x_1^e_1 ... x_n^e_n. The length is fixed by the ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1) {
    Monomial m(num_vars);
    m.exps_[index] = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  /// Index of the only variable with a nonzero exponent, or size() if not a pure power.
  std::size_t pure_power_variable() const noexcept {
    std::size_t found = exps_.size();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found != exps_.size()) return exps_.size();
      found = i;
    }
    return found;
  }

  /// Quotient this / other; requires other.divides(*this).
  Monomial divided_by(const Monomial& other) const {
    Monomial q(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= other.exps_[i];
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial p(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) p.exps_[i] += b.exps_[i];
    return p;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (b.exps_[i] > l.exps_[i]) l.exps_[i] = b.exps_[i];
    return l;
  }

  // Plain lexicographic comparison of exponent vectors; used for canonical storage only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { degrevlex, lex };

/// A term order. priority[0] is the most significant variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  static MonomialOrder degrevlex(std::size_t num_vars);
  static MonomialOrder lex(std::size_t num_vars);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t num_vars() const noexcept { return priority_.size(); }

  /// -1, 0 or +1.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  /// Strict "less than", so an order can serve as a std::map comparator.
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<std::size_t> priority_;
};

}  // namespace stiefel
