#include "stiefel/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "stiefel/errors.hpp"

namespace stiefel {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw DimensionError("monomial order priority is not a permutation");
}

MonomialOrder MonomialOrder::degrevlex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::degrevlex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
  std::vector<std::size_t> p(num_vars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(OrderKind::lex, std::move(p));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == OrderKind::lex) {
    for (std::size_t v : priority_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic: the smaller exponent in the least significant variable wins.
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    std::size_t v = *it;
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace stiefel
