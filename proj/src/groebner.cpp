#include "stiefel/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

using OrderedPoly = std::map<Monomial, Rational, MonomialOrder>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedPoly out(order);
  for (const auto& [m, c] : p.terms()) out.emplace_hint(out.end(), m, c);
  return out;
}

Polynomial from_ordered(const Variables& vars, const OrderedPoly& p) {
  Polynomial::TermMap terms(p.begin(), p.end());
  return Polynomial(vars, std::move(terms));
}

void make_monic(OrderedPoly& p) {
  if (p.empty()) return;
  Rational lc = p.rbegin()->second;
  if (lc == 1) return;
  for (auto& [m, c] : p) c /= lc;
}

// p -= c * shift * g
void subtract_multiple(OrderedPoly& p, const OrderedPoly& g, const Rational& c, const Monomial& shift) {
  for (const auto& [m, coeff] : g) {
    Rational delta = c * coeff;
    auto [it, inserted] = p.try_emplace(m * shift, -delta);
    if (!inserted) {
      it->second -= delta;
      if (it->second == 0) p.erase(it);
    }
  }
}

// Full reduction of p by monic divisors. Terms that no leading monomial divides move to
// the remainder; the loop always works on the current largest term.
OrderedPoly reduce(OrderedPoly p, const std::vector<const OrderedPoly*>& divisors,
                   const std::vector<const Monomial*>& leads) {
  OrderedPoly remainder(p.key_comp());
  while (!p.empty()) {
    auto top = std::prev(p.end());
    const Monomial& lm = top->first;
    std::size_t d = 0;
    while (d < divisors.size() && !leads[d]->divides(lm)) ++d;
    if (d == divisors.size()) {
      remainder.emplace_hint(remainder.begin(), top->first, top->second);
      p.erase(top);
      continue;
    }
    Monomial shift = lm.divided_by(*leads[d]);
    Rational c = top->second;
    subtract_multiple(p, *divisors[d], c, shift);
  }
  return remainder;
}

OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const Monomial& lf, const Monomial& lg) {
  Monomial l = lcm(lf, lg);
  OrderedPoly s(f.key_comp());
  subtract_multiple(s, f, Rational(-1), l.divided_by(lf));
  subtract_multiple(s, g, Rational(1), l.divided_by(lg));
  return s;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const Ideal& ideal) : order_(ideal.order()) {
    for (const auto& g : ideal.generators()) {
      OrderedPoly p = to_ordered(g, order_);
      if (!unit_) add(std::move(p));
    }
  }

  std::optional<std::vector<OrderedPoly>> run() {
    while (!unit_ && !pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const CriticalPair& a, const CriticalPair& b) {
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      CriticalPair pair = *best;
      pairs_.erase(best);
      pending_.erase({pair.i, pair.j});

      if (leads_[pair.i].coprime(leads_[pair.j])) continue;
      if (chain_criterion(pair)) continue;

      OrderedPoly h = reduce(s_polynomial(basis_[pair.i], basis_[pair.j], leads_[pair.i], leads_[pair.j]),
                             divisors(), lead_ptrs());
      if (!h.empty()) add(std::move(h));
    }
    if (unit_) return std::nullopt;
    return minimal_reduced();
  }

 private:
  void add(OrderedPoly p) {
    if (p.empty()) return;
    make_monic(p);
    Monomial lm = std::prev(p.end())->first;
    if (lm.is_one()) {
      unit_ = true;
      return;
    }
    std::size_t idx = basis_.size();
    basis_.push_back(std::move(p));
    leads_.push_back(lm);
    for (std::size_t i = 0; i < idx; ++i) {
      pairs_.push_back({i, idx, lcm(leads_[i], lm)});
      pending_.insert({i, idx});
    }
  }

  // Skip (i, j) when some other lead divides lcm(i, j) and both pairs with it are done.
  bool chain_criterion(const CriticalPair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!leads_[k].divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending_.count(key(pair.i, k)) && !pending_.count(key(pair.j, k))) return true;
    }
    return false;
  }

  std::vector<const OrderedPoly*> divisors() const {
    std::vector<const OrderedPoly*> out;
    for (const auto& b : basis_) out.push_back(&b);
    return out;
  }

  std::vector<const Monomial*> lead_ptrs() const {
    std::vector<const Monomial*> out;
    for (const auto& l : leads_) out.push_back(&l);
    return out;
  }

  std::vector<OrderedPoly> minimal_reduced() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || !leads_[j].divides(leads_[i])) continue;
        // Equal leads: keep the earlier element only.
        redundant = leads_[j] != leads_[i] || j < i;
      }
      if (!redundant) keep.push_back(i);
    }

    std::vector<OrderedPoly> reduced;
    for (std::size_t i : keep) {
      std::vector<const OrderedPoly*> others;
      std::vector<const Monomial*> other_leads;
      for (std::size_t j : keep) {
        if (j == i) continue;
        others.push_back(&basis_[j]);
        other_leads.push_back(&leads_[j]);
      }
      OrderedPoly tail = basis_[i];
      reduced.push_back(reduce(std::move(tail), others, other_leads));
      make_monic(reduced.back());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
      return order_.compare(std::prev(a.end())->first, std::prev(b.end())->first) < 0;
    });
    return reduced;
  }

  MonomialOrder order_;
  std::vector<OrderedPoly> basis_;
  std::vector<Monomial> leads_;
  std::vector<CriticalPair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_ = false;
};

}  // namespace

Ideal::Ideal(Variables vars, std::vector<Polynomial> generators)
    : Ideal(vars, std::move(generators), MonomialOrder::degrevlex(vars->size())) {}

Ideal::Ideal(Variables vars, std::vector<Polynomial> generators, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {
  if (order_.num_vars() != vars_->size()) throw DimensionError("monomial order does not match ring size");
  for (auto& g : generators) {
    if (!same_ring(g.variables(), vars_)) throw VariableMismatch("ideal generators differ in ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(Variables vars, MonomialOrder order, std::vector<Polynomial> elements)
    : vars_(std::move(vars)), order_(std::move(order)), elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    leads_.push_back(leading_monomial(e, order_));
    ordered_.push_back(to_ordered(e, order_));
  }
}

bool GroebnerBasis::is_unit() const noexcept { return leads_.size() == 1 && leads_.front().is_one(); }

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

GroebnerBasis buchberger(const Ideal& ideal) {
  Buchberger engine(ideal);
  auto result = engine.run();
  if (!result) return GroebnerBasis(ideal.variables(), ideal.order(), {Polynomial::constant(ideal.variables(), 1)});
  std::vector<Polynomial> elements;
  for (const auto& p : *result) elements.push_back(from_ordered(ideal.variables(), p));
  return GroebnerBasis(ideal.variables(), ideal.order(), std::move(elements));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.variables(), gb.variables())) throw VariableMismatch("normal form across rings");
  std::vector<const OrderedPoly*> divisors;
  std::vector<const Monomial*> leads;
  for (std::size_t i = 0; i < gb.ordered_.size(); ++i) {
    divisors.push_back(&gb.ordered_[i]);
    leads.push_back(&gb.leads_[i]);
  }
  return from_ordered(gb.variables(), reduce(to_ordered(p, gb.order()), divisors, leads));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  const std::size_t n = gb.variables()->size();
  std::vector<bool> has_power(n, false);
  for (const auto& lm : gb.leading_monomials()) {
    std::size_t v = lm.pure_power_variable();
    if (v < n) has_power[v] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw NotZeroDimensional("ideal is not zero-dimensional");
  if (gb.is_unit()) return {};
  const std::size_t n = gb.variables()->size();

  // Each exponent is bounded by the smallest pure power of that variable.
  std::vector<Monomial::Exponent> bound(n, 0);
  for (const auto& lm : gb.leading_monomials()) {
    std::size_t v = lm.pure_power_variable();
    if (v < n && (bound[v] == 0 || lm[v] < bound[v])) bound[v] = lm[v];
  }

  std::vector<Monomial> out;
  Monomial m(n);
  auto is_standard = [&](const Monomial& mono) {
    return std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                        [&](const Monomial& lm) { return lm.divides(mono); });
  };
  // Odometer over the box.
  for (;;) {
    if (is_standard(m)) out.push_back(m);
    std::size_t v = 0;
    while (v < n) {
      if (m[v] + 1 < bound[v]) {
        ++m[v];
        break;
      }
      m[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), gb.order());
  return out;
}

bool contains_one(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : generators)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return false;
  return buchberger(Ideal(nonzero.front().variables(), nonzero, order)).is_unit();
}

}  // namespace stiefel
