#include "lefschetz/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lefschetz {

namespace {

struct OrderLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) < 0; }
};

/// Polynomial with terms sorted descending in the working order; monic once
/// it joins a basis.
struct Element {
  std::vector<Term> terms;
  int sugar = 0;
  const Monomial& lead() const { return terms.front().mono; }
};

Element to_element(const Poly& p, MonomialOrder order) {
  Element e;
  e.terms = p.terms();
  std::sort(e.terms.begin(), e.terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  for (const auto& t : e.terms) e.sugar = std::max(e.sugar, t.mono.degree());
  return e;
}

void make_monic(Element& e) {
  if (e.terms.empty() || e.terms.front().coef == 1) return;
  Rational inv = 1 / e.terms.front().coef;
  for (auto& t : e.terms) t.coef *= inv;
}

/// Full reduction of `terms` by the monic elements of `basis`, skipping index `skip`.
std::vector<Term> reduce_terms(const std::vector<Term>& terms, const std::vector<Element>& basis,
                               MonomialOrder order, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::map<Monomial, Rational, OrderLess> work(OrderLess{order});
  for (const auto& t : terms) work.emplace(t.mono, t.coef);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Monomial m = it->first;
    Rational c = std::move(it->second);
    work.erase(it);
    const Element* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].terms.empty()) continue;
      if (basis[k].lead().divides(m)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      rem.push_back({m, std::move(c)});
      continue;
    }
    Monomial q = divisor->lead().quotient_of(m);
    for (std::size_t k = 1; k < divisor->terms.size(); ++k) {
      const Term& t = divisor->terms[k];
      auto [slot, inserted] = work.try_emplace(t.mono * q, 0);
      slot->second -= c * t.coef;
      if (slot->second == 0) work.erase(slot);
    }
  }
  return rem;
}

std::vector<Term> s_polynomial(const Element& f, const Element& g, MonomialOrder order) {
  Monomial l = f.lead().lcm(g.lead());
  Monomial uf = f.lead().quotient_of(l), ug = g.lead().quotient_of(l);
  std::map<Monomial, Rational, OrderLess> acc(OrderLess{order});
  for (std::size_t k = 1; k < f.terms.size(); ++k) acc[f.terms[k].mono * uf] += f.terms[k].coef;
  for (std::size_t k = 1; k < g.terms.size(); ++k) acc[g.terms[k].mono * ug] -= g.terms[k].coef;
  std::vector<Term> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.push_back({it->first, it->second});
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

}  // namespace

std::vector<Poly> groebner_basis(int nvars, const std::vector<Poly>& generators, MonomialOrder order) {
  std::vector<Element> basis;
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Element e) {
    make_monic(e);
    std::size_t k = basis.size();
    basis.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].terms.empty()) continue;
      const Monomial& a = basis[i].lead();
      const Monomial& b = basis[k].lead();
      if (a.coprime(b)) continue;  // product criterion
      Monomial l = a.lcm(b);
      int sugar = std::max(basis[i].sugar + l.degree() - a.degree(), basis[k].sugar + l.degree() - b.degree());
      queue.push_back({i, k, l, sugar});
      pending.insert({i, k});
    }
  };

  // inputs enter in a canonical order so the run is independent of input order
  std::vector<Element> inputs;
  for (const auto& g : generators)
    if (!g.is_zero()) inputs.push_back(to_element(g, order));
  std::sort(inputs.begin(), inputs.end(), [order](const Element& a, const Element& b) {
    int c = compare(a.lead(), b.lead(), order);
    if (c != 0) return c < 0;
    return a.terms.size() < b.terms.size();
  });
  for (auto& e : inputs) {
    e.terms = reduce_terms(e.terms, basis, order);
    if (!e.terms.empty()) add(std::move(e));
  }

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [order](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = compare(a.lcm, b.lcm, order);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    queue.erase(best);
    pending.erase({p.i, p.j});

    // chain criterion
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == p.i || k == p.j || basis[k].terms.empty()) continue;
      if (!basis[k].lead().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) redundant = true;
    }
    if (redundant) continue;

    Element s;
    s.terms = reduce_terms(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    s.sugar = p.sugar;
    if (!s.terms.empty()) add(std::move(s));
  }

  // minimalize
  std::vector<Element> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool drop = false;
    for (std::size_t o = 0; o < basis.size() && !drop; ++o) {
      if (o == k) continue;
      if (basis[o].lead().divides(basis[k].lead()) && (!(basis[o].lead() == basis[k].lead()) || o < k))
        drop = true;
    }
    if (!drop) minimal.push_back(basis[k]);
  }
  // inter-reduce tails
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Term> tail(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    tail = reduce_terms(tail, minimal, order, k);
    tail.insert(tail.begin(), minimal[k].terms.front());
    minimal[k].terms = std::move(tail);
  }
  std::sort(minimal.begin(), minimal.end(),
            [order](const Element& a, const Element& b) { return compare(a.lead(), b.lead(), order) < 0; });
  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (auto& e : minimal) out.push_back(Poly::from_terms(nvars, std::move(e.terms)));
  return out;
}

Poly reduce_by_basis(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order) {
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (const auto& g : basis) {
    Element e = to_element(g, order);
    make_monic(e);
    elems.push_back(std::move(e));
  }
  Element fe = to_element(f, order);
  return Poly::from_terms(f.nvars(), reduce_terms(fe.terms, elems, order));
}

// ---------------------------------------------------------------- DualIdeal

DualIdeal::DualIdeal(int nvars, std::vector<Poly> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars) throw ValidationError("ideal generator lives in a different ring");
    if (!g.is_homogeneous()) throw ValidationError("ideal generator is not homogeneous");
    generators_.push_back(std::move(g));
  }
}

const std::vector<Poly>& DualIdeal::basis() const {
  if (!basis_) basis_ = groebner_basis(nvars_, generators_, MonomialOrder::grevlex);
  return *basis_;
}

bool DualIdeal::is_unit() const {
  for (const auto& g : generators_)
    if (g.degree() == 0) return true;
  return false;
}

DualIdeal DualIdeal::canonical() const {
  std::vector<Poly> gens;
  for (const auto& g : basis()) gens.push_back(g.normalized());
  DualIdeal out(nvars_, std::move(gens));
  out.basis_ = basis_;
  return out;
}

Poly normal_form(const Poly& f, const DualIdeal& ideal) {
  if (ideal.is_zero()) return f;
  return reduce_by_basis(f, ideal.basis(), MonomialOrder::grevlex);
}

bool ideal_contains(const DualIdeal& outer, const DualIdeal& inner) {
  if (inner.is_zero() || outer.is_unit()) return true;
  if (outer.is_zero()) return false;
  for (const auto& g : inner.generators())
    if (!normal_form(g, outer).is_zero()) return false;
  return true;
}

bool ideal_equal(const DualIdeal& a, const DualIdeal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

DualIdeal ideal_intersect(const DualIdeal& a, const DualIdeal& b) {
  if (a.nvars() != b.nvars()) throw ValidationError("intersecting ideals of different rings");
  const int n = a.nvars();
  if (a.is_zero() || b.is_zero()) return DualIdeal::zero(n);
  if (ideal_contains(a, b)) return b;
  if (ideal_contains(b, a)) return a;

  const int m = n + 1;  // t is variable 0
  Poly t = Poly::variable(m, 0);
  Poly one_minus_t = Poly::constant(m, 1) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.widened(m, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.widened(m, 1));
  std::vector<Poly> out;
  for (const auto& g : groebner_basis(m, gens, MonomialOrder::elim1)) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const Term& tm) { return tm.mono[0] != 0; });
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& tm : g.terms()) {
      Monomial mono(n);
      for (int i = 0; i < n; ++i) mono.set(i, tm.mono[i + 1]);
      terms.push_back({mono, tm.coef});
    }
    out.push_back(Poly::from_terms(n, std::move(terms)).normalized());
  }
  return DualIdeal(n, std::move(out));
}

}  // namespace lefschetz
