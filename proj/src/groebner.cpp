#include "krullcert/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace krullcert {

// -------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidInput("variable priority is not a permutation");
  }
  storage_ = kind_ == Kind::Lex;
  for (std::size_t i = 0; storage_ && i < priority_.size(); ++i) storage_ = priority_[i] == i;
}

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  return MonomialOrder(Kind::Lex, std::move(priority));
}

MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
  std::vector<std::size_t> p(arity);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::GrevLex, std::move(p));
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> priority, std::size_t split) {
  if (split > priority.size()) throw InvalidInput("block split out of range");
  MonomialOrder order(Kind::Block, std::move(priority));
  order.split_ = split;
  return order;
}

std::strong_ordering MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b,
                                                  std::size_t lo, std::size_t hi) const {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[priority_[i]];
    db += b[priority_[i]];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    auto v = priority_[i];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (auto v : priority_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  if (kind_ == Kind::Block) {
    auto first = grevlex_range(a, b, 0, split_);
    if (first != 0) return first;
    return grevlex_range(a, b, split_, priority_.size());
  }
  return grevlex_range(a, b, 0, priority_.size());
}

std::size_t MonomialOrder::lead_index(const Polynomial& p) const {
  if (p.is_zero()) throw InvalidInput("zero polynomial has no leading term");
  if (storage_) return 0;
  const auto& t = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (compare(t[i].monomial, t[best].monomial) > 0) best = i;
  }
  return best;
}

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

// ------------------------------------------------------------ reduction

namespace {

Polynomial remove_term(const Polynomial& p, std::size_t idx) {
  std::vector<Term> t = p.terms();
  t.erase(t.begin() + static_cast<std::ptrdiff_t>(idx));
  return Polynomial::from_canonical(p.ring(), std::move(t));
}

/// Full reduction of p by divisors (with precomputed leading data). The
/// callback receives (divisor index, quotient monomial, quotient coefficient)
/// for every reduction step.
template <class OnStep>
Polynomial reduce_full(Polynomial cur, std::span<const Polynomial> divisors,
                       std::span<const Term> leads, const MonomialOrder& order, OnStep&& on_step) {
  const Field& f = cur.ring()->field();
  std::vector<Term> rem;
  while (!cur.is_zero()) {
    std::size_t idx = order.lead_index(cur);
    const Term& lt = cur.terms()[idx];
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divisors[i].is_zero() && leads[i].monomial.divides(lt.monomial)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      rem.push_back(lt);
      cur = remove_term(cur, idx);
      continue;
    }
    Monomial qm = lt.monomial / leads[hit].monomial;
    Coefficient qc = f.div(lt.coeff, leads[hit].coeff);
    on_step(hit, qm, qc);
    cur = cur - divisors[hit].times_term(qm, qc);
  }
  return Polynomial(cur.ring(), std::move(rem));
}

std::vector<Term> leading_terms(std::span<const Polynomial> polys, const MonomialOrder& order) {
  std::vector<Term> leads;
  leads.reserve(polys.size());
  for (const auto& p : polys) {
    leads.push_back(p.is_zero() ? Term{} : order.lead(p));
  }
  return leads;
}

RingPtr common_ring(std::span<const Polynomial> gens, const RingPtr& fallback = nullptr) {
  RingPtr ring = fallback;
  for (const auto& g : gens) {
    if (!ring) ring = g.ring();
    require_same_ring(ring, g.ring());
  }
  return ring;
}

}  // namespace

Division divide(const Polynomial& p, std::span<const Polynomial> divisors,
                const MonomialOrder& order) {
  for (const auto& d : divisors) require_same_ring(p, d);
  Division out;
  out.quotients.assign(divisors.size(), Polynomial(p.ring()));
  auto leads = leading_terms(divisors, order);
  // Quotient terms are gathered per divisor, then assembled once.
  std::vector<std::vector<Term>> qterms(divisors.size());
  out.remainder = reduce_full(p, divisors, leads, order,
                              [&](std::size_t i, const Monomial& m, const Coefficient& c) {
                                qterms[i].push_back(Term{m, c});
                              });
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    out.quotients[i] = Polynomial(p.ring(), std::move(qterms[i]));
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (gb.ring) require_same_ring(p.ring(), gb.ring);
  if (p.is_zero() || gb.basis.empty()) return p;
  auto leads = leading_terms(gb.basis, gb.order);
  return reduce_full(p, gb.basis, leads, gb.order,
                     [](std::size_t, const Monomial&, const Coefficient&) {});
}

// ----------------------------------------------------------- Buchberger

namespace {

struct Element {
  Polynomial poly;
  std::vector<Polynomial> cof;
  Term lead;
  std::uint64_t sugar = 0;
};

class Builder {
 public:
  Builder(RingPtr ring, const MonomialOrder& order, std::size_t inputs, bool track)
      : ring_(std::move(ring)), order_(order), inputs_(inputs), track_(track) {}

  void add_input(std::size_t k, const Polynomial& g) {
    std::vector<Polynomial> cof;
    if (track_) {
      cof.assign(inputs_, Polynomial(ring_));
      cof[k] = Polynomial::constant(ring_, 1);
    }
    push(g, std::move(cof), g.total_degree());
  }

  void run() {
    while (!pending_.empty()) {
      auto pair = select_pair();
      pending_.erase(pair);
      auto [i, j] = pair;
      const Monomial& mi = elems_[i].lead.monomial;
      const Monomial& mj = elems_[j].lead.monomial;
      if (gcd(mi, mj).is_one()) continue;
      Monomial l = lcm(mi, mj);
      if (chain_criterion(i, j, l)) continue;
      auto sugar = pair_sugar(i, j, l);
      auto s = spoly(i, j, l);
      auto reduced = reduce(std::move(s.first), std::move(s.second));
      if (!reduced.first.is_zero()) {
        push(std::move(reduced.first), std::move(reduced.second), sugar);
      }
    }
  }

  GroebnerBasis finish() {
    GroebnerBasis gb;
    gb.ring = ring_;
    gb.order = order_;
    gb.input_count = inputs_;
    gb.has_cofactors = track_;

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < elems_.size() && !redundant; ++j) {
        if (j == i) continue;
        const auto& mj = elems_[j].lead.monomial;
        const auto& mi = elems_[i].lead.monomial;
        if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }

    std::vector<Polynomial> minimal;
    for (auto i : keep) minimal.push_back(elems_[i].poly);
    auto leads = leading_terms(minimal, order_);

    std::vector<Element> reduced;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      const Element& e = elems_[keep[a]];
      // Tail reduction against the other minimal elements; the leading term
      // is irreducible by minimality.
      std::vector<Polynomial> others;
      std::vector<Term> other_leads;
      std::vector<std::size_t> other_idx;
      for (std::size_t b = 0; b < keep.size(); ++b) {
        if (b == a) continue;
        others.push_back(minimal[b]);
        other_leads.push_back(leads[b]);
        other_idx.push_back(keep[b]);
      }
      std::vector<Polynomial> cof = e.cof;
      Polynomial r = reduce_full(e.poly, others, other_leads, order_,
                                 [&](std::size_t i, const Monomial& m, const Coefficient& c) {
                                   if (!track_) return;
                                   const auto& oc = elems_[other_idx[i]].cof;
                                   for (std::size_t k = 0; k < inputs_; ++k) {
                                     if (!oc[k].is_zero()) cof[k] -= oc[k].times_term(m, c);
                                   }
                                 });
      reduced.push_back(Element{std::move(r), std::move(cof), e.lead, e.sugar});
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Element& x, const Element& y) {
      return order_.compare(x.lead.monomial, y.lead.monomial) > 0;
    });
    for (auto& e : reduced) {
      gb.basis.push_back(std::move(e.poly));
      if (track_) gb.cofactors.push_back(std::move(e.cof));
    }
    return gb;
  }

 private:
  using Pair = std::pair<std::size_t, std::size_t>;

  void push(Polynomial p, std::vector<Polynomial> cof, std::uint64_t sugar) {
    const Field& f = ring_->field();
    Term lt = order_.lead(p);
    if (lt.coeff != 1) {
      Coefficient inv = f.div(Coefficient(1), lt.coeff);
      p = p.scaled(inv);
      for (auto& c : cof) c = c.scaled(inv);
      lt.coeff = 1;
    }
    std::size_t idx = elems_.size();
    elems_.push_back(Element{std::move(p), std::move(cof), std::move(lt), sugar});
    for (std::size_t i = 0; i < idx; ++i) pending_.insert({i, idx});
  }

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const Element& a = elems_[i];
    const Element& b = elems_[j];
    return std::max(l.degree() - a.lead.monomial.degree() + a.sugar,
                    l.degree() - b.lead.monomial.degree() + b.sugar);
  }

  Pair select_pair() const {
    // Sugar strategy: smallest sugar, then smallest lcm, then index.
    const Pair* best = nullptr;
    Monomial best_lcm;
    std::uint64_t best_sugar = 0;
    for (const auto& pr : pending_) {
      Monomial l = lcm(elems_[pr.first].lead.monomial, elems_[pr.second].lead.monomial);
      auto sugar = pair_sugar(pr.first, pr.second, l);
      if (!best || sugar < best_sugar ||
          (sugar == best_sugar && order_.compare(l, best_lcm) < 0)) {
        best = &pr;
        best_lcm = std::move(l);
        best_sugar = sugar;
      }
    }
    return *best;
  }

  bool chain_criterion(std::size_t i, std::size_t j, const Monomial& l) const {
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (k == i || k == j) continue;
      if (!elems_[k].lead.monomial.divides(l)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending_.contains(ik) && !pending_.contains(jk)) return true;
    }
    return false;
  }

  std::pair<Polynomial, std::vector<Polynomial>> spoly(std::size_t i, std::size_t j,
                                                       const Monomial& l) const {
    const Element& a = elems_[i];
    const Element& b = elems_[j];
    Monomial ma = l / a.lead.monomial;
    Monomial mb = l / b.lead.monomial;
    Coefficient one(1);
    Polynomial s = a.poly.times_term(ma, one) - b.poly.times_term(mb, one);
    std::vector<Polynomial> cof;
    if (track_) {
      cof.resize(inputs_, Polynomial(ring_));
      for (std::size_t k = 0; k < inputs_; ++k) {
        cof[k] = a.cof[k].times_term(ma, one) - b.cof[k].times_term(mb, one);
      }
    }
    return {std::move(s), std::move(cof)};
  }

  std::pair<Polynomial, std::vector<Polynomial>> reduce(Polynomial p, std::vector<Polynomial> cof) {
    std::vector<Polynomial> polys;
    std::vector<Term> leads;
    polys.reserve(elems_.size());
    for (const auto& e : elems_) {
      polys.push_back(e.poly);
      leads.push_back(e.lead);
    }
    Polynomial r = reduce_full(std::move(p), polys, leads, order_,
                               [&](std::size_t i, const Monomial& m, const Coefficient& c) {
                                 if (!track_) return;
                                 for (std::size_t k = 0; k < inputs_; ++k) {
                                   if (!elems_[i].cof[k].is_zero()) {
                                     cof[k] -= elems_[i].cof[k].times_term(m, c);
                                   }
                                 }
                               });
    return {std::move(r), std::move(cof)};
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::size_t inputs_;
  bool track_;
  std::vector<Element> elems_;
  std::set<Pair> pending_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         bool track_cofactors) {
  RingPtr ring = common_ring(gens);
  if (!ring) {
    GroebnerBasis empty;
    empty.order = order;
    empty.has_cofactors = track_cofactors;
    return empty;
  }
  if (order.arity() != ring->arity()) throw ShapeError("monomial order arity does not match ring");
  Builder builder(ring, order, gens.size(), track_cofactors);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_zero()) builder.add_input(k, gens[k]);
  }
  builder.run();
  return builder.finish();
}

// ----------------------------------------------------------- membership

std::optional<CofactorCombo> ideal_membership(const Polynomial& p, const GroebnerBasis& gb) {
  if (!gb.has_cofactors) throw InvalidInput("membership with cofactors needs a tracked basis");
  if (gb.ring) require_same_ring(p.ring(), gb.ring);
  CofactorCombo combo(gb.input_count, Polynomial(p.ring()));
  if (p.is_zero()) return combo;
  if (gb.basis.empty()) return std::nullopt;
  Division d = divide(p, gb.basis, gb.order);
  if (!d.remainder.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t k = 0; k < gb.input_count; ++k) {
      if (!gb.cofactors[i][k].is_zero()) combo[k] += d.quotients[i] * gb.cofactors[i][k];
    }
  }
  return combo;
}

std::optional<CofactorCombo> ideal_membership(const Polynomial& p,
                                              std::span<const Polynomial> gens) {
  common_ring(gens, p.ring());
  if (gens.empty()) {
    if (p.is_zero()) return CofactorCombo{};
    return std::nullopt;
  }
  auto gb = buchberger(gens, MonomialOrder::grevlex(p.ring()->arity()), true);
  gb.input_count = gens.size();
  return ideal_membership(p, gb);
}

namespace {

bool all_monomial(std::span<const Polynomial> gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Polynomial& g) { return g.is_zero() || g.is_monomial(); });
}

std::optional<RadicalWitness> radical_monomial(const Polynomial& p,
                                               std::span<const Polynomial> gens) {
  const RingPtr& ring = p.ring();
  const Field& f = ring->field();
  const Term& pt = p.terms()[0];
  std::optional<std::uint32_t> best;
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    const Monomial& g = gens[k].terms()[0].monomial;
    std::uint32_t need = 1;
    bool ok = true;
    for (std::size_t v = 0; v < g.arity() && ok; ++v) {
      if (g[v] == 0) continue;
      if (pt.monomial[v] == 0) {
        ok = false;
        break;
      }
      need = std::max(need, (g[v] + pt.monomial[v] - 1) / pt.monomial[v]);
    }
    if (ok && (!best || need < *best)) {
      best = need;
      best_k = k;
    }
  }
  if (!best) return std::nullopt;
  if (*best > kRadicalExponentCap) throw Error("radical membership exponent cap reached");
  RadicalWitness w;
  w.exponent = *best;
  w.cofactors.assign(gens.size(), Polynomial(ring));
  Polynomial power = p.pow(w.exponent);
  const Term& pw = power.terms()[0];
  const Term& gt = gens[best_k].terms()[0];
  w.cofactors[best_k] =
      Polynomial::monomial(ring, pw.monomial / gt.monomial, f.div(pw.coeff, gt.coeff));
  return w;
}

}  // namespace

std::optional<RadicalWitness> radical_membership_generic(const Polynomial& p,
                                                         std::span<const Polynomial> gens) {
  common_ring(gens, p.ring());
  const RingPtr& ring = p.ring();
  if (p.is_zero()) return RadicalWitness{1, CofactorCombo(gens.size(), Polynomial(ring))};

  // Rabinowitsch test: p is in the radical iff 1 is in (gens, 1 - z*p).
  RingPtr ext = extend_ring(ring, {ring->fresh_name("z")});
  std::vector<Polynomial> rab;
  rab.reserve(gens.size() + 1);
  for (const auto& g : gens) rab.push_back(g.embed(ext));
  Polynomial z = Polynomial::variable(ext, ring->arity());
  rab.push_back(Polynomial::constant(ext, 1) - z * p.embed(ext));
  if (!buchberger(rab, MonomialOrder::grevlex(ext->arity()), false).is_unit()) return std::nullopt;

  auto gb = buchberger(gens, MonomialOrder::grevlex(ring->arity()), true);
  Polynomial power = p;
  for (std::uint32_t m = 1; m <= kRadicalExponentCap; ++m) {
    if (auto combo = ideal_membership(power, gb)) return RadicalWitness{m, std::move(*combo)};
    power = power * p;
  }
  throw Error("radical membership exponent cap reached");
}

std::optional<RadicalWitness> radical_membership(const Polynomial& p,
                                                 std::span<const Polynomial> gens) {
  common_ring(gens, p.ring());
  if (p.is_monomial() && all_monomial(gens)) return radical_monomial(p, gens);
  return radical_membership_generic(p, gens);
}

// ---------------------------------------------------------- elimination

std::vector<Polynomial> elimination(std::span<const Polynomial> gens,
                                    const std::vector<std::size_t>& keep) {
  RingPtr ring = common_ring(gens);
  if (!ring) return {};
  std::vector<bool> kept(ring->arity(), false);
  for (auto v : keep) {
    if (v >= ring->arity()) throw ShapeError("kept variable out of range");
    kept[v] = true;
  }
  const auto keep_count = static_cast<std::size_t>(std::count(kept.begin(), kept.end(), true));
  std::vector<std::size_t> priority;
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    if (!kept[v]) priority.push_back(v);
  }
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    if (kept[v]) priority.push_back(v);
  }
  const std::size_t split = ring->arity() - keep_count;
  auto gb = buchberger(gens, MonomialOrder::block(std::move(priority), split), false);
  std::vector<Polynomial> out;
  for (auto& g : gb.basis) {
    auto used = g.variables_used();
    if (std::all_of(used.begin(), used.end(), [&](std::size_t v) { return kept[v]; })) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Polynomial> ideal_intersection(std::span<const Polynomial> a,
                                           std::span<const Polynomial> b) {
  RingPtr ring = common_ring(b, common_ring(a));
  if (!ring) return {};
  RingPtr ext = extend_ring(ring, {ring->fresh_name("t")});
  Polynomial t = Polynomial::variable(ext, ring->arity());
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a) gens.push_back(t * g.embed(ext));
  for (const auto& g : b) gens.push_back(one_minus_t * g.embed(ext));
  std::vector<std::size_t> keep(ring->arity());
  std::iota(keep.begin(), keep.end(), 0);
  std::vector<Polynomial> out;
  for (const auto& g : elimination(gens, keep)) out.push_back(g.embed(ring));
  return out;
}

std::vector<Polynomial> ideal_quotient(std::span<const Polynomial> ideal, const Polynomial& x) {
  common_ring(ideal, x.ring());
  if (x.is_zero()) return {Polynomial::constant(x.ring(), 1)};
  std::vector<Polynomial> xs{x};
  std::vector<Polynomial> out;
  for (const auto& g : ideal_intersection(ideal, xs)) out.push_back(divide_exact(g, x));
  return out;
}

bool is_unit_ideal(std::span<const Polynomial> gens) {
  if (gens.empty()) return false;
  for (const auto& g : gens) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return buchberger(gens, MonomialOrder::grevlex(gens[0].ring()->arity()), false).is_unit();
}

bool is_nonzerodivisor(const Polynomial& x, std::span<const Polynomial> ideal_gens) {
  common_ring(ideal_gens, x.ring());
  if (x.is_zero()) return is_unit_ideal(ideal_gens);
  auto quotient = ideal_quotient(ideal_gens, x);
  auto gb = buchberger(ideal_gens, MonomialOrder::grevlex(x.ring()->arity()), false);
  gb.ring = x.ring();
  for (const auto& q : quotient) {
    if (!normal_form(q, gb).is_zero()) return false;
  }
  return true;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::vector<Polynomial> qs{q};
  Division d = divide(p, qs, MonomialOrder::lex(p.ring()->arity()));
  if (!d.remainder.is_zero()) throw InvalidInput("polynomial division is not exact");
  return d.quotients[0];
}

}  // namespace krullcert
