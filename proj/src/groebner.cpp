/*
   Copyright 2026 The weyldim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "weyldim/groebner.hpp"

#include <algorithm>

#include <set>
#include <string>
#include <utility>

#include "weyldim/error.hpp"

namespace weyldim {

OrderSequence OrderSequence::suffix(std::size_t r, std::size_t p) {
  OrderSequence s;
  s.head = r;
  for (std::size_t i = r + 1; i < p; ++i) s.tail.push_back(i);
  return s;
}

void OrderSequence::validate(std::size_t p) const {
  std::vector<bool> seen(p, false);
  auto mark = [&](std::size_t i) {
    if (i >= p) throw InputError("order index " + std::to_string(i + 1) + " out of range");
    if (seen[i]) throw InputError("order sequence repeats <_" + std::to_string(i + 1));
    seen[i] = true;
  };
  mark(head);
  for (std::size_t i : tail) mark(i);
}

BasisEntry::BasisEntry(ModuleElement f, const Partition& P) : element(std::move(f)) {
  if (element.is_zero()) throw InputError("basis elements must be nonzero");
  for (std::size_t i = 0; i < P.nblocks(); ++i) {
    leaders.push_back(leader(element, P, i));
    leader_orders.push_back(leaders.back().term.mono.block_order(P, i));
  }
  rho.head = leaders[0].term;
  for (std::size_t i = 1; i < P.nblocks(); ++i)
    rho.d.push_back(leader_orders[i] - rho.head.mono.block_order(P, i));
}

GroebnerBasis::GroebnerBasis(Partition P, std::size_t rank, std::vector<ModuleElement> elements)
    : P_(std::move(P)), rank_(rank), certified_(P_.nblocks(), false) {
  for (auto& f : elements) push_back(std::move(f));
}

std::vector<ModuleElement> GroebnerBasis::elements() const {
  std::vector<ModuleElement> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.element);
  return out;
}

void GroebnerBasis::push_back(ModuleElement f) {
  if (f.nvars() != P_.nvars() || f.rank() != rank_)
    throw InputError("basis element does not match the partition or module rank");
  entries_.emplace_back(std::move(f), P_);
  std::fill(certified_.begin(), certified_.end(), false);
}

bool GroebnerBasis::fully_certified() const {
  for (bool c : certified_)
    if (!c) return false;
  return true;
}

namespace {

// Eligibility of w for a (head, tail)-reduction step by basis entry g, given
// the current maxima ord_{tail[v]} of the element being reduced.
std::optional<Monomial> eligible_quotient(const Term& w, const BasisEntry& g,
                                          const Partition& P, const OrderSequence& S,
                                          std::span<const unsigned> bounds) {
  auto theta = term_divides(g.leaders[S.head].term, w);
  if (!theta) return std::nullopt;
  for (std::size_t v = 0; v < S.tail.size(); ++v) {
    std::size_t i = S.tail[v];
    if (theta->block_order(P, i) + g.leader_orders[i] > bounds[v]) return std::nullopt;
  }
  return theta;
}

// Scales f to integer coefficients with content 1 and a positive leading
// coefficient under the lexicographic key order.
ModuleElement primitive(const ModuleElement& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& [t, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational k(den, num);
  k.canonicalize();
  if (f.terms().rbegin()->second < 0) k = -k;
  return k * f;
}

// With fraction_free set, the remainder is only determined up to a nonzero
// scalar and quotients are not recorded; coefficients stay integral when
// the inputs are.
Reduction reduce_impl(const ModuleElement& f, std::span<const BasisEntry> G,
                      const Partition& P, const OrderSequence& S,
                      bool fraction_free = false) {
  S.validate(P.nblocks());
  if (f.nvars() != P.nvars()) throw InputError("element does not match the partition");
  for (const auto& g : G)
    if (g.element.rank() != f.rank() || g.element.nvars() != f.nvars())
      throw InputError("basis element shape differs from the reduced element");

  std::map<Term, Rational, TermOrderLess> work(TermOrderLess{&P, S.head});
  for (const auto& [t, c] : f.terms()) work.emplace(t, c);

  Reduction out;
  out.quotients.assign(G.size(), WeylElement(f.nvars()));
  std::vector<unsigned> bounds(S.tail.size());

  while (!work.empty()) {
    std::fill(bounds.begin(), bounds.end(), 0u);
    for (const auto& [t, c] : work)
      for (std::size_t v = 0; v < S.tail.size(); ++v)
        bounds[v] = std::max(bounds[v], t.mono.block_order(P, S.tail[v]));

    const Term* z = nullptr;
    std::size_t chosen = 0;
    Monomial theta;
    for (auto it = work.rbegin(); it != work.rend() && !z; ++it) {
      for (std::size_t i = 0; i < G.size(); ++i) {
        auto q = eligible_quotient(it->first, G[i], P, S, bounds);
        if (!q) continue;
        if (z && term_compare(P, S.head, G[i].leaders[S.head].term,
                              G[chosen].leaders[S.head].term) <= 0)
          continue;
        z = &it->first;
        chosen = i;
        theta = *q;
      }
    }
    if (!z) break;

    const BasisEntry& g = G[chosen];
    ModuleElement shifted = act(theta, g.element);
    Rational c;
    if (fraction_free) {
      Integer a = g.leaders[S.head].coeff.get_num();
      Integer b = work.at(*z).get_num();
      Integer d = gcd(a, b);
      a /= d;
      c = Rational(b / d);
      if (a != 1)
        for (auto& [t, v] : work) v *= a;
    } else {
      c = work.at(*z) / g.leaders[S.head].coeff;
    }
    for (const auto& [t, v] : shifted.terms()) {
      auto [it, inserted] = work.try_emplace(t, 0);
      it->second -= c * v;
      if (it->second == 0) work.erase(it);
    }
    ++out.steps;
    if (!fraction_free) {
      out.quotients[chosen].add_term(theta, c);
    } else if (out.steps % 8 == 0 && !work.empty()) {
      Integer content = 0;
      for (const auto& [t, v] : work) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
      if (content != 1)
        for (auto& [t, v] : work) v /= content;
    }
  }

  out.remainder = ModuleElement(f.nvars(), f.rank());
  for (const auto& [t, c] : work) out.remainder.add_term(t, c);
  if (fraction_free) out.remainder = primitive(out.remainder);
  return out;
}

// Reduced Groebner basis for the single order <_q. Elements whose leader
// becomes divisible by a newer leader are retired; their pending pairs are
// still processed, which keeps the chain criterion valid.
std::vector<ModuleElement> reduced_single_order(const Partition& P, std::size_t q,
                                                std::vector<ModuleElement> gens,
                                                const CompletionOptions& options) {
  const OrderSequence seq{q, {}};
  std::vector<BasisEntry> all;
  std::vector<bool> active;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  auto active_entries = [&] {
    std::vector<BasisEntry> out;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (active[k]) out.push_back(all[k]);
    return out;
  };
  auto insert = [&](ModuleElement h) {
    if (all.size() >= options.max_basis_size)
      throw ConvergenceError("Groebner basis completion exceeded " +
                             std::to_string(options.max_basis_size) + " elements");
    all.emplace_back(primitive(h), P);
    const std::size_t n = all.size() - 1;
    active.push_back(true);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k]) continue;
      pairs.emplace_back(k, n);
      if (term_divides(all[n].leaders[q].term, all[k].leaders[q].term)) active[k] = false;
    }
  };
  for (auto& f : gens) {
    ModuleElement h = reduce_impl(primitive(f), active_entries(), P, seq, true).remainder;
    if (!h.is_zero()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto lk = term_lcm(all[pairs[k].first].leaders[q].term, all[pairs[k].second].leaders[q].term);
      auto lb = term_lcm(all[pairs[best].first].leaders[q].term,
                         all[pairs[best].second].leaders[q].term);
      if (!lk) continue;
      if (!lb || term_compare(P, q, *lk, *lb) < 0) best = k;
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    ModuleElement s = s_poly(all[i].element, all[j].element, P, q);
    if (s.is_zero()) continue;
    ModuleElement h = reduce_impl(primitive(s), active_entries(), P, seq, true).remainder;
    if (!h.is_zero()) insert(std::move(h));
  }

  std::vector<ModuleElement> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (active[k]) out.push_back(all[k].element);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::vector<BasisEntry> others;
    for (std::size_t l = 0; l < out.size(); ++l)
      if (l != k) others.emplace_back(out[l], P);
    Leader lead = leader(out[k], P, q);
    ModuleElement tail = out[k];
    tail.add_term(lead.term, -lead.coeff);
    ModuleElement reduced = reduce_impl(tail, others, P, seq).remainder;
    reduced.add_term(lead.term, lead.coeff);
    out[k] = std::move(reduced);
  }
  return out;
}

}  // namespace

bool is_reduced(const ModuleElement& f, const ModuleElement& g, const Partition& P,
                const OrderSequence& S) {
  S.validate(P.nblocks());
  if (g.is_zero()) throw ZeroElementError("cannot reduce with respect to zero");
  if (f.is_zero()) return true;
  BasisEntry entry(g, P);
  std::vector<unsigned> bounds;
  for (std::size_t i : S.tail) bounds.push_back(max_block_order(f, P, i));
  for (const auto& [w, c] : f.terms())
    if (eligible_quotient(w, entry, P, S, bounds)) return false;
  return true;
}

Reduction multi_reduce(const ModuleElement& f, const GroebnerBasis& G, const OrderSequence& S) {
  return reduce_impl(f, G.entries(), G.partition(), S);
}

Reduction multi_reduce(const ModuleElement& f, std::span<const ModuleElement> G,
                       const Partition& P, const OrderSequence& S) {
  std::vector<BasisEntry> entries;
  entries.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw ZeroElementError("zero element in the reducer set");
    entries.emplace_back(g, P);
  }
  return reduce_impl(f, entries, P, S);
}

ModuleElement s_poly(const ModuleElement& f, const ModuleElement& g, const Partition& P,
                     std::size_t r) {
  if (f.is_zero() || g.is_zero())
    throw ZeroElementError("S-polynomial of a zero element");
  Leader lf = leader(f, P, r);
  Leader lg = leader(g, P, r);
  auto l = term_lcm(lf.term, lg.term);
  if (!l) return ModuleElement(f.nvars(), f.rank());
  ModuleElement s = act(lf.term.mono.quotient_into(l->mono), f);
  s = (1 / Rational(lf.coeff)) * s;
  s.axpy(-1 / Rational(lg.coeff), act(lg.term.mono.quotient_into(l->mono), g));
  return s;
}

GroebnerBasis complete_basis(const Partition& P, std::size_t rank,
                             std::vector<ModuleElement> generators,
                             const CompletionOptions& options) {
  const std::size_t p = P.nblocks();
  GroebnerBasis G(P, rank);
  for (auto& f : generators)
    if (f.nvars() != P.nvars() || f.rank() != rank)
      throw InputError("basis element does not match the partition or module rank");
  if (p > 0)
    for (auto& f : reduced_single_order(P, p - 1, std::move(generators), options))
      G.push_back(primitive(f));

  std::vector<std::set<std::pair<std::size_t, std::size_t>>> done(p);

  for (bool inserted = true; inserted;) {
    inserted = false;
    for (std::size_t r = p; r-- > 0 && !inserted;) {
      const OrderSequence seq = OrderSequence::suffix(r, p);
      for (std::size_t j = 1; j < G.size() && !inserted; ++j)
        for (std::size_t i = 0; i < j && !inserted; ++i) {
          if (!done[r].emplace(i, j).second) continue;
          ModuleElement s = s_poly(G[i].element, G[j].element, P, r);
          if (s.is_zero()) continue;
          ModuleElement rem =
              reduce_impl(primitive(s), G.entries(), P, seq, true).remainder;
          if (rem.is_zero()) continue;
          if (G.size() >= options.max_basis_size)
            throw ConvergenceError("Groebner basis completion exceeded " +
                                   std::to_string(options.max_basis_size) + " elements");
          G.push_back(std::move(rem));
          inserted = true;
        }
    }
  }

  GroebnerBasis out(P, rank);
  for (const auto& e : G.entries()) out.push_back((1 / e.leaders[0].coeff) * e.element);
  for (std::size_t r = 0; r < p; ++r) out.mark_certified(r);
  return out;
}

bool membership(const ModuleElement& f, const GroebnerBasis& G) {
  if (!G.fully_certified())
    throw InputError("membership requires a certified Groebner basis");
  if (f.is_zero()) return true;
  return multi_reduce(f, G, OrderSequence::suffix(0, G.partition().nblocks()))
      .remainder.is_zero();
}

bool is_groebner(const GroebnerBasis& G, std::size_t r) {
  const Partition& P = G.partition();
  const OrderSequence seq = OrderSequence::suffix(r, P.nblocks());
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ModuleElement s = s_poly(G[i].element, G[j].element, P, r);
      if (s.is_zero()) continue;
      if (!multi_reduce(s, G, seq).remainder.is_zero()) return false;
    }
  return true;
}

}  // namespace weyldim
