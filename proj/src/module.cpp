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

#include "weyldim/module.hpp"

#include <string>

#include "weyldim/error.hpp"

namespace weyldim {

ModuleElement ModuleElement::single(const Term& t, const Rational& c, std::size_t rank) {
  ModuleElement f(t.mono.nvars(), rank);
  f.add_term(t, c);
  return f;
}

Rational ModuleElement::coeff(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleElement::add_term(const Term& t, const Rational& c) {
  if (t.gen >= m_)
    throw InputError("generator index " + std::to_string(t.gen + 1) +
                     " exceeds module rank " + std::to_string(m_));
  if (t.mono.nvars() != n_)
    throw InputError("term has " + std::to_string(t.mono.nvars()) +
                     " variables, element has " + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void ModuleElement::axpy(const Rational& c, const ModuleElement& other) {
  if (other.n_ != n_ || other.m_ != m_)
    throw InputError("module element shape mismatch");
  if (c == 0) return;
  for (const auto& [t, v] : other.terms_) add_term(t, c * v);
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement r = a;
  r.axpy(1, b);
  return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement r = a;
  r.axpy(-1, b);
  return r;
}

ModuleElement operator*(const Rational& c, const ModuleElement& a) {
  ModuleElement r(a.nvars(), a.rank());
  r.axpy(c, a);
  return r;
}

std::strong_ordering monomial_compare(const Partition& P, std::size_t order,
                                      const Monomial& a, const Monomial& b) {
  const std::size_t p = P.nblocks();
  if (auto c = a.block_order(P, order) <=> b.block_order(P, order); c != 0) return c;
  for (std::size_t j = 0; j < p; ++j) {
    if (j == order) continue;
    if (auto c = a.block_order(P, j) <=> b.block_order(P, j); c != 0) return c;
  }
  auto block_exponents = [&](std::size_t j) -> std::strong_ordering {
    for (std::size_t k = P.begin(j); k < P.end(j); ++k)
      if (auto c = a.alpha(k) <=> b.alpha(k); c != 0) return c;
    for (std::size_t k = P.begin(j); k < P.end(j); ++k)
      if (auto c = a.beta(k) <=> b.beta(k); c != 0) return c;
    return std::strong_ordering::equal;
  };
  if (auto c = block_exponents(order); c != 0) return c;
  for (std::size_t j = 0; j < p; ++j) {
    if (j == order) continue;
    if (auto c = block_exponents(j); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering term_compare(const Partition& P, std::size_t order,
                                  const Term& u, const Term& v) {
  if (u.mono.nvars() != P.nvars() || v.mono.nvars() != P.nvars())
    throw InputError("term does not match the partition");
  if (order >= P.nblocks()) throw InputError("order index out of range");
  if (auto c = monomial_compare(P, order, u.mono, v.mono); c != 0) return c;
  return u.gen <=> v.gen;
}

Leader leader(const ModuleElement& f, const Partition& P, std::size_t order) {
  if (f.is_zero()) throw ZeroElementError("the zero element has no leader");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (term_compare(P, order, it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

unsigned max_block_order(const ModuleElement& f, const Partition& P, std::size_t block) {
  if (f.is_zero()) throw ZeroElementError("the zero element has no orders");
  unsigned m = 0;
  for (const auto& [t, c] : f.terms()) m = std::max(m, t.mono.block_order(P, block));
  return m;
}

std::optional<Monomial> term_divides(const Term& v, const Term& u) {
  if (v.gen != u.gen || !v.mono.divides(u.mono)) return std::nullopt;
  return v.mono.quotient_into(u.mono);
}

std::optional<Term> term_lcm(const Term& u, const Term& v) {
  if (u.gen != v.gen) return std::nullopt;
  return Term{u.gen, u.mono.lcm(v.mono)};
}

GammaTerm rho(const ModuleElement& f, const Partition& P) {
  GammaTerm g;
  g.head = leader(f, P, 0).term;
  for (std::size_t i = 1; i < P.nblocks(); ++i)
    g.d.push_back(max_block_order(f, P, i) - g.head.mono.block_order(P, i));
  return g;
}

bool gamma_divides(const GammaTerm& g, const GammaTerm& f) {
  if (g.d.size() != f.d.size()) return false;
  if (!term_divides(g.head, f.head)) return false;
  for (std::size_t i = 0; i < g.d.size(); ++i)
    if (g.d[i] > f.d[i]) return false;
  return true;
}

ModuleElement act(const Monomial& theta, const ModuleElement& f) {
  if (theta.nvars() != f.nvars()) throw InputError("operator/module variable mismatch");
  ModuleElement r(f.nvars(), f.rank());
  for (const auto& [t, c] : f.terms())
    multiply_monomials(theta, t.mono, [&](const Monomial& m, const Integer& k) {
      r.add_term(Term{t.gen, m}, c * k);
    });
  return r;
}

ModuleElement act(const WeylElement& D, const ModuleElement& f) {
  if (D.nvars() != f.nvars()) throw InputError("operator/module variable mismatch");
  ModuleElement r(f.nvars(), f.rank());
  for (const auto& [m, c] : D.terms()) r.axpy(c, act(m, f));
  return r;
}

}  // namespace weyldim
