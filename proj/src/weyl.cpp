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

#include "weyldim/weyl.hpp"

#include <algorithm>
#include <string>

#include "weyldim/error.hpp"

namespace weyldim {

namespace {

void check_same_n(std::size_t a, std::size_t b) {
  if (a != b)
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b) + " variables");
}

}  // namespace

Monomial::Monomial(std::size_t n) {
  if (n > kMaxVariables)
    throw InputError("at most " + std::to_string(kMaxVariables) +
                     " variables are supported");
  n_ = static_cast<std::uint8_t>(n);
}

Monomial::Monomial(std::span<const unsigned> alpha, std::span<const unsigned> beta)
    : Monomial(alpha.size()) {
  check_same_n(alpha.size(), beta.size());
  for (std::size_t i = 0; i < n_; ++i) {
    if (alpha[i] > 0xFFFF || beta[i] > 0xFFFF)
      throw InputError("exponent too large");
    set_alpha(i, alpha[i]);
    set_beta(i, beta[i]);
  }
}

std::vector<unsigned> Monomial::alphas() const {
  return {e_.begin(), e_.begin() + n_};
}

std::vector<unsigned> Monomial::betas() const {
  return {e_.begin() + n_, e_.begin() + 2 * n_};
}

unsigned Monomial::order() const noexcept {
  unsigned s = 0;
  for (std::size_t i = 0; i < 2u * n_; ++i) s += e_[i];
  return s;
}

unsigned Monomial::block_order(const Partition& P, std::size_t block) const {
  unsigned s = 0;
  for (std::size_t k = P.begin(block); k < P.end(block); ++k)
    s += e_[k] + e_[n_ + k];
  return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < 2u * n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const noexcept {
  Monomial q(*this);
  for (std::size_t i = 0; i < 2u * n_; ++i)
    q.e_[i] = static_cast<std::uint16_t>(other.e_[i] - e_[i]);
  return q;
}

Monomial Monomial::exponent_sum(const Monomial& other) const noexcept {
  Monomial s(*this);
  for (std::size_t i = 0; i < 2u * n_; ++i)
    s.e_[i] = static_cast<std::uint16_t>(e_[i] + other.e_[i]);
  return s;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial l(*this);
  for (std::size_t i = 0; i < 2u * n_; ++i) l.e_[i] = std::max(e_[i], other.e_[i]);
  return l;
}

Orders monomial_orders(const Monomial& theta, const Partition& P) {
  check_same_n(theta.nvars(), P.nvars());
  Orders o;
  o.total = theta.order();
  o.blocks.resize(P.nblocks());
  for (std::size_t j = 0; j < P.nblocks(); ++j) o.blocks[j] = theta.block_order(P, j);
  return o;
}

void multiply_monomials(const Monomial& a, const Monomial& b,
                        const std::function<void(const Monomial&, const Integer&)>& sink) {
  check_same_n(a.nvars(), b.nvars());
  const std::size_t n = a.nvars();
  // x^a d^b x^c d^e: move each d_i^{b_i} past x_i^{c_i} with
  // d^b x^c = sum_k C(b,k) C(c,k) k! x^{c-k} d^{b-k}.
  std::array<unsigned, kMaxVariables> kmax{};
  std::size_t active = 0;
  for (std::size_t i = 0; i < n; ++i) {
    kmax[i] = std::min(a.beta(i), b.alpha(i));
    if (kmax[i] > 0) ++active;
  }
  const Monomial base = a.exponent_sum(b);
  if (active == 0) {
    sink(base, Integer(1));
    return;
  }
  std::array<unsigned, kMaxVariables> k{};
  for (;;) {
    Monomial m(base);
    Integer c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (k[i] == 0) continue;
      m.set_alpha(i, m.alpha(i) - k[i]);
      m.set_beta(i, m.beta(i) - k[i]);
      c *= binomial(a.beta(i), k[i]) * binomial(b.alpha(i), k[i]) * factorial(k[i]);
    }
    sink(m, c);
    std::size_t i = 0;
    while (i < n && k[i] == kmax[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

WeylElement WeylElement::monomial(const Monomial& m, const Rational& c) {
  WeylElement d(m.nvars());
  d.add_term(m, c);
  return d;
}

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  return monomial(Monomial(n), c);
}

Rational WeylElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const Monomial& m, const Rational& c) {
  check_same_n(n_, m.nvars());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

WeylElement weyl_add(const WeylElement& a, const WeylElement& b) {
  check_same_n(a.nvars(), b.nvars());
  WeylElement r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

WeylElement weyl_scale(const Rational& c, const WeylElement& a) {
  WeylElement r(a.nvars());
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms()) r.add_term(m, c * v);
  return r;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  check_same_n(a.nvars(), b.nvars());
  WeylElement r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Rational cab = ca * cb;
      multiply_monomials(ma, mb, [&](const Monomial& m, const Integer& c) {
        r.add_term(m, cab * c);
      });
    }
  return r;
}

std::optional<Orders> element_orders(const WeylElement& d, const Partition& P) {
  check_same_n(d.nvars(), P.nvars());
  if (d.is_zero()) return std::nullopt;
  Orders o;
  o.blocks.assign(P.nblocks(), 0);
  for (const auto& [m, c] : d.terms()) {
    Orders t = monomial_orders(m, P);
    o.total = std::max(o.total, t.total);
    for (std::size_t j = 0; j < P.nblocks(); ++j)
      o.blocks[j] = std::max(o.blocks[j], t.blocks[j]);
  }
  return o;
}

}  // namespace weyldim
