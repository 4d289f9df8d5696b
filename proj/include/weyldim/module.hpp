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

#ifndef WEYLDIM_MODULE_HPP
#define WEYLDIM_MODULE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "weyldim/weyl.hpp"

namespace weyldim {

// A basis element theta*e_gen of the free module E = A_n^m. Generator
// indices are 0-based here and 1-based in documents.
struct Term {
  std::uint32_t gen = 0;
  Monomial mono;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

// An element of E as a sparse map from terms to nonzero rationals. The map
// key order is plain lexicographic; the p term orders are applied on demand.
class ModuleElement {
 public:
  using Map = std::map<Term, Rational>;

  ModuleElement() = default;
  ModuleElement(std::size_t nvars, std::size_t rank) : n_(nvars), m_(rank) {}
  static ModuleElement single(const Term& t, const Rational& c, std::size_t rank);

  std::size_t nvars() const noexcept { return n_; }
  std::size_t rank() const noexcept { return m_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  Rational coeff(const Term& t) const;

  // Throws InputError on a generator index >= rank or a variable mismatch.
  void add_term(const Term& t, const Rational& c);
  // this += c * other
  void axpy(const Rational& c, const ModuleElement& other);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Map terms_;
};

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator*(const Rational& c, const ModuleElement& a);

// Monomial comparison under <_order (0-based). The comparison vector is
// (ord_i; the other block orders by ascending block; block i's alphas then
// betas; each remaining block ascending, alphas then betas).
std::strong_ordering monomial_compare(const Partition& P, std::size_t order,
                                      const Monomial& a, const Monomial& b);

// Term comparison under <_order: monomials first, then generator index.
std::strong_ordering term_compare(const Partition& P, std::size_t order,
                                  const Term& u, const Term& v);

// Strict-weak-ordering adaptor for containers keyed by <_order.
struct TermOrderLess {
  const Partition* P;
  std::size_t order;
  bool operator()(const Term& a, const Term& b) const {
    return term_compare(*P, order, a, b) < 0;
  }
};

struct Leader {
  Term term;
  Rational coeff;
};

// The <_order-greatest term of f. Throws ZeroElementError for f = 0.
Leader leader(const ModuleElement& f, const Partition& P, std::size_t order);

// Maximum of ord_block over the support of f (equals ord_block of the
// block-th leader). Throws ZeroElementError for f = 0.
unsigned max_block_order(const ModuleElement& f, const Partition& P, std::size_t block);

// The quotient u/v when v divides u, otherwise nullopt.
std::optional<Monomial> term_divides(const Term& v, const Term& u);

// Componentwise maximum on equal generators; nullopt stands for the ZERO lcm.
std::optional<Term> term_lcm(const Term& u, const Term& v);

// Image of f in the monoid Gamma e: the 1-leader together with the gaps
// d_i = ord_i u^(i) - ord_i u^(1) for blocks i = 2..p (stored 0-based, size p-1).
struct GammaTerm {
  std::vector<unsigned> d;
  Term head;
  friend bool operator==(const GammaTerm&, const GammaTerm&) = default;
};

GammaTerm rho(const ModuleElement& f, const Partition& P);
bool gamma_divides(const GammaTerm& g, const GammaTerm& f);

// Left action of A_n on E.
ModuleElement act(const WeylElement& D, const ModuleElement& f);
ModuleElement act(const Monomial& theta, const ModuleElement& f);

}  // namespace weyldim

#endif  // WEYLDIM_MODULE_HPP
