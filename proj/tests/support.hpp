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

#ifndef WEYLDIM_TESTS_SUPPORT_HPP
#define WEYLDIM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "weyldim/dimension.hpp"
#include "weyldim/error.hpp"

namespace wdtest {

using namespace weyldim;

inline Monomial mono(std::vector<unsigned> a, std::vector<unsigned> b) {
  return Monomial(a, b);
}

inline WeylElement op(std::vector<unsigned> a, std::vector<unsigned> b, Rational c = 1) {
  return WeylElement::monomial(mono(std::move(a), std::move(b)), c);
}

// gen is 1-based, as in documents.
inline Term term(std::uint32_t gen, std::vector<unsigned> a, std::vector<unsigned> b) {
  return {gen - 1, mono(std::move(a), std::move(b))};
}

// Canonical p/q; the two-argument mpq constructor does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin() { return uniform(0, 1) == 1; }
};

// A monomial with total order at most max_order.
inline Monomial random_monomial(Rng& g, std::size_t n, unsigned max_order) {
  Monomial m(n);
  long left = g.uniform(0, max_order);
  for (long k = 0; k < left; ++k) {
    std::size_t v = static_cast<std::size_t>(g.uniform(0, static_cast<long>(n) - 1));
    if (g.coin()) m.set_alpha(v, m.alpha(v) + 1);
    else m.set_beta(v, m.beta(v) + 1);
  }
  return m;
}

inline Rational random_coeff(Rng& g) {
  long num = 0;
  while (num == 0) num = g.uniform(-4, 4);
  return frac(num, g.uniform(1, 3));
}

inline WeylElement random_operator(Rng& g, std::size_t n, std::size_t terms, unsigned max_order) {
  WeylElement d(n);
  for (std::size_t k = 0; k < terms; ++k) d.add_term(random_monomial(g, n, max_order), random_coeff(g));
  return d;
}

// Per-variable exponents bounded by max_exp.
inline Monomial random_bounded_monomial(Rng& g, std::size_t n, unsigned max_exp) {
  Monomial m(n);
  for (std::size_t v = 0; v < n; ++v) {
    m.set_alpha(v, static_cast<unsigned>(g.uniform(0, max_exp)));
    m.set_beta(v, static_cast<unsigned>(g.uniform(0, max_exp)));
  }
  return m;
}

inline ModuleElement random_element(Rng& g, std::size_t n, std::size_t rank, std::size_t terms,
                                    unsigned max_exp) {
  ModuleElement f(n, rank);
  while (f.is_zero()) {
    for (std::size_t k = 0; k < terms; ++k) {
      Term t{static_cast<std::uint32_t>(g.uniform(0, static_cast<long>(rank) - 1)),
             random_bounded_monomial(g, n, max_exp)};
      f.add_term(t, random_coeff(g));
    }
  }
  return f;
}

inline Partition random_partition(Rng& g, std::size_t n, std::size_t max_blocks) {
  std::vector<std::size_t> sizes;
  std::size_t left = n;
  while (left > 0) {
    std::size_t blocks_left = max_blocks - sizes.size();
    std::size_t s = blocks_left == 1 ? left : static_cast<std::size_t>(g.uniform(1, left));
    sizes.push_back(s);
    left -= s;
  }
  return Partition(sizes);
}

// Small presentations in the range used by the end-to-end checks.
inline Presentation random_presentation(Rng& g, Partition P, std::size_t rank,
                                        std::size_t relations, unsigned max_exp = 2,
                                        std::size_t max_terms = 2) {
  const std::size_t n = P.nvars();
  Presentation pres{std::move(P), rank, {}};
  for (std::size_t k = 0; k < relations; ++k) {
    std::size_t terms = static_cast<std::size_t>(g.uniform(1, static_cast<long>(max_terms)));
    pres.relations.push_back(random_element(g, n, rank, terms, max_exp));
  }
  return pres;
}

inline Presentation random_presentation(Rng& g, std::size_t n, std::size_t max_blocks,
                                        std::size_t rank, std::size_t relations,
                                        unsigned max_exp = 2, std::size_t max_terms = 2) {
  Partition P = random_partition(g, n, max_blocks);
  return random_presentation(g, std::move(P), rank, relations, max_exp, max_terms);
}

// False when completion needs more than `budget` basis elements. Random draws
// occasionally hit long chains of huge-coefficient remainders; corpora skip them.
inline bool tractable(const Presentation& pres, std::size_t budget = 40) {
  try {
    complete_basis(pres.partition, pres.rank, pres.relations, {budget});
    return true;
  } catch (const ConvergenceError&) {
    return false;
  }
}

// Product of C(r_i + k_i - s_i, k_i) evaluated directly from factorials.
inline Integer binomial_row(std::span<const long> r, std::span<const long> k,
                            std::span<const long> s) {
  Integer out = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    long top = r[i] + k[i] - s[i];
    Integer num = 1;
    for (long j = 0; j < k[i]; ++j) num *= top - j;
    Integer den = 1;
    for (long j = 2; j <= k[i]; ++j) den *= j;
    out *= num / den;
  }
  return out;
}

}  // namespace wdtest

#endif  // WEYLDIM_TESTS_SUPPORT_HPP
