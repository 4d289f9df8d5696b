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

#ifndef WEYLDIM_WEYL_HPP
#define WEYLDIM_WEYL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weyldim/arith.hpp"
#include "weyldim/partition.hpp"

namespace weyldim {

// A normal-form monomial x^alpha d^beta of the Weyl algebra A_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n);
  // Throws InputError on length mismatch or n > kMaxVariables.
  Monomial(std::span<const unsigned> alpha, std::span<const unsigned> beta);

  std::size_t nvars() const noexcept { return n_; }
  unsigned alpha(std::size_t i) const { return e_[i]; }
  unsigned beta(std::size_t i) const { return e_[n_ + i]; }
  void set_alpha(std::size_t i, unsigned v) { e_[i] = static_cast<std::uint16_t>(v); }
  void set_beta(std::size_t i, unsigned v) { e_[n_ + i] = static_cast<std::uint16_t>(v); }
  std::vector<unsigned> alphas() const;
  std::vector<unsigned> betas() const;

  // |alpha| + |beta|
  unsigned order() const noexcept;
  // Sum of alpha_k + beta_k over the variables of one block.
  unsigned block_order(const Partition& P, std::size_t block) const;
  bool is_one() const noexcept { return order() == 0; }

  // Componentwise test for both exponent vectors.
  bool divides(const Monomial& other) const noexcept;
  // Exponent difference other/this; requires divides(other).
  Monomial quotient_into(const Monomial& other) const noexcept;
  // Exponent sum (the commutative product, not the Weyl product).
  Monomial exponent_sum(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, 2 * kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

// Order statistics of a monomial or operator relative to a partition.
struct Orders {
  unsigned total = 0;
  std::vector<unsigned> blocks;
  friend bool operator==(const Orders&, const Orders&) = default;
};

// Throws InputError when theta has the wrong number of variables.
Orders monomial_orders(const Monomial& theta, const Partition& P);

// Calls sink(monomial, coefficient) for each term of the normal-form Weyl
// product a*b. Terms are distinct and coefficients positive.
void multiply_monomials(const Monomial& a, const Monomial& b,
                        const std::function<void(const Monomial&, const Integer&)>& sink);

// An element of A_n(Q) in normal form: a sparse map from monomials to nonzero
// rationals.
class WeylElement {
 public:
  using Map = std::map<Monomial, Rational>;

  WeylElement() = default;
  explicit WeylElement(std::size_t n) : n_(n) {}
  static WeylElement monomial(const Monomial& m, const Rational& c = 1);
  static WeylElement constant(std::size_t n, const Rational& c);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  Rational coeff(const Monomial& m) const;

  // Adds c to the coefficient of m, erasing it if the sum vanishes.
  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t n_ = 0;
  Map terms_;
};

WeylElement weyl_add(const WeylElement& a, const WeylElement& b);
WeylElement weyl_scale(const Rational& c, const WeylElement& a);
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// Maxima over the support; nullopt for the zero element.
std::optional<Orders> element_orders(const WeylElement& d, const Partition& P);

}  // namespace weyldim

#endif  // WEYLDIM_WEYL_HPP
