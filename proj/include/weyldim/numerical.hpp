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

#ifndef WEYLDIM_NUMERICAL_HPP
#define WEYLDIM_NUMERICAL_HPP

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "weyldim/arith.hpp"

namespace weyldim {

using IndexTuple = std::vector<unsigned>;

// A polynomial in t_1..t_p with rational coefficients, keyed by exponent tuple.
class MonomialPolynomial {
 public:
  using Map = std::map<IndexTuple, Rational>;

  explicit MonomialPolynomial(std::size_t nvars = 0) : p_(nvars) {}
  std::size_t nvars() const noexcept { return p_; }
  const Map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(const IndexTuple& e) const;
  void add_term(const IndexTuple& e, const Rational& c);
  Rational eval(std::span<const Rational> t) const;

  friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

 private:
  std::size_t p_;
  Map coeffs_;
};

// A numerical polynomial in the binomial basis:
//   f(t) = sum_i a_i * prod_j C(t_j + i_j, i_j),  a_i integers.
class NumericalPolynomial {
 public:
  using Map = std::map<IndexTuple, Integer>;

  explicit NumericalPolynomial(std::size_t nvars = 0) : p_(nvars) {}
  // Drops zero coefficients; throws InputError on tuple length mismatch.
  NumericalPolynomial(std::size_t nvars, const Map& coeffs);

  // Canonical form of a polynomial function given by exact integer values.
  // `f` must agree with a polynomial of per-variable degree at most
  // degree_bounds[j] at every integer point (it is sampled at t_j <= -1).
  static NumericalPolynomial from_function(
      std::size_t nvars, std::span<const unsigned> degree_bounds,
      const std::function<Integer(std::span<const long>)>& f);

  // Interpolates the polynomial of per-variable degree at most degrees[j]
  // through samples on the box base_j .. base_j + degrees[j].
  static NumericalPolynomial interpolate(
      std::size_t nvars, std::span<const long> base, std::span<const unsigned> degrees,
      const std::function<Integer(std::span<const long>)>& samples);

  // Throws InputError("not a numerical polynomial") if some binomial-basis
  // coefficient is not an integer.
  static NumericalPolynomial canonicalize(const MonomialPolynomial& f);

  std::size_t nvars() const noexcept { return p_; }
  const Map& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coeff(const IndexTuple& i) const;

  Integer eval(std::span<const long> t) const;
  MonomialPolynomial monomial_view() const;

  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;
  friend NumericalPolynomial operator+(const NumericalPolynomial& a, const NumericalPolynomial& b);
  friend NumericalPolynomial operator-(const NumericalPolynomial& a, const NumericalPolynomial& b);

 private:
  std::size_t p_;
  Map coeffs_;
};

// prod_j C(t_j + k_j - shift_j, k_j), canonicalized.
NumericalPolynomial binomial_product(std::span<const unsigned> k, std::span<const long> shift);

struct DegreeData {
  long total = -1;             // -1 for the zero polynomial
  std::vector<long> partial;   // deg_{t_j}; -1 for the zero polynomial
  MonomialPolynomial top;      // homogeneous part of degree `total`
};

DegreeData degree_data(const NumericalPolynomial& f);

// A finite subset of N^q with a block structure (q_1, ..., q_p) on the
// coordinates.
struct IndexSet {
  std::vector<IndexTuple> points;
  std::vector<std::size_t> partition;

  std::size_t dimension() const;
  void validate() const;  // InputError on empty partition or length mismatch
};

// Minimal elements under the product order, sorted and deduplicated.
IndexSet minimize(const IndexSet& A);

// Dimension polynomial of A: for large r it counts the points of N^q whose
// block sums are bounded by r and which dominate no point of A.
NumericalPolynomial omega(const IndexSet& A);

// Elements of S that are maximal for at least one of the p! lexicographic
// orders on N^p. Result is sorted.
std::vector<IndexTuple> lex_maximal_elements(const std::vector<IndexTuple>& S);

struct InvariantSet {
  long degree = -1;
  Integer distinguished;                         // a_{n_1...n_p}
  std::vector<IndexTuple> support;               // S(phi)
  std::vector<std::pair<IndexTuple, Integer>> support_prime;  // S(phi)' with a_k
  MonomialPolynomial top;                        // total-degree-d part
};

InvariantSet invariant_set(const NumericalPolynomial& f, std::span<const std::size_t> caps);

}  // namespace weyldim

#endif  // WEYLDIM_NUMERICAL_HPP
