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

#ifndef WEYLDIM_DIMENSION_HPP
#define WEYLDIM_DIMENSION_HPP

#include <span>
#include <vector>

#include "weyldim/groebner.hpp"
#include "weyldim/numerical.hpp"

namespace weyldim {

// A finitely generated D-module M = E/N with E = A_n^rank and N generated by
// `relations`.
struct Presentation {
  Partition partition;
  std::size_t rank = 1;
  std::vector<ModuleElement> relations;

  // InputError on a zero relation or a shape mismatch.
  void validate() const;
  // Same relations over the single-block partition.
  Presentation collapsed() const;
};

// Order data of the 1-leaders, indexed [element][block].
struct LeaderData {
  std::vector<std::vector<unsigned>> b;  // ord_i u^(1)
  std::vector<std::vector<unsigned>> c;  // ord_i u^(i)
  std::vector<Term> heads;               // u^(1)

  static LeaderData from_basis(const GroebnerBasis& G);
};

// dim_K W_r as a polynomial: prod_i C(t_i + 2n_i, 2n_i).
NumericalPolynomial weyl_dim_poly(const Partition& P);
// Exact dim_K W_r; zero when some r_i < 0.
Integer weyl_dim(const Partition& P, std::span<const long> r);

// Coordinates of a monomial regrouped block by block (alphas then betas of
// each block), as used for the index sets of the leaders.
IndexTuple blocked_exponents(const Monomial& m, const Partition& P);

struct TermCounts {
  Integer v;        // terms with no 1-leader divisor
  Integer v_prime;  // leader multiples exceeding some auxiliary order bound
  Integer u;        // v + v_prime = dim_K M_r
};

// Exact enumeration over Theta(r)e. Requires a fully certified basis.
TermCounts count_uvw(const GroebnerBasis& G, std::span<const long> r);

enum class PsiPath { automatic, interpolation };

struct DimensionOptions {
  PsiPath path = PsiPath::automatic;
  unsigned max_enlargements = 6;
  CompletionOptions completion;
};

struct DimensionReport {
  Partition partition;
  NumericalPolynomial phi;
  NumericalPolynomial omega_part;
  NumericalPolynomial psi_part;
  DegreeData degrees;
  bool holonomic = false;
  bool symbolic_path = false;
  std::vector<long> threshold;  // phi(r) = dim M_r verified from here up
  InvariantSet invariants;
  GroebnerBasis basis;
};

// Throws ConvergenceError when no verified threshold is found and
// VerificationError if the result violates the degree bounds.
DimensionReport dimension_polynomial(const Presentation& pres, const DimensionOptions& options = {});

struct BernsteinData {
  NumericalPolynomial psi;
  long dimension = -1;   // d(M)
  Integer multiplicity;  // e(M) = d! * leading coefficient
  DimensionReport report;
};

BernsteinData bernstein_polynomial(const Presentation& pres, const DimensionOptions& options = {});

bool is_holonomic(const DimensionReport& report);

// dim W_r <= phi(r) * phi(2r).
bool bernstein_inequality_check(const DimensionReport& report, std::span<const long> r);

}  // namespace weyldim

#endif  // WEYLDIM_DIMENSION_HPP
