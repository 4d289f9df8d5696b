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

#include "weyldim/dimension.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "weyldim/error.hpp"

namespace weyldim {

void Presentation::validate() const {
  if (rank == 0) throw InputError("module rank must be positive");
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& f = relations[k];
    if (f.is_zero()) throw InputError("relation " + std::to_string(k + 1) + " is zero");
    if (f.nvars() != partition.nvars() || f.rank() != rank)
      throw InputError("relation " + std::to_string(k + 1) +
                       " does not match the partition or module rank");
  }
}

Presentation Presentation::collapsed() const {
  return {Partition::trivial(partition.nvars()), rank, relations};
}

LeaderData LeaderData::from_basis(const GroebnerBasis& G) {
  const Partition& P = G.partition();
  LeaderData d;
  for (const auto& e : G.entries()) {
    std::vector<unsigned> b, c;
    for (std::size_t i = 0; i < P.nblocks(); ++i) {
      b.push_back(e.leaders[0].term.mono.block_order(P, i));
      c.push_back(e.leader_orders[i]);
    }
    d.b.push_back(std::move(b));
    d.c.push_back(std::move(c));
    d.heads.push_back(e.leaders[0].term);
  }
  return d;
}

NumericalPolynomial weyl_dim_poly(const Partition& P) {
  std::vector<unsigned> k;
  for (std::size_t s : P.sizes()) k.push_back(static_cast<unsigned>(2 * s));
  std::vector<long> shift(k.size(), 0);
  return binomial_product(k, shift);
}

Integer weyl_dim(const Partition& P, std::span<const long> r) {
  if (r.size() != P.nblocks()) throw InputError("radius length differs from block count");
  Integer d = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) return 0;
    long q = static_cast<long>(2 * P.size(i));
    d *= binomial(r[i] + q, q);
  }
  return d;
}

IndexTuple blocked_exponents(const Monomial& m, const Partition& P) {
  IndexTuple out;
  out.reserve(2 * P.nvars());
  for (std::size_t j = 0; j < P.nblocks(); ++j) {
    for (std::size_t k = P.begin(j); k < P.end(j); ++k) out.push_back(m.alpha(k));
    for (std::size_t k = P.begin(j); k < P.end(j); ++k) out.push_back(m.beta(k));
  }
  return out;
}

namespace {

// All exponent vectors of one block (alphas then betas) with sum <= bound.
std::vector<std::vector<unsigned>> block_exponent_vectors(std::size_t width, long bound) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(width, 0);
  auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos == width) {
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[pos] = static_cast<unsigned>(v);
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace

TermCounts count_uvw(const GroebnerBasis& G, std::span<const long> r) {
  if (!G.fully_certified())
    throw InputError("term counting requires a certified Groebner basis");
  const Partition& P = G.partition();
  const std::size_t p = P.nblocks();
  if (r.size() != p) throw InputError("radius length differs from block count");
  TermCounts out;
  for (long ri : r)
    if (ri < 0) return out;

  const LeaderData L = LeaderData::from_basis(G);
  const std::size_t H = L.heads.size();
  const std::size_t W = (H + 63) / 64;
  using Mask = std::vector<std::uint64_t>;

  // Divisibility by a leader and the order bound test both split over the
  // blocks, so each block exponent vector gets a bitmask over the leaders.
  std::vector<std::vector<Mask>> divides(p), admissible(p);
  std::vector<std::size_t> sizes(p);
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t w = P.size(j);
    const auto vecs = block_exponent_vectors(2 * w, r[j]);
    sizes[j] = vecs.size();
    divides[j].assign(vecs.size(), Mask(W, 0));
    admissible[j].assign(vecs.size(), Mask(W, 0));
    for (std::size_t idx = 0; idx < vecs.size(); ++idx) {
      const auto& e = vecs[idx];
      long ord = 0;
      for (unsigned x : e) ord += x;
      for (std::size_t g = 0; g < H; ++g) {
        const Monomial& h = L.heads[g].mono;
        bool ok = true;
        for (std::size_t k = 0; k < w && ok; ++k)
          ok = h.alpha(P.begin(j) + k) <= e[k] && h.beta(P.begin(j) + k) <= e[w + k];
        if (!ok) continue;
        const std::uint64_t bit = std::uint64_t{1} << (g % 64);
        divides[j][idx][g / 64] |= bit;
        if (j == 0 || ord - static_cast<long>(L.b[g][j]) + static_cast<long>(L.c[g][j]) <= r[j])
          admissible[j][idx][g / 64] |= bit;
      }
    }
  }
  std::vector<Mask> of_gen(G.rank(), Mask(W, 0));
  for (std::size_t g = 0; g < H; ++g) of_gen[L.heads[g].gen][g / 64] |= std::uint64_t{1} << (g % 64);

  unsigned long long v = 0, vprime = 0;
  std::vector<Mask> div_acc(p + 1, Mask(W, ~std::uint64_t{0}));
  std::vector<Mask> adm_acc(p + 1, Mask(W, ~std::uint64_t{0}));
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == p) {
      for (const auto& gm : of_gen) {
        bool divisible = false, admitted = false;
        for (std::size_t k = 0; k < W; ++k) {
          divisible = divisible || (div_acc[p][k] & gm[k]);
          admitted = admitted || (adm_acc[p][k] & gm[k]);
        }
        if (!divisible) ++v;
        else if (!admitted) ++vprime;
      }
      return;
    }
    for (std::size_t idx = 0; idx < sizes[j]; ++idx) {
      for (std::size_t k = 0; k < W; ++k) {
        div_acc[j + 1][k] = div_acc[j][k] & divides[j][idx][k];
        adm_acc[j + 1][k] = adm_acc[j][k] & admissible[j][idx][k];
      }
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  out.v = Integer(std::to_string(v));
  out.v_prime = Integer(std::to_string(vprime));
  out.u = out.v + out.v_prime;
  return out;
}

namespace {

std::vector<unsigned> doubled_sizes(const Partition& P) {
  std::vector<unsigned> q;
  for (std::size_t s : P.sizes()) q.push_back(static_cast<unsigned>(2 * s));
  return q;
}

NumericalPolynomial omega_part_of(const GroebnerBasis& G) {
  const Partition& P = G.partition();
  std::vector<std::size_t> blocks;
  for (std::size_t s : P.sizes()) blocks.push_back(2 * s);
  NumericalPolynomial total(P.nblocks());
  for (std::uint32_t gen = 0; gen < G.rank(); ++gen) {
    IndexSet A{{}, blocks};
    for (const auto& e : G.entries())
      if (e.leaders[0].term.gen == gen)
        A.points.push_back(blocked_exponents(e.leaders[0].term.mono, P));
    total = total + omega(A);
  }
  return total;
}

// Disjoint sum over basis elements j and nonempty K of the auxiliary blocks:
// the bracket [C(t_i+2n_i-b_ij) - C(t_i+2n_i-c_ij)] for i in K, and
// C(t_i+2n_i-c_ij) elsewhere.
NumericalPolynomial symbolic_psi(const GroebnerBasis& G, const LeaderData& L) {
  const Partition& P = G.partition();
  const std::size_t p = P.nblocks();
  const auto q = doubled_sizes(P);
  return NumericalPolynomial::from_function(p, q, [&](std::span<const long> t) {
    Integer acc = 0;
    for (std::size_t j = 0; j < L.heads.size(); ++j) {
      for (unsigned long mask = 1; mask < (1ul << (p - 1)); ++mask) {
        Integer term = 1;
        for (std::size_t i = 0; i < p && term != 0; ++i) {
          const long qi = q[i];
          Integer outer = binomial(t[i] + qi - static_cast<long>(L.c[j][i]), qi);
          if (i > 0 && (mask >> (i - 1)) & 1ul)
            term *= binomial(t[i] + qi - static_cast<long>(L.b[j][i]), qi) - outer;
          else
            term *= outer;
        }
        acc += term;
      }
    }
    return acc;
  });
}

bool leaders_pairwise_coprime(const LeaderData& L) {
  for (std::size_t a = 0; a < L.heads.size(); ++a)
    for (std::size_t b = a + 1; b < L.heads.size(); ++b)
      if (term_lcm(L.heads[a], L.heads[b])) return false;
  return true;
}

template <typename Fn>
void for_each_grid_point(std::span<const long> lo, std::span<const long> hi, Fn&& fn) {
  std::vector<long> r(lo.begin(), lo.end());
  for (;;) {
    fn(std::span<const long>(r));
    std::size_t j = r.size();
    for (;;) {
      if (j == 0) return;
      --j;
      if (++r[j] <= hi[j]) break;
      r[j] = lo[j];
    }
  }
}

}  // namespace

DimensionReport dimension_polynomial(const Presentation& pres, const DimensionOptions& options) {
  pres.validate();
  const Partition& P = pres.partition;
  const std::size_t p = P.nblocks();

  DimensionReport rep;
  rep.partition = P;
  rep.basis = complete_basis(P, pres.rank, pres.relations, options.completion);
  const LeaderData L = LeaderData::from_basis(rep.basis);
  rep.omega_part = omega_part_of(rep.basis);
  rep.symbolic_path =
      options.path == PsiPath::automatic && leaders_pairwise_coprime(L);

  long start = 1;
  for (const auto& cj : L.c)
    for (unsigned c : cj) start = std::max(start, static_cast<long>(c) + 1);

  const auto q = doubled_sizes(P);
  bool verified = false;
  for (unsigned attempt = 0; attempt <= options.max_enlargements && !verified; ++attempt) {
    std::vector<long> base(p, start), hi(p);
    for (std::size_t i = 0; i < p; ++i) hi[i] = start + q[i] + 2;

    if (rep.symbolic_path) {
      rep.psi_part = symbolic_psi(rep.basis, L);
    } else {
      rep.psi_part = NumericalPolynomial::interpolate(
          p, base, q, [&](std::span<const long> r) { return count_uvw(rep.basis, r).v_prime; });
    }
    rep.phi = rep.omega_part + rep.psi_part;

    verified = true;
    for_each_grid_point(base, hi, [&](std::span<const long> r) {
      if (verified && rep.phi.eval(r) != count_uvw(rep.basis, r).u) verified = false;
    });
    if (verified) rep.threshold = base;
    else start *= 2;
  }
  if (!verified)
    throw ConvergenceError("threshold not found: dimension counts did not stabilize to a "
                           "polynomial after " +
                           std::to_string(options.max_enlargements) + " enlargements");

  rep.degrees = degree_data(rep.phi);
  if (!rep.phi.is_zero()) {
    const long n = static_cast<long>(P.nvars());
    bool ok = rep.degrees.total >= n && rep.degrees.total <= 2 * n;
    for (std::size_t i = 0; i < p; ++i) {
      const long ni = static_cast<long>(P.size(i));
      ok = ok && rep.degrees.partial[i] >= ni && rep.degrees.partial[i] <= 2 * ni;
    }
    if (!ok) throw VerificationError("dimension polynomial violates the degree bounds");
  }
  rep.holonomic = is_holonomic(rep);
  rep.invariants = invariant_set(rep.phi, P.sizes());
  return rep;
}

BernsteinData bernstein_polynomial(const Presentation& pres, const DimensionOptions& options) {
  BernsteinData out;
  out.report = dimension_polynomial(pres.collapsed(), options);
  out.psi = out.report.phi;
  out.dimension = out.report.degrees.total;
  if (out.dimension >= 0) {
    Rational lead = out.report.degrees.top.coeff({static_cast<unsigned>(out.dimension)});
    Rational e = lead * Rational(factorial(static_cast<unsigned long>(out.dimension)));
    if (e.get_den() != 1) throw VerificationError("Bernstein multiplicity is not an integer");
    out.multiplicity = e.get_num();
  }
  return out;
}

bool is_holonomic(const DimensionReport& report) {
  return report.degrees.total == static_cast<long>(report.partition.nvars());
}

bool bernstein_inequality_check(const DimensionReport& report, std::span<const long> r) {
  std::vector<long> twice(r.begin(), r.end());
  for (auto& x : twice) x *= 2;
  return weyl_dim(report.partition, r) <= report.phi.eval(r) * report.phi.eval(twice);
}

}  // namespace weyldim
