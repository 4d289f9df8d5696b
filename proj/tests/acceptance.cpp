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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"
#include "weyldim/error.hpp"
#include "weyldim/oracle.hpp"

using namespace wdtest;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs > limit_s) {
    ok = false;
    detail += " (time limit " + std::to_string(limit_s) + " s exceeded)";
  }
  if (!ok) ++failures;
  std::printf("%s %2d %s [%.2f s] %s\n", ok ? "PASS" : "FAIL", id, title, secs, detail.c_str());
  std::fflush(stdout);
}

template <typename Fn>
void for_each_point(std::vector<long> lo, const std::vector<long>& hi, Fn&& fn) {
  std::vector<long> r = lo;
  for (;;) {
    fn(r);
    std::size_t j = r.size();
    for (;;) {
      if (j == 0) return;
      --j;
      if (++r[j] <= hi[j]) break;
      r[j] = lo[j];
    }
  }
}

ModuleElement element(std::size_t n, std::size_t rank,
                      std::initializer_list<std::pair<Term, Rational>> terms) {
  ModuleElement f(n, rank);
  for (const auto& [t, c] : terms) f.add_term(t, c);
  return f;
}

Presentation example45(unsigned a, unsigned b, unsigned c) {
  return {Partition({1, 1}), 1, {element(2, 1, {{term(1, {a, 0}, {0, b}), 1}, {term(1, {0, c}, {a, 0}), 1}})}};
}

Presentation polynomial_ring() {
  return {Partition({1, 1}), 1,
          {ModuleElement::single(term(1, {0, 0}, {1, 0}), 1, 1),
           ModuleElement::single(term(1, {0, 0}, {0, 1}), 1, 1)}};
}

NumericalPolynomial bp(std::vector<unsigned> k, std::vector<long> s) { return binomial_product(k, s); }

std::string describe(const Presentation& pres) {
  std::ostringstream os;
  os << "partition (";
  for (std::size_t j = 0; j < pres.partition.nblocks(); ++j) os << (j ? "," : "") << pres.partition.size(j);
  os << "), m=" << pres.rank << ", " << pres.relations.size() << " relations";
  return os.str();
}

// Presentations used by the end-to-end and property criteria. Draws whose
// completion exceeds the basis budget are counted in `skipped` and replaced.
std::vector<Presentation> random_corpus(std::size_t count, std::size_t& skipped) {
  Rng g(20260101);
  std::vector<Presentation> out;
  skipped = 0;
  while (out.size() < count) {
    std::size_t n = 1 + out.size() % 3;
    std::size_t rank = static_cast<std::size_t>(g.uniform(1, 2));
    std::size_t rels = static_cast<std::size_t>(g.uniform(1, 2));
    // Every other three-variable draw splits into three blocks.
    auto pres = n == 3 && out.size() % 6 == 2
                    ? random_presentation(g, Partition({1, 1, 1}), rank, rels, 2, 3)
                    : random_presentation(g, n, 3, rank, rels, 2, 3);
    if (tractable(pres) && tractable(pres.collapsed())) {
      out.push_back(std::move(pres));
    } else {
      ++skipped;
    }
  }
  return out;
}

struct Verified {
  Presentation pres;
  DimensionReport report;
};

std::vector<Verified> corpus_reports;

std::vector<long> grid_top(const DimensionReport& rep) {
  std::vector<long> hi(rep.threshold);
  for (std::size_t j = 0; j < hi.size(); ++j) hi[j] += 2 * static_cast<long>(rep.partition.size(j)) + 2;
  return hi;
}

}  // namespace

int main() {
  const Partition P11({1, 1});

  criterion(1, "rank-2 worked example: S-polynomial, completion, rho-cover", 1.0, [&] {
    auto h1 = element(2, 2, {{term(2, {0, 2}, {1, 1}), 1}, {term(1, {1, 1}, {1, 1}), 1}});
    auto h2 = element(2, 2, {{term(2, {0, 1}, {2, 0}), 1}, {term(1, {1, 0}, {2, 0}), 1}});
    auto h3 = element(2, 2, {{term(1, {0, 1}, {1, 1}), 1}, {term(2, {0, 1}, {2, 0}), -1}});
    require(s_poly(h1, h2, P11, 1) == h3, "S_2(h1,h2) differs from h3");
    require(s_poly(h1, h3, P11, 0).is_zero(), "S_1(h1,h3) is nonzero");
    require(s_poly(h2, h3, P11, 0).is_zero(), "S_1(h2,h3) is nonzero");
    auto G = complete_basis(P11, 2, {h1, h2});
    require(G.fully_certified() && is_groebner(G, 0) && is_groebner(G, 1), "basis not certified");
    std::vector<GammaTerm> mine, ref{rho(h1, P11), rho(h2, P11), rho(h3, P11)};
    for (const auto& e : G.entries()) mine.push_back(e.rho);
    auto covers = [](const std::vector<GammaTerm>& A, const std::vector<GammaTerm>& B) {
      return std::all_of(B.begin(), B.end(), [&](const GammaTerm& b) {
        return std::any_of(A.begin(), A.end(), [&](const GammaTerm& a) { return gamma_divides(a, b); });
      });
    };
    require(covers(mine, ref) && covers(ref, mine), "rho-images are not mutually covering");
    return "basis of " + std::to_string(G.size()) + " elements";
  });

  const std::vector<std::array<unsigned, 3>> triples{{1, 1, 2}, {2, 1, 3}, {1, 0, 2}};

  criterion(2, "two-block example family: phi, top-degree part, not holonomic", 15.0, [&] {
    for (auto [a, b, c] : triples) {
      auto start = std::chrono::steady_clock::now();
      auto rep = dimension_polynomial(example45(a, b, c));
      require(std::chrono::steady_clock::now() - start < std::chrono::seconds(5), "over 5 s");
      require(rep.phi == bp({2, 2}, {0, 0}) - bp({2, 2}, {long(a), long(c)}), "phi differs");
      MonomialPolynomial top(2);
      top.add_term({2, 1}, frac(c, 2));
      top.add_term({1, 2}, frac(a, 2));
      require(rep.degrees.total == 3 && rep.degrees.top == top, "top-degree part differs");
      require(!rep.holonomic, "reported holonomic");
    }
    return "3 triples";
  });

  criterion(3, "two-block example family: univariate polynomial, d and e", 5.0, [&] {
    for (auto [a, b, c] : triples) {
      auto bern = bernstein_polynomial(example45(a, b, c));
      require(bern.psi == bp({4}, {0}) - bp({4}, {long(a + c)}), "psi differs");
      require(bern.dimension == 3, "d != 3");
      require(bern.multiplicity == a + c, "e != alpha + gamma");
    }
    return "3 triples";
  });

  criterion(4, "free modules: phi is the product of binomials", 60.0, [&] {
    std::vector<std::vector<std::size_t>> parts{{1}, {2}, {3}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}};
    for (const auto& s : parts) {
      Partition P(s);
      std::vector<unsigned> k;
      for (std::size_t x : s) k.push_back(static_cast<unsigned>(2 * x));
      auto rep = dimension_polynomial({P, 1, {}});
      require(rep.phi == bp(k, std::vector<long>(s.size(), 0)), "phi differs for a free module");
    }
    return std::to_string(parts.size()) + " partitions";
  });

  criterion(5, "holonomic detection", 5.0, [&] {
    auto ring = dimension_polynomial(polynomial_ring());
    require(ring.phi == bp({1, 1}, {0, 0}), "phi of K[x1,x2] differs");
    require(ring.holonomic, "K[x1,x2] not holonomic");
    require(!dimension_polynomial(example45(1, 1, 2)).holonomic, "two-block example holonomic");
    require(!dimension_polynomial({P11, 1, {}}).holonomic, "free module holonomic");
    return std::string("3 modules");
  });

  criterion(6, "omega against direct enumeration on 120 random sets", 60.0, [&] {
    Rng g(6060);
    std::size_t points = 0;
    for (int k = 0; k < 120; ++k) {
      std::size_t p = static_cast<std::size_t>(g.uniform(1, 3));
      std::vector<std::size_t> parts(p, 1);
      std::size_t q = p;
      while (q < 4 && g.coin()) {
        ++parts[static_cast<std::size_t>(g.uniform(0, static_cast<long>(p) - 1))];
        ++q;
      }
      IndexSet A{{}, parts};
      long count = g.uniform(0, 5);
      for (long i = 0; i < count; ++i) {
        IndexTuple a(q);
        for (auto& x : a) x = static_cast<unsigned>(g.uniform(0, 4));
        A.points.push_back(a);
      }
      A = minimize(A);
      unsigned max_entry = 0;
      for (const auto& a : A.points)
        for (unsigned x : a) max_entry = std::max(max_entry, x);
      const long r0 = static_cast<long>(max_entry * q);
      auto w = omega(A);
      for_each_point(std::vector<long>(p, r0), std::vector<long>(p, r0 + 3), [&](const std::vector<long>& r) {
        require(w.eval(r) == oracle::enum_v_a(A, r), "omega differs from enumeration");
        ++points;
      });
    }
    return std::to_string(points) + " grid points";
  });

  criterion(7, "term counts equal the rank oracle on [0,4]^p and phi on the verification grid", 600.0, [&] {
    std::size_t skipped = 0;
    auto corpus = random_corpus(27, skipped);
    std::size_t radii = 0;
    for (const auto& pres : corpus) {
      auto rep = dimension_polynomial(pres);
      const std::size_t p = pres.partition.nblocks();
      for_each_point(std::vector<long>(p, 0), std::vector<long>(p, 4), [&](const std::vector<long>& r) {
        auto u = count_uvw(rep.basis, r).u;
        auto rank = oracle::rank_against({pres, r, 0}, u).dimension;
        require(u == rank, "count " + u.get_str() + " vs rank " + rank.get_str() + " for " + describe(pres));
        ++radii;
      });
      for_each_point(rep.threshold, grid_top(rep), [&](const std::vector<long>& r) {
        require(rep.phi.eval(r) == count_uvw(rep.basis, r).u, "phi differs from count for " + describe(pres));
      });
      corpus_reports.push_back({pres, std::move(rep)});
    }
    return std::to_string(corpus.size()) + " presentations (" + std::to_string(skipped) +
           " draws over the basis budget skipped), " + std::to_string(radii) + " radii";
  });

  criterion(8, "degree bounds for every computed polynomial", 120.0, [&] {
    std::vector<Presentation> all{example45(1, 1, 2), example45(2, 1, 3), example45(1, 0, 2),
                                  polynomial_ring(), {Partition({1, 2}), 1, {}}};
    for (const auto& v : corpus_reports) all.push_back(v.pres);
    std::size_t checked = 0;
    for (const auto& pres : all) {
      const long n = static_cast<long>(pres.partition.nvars());
      auto rep = dimension_polynomial(pres);
      auto bern = bernstein_polynomial(pres);
      if (rep.phi.is_zero()) {
        require(bern.psi.is_zero(), "phi and psi disagree on M = 0");
        continue;
      }
      require(rep.degrees.total >= n && rep.degrees.total <= 2 * n, "total degree out of range");
      for (std::size_t i = 0; i < pres.partition.nblocks(); ++i) {
        long ni = static_cast<long>(pres.partition.size(i));
        require(rep.degrees.partial[i] >= ni && rep.degrees.partial[i] <= 2 * ni, "partial degree out of range");
      }
      require(bern.dimension >= n && bern.dimension <= 2 * n, "Bernstein dimension out of range");
      ++checked;
    }
    return std::to_string(checked) + " nonzero modules";
  });

  criterion(9, "invariants do not depend on the generating set", 300.0, [&] {
    std::vector<Presentation> base{example45(1, 1, 2), example45(2, 1, 3), polynomial_ring()};
    Rng g(909);
    for (const auto& v : corpus_reports) {
      if (base.size() == 5) break;
      if (v.pres.partition.nblocks() > 1 && !v.report.phi.is_zero()) base.push_back(v.pres);
    }
    require(base.size() == 5, "not enough presentations");
    std::vector<std::string> mismatches;
    for (const auto& pres : base) {
      const std::size_t n = pres.partition.nvars(), m = pres.rank;
      WeylElement D(n);
      while (D.is_zero()) D = random_operator(g, n, 2, 2);
      Presentation bigger{pres.partition, m + 1, {}};
      for (const auto& f : pres.relations) {
        ModuleElement lifted(n, m + 1);
        for (const auto& [t, c] : f.terms()) lifted.add_term(t, c);
        bigger.relations.push_back(lifted);
      }
      // e_{m+1} - D e_1, so the new generator maps to D f_1.
      ModuleElement link = ModuleElement::single({static_cast<std::uint32_t>(m), Monomial(n)}, 1, m + 1);
      for (const auto& [mono_, c] : D.terms()) link.add_term({0, mono_}, -c);
      bigger.relations.push_back(link);

      auto ra = dimension_polynomial(pres);
      auto rb = dimension_polynomial(bigger);
      const auto& a = ra.invariants;
      const auto& b = rb.invariants;
      const std::string who = describe(pres) + " (deg " + std::to_string(ra.degrees.total) +
                              ", n " + std::to_string(n) + ")";
      if (a.degree != b.degree) mismatches.push_back("d differs for " + who);
      if (a.distinguished != b.distinguished)
        mismatches.push_back("a_(n1..np) " + a.distinguished.get_str() + " vs " +
                             b.distinguished.get_str() + " for " + who);
      if (a.support_prime != b.support_prime)
        mismatches.push_back("S' or its coefficients differ for " + who);
      if (a.top != b.top) mismatches.push_back("top-degree coefficients differ for " + who);
    }
    std::string all;
    for (const auto& m : mismatches) all += (all.empty() ? "" : "; ") + m;
    require(mismatches.empty(), all);
    return std::to_string(base.size()) + " presentations";
  });

  criterion(10, "Weyl products: associativity, rewriting oracle, division example", 60.0, [&] {
    Rng g(1010);
    for (int k = 0; k < 200; ++k) {
      std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
      auto A = random_operator(g, n, 3, 4), B = random_operator(g, n, 3, 4), C = random_operator(g, n, 3, 4);
      require(weyl_mul(weyl_mul(A, B), C) == weyl_mul(A, weyl_mul(B, C)), "associativity fails");
    }
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<Monomial> all;
      Monomial m(n);
      std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
          all.push_back(m);
          return;
        }
        for (unsigned a = 0; a <= 3; ++a)
          for (unsigned b = 0; a + b <= 3; ++b) {
            m.set_alpha(v, a);
            m.set_beta(v, b);
            rec(v + 1);
          }
      };
      rec(0);
      for (const auto& a : all)
        for (const auto& b : all) {
          auto A = WeylElement::monomial(a), B = WeylElement::monomial(b);
          require(weyl_mul(A, B) == oracle::naive_weyl_mul(A, B), "closed form differs from rewriting");
          ++pairs;
        }
    }
    WeylElement expect(2);
    for (auto [a, b] : {std::pair{std::vector<unsigned>{2, 1}, std::vector<unsigned>{1, 2}},
                        {{2, 0}, {1, 1}}, {{1, 1}, {0, 2}}, {{1, 0}, {0, 1}}})
      expect.add_term(mono(a, b), 1);
    require(weyl_mul(op({1, 0}, {1, 1}), op({1, 1}, {0, 1})) == expect, "division example differs");
    return std::to_string(pairs) + " grid pairs";
  });

  criterion(11, "Bernstein inequality at verified radii", 120.0, [&] {
    std::size_t checked = 0;
    for (const auto& v : corpus_reports) {
      if (v.report.phi.is_zero()) continue;
      for_each_point(v.report.threshold, grid_top(v.report), [&](const std::vector<long>& r) {
        require(bernstein_inequality_check(v.report, r), "inequality fails for " + describe(v.pres));
        ++checked;
      });
    }
    require(checked > 0, "no verified radii");
    return std::to_string(checked) + " radii";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
