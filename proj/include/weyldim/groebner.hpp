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

#ifndef WEYLDIM_GROEBNER_HPP
#define WEYLDIM_GROEBNER_HPP

#include <span>
#include <vector>

#include "weyldim/module.hpp"

namespace weyldim {

// A reduction sequence (<_head, <_tail[0], ..., <_tail[l-1]). Orders are
// 0-based and pairwise distinct.
struct OrderSequence {
  std::size_t head = 0;
  std::vector<std::size_t> tail;

  // (<_r, <_{r+1}, ..., <_{p-1}), the sequences certified by complete_basis.
  static OrderSequence suffix(std::size_t r, std::size_t p);
  // Throws InputError unless all indices are distinct and below p.
  void validate(std::size_t p) const;
};

// A nonzero element together with its leaders under every order.
struct BasisEntry {
  ModuleElement element;
  std::vector<Leader> leaders;          // u^(i), lc_i for i = 0..p-1
  std::vector<unsigned> leader_orders;  // ord_i u^(i)
  GammaTerm rho;

  BasisEntry(ModuleElement f, const Partition& P);
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  // An uncertified list. Throws InputError on a zero element or shape mismatch.
  GroebnerBasis(Partition P, std::size_t rank, std::vector<ModuleElement> elements = {});

  const Partition& partition() const noexcept { return P_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BasisEntry>& entries() const noexcept { return entries_; }
  std::vector<ModuleElement> elements() const;

  void push_back(ModuleElement f);

  // Stage r is certified when S_r pairs reduce to zero under suffix(r).
  bool stage_certified(std::size_t r) const { return certified_[r]; }
  // Certified for (<_1, ..., <_p), i.e. every stage.
  bool fully_certified() const;
  void mark_certified(std::size_t r) { certified_[r] = true; }

 private:
  Partition P_;
  std::size_t rank_ = 0;
  std::vector<BasisEntry> entries_;
  std::vector<bool> certified_;
};

bool is_reduced(const ModuleElement& f, const ModuleElement& g, const Partition& P,
                const OrderSequence& S);

struct Reduction {
  ModuleElement remainder;
  std::vector<WeylElement> quotients;  // f - remainder = sum Q_i g_i
  std::size_t steps = 0;
};

// Multi-order reduction. At each step the <_head-greatest eligible term is
// eliminated using the eligible basis element with the greatest head leader,
// smallest index on ties.
Reduction multi_reduce(const ModuleElement& f, const GroebnerBasis& G, const OrderSequence& S);
Reduction multi_reduce(const ModuleElement& f, std::span<const ModuleElement> G,
                       const Partition& P, const OrderSequence& S);

// The r-th S-polynomial; zero when the r-leaders lie on different generators.
ModuleElement s_poly(const ModuleElement& f, const ModuleElement& g, const Partition& P,
                     std::size_t r);

struct CompletionOptions {
  // Safety valve against runaway completions; exceeded -> ConvergenceError.
  std::size_t max_basis_size = 4000;
};

// Staged completion: certifies the basis for every suffix sequence, stage
// p-1 down to 0, re-checking all stages after each insertion.
GroebnerBasis complete_basis(const Partition& P, std::size_t rank,
                             std::vector<ModuleElement> generators,
                             const CompletionOptions& options = {});

// Requires a fully certified basis (InputError otherwise).
bool membership(const ModuleElement& f, const GroebnerBasis& G);

// Every pairwise S_r reduces to zero under suffix(r).
bool is_groebner(const GroebnerBasis& G, std::size_t r);

}  // namespace weyldim

#endif  // WEYLDIM_GROEBNER_HPP
