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

#ifndef WEYLDIM_PARTITION_HPP
#define WEYLDIM_PARTITION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace weyldim {

// Largest supported number of x-variables. Exponent storage is inline.
inline constexpr std::size_t kMaxVariables = 8;

// Split of the variables x_1..x_n (and the matching derivations) into p
// consecutive blocks of sizes n_1..n_p. Blocks and variables are 0-based.
class Partition {
 public:
  Partition() = default;
  // Throws InputError unless every size is positive and p >= 1.
  explicit Partition(std::vector<std::size_t> sizes);

  // The single-block partition used by the univariate Bernstein polynomial.
  static Partition trivial(std::size_t n);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t nblocks() const noexcept { return sizes_.size(); }
  std::size_t size(std::size_t block) const { return sizes_[block]; }
  std::size_t begin(std::size_t block) const { return offsets_[block]; }
  std::size_t end(std::size_t block) const {
    return offsets_[block] + sizes_[block];
  }
  std::size_t block_of(std::size_t var) const { return block_of_[var]; }
  std::span<const std::size_t> sizes() const noexcept { return sizes_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
};

}  // namespace weyldim

#endif  // WEYLDIM_PARTITION_HPP
