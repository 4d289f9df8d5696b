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

#include "weyldim/partition.hpp"

#include <string>

#include "weyldim/error.hpp"

namespace weyldim {

Partition::Partition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InputError("partition must have at least one block");
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (sizes_[b] == 0)
      throw InputError("partition block " + std::to_string(b + 1) + " is empty");
    offsets_.push_back(nvars_);
    nvars_ += sizes_[b];
    block_of_.insert(block_of_.end(), sizes_[b], b);
  }
  if (nvars_ > kMaxVariables)
    throw InputError("at most " + std::to_string(kMaxVariables) +
                     " variables are supported");
}

Partition Partition::trivial(std::size_t n) { return Partition({n}); }

}  // namespace weyldim
