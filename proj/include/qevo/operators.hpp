// Copyright 2026 The qevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEVO_OPERATORS_HPP
#define QEVO_OPERATORS_HPP

#include <vector>

#include "qevo/errors.hpp"

namespace qevo {

// Bijection on {0..n-1}. perm(i) is the image of basis label i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return map_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

// Ordered set of basis-relabeling unitaries available to both players. Entry
// 0 is always the identity operator. The defaults mirror the two regimes of
// the quantization scheme:
//   rsp3:     I, D = swap(0,1), C = swap(0,2)   (three pure strategies)
//   id_swap2: I, C = swap(0,1)                  (two-strategy reduction)
// Self-inverse operators are the default but not a requirement; inverses are
// taken explicitly wherever they are needed.
class OperatorSet {
 public:
  explicit OperatorSet(std::vector<Permutation> perms);
  static OperatorSet rsp3();
  static OperatorSet id_swap2();
  // id_swap2 for n = 2, rsp3 for n = 3.
  static OperatorSet default_for(int n);

  // Size of the basis the permutations act on.
  int basis_size() const { return perms_.front().size(); }
  // Number of operators (the dimension of the quantum payoff matrix).
  int count() const { return static_cast<int>(perms_.size()); }
  const Permutation& at(int mu) const { return perms_[static_cast<size_t>(mu)]; }
  const std::vector<Permutation>& perms() const { return perms_; }

 private:
  std::vector<Permutation> perms_;
};

}  // namespace qevo

#endif  // QEVO_OPERATORS_HPP
