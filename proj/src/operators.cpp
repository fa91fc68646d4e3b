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

#include "qevo/operators.hpp"

#include <algorithm>
#include <utility>

namespace qevo {

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
  if (map_.empty()) throw ValidationError("permutation: empty image list");
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<size_t>(v)])
      throw ValidationError("permutation: images must form a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.map_[static_cast<size_t>(a)], p.map_[static_cast<size_t>(b)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i)
    inv[static_cast<size_t>(map_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (map_[static_cast<size_t>(i)] != i) return false;
  return true;
}

OperatorSet::OperatorSet(std::vector<Permutation> perms)
    : perms_(std::move(perms)) {
  if (perms_.empty()) throw ValidationError("operator set: no operators");
  const int n = perms_.front().size();
  for (const Permutation& p : perms_)
    if (p.size() != n)
      throw ValidationError("operator set: permutations act on different bases");
  if (!perms_.front().is_identity())
    throw ValidationError("operator set: first operator must be the identity");
}

OperatorSet OperatorSet::rsp3() {
  return OperatorSet({Permutation::identity(3),
                      Permutation::transposition(3, 0, 1),
                      Permutation::transposition(3, 0, 2)});
}

OperatorSet OperatorSet::id_swap2() {
  return OperatorSet(
      {Permutation::identity(2), Permutation::transposition(2, 0, 1)});
}

OperatorSet OperatorSet::default_for(int n) {
  if (n == 2) return id_swap2();
  if (n == 3) return rsp3();
  throw ValidationError("operator set: no default for this basis size");
}

}  // namespace qevo
