#pragma once

#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/types.hpp"

namespace permlab::detail {

// Permutation under construction by inflations. Points are identified by
// creation index; position order and value order are linked lists. The new
// point of an inflation is adjacent to the inflated one in both orders.
class LinkedPerm {
 public:
  explicit LinkedPerm(int capacity)
      : pos_next_(static_cast<std::size_t>(capacity), -1),
        val_next_(static_cast<std::size_t>(capacity), -1),
        val_prev_(static_cast<std::size_t>(capacity), -1) {}

  // `fresh` goes right after `e` in position; above e under Plus, below under Minus.
  void inflate(int e, int fresh, Sign s) {
    const auto E = static_cast<std::size_t>(e), F = static_cast<std::size_t>(fresh);
    pos_next_[F] = pos_next_[E];
    pos_next_[E] = fresh;
    if (s == Sign::Plus) {
      val_prev_[F] = e;
      val_next_[F] = val_next_[E];
      if (val_next_[E] >= 0) val_prev_[static_cast<std::size_t>(val_next_[E])] = fresh;
      val_next_[E] = fresh;
    } else {
      val_next_[F] = e;
      val_prev_[F] = val_prev_[E];
      if (val_prev_[E] >= 0)
        val_next_[static_cast<std::size_t>(val_prev_[E])] = fresh;
      else
        val_head_ = fresh;
      val_prev_[E] = fresh;
    }
  }

  Permutation read(int n) const {
    std::vector<int> value(static_cast<std::size_t>(n));
    int r = 1;
    for (int e = val_head_; e >= 0; e = val_next_[static_cast<std::size_t>(e)])
      value[static_cast<std::size_t>(e)] = r++;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e >= 0; e = pos_next_[static_cast<std::size_t>(e)])
      out.push_back(value[static_cast<std::size_t>(e)]);
    return make_unchecked(std::move(out));
  }

 private:
  std::vector<int> pos_next_, val_next_, val_prev_;
  int val_head_ = 0;
};

}  // namespace permlab::detail
