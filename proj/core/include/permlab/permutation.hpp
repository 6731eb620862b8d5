#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/decorated_tree.hpp"

namespace permlab {

// A permutation in one-line notation. Values and positions are 1-based.
class Permutation {
 public:
  Permutation() : v_{1} {}
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation reversed(int n);
  // Accepts "3 1 2", "3,1,2" or, when every value is a single digit, "312".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(v_.size()); }
  // Value at 1-based position i.
  int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return v_; }

  Permutation inverse() const;
  // Space separated one-line notation.
  std::string to_string() const;
  // Concatenated digits for n <= 9, otherwise the spaced form.
  std::string compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.v_ <=> b.v_;
  }

 private:
  // Trusted constructor used internally; skips the bijection check.
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : v_(std::move(entries)) {}
  friend Permutation make_unchecked(std::vector<int> entries);

  std::vector<int> v_;
};

// Builds a permutation without validation. Callers guarantee a bijection.
Permutation make_unchecked(std::vector<int> entries);

// Pattern induced by the strictly increasing 1-based positions idx.
Permutation pattern(const Permutation& sigma, const std::vector<int>& idx);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

int descents(const Permutation& sigma);

// Pattern obtained by deleting the point at 1-based position k.
Permutation remove_point(const Permutation& sigma, int k);

// Rotation of the diagram by a half turn: i -> n+1-i, v -> n+1-v.
Permutation reverse_complement(const Permutation& sigma);

// Subset scan for 3142 and 2413, O(n^4); refuses n > 50.
bool is_separable_scan(const Permutation& sigma);

// Separating tree built by splitting at the leftmost valid block boundary,
// or nullopt when sigma is not separable. Internal labels are in preorder.
std::optional<DecoratedTree> separating_tree(const Permutation& sigma);

// Decomposition-based test, any n.
bool is_separable(const Permutation& sigma);

// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permlab
