#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace postrop {

using Mask = std::uint32_t;
inline constexpr int kMaxN = 24;

inline Mask bit(int label) { return Mask{1} << (label - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Labels of m rotated so that label a becomes 1: x -> ((x - a) mod n) + 1.
Mask rotate_to(Mask m, int n, int a);
// Inverse of rotate_to.
Mask rotate_from(Mask m, int n, int a);

// Gale order on same-size subsets: sorted I <= sorted J componentwise.
bool gale_leq(Mask I, Mask J, int n);
// The cyclic order <_a: Gale order after relabeling a -> 1.
inline bool gale_leq_a(Mask I, Mask J, int n, int a) {
  return gale_leq(rotate_to(I, n, a), rotate_to(J, n, a), n);
}

// Lexicographic order on sorted element lists of two same-size subsets.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  return (a & (a ^ b) & (~(a ^ b) + 1)) != 0;
}

// A k-element subset of [n]; bitmask storage, sorted-list external view.
class SubsetK {
 public:
  SubsetK() = default;
  SubsetK(int n, Mask mask);
  static SubsetK from_elements(int n, const std::vector<int>& elements);
  // Parses "1,3,4" (the TropVector key form).
  static SubsetK parse_key(int n, const std::string& key);

  int n() const { return n_; }
  int size() const { return popcount(mask_); }
  Mask mask() const { return mask_; }
  bool contains(int label) const { return (mask_ & bit(label)) != 0; }
  std::vector<int> elements() const;
  int element_sum() const;

  std::string key() const;  // "1,3,4"
  std::string str() const;  // "134" for n < 10, else "{1,3,14}"

  friend bool operator==(const SubsetK& a, const SubsetK& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const SubsetK& a, const SubsetK& b) { return !(a == b); }
  // Size first, then lexicographic on sorted elements.
  friend bool operator<(const SubsetK& a, const SubsetK& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_less(a.mask_, b.mask_);
  }

 private:
  int n_ = 0;
  Mask mask_ = 0;
};

std::vector<int> mask_elements(Mask m);
Mask elements_mask(const std::vector<int>& elements);

// All k-subsets of [n] in lexicographic order, with O(1) rank lookup.
class SubsetIndex {
 public:
  SubsetIndex(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(masks_.size()); }
  Mask mask(int idx) const { return masks_[idx]; }
  const std::vector<Mask>& masks() const { return masks_; }
  // Rank of a k-subset, or -1 if the mask is not a k-subset of [n].
  int index(Mask m) const {
    if (m > full_mask(n_)) return -1;
    return rank_[m];
  }

 private:
  int n_, k_;
  std::vector<Mask> masks_;
  std::vector<int> rank_;
};

// Shared immutable index for (n, k); thread-safe.
const SubsetIndex& subset_index(int n, int k);

std::vector<SubsetK> all_subsets(int n, int k);

}  // namespace postrop
