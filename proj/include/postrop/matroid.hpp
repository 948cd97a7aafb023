#pragma once

#include <memory>
#include <vector>

#include "postrop/subset.hpp"

namespace postrop {

// True iff `bases` (all of size k, nonempty) satisfies the basis exchange axiom.
// Throws InputError on malformed subsets.
bool is_matroid(int n, int k, const std::vector<SubsetK>& bases);

class Matroid {
 public:
  // Validating: sizes, ground set, nonempty, exchange axiom.
  static Matroid from_bases(int n, int k, std::vector<SubsetK> bases);
  static Matroid from_masks(int n, int k, std::vector<Mask> bases);
  static Matroid unchecked(int n, int k, std::vector<Mask> bases);
  static Matroid uniform(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  // Lexicographically sorted, duplicate-free.
  const std::vector<Mask>& masks() const { return bases_; }
  std::vector<SubsetK> bases() const;
  std::size_t size() const { return bases_.size(); }
  bool contains(Mask m) const;
  bool contains(const SubsetK& s) const { return s.n() == n_ && contains(s.mask()); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int k, std::vector<Mask> bases);
  int n_ = 0, k_ = 0;
  std::vector<Mask> bases_;
  // Bitset over all masks when n is small, else a numerically sorted copy.
  std::shared_ptr<const std::vector<bool>> member_;
  std::shared_ptr<const std::vector<Mask>> sorted_;
};

// A (k,n)-bounded affine permutation given by its window f(1..n).
class BoundedAffinePermutation {
 public:
  BoundedAffinePermutation(int n, std::vector<int> window);  // validating
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& window() const { return window_; }
  // f on all of Z.
  int operator()(int i) const;
  friend bool operator==(const BoundedAffinePermutation& a, const BoundedAffinePermutation& b) {
    return a.n_ == b.n_ && a.window_ == b.window_;
  }

 private:
  int n_, k_;
  std::vector<int> window_;
};

using Necklace = std::vector<Mask>;  // entry a-1 is I_a

bool is_grassmann_necklace(int n, int k, const Necklace& I);
Necklace grassmann_necklace(const Matroid& m);
// Bases of M_I: all J with J >=_a I_a for every a. Requires a valid necklace.
Matroid matroid_from_necklace(int n, int k, const Necklace& I);
BoundedAffinePermutation necklace_to_affine_perm(int n, int k, const Necklace& I);
Necklace affine_perm_to_necklace(const BoundedAffinePermutation& f);

class Positroid {
 public:
  // Validating: envelope(m) must equal m.
  static Positroid from_matroid(const Matroid& m);
  static Positroid from_necklace(int n, int k, const Necklace& I);
  static Positroid from_perm(const BoundedAffinePermutation& f);
  static Positroid uniform(int n, int k);
  // Unchecked: caller guarantees the data is consistent (validated in debug builds).
  static Positroid unchecked(Matroid m, Necklace I, BoundedAffinePermutation f);

  const Matroid& matroid() const { return m_; }
  const Necklace& necklace() const { return necklace_; }
  const BoundedAffinePermutation& perm() const { return perm_; }
  int n() const { return m_.n(); }
  int k() const { return m_.k(); }
  bool contains(Mask s) const { return m_.contains(s); }

  friend bool operator==(const Positroid& a, const Positroid& b) { return a.m_ == b.m_; }

 private:
  Positroid(Matroid m, Necklace I, BoundedAffinePermutation f)
      : m_(std::move(m)), necklace_(std::move(I)), perm_(std::move(f)) {}
  Matroid m_;
  Necklace necklace_;
  BoundedAffinePermutation perm_;
};

Positroid positroid_envelope(const Matroid& m);
bool is_positroid(const Matroid& m);

// Polytope of a matroid is alcoved: its bases are exactly the k-subsets J with
// |J ∩ [a,b]| >= min over bases of |I ∩ [a,b]| for every cyclic interval [a,b].
bool alcoved_criterion(const Matroid& m);

struct ComponentDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted blocks, sorted by first element
  std::vector<Positroid> components;     // component i on ground set blocks[i] relabeled 1..|block|
};

ComponentDecomposition connected_components(const Positroid& p);
ComponentDecomposition matroid_components(const Matroid& m);
bool is_noncrossing_partition(int n, const std::vector<std::vector<int>>& blocks);
// Direct sum on the ground set given by the blocks (labels relabeled back).
Matroid direct_sum(int n, const std::vector<std::vector<int>>& blocks, const std::vector<Matroid>& parts);

// Rank of {e_I - e_I0 : I in bases} over Q.
int polytope_dimension(const Matroid& m);

// Geometric test: conv{e_I : I in S} has vertex set {e_I} and all edges in root directions.
bool is_matroid_polytope_vertexset(int n, int k, const std::vector<SubsetK>& S);

}  // namespace postrop
