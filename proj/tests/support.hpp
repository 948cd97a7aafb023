#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "postrop/matroid.hpp"
#include "postrop/subset.hpp"

namespace testsupport {

using postrop::Mask;

inline std::uint64_t seed() {
  const char* s = std::getenv("POSTROP_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(seed());
  return g;
}

inline long rand_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline postrop::SubsetK S(int n, std::initializer_list<int> e) {
  return postrop::SubsetK::from_elements(n, std::vector<int>(e));
}

// Digit-string shorthand: "134" -> {1,3,4} (n < 10).
inline Mask M(const std::string& digits) {
  Mask m = 0;
  for (char c : digits) m |= postrop::bit(c - '0');
  return m;
}

inline std::vector<postrop::SubsetK> Ss(int n, std::initializer_list<const char*> items) {
  std::vector<postrop::SubsetK> out;
  for (const char* it : items) out.emplace_back(n, M(it));
  return out;
}

// Brute force: every basis collection B ⊆ binom([n],k) (nonempty) that satisfies
// the exchange axiom, enumerated over all 2^|binom| subsets with a direct check.
inline void for_each_matroid(int n, int k, const std::function<void(const std::vector<Mask>&)>& fn) {
  const auto& idx = postrop::subset_index(n, k);
  const int N = idx.size();
  std::vector<char> member(std::size_t{1} << n, 0);
  std::vector<Mask> B;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << N); ++sel) {
    B.clear();
    for (int i = 0; i < N; ++i)
      if (sel >> i & 1) B.push_back(idx.mask(i));
    for (Mask m : B) member[m] = 1;
    bool ok = true;
    for (Mask I : B) {
      for (Mask J : B) {
        for (int i = 1; i <= n && ok; ++i) {
          if (!(I >> (i - 1) & 1) || (J >> (i - 1) & 1)) continue;
          bool found = false;
          for (int j = 1; j <= n && !found; ++j)
            if ((J >> (j - 1) & 1) && !(I >> (j - 1) & 1))
              found = member[(I & ~postrop::bit(i)) | postrop::bit(j)];
          ok = found;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    for (Mask m : B) member[m] = 0;
    if (ok) fn(B);
  }
}

// All (k,n)-bounded affine permutations, by direct enumeration of windows.
inline std::vector<std::vector<int>> all_bounded_affine_perms(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n);
  std::vector<bool> used(n, false);
  std::function<void(int, int)> rec = [&](int i, int shift) {
    if (i > n) {
      if (shift == k * n) out.push_back(w);
      return;
    }
    for (int f = i; f <= i + n; ++f) {
      int r = (f - 1) % n;
      if (used[r]) continue;
      used[r] = true;
      w[i - 1] = f;
      rec(i + 1, shift + (f - i));
      used[r] = false;
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace testsupport
