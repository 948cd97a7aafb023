#include "postrop/subset.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "postrop/errors.hpp"

namespace postrop {

Mask rotate_to(Mask m, int n, int a) {
  int s = a - 1;
  if (s == 0) return m;
  return ((m >> s) | (m << (n - s))) & full_mask(n);
}

Mask rotate_from(Mask m, int n, int a) {
  int s = a - 1;
  if (s == 0) return m;
  return ((m << s) | (m >> (n - s))) & full_mask(n);
}

bool gale_leq(Mask I, Mask J, int n) {
  for (int t = 1; t <= n; ++t) {
    Mask pre = full_mask(t);
    if (popcount(I & pre) < popcount(J & pre)) return false;
  }
  return true;
}

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask elements_mask(const std::vector<int>& elements) {
  Mask m = 0;
  for (int x : elements) m |= bit(x);
  return m;
}

SubsetK::SubsetK(int n, Mask mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxN) throw InputError("ground set size out of range: " + std::to_string(n));
  if (mask & ~full_mask(n)) throw InputError("subset element outside [1," + std::to_string(n) + "]");
}

SubsetK SubsetK::from_elements(int n, const std::vector<int>& elements) {
  if (n < 0 || n > kMaxN) throw InputError("ground set size out of range: " + std::to_string(n));
  Mask m = 0;
  for (int x : elements) {
    if (x < 1 || x > n)
      throw InputError("subset element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    if (m & bit(x)) throw InputError("repeated subset element " + std::to_string(x));
    m |= bit(x);
  }
  return SubsetK(n, m);
}

SubsetK SubsetK::parse_key(int n, const std::string& key) {
  std::vector<int> elems;
  std::string tok;
  std::stringstream ss(key);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed subset key '" + key + "'");
    elems.push_back(std::stoi(tok));
  }
  if (!std::is_sorted(elems.begin(), elems.end()))
    throw InputError("subset key not sorted: '" + key + "'");
  return from_elements(n, elems);
}

std::vector<int> SubsetK::elements() const { return mask_elements(mask_); }

int SubsetK::element_sum() const {
  int s = 0;
  for (int x : elements()) s += x;
  return s;
}

std::string SubsetK::key() const {
  std::string out;
  for (int x : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string SubsetK::str() const {
  if (n_ < 10) {
    std::string out;
    for (int x : elements()) out += static_cast<char>('0' + x);
    return out.empty() ? "{}" : out;
  }
  return "{" + key() + "}";
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxN || k < 0 || k > n)
    throw InputError("invalid (k,n) = (" + std::to_string(k) + "," + std::to_string(n) + ")");
  rank_.assign(std::size_t{1} << n, -1);
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) == k) masks_.push_back(m);
    if (m == full_mask(n)) break;
  }
  std::sort(masks_.begin(), masks_.end(), lex_less);
  for (std::size_t i = 0; i < masks_.size(); ++i) rank_[masks_[i]] = static_cast<int>(i);
}

const SubsetIndex& subset_index(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SubsetIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<SubsetIndex>(n, k);
  return *slot;
}

std::vector<SubsetK> all_subsets(int n, int k) {
  const auto& idx = subset_index(n, k);
  std::vector<SubsetK> out;
  out.reserve(idx.size());
  for (Mask m : idx.masks()) out.emplace_back(n, m);
  return out;
}

}  // namespace postrop
