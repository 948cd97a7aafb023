#include "postrop/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "postrop/errors.hpp"

namespace postrop {

namespace {

bool is_interval(Mask m) {
  if (m == 0) return false;
  Mask low = m & (~m + 1);
  Mask shifted = m / low;  // drop trailing zeros
  return (shifted & (shifted + 1)) == 0;
}

bool valid_split(Mask m, int n) {
  int s = popcount(m);
  return (m & ~full_mask(n - 1)) == 0 && is_interval(m) && s >= 2 && s <= n - 2;
}

bool compatible(Mask a, Mask b) { return (a & b) == 0 || (a & b) == a || (a & b) == b; }

int lowest_label(Mask m) { return std::countr_zero(m) + 1; }

// Items directly below a node of the laminar family: maximal splits strictly
// inside `region` and the leaves of `region` not covered by them, ordered by
// their smallest leaf.
std::vector<Mask> items_below(const std::vector<Mask>& splits, Mask region) {
  std::vector<Mask> inside;
  for (Mask s : splits)
    if (s != region && (s & region) == s) inside.push_back(s);
  std::vector<Mask> items;
  for (Mask s : inside) {
    bool maximal = true;
    for (Mask t : inside)
      if (t != s && (s & t) == s) maximal = false;
    if (maximal) items.push_back(s);
  }
  Mask covered = 0;
  for (Mask s : items) covered |= s;
  for (int x : mask_elements(region & ~covered)) items.push_back(bit(x));
  std::sort(items.begin(), items.end(), [](Mask a, Mask b) { return lowest_label(a) < lowest_label(b); });
  return items;
}

}  // namespace

PlanarTree PlanarTree::from_splits(int n, std::vector<Mask> splits) {
  if (n < 3 || n > 30) throw InputError("planar trees need 3 <= n <= 30 leaves");
  std::sort(splits.begin(), splits.end());
  if (std::adjacent_find(splits.begin(), splits.end()) != splits.end()) throw InputError("repeated split");
  for (Mask s : splits)
    if (!valid_split(s, n)) throw InputError("split " + SubsetK(n, s).key() + " is not an interval split avoiding leaf n");
  for (std::size_t i = 0; i < splits.size(); ++i)
    for (std::size_t j = i + 1; j < splits.size(); ++j)
      if (!compatible(splits[i], splits[j]))
        throw InputError("splits " + SubsetK(n, splits[i]).key() + " and " + SubsetK(n, splits[j]).key() + " cross");
  return PlanarTree(n, std::move(splits));
}

PlanarTree PlanarTree::star(int n) { return from_splits(n, {}); }

std::vector<std::vector<Mask>> PlanarTree::vertices() const {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> root = items_below(splits_, full_mask(n_ - 1));
  root.push_back(bit(n_));
  out.push_back(std::move(root));
  for (Mask s : splits_) {
    std::vector<Mask> v = items_below(splits_, s);
    v.push_back(full_mask(n_) & ~s);
    out.push_back(std::move(v));
  }
  return out;
}

std::string PlanarTree::str() const {
  std::function<std::string(Mask)> node = [&](Mask region) {
    std::string s = "(";
    bool first = true;
    for (Mask it : items_below(splits_, region)) {
      if (!first) s += ",";
      first = false;
      s += popcount(it) == 1 ? std::to_string(lowest_label(it)) : node(it);
    }
    return s + ")";
  };
  std::string s = node(full_mask(n_ - 1));
  s.pop_back();
  return s + "," + std::to_string(n_) + ")";
}

PlanarTree PlanarTree::parse(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InputError("cannot parse tree '" + text + "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<int> order;
  std::vector<std::pair<Mask, int>> groups;  // leaf set, item count
  std::vector<int> root_items;               // leaf labels appearing directly in the root (0 for groups)
  std::function<Mask(int)> group = [&](int depth) -> Mask {
    skip();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    Mask leaves = 0;
    int items = 0;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '(') {
        Mask sub = group(depth + 1);
        leaves |= sub;
        if (depth == 0) root_items.push_back(0);
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        int leaf = std::stoi(text.substr(start, pos - start));
        if (leaf < 1 || leaf > 30) fail("leaf label out of range");
        order.push_back(leaf);
        leaves |= bit(leaf);
        if (depth == 0) root_items.push_back(leaf);
      } else {
        fail("expected a leaf or '('");
      }
      ++items;
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (depth > 0) groups.emplace_back(leaves, items);
    return leaves;
  };
  group(0);
  skip();
  if (pos != text.size()) fail("trailing characters");
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    if (order[i] != i + 1) throw InputError("tree '" + text + "': leaves must appear once each, in the order 1..n");
  if (root_items.empty() || root_items.back() != n)
    throw InputError("tree '" + text + "': leaf n must be the last child of the root");
  if (root_items.size() < 3) throw InputError("tree '" + text + "': the root has degree < 3");
  std::vector<Mask> splits;
  for (auto [m, items] : groups) {
    if (items < 2) throw InputError("tree '" + text + "': an internal vertex has degree < 3");
    splits.push_back(m);
  }
  return from_splits(n, splits);
}

Subdivision subdivision_from_tree(const PlanarTree& T) {
  std::vector<std::function<bool(const std::vector<int>&)>> pieces;
  for (const auto& blocks : T.vertices())
    pieces.push_back([blocks](const std::vector<int>& x) {
      for (Mask b : blocks) {
        int c = 0;
        for (int e : mask_elements(b)) c += x[e - 1];
        if (c > 1) return false;
      }
      return true;
    });
  return subdivision_from_pieces(T.n(), 2, pieces);
}

PlanarTree tree_from_subdivision(const Subdivision& s) {
  const int n = s.n;
  if (s.k != 2) throw PreconditionError("tree_from_subdivision requires k = 2");
  if (s.support != subset_index(n, 2).masks()) throw PreconditionError("tree_from_subdivision requires the full hypersimplex");
  std::vector<Mask> splits;
  for (const Cut& c : cuts(s)) {
    Mask A = 0;
    bool ok = c.rhs == 1;
    for (int i = 0; i < n; ++i) {
      if (c.normal[i] == 1) A |= bit(i + 1);
      else if (c.normal[i] != 0) ok = false;
    }
    if (!ok) throw PreconditionError("wall is not of the form x_A = 1");
    if (A & bit(n)) A = full_mask(n) & ~A;
    splits.push_back(A);
  }
  PlanarTree T = PlanarTree::from_splits(n, splits);
  if (subdivision_from_tree(T).maximal_faces != s.maximal_faces)
    throw PreconditionError("subdivision does not come from a planar tree");
  return T;
}

PlanarTree tree_from_trop(const TropVector& p) {
  const int n = p.n();
  if (p.k() != 2) throw PreconditionError("tree_from_trop requires k = 2");
  for (const auto& v : p.values())
    if (v.inf) throw PreconditionError("tree_from_trop requires finite entries");
  if (!check_positive_tropical(p)) throw PreconditionError("tree_from_trop requires a positive tropical vector");
  auto P = [&](int a, int b) { return p.at(bit(a) | bit(b)).v; };
  // For a<b<c<d: 1 if the quartet splits as ab|cd, -1 for ad|bc, 0 unresolved.
  auto quartet = [&](int a, int b, int c, int d) {
    Rational L = P(a, b) + P(c, d), R = P(a, d) + P(b, c);
    return L < R ? -1 : (R < L ? 1 : 0);
  };
  std::vector<Mask> splits;
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n - 1; ++b) {
      Mask A = 0;
      for (int x = a; x <= b; ++x) A |= bit(x);
      if (!valid_split(A, n)) continue;
      bool displayed = true;
      for (int i = 1; i <= n && displayed; ++i)
        for (int j = i + 1; j <= n && displayed; ++j)
          for (int k = j + 1; k <= n && displayed; ++k)
            for (int l = k + 1; l <= n && displayed; ++l) {
              int q[4] = {i, j, k, l};
              int in = 0;
              for (int x : q) in += (A & bit(x)) != 0;
              if (in != 2) continue;
              bool ab = ((A & bit(i)) != 0) == ((A & bit(j)) != 0);  // {i,j} on one side
              bool ad = ((A & bit(i)) != 0) == ((A & bit(l)) != 0);
              int want = ab ? 1 : (ad ? -1 : 2);  // ik|jl never happens for an interval
              displayed = quartet(i, j, k, l) == want;
            }
      if (displayed) splits.push_back(A);
    }
  try {
    return PlanarTree::from_splits(n, splits);
  } catch (const InputError& e) {
    throw InternalError(std::string("tree_from_trop: displayed splits are inconsistent: ") + e.what());
  }
}

TropVector trop_from_tree(const PlanarTree& T) {
  TropVector p = TropVector::zeros(T.n(), 2);
  for (Mask m : subset_index(T.n(), 2).masks()) {
    long c = 0;
    for (Mask s : T.splits()) c += (m & s) == m;
    p.set(m, Rational(c));
  }
  return p;
}

std::vector<PlanarTree> all_planar_trees(int n) {
  if (n < 3 || n > 12) throw InputError("all_planar_trees supports 3 <= n <= 12");
  std::vector<Mask> cand;
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n - 1; ++b) {
      Mask A = 0;
      for (int x = a; x <= b; ++x) A |= bit(x);
      if (valid_split(A, n)) cand.push_back(A);
    }
  std::vector<PlanarTree> out;
  std::vector<Mask> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cand.size()) {
      out.push_back(PlanarTree::from_splits(n, cur));
      return;
    }
    rec(i + 1);
    for (Mask s : cur)
      if (!compatible(s, cand[i])) return;
    cur.push_back(cand[i]);
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace postrop
