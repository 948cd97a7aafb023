#include "postrop/reduction.hpp"

#include "postrop/errors.hpp"

namespace postrop {

int ShapeReduction::bridges() const {
  int c = 0;
  for (const auto& s : steps) c += s.kind == StepKind::Bridge;
  return c;
}

namespace {

// Remove position i from a window of size N, relabeling Z order-preservingly.
std::vector<int> remove_position(const std::vector<int>& w, int i) {
  const int N = static_cast<int>(w.size());
  std::vector<int> out;
  for (int a = 1; a <= N; ++a) {
    if (a == i) continue;
    int x = w[a - 1];
    int r = ((x - 1) % N + N) % N + 1;
    int q = (x - r) / N;
    out.push_back(q * (N - 1) + (r < i ? r : r - 1));
  }
  return out;
}

}  // namespace

ShapeReduction canonical_reduction(const BoundedAffinePermutation& f0) {
  ShapeReduction out;
  std::vector<int> labels;
  for (int i = 1; i <= f0.n(); ++i) labels.push_back(i);
  std::vector<int> w = f0.window();
  int k = f0.k();
  Mask removed_coloops = 0;
  for (;;) {
    const int N = static_cast<int>(w.size());
    bool single = true;
    for (int i = 1; i <= N; ++i)
      if (w[i - 1] != i && w[i - 1] != i + N) single = false;
    if (single) {
      Mask b = removed_coloops;
      for (int i = 1; i <= N; ++i)
        if (w[i - 1] == i + N) b |= bit(labels[i - 1]);
      out.base = b;
      return out;
    }
    bool applied = false;
    for (int i = 1; i <= N && !applied; ++i) {
      int fi = w[i - 1];
      int fnext = i < N ? w[i] : w[0] + N;
      ShapeStep st{StepKind::Loop, N, k, i, labels};
      if (fi == i) {
        st.kind = StepKind::Loop;
        w = remove_position(w, i);
        labels.erase(labels.begin() + (i - 1));
      } else if (fi == i + N) {
        st.kind = StepKind::Coloop;
        removed_coloops |= bit(labels[i - 1]);
        w = remove_position(w, i);
        labels.erase(labels.begin() + (i - 1));
        --k;
      } else if (i + 1 <= fi && fi < fnext && fnext <= i + N) {
        st.kind = StepKind::Bridge;
        if (i < N) {
          std::swap(w[i - 1], w[i]);
        } else {
          int a = w[N - 1], b = w[0];
          w[N - 1] = b + N;
          w[0] = a - N;
        }
      } else {
        continue;
      }
      out.steps.push_back(std::move(st));
      applied = true;
    }
    if (!applied) throw InternalError("canonical_reduction: no applicable reduction step");
  }
}

int affine_length(const BoundedAffinePermutation& f) {
  const int n = f.n();
  int inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= i + 2 * n + 1; ++j)
      if (f(i) > f(j)) ++inv;
  return inv;
}

}  // namespace postrop
