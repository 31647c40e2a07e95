#include "oprg/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "oprg/errors.hpp"

namespace oprg {

Permutation identity_permutation(int n) {
  Permutation p;
  p.n = n;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Permutation make_permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw PreconditionError("image list is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
  Permutation p;
  p.n = n;
  p.img = std::move(images);
  return p;
}

bool is_identity(const Permutation& p) {
  for (int i = 1; i <= p.n; ++i)
    if (p.img[i - 1] != i) return false;
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation q;
  q.n = p.n;
  q.img.resize(p.n);
  for (int i = 1; i <= p.n; ++i) q.img[p.img[i - 1] - 1] = i;
  return q;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n != b.n) throw PreconditionError("permutation size mismatch");
  Permutation c;
  c.n = a.n;
  c.img.resize(a.n);
  for (int i = 1; i <= a.n; ++i) c.img[i - 1] = apply(a, apply(b, i));
  return c;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  Permutation p = identity_permutation(n);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(p.img[i], p.img[pick(rng)]);
  }
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(make_permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation block_permutation(const Permutation& sigma, int i,
                              const Permutation& tau) {
  const int m = sigma.n;
  const int n = tau.n;
  const int q0 = apply(inverse(sigma), i);
  Permutation pi;
  pi.n = m + n - 1;
  pi.img.assign(pi.n, 0);
  for (int q = 1; q <= m; ++q) {
    if (q == q0) continue;
    const int w = q < q0 ? q : q + n - 1;
    const int v = apply(sigma, q);
    pi.img[w - 1] = v < i ? v : v + n - 1;
  }
  for (int r = 1; r <= n; ++r) pi.img[q0 - 1 + r - 1] = i - 1 + apply(tau, r);
  return pi;
}

}  // namespace oprg
