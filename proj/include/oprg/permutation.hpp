#pragma once

#include <random>
#include <vector>

namespace oprg {

// Permutation of {1..n}, stored as the image list: img[i-1] = sigma(i).
struct Permutation {
  int n = 0;
  std::vector<int> img;

  bool operator==(const Permutation&) const = default;
};

Permutation identity_permutation(int n);

// Throws PreconditionError unless images form a bijection of {1..n}.
Permutation make_permutation(std::vector<int> images);

inline int apply(const Permutation& p, int i) { return p.img[i - 1]; }

bool is_identity(const Permutation& p);

Permutation inverse(const Permutation& p);

// Function composition: compose(a, b)(i) = a(b(i)), i.e. b acts first.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation random_permutation(int n, std::mt19937& rng);

// All n! permutations of {1..n}, in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

// The induced permutation on m+n-1 slots under which partial composition
// is equivariant: inserting an arity-n operand into slot sigma^{-1}(i) of a
// sigma-acted arity-m element. Derived once from the endomorphism-operad
// action convention and shared by every carrier's axiom check.
Permutation block_permutation(const Permutation& sigma, int i,
                              const Permutation& tau);

}  // namespace oprg
