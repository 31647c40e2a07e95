#include "oprg/end_operad.hpp"

#include <algorithm>
#include <sstream>

#include "oprg/errors.hpp"

namespace oprg {

namespace {

std::size_t tensor_size(int dim, int arity) {
  std::size_t size = 1;
  for (int i = 0; i <= arity; ++i) size *= static_cast<std::size_t>(dim);
  return size;
}

std::size_t flat_index(int dim, int nu, const std::vector<int>& mus) {
  std::size_t idx = static_cast<std::size_t>(nu);
  for (int mu : mus) idx = idx * dim + static_cast<std::size_t>(mu);
  return idx;
}

// Iterates all 0-based index tuples of the given length.
bool next_tuple(std::vector<int>& tuple, int dim) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < dim) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

Rational EndTensor::get(int nu, const std::vector<int>& mus) const {
  return coeffs[flat_index(dim, nu, mus)];
}

void EndTensor::set(int nu, const std::vector<int>& mus,
                    const Rational& value) {
  coeffs[flat_index(dim, nu, mus)] = value;
}

EndTensor zero_tensor(int dim, int arity) {
  if (dim < 1 || arity < 1)
    throw PreconditionError("tensor needs dim >= 1 and arity >= 1");
  EndTensor t;
  t.dim = dim;
  t.arity = arity;
  t.coeffs.assign(tensor_size(dim, arity), Rational(0));
  return t;
}

EndTensor identity_tensor(int dim) {
  EndTensor t = zero_tensor(dim, 1);
  for (int nu = 0; nu < dim; ++nu) t.set(nu, {nu}, 1);
  return t;
}

EndCarrier::EndCarrier(int dim) : dim_(dim) {
  if (dim < 1) throw PreconditionError("End_V needs dim >= 1");
}

EndCarrier::Element EndCarrier::zero(int arity) const {
  return zero_tensor(dim_, arity);
}

EndCarrier::Element EndCarrier::unit() const { return identity_tensor(dim_); }

EndCarrier::Element EndCarrier::add(const Element& a, const Element& b) const {
  if (a.arity != b.arity || a.dim != b.dim)
    throw PreconditionError("tensor shape mismatch in add");
  Element out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] += b.coeffs[i];
  return out;
}

EndCarrier::Element EndCarrier::scale(const Element& a,
                                      const Rational& r) const {
  Element out = a;
  for (auto& coeff : out.coeffs) coeff *= r;
  return out;
}

EndCarrier::Element EndCarrier::act(const Element& a,
                                    const Permutation& sigma) const {
  if (sigma.n != a.arity) throw PreconditionError("action arity mismatch");
  Element out = zero_tensor(a.dim, a.arity);
  std::vector<int> mus(a.arity, 0);
  do {
    std::vector<int> permuted(a.arity);
    for (int k = 1; k <= a.arity; ++k)
      permuted[k - 1] = mus[apply(sigma, k) - 1];
    for (int nu = 0; nu < a.dim; ++nu) out.set(nu, mus, a.get(nu, permuted));
  } while (next_tuple(mus, a.dim));
  return out;
}

EndCarrier::Element EndCarrier::pcomp(const Element& a, int slot,
                                      const Element& b) const {
  if (slot < 1 || slot > a.arity)
    throw PreconditionError("pcomp slot out of range");
  const int m = a.arity;
  const int n = b.arity;
  Element out = zero_tensor(a.dim, m + n - 1);
  std::vector<int> mus(m + n - 1, 0);
  do {
    const std::vector<int> inner(mus.begin() + slot - 1,
                                 mus.begin() + slot - 1 + n);
    std::vector<int> outer(m, 0);
    for (int k = 0; k < slot - 1; ++k) outer[k] = mus[k];
    for (int k = slot; k < m; ++k) outer[k] = mus[k + n - 1];
    for (int nu = 0; nu < a.dim; ++nu) {
      Rational sum = 0;
      for (int rho = 0; rho < a.dim; ++rho) {
        outer[slot - 1] = rho;
        const Rational b_val = b.get(rho, inner);
        if (!is_zero(b_val)) sum += a.get(nu, outer) * b_val;
      }
      if (!is_zero(sum)) out.set(nu, mus, sum);
    }
  } while (next_tuple(mus, a.dim));
  return out;
}

bool EndCarrier::equal(const Element& a, const Element& b) const {
  return a.arity == b.arity && a.dim == b.dim && a.coeffs == b.coeffs;
}

EndCarrier::Element EndCarrier::random(int arity, std::mt19937& rng) const {
  Element t = zero_tensor(dim_, arity);
  for (auto& coeff : t.coeffs) coeff = random_rational(rng);
  return t;
}

std::string EndCarrier::render(const Element& a) const {
  std::ostringstream out;
  std::vector<int> mus(a.arity, 0);
  do {
    for (int nu = 0; nu < a.dim; ++nu) {
      const Rational v = a.get(nu, mus);
      if (is_zero(v)) continue;
      out << nu + 1 << ";";
      for (std::size_t k = 0; k < mus.size(); ++k)
        out << (k ? "," : " ") << mus[k] + 1;
      out << " : " << render_rational(v) << "\n";
    }
  } while (next_tuple(mus, a.dim));
  return out.str();
}

bool tensor_is_symmetric(const EndTensor& t) {
  for (const auto& sigma : all_permutations(t.arity)) {
    std::vector<int> mus(t.arity, 0);
    do {
      std::vector<int> permuted(t.arity);
      for (int k = 1; k <= t.arity; ++k)
        permuted[k - 1] = mus[apply(sigma, k) - 1];
      for (int nu = 0; nu < t.dim; ++nu)
        if (t.get(nu, mus) != t.get(nu, permuted)) return false;
    } while (next_tuple(mus, t.dim));
  }
  return true;
}

EndTensor symmetrize_tensor(const EndTensor& t) {
  EndTensor out = zero_tensor(t.dim, t.arity);
  const auto perms = all_permutations(t.arity);
  std::vector<int> mus(t.arity, 0);
  do {
    for (int nu = 0; nu < t.dim; ++nu) {
      Rational sum = 0;
      for (const auto& sigma : perms) {
        std::vector<int> permuted(t.arity);
        for (int k = 1; k <= t.arity; ++k)
          permuted[k - 1] = mus[apply(sigma, k) - 1];
        sum += t.get(nu, permuted);
      }
      out.set(nu, mus, sum / static_cast<long>(perms.size()));
    }
  } while (next_tuple(mus, t.dim));
  return out;
}

EndTensor tensor_from_series_component(const SeriesElement& s, int degree) {
  EndTensor t = zero_tensor(s.dim, degree);
  std::vector<int> mus(degree, 0);
  do {
    std::vector<int> one_based(degree);
    for (int k = 0; k < degree; ++k) one_based[k] = mus[k] + 1;
    for (int nu = 0; nu < s.dim; ++nu)
      t.set(nu, mus, s.get(degree, nu + 1, one_based));
  } while (next_tuple(mus, s.dim));
  return t;
}

void series_component_from_tensor(const EndTensor& t, SeriesElement& out) {
  if (!tensor_is_symmetric(t))
    throw PreconditionError(
        "reading a series component off a non-symmetric tensor");
  std::vector<int> mus(t.arity, 0);
  do {
    if (std::is_sorted(mus.begin(), mus.end())) {
      std::vector<int> one_based(t.arity);
      for (int k = 0; k < t.arity; ++k) one_based[k] = mus[k] + 1;
      for (int nu = 0; nu < t.dim; ++nu)
        out.set(t.arity, nu + 1, one_based, t.get(nu, mus));
    }
  } while (next_tuple(mus, t.dim));
}

}  // namespace oprg
