#include "oprg/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "oprg/errors.hpp"
#include "oprg/set_partition.hpp"

namespace oprg {

namespace {

Rational factorial(int n) {
  Rational acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

// All sorted tuples (multiset representatives) of length n over {1..dim}.
void sorted_tuples_rec(int dim, int n, int low, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = low; v <= dim; ++v) {
    cur.push_back(v);
    sorted_tuples_rec(dim, n, v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> sorted_tuples(int dim, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  sorted_tuples_rec(dim, n, 1, cur, out);
  return out;
}

// All tuples of length n over {1..dim}, odometer order.
std::vector<std::vector<int>> all_tuples(int dim, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 1);
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == dim) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  if (n == 0) out = {{}};
  return out;
}

void check_compatible(const SeriesElement& a, const SeriesElement& b) {
  if (a.dim != b.dim) throw PreconditionError("series dimension mismatch");
  if (a.order != b.order) throw PreconditionError("series order mismatch");
}

// Plain polynomial in dim variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Rational>;

int total_degree(const std::vector<int>& expo) {
  int d = 0;
  for (int e : expo) d += e;
  return d;
}

Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      if (total_degree(e) > max_degree) continue;
      Rational& slot = out[e];
      slot += ca * cb;
      if (is_zero(slot)) out.erase(e);
    }
  }
  return out;
}

// Component nu of the series as a plain polynomial. The 1/n! normalization
// of the series meets the multinomial count of each sorted representative:
// monomial coefficient = f_{nu;mu} / prod_i k_i! for exponent multiset k.
Poly series_component_to_poly(const SeriesElement& s, int nu) {
  Poly p;
  for (int n = 1; n <= s.order; ++n) {
    for (const auto& [key, value] : s.terms[n - 1]) {
      if (key.first != nu) continue;
      std::vector<int> expo(s.dim, 0);
      for (int mu : key.second) ++expo[mu - 1];
      Rational denom = 1;
      for (int e : expo) denom *= factorial(e);
      Rational& slot = p[expo];
      slot += value / denom;
      if (is_zero(slot)) p.erase(expo);
    }
  }
  return p;
}

void poly_to_series_component(const Poly& p, int nu, SeriesElement& out) {
  for (const auto& [expo, coeff] : p) {
    const int n = total_degree(expo);
    if (n < 1 || n > out.order) continue;
    std::vector<int> mus;
    for (std::size_t i = 0; i < expo.size(); ++i)
      mus.insert(mus.end(), expo[i], static_cast<int>(i) + 1);
    Rational denom_inv = 1;
    for (int e : expo) denom_inv *= factorial(e);
    out.set(n, nu, mus, coeff * denom_inv);
  }
}

}  // namespace

Rational SeriesElement::get(int degree, int nu, std::vector<int> mus) const {
  if (degree < 1 || degree > order)
    throw PreconditionError("series degree out of range");
  std::sort(mus.begin(), mus.end());
  const auto& m = terms[degree - 1];
  const auto it = m.find({nu, mus});
  return it == m.end() ? Rational(0) : it->second;
}

void SeriesElement::set(int degree, int nu, std::vector<int> mus,
                        Rational value) {
  if (degree < 1 || degree > order)
    throw PreconditionError("series degree out of range");
  auto& m = terms[degree - 1];
  if (is_zero(value))
    m.erase({nu, std::move(mus)});
  else
    m[{nu, std::move(mus)}] = std::move(value);
}

SeriesElement zero_series(int dim, int order) {
  if (dim < 1 || order < 1)
    throw PreconditionError("series need dim >= 1 and order >= 1");
  SeriesElement s;
  s.dim = dim;
  s.order = order;
  s.terms.resize(order);
  return s;
}

SeriesElement identity_series(int dim, int order) {
  SeriesElement s = zero_series(dim, order);
  for (int nu = 1; nu <= dim; ++nu) s.set(1, nu, {nu}, 1);
  return s;
}

bool is_pointed(const SeriesElement& s) {
  for (int nu = 1; nu <= s.dim; ++nu)
    for (int mu = 1; mu <= s.dim; ++mu)
      if (s.get(1, nu, {mu}) != Rational(nu == mu ? 1 : 0)) return false;
  return true;
}

SeriesElement compose_direct(const SeriesElement& g, const SeriesElement& f) {
  check_compatible(g, f);
  const int dim = f.dim;
  const int order = f.order;
  std::vector<Poly> f_polys(dim);
  for (int j = 1; j <= dim; ++j) f_polys[j - 1] = series_component_to_poly(f, j);

  SeriesElement h = zero_series(dim, order);
  for (int nu = 1; nu <= dim; ++nu) {
    const Poly g_poly = series_component_to_poly(g, nu);
    Poly acc;
    for (const auto& [expo, coeff] : g_poly) {
      Poly term;
      term[std::vector<int>(dim, 0)] = coeff;
      for (int j = 0; j < dim; ++j)
        for (int rep = 0; rep < expo[j]; ++rep)
          term = poly_mul(term, f_polys[j], order);
      for (const auto& [e, c] : term) {
        Rational& slot = acc[e];
        slot += c;
        if (is_zero(slot)) acc.erase(e);
      }
    }
    poly_to_series_component(acc, nu, h);
  }
  return h;
}

SeriesElement faa_di_bruno_compose(const SeriesElement& g,
                                   const SeriesElement& f) {
  check_compatible(g, f);
  const int dim = f.dim;
  const int order = f.order;
  SeriesElement h = zero_series(dim, order);
  for (int n = 1; n <= order; ++n) {
    const auto partitions = enumerate_set_partitions(n);
    for (const auto& mus : sorted_tuples(dim, n)) {
      for (int nu = 1; nu <= dim; ++nu) {
        Rational sum = 0;
        for (const auto& part : partitions) {
          const int k = part.block_count();
          for (const auto& rhos : all_tuples(dim, k)) {
            const Rational g_coeff = g.get(k, nu, rhos);
            if (is_zero(g_coeff)) continue;
            Rational prod = g_coeff;
            for (int l = 0; l < k && !is_zero(prod); ++l) {
              std::vector<int> block_mus;
              block_mus.reserve(part.blocks[l].size());
              for (int idx : part.blocks[l]) block_mus.push_back(mus[idx - 1]);
              const int piece = static_cast<int>(block_mus.size());
              prod *= f.get(piece, rhos[l], std::move(block_mus));
            }
            sum += prod;
          }
        }
        h.set(n, nu, mus, sum);
      }
    }
  }
  return h;
}

SeriesElement invert_series(const SeriesElement& f) {
  if (!is_pointed(f))
    throw PreconditionError("composition inverse needs a pointed series");
  const int dim = f.dim;
  const int order = f.order;
  SeriesElement inv = identity_series(dim, order);
  for (int n = 2; n <= order; ++n) {
    const auto partitions = enumerate_set_partitions(n);
    for (const auto& mus : sorted_tuples(dim, n)) {
      for (int nu = 1; nu <= dim; ++nu) {
        // 0 = (inv o f)_n = inv_n + [partitions with k < n], so inv_n is
        // minus the sum over the non-singleton partitions.
        Rational sum = 0;
        for (const auto& part : partitions) {
          const int k = part.block_count();
          if (k == n) continue;  // the all-singletons term is inv_n itself
          for (const auto& rhos : all_tuples(dim, k)) {
            const Rational inv_coeff = inv.get(k, nu, rhos);
            if (is_zero(inv_coeff)) continue;
            Rational prod = inv_coeff;
            for (int l = 0; l < k && !is_zero(prod); ++l) {
              std::vector<int> block_mus;
              for (int idx : part.blocks[l]) block_mus.push_back(mus[idx - 1]);
              const int piece = static_cast<int>(block_mus.size());
              prod *= f.get(piece, rhos[l], std::move(block_mus));
            }
            sum += prod;
          }
        }
        inv.set(n, nu, mus, -sum);
      }
    }
  }
  return inv;
}

std::map<SeriesKey, Rational> symmetrize_coefficients(
    const std::map<SeriesKey, Rational>& raw) {
  std::map<SeriesKey, Rational> out;
  std::set<SeriesKey> reps;
  for (const auto& [key, value] : raw) {
    (void)value;
    std::vector<int> sorted = key.second;
    std::sort(sorted.begin(), sorted.end());
    reps.insert({key.first, sorted});
  }
  for (const auto& rep : reps) {
    const int n = static_cast<int>(rep.second.size());
    Rational sum = 0;
    int count = 0;
    for (const auto& perm : all_permutations(n)) {
      std::vector<int> tuple(n);
      for (int i = 1; i <= n; ++i) tuple[i - 1] = rep.second[apply(perm, i) - 1];
      const auto it = raw.find({rep.first, tuple});
      if (it != raw.end()) sum += it->second;
      ++count;
    }
    const Rational value = sum / count;
    if (!is_zero(value)) out[rep] = value;
  }
  return out;
}

SeriesElement random_pointed_series(int dim, int order, std::mt19937& rng) {
  SeriesElement s = identity_series(dim, order);
  for (int n = 2; n <= order; ++n)
    for (const auto& mus : sorted_tuples(dim, n))
      for (int nu = 1; nu <= dim; ++nu) s.set(n, nu, mus, random_rational(rng));
  return s;
}

std::string render_series(const SeriesElement& s,
                          const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != s.dim)
    throw PreconditionError("variable name count does not match dimension");
  std::ostringstream out;
  for (int n = 1; n <= s.order; ++n) {
    for (const auto& [key, value] : s.terms[n - 1]) {
      out << names[key.first - 1] << "; ";
      for (std::size_t i = 0; i < key.second.size(); ++i) {
        if (i) out << ",";
        out << names[key.second[i] - 1];
      }
      out << " : " << render_rational(value) << "\n";
    }
  }
  return out.str();
}

SeriesElement parse_series(const std::string& text,
                           const std::vector<std::string>& names, int order) {
  const int dim = static_cast<int>(names.size());
  auto index_of = [&](const std::string& name) {
    for (int i = 0; i < dim; ++i)
      if (names[i] == name) return i + 1;
    throw ParseError("unknown variable name '" + name + "'");
  };
  auto trim = [](std::string v) {
    const auto b = v.find_first_not_of(" \t\r");
    const auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  SeriesElement s = zero_series(dim, order);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto semi = line.find(';');
    const auto colon = line.rfind(':');
    if (semi == std::string::npos || colon == std::string::npos || colon < semi)
      throw ParseError("bad series line: '" + line + "'");
    const int nu = index_of(trim(line.substr(0, semi)));
    std::vector<int> mus;
    std::istringstream mu_stream(line.substr(semi + 1, colon - semi - 1));
    std::string mu_name;
    while (std::getline(mu_stream, mu_name, ','))
      mus.push_back(index_of(trim(mu_name)));
    if (mus.empty() || static_cast<int>(mus.size()) > order)
      throw ParseError("series degree out of range: '" + line + "'");
    const Rational value = parse_rational(trim(line.substr(colon + 1)));
    std::sort(mus.begin(), mus.end());
    const int degree = static_cast<int>(mus.size());
    s.set(degree, nu, mus, s.get(degree, nu, mus) + value);
  }
  return s;
}

}  // namespace oprg
