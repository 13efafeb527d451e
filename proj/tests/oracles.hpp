#ifndef BRAIDPERM_TESTS_ORACLES_HPP
#define BRAIDPERM_TESTS_ORACLES_HPP

// Definitionally naive reference implementations. None of these call the
// library's group algorithms; they operate on raw image arrays.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "braidperm/permutation.hpp"

namespace oracle
{

using Images = std::vector<std::uint32_t>; // images[x-1] = p(x)

inline Images identity(std::size_t n)
{
  Images v(n);
  std::iota(v.begin(), v.end(), 1u);
  return v;
}

inline std::uint32_t apply(Images const &p, std::uint32_t x)
{
  return x >= 1 && x <= p.size() ? p[x - 1] : x;
}

/// (p q)(x) = p(q(x)) on [1, n].
inline Images compose(Images const &p, Images const &q, std::size_t n)
{
  Images r(n);
  for (std::uint32_t x = 1; x <= n; ++x)
    r[x - 1] = apply(p, apply(q, x));
  return r;
}

inline Images pad(Images p, std::size_t n)
{
  for (std::size_t x = p.size() + 1; x <= n; ++x)
    p.push_back(static_cast<std::uint32_t>(x));
  return p;
}

/// (omega^k p)(x) = p(x - k) + k for x > k.
inline Images shift(Images const &p, std::size_t k, std::size_t n)
{
  Images r = identity(n);
  for (std::uint32_t x = 1; x <= p.size(); ++x)
    r[x + k - 1] = p[x - 1] + static_cast<std::uint32_t>(k);
  return r;
}

/// Swap of the blocks [(s-1)d+1, sd] and [sd+1, (s+1)d].
inline Images block_swap(std::size_t s, std::size_t d, std::size_t n)
{
  Images r = identity(n * d);
  for (std::size_t i = 1; i <= d; ++i) {
    r[(s - 1) * d + i - 1] = static_cast<std::uint32_t>(s * d + i);
    r[s * d + i - 1] = static_cast<std::uint32_t>((s - 1) * d + i);
  }
  return r;
}

inline braidperm::Permutation to_perm(Images const &p)
{
  return braidperm::Permutation::from_images(p);
}

inline Images to_images(braidperm::Permutation const &p, std::size_t n)
{
  Images r(n);
  for (std::uint32_t x = 1; x <= n; ++x)
    r[x - 1] = p(x);
  return r;
}

inline std::vector<Images> all_images(std::size_t d)
{
  std::vector<Images> out;
  Images p = identity(d);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every element of <gens> by breadth-first closure.
inline std::set<Images> closure(std::vector<Images> const &gens, std::size_t n)
{
  std::set<Images> seen{identity(n)};
  std::vector<Images> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        Images y = compose(g, pad(x, n), n);
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Images> perms_to_images(std::vector<braidperm::Permutation> const &ps,
                                           std::size_t n)
{
  std::vector<Images> out;
  for (auto const &p : ps)
    out.push_back(to_images(p, n));
  return out;
}

/// Orbits of <gens> on [1, n] by repeated relaxation.
inline std::vector<std::vector<std::uint32_t>> orbits(std::vector<Images> const &gens,
                                                      std::size_t n)
{
  std::vector<std::uint32_t> label(n + 1);
  std::iota(label.begin(), label.end(), 0u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const &g : gens) {
      for (std::uint32_t x = 1; x <= n; ++x) {
        std::uint32_t const y = apply(g, x);
        std::uint32_t const m = std::min(label[x], label[y]);
        if (label[x] != m || label[y] != m) {
          label[x] = label[y] = m;
          changed = true;
        }
      }
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_label;
  for (std::uint32_t x = 1; x <= n; ++x)
    by_label[label[x]].push_back(x);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto &[l, o] : by_label)
    out.push_back(o);
  return out;
}

/// M_{d,tau} from the definition: theta w1 omega^d(w2) squaring to tau omega^d(tau).
inline std::set<Images> coset_solutions(std::size_t d, Images const &tau)
{
  std::size_t const n = 2 * d;
  Images const th = block_swap(1, d, 2);
  Images const target = compose(pad(tau, n), shift(tau, d, n), n);
  std::set<Images> out;
  for (auto const &w1 : all_images(d)) {
    for (auto const &w2 : all_images(d)) {
      Images const s = compose(th, compose(pad(w1, n), shift(w2, d, n), n), n);
      if (compose(s, s, n) == target)
        out.insert(s);
    }
  }
  return out;
}

/// Elements of the subgroup of (Z/q)^n generated by gens.
inline std::set<std::vector<long long>> span_mod(std::vector<std::vector<long long>> const &gens,
                                                 long long q, std::size_t n)
{
  std::vector<long long> zero(n, 0);
  std::set<std::vector<long long>> seen{zero};
  std::vector<std::vector<long long>> frontier{zero};
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        std::vector<long long> y(n);
        for (std::size_t i = 0; i < n; ++i)
          y[i] = (((x[i] + g[i]) % q) + q) % q;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// #{x : k x = 0} for every k in [1, q]; determines a finite abelian group.
inline std::vector<std::size_t> torsion_profile(std::set<std::vector<long long>> const &elements,
                                                long long q)
{
  std::vector<std::size_t> out;
  for (long long k = 1; k <= q; ++k) {
    std::size_t c = 0;
    for (auto const &x : elements) {
      bool zero = true;
      for (auto v : x)
        zero = zero && (k * v) % q == 0;
      c += zero ? 1 : 0;
    }
    out.push_back(c);
  }
  return out;
}

/// The same profile predicted from invariant factors: prod gcd(k, f_i).
inline std::vector<std::size_t> torsion_profile(std::vector<long long> const &factors,
                                                long long q)
{
  std::vector<std::size_t> out;
  for (long long k = 1; k <= q; ++k) {
    std::size_t c = 1;
    for (auto f : factors)
      c *= static_cast<std::size_t>(std::gcd(k, f));
    out.push_back(c);
  }
  return out;
}

inline Images random_images(std::size_t n, std::mt19937_64 &rng)
{
  Images p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::uint64_t brute_partitions(std::size_t d, std::size_t max_part)
{
  if (d == 0)
    return 1;
  std::uint64_t c = 0;
  for (std::size_t k = 1; k <= std::min(d, max_part); ++k)
    c += brute_partitions(d - k, k);
  return c;
}

} // namespace oracle

#endif // BRAIDPERM_TESTS_ORACLES_HPP
