#ifndef BRAIDPERM_ENUMERATE_HPP
#define BRAIDPERM_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "braidperm/group.hpp"
#include "braidperm/permutation.hpp"
#include "braidperm/shuffle.hpp"

namespace braidperm
{

inline constexpr std::size_t default_enumeration_cap = 10'000'000;

/// Default cap, overridden by the BRAIDPERM_CAP environment variable.
std::size_t enumeration_cap_from_env();

struct EnumerationResult
{
  std::size_t d = 0;
  Permutation tau;
  std::vector<Permutation> elements; ///< sorted, duplicate-free
  double elapsed_ms = 0.0;

  std::size_t count() const { return elements.size(); }
};

/// Every permutation of [1,d] in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t d);

/// M_{W,tau}: sigma = theta w1 omega^d(w2) with w1, w2 in W and
/// sigma^2 == tau omega^d(tau). Throws std::invalid_argument if tau is not in W
/// and CapExceeded if |W|^2 exceeds the cap.
EnumerationResult enumerate_M(PermutationGroup const &w, Permutation const &tau,
                              std::size_t cap = default_enumeration_cap);

/// Every valid shuffle spec for tau: all length-preserving u and all choices.
std::vector<ShuffleSpec> all_specs(std::size_t d, Permutation const &tau);

/// N_{d,tau} by construction, deduplicated. Throws CapExceeded when d > max_d.
EnumerationResult enumerate_N(std::size_t d, Permutation const &tau, std::size_t max_d = 6);

/// Ordered pairs of commuting elements, by a double loop.
std::uint64_t count_commuting_pairs(PermutationGroup const &w,
                                    std::size_t cap = default_enumeration_cap);

/// Number of conjugacy classes, by orbit closure under conjugation.
std::uint64_t conjugacy_class_count(PermutationGroup const &w,
                                    std::size_t cap = default_enumeration_cap);

struct CountCheck
{
  std::string check;
  std::size_t d = 0;
  std::string tau; ///< empty for whole-degree checks
  std::uint64_t computed = 0;
  std::uint64_t expected = 0;
  bool pass = false;
};

/// |M_d| == p(d) d!, |N_{d,tau}| == z, and N_{d,tau} == M_{d,tau} for every tau.
std::vector<CountCheck> verify_counts(std::size_t d, std::size_t cap = default_enumeration_cap);

} // namespace braidperm

#endif // BRAIDPERM_ENUMERATE_HPP
