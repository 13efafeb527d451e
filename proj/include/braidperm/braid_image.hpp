#ifndef BRAIDPERM_BRAID_IMAGE_HPP
#define BRAIDPERM_BRAID_IMAGE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "braidperm/group.hpp"
#include "braidperm/permutation.hpp"
#include "braidperm/shuffle.hpp"

namespace braidperm
{

/**
 * The group B_n(sigma) generated by sigma_s = omega^{(s-1)d}(sigma),
 * s = 1..n-1, inside S_d wr S_n on [1, nd].
 */
struct BraidImage
{
  Permutation sigma;
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<Permutation> generators;
  Permutation tau;     ///< sigma^2 == tau * omega^d(tau)
  std::size_t q = 1;   ///< order of tau
  std::size_t q2 = 1;  ///< q / gcd(q, 2)

  std::size_t degree() const { return n * d; }
  PermutationGroup group() const;

  /// omega^{(block-1)d}(p) on [1, nd].
  Permutation in_block(Permutation const &p, std::size_t block) const;
};

/// Throws std::invalid_argument unless sigma lies in theta (S_d)^(2) and
/// (sigma, omega^d(sigma)) is braid-like; requires d >= 1 and n >= 3.
BraidImage braid_image(Permutation const &sigma, std::size_t d, std::size_t n);

/// Far commutation and the braid relation on adjacent generators.
bool satisfies_braid_relations(std::vector<Permutation> const &generators);

/// sigma_s^2 and the conjugates omega^{(r-1)d}(tau) omega^{(r+1)d}(tau).
/// Throws std::logic_error if a generator leaves <tau>^(n) or two fail to
/// commute.
PermutationGroup an_subgroup(BraidImage const &image);

struct ExtensionCheck
{
  BigInt b_order;
  BigInt a_order;
  BigInt expected_a_order;      ///< q^{n-1} q2
  BigInt expected_b_order;      ///< n! q^{n-1} q2
  bool a_abelian = false;
  bool a_normal = false;
  bool quotient_relations = false; ///< sigma_s^2 in A, braid relations hold
  bool base_intersection_is_a = false; ///< B cap (S_d)^(n) == A, by enumeration
  bool torus_intersection_is_a = false; ///< B cap <tau>^(n) == A, by enumeration
  bool torus_checked = false;   ///< skipped when q^n exceeds the cap
  bool pass = false;
};

/// Orders, normality and the two intersection identities of A_n(sigma).
ExtensionCheck verify_extension(BraidImage const &image, std::size_t cap = 100'000);

struct SplitComplement
{
  bool attempted = false; ///< false for even q
  long long k = 0;
  long long l = 0;
  std::optional<PermutationGroup> complement;
  BigInt order;
  bool involutions = false;
  bool inside_b = false;
  bool trivial_intersection = false;
  bool pass = false;
};

/**
 * For odd q builds eta_s = omega^{(s-1)d}(sigma * a), a = tau^k omega^d(tau^l)
 * with k + l == -1 (mod q), and checks it is a complement of A_n(sigma).
 * Defaults to (k, l) = (0, q-1). Throws std::invalid_argument on a pair with
 * k + l != -1 (mod q) and std::logic_error if verification fails for odd q.
 */
SplitComplement split_complement(BraidImage const &image,
                                 std::optional<std::pair<long long, long long>> kl = {});

/// Exhaustive search over lifts sigma_s a_s, a_s in A_n(sigma), for any
/// complement of order n!. Exploratory; meant for tiny parameters.
struct ComplementSearch
{
  std::size_t lifts_tried = 0;
  bool found = false;
  std::vector<Permutation> generators;
  bool exhausted = false; ///< the whole lift space was searched
};

ComplementSearch search_any_complement(BraidImage const &image, std::size_t max_lifts = 20'000);

struct TransitivityClass
{
  std::vector<std::vector<Point>> orbits;
  std::vector<std::vector<Point>> y_sets;
  bool transitive = false;
  bool u_long_cycle = false;
  bool orbits_match = false;
  bool subdirect = false; ///< each restriction to Y_o equals B_n(sigma^(o))
  bool pass = false;
};

TransitivityClass transitivity_class(BraidImage const &image, ShuffleSpec const &spec);

struct ConjugationIdentities
{
  bool squares = false;        ///< sigma_s^2 == omega^{(s-1)d}(tau omega^d(tau))
  bool shifted_square = false; ///< c_{sigma_s}(omega^{sd}(tau^2)) == omega^{(s-1)d}(tau^2)
  bool adjacent = false;       ///< c_{sigma_{r+1}}(sigma_r^2) == c_{sigma_r}(sigma_{r+1}^2) == ...
  bool involutive = false;     ///< c_{sigma_s}^2 is the identity on A_n(sigma)
  std::size_t checks = 0;
  bool pass = false;
};

ConjugationIdentities conjugation_identities(BraidImage const &image);

/// Gap syntax: one generator per line inside Group( ... );
std::string gap_export(BraidImage const &image);

} // namespace braidperm

#endif // BRAIDPERM_BRAID_IMAGE_HPP
