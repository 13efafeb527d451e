#ifndef BRAIDPERM_SHUFFLE_HPP
#define BRAIDPERM_SHUFFLE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "braidperm/permutation.hpp"

namespace braidperm
{

class InvalidSpec : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A length-preserving permutation u of the cycle set C(tau), fixed points
 * included as 1-cycles. Cycles are indexed in order of their least element.
 */
class CycleMap
{
public:
  /// image[i] is the index of u(alpha_i); throws InvalidSpec unless u is a
  /// bijection preserving cycle lengths.
  CycleMap(Permutation tau, std::size_t d, std::vector<std::size_t> image);

  static CycleMap identity(Permutation tau, std::size_t d);

  /// Pairs (least element of alpha, least element of u(alpha)); unlisted
  /// cycles are fixed.
  static CycleMap from_least_elements(Permutation tau, std::size_t d,
                                      std::vector<std::pair<Point, Point>> const &pairs);

  Permutation const &tau() const { return tau_; }
  std::size_t d() const { return d_; }
  std::vector<Cycle> const &cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  std::size_t operator()(std::size_t index) const { return image_[index]; }
  std::vector<std::size_t> const &images() const { return image_; }

  /// Index of the cycle of tau containing x.
  std::size_t index_of(Point x) const;

  /// Cycles of u itself: o = (alpha, u(alpha), u^2(alpha), ...), each
  /// starting at its smallest index.
  std::vector<std::vector<std::size_t>> orbits() const;

  bool is_long_cycle() const { return orbits().size() == 1; }

  friend bool operator==(CycleMap const &, CycleMap const &) = default;

private:
  Permutation tau_;
  std::size_t d_;
  std::vector<Cycle> cycles_;
  std::vector<std::size_t> image_;
};

struct InitialChoice
{
  Point i1; ///< initial element of alpha
  Point j1; ///< initial element of u(alpha)

  friend bool operator==(InitialChoice const &, InitialChoice const &) = default;
};

/// Data of the shuffle construction: tau, u and one initial-element pair per
/// cycle of tau (parallel to u.cycles()).
struct ShuffleSpec
{
  CycleMap u;
  std::vector<InitialChoice> choices;

  ShuffleSpec(CycleMap u, std::vector<InitialChoice> choices);

  /// Every cycle starts at its least element.
  static ShuffleSpec with_least_choices(CycleMap u);

  std::size_t d() const { return u.d(); }
  Permutation const &tau() const { return u.tau(); }

  /// i1 in alpha and j1 in u(alpha) for every alpha; throws InvalidSpec.
  void validate() const;

  friend bool operator==(ShuffleSpec const &, ShuffleSpec const &) = default;
};

/// An ordered pair of commuting permutations of [1,d] with product tau.
struct CommutingPair
{
  Permutation first;
  Permutation second;
  Permutation product;

  CommutingPair(Permutation first, Permutation second);
};

/// The product over alpha of the 2m-cycles (i1, j1+d, i2, j2+d, ..., im, jm+d).
Permutation build_sigma(ShuffleSpec const &spec);

/// The pair (prod p_alpha, prod q_alpha) with p: i_k -> j_k and q: j_k -> i_{k+1}.
CommutingPair build_pair(ShuffleSpec const &spec);

/// theta * first * omega^d(second).
Permutation sigma_from_pair(Permutation const &first, Permutation const &second,
                            std::size_t d);

/// eta zeta != zeta eta and eta zeta eta == zeta eta zeta.
bool is_braid_like(Permutation const &eta, Permutation const &zeta);

/// Recovers a spec with build_pair(spec) == (first, second); u acts on the
/// cycles of tau by conjugation with first. Throws InvalidSpec if the inputs
/// do not commute.
ShuffleSpec decompose_commuting_pair(Permutation const &first, Permutation const &second,
                                     std::size_t d);

/// For sigma in the coset theta (S_d)^(2), the factors with
/// sigma = theta * first * omega^d(second).
std::optional<std::pair<Permutation, Permutation>> coset_factors(Permutation const &sigma,
                                                                 std::size_t d);

/// tau when sigma^2 == tau * omega^d(tau) with tau in S_d.
std::optional<Permutation> square_root_tau(Permutation const &sigma, std::size_t d);

struct Component
{
  std::vector<std::size_t> orbit; ///< indices into u.cycles(), in u-order
  std::vector<Point> support;     ///< X_o, sorted
  Permutation first;              ///< restriction of the first pair component
  Permutation second;             ///< restriction of the second pair component
  Permutation tau;                ///< product of the cycles alpha in o
  Permutation factor;             ///< theta_o * first * omega^d(second)
};

/**
 * One factor per cycle o of u, supported on X_o and X_o + d. Throws
 * InvalidSpec when sigma is not build_sigma(spec).
 *
 * theta_o is theta restricted to X_o and X_o + d.
 */
std::vector<Component> restrict_components(Permutation const &sigma, ShuffleSpec const &spec);

/// The shuffled 2m-cycles of the alphas in o, multiplied.
Permutation shuffled_cycles(ShuffleSpec const &spec, std::vector<std::size_t> const &orbit);

} // namespace braidperm

#endif // BRAIDPERM_SHUFFLE_HPP
