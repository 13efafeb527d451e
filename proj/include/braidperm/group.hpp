#ifndef BRAIDPERM_GROUP_HPP
#define BRAIDPERM_GROUP_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidperm/permutation.hpp"

namespace braidperm
{

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group on [1, degree] given by generators.
class PermutationGroup
{
public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<std::string> labels = {});

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::vector<std::string> const &labels() const { return labels_; }

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<std::string> labels_;
};

/// Closure of a point set under the generators.
std::set<Point> orbit(std::set<Point> const &points, PermutationGroup const &group);

/// Orbits on [1, degree], each sorted, ordered by least element.
std::vector<std::vector<Point>> orbits_partition(PermutationGroup const &group);

class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Each level keeps the full transversal: transversal(level, beta) maps the
 * base point to beta.
 */
class StabilizerChain
{
public:
  explicit StabilizerChain(PermutationGroup const &group);

  std::size_t degree() const { return degree_; }
  std::vector<Point> const &base() const { return base_; }
  std::vector<Permutation> strong_generators() const;

  /// Fundamental orbit of the base point at a level.
  std::vector<Point> const &fundamental_orbit(std::size_t level) const
  {
    return levels_[level].orbit;
  }
  Permutation const &transversal(std::size_t level, Point beta) const;

  BigInt order() const;
  bool contains(Permutation const &g) const;

  /// Residue of sifting g and the level where sifting stopped (the number
  /// of levels if it went through).
  std::pair<Permutation, std::size_t> strip(Permutation const &g,
                                            std::size_t first_level = 0) const;

  /// All elements, sorted; throws CapExceeded above the cap.
  std::vector<Permutation> elements(std::size_t cap = 10'000'000) const;

private:
  struct Level
  {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal; ///< indexed by point
  };

  void rebuild_orbit(Level &level) const;
  void run();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

BigInt group_order(PermutationGroup const &group);

/// True if every generator of sub lies in the chain.
bool is_subgroup(PermutationGroup const &sub, StabilizerChain const &chain);

bool same_group(PermutationGroup const &a, PermutationGroup const &b);

/// Generators commute pairwise.
bool is_abelian(PermutationGroup const &group);

/// Conjugates of the sub generators by the generators of the ambient group
/// stay in sub.
bool is_normalized_by(StabilizerChain const &sub, PermutationGroup const &ambient,
                      PermutationGroup const &sub_generators);

PermutationGroup symmetric_group(std::size_t d);
PermutationGroup cyclic_group(Permutation const &generator, std::size_t degree);
PermutationGroup trivial_group(std::size_t degree);

} // namespace braidperm

#endif // BRAIDPERM_GROUP_HPP
