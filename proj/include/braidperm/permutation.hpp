#ifndef BRAIDPERM_PERMUTATION_HPP
#define BRAIDPERM_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidperm
{

/// Points are 1-based, as in cycle notation.
using Point = std::uint32_t;

class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A permutation of [1, degree].
 *
 * Permutations of different degree are compared as elements of the
 * finitary symmetric group: trailing fixed points are ignored by equality,
 * ordering and hashing, and the smaller operand of a product is padded.
 *
 * Products are functional: (p * q)(x) == p(q(x)).
 */
class Permutation
{
public:
  explicit Permutation(std::size_t degree = 0);

  /// Builds from the image sequence p(1), ..., p(N); throws unless bijective.
  static Permutation from_images(std::span<Point const> images);
  static Permutation from_images(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }

  /// Image of x; points beyond the degree are fixed.
  Point operator()(Point x) const
  {
    return x >= 1 && x <= images_.size() ? images_[x - 1] : x;
  }

  std::vector<Point> const &images() const { return images_; }

  Permutation inverse() const;
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs) { return *this = *this * rhs; }

  /// Integer power; negative exponents use the inverse.
  Permutation pow(long long exponent) const;

  Permutation extended(std::size_t degree) const;

  /// Drops trailing fixed points.
  Permutation trimmed() const;

  bool is_identity() const;

  /// Largest moved point, 0 for the identity.
  Point largest_moved_point() const;

  std::vector<Point> support() const;

  std::size_t order() const;

  bool commutes_with(Permutation const &other) const;

  /// True if the permutation maps the set [first, last] onto itself.
  bool preserves(Point first, Point last) const;

  /// Restriction to [offset+1, offset+width] shifted down to [1, width];
  /// requires that interval to be invariant.
  Permutation block(std::size_t offset, std::size_t width) const;

  friend bool operator==(Permutation const &lhs, Permutation const &rhs);
  friend bool operator<(Permutation const &lhs, Permutation const &rhs);

  std::size_t hash() const;

private:
  std::vector<Point> images_;
};

inline bool operator!=(Permutation const &lhs, Permutation const &rhs)
{
  return !(lhs == rhs);
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const { return p.hash(); }
};

/// c_zeta(sigma) = zeta * sigma * zeta^-1.
Permutation conjugate(Permutation const &zeta, Permutation const &sigma);

/// omega^k(sigma): fixes [1,k] and maps k+i to k+sigma(i).
Permutation omega_shift(Permutation const &sigma, std::size_t k);

/// The involution of S_{nd} swapping the d-blocks s and s+1 pointwise.
Permutation theta(std::size_t s, std::size_t d, std::size_t n);

/// A cycle; equality is invariant under rotation.
class Cycle
{
public:
  explicit Cycle(std::vector<Point> points);
  Cycle(std::initializer_list<Point> points) : Cycle(std::vector<Point>(points)) {}

  std::vector<Point> const &points() const { return points_; }
  std::size_t length() const { return points_.size(); }
  Point least() const;
  bool contains(Point x) const;

  /// Rotation starting at the given point.
  Cycle rotated_to(Point start) const;
  Cycle canonical() const { return rotated_to(least()); }

  Cycle shifted(std::size_t k) const;

  friend bool operator==(Cycle const &lhs, Cycle const &rhs);

private:
  std::vector<Point> points_;
};

struct CycleDecomposition
{
  std::size_t degree = 0;
  /// Cycles of length >= 2, canonical, sorted by least element.
  std::vector<Cycle> cycles;
  std::vector<Point> fixed_points;

  /// Every cycle including 1-cycles for the fixed points, sorted by least element.
  std::vector<Cycle> all_cycles() const;

  std::vector<Cycle> cycles_of_length(std::size_t m) const;
};

CycleDecomposition cycle_decomposition(Permutation const &sigma);

/// All cycles of sigma on [1, degree] including 1-cycles, by least element.
std::vector<Cycle> cycles_with_fixed_points(Permutation const &sigma,
                                            std::size_t degree);

/// Throws std::invalid_argument on overlapping supports. The degree is the
/// larger of the requested one and the largest point used.
Permutation from_cycles(std::span<Cycle const> cycles, std::size_t degree = 0);
Permutation from_cycles(std::initializer_list<Cycle> cycles, std::size_t degree = 0);

/// Multiplicities m -> c_m of a permutation of [1,d], or a partition of d.
struct CycleType
{
  std::size_t degree = 0;
  std::map<std::size_t, std::size_t> multiplicities;

  std::size_t count(std::size_t m) const;
  friend bool operator==(CycleType const &, CycleType const &) = default;
};

CycleType cycle_type(Permutation const &sigma, std::size_t degree);
CycleType cycle_type(Permutation const &sigma);

std::uint64_t factorial(std::size_t n);

/// Centralizer order z = prod m^{c_m} c_m!.
std::uint64_t z_of(CycleType const &lambda);

std::uint64_t partition_count(std::size_t d);

/// Every partition of d as a cycle type.
std::vector<CycleType> partitions(std::size_t d);

/// Accepts "()" or a product of cycles "(1 3 2)(4 5)"; commas may separate
/// points. Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

/// Canonical spaced form "(1 3 2 4)(5 6)", "()" for the identity.
std::string print_cycles(Permutation const &sigma);

/// GAP syntax "(1,3,2,4)(5,6)".
std::string print_cycles_gap(Permutation const &sigma);

std::ostream &operator<<(std::ostream &os, Permutation const &sigma);
std::ostream &operator<<(std::ostream &os, Cycle const &c);

} // namespace braidperm

template<>
struct std::hash<braidperm::Permutation>
{
  std::size_t operator()(braidperm::Permutation const &p) const { return p.hash(); }
};

#endif // BRAIDPERM_PERMUTATION_HPP
