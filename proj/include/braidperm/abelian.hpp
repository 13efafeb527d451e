#ifndef BRAIDPERM_ABELIAN_HPP
#define BRAIDPERM_ABELIAN_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braidperm/braid_image.hpp"
#include "braidperm/permutation.hpp"

namespace braidperm
{

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

/// (r_1, ..., r_n) standing for tau^{r_1} omega^d(tau^{r_2}) ... omega^{(n-1)d}(tau^{r_n}).
struct ExponentVector
{
  IntVector entries;
  long long q = 1;

  friend bool operator==(ExponentVector const &, ExponentVector const &) = default;
};

class NotInTorus : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Reads each d-block of g as a power of tau; throws NotInTorus.
ExponentVector exponent_vector(Permutation const &g, Permutation const &tau, std::size_t d,
                               std::size_t n);

Permutation realize(ExponentVector const &r, Permutation const &tau, std::size_t d);

/**
 * The vectors e_i, f_s = e_s + e_{s+1} (f_n = e_n), g_r = e_r + e_{r+2} and
 * h_i = 2 e_i of Z^n. The sublattice H_n has basis f_1..f_{n-1}, h_n.
 */
struct LatticeBasis
{
  std::size_t n = 0;
  std::vector<IntVector> e, f, g, h;

  /// g_r = f_r + f_{r+1} - h_{r+1} and h_r + h_{r+1} = 2 f_r.
  bool identities_hold() const;

  /// Determinant of the matrix with rows f_1..f_{n-1}, h_n.
  long long h_basis_determinant() const;
};

LatticeBasis lattice_basis(std::size_t n);

/// Nonzero diagonal of the Smith normal form, in divisibility order.
IntVector smith_diagonal(IntMatrix matrix);

long long integer_determinant(IntMatrix matrix);

/// Invariant factors with unit factors dropped, each dividing the next.
struct AbelianStructure
{
  IntVector factors;

  BigInt order() const;
  friend bool operator==(AbelianStructure const &, AbelianStructure const &) = default;
};

/// Structure of the subgroup of (Z/q)^n generated by the given vectors.
AbelianStructure subgroup_structure(std::vector<IntVector> const &generators, long long q,
                                    std::size_t n);

/// Subgroup generated by the images of f_1..f_{n-1}, g_1..g_{n-2}.
AbelianStructure an_structure(std::size_t n, long long q);

/// (Z/q)^{n-1} + Z/q2, normalized.
AbelianStructure expected_an_structure(std::size_t n, long long q);

long long half_order(long long q);

/// tau^{l_1} omega^d(tau^{l_1+l_2}) ... omega^{(n-1)d}(tau^{l_{n-1}+2 l_n}).
Permutation mu_map(IntVector const &lambda, Permutation const &tau, std::size_t d,
                   std::size_t n);

/// Coordinates (mod q, last mod q2) of an exponent vector in the basis
/// f_1..f_{n-1}, h_n. Throws NotInTorus if the vector is outside the image.
IntVector mu_coordinates(IntVector const &exponents, long long q);

/**
 * An endomorphism of (Z/q)^{n-1} + Z/q2 in the basis f_1..f_{n-1}, h_n.
 * Column j holds the coordinates of the image of the j-th basis vector.
 */
class ModuleMatrix
{
public:
  ModuleMatrix(std::size_t n, long long q, std::vector<IntVector> columns);

  static ModuleMatrix identity(std::size_t n, long long q);

  std::size_t n() const { return n_; }
  long long q() const { return q_; }
  long long q2() const { return q2_; }
  long long at(std::size_t row, std::size_t col) const { return columns_[col][row]; }

  IntVector apply(IntVector const &lambda) const;
  ModuleMatrix operator*(ModuleMatrix const &rhs) const;
  bool is_identity() const { return *this == identity(n_, q_); }

  /// Entries row by row.
  IntVector row_major() const;

  friend bool operator==(ModuleMatrix const &, ModuleMatrix const &) = default;

private:
  IntVector reduce(IntVector v) const;

  std::size_t n_;
  long long q_;
  long long q2_;
  std::vector<IntVector> columns_;
};

/// iota_s = c_{sigma_s} on A_n(sigma), computed by conjugating realizations.
std::vector<ModuleMatrix> monodromy_matrices(BraidImage const &image);

/// iota_s from the closed-form action on f_r and h_n.
std::vector<ModuleMatrix> monodromy_formula_matrices(std::size_t n, long long q);

/// Checks c_{sigma_s}(mu(lambda)) == mu(M_s lambda) on every lambda of the
/// parameter box; false if the box exceeds the cap.
bool monodromy_acts_on_all_elements(BraidImage const &image,
                                    std::vector<ModuleMatrix> const &matrices,
                                    std::size_t cap = 4096);

/// Every lambda in (Z/q)^{n-1} x (Z/q2), lexicographic.
std::vector<IntVector> parameter_box(std::size_t n, long long q);

struct MonodromyKernel
{
  std::size_t group_size = 0;  ///< n!
  std::size_t kernel_size = 0;
  bool homomorphism = false;   ///< M(pi theta_s) == M(pi) M_s for all pi, s
  bool relations = false;      ///< involutions, braid and far-commutation relations
};

/// Enumerates Sigma_n as words in theta_s; needs n <= 8.
MonodromyKernel monodromy_kernel(std::vector<ModuleMatrix> const &matrices);
MonodromyKernel monodromy_kernel(BraidImage const &image);

} // namespace braidperm

#endif // BRAIDPERM_ABELIAN_HPP
