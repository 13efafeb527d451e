#include "doctest.h"

#include <random>

#include "braidperm/abelian.hpp"
#include "braidperm/enumerate.hpp"
#include "oracles.hpp"

using namespace braidperm;

namespace
{

BraidImage image_of(char const *sigma, std::size_t d, std::size_t n)
{
  return braid_image(parse_cycles(sigma), d, n);
}

long long leibniz(IntMatrix const &m)
{
  std::size_t const n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= m[i][p[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j)
        inversions += p[i] > p[j] ? 1 : 0;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::vector<BraidImage> grid_images(std::size_t d, std::size_t n)
{
  std::set<Permutation> sigmas;
  for (auto const &tau : all_permutations(d)) {
    for (auto const &s : enumerate_N(d, tau).elements)
      sigmas.insert(s);
  }
  std::vector<BraidImage> out;
  for (auto const &s : sigmas)
    out.push_back(braid_image(s, d, n));
  return out;
}

} // namespace

TEST_CASE("exponent vectors")
{
  auto const tau = parse_cycles("(1 2)");
  CHECK(exponent_vector(tau * omega_shift(tau, 2), tau, 2, 3).entries == IntVector{1, 1, 0});
  CHECK(exponent_vector(Permutation::identity(6), tau, 2, 3).entries == IntVector{0, 0, 0});
  auto const img = image_of("(1 3 2 4)", 2, 3);
  Permutation const g =
      conjugate(img.generators[0], img.generators[1] * img.generators[1]);
  CHECK(exponent_vector(g, tau, 2, 3).entries == IntVector{1, 0, 1});
  CHECK_THROWS_AS(exponent_vector(parse_cycles("(1 3)"), tau, 2, 3), NotInTorus);

  auto const t3 = parse_cycles("(1 2 3)");
  ExponentVector const r{{2, 0, 1, 1}, 3};
  CHECK(exponent_vector(realize(r, t3, 3), t3, 3, 4) == r);
}

TEST_CASE("lattice bases")
{
  for (std::size_t n = 3; n <= 7; ++n) {
    auto const b = lattice_basis(n);
    CHECK(b.identities_hold());
    CHECK((b.h_basis_determinant() == 2 || b.h_basis_determinant() == -2));
  }
}

TEST_CASE("determinants and Smith normal form")
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 1 + rng() % 4;
    IntMatrix m(n, IntVector(n));
    for (auto &row : m) {
      for (auto &x : row)
        x = static_cast<long long>(rng() % 11) - 5;
    }
    long long const det = leibniz(m);
    CHECK(integer_determinant(m) == det);
    auto const diag = smith_diagonal(m);
    long long product = det == 0 ? 0 : 1;
    if (det != 0) {
      CHECK(diag.size() == n);
      for (auto x : diag)
        product *= x;
    }
    CHECK(product == (det < 0 ? -det : det));
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      CHECK(diag[i + 1] % diag[i] == 0);
  }
}

TEST_CASE("subgroup structure against brute-force torsion counts")
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    long long const q = 2 + static_cast<long long>(rng() % 7);
    std::size_t const n = 1 + rng() % 3;
    std::size_t const k = 1 + rng() % 3;
    std::vector<IntVector> gens(k, IntVector(n));
    for (auto &g : gens) {
      for (auto &x : g)
        x = static_cast<long long>(rng() % q);
    }
    auto const structure = subgroup_structure(gens, q, n);
    auto const elements = oracle::span_mod(gens, q, n);
    CHECK(structure.order() == BigInt(elements.size()));
    CHECK(oracle::torsion_profile(structure.factors, q) == oracle::torsion_profile(elements, q));
    for (std::size_t i = 0; i + 1 < structure.factors.size(); ++i)
      CHECK(structure.factors[i + 1] % structure.factors[i] == 0);
  }
}

TEST_CASE("structure of A_n(sigma)")
{
  CHECK(an_structure(3, 2).factors == IntVector{2, 2});
  CHECK(an_structure(3, 3).factors == IntVector{3, 3, 3});
  CHECK(an_structure(3, 1).factors.empty());
  for (std::size_t n = 3; n <= 5; ++n) {
    for (long long q = 1; q <= 8; ++q) {
      auto const computed = an_structure(n, q);
      CHECK(computed == expected_an_structure(n, q));
      // Brute force: images of f_1..f_{n-1}, g_1..g_{n-2} in (Z/q)^n.
      if (std::pow(q, n) > 5000)
        continue;
      auto const b = lattice_basis(n);
      std::vector<IntVector> gens(b.f.begin(), b.f.end() - 1);
      gens.insert(gens.end(), b.g.begin(), b.g.end());
      auto const elements = oracle::span_mod(gens, q, n);
      CHECK(oracle::torsion_profile(computed.factors, q) == oracle::torsion_profile(elements, q));
    }
  }
}

TEST_CASE("mu is a bijection onto A_n(sigma)")
{
  auto const img = image_of("(1 3 2 4)", 2, 3);
  CHECK(mu_map({1, 0, 0}, img.tau, 2, 3) == img.generators[0] * img.generators[0]);
  CHECK(mu_map({0, 0, 0}, img.tau, 2, 3).is_identity());
  std::set<Permutation> images;
  for (auto const &lambda : parameter_box(3, 2))
    images.insert(mu_map(lambda, img.tau, 2, 3));
  CHECK(images.size() == 4);

  for (long long q = 1; q <= 6; ++q) {
    for (std::size_t n = 3; n <= 4; ++n) {
      for (auto const &lambda : parameter_box(n, q)) {
        // Exponent vector r with r_1 = l_1, r_i = l_{i-1} + l_i, r_n = l_{n-1} + 2 l_n.
        IntVector r(n);
        r[0] = lambda[0];
        for (std::size_t i = 1; i + 1 < n; ++i)
          r[i] = lambda[i - 1] + lambda[i];
        r[n - 1] = lambda[n - 2] + 2 * lambda[n - 1];
        CHECK(mu_coordinates(r, q) == lambda);
      }
    }
  }
  CHECK_THROWS_AS(mu_coordinates({1, 0, 0}, 2), NotInTorus);
}

TEST_CASE("monodromy")
{
  auto const img = image_of("(1 3 2 4)", 2, 3);
  auto const matrices = monodromy_matrices(img);
  CHECK(matrices == monodromy_formula_matrices(3, 2));
  CHECK(monodromy_kernel(matrices).kernel_size == 1);
  CHECK(monodromy_kernel(monodromy_matrices(image_of("(1 3 2 4)", 2, 4))).kernel_size == 1);
  auto const degenerate = monodromy_kernel(image_of("(1 4)(2 3)", 2, 3));
  CHECK(degenerate.kernel_size == 6);

  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 3; n <= 4; ++n) {
      for (auto const &b : grid_images(d, n)) {
        auto const ms = monodromy_matrices(b);
        CHECK(ms == monodromy_formula_matrices(n, static_cast<long long>(b.q)));
        for (auto const &m : ms)
          CHECK((m * m).is_identity());
        auto const k = monodromy_kernel(ms);
        CHECK(k.homomorphism);
        CHECK(k.relations);
        CHECK(k.group_size == factorial(n));
        if (b.q >= 2)
          CHECK(k.kernel_size == 1);
        CHECK(monodromy_acts_on_all_elements(b, ms));

        // Conjugation by sigma_s swaps blocks s and s+1 of each exponent vector.
        auto const chain_elements = StabilizerChain(an_subgroup(b)).elements();
        for (std::size_t s = 1; s < n; ++s) {
          for (auto const &x : chain_elements) {
            auto r = exponent_vector(x, b.tau, d, n).entries;
            std::swap(r[s - 1], r[s]);
            CHECK(exponent_vector(conjugate(b.generators[s - 1], x), b.tau, d, n).entries == r);
          }
        }
      }
    }
  }
}
