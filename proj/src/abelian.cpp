#include "braidperm/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace braidperm
{

namespace
{

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

IntVector unit(std::size_t n, std::size_t i, long long scale = 1)
{
  IntVector v(n, 0);
  v[i] = scale;
  return v;
}

IntVector add(IntVector a, IntVector const &b, long long factor = 1)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += factor * b[i];
  return a;
}

} // namespace

ExponentVector exponent_vector(Permutation const &g, Permutation const &tau, std::size_t d,
                               std::size_t n)
{
  if (g.largest_moved_point() > n * d)
    throw NotInTorus("element moves points beyond [1, nd]");
  auto const q = static_cast<long long>(tau.order());
  std::vector<Permutation> powers;
  for (long long r = 0; r < q; ++r)
    powers.push_back(tau.pow(r));

  ExponentVector result;
  result.q = q;
  Permutation const full = g.extended(n * d);
  for (std::size_t block = 0; block < n; ++block) {
    auto const first = static_cast<Point>(block * d + 1);
    auto const last = static_cast<Point>(block * d + d);
    if (!full.preserves(first, last))
      throw NotInTorus("element does not preserve the d-blocks");
    Permutation const piece = full.block(block * d, d);
    auto const it = std::find(powers.begin(), powers.end(), piece);
    if (it == powers.end())
      throw NotInTorus("block " + std::to_string(block + 1) + " is not a power of tau");
    result.entries.push_back(static_cast<long long>(it - powers.begin()));
  }
  return result;
}

Permutation realize(ExponentVector const &r, Permutation const &tau, std::size_t d)
{
  std::size_t const n = r.entries.size();
  Permutation result = Permutation::identity(n * d);
  for (std::size_t block = 0; block < n; ++block)
    result = result * omega_shift(tau.pow(r.entries[block]).extended(d), block * d);
  return result.extended(n * d);
}

LatticeBasis lattice_basis(std::size_t n)
{
  LatticeBasis b;
  b.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    b.e.push_back(unit(n, i));
    b.h.push_back(unit(n, i, 2));
  }
  for (std::size_t i = 0; i < n; ++i)
    b.f.push_back(i + 1 < n ? add(b.e[i], b.e[i + 1]) : b.e[i]);
  for (std::size_t i = 0; i + 2 < n; ++i)
    b.g.push_back(add(b.e[i], b.e[i + 2]));
  return b;
}

bool LatticeBasis::identities_hold() const
{
  for (std::size_t r = 0; r + 2 < n; ++r) {
    if (g[r] != add(add(f[r], f[r + 1]), h[r + 1], -1))
      return false;
  }
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (add(h[r], h[r + 1]) != add(IntVector(n, 0), f[r], 2))
      return false;
  }
  return true;
}

long long LatticeBasis::h_basis_determinant() const
{
  IntMatrix m(f.begin(), f.begin() + static_cast<long>(n - 1));
  m.push_back(h[n - 1]);
  return integer_determinant(m);
}

long long integer_determinant(IntMatrix a)
{
  // Bareiss fraction-free elimination.
  std::size_t const n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntVector smith_diagonal(IntMatrix a)
{
  std::size_t const rows = a.size();
  std::size_t const cols = rows ? a[0].size() : 0;
  IntVector diagonal;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto &row : a)
      std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows)
        break;
      std::swap(a[t], a[pr]);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long const k = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= k * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long const k = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= k * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean)
        continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c)
              a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides)
        break;
    }
    if (a[t][t] == 0)
      break;
    diagonal.push_back(std::llabs(a[t][t]));
  }
  return diagonal;
}

BigInt AbelianStructure::order() const
{
  BigInt result = 1;
  for (long long f : factors)
    result *= f;
  return result;
}

AbelianStructure subgroup_structure(std::vector<IntVector> const &generators, long long q,
                                    std::size_t n)
{
  IntMatrix m;
  for (auto const &g : generators) {
    IntVector row(n);
    for (std::size_t i = 0; i < n; ++i)
      row[i] = mod(g[i], q);
    m.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    m.push_back(unit(n, i, q));

  AbelianStructure result;
  for (long long dv : smith_diagonal(std::move(m))) {
    if (q / dv > 1)
      result.factors.push_back(q / dv);
  }
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

AbelianStructure an_structure(std::size_t n, long long q)
{
  auto const basis = lattice_basis(n);
  std::vector<IntVector> gens(basis.f.begin(), basis.f.begin() + static_cast<long>(n - 1));
  gens.insert(gens.end(), basis.g.begin(), basis.g.end());
  return subgroup_structure(gens, q, n);
}

long long half_order(long long q) { return q / std::gcd(q, 2LL); }

AbelianStructure expected_an_structure(std::size_t n, long long q)
{
  AbelianStructure result;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (q > 1)
      result.factors.push_back(q);
  }
  if (half_order(q) > 1)
    result.factors.push_back(half_order(q));
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

Permutation mu_map(IntVector const &lambda, Permutation const &tau, std::size_t d,
                   std::size_t n)
{
  if (lambda.size() != n || n < 2)
    throw std::invalid_argument("mu_map: lambda must have n entries");
  ExponentVector r;
  r.q = static_cast<long long>(tau.order());
  r.entries.resize(n);
  r.entries[0] = lambda[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    r.entries[i] = lambda[i - 1] + lambda[i];
  r.entries[n - 1] = lambda[n - 2] + 2 * lambda[n - 1];
  for (auto &x : r.entries)
    x = mod(x, r.q);
  return realize(r, tau, d);
}

IntVector mu_coordinates(IntVector const &exponents, long long q)
{
  std::size_t const n = exponents.size();
  IntVector lambda(n, 0);
  lambda[0] = mod(exponents[0], q);
  for (std::size_t i = 1; i + 1 < n; ++i)
    lambda[i] = mod(exponents[i] - lambda[i - 1], q);
  long long const t = mod(exponents[n - 1] - lambda[n - 2], q);
  long long const q2 = half_order(q);
  if (q % 2 == 1) {
    // 2 is invertible mod q; (q + 1) / 2 is its inverse.
    lambda[n - 1] = mod(t * ((q + 1) / 2), q);
  } else {
    if (t % 2 != 0)
      throw NotInTorus("exponent vector has odd coordinate sum");
    lambda[n - 1] = mod(t / 2, q2);
  }
  return lambda;
}

ModuleMatrix::ModuleMatrix(std::size_t n, long long q, std::vector<IntVector> columns)
    : n_(n), q_(q), q2_(half_order(q)), columns_(std::move(columns))
{
  if (columns_.size() != n_)
    throw std::invalid_argument("module matrix needs n columns");
  for (auto &c : columns_) {
    if (c.size() != n_)
      throw std::invalid_argument("module matrix column has wrong length");
    c = reduce(c);
  }
  IntVector last = columns_[n_ - 1];
  for (auto &x : last)
    x *= q2_;
  if (reduce(last) != IntVector(n_, 0))
    throw std::invalid_argument("image of h_n must have order dividing q2");
}

ModuleMatrix ModuleMatrix::identity(std::size_t n, long long q)
{
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i)
    cols.push_back(unit(n, i));
  return ModuleMatrix(n, q, std::move(cols));
}

IntVector ModuleMatrix::reduce(IntVector v) const
{
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    v[i] = mod(v[i], q_);
  v.back() = mod(v.back(), q2_);
  return v;
}

IntVector ModuleMatrix::apply(IntVector const &lambda) const
{
  IntVector y(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    y = add(y, columns_[j], lambda[j]);
  return reduce(y);
}

ModuleMatrix ModuleMatrix::operator*(ModuleMatrix const &rhs) const
{
  std::vector<IntVector> cols;
  for (auto const &c : rhs.columns_)
    cols.push_back(apply(c));
  return ModuleMatrix(n_, q_, std::move(cols));
}

IntVector ModuleMatrix::row_major() const
{
  IntVector result;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c)
      result.push_back(at(r, c));
  }
  return result;
}

std::vector<ModuleMatrix> monodromy_matrices(BraidImage const &image)
{
  auto const q = static_cast<long long>(image.q);
  std::vector<ModuleMatrix> result;
  for (auto const &sigma_s : image.generators) {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < image.n; ++j) {
      Permutation const basis_element = mu_map(unit(image.n, j), image.tau, image.d, image.n);
      Permutation const conj = conjugate(sigma_s, basis_element);
      try {
        auto const r = exponent_vector(conj, image.tau, image.d, image.n);
        cols.push_back(mu_coordinates(r.entries, q));
      } catch (NotInTorus const &e) {
        throw std::logic_error(std::string("conjugate escapes A_n(sigma): ") + e.what());
      }
    }
    result.emplace_back(image.n, q, std::move(cols));
  }
  return result;
}

std::vector<ModuleMatrix> monodromy_formula_matrices(std::size_t n, long long q)
{
  auto const b = lattice_basis(n);
  std::vector<ModuleMatrix> result;
  for (std::size_t s = 1; s < n; ++s) {
    std::vector<IntVector> cols;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t const gap = r > s ? r - s : s - r;
      IntVector const &image = gap == 1 ? b.g[std::min(r, s) - 1] : b.f[r - 1];
      cols.push_back(mu_coordinates(image, q));
    }
    cols.push_back(mu_coordinates(s == n - 1 ? b.h[n - 2] : b.h[n - 1], q));
    result.emplace_back(n, q, std::move(cols));
  }
  return result;
}

std::vector<IntVector> parameter_box(std::size_t n, long long q)
{
  std::vector<IntVector> result;
  IntVector current(n, 0);
  long long const q2 = half_order(q);
  for (;;) {
    result.push_back(current);
    std::size_t i = n;
    while (i > 0) {
      --i;
      long long const bound = i + 1 == n ? q2 : q;
      if (++current[i] < bound)
        break;
      current[i] = 0;
      if (i == 0)
        return result;
    }
  }
}

bool monodromy_acts_on_all_elements(BraidImage const &image,
                                    std::vector<ModuleMatrix> const &matrices,
                                    std::size_t cap)
{
  auto const q = static_cast<long long>(image.q);
  BigInt box = 1;
  for (std::size_t i = 0; i + 1 < image.n; ++i)
    box *= q;
  box *= half_order(q);
  if (box > cap)
    return false;
  for (auto const &lambda : parameter_box(image.n, q)) {
    Permutation const element = mu_map(lambda, image.tau, image.d, image.n);
    for (std::size_t s = 0; s < matrices.size(); ++s) {
      Permutation const expected =
          mu_map(matrices[s].apply(lambda), image.tau, image.d, image.n);
      if (conjugate(image.generators[s], element) != expected)
        return false;
    }
  }
  return true;
}

MonodromyKernel monodromy_kernel(std::vector<ModuleMatrix> const &matrices)
{
  if (matrices.empty())
    throw std::invalid_argument("no monodromy matrices");
  std::size_t const n = matrices.size() + 1;
  if (n > 8)
    throw std::invalid_argument("monodromy kernel enumeration needs n <= 8");
  std::size_t const dim = matrices[0].n();
  long long const q = matrices[0].q();
  ModuleMatrix const id = ModuleMatrix::identity(dim, q);

  MonodromyKernel result;
  result.relations = true;
  for (std::size_t r = 0; r < matrices.size(); ++r) {
    result.relations = result.relations && (matrices[r] * matrices[r]).is_identity();
    for (std::size_t s = r + 1; s < matrices.size(); ++s) {
      auto const &a = matrices[r];
      auto const &b = matrices[s];
      if (s == r + 1)
        result.relations = result.relations && a * b * a == b * a * b;
      else
        result.relations = result.relations && a * b == b * a;
    }
  }

  // pi = t_{w_1} t_{w_2} ... from bubble sort; M(pi) is the matching product.
  std::map<std::vector<std::size_t>, ModuleMatrix> image_of;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  do {
    std::vector<std::size_t> rest = pi;
    std::vector<std::size_t> word;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (rest[i] > rest[i + 1]) {
          std::swap(rest[i], rest[i + 1]);
          word.push_back(i);
          moved = true;
          break;
        }
      }
    }
    ModuleMatrix m = id;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      m = m * matrices[*it];
    image_of.emplace(pi, m);
  } while (std::next_permutation(pi.begin(), pi.end()));

  result.group_size = image_of.size();
  result.homomorphism = true;
  for (auto const &[perm, m] : image_of) {
    if (m.is_identity())
      ++result.kernel_size;
    for (std::size_t s = 0; s + 1 < n; ++s) {
      std::vector<std::size_t> moved = perm;
      std::swap(moved[s], moved[s + 1]);
      result.homomorphism = result.homomorphism && image_of.at(moved) == m * matrices[s];
    }
  }
  return result;
}

MonodromyKernel monodromy_kernel(BraidImage const &image)
{
  return monodromy_kernel(monodromy_matrices(image));
}

} // namespace braidperm
