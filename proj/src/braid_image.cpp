#include "braidperm/braid_image.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidperm/abelian.hpp"

namespace braidperm
{

PermutationGroup BraidImage::group() const { return PermutationGroup(degree(), generators); }

Permutation BraidImage::in_block(Permutation const &p, std::size_t block) const
{
  return omega_shift(p, (block - 1) * d).extended(degree());
}

BraidImage braid_image(Permutation const &sigma, std::size_t d, std::size_t n)
{
  if (d < 1 || n < 3)
    throw std::invalid_argument("braid image needs d >= 1 and n >= 3");
  if (!coset_factors(sigma, d))
    throw std::invalid_argument("sigma does not map [1,d] onto [d+1,2d]");
  Permutation const s = sigma.extended(2 * d);
  if (!is_braid_like(s, omega_shift(s, d)))
    throw std::invalid_argument("(sigma, omega^d(sigma)) is not braid-like");
  auto const tau = square_root_tau(s, d);
  if (!tau)
    throw std::logic_error("braid-like sigma without a square root tau");

  BraidImage image;
  image.sigma = s;
  image.d = d;
  image.n = n;
  image.tau = tau->extended(d);
  image.q = image.tau.order();
  image.q2 = image.q / std::gcd(image.q, std::size_t{2});
  for (std::size_t block = 1; block < n; ++block)
    image.generators.push_back(image.in_block(s, block));
  return image;
}

bool satisfies_braid_relations(std::vector<Permutation> const &generators)
{
  for (std::size_t r = 0; r < generators.size(); ++r) {
    for (std::size_t s = r + 1; s < generators.size(); ++s) {
      auto const &a = generators[r];
      auto const &b = generators[s];
      bool const ok = s == r + 1 ? a * b * a == b * a * b : a * b == b * a;
      if (!ok)
        return false;
    }
  }
  return true;
}

PermutationGroup an_subgroup(BraidImage const &image)
{
  std::vector<Permutation> gens;
  std::vector<std::string> labels;
  for (std::size_t s = 1; s < image.n; ++s) {
    auto const &g = image.generators[s - 1];
    gens.push_back(g * g);
    labels.push_back("sigma_" + std::to_string(s) + "^2");
  }
  for (std::size_t r = 1; r + 1 < image.n; ++r) {
    gens.push_back(image.in_block(image.tau, r) * image.in_block(image.tau, r + 2));
    labels.push_back("c_sigma_" + std::to_string(r) + "(sigma_" + std::to_string(r + 1) +
                     "^2)");
  }
  for (auto const &g : gens) {
    try {
      exponent_vector(g, image.tau, image.d, image.n);
    } catch (NotInTorus const &e) {
      throw std::logic_error(std::string("A_n generator outside <tau>^(n): ") + e.what());
    }
  }
  PermutationGroup group(image.degree(), std::move(gens), std::move(labels));
  if (!is_abelian(group))
    throw std::logic_error("A_n generators do not commute");
  return group;
}

ExtensionCheck verify_extension(BraidImage const &image, std::size_t cap)
{
  ExtensionCheck check;
  PermutationGroup const b = image.group();
  StabilizerChain const chain_b(b);
  PermutationGroup const a = an_subgroup(image);
  StabilizerChain const chain_a(a);

  check.b_order = chain_b.order();
  check.a_order = chain_a.order();
  BigInt qpow = 1;
  for (std::size_t i = 0; i + 1 < image.n; ++i)
    qpow *= image.q;
  check.expected_a_order = qpow * image.q2;
  check.expected_b_order = check.expected_a_order * factorial(image.n);

  check.a_abelian = is_abelian(a);
  check.a_normal = is_subgroup(a, chain_b) && is_normalized_by(chain_a, b, a);
  check.quotient_relations = satisfies_braid_relations(image.generators) &&
                             std::all_of(image.generators.begin(), image.generators.end(),
                                         [&](Permutation const &g) {
                                           return chain_a.contains(g * g);
                                         });

  if (check.b_order <= cap) {
    std::size_t in_base = 0;
    bool all_in_a = true;
    for (auto const &g : chain_b.elements(cap)) {
      bool preserves_blocks = true;
      for (std::size_t block = 0; block < image.n && preserves_blocks; ++block) {
        preserves_blocks = g.preserves(static_cast<Point>(block * image.d + 1),
                                       static_cast<Point>(block * image.d + image.d));
      }
      if (preserves_blocks) {
        ++in_base;
        all_in_a = all_in_a && chain_a.contains(g);
      }
    }
    check.base_intersection_is_a = all_in_a && BigInt(in_base) == check.a_order;
  }

  BigInt torus = 1;
  for (std::size_t i = 0; i < image.n; ++i)
    torus *= image.q;
  if (torus <= cap) {
    check.torus_checked = true;
    std::size_t in_b = 0;
    bool all_in_a = true;
    ExponentVector r;
    r.q = static_cast<long long>(image.q);
    r.entries.assign(image.n, 0);
    for (;;) {
      Permutation const g = realize(r, image.tau, image.d);
      if (chain_b.contains(g)) {
        ++in_b;
        all_in_a = all_in_a && chain_a.contains(g);
      }
      std::size_t i = 0;
      while (i < image.n && ++r.entries[i] == r.q)
        r.entries[i++] = 0;
      if (i == image.n)
        break;
    }
    check.torus_intersection_is_a = all_in_a && BigInt(in_b) == check.a_order;
  }

  check.pass = check.b_order == check.expected_b_order &&
               check.a_order == check.expected_a_order && check.a_abelian && check.a_normal &&
               check.quotient_relations && check.base_intersection_is_a &&
               (!check.torus_checked || check.torus_intersection_is_a) &&
               check.b_order <= cap;
  return check;
}

SplitComplement split_complement(BraidImage const &image,
                                 std::optional<std::pair<long long, long long>> kl)
{
  SplitComplement result;
  auto const q = static_cast<long long>(image.q);
  if (q % 2 == 0)
    return result;
  result.attempted = true;
  auto const [k, l] = kl.value_or(std::make_pair(0LL, q - 1));
  if (((k + l + 1) % q + q) % q != 0)
    throw std::invalid_argument("split complement needs k + l == -1 (mod q)");
  result.k = k;
  result.l = l;

  std::size_t const d = image.d;
  Permutation const a = (image.tau.pow(k) * omega_shift(image.tau.pow(l), d)).extended(2 * d);
  Permutation const eta = image.sigma * a;
  std::vector<Permutation> gens;
  for (std::size_t block = 1; block < image.n; ++block)
    gens.push_back(image.in_block(eta, block));

  result.involutions = satisfies_braid_relations(gens) &&
                       std::all_of(gens.begin(), gens.end(),
                                   [](Permutation const &g) { return (g * g).is_identity(); });
  PermutationGroup h(image.degree(), gens);
  StabilizerChain const chain_h(h);
  StabilizerChain const chain_b(image.group());
  StabilizerChain const chain_a(an_subgroup(image));
  result.order = chain_h.order();
  result.inside_b = is_subgroup(h, chain_b);
  result.trivial_intersection = true;
  for (auto const &g : chain_h.elements(factorial(image.n) + 1)) {
    if (!g.is_identity() && chain_a.contains(g)) {
      result.trivial_intersection = false;
      break;
    }
  }
  result.pass = result.involutions && result.inside_b && result.trivial_intersection &&
                result.order == factorial(image.n);
  if (!result.pass)
    throw std::logic_error("no complement found for odd q");
  result.complement = std::move(h);
  return result;
}

ComplementSearch search_any_complement(BraidImage const &image, std::size_t max_lifts)
{
  ComplementSearch result;
  StabilizerChain const chain_a(an_subgroup(image));
  auto const kernel = chain_a.elements();
  std::size_t const slots = image.n - 1;
  BigInt total = 1;
  for (std::size_t i = 0; i < slots; ++i)
    total *= kernel.size();
  result.exhausted = total <= max_lifts;

  // Involutive lifts per generator; a complement maps isomorphically onto S_n.
  std::vector<std::vector<Permutation>> candidates(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    for (auto const &a : kernel) {
      Permutation const lift = image.generators[s] * a;
      if ((lift * lift).is_identity())
        candidates[s].push_back(lift);
    }
    if (candidates[s].empty())
      return result;
  }

  BigInt const target = factorial(image.n);
  std::vector<std::size_t> index(slots, 0);
  for (;;) {
    if (result.lifts_tried >= max_lifts)
      return result;
    ++result.lifts_tried;
    std::vector<Permutation> gens;
    for (std::size_t s = 0; s < slots; ++s)
      gens.push_back(candidates[s][index[s]]);
    if (satisfies_braid_relations(gens) &&
        group_order(PermutationGroup(image.degree(), gens)) == target) {
      result.found = true;
      result.generators = std::move(gens);
      return result;
    }
    std::size_t s = 0;
    while (s < slots && ++index[s] == candidates[s].size())
      index[s++] = 0;
    if (s == slots)
      break;
  }
  result.exhausted = true;
  return result;
}

TransitivityClass transitivity_class(BraidImage const &image, ShuffleSpec const &spec)
{
  TransitivityClass result;
  auto const components = restrict_components(image.sigma, spec);
  result.orbits = orbits_partition(image.group());
  result.transitive = result.orbits.size() == 1;
  result.u_long_cycle = spec.u.is_long_cycle();

  result.subdirect = true;
  for (auto const &c : components) {
    std::vector<Point> y;
    for (std::size_t block = 0; block < image.n; ++block) {
      for (Point x : c.support)
        y.push_back(static_cast<Point>(x + block * image.d));
    }
    std::sort(y.begin(), y.end());

    std::vector<bool> in_y(image.degree() + 1, false);
    for (Point x : y)
      in_y[x] = true;
    std::vector<Permutation> restricted, component_gens;
    for (std::size_t block = 1; block < image.n; ++block) {
      auto const &g = image.generators[block - 1];
      std::vector<Point> images(image.degree());
      for (Point x = 1; x <= image.degree(); ++x)
        images[x - 1] = in_y[x] ? g(x) : x;
      restricted.push_back(Permutation::from_images(images));
      component_gens.push_back(image.in_block(c.factor, block));
    }
    result.subdirect =
        result.subdirect && same_group(PermutationGroup(image.degree(), restricted),
                                       PermutationGroup(image.degree(), component_gens));
    result.y_sets.push_back(std::move(y));
  }
  std::sort(result.y_sets.begin(), result.y_sets.end());
  result.orbits_match = result.orbits == result.y_sets;
  result.pass = result.orbits_match && result.transitive == result.u_long_cycle &&
                result.subdirect;
  return result;
}

ConjugationIdentities conjugation_identities(BraidImage const &image)
{
  ConjugationIdentities result;
  result.squares = result.shifted_square = result.adjacent = result.involutive = true;
  auto const &gens = image.generators;
  Permutation const tau2 = image.tau * image.tau;
  for (std::size_t s = 1; s < image.n; ++s) {
    auto const &g = gens[s - 1];
    result.squares = result.squares &&
                     g * g == image.in_block(image.tau, s) * image.in_block(image.tau, s + 1);
    result.shifted_square = result.shifted_square &&
                            conjugate(g, image.in_block(tau2, s + 1)) ==
                                image.in_block(tau2, s);
    result.checks += 2;
  }
  for (std::size_t r = 1; r + 1 < image.n; ++r) {
    auto const &a = gens[r - 1];
    auto const &b = gens[r];
    Permutation const expected =
        image.in_block(image.tau, r) * image.in_block(image.tau, r + 2);
    result.adjacent = result.adjacent && conjugate(b, a * a) == expected &&
                      conjugate(a, b * b) == expected;
    ++result.checks;
  }
  auto const a_group = an_subgroup(image);
  for (auto const &x : a_group.generators()) {
    for (auto const &g : gens) {
      result.involutive = result.involutive && conjugate(g, conjugate(g, x)) == x;
      ++result.checks;
    }
  }
  result.pass = result.squares && result.shifted_square && result.adjacent && result.involutive;
  return result;
}

std::string gap_export(BraidImage const &image)
{
  std::ostringstream os;
  os << "# sigma = " << print_cycles_gap(image.sigma) << ", d = " << image.d
     << ", n = " << image.n << ", tau = " << print_cycles_gap(image.tau) << '\n';
  os << "Group(\n";
  for (std::size_t i = 0; i < image.generators.size(); ++i) {
    os << "  " << print_cycles_gap(image.generators[i])
       << (i + 1 < image.generators.size() ? "," : "") << '\n';
  }
  os << ");\n";
  return os.str();
}

} // namespace braidperm
