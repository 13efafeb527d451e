#include "braidperm/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace braidperm
{

namespace
{

double ms_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void sort_unique(std::vector<Permutation> &v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::size_t enumeration_cap_from_env()
{
  if (char const *env = std::getenv("BRAIDPERM_CAP")) {
    char *end = nullptr;
    unsigned long long const value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<std::size_t>(value);
  }
  return default_enumeration_cap;
}

std::vector<Permutation> all_permutations(std::size_t d)
{
  std::vector<Point> images(d);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

EnumerationResult enumerate_M(PermutationGroup const &w, Permutation const &tau,
                              std::size_t cap)
{
  auto const start = std::chrono::steady_clock::now();
  std::size_t const d = w.degree();
  StabilizerChain const chain(w);
  if (!chain.contains(tau))
    throw std::invalid_argument("tau is not an element of W");
  if (chain.order() * chain.order() > cap)
    throw CapExceeded("|W|^2 exceeds the enumeration cap");

  auto const elements = chain.elements(cap);
  Permutation const th = theta(1, d, 2);
  Permutation const target = (tau * omega_shift(tau.extended(d), d)).extended(2 * d);

  EnumerationResult result;
  result.d = d;
  result.tau = tau.extended(d);
  for (auto const &w1 : elements) {
    for (auto const &w2 : elements) {
      Permutation const sigma = th * w1 * omega_shift(w2, d);
      if (sigma * sigma == target)
        result.elements.push_back(sigma.extended(2 * d));
    }
  }
  sort_unique(result.elements);
  result.elapsed_ms = ms_since(start);
  return result;
}

std::vector<ShuffleSpec> all_specs(std::size_t d, Permutation const &tau)
{
  CycleMap const id = CycleMap::identity(tau, d);
  auto const &cycles = id.cycles();
  std::size_t const count = cycles.size();

  // Length-preserving bijections: permute indices independently within
  // each length class.
  std::map<std::size_t, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < count; ++i)
    by_length[cycles[i].length()].push_back(i);

  std::vector<std::vector<std::size_t>> maps{std::vector<std::size_t>(count)};
  for (auto const &[length, members] : by_length) {
    std::vector<std::vector<std::size_t>> next;
    std::vector<std::size_t> perm = members;
    do {
      for (auto m : maps) {
        for (std::size_t i = 0; i < members.size(); ++i)
          m[members[i]] = perm[i];
        next.push_back(std::move(m));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    maps = std::move(next);
  }

  std::vector<ShuffleSpec> result;
  for (auto const &image : maps) {
    CycleMap const u(id.tau(), d, image);
    std::vector<InitialChoice> choices(count);
    auto emit = [&](auto &&self, std::size_t i) -> void {
      if (i == count) {
        result.emplace_back(u, choices);
        return;
      }
      for (Point i1 : cycles[i].points()) {
        for (Point j1 : cycles[u(i)].points()) {
          choices[i] = {i1, j1};
          self(self, i + 1);
        }
      }
    };
    emit(emit, 0);
  }
  return result;
}

EnumerationResult enumerate_N(std::size_t d, Permutation const &tau, std::size_t max_d)
{
  if (d > max_d)
    throw CapExceeded("d exceeds the construction enumeration cap");
  auto const start = std::chrono::steady_clock::now();
  EnumerationResult result;
  result.d = d;
  result.tau = tau.extended(d);
  for (auto const &spec : all_specs(d, tau))
    result.elements.push_back(build_sigma(spec));
  sort_unique(result.elements);
  result.elapsed_ms = ms_since(start);
  return result;
}

std::uint64_t count_commuting_pairs(PermutationGroup const &w, std::size_t cap)
{
  StabilizerChain const chain(w);
  if (chain.order() * chain.order() > cap)
    throw CapExceeded("|W|^2 exceeds the enumeration cap");
  auto const elements = chain.elements(cap);
  std::uint64_t count = 0;
  for (auto const &a : elements) {
    for (auto const &b : elements)
      count += a * b == b * a ? 1 : 0;
  }
  return count;
}

std::uint64_t conjugacy_class_count(PermutationGroup const &w, std::size_t cap)
{
  StabilizerChain const chain(w);
  auto const elements = chain.elements(cap);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::uint64_t classes = 0;
  for (auto const &x : elements) {
    if (seen.contains(x))
      continue;
    ++classes;
    std::vector<Permutation> frontier{x};
    seen.insert(x);
    while (!frontier.empty()) {
      Permutation const y = frontier.back();
      frontier.pop_back();
      for (auto const &g : w.generators()) {
        Permutation const z = conjugate(g, y);
        if (seen.insert(z).second)
          frontier.push_back(z);
      }
    }
  }
  return classes;
}

std::vector<CountCheck> verify_counts(std::size_t d, std::size_t cap)
{
  std::vector<CountCheck> result;
  auto const sd = symmetric_group(d);
  std::uint64_t total_m = 0;
  for (auto const &tau : all_permutations(d)) {
    auto const m = enumerate_M(sd, tau, cap);
    auto const n = enumerate_N(d, tau);
    total_m += m.count();
    std::string const label = print_cycles(tau);

    CountCheck z_check{"construction-count", d, label, n.count(), z_of(cycle_type(tau, d)),
                       false};
    z_check.pass = z_check.computed == z_check.expected;
    result.push_back(z_check);

    CountCheck sets{"construction-equals-definition", d, label, n.count(), m.count(), false};
    sets.pass = n.elements == m.elements;
    result.push_back(sets);
  }
  CountCheck total{"coset-count", d, "", total_m, partition_count(d) * factorial(d), false};
  total.pass = total.computed == total.expected;
  result.insert(result.begin(), total);
  return result;
}

} // namespace braidperm
