#include "braidperm/shuffle.hpp"

#include <algorithm>
#include <string>

namespace braidperm
{

CycleMap::CycleMap(Permutation tau, std::size_t d, std::vector<std::size_t> image)
    : tau_(std::move(tau)), d_(d), image_(std::move(image))
{
  if (tau_.largest_moved_point() > d_)
    throw InvalidSpec("tau moves points beyond d");
  tau_ = tau_.extended(d_).trimmed().extended(d_);
  cycles_ = cycles_with_fixed_points(tau_, d_);
  if (image_.size() != cycles_.size())
    throw InvalidSpec("cycle map has wrong size");
  std::vector<bool> hit(cycles_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    std::size_t j = image_[i];
    if (j >= cycles_.size() || hit[j])
      throw InvalidSpec("cycle map is not a bijection");
    if (cycles_[i].length() != cycles_[j].length())
      throw InvalidSpec("cycle map does not preserve cycle lengths");
    hit[j] = true;
  }
}

CycleMap CycleMap::identity(Permutation tau, std::size_t d)
{
  std::size_t const count = cycles_with_fixed_points(tau.extended(d), d).size();
  std::vector<std::size_t> image(count);
  for (std::size_t i = 0; i < count; ++i)
    image[i] = i;
  return CycleMap(std::move(tau), d, std::move(image));
}

CycleMap CycleMap::from_least_elements(Permutation tau, std::size_t d,
                                       std::vector<std::pair<Point, Point>> const &pairs)
{
  CycleMap id = identity(std::move(tau), d);
  std::vector<std::size_t> image = id.image_;
  std::vector<bool> assigned(image.size(), false);
  auto least_index = [&](Point x) {
    std::size_t i = id.index_of(x);
    if (id.cycles_[i].least() != x)
      throw InvalidSpec("cycle map entry " + std::to_string(x) +
                        " is not the least element of its cycle");
    return i;
  };
  for (auto const &[from, to] : pairs) {
    std::size_t const i = least_index(from);
    if (assigned[i])
      throw InvalidSpec("cycle map lists a cycle twice");
    assigned[i] = true;
    image[i] = least_index(to);
  }
  return CycleMap(id.tau_, d, std::move(image));
}

std::size_t CycleMap::index_of(Point x) const
{
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i].contains(x))
      return i;
  }
  throw InvalidSpec("point " + std::to_string(x) + " is outside [1,d]");
}

std::vector<std::vector<std::size_t>> CycleMap::orbits() const
{
  std::vector<std::vector<std::size_t>> result;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    result.push_back(std::move(orbit));
  }
  return result;
}

ShuffleSpec::ShuffleSpec(CycleMap u_, std::vector<InitialChoice> choices_)
    : u(std::move(u_)), choices(std::move(choices_))
{
  validate();
}

ShuffleSpec ShuffleSpec::with_least_choices(CycleMap u)
{
  std::vector<InitialChoice> choices;
  for (std::size_t i = 0; i < u.size(); ++i)
    choices.push_back({u.cycles()[i].least(), u.cycles()[u(i)].least()});
  return ShuffleSpec(std::move(u), std::move(choices));
}

void ShuffleSpec::validate() const
{
  if (choices.size() != u.size())
    throw InvalidSpec("need exactly one initial-element choice per cycle of tau");
  for (std::size_t i = 0; i < u.size(); ++i) {
    Cycle const &alpha = u.cycles()[i];
    Cycle const &image = u.cycles()[u(i)];
    if (!alpha.contains(choices[i].i1))
      throw InvalidSpec("i1 = " + std::to_string(choices[i].i1) + " is not in the cycle " +
                        "with least element " + std::to_string(alpha.least()));
    if (!image.contains(choices[i].j1))
      throw InvalidSpec("j1 = " + std::to_string(choices[i].j1) + " is not in u(alpha) " +
                        "for the cycle with least element " + std::to_string(alpha.least()));
  }
}

CommutingPair::CommutingPair(Permutation first_, Permutation second_)
    : first(std::move(first_)), second(std::move(second_)), product(first * second)
{
  if (product != second * first)
    throw InvalidSpec("pair components do not commute");
}

namespace
{

/// (alpha, u(alpha)) written from the chosen initial elements.
std::pair<std::vector<Point>, std::vector<Point>> written_cycles(ShuffleSpec const &spec,
                                                                 std::size_t index)
{
  Cycle const &alpha = spec.u.cycles()[index];
  Cycle const &image = spec.u.cycles()[spec.u(index)];
  return {alpha.rotated_to(spec.choices[index].i1).points(),
          image.rotated_to(spec.choices[index].j1).points()};
}

Cycle shuffled_cycle(ShuffleSpec const &spec, std::size_t index)
{
  auto const [is, js] = written_cycles(spec, index);
  std::vector<Point> pts;
  for (std::size_t k = 0; k < is.size(); ++k) {
    pts.push_back(is[k]);
    pts.push_back(static_cast<Point>(js[k] + spec.d()));
  }
  return Cycle(std::move(pts));
}

} // namespace

Permutation build_sigma(ShuffleSpec const &spec)
{
  spec.validate();
  std::vector<Cycle> cycles;
  for (std::size_t i = 0; i < spec.u.size(); ++i)
    cycles.push_back(shuffled_cycle(spec, i));
  return from_cycles(cycles, 2 * spec.d());
}

Permutation shuffled_cycles(ShuffleSpec const &spec, std::vector<std::size_t> const &orbit)
{
  std::vector<Cycle> cycles;
  for (std::size_t i : orbit)
    cycles.push_back(shuffled_cycle(spec, i));
  return from_cycles(cycles, 2 * spec.d());
}

namespace
{

std::pair<std::vector<Point>, std::vector<Point>>
pair_images(ShuffleSpec const &spec, std::vector<std::size_t> const &indices)
{
  std::size_t const d = spec.d();
  std::vector<Point> first(d), second(d);
  for (Point x = 1; x <= d; ++x)
    first[x - 1] = second[x - 1] = x;
  for (std::size_t index : indices) {
    auto const [is, js] = written_cycles(spec, index);
    std::size_t const m = is.size();
    for (std::size_t k = 0; k < m; ++k) {
      first[is[k] - 1] = js[k];
      second[js[k] - 1] = is[(k + 1) % m];
    }
  }
  return {first, second};
}

std::vector<std::size_t> all_indices(std::size_t n)
{
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = i;
  return v;
}

} // namespace

CommutingPair build_pair(ShuffleSpec const &spec)
{
  spec.validate();
  auto const [first, second] = pair_images(spec, all_indices(spec.u.size()));
  return CommutingPair(Permutation::from_images(first), Permutation::from_images(second));
}

Permutation sigma_from_pair(Permutation const &first, Permutation const &second,
                            std::size_t d)
{
  if (first.largest_moved_point() > d || second.largest_moved_point() > d)
    throw std::invalid_argument("pair components must lie in S_d");
  return (theta(1, d, 2) * first * omega_shift(second.extended(d), d)).extended(2 * d);
}

bool is_braid_like(Permutation const &eta, Permutation const &zeta)
{
  return !eta.commutes_with(zeta) && eta * zeta * eta == zeta * eta * zeta;
}

ShuffleSpec decompose_commuting_pair(Permutation const &first, Permutation const &second,
                                     std::size_t d)
{
  if (first.largest_moved_point() > d || second.largest_moved_point() > d)
    throw InvalidSpec("pair components must lie in S_d");
  if (!first.commutes_with(second))
    throw InvalidSpec("pair components do not commute");
  Permutation const tau = (first * second).extended(d);
  CycleMap const id = CycleMap::identity(tau, d);
  std::vector<std::size_t> image(id.size());
  std::vector<InitialChoice> choices;
  for (std::size_t i = 0; i < id.size(); ++i) {
    Point const i1 = id.cycles()[i].least();
    Point const j1 = first(i1);
    image[i] = id.index_of(j1);
    choices.push_back({i1, j1});
  }
  ShuffleSpec spec(CycleMap(tau, d, std::move(image)), std::move(choices));
  auto const rebuilt = build_pair(spec);
  if (rebuilt.first != first || rebuilt.second != second)
    throw std::logic_error("commuting-pair decomposition failed to round-trip");
  return spec;
}

std::optional<std::pair<Permutation, Permutation>> coset_factors(Permutation const &sigma,
                                                                 std::size_t d)
{
  if (sigma.largest_moved_point() > 2 * d)
    return std::nullopt;
  for (Point x = 1; x <= d; ++x) {
    if (sigma(x) <= d)
      return std::nullopt;
  }
  Permutation const base = theta(1, d, 2) * sigma.extended(2 * d);
  return std::make_pair(base.block(0, d), base.block(d, d));
}

std::optional<Permutation> square_root_tau(Permutation const &sigma, std::size_t d)
{
  if (sigma.largest_moved_point() > 2 * d)
    return std::nullopt;
  Permutation const square = (sigma * sigma).extended(2 * d);
  if (!square.preserves(1, static_cast<Point>(d)))
    return std::nullopt;
  Permutation const low = square.block(0, d);
  Permutation const high = square.block(d, d);
  if (low != high)
    return std::nullopt;
  return low;
}

std::vector<Component> restrict_components(Permutation const &sigma, ShuffleSpec const &spec)
{
  if (build_sigma(spec) != sigma)
    throw InvalidSpec("sigma does not match the shuffle spec");
  std::size_t const d = spec.d();
  Permutation const full_theta = theta(1, d, 2);
  std::vector<Component> result;
  for (auto const &orbit : spec.u.orbits()) {
    Component c;
    c.orbit = orbit;
    std::vector<Cycle> alphas;
    for (std::size_t i : orbit) {
      auto const &pts = spec.u.cycles()[i].points();
      c.support.insert(c.support.end(), pts.begin(), pts.end());
      alphas.push_back(spec.u.cycles()[i]);
    }
    std::sort(c.support.begin(), c.support.end());
    auto const [first, second] = pair_images(spec, orbit);
    c.first = Permutation::from_images(first);
    c.second = Permutation::from_images(second);
    c.tau = from_cycles(alphas, d);

    std::vector<Point> theta_images(2 * d);
    for (Point x = 1; x <= 2 * d; ++x)
      theta_images[x - 1] = x;
    for (Point x : c.support) {
      theta_images[x - 1] = full_theta(x);
      theta_images[x + d - 1] = full_theta(static_cast<Point>(x + d));
    }
    c.factor = Permutation::from_images(theta_images) * c.first * omega_shift(c.second, d);
    result.push_back(std::move(c));
  }
  return result;
}

} // namespace braidperm
