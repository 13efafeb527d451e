#include "braidperm/group.hpp"

#include <algorithm>
#include <deque>

namespace braidperm
{

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<std::string> labels)
    : degree_(degree), generators_(std::move(generators)), labels_(std::move(labels))
{
  if (generators_.empty())
    throw std::invalid_argument("a group needs at least one generator");
  if (!labels_.empty() && labels_.size() != generators_.size())
    throw std::invalid_argument("one label per generator");
  for (auto &g : generators_) {
    if (g.largest_moved_point() > degree_)
      throw std::invalid_argument("generator moves points beyond the group degree");
    g = g.trimmed().extended(degree_);
  }
}

std::set<Point> orbit(std::set<Point> const &points, PermutationGroup const &group)
{
  std::set<Point> result = points;
  std::deque<Point> queue(points.begin(), points.end());
  while (!queue.empty()) {
    Point const x = queue.front();
    queue.pop_front();
    for (auto const &g : group.generators()) {
      if (result.insert(g(x)).second)
        queue.push_back(g(x));
    }
  }
  return result;
}

std::vector<std::vector<Point>> orbits_partition(PermutationGroup const &group)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(group.degree() + 1, false);
  for (Point x = 1; x <= group.degree(); ++x) {
    if (seen[x])
      continue;
    auto const o = orbit({x}, group);
    for (Point y : o)
      seen[y] = true;
    result.emplace_back(o.begin(), o.end());
  }
  return result;
}

StabilizerChain::StabilizerChain(PermutationGroup const &group) : degree_(group.degree())
{
  std::vector<Permutation> gens;
  for (auto const &g : group.generators()) {
    if (!g.is_identity())
      gens.push_back(g.extended(degree_));
  }
  for (auto const &g : gens) {
    bool const fixes_base = std::all_of(base_.begin(), base_.end(),
                                        [&](Point b) { return g(b) == b; });
    if (fixes_base)
      base_.push_back(g.support().front());
  }
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level level;
    level.base_point = base_[i];
    for (auto const &g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        fixes_prefix = fixes_prefix && g(base_[j]) == base_[j];
      if (fixes_prefix)
        level.generators.push_back(g);
    }
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }
  run();
}

void StabilizerChain::rebuild_orbit(Level &level) const
{
  level.transversal.assign(degree_ + 1, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point const gamma = level.orbit[k];
    for (auto const &s : level.generators) {
      Point const delta = s(gamma);
      if (!level.transversal[delta]) {
        level.transversal[delta] = s * *level.transversal[gamma];
        level.orbit.push_back(delta);
      }
    }
  }
}

void StabilizerChain::run()
{
  auto i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto const &level = levels_[static_cast<std::size_t>(i)];
    std::vector<Point> const orbit_copy = level.orbit;
    std::vector<Permutation> const gens_copy = level.generators;
    for (Point beta : orbit_copy) {
      for (auto const &x : gens_copy) {
        auto const &lvl = levels_[static_cast<std::size_t>(i)];
        Permutation const &t_beta = *lvl.transversal[beta];
        Permutation const &t_image = *lvl.transversal[x(beta)];
        Permutation const xt = x * t_beta;
        if (xt == t_image)
          continue;
        Permutation const h = t_image.inverse() * xt;
        auto [residue, stop] = strip(h, static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && residue.is_identity())
          continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = residue.support().front();
          base_.push_back(fresh.base_point);
          rebuild_orbit(fresh);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long>(stop);
        restarted = true;
        break;
      }
      if (restarted)
        break;
    }
    if (!restarted)
      --i;
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation const &g,
                                                           std::size_t first_level) const
{
  Permutation h = g.extended(degree_);
  for (std::size_t l = first_level; l < levels_.size(); ++l) {
    Point const beta = h(levels_[l].base_point);
    if (beta > degree_ || !levels_[l].transversal[beta])
      return {h, l};
    h = levels_[l].transversal[beta]->inverse() * h;
  }
  return {h, levels_.size()};
}

Permutation const &StabilizerChain::transversal(std::size_t level, Point beta) const
{
  auto const &t = levels_.at(level).transversal.at(beta);
  if (!t)
    throw std::out_of_range("point not in fundamental orbit");
  return *t;
}

std::vector<Permutation> StabilizerChain::strong_generators() const
{
  std::vector<Permutation> result;
  for (auto const &level : levels_) {
    for (auto const &g : level.generators) {
      if (std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(g);
    }
  }
  return result;
}

BigInt StabilizerChain::order() const
{
  BigInt result = 1;
  for (auto const &level : levels_)
    result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.largest_moved_point() > degree_)
    return false;
  auto const [residue, stop] = strip(g);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StabilizerChain::elements(std::size_t cap) const
{
  if (order() > cap)
    throw CapExceeded("group order exceeds the enumeration cap");
  std::vector<Permutation> result{Permutation::identity(degree_)};
  for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
    std::vector<Permutation> next;
    next.reserve(result.size() * level->orbit.size());
    for (Point beta : level->orbit) {
      for (auto const &tail : result)
        next.push_back(*level->transversal[beta] * tail);
    }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

BigInt group_order(PermutationGroup const &group) { return StabilizerChain(group).order(); }

bool is_subgroup(PermutationGroup const &sub, StabilizerChain const &chain)
{
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Permutation const &g) { return chain.contains(g); });
}

bool same_group(PermutationGroup const &a, PermutationGroup const &b)
{
  StabilizerChain const ca(a), cb(b);
  return ca.order() == cb.order() && is_subgroup(a, cb) && is_subgroup(b, ca);
}

bool is_abelian(PermutationGroup const &group)
{
  auto const &gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j]))
        return false;
    }
  }
  return true;
}

bool is_normalized_by(StabilizerChain const &sub, PermutationGroup const &ambient,
                      PermutationGroup const &sub_generators)
{
  for (auto const &g : ambient.generators()) {
    for (auto const &h : sub_generators.generators()) {
      if (!sub.contains(conjugate(g, h)))
        return false;
    }
  }
  return true;
}

PermutationGroup symmetric_group(std::size_t d)
{
  if (d < 2)
    return trivial_group(d);
  std::vector<Point> cycle(d);
  for (std::size_t i = 0; i < d; ++i)
    cycle[i] = static_cast<Point>(i + 1);
  std::vector<Permutation> gens{from_cycles({Cycle{1, 2}}, d)};
  if (d > 2)
    gens.push_back(from_cycles({Cycle(cycle)}, d));
  return PermutationGroup(d, std::move(gens));
}

PermutationGroup cyclic_group(Permutation const &generator, std::size_t degree)
{
  return PermutationGroup(degree, {generator});
}

PermutationGroup trivial_group(std::size_t degree)
{
  return PermutationGroup(degree, {Permutation::identity(degree)});
}

} // namespace braidperm
