#include "braidperm/io.hpp"

namespace braidperm
{

ShuffleSpec spec_from_json(json const &j)
{
  try {
    auto const d = j.at("d").get<std::size_t>();
    if (d < 1)
      throw InvalidSpec("d must be positive");
    Permutation const tau = parse_cycles(j.at("tau").get<std::string>(), d);
    if (tau.degree() > d)
      throw InvalidSpec("tau moves points beyond d");

    std::vector<std::pair<Point, Point>> pairs;
    if (j.contains("u")) {
      for (auto const &entry : j.at("u")) {
        if (!entry.is_array() || entry.size() != 2)
          throw InvalidSpec("u entries must be [before, after] pairs");
        pairs.emplace_back(entry[0].get<Point>(), entry[1].get<Point>());
      }
    }
    CycleMap const u = CycleMap::from_least_elements(tau, d, pairs);

    ShuffleSpec spec = ShuffleSpec::with_least_choices(u);
    if (j.contains("choices")) {
      std::vector<bool> seen(u.size(), false);
      for (auto const &c : j.at("choices")) {
        auto const alpha_min = c.at("alpha_min").get<Point>();
        std::size_t const index = u.index_of(alpha_min);
        if (u.cycles()[index].least() != alpha_min)
          throw InvalidSpec("alpha_min " + std::to_string(alpha_min) +
                            " is not the least element of a cycle of tau");
        if (seen[index])
          throw InvalidSpec("choices list a cycle twice");
        seen[index] = true;
        spec.choices[index] = {c.at("i1").get<Point>(), c.at("j1").get<Point>()};
      }
    }
    spec.validate();
    return spec;
  } catch (json::exception const &e) {
    throw InvalidSpec(std::string("malformed spec JSON: ") + e.what());
  }
}

json spec_to_json(ShuffleSpec const &spec)
{
  json u = json::array();
  json choices = json::array();
  auto const &cycles = spec.u.cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    u.push_back({cycles[i].least(), cycles[spec.u(i)].least()});
    choices.push_back({{"alpha_min", cycles[i].least()},
                       {"i1", spec.choices[i].i1},
                       {"j1", spec.choices[i].j1}});
  }
  return {{"d", spec.d()}, {"tau", print_cycles(spec.tau())}, {"u", u}, {"choices", choices}};
}

ShuffleSpec spec_from_text(std::size_t d, std::string const &tau_text, std::string const &u_text,
                           std::vector<Point> const &i1, std::vector<Point> const &j1)
{
  if (d < 1)
    throw InvalidSpec("d must be positive");
  Permutation const tau = parse_cycles(tau_text, d);
  if (tau.degree() > d)
    throw InvalidSpec("tau moves points beyond d");

  std::vector<std::pair<Point, Point>> pairs;
  if (u_text != "id") {
    Permutation const u = parse_cycles(u_text, d);
    if (u.degree() > d)
      throw InvalidSpec("u names points beyond d");
    for (Point x : u.support())
      pairs.emplace_back(x, u(x));
  }
  CycleMap const map = CycleMap::from_least_elements(tau, d, pairs);

  ShuffleSpec spec = ShuffleSpec::with_least_choices(map);
  if (!i1.empty() || !j1.empty()) {
    if (i1.size() != map.size() || j1.size() != map.size())
      throw InvalidSpec("need one i1 and one j1 per cycle of tau (" +
                        std::to_string(map.size()) + ")");
    for (std::size_t i = 0; i < map.size(); ++i)
      spec.choices[i] = {i1[i], j1[i]};
  }
  spec.validate();
  return spec;
}

std::string to_string(BigInt const &value) { return value.str(); }

json image_to_json(BraidImage const &image)
{
  json gens = json::array();
  for (auto const &g : image.generators)
    gens.push_back(print_cycles(g));
  return {{"sigma", print_cycles(image.sigma)},
          {"d", image.d},
          {"n", image.n},
          {"degree", image.degree()},
          {"tau", print_cycles(image.tau)},
          {"q", image.q},
          {"q2", image.q2},
          {"generators", gens}};
}

json matrix_to_json(ModuleMatrix const &m)
{
  return {{"rows", m.n()},
          {"cols", m.n()},
          {"modulus", m.q()},
          {"last_row_modulus", m.q2()},
          {"entries", m.row_major()}};
}

json enumeration_to_json(EnumerationResult const &r)
{
  json elements = json::array();
  for (auto const &p : r.elements)
    elements.push_back(print_cycles(p));
  return {{"d", r.d}, {"tau", print_cycles(r.tau)}, {"count", r.count()}, {"elements", elements}};
}

} // namespace braidperm
