#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidperm/braid_image.hpp"
#include "braidperm/enumerate.hpp"
#include "braidperm/io.hpp"
#include "braidperm/verify.hpp"

namespace bp = braidperm;

namespace
{

enum Exit : int
{
  ok = 0,
  claim_failed = 1,
  bad_input = 2,
  io_failure = 3,
};

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct SpecFlags
{
  std::size_t d = 0;
  std::size_t n = 3;
  std::string tau = "()";
  std::string u = "id";
  std::vector<bp::Point> i1;
  std::vector<bp::Point> j1;
  std::string spec_path;
};

struct Output
{
  std::string format = "text";
  std::string path;
};

void add_spec_flags(CLI::App &cmd, SpecFlags &flags)
{
  cmd.add_option("--d", flags.d, "Block size d");
  cmd.add_option("--n", flags.n, "Number of strands n")->check(CLI::Range(3, 64));
  cmd.add_option("--tau", flags.tau, "tau in cycle notation, or \"all\" (construct only)");
  cmd.add_option("--u", flags.u, "\"id\" or cycle notation on least elements of tau's cycles");
  cmd.add_option("--i1", flags.i1, "Initial elements i1, one per cycle of tau")->delimiter(',');
  cmd.add_option("--j1", flags.j1, "Initial elements j1, one per cycle of tau")->delimiter(',');
  cmd.add_option("--spec", flags.spec_path, "JSON spec file");
}

void add_output_flags(CLI::App &cmd, Output &out)
{
  cmd.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "gap"}));
  cmd.add_option("--out", out.path, "Output file (default stdout)");
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(Output const &out, std::string const &text)
{
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path);
  if (!file || !(file << text) || !file.flush())
    throw IoError("cannot write " + out.path);
}

bp::ShuffleSpec load_spec(SpecFlags const &flags)
{
  if (!flags.spec_path.empty()) {
    bp::json j;
    try {
      j = bp::json::parse(read_file(flags.spec_path));
    } catch (bp::json::parse_error const &e) {
      throw bp::InvalidSpec(std::string("spec file is not JSON: ") + e.what());
    }
    return bp::spec_from_json(j);
  }
  if (flags.d == 0)
    throw bp::InvalidSpec("--d or --spec is required");
  return bp::spec_from_text(flags.d, flags.tau, flags.u, flags.i1, flags.j1);
}

std::string points(std::vector<bp::Point> const &xs)
{
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::vector<bp::Point> y_set(std::vector<bp::Point> const &x, std::size_t d, std::size_t n)
{
  std::vector<bp::Point> y;
  for (std::size_t r = 0; r < n; ++r) {
    for (auto p : x)
      y.push_back(static_cast<bp::Point>(p + r * d));
  }
  return y;
}

bp::json construct_json(bp::ShuffleSpec const &spec, std::size_t n)
{
  std::size_t const d = spec.d();
  bp::Permutation const sigma = bp::build_sigma(spec);
  auto const pair = bp::build_pair(spec);
  std::size_t const q = spec.tau().order();
  bp::json components = bp::json::array();
  for (auto const &c : bp::restrict_components(sigma, spec)) {
    std::vector<bp::Point> least;
    for (auto i : c.orbit)
      least.push_back(spec.u.cycles()[i].least());
    components.push_back({{"orbit", least},
                          {"factor", bp::print_cycles(c.factor)},
                          {"X", c.support},
                          {"Y", y_set(c.support, d, n)}});
  }
  return {{"spec", bp::spec_to_json(spec)},
          {"sigma", bp::print_cycles(sigma)},
          {"tau", bp::print_cycles(spec.tau())},
          {"q", q},
          {"q2", q % 2 == 0 ? q / 2 : q},
          {"pair", {bp::print_cycles(pair.first), bp::print_cycles(pair.second)}},
          {"n", n},
          {"components", components}};
}

std::string construct_text(bp::json const &j)
{
  std::ostringstream os;
  os << "sigma: " << j["sigma"].get<std::string>() << '\n'
     << "tau: " << j["tau"].get<std::string>() << '\n'
     << "q: " << j["q"] << "\nq2: " << j["q2"] << '\n'
     << "pair: " << j["pair"][0].get<std::string>() << ' ' << j["pair"][1].get<std::string>()
     << '\n';
  for (auto const &c : j["components"]) {
    os << "component " << points(c["orbit"].get<std::vector<bp::Point>>())
       << ": factor " << c["factor"].get<std::string>()
       << " X = " << points(c["X"].get<std::vector<bp::Point>>())
       << " Y = " << points(c["Y"].get<std::vector<bp::Point>>()) << '\n';
  }
  return os.str();
}

int cmd_construct(SpecFlags const &flags, Output const &out)
{
  if (out.format == "gap")
    throw bp::InvalidSpec("construct supports text or json output");
  if (flags.tau == "all") {
    if (flags.d == 0)
      throw bp::InvalidSpec("--tau all needs --d");
    bp::json all = bp::json::array();
    std::string text;
    for (auto const &tau : bp::all_permutations(flags.d)) {
      auto const r = bp::enumerate_N(flags.d, tau);
      all.push_back(bp::enumeration_to_json(r));
      text += "tau " + bp::print_cycles(r.tau) + ": " + std::to_string(r.count()) + "\n";
      for (auto const &s : r.elements)
        text += "  " + bp::print_cycles(s) + "\n";
    }
    emit(out, out.format == "json" ? all.dump(2) + "\n" : text);
    return ok;
  }
  auto const j = construct_json(load_spec(flags), flags.n);
  emit(out, out.format == "json" ? j.dump(2) + "\n" : construct_text(j));
  return ok;
}

int cmd_export(SpecFlags const &flags, Output const &out)
{
  auto const spec = load_spec(flags);
  auto const image = bp::braid_image(bp::build_sigma(spec), spec.d(), flags.n);
  if (out.format == "json") {
    bp::json j = bp::image_to_json(image);
    j["spec"] = bp::spec_to_json(spec);
    j["order"] = bp::to_string(bp::group_order(image.group()));
    emit(out, j.dump(2) + "\n");
  } else {
    emit(out, bp::gap_export(image));
  }
  return ok;
}

struct VerifyFlags
{
  std::vector<std::size_t> d;
  std::vector<std::size_t> n;
  std::size_t d_max = 0;
  std::size_t n_max = 0;
  std::vector<std::string> claims;
  std::uint64_t seed = 1;
  std::size_t cap = 0;
};

int cmd_verify(VerifyFlags const &flags, Output const &out)
{
  if (out.format == "gap")
    throw std::invalid_argument("verify supports text or json output");
  bp::VerifyConfig config;
  config.seed = flags.seed;
  config.cap = flags.cap != 0 ? flags.cap : bp::enumeration_cap_from_env();
  if (!flags.d.empty() && flags.d_max != 0)
    throw std::invalid_argument("--d and --d-max are exclusive");
  if (!flags.n.empty() && flags.n_max != 0)
    throw std::invalid_argument("--n and --n-max are exclusive");
  if (!flags.d.empty())
    config.degrees = flags.d;
  else if (flags.d_max != 0) {
    config.degrees.clear();
    for (std::size_t d = 1; d <= flags.d_max; ++d)
      config.degrees.push_back(d);
  }
  if (!flags.n.empty())
    config.strands = flags.n;
  else if (flags.n_max != 0) {
    config.strands.clear();
    for (std::size_t n = 3; n <= flags.n_max; ++n)
      config.strands.push_back(n);
  }
  for (auto const &c : flags.claims)
    config.claims.push_back(bp::resolve_claim(c));
  bp::validate(config);

  auto const report = bp::run_verification(config);
  emit(out, out.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.all_pass() ? ok : claim_failed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Braid-like permutation representations: construction and verification"};
  app.require_subcommand(1);

  SpecFlags construct_flags;
  Output construct_out;
  auto *construct = app.add_subcommand("construct", "Build sigma from shuffle data");
  add_spec_flags(*construct, construct_flags);
  add_output_flags(*construct, construct_out);

  SpecFlags export_flags;
  Output export_out;
  export_out.format = "gap";
  auto *exporter = app.add_subcommand("export", "Write the generators of B_n(sigma)");
  add_spec_flags(*exporter, export_flags);
  add_output_flags(*exporter, export_out);

  VerifyFlags verify_flags;
  Output verify_out;
  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--d", verify_flags.d, "Block sizes to check")->delimiter(',');
  verify->add_option("--n", verify_flags.n, "Strand counts to check")->delimiter(',');
  verify->add_option("--d-max", verify_flags.d_max, "Check d = 1..d-max");
  verify->add_option("--n-max", verify_flags.n_max, "Check n = 3..n-max");
  verify->add_option("--claim", verify_flags.claims, "Claim id or name (repeatable)");
  verify->add_option("--seed", verify_flags.seed, "Seed for sampled instances");
  verify->add_option("--cap", verify_flags.cap, "Enumeration cap (default $BRAIDPERM_CAP)");
  add_output_flags(*verify, verify_out);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (*construct)
      return cmd_construct(construct_flags, construct_out);
    if (*exporter)
      return cmd_export(export_flags, export_out);
    return cmd_verify(verify_flags, verify_out);
  } catch (IoError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (std::out_of_range const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (bp::CapExceeded const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
}
