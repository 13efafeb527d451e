#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidperm/braid_image.hpp"
#include "braidperm/enumerate.hpp"
#include "braidperm/io.hpp"
#include "braidperm/verify.hpp"

namespace py = pybind11;
namespace bp = braidperm;

namespace
{

py::object to_python(bp::json const &j)
{
  return py::module_::import("json").attr("loads")(j.dump());
}

bp::ShuffleSpec spec_of(std::size_t d, std::string const &tau, std::string const &u,
                        std::vector<bp::Point> const &i1, std::vector<bp::Point> const &j1)
{
  return bp::spec_from_text(d, tau, u, i1, j1);
}

} // namespace

PYBIND11_MODULE(_braidperm, m)
{
  m.doc() = "Braid-like permutation representations B_n(sigma) and their verification";

  py::register_exception<bp::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<bp::InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);

  py::class_<bp::Permutation>(m, "Permutation")
      .def(py::init([](std::vector<bp::Point> const &images) {
             return bp::Permutation::from_images(images);
           }),
           py::arg("images"))
      .def_static("parse", [](std::string const &text) { return bp::parse_cycles(text); })
      .def_static("identity", &bp::Permutation::identity)
      .def_property_readonly("degree", &bp::Permutation::degree)
      .def_property_readonly("images", &bp::Permutation::images)
      .def("__call__", &bp::Permutation::operator())
      .def("inverse", &bp::Permutation::inverse)
      .def("order", &bp::Permutation::order)
      .def("is_identity", &bp::Permutation::is_identity)
      .def("__pow__", &bp::Permutation::pow)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", &bp::Permutation::hash)
      .def("__str__", &bp::print_cycles)
      .def("__repr__",
           [](bp::Permutation const &p) { return "Permutation.parse('" + bp::print_cycles(p) + "')"; })
      .def("gap", &bp::print_cycles_gap);

  m.def("theta", &bp::theta, py::arg("s"), py::arg("d"), py::arg("n"));
  m.def("omega_shift", &bp::omega_shift, py::arg("sigma"), py::arg("k"));
  m.def("conjugate", &bp::conjugate, py::arg("zeta"), py::arg("sigma"));
  m.def("partition_count", &bp::partition_count);

  m.def(
      "build_sigma",
      [](std::size_t d, std::string const &tau, std::string const &u,
         std::vector<bp::Point> const &i1, std::vector<bp::Point> const &j1) {
        return bp::build_sigma(spec_of(d, tau, u, i1, j1));
      },
      py::arg("d"), py::arg("tau"), py::arg("u") = "id", py::arg("i1") = std::vector<bp::Point>{},
      py::arg("j1") = std::vector<bp::Point>{});
  m.def(
      "build_pair",
      [](std::size_t d, std::string const &tau, std::string const &u,
         std::vector<bp::Point> const &i1, std::vector<bp::Point> const &j1) {
        auto const p = bp::build_pair(spec_of(d, tau, u, i1, j1));
        return std::pair{p.first, p.second};
      },
      py::arg("d"), py::arg("tau"), py::arg("u") = "id", py::arg("i1") = std::vector<bp::Point>{},
      py::arg("j1") = std::vector<bp::Point>{});
  m.def(
      "construct",
      [](std::string const &spec_json) {
        auto const spec = bp::spec_from_json(bp::json::parse(spec_json));
        return bp::build_sigma(spec);
      },
      py::arg("spec_json"), "sigma from a JSON shuffle spec");
  m.def("is_braid_like", &bp::is_braid_like);
  m.def("square_root_tau", &bp::square_root_tau, py::arg("sigma"), py::arg("d"));

  m.def(
      "enumerate_M",
      [](std::size_t d, bp::Permutation const &tau) {
        return bp::enumerate_M(bp::symmetric_group(d), tau).elements;
      },
      py::arg("d"), py::arg("tau"));
  m.def(
      "enumerate_N", [](std::size_t d, bp::Permutation const &tau) {
        return bp::enumerate_N(d, tau).elements;
      },
      py::arg("d"), py::arg("tau"));
  m.def(
      "count_commuting_pairs_symmetric",
      [](std::size_t d) { return bp::count_commuting_pairs(bp::symmetric_group(d)); },
      py::arg("d"));

  py::class_<bp::BraidImage>(m, "BraidImage")
      .def(py::init(&bp::braid_image), py::arg("sigma"), py::arg("d"), py::arg("n"))
      .def_readonly("sigma", &bp::BraidImage::sigma)
      .def_readonly("d", &bp::BraidImage::d)
      .def_readonly("n", &bp::BraidImage::n)
      .def_readonly("tau", &bp::BraidImage::tau)
      .def_readonly("q", &bp::BraidImage::q)
      .def_readonly("q2", &bp::BraidImage::q2)
      .def_readonly("generators", &bp::BraidImage::generators)
      .def("order", [](bp::BraidImage const &b) { return bp::to_string(bp::group_order(b.group())); })
      .def("a_order",
           [](bp::BraidImage const &b) { return bp::to_string(bp::group_order(bp::an_subgroup(b))); })
      .def("orbits", [](bp::BraidImage const &b) { return bp::orbits_partition(b.group()); })
      .def("split",
           [](bp::BraidImage const &b) -> std::optional<std::vector<bp::Permutation>> {
             auto const h = bp::split_complement(b);
             if (!h.attempted)
               return std::nullopt;
             return h.complement->generators();
           })
      .def("monodromy_kernel_size",
           [](bp::BraidImage const &b) { return bp::monodromy_kernel(b).kernel_size; })
      .def("gap", &bp::gap_export)
      .def("to_json", [](bp::BraidImage const &b) { return to_python(bp::image_to_json(b)); });

  m.def(
      "verify",
      [](std::vector<std::size_t> degrees, std::vector<std::size_t> strands,
         std::vector<std::string> const &claims, std::uint64_t seed) {
        bp::VerifyConfig config;
        config.degrees = std::move(degrees);
        config.strands = std::move(strands);
        for (auto const &c : claims)
          config.claims.push_back(bp::resolve_claim(c));
        config.seed = seed;
        config.cap = bp::enumeration_cap_from_env();
        bp::json report;
        {
          py::gil_scoped_release release;
          report = bp::run_verification(config).to_json();
        }
        return to_python(report);
      },
      py::arg("degrees") = std::vector<std::size_t>{1, 2, 3, 4},
      py::arg("strands") = std::vector<std::size_t>{3, 4},
      py::arg("claims") = std::vector<std::string>{}, py::arg("seed") = 1,
      "Run the verification suite; returns the JSON report as a dict");
}
