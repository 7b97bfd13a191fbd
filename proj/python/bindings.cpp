// Python module _rbsym. Objects go in as JSON or digraph text and results
// come back as JSON strings; the rbsym package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbsym/lab.hpp"
#include "rbsym/verify.hpp"

namespace py = pybind11;
using namespace rbsym;

namespace {

std::string compute(const std::string& text, const std::string& kind, const std::string& basis, int threads) {
  const ParsedObject obj = parse_object(text, kind);
  const RedeiBerge u = redei_berge(obj.digraph, {.threads = threads});
  if (basis == "F")
    return to_json(u.fundamental).dump();
  if (basis == "M")
    return to_json(f_to_m(u.fundamental)).dump();
  if (basis == "p")
    return to_json(u.power_sum).dump();
  throw ValidationError("basis must be F, M or p");
}

std::string poly(const std::string& text, const std::string& kind, int m) {
  return to_string(redei_berge_polynomial(parse_object(text, kind).digraph, m));
}

std::string invariants(const std::string& text, const std::string& kind, bool tournament) {
  const ParsedObject obj = parse_object(text, kind);
  InvariantOptions opts;
  opts.tournament = tournament;
  opts.poset = obj.poset.has_value();
  return to_json(invariants_of(obj.digraph, opts)).dump();
}

std::string verify(const std::string& suite, int n, int k, int samples, std::uint64_t seed, int threads) {
  VerifyConfig c;
  c.n = n;
  c.k = k;
  c.samples = samples;
  c.seed = seed;
  c.threads = threads;
  return run_suite(suite, c).to_json().dump();
}

std::pair<std::string, std::vector<std::string>> search(const std::string& cls, int n) {
  const CollisionReport r = collision_search(parse_search_class(cls), n);
  std::vector<std::string> lines;
  for (const auto& l : r.json_lines())
    lines.push_back(l.dump());
  return {r.summary().dump(), lines};
}

} // namespace

PYBIND11_MODULE(_rbsym, m) {
  m.doc() = "Redei-Berge symmetric functions (JSON in, JSON out)";
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());

  m.def("compute", &compute, py::arg("text"), py::arg("kind") = "auto", py::arg("basis") = "F",
        py::arg("threads") = 1);
  m.def("poly", &poly, py::arg("text"), py::arg("kind") = "auto", py::arg("m"));
  m.def("invariants", &invariants, py::arg("text"), py::arg("kind") = "auto", py::arg("tournament") = false);
  m.def("verify", &verify, py::arg("suite"), py::arg("n") = 4, py::arg("k") = 3, py::arg("samples") = 20,
        py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("search", &search, py::arg("cls"), py::arg("n"));
  m.def("suite_names", &suite_names);
}
