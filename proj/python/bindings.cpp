#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/harness.hpp"
#include "wrep/io.hpp"

namespace py = pybind11;
using namespace wrep;

namespace {

RandomBounds bounds(int max_objects, int max_arrows, int max_dim) {
  if (max_objects < 1 || max_arrows < 1 || max_dim < 0) throw UsageError("bounds must be positive");
  return {max_objects, max_arrows, max_dim};
}

std::string validate_text(const std::string& text) {
  const Instance inst = parse_instance(text);
  return validate_json(inst, validate_instance(inst)).dump();
}

py::tuple convert_text(const std::string& text, const std::string& from, const std::string& to) {
  const Conversion c = convert_instance(parse_instance(text), from, to);
  const std::string report = convert_json(from, to, c).dump();
  if (!c.output) return py::make_tuple(report, py::none());
  return py::make_tuple(report, dump_instance(*c.output));
}

std::string fixture_text(const std::string& name) {
  if (name == "z2") return dump_instance({"groupoid", to_json(z2_groupoid()), {{"name", name}}});
  if (name == "pair") return dump_instance({"groupoid", to_json(pair_groupoid()), {{"name", name}}});
  if (name == "z2-ruth-0") return dump_instance({"ruth", to_json(z2_ruth(0)), {{"name", name}}});
  if (name == "z2-ruth-1") return dump_instance({"ruth", to_json(z2_ruth(1)), {{"name", name}}});
  if (name == "z2-ruth-broken4") return dump_instance({"ruth", to_json(z2_ruth_broken4()), {{"name", name}}});
  throw UsageError("unknown fixture '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_wrep, m) {
  m.doc() = "Representations up to homotopy, weak representations and VB-groupoids over finite groupoids";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  m.def("validate", &validate_text, py::arg("instance"), "Validate an instance given as JSON text; returns a JSON report.");
  m.def("convert", &convert_text, py::arg("instance"), py::arg("source_kind"), py::arg("target_kind"),
        "Convert an instance; returns (JSON report, instance JSON text or None).");
  m.def(
      "roundtrip",
      [](const std::string& pipeline, int trials, std::uint64_t seed, int max_objects, int max_arrows, int max_dim) {
        return roundtrip_json(pipeline, seed, run_roundtrip(pipeline, trials, seed, bounds(max_objects, max_arrows, max_dim)))
            .dump();
      },
      py::arg("pipeline"), py::arg("trials") = 10, py::arg("seed") = 1, py::arg("max_objects") = 4,
      py::arg("max_arrows") = 12, py::arg("max_dim") = 3);
  m.def(
      "fuzz",
      [](int trials, std::uint64_t seed, int max_objects, int max_arrows, int max_dim) {
        return fuzz_json(seed, run_fuzz(trials, seed, bounds(max_objects, max_arrows, max_dim))).dump();
      },
      py::arg("trials") = 50, py::arg("seed") = 1, py::arg("max_objects") = 4, py::arg("max_arrows") = 12,
      py::arg("max_dim") = 3);
  m.def("fixture", &fixture_text, py::arg("name"), "One of z2, pair, z2-ruth-0, z2-ruth-1, z2-ruth-broken4.");
  m.def("render_text", [](const std::string& report) { return render_text(Json::parse(report)); }, py::arg("report"));
}
