// Writes the canonical fixture set into the given directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "wrep/errors.hpp"
#include "wrep/generate.hpp"
#include "wrep/harness.hpp"
#include "wrep/io.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/wrep.hpp"

using namespace wrep;
namespace fs = std::filesystem;

namespace {

fs::path dir;

void write(const std::string& name, const Instance& inst) {
  if (!validate_instance(inst).ok() && name.find("broken") == std::string::npos)
    throw ValidationError("fixture " + name + " does not validate");
  write_instance((dir / (name + ".json")).string(), inst);
}

Instance converted(const Instance& in, const std::string& to) {
  const Conversion c = convert_instance(in, in.kind, to);
  if (!c.report.ok() || !c.output) throw ValidationError("conversion of " + in.kind + " to " + to + " failed");
  return *c.output;
}

void family(const std::string& name, const Ruth& r, std::uint64_t seed) {
  Rng rng(seed);
  const Instance ruth{"ruth", to_json(r), {{"name", name}}};
  write(name, ruth);
  write(name + "-semidirect", converted(ruth, "vb"));
  write(name + "-wrep", converted(ruth, "wrep"));

  const GaugeData d = random_gauge(r, rng);
  const GaugeResult g = gauge_transport(r, d.phi0, d.phi1, d.mu);
  write(name + "-scrambled", {"ruth", to_json(g.source), {{"name", name + "-scrambled"}, {"seed", seed}}});
  write(name + "-gauge",
        {"morphism", {{"source", to_json(g.source)}, {"target", to_json(r)}, {"map", to_json(r.groupoid, g.morphism)}},
         {{"name", name + "-gauge"}, {"seed", seed}}});

  const VBGroupoid v = semidirect(r);
  const VBGroupoid sv = transport(v, random_isos(rng, v.objdim), random_isos(rng, v.arrdim));
  write(name + "-semidirect-scrambled", {"vb", to_json(sv), {{"name", name + "-semidirect-scrambled"}, {"seed", seed}}});

  const WeakRepresentation w = wrep_from_ruth(r);
  const auto q = random_isos(rng, w.bundle.objdim), p = random_isos(rng, w.bundle.arrdim);
  const WeakRepresentation sw = transport_wrep(w, q, p);
  write(name + "-wrep-scrambled", {"wrep", to_json(sw), {{"name", name + "-wrep-scrambled"}, {"seed", seed}}});
  write(name + "-wrep-basis-change",
        {"equivariant", {{"source", to_json(w)}, {"target", to_json(sw)}, {"map", to_json(r.groupoid, fiber_iso_equivariant(sw, q, p))}},
         {{"name", name + "-wrep-basis-change"}, {"seed", seed}}});
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return kExitUsage;
  }
  dir = argv[1];
  fs::create_directories(dir);
  try {
    write("z2", {"groupoid", to_json(z2_groupoid()), {{"name", "z2"}}});
    write("pair", {"groupoid", to_json(pair_groupoid()), {{"name", "pair"}}});
    family("z2-ruth-0", z2_ruth(0), 100);
    family("z2-ruth-1", z2_ruth(1), 101);
    Rng rng(102);
    const Ruth strict = strict_ruth(pair_groupoid(), rng, 2);
    const GaugeData d = random_gauge(strict, rng);
    family("pair-ruth", gauge_transport(strict, d.phi0, d.phi1, d.mu).source, 103);
    write("z2-ruth-broken4", {"ruth", to_json(z2_ruth_broken4()), {{"name", "z2-ruth-broken4"}}});
    std::ofstream(dir / "malformed.json") << "{\"kind\": \"ruth\", \"payload\": {\"groupoid\": \n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
  return kExitPass;
}
