#include "wrep/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "wrep/complex.hpp"
#include "wrep/errors.hpp"
#include "wrep/fuzz.hpp"
#include "wrep/phi.hpp"
#include "wrep/ruth.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/vb.hpp"
#include "wrep/wrep.hpp"

namespace wrep {

namespace {

void expect(Report& rep, bool ok, const std::string& check, const std::string& location = {}) {
  if (!ok) rep.add(check, location);
}

void expect_iso(Report& rep, const VBGroupoid& v, const VBGroupoid& w, const VBMap& f, const std::string& name) {
  rep.merge(validate_vb_map(v, w, f), name + ":");
  expect(rep, is_fiberwise_invertible(f), name + ":invertible");
}

std::vector<Matrix> inverses(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(inverse(m));
  return out;
}

// Structure and dimension problems in a payload are malformed input.
template <class F>
auto as_parse_error(F body) -> decltype(body()) {
  try {
    return body();
  } catch (const StructureError& e) {
    throw ParseError(e.what());
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

struct Pair {
  Json source, target, map;
};

Pair pair_payload(const Json& payload) {
  if (!payload.is_object() || !payload.contains("source") || !payload.contains("target") || !payload.contains("map"))
    throw ParseError("payload must hold source, target and map");
  return {payload.at("source"), payload.at("target"), payload.at("map")};
}

// ---- round-trip laps ----

struct Lap {
  Rng& rng;
  const RandomBounds& bounds;
  Report& rep;
};

void lap_ruth_vb(const Ruth& r, Lap& lap) {
  auto& rep = lap.rep;
  const VBGroupoid s = semidirect(r);
  rep.merge(validate_vb(s), "semidirect:");

  const GaugeResult a = random_morphism_into(r, lap.rng);
  const GaugeResult b = random_morphism_into(a.source, lap.rng);
  const VBMap pa = psi_morphism(a.source, r, a.morphism), pb = psi_morphism(b.source, a.source, b.morphism);
  rep.merge(validate_vb_map(semidirect(a.source), s, pa), "psi:");
  expect(rep, psi_morphism(b.source, r, compose_morphisms(r.groupoid, a.morphism, b.morphism)) == compose(pa, pb),
         "psi-composition");
  expect(rep, psi_morphism(r, r, identity_morphism(r)) == identity_vb_map(s), "psi-identity");
  expect(rep, morphism_from_semidirect_map(a.source, r, pa) == a.morphism, "psi-inverse");

  const auto q = random_isos(lap.rng, s.objdim), p = random_isos(lap.rng, s.arrdim);
  const VBGroupoid scrambled = transport(s, q, p);
  const VBSplitting split = vb_to_ruth(scrambled);
  rep.merge(validate_ruth(split.ruth), "recovered:");
  expect_iso(rep, scrambled, semidirect(split.ruth), split.to_semidirect, "splitting");
  const VBMap total = compose(split.to_semidirect, fiber_iso_map(s, q, p));
  const RuthMorphism witness = morphism_from_semidirect_map(r, split.ruth, total);
  rep.merge(validate_morphism(r, split.ruth, witness), "witness:");
  expect(rep, is_isomorphism(witness), "witness:invertible");
}

void lap_vb_wrep(const VBGroupoid& v, Lap& lap) {
  auto& rep = lap.rep;
  const KernelRepresentation k = vb_to_wrep(v);
  rep.merge(validate_wrep(k.rep), "wrep:");
  rep.merge(validate_connection(v, k.connection), "connection:");
  const VBGroupoid act = action_groupoid(k.rep);
  rep.merge(validate_vb(act), "action:");
  expect_iso(rep, v, act, k.to_action, "to-action");

  const Connection other = random_connection(v, k.connection, lap.rng);
  rep.merge(validate_connection(v, other), "other-connection:");
  const KernelRepresentation k2 = vb_to_wrep(v, other);
  const EquivariantMap e = compare_kernel_representations(k, k2);
  rep.merge(validate_equivariant(k.rep, k2.rep, e), "comparison:");
  expect(rep, is_isomorphism(e), "comparison:invertible");

  rep.merge(validate_ruth(ruth_from_wrep(k.rep)), "ruth:");
}

void lap_wrep_ruth(const Ruth& r, Lap& lap) {
  auto& rep = lap.rep;
  const WeakRepresentation w = wrep_from_ruth(r);
  rep.merge(validate_wrep(w), "wrep:");
  expect(rep, ruth_from_wrep(w) == r, "exact-roundtrip");

  const auto q = random_isos(lap.rng, w.bundle.objdim), p = random_isos(lap.rng, w.bundle.arrdim);
  const WeakRepresentation s = transport_wrep(w, q, p);
  rep.merge(validate_wrep(s), "scrambled:");
  const EquivariantMap back = fiber_iso_equivariant(w, inverses(q), inverses(p));
  rep.merge(validate_equivariant(s, w, back), "basis-change:");
  const Ruth rs = ruth_from_wrep(s);
  rep.merge(validate_ruth(rs), "recovered:");
  const RuthMorphism witness = ruth_morphism_from_equivariant(s, w, back);
  rep.merge(validate_morphism(rs, r, witness), "witness:");
  expect(rep, is_isomorphism(witness), "witness:invertible");

  const GaugeResult a = random_morphism_into(r, lap.rng);
  const WeakRepresentation wa = wrep_from_ruth(a.source);
  const EquivariantMap ea = equivariant_from_ruth_morphism(a.source, r, a.morphism);
  rep.merge(validate_equivariant(wa, w, ea), "morphism:");
  expect(rep, ruth_morphism_from_equivariant(wa, w, ea) == a.morphism, "morphism-roundtrip");
}

void lap_triangle(const Ruth& r, Lap& lap) {
  auto& rep = lap.rep;
  const VBGroupoid act = action_groupoid(wrep_from_ruth(r));
  rep.merge(validate_vb(act), "action:");
  const VBGroupoid s = semidirect(r);
  rep.merge(validate_vb(s), "semidirect:");
  expect_iso(rep, act, s, triangle_iso(r), "triangle");
}

void lap_phi_hom(const TwoTermComplex& c, Lap& lap) {
  auto& rep = lap.rep;
  auto& rng = lap.rng;
  const int dim = lap.bounds.max_dim;
  const TwoTermComplex d = random_complex(rng, c.base, dim), e = random_complex(rng, c.base, dim);

  const Splitting sp = split_bundle(phi_object(c));
  expect(rep, sp.complex == c, "split-complex");
  expect(rep, sp.to_phi == identity_vb_map(phi_object(c)), "split-basis");

  const ChainMap f = random_chain_map(rng, c, d), k = random_chain_map(rng, d, e);
  expect(rep, extract_chain_map(c, d, phi_onemorphism(f)) == f, "extract-chain-map");
  expect(rep, phi_onemorphism(compose(k, f)) == compose(phi_onemorphism(k), phi_onemorphism(f)), "phi-composition");
  const ChainHomotopy psi = random_homotopy_from(rng, c, d, f);
  rep.merge(validate_homotopy(c, d, psi), "homotopy:");
  expect(rep, extract_homotopy(c, d, psi.from, psi.to, phi_twomorphism(psi)) == psi, "extract-homotopy");

  const ChainHomotopy phi = random_homotopy_from(rng, c, d, psi.to);
  const ChainHomotopy omega = random_homotopy_from(rng, d, e, k);
  const ChainHomotopy chi = random_homotopy_from(rng, d, e, omega.to);
  expect(rep, check_interchange(c, d, e, psi, phi, omega, chi), "interchange");
}

void lap_act_ff(const Ruth& r, Lap& lap) {
  auto& rep = lap.rep;
  const WeakRepresentation w = wrep_from_ruth(r);
  const GaugeResult a = random_morphism_into(r, lap.rng);
  const WeakRepresentation wa = wrep_from_ruth(a.source);
  const auto q = random_isos(lap.rng, w.bundle.objdim), p = random_isos(lap.rng, w.bundle.arrdim);
  const WeakRepresentation s = transport_wrep(w, q, p);
  const EquivariantMap e = compose_equivariant(s, fiber_iso_equivariant(s, q, p),
                                               equivariant_from_ruth_morphism(a.source, r, a.morphism));
  rep.merge(validate_equivariant(wa, s, e), "equivariant:");

  const VBMap f = act_on_morphism(wa, s, e);
  rep.merge(validate_vb_map(action_groupoid(wa), action_groupoid(s), f), "act:");
  expect(rep, reconstruct_equivariant(wa, s, f) == e, "reconstruct-after-act");

  // A VB map between action groupoids that is not built by Act.
  const VBMap via_semidirect = compose(inverse(triangle_iso(r)), compose(psi_morphism(a.source, r, a.morphism), triangle_iso(a.source)));
  rep.merge(validate_vb_map(action_groupoid(wa), action_groupoid(w), via_semidirect), "psi-transported:");
  expect(rep, act_on_morphism(wa, w, reconstruct_equivariant(wa, w, via_semidirect)) == via_semidirect, "act-after-reconstruct");
  expect(rep, act_on_morphism(w, w, identity_equivariant(w)) == identity_vb_map(action_groupoid(w)), "act-identity");
}

std::string fraction(int num, int den) { return std::to_string(num) + "/" + std::to_string(den); }

Json violations_json(const Report& r) { return to_json(r).at("violations"); }

Json stats_json(const FuzzStats& s) {
  return {{"instances", s.instances},       {"generator_failures", s.generator_failures},
          {"mutations", s.mutations},       {"killed", s.killed},
          {"equivalent", s.equivalent},     {"missed", s.missed},
          {"false_alarms", s.false_alarms}, {"controls", s.controls},
          {"control_failures", s.control_failures}, {"kill_rate", fraction(s.killed, s.killed + s.missed)}};
}

void add_stats(FuzzStats& a, const FuzzStats& b) {
  a.instances += b.instances;
  a.generator_failures += b.generator_failures;
  a.mutations += b.mutations;
  a.killed += b.killed;
  a.equivalent += b.equivalent;
  a.missed += b.missed;
  a.false_alarms += b.false_alarms;
  a.controls += b.controls;
  a.control_failures += b.control_failures;
}

template <class T>
struct Subject {
  T value;
  std::function<Report(const T&)> validate;
  std::function<bool(const T&)> oracle;
  std::function<std::optional<Mutation>(T&, Rng&, bool)> mutate;
};

template <class T>
FuzzStats fuzz_one(Subject<T> s, Rng& rng, bool control, const std::string& where, FuzzReport& out) {
  Report& rep = out.report;
  FuzzStats st;
  st.instances = 1;
  if (!s.validate(s.value).ok() || !s.oracle(s.value)) {
    ++st.generator_failures;
    rep.add("generator", where);
    return st;
  }
  T mutant = s.value;
  const auto m = s.mutate(mutant, rng, control);
  if (!m) return st;
  const std::string at = where + " " + m->field + " " + m->location;
  bool flagged = false;
  try {
    flagged = !s.validate(mutant).ok();
  } catch (const Error&) {
    flagged = true;
  }
  if (control) {
    ++st.controls;
    if (flagged) {
      ++st.control_failures;
      rep.add("control", at, "pass", "flagged");
    }
    return st;
  }
  ++st.mutations;
  const bool valid = s.oracle(mutant);
  if (valid && !flagged) {
    ++st.equivalent;
    out.equivalent.push_back(at);
  }
  if (valid && flagged) {
    ++st.false_alarms;
    rep.add("false-alarm", at, "accepted", "flagged");
  }
  if (!valid && flagged) ++st.killed;
  if (!valid && !flagged) {
    ++st.missed;
    rep.add("missed-mutation", at, "flagged", "accepted");
  }
  return st;
}

}  // namespace

Report validate_instance(const Instance& inst) {
  return as_parse_error([&] {
    const Json& j = inst.payload;
    if (inst.kind == "groupoid") return validate_groupoid(groupoid_from_json(j));
    if (inst.kind == "complex") {
      complex_from_json(j);
      return Report{};
    }
    if (inst.kind == "ruth") return validate_ruth(ruth_from_json(j));
    if (inst.kind == "vb") return validate_vb(vb_from_json(j));
    if (inst.kind == "wrep") return validate_wrep(wrep_from_json(j));
    if (inst.kind == "morphism") {
      const Pair p = pair_payload(j);
      const Ruth s = ruth_from_json(p.source), t = ruth_from_json(p.target);
      Report rep;
      rep.merge(validate_ruth(s), "source:");
      rep.merge(validate_ruth(t), "target:");
      if (!(s.groupoid == t.groupoid)) throw ParseError("source and target live over different groupoids");
      const RuthMorphism m = ruth_morphism_from_json(s.groupoid, p.map);
      check_morphism_shapes(s, t, m);
      if (rep.ok()) rep.merge(validate_morphism(s, t, m));
      return rep;
    }
    if (inst.kind == "equivariant") {
      const Pair p = pair_payload(j);
      const WeakRepresentation s = wrep_from_json(p.source), t = wrep_from_json(p.target);
      if (!(s.groupoid == t.groupoid)) throw ParseError("source and target live over different groupoids");
      const EquivariantMap e = equivariant_from_json(s.groupoid, p.map);
      check_equivariant_shapes(s, t, e);
      return validate_equivariant(s, t, e);
    }
    throw UsageError("unknown kind '" + inst.kind + "'");
  });
}

Conversion convert_instance(const Instance& inst, const std::string& from, const std::string& to) {
  static const std::set<std::pair<std::string, std::string>> edges{
      {"ruth", "vb"}, {"ruth", "wrep"}, {"wrep", "ruth"}, {"wrep", "vb"}, {"vb", "wrep"}};
  if (!edges.contains({from, to})) throw UsageError("unsupported conversion " + from + " -> " + to);
  if (inst.kind != from) throw UsageError("input is of kind '" + inst.kind + "', not '" + from + "'");

  Conversion c;
  c.report.merge(validate_instance(inst), "input:");
  if (!c.report.ok()) return c;

  Instance out;
  out.kind = to;
  out.metadata = inst.metadata.is_object() ? inst.metadata : Json::object();
  out.metadata.erase("witness");
  out.metadata.erase("connection");
  Json path = out.metadata.contains("path") ? out.metadata.at("path") : Json::array({from});
  path.push_back(to);
  out.metadata["path"] = path;

  if (from == "ruth") {
    const Ruth r = ruth_from_json(inst.payload);
    out.payload = to == "vb" ? to_json(semidirect(r)) : to_json(wrep_from_ruth(r));
  } else if (from == "wrep" && to == "vb") {
    out.payload = to_json(action_groupoid(wrep_from_json(inst.payload)));
  } else if (from == "wrep") {
    const WeakRepresentation w = wrep_from_json(inst.payload);
    const Ruth r = ruth_from_wrep(w);
    out.payload = to_json(r);
    const Splitting sp = split_bundle(w.bundle);
    const WeakRepresentation split = transport_wrep(w, sp.to_phi.on_objects, sp.to_phi.on_arrows);
    const EquivariantMap e = fiber_iso_equivariant(split, sp.to_phi.on_objects, sp.to_phi.on_arrows);
    if (validate_ruth(r).ok()) {
      const WeakRepresentation image = wrep_from_ruth(r);
      expect(c.report, split == image, "witness:target", "wrep_from_ruth(output)");
      c.report.merge(validate_equivariant(w, image, e), "witness:");
      expect(c.report, is_isomorphism(e), "witness:invertible");
    }
    out.metadata["witness"] = {{"kind", "equivariant"}, {"source", "input"}, {"target", "wrep_from_ruth(output)"},
                               {"map", to_json(w.groupoid, e)}};
  } else {
    const VBGroupoid v = vb_from_json(inst.payload);
    const KernelRepresentation k = vb_to_wrep(v);
    out.payload = to_json(k.rep);
    expect_iso(c.report, v, action_groupoid(k.rep), k.to_action, "witness");
    out.metadata["connection"] = to_json(v.base, k.connection);
    out.metadata["witness"] = {{"kind", "vb-map"}, {"source", "input"}, {"target", "action_groupoid(output)"},
                               {"map", to_json(v.base, k.to_action)}};
  }
  c.report.merge(validate_instance(out), "output:");
  c.output = std::move(out);
  return c;
}

const std::vector<std::string>& pipeline_names() {
  static const std::vector<std::string> names{"ruth-vb", "vb-wrep", "wrep-ruth", "triangle", "phi-hom", "act-ff"};
  return names;
}

TrialReport run_roundtrip(const std::string& pipeline, int trials, std::uint64_t seed, const RandomBounds& bounds,
                          const std::optional<Instance>& input) {
  const auto& names = pipeline_names();
  if (std::find(names.begin(), names.end(), pipeline) == names.end()) throw UsageError("unknown pipeline '" + pipeline + "'");
  if (trials < 0) throw UsageError("trials must be non-negative");
  const bool wants_vb = pipeline == "vb-wrep";
  const bool wants_complex = pipeline == "phi-hom";

  TrialReport out;
  if (input) {
    const bool fits = wants_vb ? input->kind == "vb" : (input->kind == "ruth" || (wants_complex && input->kind == "complex"));
    if (!fits) throw UsageError("pipeline " + pipeline + " cannot start from kind '" + input->kind + "'");
    out.report.merge(validate_instance(*input), "input:");
    if (!out.report.ok()) return out;
  }

  Rng master(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng(master.next());
    Report rep;
    Lap lap{rng, bounds, rep};
    try {
      if (wants_vb) {
        lap_vb_wrep(input ? vb_from_json(input->payload) : random_vb(rng, bounds), lap);
      } else if (wants_complex) {
        TwoTermComplex c;
        if (!input) c = random_ruth(rng, bounds).complex;
        else if (input->kind == "complex") c = complex_from_json(input->payload);
        else c = ruth_from_json(input->payload).complex;
        lap_phi_hom(c, lap);
      } else {
        const Ruth r = input ? ruth_from_json(input->payload) : random_ruth(rng, bounds);
        if (pipeline == "ruth-vb") lap_ruth_vb(r, lap);
        if (pipeline == "wrep-ruth") lap_wrep_ruth(r, lap);
        if (pipeline == "triangle") lap_triangle(r, lap);
        if (pipeline == "act-ff") lap_act_ff(r, lap);
      }
    } catch (const Error& e) {
      rep.add("exception", "", "no exception", e.what());
    }
    ++out.trials;
    if (rep.ok()) ++out.passed;
    for (auto v : rep.violations) {
      v.location = "trial " + std::to_string(t) + (v.location.empty() ? "" : " " + v.location);
      out.report.violations.push_back(std::move(v));
    }
  }
  return out;
}

FuzzReport run_fuzz(int trials, std::uint64_t seed, const RandomBounds& bounds) {
  if (trials < 0) throw UsageError("trials must be non-negative");
  static const std::vector<std::string> kinds{"groupoid", "ruth", "vb", "wrep"};
  std::map<std::string, FuzzStats> stats;
  FuzzReport out;
  Rng master(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng(master.next());
    const std::string& kind = kinds[static_cast<std::size_t>(t) % kinds.size()];
    const bool control = t % 10 == 9;
    const std::string where = "trial " + std::to_string(t) + " " + kind;
    FuzzStats st;
    if (kind == "groupoid") {
      FiniteGroupoid g = random_groupoid(rng, bounds);
      while (g.arrow_count() < 2) g = random_groupoid(rng, bounds);
      st = fuzz_one<FiniteGroupoid>({g, validate_groupoid, groupoid_oracle, mutate_compose}, rng, control, where, out);
    } else if (kind == "ruth") {
      auto mutate = [](Ruth& r, Rng& g, bool noop) { return mutate_entry(r, g, noop); };
      st = fuzz_one<Ruth>({random_ruth(rng, bounds), validate_ruth, ruth_oracle, mutate}, rng, control, where, out);
    } else if (kind == "vb") {
      auto mutate = [](VBGroupoid& v, Rng& g, bool noop) { return mutate_entry(v, g, noop); };
      st = fuzz_one<VBGroupoid>({random_vb(rng, bounds), validate_vb, vb_oracle, mutate}, rng, control, where, out);
    } else {
      const WeakRepresentation w = wrep_from_ruth(random_ruth(rng, bounds));
      const auto q = random_isos(rng, w.bundle.objdim), p = random_isos(rng, w.bundle.arrdim);
      auto mutate = [](WeakRepresentation& x, Rng& g, bool noop) { return mutate_entry(x, g, noop); };
      st = fuzz_one<WeakRepresentation>({transport_wrep(w, q, p), validate_wrep, wrep_oracle, mutate}, rng, control, where, out);
    }
    add_stats(stats[kind], st);
    add_stats(out.total, st);
  }
  for (const auto& k : kinds)
    if (stats.contains(k)) out.by_kind.emplace_back(k, stats[k]);
  return out;
}

Json validate_json(const Instance& inst, const Report& r) {
  return {{"verb", "validate"}, {"kind", inst.kind}, {"verdict", r.ok() ? "pass" : "fail"}, {"violations", violations_json(r)}};
}

Json convert_json(const std::string& from, const std::string& to, const Conversion& c) {
  return {{"verb", "convert"},
          {"from", from},
          {"to", to},
          {"verdict", c.report.ok() && c.output ? "pass" : "fail"},
          {"violations", violations_json(c.report)}};
}

Json roundtrip_json(const std::string& pipeline, std::uint64_t seed, const TrialReport& t) {
  return {{"verb", "roundtrip"}, {"pipeline", pipeline},   {"seed", seed},
          {"trials", t.trials},  {"passed", t.passed},     {"verdict", t.report.ok() ? "pass" : "fail"},
          {"violations", violations_json(t.report)}};
}

Json fuzz_json(std::uint64_t seed, const FuzzReport& f) {
  const FuzzStats& s = f.total;
  const bool pass = s.missed == 0 && s.false_alarms == 0 && s.control_failures == 0 && s.generator_failures == 0;
  Json by_kind = Json::object();
  for (const auto& [k, st] : f.by_kind) by_kind[k] = stats_json(st);
  return {{"verb", "fuzz"},        {"seed", seed},         {"stats", stats_json(s)},
          {"by_kind", by_kind},    {"equivalent_mutants", f.equivalent},
          {"verdict", pass ? "pass" : "fail"}, {"violations", violations_json(f.report)}};
}

bool report_passed(const Json& report) {
  if (!report.is_object() || !report.contains("verdict") || !report.at("verdict").is_string())
    throw ParseError("report has no verdict");
  const auto v = report.at("verdict").get<std::string>();
  if (v != "pass" && v != "fail") throw ParseError("verdict must be pass or fail");
  return v == "pass";
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  std::function<void(const std::string&, const Json&)> scalar_lines = [&](const std::string& prefix, const Json& j) {
    for (const auto& [k, v] : j.items()) {
      if (k == "violations" || k == "verdict") continue;
      if (v.is_object()) {
        scalar_lines(prefix + k + ".", v);
      } else if (v.is_array()) {
        os << prefix << k << " (" << v.size() << "):\n";
        for (const auto& e : v) os << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      } else os << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  os << "verdict: " << (report_passed(report) ? "pass" : "fail") << "\n";
  scalar_lines("", report);
  if (report.contains("violations") && !report.at("violations").empty()) {
    os << "violations (" << report.at("violations").size() << "):\n";
    for (const auto& v : report.at("violations")) {
      os << "  " << v.value("check", "") << " at " << v.value("location", "");
      const auto expected = v.value("expected", ""), actual = v.value("actual", "");
      if (!expected.empty() || !actual.empty()) os << ": expected " << expected << ", got " << actual;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace wrep
