// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// rational equalities; the instance counts below are the pinned minimums.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "wrep/cochain.hpp"
#include "wrep/errors.hpp"
#include "wrep/fuzz.hpp"
#include "wrep/generate.hpp"
#include "wrep/harness.hpp"
#include "wrep/phi.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/wrep.hpp"

using namespace wrep;

namespace {

constexpr int kInstances = 100;
constexpr int kMutations = 500;
constexpr int kFuzzTrials = 560;  // every tenth trial is a no-op control
const RandomBounds kBounds{4, 12, 3};

struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  bool ok(int minimum) const { return failed == 0 && checked >= minimum; }
  std::string summary() const {
    return std::to_string(checked - failed) + "/" + std::to_string(checked) + (failed ? ", first: " + first_failure : "");
  }
};

std::vector<std::pair<std::string, Ruth>> fixture_ruths() {
  Rng rng(102);
  const Ruth strict = strict_ruth(pair_groupoid(), rng, 2);
  const GaugeData d = random_gauge(strict, rng);
  return {{"z2-ruth-0", z2_ruth(0)}, {"z2-ruth-1", z2_ruth(1)}, {"pair-ruth", gauge_transport(strict, d.phi0, d.phi1, d.mu).source}};
}

std::vector<Ruth> random_ruths(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Ruth> out;
  for (int i = 0; i < kInstances; ++i) out.push_back(random_ruth(rng, kBounds));
  return out;
}

bool iso_ok(const VBGroupoid& v, const VBGroupoid& w, const VBMap& f) {
  return validate_vb_map(v, w, f).ok() && is_fiberwise_invertible(f);
}

// Runs body, turning library exceptions into a failed check.
void guarded(Tally& t, const std::string& where, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    t.expect(false, where + ": " + e.what());
  }
}

bool criterion(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << detail << ")" << std::endl;
  return pass;
}

bool c1(const std::vector<Ruth>& ruths) {
  Tally valid, mutants;
  for (const auto& [name, r] : fixture_ruths()) valid.expect(check_d_squared(r).ok(), name);
  for (std::size_t i = 0; i < ruths.size(); ++i) valid.expect(check_d_squared(ruths[i]).ok(), "random " + std::to_string(i));
  Rng rng(1001);
  int attempts = 0;
  while (mutants.checked < kInstances && attempts++ < 20 * kInstances) {
    Ruth m = ruths[static_cast<std::size_t>(attempts) % ruths.size()];
    const auto mut = mutate_entry(m, rng, false);
    if (!mut) continue;
    const Report rep = validate_ruth(m);
    bool identity = false;
    for (int k = 1; k <= 4; ++k) identity = identity || rep.mentions("identity(" + std::to_string(k) + ")");
    if (!identity) continue;
    mutants.expect(!check_d_squared(m).ok(), mut->field + " " + mut->location);
  }
  return criterion(1, "RUTH <=> D^2 = 0", valid.ok(kInstances + 2) && mutants.ok(kInstances),
                   "valid " + valid.summary() + "; identity-breaking mutants detected " + mutants.summary());
}

bool c2() {
  Tally t;
  Rng rng(1002);
  for (int i = 0; i < kInstances; ++i) {
    guarded(t, "trial " + std::to_string(i), [&] {
      const auto base = random_groupoid(rng, kBounds).object_names();
      const TwoTermComplex c = random_complex(rng, base, kBounds.max_dim), d = random_complex(rng, base, kBounds.max_dim);
      const ChainMap f = random_chain_map(rng, c, d);
      t.expect(extract_chain_map(c, d, phi_onemorphism(f)) == f, "chain map " + std::to_string(i));
      const ChainHomotopy h = random_homotopy_from(rng, c, d, f);
      t.expect(extract_homotopy(c, d, h.from, h.to, phi_twomorphism(h)) == h, "homotopy " + std::to_string(i));
      const Splitting sp = split_bundle(phi_object(c));
      t.expect(sp.complex == c && sp.to_phi == identity_vb_map(phi_object(c)), "split " + std::to_string(i));
    });
  }
  return criterion(2, "Phi is an isomorphism on Hom categories", t.ok(3 * kInstances), t.summary());
}

bool c3() {
  Tally t;
  Rng rng(1003);
  for (int i = 0; i < kInstances; ++i) {
    guarded(t, "trial " + std::to_string(i), [&] {
      const auto base = random_groupoid(rng, kBounds).object_names();
      const TwoTermComplex c = random_complex(rng, base, kBounds.max_dim), d = random_complex(rng, base, kBounds.max_dim),
                           e = random_complex(rng, base, kBounds.max_dim);
      const ChainHomotopy psi = random_homotopy_from(rng, c, d, random_chain_map(rng, c, d));
      const ChainHomotopy phi = random_homotopy_from(rng, c, d, psi.to);
      const ChainHomotopy omega = random_homotopy_from(rng, d, e, random_chain_map(rng, d, e));
      const ChainHomotopy chi = random_homotopy_from(rng, d, e, omega.to);
      t.expect(check_interchange(c, d, e, psi, phi, omega, chi), "quadruple " + std::to_string(i));
    });
  }
  return criterion(3, "interchange law", t.ok(kInstances), t.summary());
}

bool c4(const std::vector<Ruth>& ruths) {
  Tally valid, functorial;
  for (const auto& [name, r] : fixture_ruths()) valid.expect(validate_vb(semidirect(r)).ok(), name);
  Rng rng(1004);
  for (std::size_t i = 0; i < ruths.size(); ++i) {
    const Ruth& r = ruths[i];
    const std::string at = "random " + std::to_string(i);
    guarded(valid, at, [&] { valid.expect(validate_vb(semidirect(r)).ok(), at); });
    guarded(functorial, at, [&] {
      const GaugeResult a = random_morphism_into(r, rng);
      const GaugeResult b = random_morphism_into(a.source, rng);
      const VBMap composite = psi_morphism(b.source, r, compose_morphisms(r.groupoid, a.morphism, b.morphism));
      functorial.expect(composite == compose(psi_morphism(a.source, r, a.morphism), psi_morphism(b.source, a.source, b.morphism)), at);
    });
  }
  return criterion(4, "semi-direct product validity and Psi functoriality", valid.ok(kInstances + 3) && functorial.ok(kInstances),
                   "valid " + valid.summary() + "; functorial " + functorial.summary());
}

bool c5(const std::vector<Ruth>& ruths) {
  Tally t;
  for (const auto& [name, r] : fixture_ruths()) t.expect(validate_vb(action_groupoid(wrep_from_ruth(r))).ok(), name);
  for (std::size_t i = 0; i < ruths.size(); ++i) {
    const std::string at = "random " + std::to_string(i);
    guarded(t, at, [&] { t.expect(validate_vb(action_groupoid(wrep_from_ruth(ruths[i]))).ok(), at); });
  }
  return criterion(5, "action groupoid validity", t.ok(kInstances + 3), t.summary());
}

bool c6() {
  Tally witness, connections;
  Rng rng(1006);
  for (int i = 0; i < kInstances; ++i) {
    const std::string at = "vb " + std::to_string(i);
    guarded(witness, at, [&] {
      const VBGroupoid v = random_vb(rng, kBounds);
      const KernelRepresentation k = vb_to_wrep(v);
      witness.expect(validate_wrep(k.rep).ok() && iso_ok(v, action_groupoid(k.rep), k.to_action), at);
      const Connection other = random_connection(v, k.connection, rng);
      const KernelRepresentation k2 = vb_to_wrep(v, other);
      const EquivariantMap e = compare_kernel_representations(k, k2);
      connections.expect(validate_equivariant(k.rep, k2.rep, e).ok() && is_isomorphism(e), at);
    });
  }
  return criterion(6, "essential surjectivity", witness.ok(kInstances) && connections.ok(kInstances),
                   "witness " + witness.summary() + "; two connections " + connections.summary());
}

bool c7(const std::vector<Ruth>& ruths) {
  Tally t;
  Rng rng(1007);
  for (std::size_t i = 0; i < ruths.size(); ++i) {
    const std::string at = "map " + std::to_string(i);
    guarded(t, at, [&] {
      const Ruth& r = ruths[i];
      const WeakRepresentation w = wrep_from_ruth(r);
      const GaugeResult a = random_morphism_into(r, rng);
      const WeakRepresentation wa = wrep_from_ruth(a.source);
      const auto q = random_isos(rng, w.bundle.objdim), p = random_isos(rng, w.bundle.arrdim);
      const WeakRepresentation s = transport_wrep(w, q, p);
      const EquivariantMap e =
          compose_equivariant(s, fiber_iso_equivariant(s, q, p), equivariant_from_ruth_morphism(a.source, r, a.morphism));
      const VBMap f = act_on_morphism(wa, s, e);
      t.expect(reconstruct_equivariant(wa, s, f) == e, at + " reconstruct after act");
      const VBMap g = compose(inverse(triangle_iso(r)), compose(psi_morphism(a.source, r, a.morphism), triangle_iso(a.source)));
      t.expect(act_on_morphism(wa, w, reconstruct_equivariant(wa, w, g)) == g, at + " act after reconstruct");
    });
  }
  return criterion(7, "full faithfulness", t.ok(2 * kInstances), t.summary());
}

bool c8(const std::vector<Ruth>& ruths) {
  Tally t;
  auto check = [&](const Ruth& r, const std::string& at) {
    guarded(t, at, [&] { t.expect(iso_ok(action_groupoid(wrep_from_ruth(r)), semidirect(r), triangle_iso(r)), at); });
  };
  for (const auto& [name, r] : fixture_ruths()) check(r, name);
  for (std::size_t i = 0; i < ruths.size(); ++i) check(ruths[i], "random " + std::to_string(i));
  return criterion(8, "triangle: semidirect(r) ~ action_groupoid(wrep_from_ruth(r))", t.ok(kInstances + 3), t.summary());
}

bool c9() {
  const FuzzReport f = run_fuzz(kFuzzTrials, 1, kBounds);
  const FuzzStats& s = f.total;
  const bool pass = s.mutations >= kMutations && s.missed == 0 && s.false_alarms == 0 && s.control_failures == 0 &&
                    s.generator_failures == 0;
  return criterion(9, "mutation kill rate",
                   pass,
                   "killed " + std::to_string(s.killed) + "/" + std::to_string(s.killed + s.missed) + " of " +
                       std::to_string(s.mutations) + " mutations, " + std::to_string(s.equivalent) +
                       " equivalent, " + std::to_string(s.false_alarms) + " false alarms, " +
                       std::to_string(s.controls - s.control_failures) + "/" + std::to_string(s.controls) + " controls");
}

}  // namespace

int main() {
  const std::vector<Ruth> ruths = random_ruths(1000);
  int failed = 0;
  failed += !c1(ruths);
  failed += !c2();
  failed += !c3();
  failed += !c4(ruths);
  failed += !c5(ruths);
  failed += !c6();
  failed += !c7(ruths);
  failed += !c8(ruths);
  failed += !c9();
  std::cout << (failed ? "FAIL" : "PASS") << " " << 9 - failed << "/9 criteria" << std::endl;
  return failed ? 1 : 0;
}
