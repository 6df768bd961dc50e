#pragma once

// Single-field mutations and validity oracles that do not go through the
// validators they are used to audit.

#include <string>

#include "wrep/generate.hpp"
#include "wrep/groupoid.hpp"
#include "wrep/ruth.hpp"
#include "wrep/vb.hpp"
#include "wrep/wrep.hpp"

namespace wrep {

/// Shapes, unitality, normalization and D² = 0 on total degrees 0–2.
bool ruth_oracle(const Ruth& r);

/// Evaluates the fiberwise groupoid axioms on spanning sets of the fibered
/// products built from solutions of t̃ b = s̃ a, rather than on the stored bases.
bool vb_oracle(const VBGroupoid& v);

/// w is valid iff, written in the splitting of its bundle, it equals
/// wrep_from_ruth of a Ruth accepted by ruth_oracle.
bool wrep_oracle(const WeakRepresentation& w);

/// Composite endpoints and left/right cancellation. A single changed
/// composition-table entry always breaks one of these.
bool groupoid_oracle(const FiniteGroupoid& g);

struct Mutation {
  std::string field;     // e.g. "lambda0", "alpha", "compose"
  std::string location;  // e.g. "g (0,1)", "(g,h)"
  bool noop = false;
};

/// Adds a nonzero integer in [-2, 2] to one uniformly chosen matrix entry
/// (0 when noop). Returns nullopt when there is no entry to mutate.
std::optional<Mutation> mutate_entry(Ruth& r, Rng& rng, bool noop);
std::optional<Mutation> mutate_entry(VBGroupoid& v, Rng& rng, bool noop);
std::optional<Mutation> mutate_entry(WeakRepresentation& w, Rng& rng, bool noop);
/// Redirects one composition-table entry to a different arrow (unchanged when noop).
std::optional<Mutation> mutate_compose(FiniteGroupoid& g, Rng& rng, bool noop);

}  // namespace wrep
