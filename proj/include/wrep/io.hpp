#pragma once

// JSON forms of every instance kind. Rationals are strings "p/q" (integers
// may also be given as JSON numbers); matrices are
// {"rows": r, "cols": c, "entries": [row-major rationals]}; per-object and
// per-arrow tables are objects keyed by identifier; per-pair tables are lists
// of {"g": .., "h": .., "map": matrix}.

#include <string>

#include <json.hpp>

#include "wrep/complex.hpp"
#include "wrep/groupoid.hpp"
#include "wrep/linear.hpp"
#include "wrep/report.hpp"
#include "wrep/ruth.hpp"
#include "wrep/semidirect.hpp"
#include "wrep/vb.hpp"
#include "wrep/wrep.hpp"

namespace wrep {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Matrix& m);
Json to_json(const FiniteGroupoid& g);
Json to_json(const TwoTermComplex& c);
Json to_json(const Ruth& r);
/// The groupoid is not embedded; tables are keyed by identifiers of g.
Json to_json(const FiniteGroupoid& g, const RuthMorphism& m);
Json to_json(const VBGroupoid& v);
/// Maps over identity base maps; keyed by identifiers of g.
Json to_json(const FiniteGroupoid& g, const VBMap& f);
Json to_json(const FiniteGroupoid& g, const Connection& c);
Json to_json(const WeakRepresentation& w);
Json to_json(const FiniteGroupoid& g, const EquivariantMap& e);
Json to_json(const Report& r);

// All parsers throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
FiniteGroupoid groupoid_from_json(const Json& j);
TwoTermComplex complex_from_json(const Json& j);
Ruth ruth_from_json(const Json& j);
RuthMorphism ruth_morphism_from_json(const FiniteGroupoid& g, const Json& j);
VBGroupoid vb_from_json(const Json& j);
VBMap vb_map_from_json(const FiniteGroupoid& g, const Json& j);
WeakRepresentation wrep_from_json(const Json& j);
EquivariantMap equivariant_from_json(const FiniteGroupoid& g, const Json& j);

/// {"kind": .., "payload": .., "metadata": {..}}. Kinds: groupoid, complex,
/// ruth, vb, wrep, morphism ({source, target, map} of Ruths), equivariant
/// ({source, target, map} of weak representations).
struct Instance {
  std::string kind;
  Json payload;
  Json metadata = Json::object();
};

Instance parse_instance(const std::string& text);
Instance read_instance(const std::string& path);
std::string dump_instance(const Instance& inst);
void write_instance(const std::string& path, const Instance& inst);

}  // namespace wrep
