#include "wrep/io.hpp"

#include <fstream>
#include <sstream>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError("expected an object holding '" + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "'");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

std::string string_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

// {name: value} over the given names, in order.
template <class T, class F>
std::vector<T> keyed(const Json& j, const std::vector<std::string>& names, const std::string& what, F parse) {
  if (!j.is_object()) throw ParseError(what + " must be an object keyed by identifier");
  if (j.size() != names.size()) throw ParseError(what + " must have exactly one entry per identifier");
  std::vector<T> out;
  for (const auto& n : names) {
    const auto it = j.find(n);
    if (it == j.end()) throw ParseError(what + " has no entry for '" + n + "'");
    out.push_back(parse(*it));
  }
  return out;
}

std::vector<Matrix> keyed_matrices(const Json& j, const std::vector<std::string>& names, const std::string& what) {
  return keyed<Matrix>(j, names, what, [](const Json& m) { return matrix_from_json(m); });
}

std::vector<std::size_t> keyed_sizes(const Json& j, const std::vector<std::string>& names, const std::string& what) {
  return keyed<std::size_t>(j, names, what, [&](const Json& m) { return size_from_json(m, what); });
}

template <class T, class F>
Json keyed_json(const std::vector<std::string>& names, const std::vector<T>& values, F convert) {
  Json j = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = convert(values.at(i));
  return j;
}

Json keyed_json(const std::vector<std::string>& names, const std::vector<Matrix>& values) {
  return keyed_json(names, values, [](const Matrix& m) { return to_json(m); });
}

Json pair_table_json(const FiniteGroupoid& g, const std::map<ArrowPair, Matrix>& table) {
  Json j = Json::array();
  for (const auto& [p, m] : table) j.push_back({{"g", g.arrow_name(p.first)}, {"h", g.arrow_name(p.second)}, {"map", to_json(m)}});
  return j;
}

std::map<ArrowPair, Matrix> pair_table_from_json(const FiniteGroupoid& g, const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list of {g, h, map}");
  std::map<ArrowPair, Matrix> out;
  for (const auto& e : j) {
    const int a = g.arrow_index(string_from_json(field(e, "g"), what + ".g"));
    const int b = g.arrow_index(string_from_json(field(e, "h"), what + ".h"));
    if (!out.emplace(ArrowPair{a, b}, matrix_from_json(field(e, "map"))).second)
      throw ParseError(what + " lists (" + g.arrow_name(a) + "," + g.arrow_name(b) + ") twice");
  }
  return out;
}

template <class F>
auto guarded(F parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const StructureError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const auto& q : m.entries()) entries.push_back(to_json(q));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const FiniteGroupoid& g) {
  const GroupoidTables t = g.to_tables();
  Json arrows = Json::array();
  for (const auto& a : t.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  Json units = Json::object();
  for (const auto& x : t.objects) units[x] = t.units.at(x);
  Json compose = Json::array();
  for (const auto& [a, b, c] : t.compose) compose.push_back({a, b, c});
  Json inverse = Json::object();
  for (const auto& a : t.arrows) inverse[a.id] = t.inverse.at(a.id);
  return {{"objects", t.objects}, {"arrows", arrows}, {"units", units}, {"compose", compose}, {"inverse", inverse}};
}

Json to_json(const TwoTermComplex& c) { return {{"base", c.base}, {"diff", keyed_json(c.base, c.diff)}}; }

Json to_json(const Ruth& r) {
  const auto& names = r.groupoid.arrow_names();
  return {{"groupoid", to_json(r.groupoid)},
          {"complex", to_json(r.complex)},
          {"lambda0", keyed_json(names, r.lambda0)},
          {"lambda1", keyed_json(names, r.lambda1)},
          {"omega", pair_table_json(r.groupoid, r.omega)}};
}

Json to_json(const FiniteGroupoid& g, const RuthMorphism& m) {
  return {{"phi0", keyed_json(g.object_names(), m.phi0)},
          {"phi1", keyed_json(g.object_names(), m.phi1)},
          {"mu", keyed_json(g.arrow_names(), m.mu)}};
}

Json to_json(const VBGroupoid& v) {
  const auto& objects = v.base.object_names();
  const auto& arrows = v.base.arrow_names();
  auto size = [](std::size_t n) { return Json(n); };
  return {{"groupoid", to_json(v.base)},
          {"objdim", keyed_json(objects, v.objdim, size)},
          {"arrdim", keyed_json(arrows, v.arrdim, size)},
          {"source", keyed_json(arrows, v.source)},
          {"target", keyed_json(arrows, v.target)},
          {"unit", keyed_json(objects, v.unit)},
          {"inverse", keyed_json(arrows, v.inverse)},
          {"mult", pair_table_json(v.base, v.mult)}};
}

Json to_json(const FiniteGroupoid& g, const VBMap& f) {
  return {{"on_objects", keyed_json(g.object_names(), f.on_objects)}, {"on_arrows", keyed_json(g.arrow_names(), f.on_arrows)}};
}

Json to_json(const FiniteGroupoid& g, const Connection& c) { return keyed_json(g.arrow_names(), c.sigma); }

Json to_json(const WeakRepresentation& w) {
  const auto& arrows = w.groupoid.arrow_names();
  return {{"groupoid", to_json(w.groupoid)},
          {"bundle", to_json(w.bundle)},
          {"a0", keyed_json(arrows, w.a0)},
          {"a1", keyed_json(arrows, w.a1)},
          {"alpha", pair_table_json(w.groupoid, w.alpha)}};
}

Json to_json(const FiniteGroupoid& g, const EquivariantMap& e) {
  return {{"f0", keyed_json(g.object_names(), e.f0)},
          {"f1", keyed_json(g.object_names(), e.f1)},
          {"delta", keyed_json(g.arrow_names(), e.delta)}};
}

Json to_json(const Report& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"check", v.check}, {"location", v.location}, {"expected", v.expected}, {"actual", v.actual}});
  return {{"verdict", r.ok() ? "pass" : "fail"}, {"violations", violations}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Matrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const std::size_t rows = size_from_json(field(j, "rows"), "rows"), cols = size_from_json(field(j, "cols"), "cols");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols)
      throw ParseError("matrix entries must be a list of rows*cols rationals");
    std::vector<Rational> values;
    for (const auto& e : entries) values.push_back(rational_from_json(e));
    return Matrix(rows, cols, std::move(values));
  });
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  return guarded([&] {
    GroupoidTables t;
    const Json& objects = field(j, "objects");
    if (!objects.is_array()) throw ParseError("objects must be a list");
    for (const auto& o : objects) t.objects.push_back(string_from_json(o, "object"));
    const Json& arrows = field(j, "arrows");
    if (!arrows.is_array()) throw ParseError("arrows must be a list");
    for (const auto& a : arrows)
      t.arrows.push_back({string_from_json(field(a, "id"), "arrow id"), string_from_json(field(a, "src"), "arrow src"),
                          string_from_json(field(a, "tgt"), "arrow tgt")});
    for (const auto& [k, v] : field(j, "units").items()) t.units[k] = string_from_json(v, "unit");
    const Json& compose = field(j, "compose");
    if (!compose.is_array()) throw ParseError("compose must be a list of [g1, g2, g1∘g2]");
    for (const auto& c : compose) {
      if (!c.is_array() || c.size() != 3) throw ParseError("compose entries must be [g1, g2, g1∘g2]");
      t.compose.emplace_back(string_from_json(c[0], "compose"), string_from_json(c[1], "compose"),
                             string_from_json(c[2], "compose"));
    }
    for (const auto& [k, v] : field(j, "inverse").items()) t.inverse[k] = string_from_json(v, "inverse");
    return FiniteGroupoid::from_tables(t);
  });
}

TwoTermComplex complex_from_json(const Json& j) {
  return guarded([&] {
    TwoTermComplex c;
    const Json& base = field(j, "base");
    if (!base.is_array()) throw ParseError("complex base must be a list");
    for (const auto& b : base) c.base.push_back(string_from_json(b, "complex base"));
    c.diff = keyed_matrices(field(j, "diff"), c.base, "diff");
    check_complex(c);
    return c;
  });
}

Ruth ruth_from_json(const Json& j) {
  return guarded([&] {
    Ruth r;
    r.groupoid = groupoid_from_json(field(j, "groupoid"));
    r.complex = complex_from_json(field(j, "complex"));
    const auto& names = r.groupoid.arrow_names();
    r.lambda0 = keyed_matrices(field(j, "lambda0"), names, "lambda0");
    r.lambda1 = keyed_matrices(field(j, "lambda1"), names, "lambda1");
    r.omega = pair_table_from_json(r.groupoid, field(j, "omega"), "omega");
    check_ruth_shapes(r);
    return r;
  });
}

RuthMorphism ruth_morphism_from_json(const FiniteGroupoid& g, const Json& j) {
  return guarded([&] {
    RuthMorphism m;
    m.phi0 = keyed_matrices(field(j, "phi0"), g.object_names(), "phi0");
    m.phi1 = keyed_matrices(field(j, "phi1"), g.object_names(), "phi1");
    m.mu = keyed_matrices(field(j, "mu"), g.arrow_names(), "mu");
    return m;
  });
}

VBGroupoid vb_from_json(const Json& j) {
  return guarded([&] {
    VBGroupoid v;
    v.base = groupoid_from_json(field(j, "groupoid"));
    const auto& objects = v.base.object_names();
    const auto& arrows = v.base.arrow_names();
    v.objdim = keyed_sizes(field(j, "objdim"), objects, "objdim");
    v.arrdim = keyed_sizes(field(j, "arrdim"), arrows, "arrdim");
    v.source = keyed_matrices(field(j, "source"), arrows, "source");
    v.target = keyed_matrices(field(j, "target"), arrows, "target");
    v.unit = keyed_matrices(field(j, "unit"), objects, "unit");
    v.inverse = keyed_matrices(field(j, "inverse"), arrows, "inverse");
    v.mult = pair_table_from_json(v.base, field(j, "mult"), "mult");
    check_vb_shapes(v);
    return v;
  });
}

VBMap vb_map_from_json(const FiniteGroupoid& g, const Json& j) {
  return guarded([&] {
    VBMap f;
    for (int x = 0; x < static_cast<int>(g.object_count()); ++x) f.object_map.push_back(x);
    for (int a = 0; a < static_cast<int>(g.arrow_count()); ++a) f.arrow_map.push_back(a);
    f.on_objects = keyed_matrices(field(j, "on_objects"), g.object_names(), "on_objects");
    f.on_arrows = keyed_matrices(field(j, "on_arrows"), g.arrow_names(), "on_arrows");
    return f;
  });
}

WeakRepresentation wrep_from_json(const Json& j) {
  return guarded([&] {
    WeakRepresentation w;
    w.groupoid = groupoid_from_json(field(j, "groupoid"));
    w.bundle = vb_from_json(field(j, "bundle"));
    const auto& arrows = w.groupoid.arrow_names();
    w.a0 = keyed_matrices(field(j, "a0"), arrows, "a0");
    w.a1 = keyed_matrices(field(j, "a1"), arrows, "a1");
    w.alpha = pair_table_from_json(w.groupoid, field(j, "alpha"), "alpha");
    check_wrep_shapes(w);
    return w;
  });
}

EquivariantMap equivariant_from_json(const FiniteGroupoid& g, const Json& j) {
  return guarded([&] {
    EquivariantMap e;
    e.f0 = keyed_matrices(field(j, "f0"), g.object_names(), "f0");
    e.f1 = keyed_matrices(field(j, "f1"), g.object_names(), "f1");
    e.delta = keyed_matrices(field(j, "delta"), g.arrow_names(), "delta");
    return e;
  });
}

Instance parse_instance(const std::string& text) {
  return guarded([&] {
    const Json j = Json::parse(text);
    Instance inst;
    inst.kind = string_from_json(field(j, "kind"), "kind");
    inst.payload = field(j, "payload");
    if (j.contains("metadata")) inst.metadata = j.at("metadata");
    return inst;
  });
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string dump_instance(const Instance& inst) {
  const Json j{{"kind", inst.kind}, {"payload", inst.payload}, {"metadata", inst.metadata}};
  return j.dump(2) + "\n";
}

void write_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << dump_instance(inst);
}

}  // namespace wrep
