#include "wrep/wrep.hpp"

#include <string>

#include "wrep/errors.hpp"
#include "wrep/phi.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_valid(const Report& r, const std::string& what) {
  if (!r.ok())
    throw ValidationError(what + " is invalid: " + r.violations.front().check + " at " + r.violations.front().location);
}

// Reports the first basis vector on which the two maps differ.
void compare(Report& rep, const std::string& check, const std::string& location, const Matrix& expected,
             const Matrix& actual) {
  if (expected == actual) return;
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    rep.add(check, location, to_string(expected), to_string(actual));
    return;
  }
  for (std::size_t j = 0; j < expected.cols(); ++j) {
    const Matrix e = expected.cols_range(j, 1), a = actual.cols_range(j, 1);
    if (!(e == a)) {
      rep.add(check, location + " basis " + std::to_string(j), to_string(e), to_string(a));
      return;
    }
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw StructureError(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

VBMap over_identity(std::vector<Matrix> on_objects, std::vector<Matrix> on_arrows, std::size_t objects,
                    std::size_t arrows) {
  VBMap f;
  for (std::size_t x = 0; x < objects; ++x) f.object_map.push_back(static_cast<int>(x));
  for (std::size_t a = 0; a < arrows; ++a) f.arrow_map.push_back(static_cast<int>(a));
  f.on_objects = std::move(on_objects);
  f.on_arrows = std::move(on_arrows);
  return f;
}

TwoTermComplex point(const TwoTermComplex& c, int x) { return {{c.base[idx(x)]}, {c.diff[idx(x)]}}; }

ChainMap point_map(const Matrix& f0, const Matrix& f1) { return {{0}, {f0}, {f1}}; }

// Reads a fiber map as a chain map between the one-point complexes at x and y.
ChainMap extract_point_map(const TwoTermComplex& c, int x, const TwoTermComplex& d, int y, const Matrix& on_objects,
                           const Matrix& on_arrows) {
  const VBMap f{{0}, {0}, {on_objects}, {on_arrows}};
  return extract_chain_map(point(c, x), point(d, y), f);
}

Matrix first_block(std::size_t n, std::size_t k) { return Matrix::hstack(Matrix::identity(n), Matrix::zero(n, k)); }
Matrix second_block(std::size_t n, std::size_t k) { return Matrix::hstack(Matrix::zero(k, n), Matrix::identity(k)); }

}  // namespace

void check_wrep_shapes(const WeakRepresentation& w) {
  const auto& G = w.groupoid;
  const auto& V = w.bundle;
  if (!is_over_trivial_base(V) || V.base.object_names() != G.object_names())
    throw StructureError("bundle must live over the trivial groupoid on the objects of G");
  check_vb_shapes(V);
  const std::size_t na = G.arrow_count();
  if (w.a0.size() != na || w.a1.size() != na) throw StructureError("action tables have wrong length");
  for (int g = 0; g < static_cast<int>(na); ++g) {
    const auto s = idx(G.src(g)), t = idx(G.tgt(g));
    require_shape(w.a0[idx(g)], V.objdim[t], V.objdim[s], "a0 at " + G.arrow_name(g));
    require_shape(w.a1[idx(g)], V.arrdim[t], V.arrdim[s], "a1 at " + G.arrow_name(g));
  }
  std::size_t pairs = 0;
  for (int g = 0; g < static_cast<int>(na); ++g)
    for (int h = 0; h < static_cast<int>(na); ++h) {
      if (!G.composable(g, h)) continue;
      ++pairs;
      const auto it = w.alpha.find({g, h});
      if (it == w.alpha.end()) throw StructureError("alpha missing at " + tuple_label(G, {g, h}));
      require_shape(it->second, V.arrdim[idx(G.tgt(g))], V.objdim[idx(G.src(h))], "alpha at " + tuple_label(G, {g, h}));
    }
  if (w.alpha.size() != pairs) throw StructureError("alpha has entries at non-composable pairs");
}

Report validate_wrep(const WeakRepresentation& w) {
  Report rep;
  const auto& G = w.groupoid;
  rep.merge(validate_groupoid(G), "groupoid:");
  if (!rep.ok()) return rep;
  check_wrep_shapes(w);
  const auto& V = w.bundle;
  rep.merge(validate_vb(V), "bundle:");
  if (!rep.ok()) return rep;
  const FiberedProducts fp(V);
  const int na = static_cast<int>(G.arrow_count());

  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const auto u = idx(G.unit(x));
    if (!w.a0[u].is_identity()) rep.add("unitality", G.arrow_name(G.unit(x)) + " (a0)", "identity", to_string(w.a0[u]));
    if (!w.a1[u].is_identity()) rep.add("unitality", G.arrow_name(G.unit(x)) + " (a1)", "identity", to_string(w.a1[u]));
  }
  for (int g = 0; g < na; ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix& a0 = w.a0[idx(g)];
    const Matrix& a1 = w.a1[idx(g)];
    const std::string at = "(" + G.arrow_name(g) + ")";
    compare(rep, "functor-source", at, a0 * V.source[idx(s)], V.source[idx(t)] * a1);
    compare(rep, "functor-target", at, a0 * V.target[idx(s)], V.target[idx(t)] * a1);
    compare(rep, "functor-unit", at, V.unit[idx(t)] * a0, a1 * V.unit[idx(s)]);
    compare(rep, "functor-inverse", at, V.inverse[idx(t)] * a1, a1 * V.inverse[idx(s)]);
    const Matrix& basis = fp.basis(s, s);
    const std::size_t m = V.arrdim[idx(s)];
    const auto prod = multiply_maps(V, fp, t, t, a1 * basis.rows_range(0, m), a1 * basis.rows_range(m, m));
    if (!prod)
      rep.add("functor-multiplication", at, "composable images", "not composable");
    else
      compare(rep, "functor-multiplication", at, *prod, a1 * V.mult.at({s, s}));
  }

  bool endpoints_ok = true;
  for (const auto& [p, a] : w.alpha) {
    const auto [g, h] = p;
    const int gh = G.compose(g, h), t = G.tgt(g), s = G.src(h);
    const std::string at = tuple_label(G, {g, h});
    const std::size_t before = rep.violations.size();
    compare(rep, "alpha-source", at, w.a0[idx(g)] * w.a0[idx(h)], V.source[idx(t)] * a);
    compare(rep, "alpha-target", at, w.a0[idx(gh)], V.target[idx(t)] * a);
    if (rep.violations.size() != before) {
      endpoints_ok = false;
      continue;
    }
    if (G.is_unit(g) || G.is_unit(h)) compare(rep, "alpha-unit", at, V.unit[idx(t)] * w.a0[idx(gh)], a);
    const auto lhs = multiply_maps(V, fp, t, t, a * V.target[idx(s)], w.a1[idx(g)] * w.a1[idx(h)]);
    const auto rhs = multiply_maps(V, fp, t, t, w.a1[idx(gh)], a * V.source[idx(s)]);
    if (lhs && rhs)
      compare(rep, "alpha-naturality", at, *rhs, *lhs);
    else
      rep.add("alpha-naturality", at, "composable", "not composable");
  }
  if (!endpoints_ok) return rep;

  for (const auto& [p, a_kl] : w.alpha) {
    const auto [k, l] = p;
    for (int g = 0; g < na; ++g) {
      if (!G.composable(g, k)) continue;
      const int t = G.tgt(g);
      const auto lhs = multiply_maps(V, fp, t, t, w.alpha.at({g, G.compose(k, l)}), w.a1[idx(g)] * a_kl);
      const auto rhs = multiply_maps(V, fp, t, t, w.alpha.at({G.compose(g, k), l}), w.alpha.at({g, k}) * w.a0[idx(l)]);
      const std::string at = tuple_label(G, {g, k, l});
      if (lhs && rhs)
        compare(rep, "pentagon", at, *rhs, *lhs);
      else
        rep.add("pentagon", at, "composable", "not composable");
    }
  }
  return rep;
}

void check_equivariant_shapes(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e) {
  if (!(v.groupoid == w.groupoid)) throw StructureError("equivariant map between representations of different groupoids");
  const auto& G = v.groupoid;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (e.f0.size() != no || e.f1.size() != no || e.delta.size() != na)
    throw StructureError("equivariant map tables have wrong length");
  for (int x = 0; x < static_cast<int>(no); ++x) {
    require_shape(e.f0[idx(x)], w.bundle.objdim[idx(x)], v.bundle.objdim[idx(x)], "f0 at " + G.object_name(x));
    require_shape(e.f1[idx(x)], w.bundle.arrdim[idx(x)], v.bundle.arrdim[idx(x)], "f1 at " + G.object_name(x));
  }
  for (int g = 0; g < static_cast<int>(na); ++g)
    require_shape(e.delta[idx(g)], w.bundle.arrdim[idx(G.tgt(g))], v.bundle.objdim[idx(G.src(g))],
                  "delta at " + G.arrow_name(g));
}

Report validate_equivariant(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e) {
  Report rep;
  rep.merge(validate_wrep(v), "source:");
  rep.merge(validate_wrep(w), "target:");
  if (!rep.ok()) return rep;
  check_equivariant_shapes(v, w, e);
  const auto& G = v.groupoid;
  const auto& V = v.bundle;
  const auto& W = w.bundle;
  rep.merge(validate_vb_map(V, W, over_identity(e.f0, e.f1, G.object_count(), G.object_count())), "functor:");
  if (!rep.ok()) return rep;
  const FiberedProducts fp(W);

  bool endpoints_ok = true;
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix& d = e.delta[idx(g)];
    const std::string at = "(" + G.arrow_name(g) + ")";
    const std::size_t before = rep.violations.size();
    compare(rep, "delta-source", at, e.f0[idx(t)] * v.a0[idx(g)], W.source[idx(t)] * d);
    compare(rep, "delta-target", at, w.a0[idx(g)] * e.f0[idx(s)], W.target[idx(t)] * d);
    if (rep.violations.size() != before) {
      endpoints_ok = false;
      continue;
    }
    if (G.is_unit(g)) compare(rep, "delta-unit", at, W.unit[idx(t)] * e.f0[idx(s)], d);
    const auto lhs = multiply_maps(W, fp, t, t, d * V.target[idx(s)], e.f1[idx(t)] * v.a1[idx(g)]);
    const auto rhs = multiply_maps(W, fp, t, t, w.a1[idx(g)] * e.f1[idx(s)], d * V.source[idx(s)]);
    if (lhs && rhs)
      compare(rep, "delta-naturality", at, *rhs, *lhs);
    else
      rep.add("delta-naturality", at, "composable", "not composable");
  }
  if (!endpoints_ok) return rep;

  for (const auto& [p, a] : v.alpha) {
    const auto [g, k] = p;
    const int t = G.tgt(g);
    const auto lhs = multiply_maps(W, fp, t, t, e.delta[idx(G.compose(g, k))], e.f1[idx(t)] * a);
    const auto inner = multiply_maps(W, fp, t, t, w.a1[idx(g)] * e.delta[idx(k)], e.delta[idx(g)] * v.a0[idx(k)]);
    const std::string at = tuple_label(G, {g, k});
    if (!lhs || !inner) {
      rep.add("hexagon", at, "composable", "not composable");
      continue;
    }
    const auto rhs = multiply_maps(W, fp, t, t, w.alpha.at(p) * e.f0[idx(G.src(k))], *inner);
    if (rhs)
      compare(rep, "hexagon", at, *rhs, *lhs);
    else
      rep.add("hexagon", at, "composable", "not composable");
  }
  return rep;
}

EquivariantMap identity_equivariant(const WeakRepresentation& w) {
  const auto& G = w.groupoid;
  EquivariantMap e;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    e.f0.push_back(Matrix::identity(w.bundle.objdim[idx(x)]));
    e.f1.push_back(Matrix::identity(w.bundle.arrdim[idx(x)]));
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) e.delta.push_back(w.bundle.unit[idx(G.tgt(g))] * w.a0[idx(g)]);
  return e;
}

EquivariantMap compose_equivariant(const WeakRepresentation& target, const EquivariantMap& e2, const EquivariantMap& e1) {
  const auto& G = target.groupoid;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (e1.f0.size() != no || e2.f0.size() != no || e1.f1.size() != no || e2.f1.size() != no || e1.delta.size() != na ||
      e2.delta.size() != na)
    throw CompositionError("equivariant maps over different groupoids");
  EquivariantMap e;
  for (std::size_t x = 0; x < no; ++x) {
    if (e2.f0[x].cols() != e1.f0[x].rows() || e2.f1[x].cols() != e1.f1[x].rows())
      throw CompositionError("equivariant maps do not compose at " + G.object_name(static_cast<int>(x)));
    e.f0.push_back(e2.f0[x] * e1.f0[x]);
    e.f1.push_back(e2.f1[x] * e1.f1[x]);
  }
  const FiberedProducts fp(target.bundle);
  for (int g = 0; g < static_cast<int>(na); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    if (e2.delta[idx(g)].cols() != e1.f0[idx(s)].rows() || e2.f1[idx(t)].cols() != e1.delta[idx(g)].rows())
      throw CompositionError("equivariance cells do not compose at " + G.arrow_name(g));
    e.delta.push_back(multiply_maps_or_throw(target.bundle, fp, t, t, e2.delta[idx(g)] * e1.f0[idx(s)],
                                             e2.f1[idx(t)] * e1.delta[idx(g)]));
  }
  return e;
}

bool is_isomorphism(const EquivariantMap& e) {
  for (const auto& m : e.f0)
    if (!is_invertible(m)) return false;
  for (const auto& m : e.f1)
    if (!is_invertible(m)) return false;
  return true;
}

WeakRepresentation wrep_from_ruth(const Ruth& r) {
  require_valid(validate_ruth(r), "Ruth");
  const auto& G = r.groupoid;
  WeakRepresentation w;
  w.groupoid = G;
  w.bundle = phi_object(r.complex);
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    w.a0.push_back(r.lambda1[idx(g)]);
    w.a1.push_back(Matrix::block_diagonal(r.lambda0[idx(g)], r.lambda1[idx(g)]));
  }
  for (const auto& [p, m] : r.omega)
    w.alpha[p] = Matrix::vstack(m, r.lambda1[idx(p.first)] * r.lambda1[idx(p.second)]);
  return w;
}

EquivariantMap equivariant_from_ruth_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m) {
  require_valid(validate_morphism(source, target, m), "Ruth morphism");
  const auto& G = source.groupoid;
  EquivariantMap e;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    e.f0.push_back(m.phi1[idx(x)]);
    e.f1.push_back(Matrix::block_diagonal(m.phi0[idx(x)], m.phi1[idx(x)]));
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g)
    e.delta.push_back(Matrix::vstack(-m.mu[idx(g)], m.phi1[idx(G.tgt(g))] * source.lambda1[idx(g)]));
  return e;
}

Ruth ruth_from_wrep(const WeakRepresentation& w) {
  check_wrep_shapes(w);
  const auto& G = w.groupoid;
  const Splitting sp = split_bundle(w.bundle);
  Ruth r;
  r.groupoid = G;
  r.complex = sp.complex;
  const auto& to = sp.to_phi;
  const auto& from = sp.from_phi;
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const auto s = idx(G.src(g)), t = idx(G.tgt(g));
    const ChainMap l = extract_point_map(r.complex, G.src(g), r.complex, G.tgt(g),
                                         to.on_objects[t] * w.a0[idx(g)] * from.on_objects[s],
                                         to.on_arrows[t] * w.a1[idx(g)] * from.on_arrows[s]);
    r.lambda0.push_back(l.f0[0]);
    r.lambda1.push_back(l.f1[0]);
  }
  for (const auto& [p, a] : w.alpha) {
    const auto [g, h] = p;
    const int gh = G.compose(g, h), s = G.src(h), t = G.tgt(g);
    const ChainMap from_map = point_map(r.lambda0[idx(g)] * r.lambda0[idx(h)], r.lambda1[idx(g)] * r.lambda1[idx(h)]);
    const ChainMap to_map = point_map(r.lambda0[idx(gh)], r.lambda1[idx(gh)]);
    const BundleTransformation cell{{to.on_arrows[idx(t)] * a * from.on_objects[idx(s)]}};
    r.omega[p] = extract_homotopy(point(r.complex, s), point(r.complex, t), from_map, to_map, cell).omega[0];
  }
  return r;
}

RuthMorphism ruth_morphism_from_equivariant(const WeakRepresentation& v, const WeakRepresentation& w,
                                            const EquivariantMap& e) {
  check_equivariant_shapes(v, w, e);
  const auto& G = v.groupoid;
  const Ruth rv = ruth_from_wrep(v);
  const Splitting sv = split_bundle(v.bundle), sw = split_bundle(w.bundle);
  const TwoTermComplex& cw = sw.complex;
  RuthMorphism m;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const auto xi = idx(x);
    const ChainMap f = extract_point_map(rv.complex, x, cw, x, sw.to_phi.on_objects[xi] * e.f0[xi] * sv.from_phi.on_objects[xi],
                                         sw.to_phi.on_arrows[xi] * e.f1[xi] * sv.from_phi.on_arrows[xi]);
    m.phi0.push_back(f.f0[0]);
    m.phi1.push_back(f.f1[0]);
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix d = sw.to_phi.on_arrows[idx(t)] * e.delta[idx(g)] * sv.from_phi.on_objects[idx(s)];
    const std::size_t d0 = cw.dim0(t);
    if (!(d.rows_range(d0, cw.dim1(t)) == m.phi1[idx(t)] * rv.lambda1[idx(g)]))
      throw NotInducedError("equivariance cell at " + G.arrow_name(g) + " does not start at F(g·x)");
    m.mu.push_back(-d.rows_range(0, d0));
  }
  return m;
}

WeakRepresentation transport_wrep(const WeakRepresentation& w, const std::vector<Matrix>& q, const std::vector<Matrix>& p) {
  check_wrep_shapes(w);
  const auto& G = w.groupoid;
  WeakRepresentation out;
  out.groupoid = G;
  out.bundle = transport(w.bundle, q, p);
  std::vector<Matrix> qi, pi;
  for (const auto& m : q) qi.push_back(inverse(m));
  for (const auto& m : p) pi.push_back(inverse(m));
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const auto s = idx(G.src(g)), t = idx(G.tgt(g));
    out.a0.push_back(q[t] * w.a0[idx(g)] * qi[s]);
    out.a1.push_back(p[t] * w.a1[idx(g)] * pi[s]);
  }
  for (const auto& [pair, a] : w.alpha) out.alpha[pair] = p[idx(G.tgt(pair.first))] * a * qi[idx(G.src(pair.second))];
  return out;
}

EquivariantMap fiber_iso_equivariant(const WeakRepresentation& transported, const std::vector<Matrix>& q,
                                     const std::vector<Matrix>& p) {
  const auto& G = transported.groupoid;
  EquivariantMap e{q, p, {}};
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const auto s = idx(G.src(g)), t = idx(G.tgt(g));
    e.delta.push_back(transported.bundle.unit[t] * transported.a0[idx(g)] * q[s]);
  }
  return e;
}

Matrix action_kernel_basis(const WeakRepresentation& w, int y) { return kernel_matrix(w.bundle.target[idx(y)]); }

Matrix action_lift(const WeakRepresentation& w, int g) {
  const auto& G = w.groupoid;
  const int s = G.src(g), t = G.tgt(g);
  const Matrix k = action_kernel_basis(w, t);
  const std::size_t n = w.bundle.objdim[idx(s)];
  return w.bundle.unit[idx(t)] * w.a0[idx(g)] * first_block(n, k.cols()) + k * second_block(n, k.cols());
}

namespace {

// Coordinates (v, k) of the action-groupoid arrow (g, v, h) from the columns
// of v and h, where h ends at g·v.
Matrix action_coordinates(const WeakRepresentation& w, int g, const Matrix& v, const Matrix& h) {
  const int t = w.groupoid.tgt(g);
  const Matrix k = left_inverse(action_kernel_basis(w, t)) * (h - w.bundle.unit[idx(t)] * w.a0[idx(g)] * v);
  return Matrix::vstack(v, k);
}

}  // namespace

VBGroupoid action_groupoid(const WeakRepresentation& w) {
  require_valid(validate_wrep(w), "weak representation");
  const auto& G = w.groupoid;
  const auto& V = w.bundle;
  const FiberedProducts bundle_fp(V);
  VBGroupoid act;
  act.base = G;
  const int no = static_cast<int>(G.object_count()), na = static_cast<int>(G.arrow_count());
  std::vector<Matrix> lift;
  for (int x = 0; x < no; ++x) {
    const std::size_t n = V.objdim[idx(x)];
    act.objdim.push_back(n);
    act.unit.push_back(Matrix::vstack(Matrix::identity(n), Matrix::zero(action_kernel_basis(w, x).cols(), n)));
  }
  for (int g = 0; g < na; ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const std::size_t n = V.objdim[idx(s)], kd = action_kernel_basis(w, t).cols();
    act.arrdim.push_back(n + kd);
    act.source.push_back(first_block(n, kd));
    lift.push_back(action_lift(w, g));
    act.target.push_back(V.source[idx(t)] * lift.back());
  }
  for (int g = 0; g < na; ++g) {
    const int s = G.src(g), gi = G.inverse(g);
    const Matrix& h = lift[idx(g)];
    const Matrix x_new = act.target[idx(g)];
    const Matrix back = V.inverse[idx(s)] * w.a1[idx(gi)] * h;
    const Matrix unwind = V.inverse[idx(s)] * w.alpha.at({gi, g}) * act.source[idx(g)];
    const Matrix h_new = multiply_maps_or_throw(V, bundle_fp, s, s, back, unwind);
    act.inverse.push_back(action_coordinates(w, gi, x_new, h_new));
  }
  for (int g = 0; g < na; ++g)
    for (int g2 = 0; g2 < na; ++g2) {
      if (!G.composable(g, g2)) continue;
      const int t = G.tgt(g), gg = G.compose(g, g2);
      const Matrix basis = fibered_product_basis(act, g, g2);
      const Matrix first = basis.rows_range(0, act.arrdim[idx(g)]);
      const Matrix second = basis.rows_range(act.arrdim[idx(g)], act.arrdim[idx(g2)]);
      const Matrix x2 = act.source[idx(g2)] * second;
      const Matrix moved = multiply_maps_or_throw(V, bundle_fp, t, t, w.a1[idx(g)] * lift[idx(g2)] * second,
                                                  lift[idx(g)] * first);
      const Matrix h = multiply_maps_or_throw(V, bundle_fp, t, t, w.alpha.at({g, g2}) * x2, moved);
      act.mult[{g, g2}] = action_coordinates(w, gg, x2, h);
    }
  return act;
}

VBMap act_on_morphism(const WeakRepresentation& v, const WeakRepresentation& w, const EquivariantMap& e) {
  require_valid(validate_equivariant(v, w, e), "equivariant map");
  const auto& G = v.groupoid;
  const FiberedProducts fp(w.bundle);
  std::vector<Matrix> on_arrows;
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix lift = action_lift(v, g);
    const Matrix x = first_block(v.bundle.objdim[idx(s)], lift.cols() - v.bundle.objdim[idx(s)]);
    const Matrix h = multiply_maps_or_throw(w.bundle, fp, t, t, e.delta[idx(g)] * x, e.f1[idx(t)] * lift);
    on_arrows.push_back(action_coordinates(w, g, e.f0[idx(s)] * x, h));
  }
  return over_identity(e.f0, std::move(on_arrows), G.object_count(), G.arrow_count());
}

EquivariantMap reconstruct_equivariant(const WeakRepresentation& v, const WeakRepresentation& w, const VBMap& phi) {
  const auto& G = v.groupoid;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (phi.object_map.size() != no || phi.arrow_map.size() != na || phi.on_objects.size() != no ||
      phi.on_arrows.size() != na)
    throw StructureError("VB map tables have wrong length");
  for (std::size_t x = 0; x < no; ++x)
    if (phi.object_map[x] != static_cast<int>(x)) throw StructureError("VB map does not cover the identity on objects");
  for (std::size_t a = 0; a < na; ++a)
    if (phi.arrow_map[a] != static_cast<int>(a)) throw StructureError("VB map does not cover the identity on arrows");
  EquivariantMap e;
  e.f0 = phi.on_objects;
  for (int y = 0; y < static_cast<int>(no); ++y) {
    const int u = G.unit(y);
    const auto& V = v.bundle;
    const Matrix& src = V.source[idx(y)];
    const Matrix k = left_inverse(action_kernel_basis(v, y)) * (V.inverse[idx(y)] - V.unit[idx(y)] * src);
    const Matrix embed = Matrix::vstack(src, k);
    e.f1.push_back(w.bundle.inverse[idx(y)] * action_lift(w, u) * phi.on_arrows[idx(u)] * embed);
  }
  for (int g = 0; g < static_cast<int>(na); ++g) {
    const std::size_t n = v.bundle.objdim[idx(G.src(g))];
    const std::size_t kd = action_kernel_basis(v, G.tgt(g)).cols();
    e.delta.push_back(action_lift(w, g) * phi.on_arrows[idx(g)] * Matrix::vstack(Matrix::identity(n), Matrix::zero(kd, n)));
  }
  return e;
}

KernelRepresentation vb_to_wrep(const VBGroupoid& v) {
  require_valid(validate_vb(v), "VB-groupoid");
  return vb_to_wrep(v, find_unital_connection(v));
}

KernelRepresentation vb_to_wrep(const VBGroupoid& v, const Connection& sigma) {
  require_valid(validate_vb(v), "VB-groupoid");
  require_valid(validate_connection(v, sigma), "connection");
  const auto& G = v.base;
  const FiberedProducts fp(v);
  const auto& S = sigma.sigma;
  KernelRepresentation out;
  out.connection = sigma;
  WeakRepresentation& w = out.rep;
  w.groupoid = G;
  w.bundle = kernel_groupoid(v);
  const int na = static_cast<int>(G.arrow_count());
  for (int g = 0; g < na; ++g) w.a0.push_back(v.target[idx(g)] * S[idx(g)]);
  for (int g = 0; g < na; ++g) {
    const int gi = G.inverse(g), us = G.unit(G.src(g));
    const Matrix k = Matrix::identity(v.arrdim[idx(us)]);
    const Matrix back = v.inverse[idx(g)] * S[idx(g)] * v.source[idx(us)];
    const Matrix inner = multiply_maps_or_throw(v, fp, us, gi, k, back);
    w.a1.push_back(multiply_maps_or_throw(v, fp, g, G.compose(us, gi), S[idx(g)] * v.target[idx(us)], inner));
  }
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      if (!G.composable(g, h)) continue;
      const int gi = G.inverse(g), hi = G.inverse(h), gh = G.compose(g, h);
      const Matrix first = v.inverse[idx(h)] * S[idx(h)];
      const Matrix second = v.inverse[idx(g)] * S[idx(g)] * w.a0[idx(h)];
      const Matrix inner = multiply_maps_or_throw(v, fp, hi, gi, first, second);
      w.alpha[{g, h}] = multiply_maps_or_throw(v, fp, gh, G.compose(hi, gi), S[idx(gh)], inner);
    }
  require_valid(validate_wrep(w), "kernel representation");

  // (g, x, k) ↦ k⁻¹·σ_g(x), from the action groupoid to v
  const VBGroupoid act = action_groupoid(w);
  VBMap back;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    back.object_map.push_back(x);
    back.on_objects.push_back(Matrix::identity(v.objdim[idx(x)]));
  }
  for (int g = 0; g < na; ++g) {
    const int ut = G.unit(G.tgt(g));
    back.arrow_map.push_back(g);
    const Matrix k_inv = v.inverse[idx(ut)] * action_lift(w, g);
    back.on_arrows.push_back(multiply_maps_or_throw(v, fp, ut, g, k_inv, S[idx(g)] * act.source[idx(g)]));
  }
  if (!is_fiberwise_invertible(back)) throw ValidationError("kernel representation map is not fiberwise invertible");
  out.to_action = inverse(back);
  require_valid(validate_vb_map(v, act, out.to_action), "kernel representation isomorphism");
  return out;
}

EquivariantMap compare_kernel_representations(const KernelRepresentation& a, const KernelRepresentation& b) {
  return reconstruct_equivariant(a.rep, b.rep, compose(b.to_action, inverse(a.to_action)));
}

VBMap triangle_iso(const Ruth& r) {
  const WeakRepresentation w = wrep_from_ruth(r);
  const auto& G = r.groupoid;
  std::vector<Matrix> on_objects, on_arrows;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) on_objects.push_back(Matrix::identity(r.dim1(x)));
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix lift = action_lift(w, g);
    const std::size_t n = r.dim1(s);
    on_arrows.push_back(Matrix::vstack(-lift.rows_range(0, r.dim0(t)), first_block(n, lift.cols() - n)));
  }
  return over_identity(std::move(on_objects), std::move(on_arrows), G.object_count(), G.arrow_count());
}

VBSplitting vb_to_ruth(const VBGroupoid& v) {
  VBSplitting out;
  out.kernel = vb_to_wrep(v);
  const WeakRepresentation& w = out.kernel.rep;
  out.ruth = ruth_from_wrep(w);
  const Splitting sp = split_bundle(w.bundle);
  const WeakRepresentation image = wrep_from_ruth(out.ruth);
  const EquivariantMap e = fiber_iso_equivariant(image, sp.to_phi.on_objects, sp.to_phi.on_arrows);
  out.to_semidirect = compose(triangle_iso(out.ruth), compose(act_on_morphism(w, image, e), out.kernel.to_action));
  return out;
}

}  // namespace wrep
