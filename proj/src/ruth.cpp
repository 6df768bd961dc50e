#include "wrep/ruth.hpp"

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void expect(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw StructureError(what + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

std::string triple_label(const FiniteGroupoid& G, int a, int b, int c) { return tuple_label(G, {a, b, c}); }

}  // namespace

void check_ruth_shapes(const Ruth& r) {
  const auto& G = r.groupoid;
  check_complex(r.complex);
  if (r.complex.base != G.object_names()) throw StructureError("complex base differs from the groupoid's objects");
  const std::size_t na = G.arrow_count();
  if (r.lambda0.size() != na || r.lambda1.size() != na) throw StructureError("quasi-action tables have wrong length");
  for (int g = 0; g < static_cast<int>(na); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    expect(r.lambda0[idx(g)], r.dim0(t), r.dim0(s), "lambda0 at " + G.arrow_name(g));
    expect(r.lambda1[idx(g)], r.dim1(t), r.dim1(s), "lambda1 at " + G.arrow_name(g));
  }
  std::size_t pairs = 0;
  for (int g = 0; g < static_cast<int>(na); ++g)
    for (int h = 0; h < static_cast<int>(na); ++h) {
      if (!G.composable(g, h)) continue;
      ++pairs;
      auto it = r.omega.find({g, h});
      if (it == r.omega.end()) throw StructureError("omega missing at " + tuple_label(G, {g, h}));
      expect(it->second, r.dim0(G.tgt(g)), r.dim1(G.src(h)), "omega at " + tuple_label(G, {g, h}));
    }
  if (pairs != r.omega.size()) throw StructureError("omega given at non-composable pairs");
}

Report validate_ruth(const Ruth& r) {
  Report rep;
  rep.merge(validate_groupoid(r.groupoid), "groupoid:");
  if (!rep.ok()) return rep;
  check_ruth_shapes(r);
  const auto& G = r.groupoid;
  const int na = static_cast<int>(G.arrow_count());
  auto L0 = [&](int g) -> const Matrix& { return r.lambda0[idx(g)]; };
  auto L1 = [&](int g) -> const Matrix& { return r.lambda1[idx(g)]; };
  auto W = [&](int g, int h) -> const Matrix& { return r.omega_at(g, h); };

  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const int u = G.unit(x);
    if (!L0(u).is_identity()) rep.add("unitality", G.arrow_name(u) + " (lambda0)", "identity", to_string(L0(u)));
    if (!L1(u).is_identity()) rep.add("unitality", G.arrow_name(u) + " (lambda1)", "identity", to_string(L1(u)));
  }
  for (const auto& [p, m] : r.omega)
    if ((G.is_unit(p.first) || G.is_unit(p.second)) && !m.is_zero())
      rep.add("normalization", tuple_label(G, {p.first, p.second}), "0", to_string(m));

  for (int g = 0; g < na; ++g) {
    const Matrix lhs = r.delta(G.tgt(g)) * L0(g), rhs = L1(g) * r.delta(G.src(g));
    if (!(lhs == rhs)) rep.add("identity(1)", "(" + G.arrow_name(g) + ")", to_string(rhs), to_string(lhs));
  }
  for (const auto& [p, m] : r.omega) {
    const auto [g, h] = p;
    const int gh = G.compose(g, h);
    const std::string at = tuple_label(G, {g, h});
    const Matrix l2 = L0(gh) - L0(g) * L0(h), r2 = m * r.delta(G.src(h));
    if (!(l2 == r2)) rep.add("identity(2)", at, to_string(r2), to_string(l2));
    const Matrix l3 = L1(gh) - L1(g) * L1(h), r3 = r.delta(G.tgt(g)) * m;
    if (!(l3 == r3)) rep.add("identity(3)", at, to_string(r3), to_string(l3));
  }
  for (const auto& [p, m] : r.omega) {
    const auto [g1, g2] = p;
    for (int g3 = 0; g3 < na; ++g3) {
      if (!G.composable(g2, g3)) continue;
      const Matrix v = L0(g1) * W(g2, g3) - W(G.compose(g1, g2), g3) + W(g1, G.compose(g2, g3)) - m * L1(g3);
      if (!v.is_zero()) rep.add("identity(4)", triple_label(G, g1, g2, g3), "0", to_string(v));
    }
  }
  return rep;
}

void check_morphism_shapes(const Ruth& source, const Ruth& target, const RuthMorphism& m) {
  if (!(source.groupoid == target.groupoid)) throw StructureError("morphism between Ruths over different groupoids");
  const auto& G = source.groupoid;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (m.phi0.size() != no || m.phi1.size() != no || m.mu.size() != na)
    throw StructureError("morphism tables have wrong length");
  for (int x = 0; x < static_cast<int>(no); ++x) {
    expect(m.phi0[idx(x)], target.dim0(x), source.dim0(x), "phi0 at " + G.object_name(x));
    expect(m.phi1[idx(x)], target.dim1(x), source.dim1(x), "phi1 at " + G.object_name(x));
  }
  for (int g = 0; g < static_cast<int>(na); ++g)
    expect(m.mu[idx(g)], target.dim0(G.tgt(g)), source.dim1(G.src(g)), "mu at " + G.arrow_name(g));
}

Report validate_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m) {
  check_ruth_shapes(source);
  check_ruth_shapes(target);
  check_morphism_shapes(source, target, m);
  Report rep;
  const auto& G = source.groupoid;
  auto P0 = [&](int x) -> const Matrix& { return m.phi0[idx(x)]; };
  auto P1 = [&](int x) -> const Matrix& { return m.phi1[idx(x)]; };
  auto M = [&](int g) -> const Matrix& { return m.mu[idx(g)]; };

  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const Matrix lhs = P1(x) * source.delta(x), rhs = target.delta(x) * P0(x);
    if (!(lhs == rhs)) rep.add("morphism(1)", G.object_name(x), to_string(rhs), to_string(lhs));
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const std::string at = "(" + G.arrow_name(g) + ")";
    if (G.is_unit(g) && !M(g).is_zero()) rep.add("mu-unit", at, "0", to_string(M(g)));
    const Matrix l2 = P0(t) * source.lambda0[idx(g)] - target.lambda0[idx(g)] * P0(s), r2 = M(g) * source.delta(s);
    if (!(l2 == r2)) rep.add("morphism(2)", at, to_string(r2), to_string(l2));
    const Matrix l3 = P1(t) * source.lambda1[idx(g)] - target.lambda1[idx(g)] * P1(s), r3 = target.delta(t) * M(g);
    if (!(l3 == r3)) rep.add("morphism(3)", at, to_string(r3), to_string(l3));
  }
  for (const auto& [p, w] : source.omega) {
    const auto [g, h] = p;
    const Matrix lhs = P0(G.tgt(g)) * w + M(g) * source.lambda1[idx(h)] + target.lambda0[idx(g)] * M(h);
    const Matrix rhs = M(G.compose(g, h)) + target.omega_at(g, h) * P1(G.src(h));
    if (!(lhs == rhs)) rep.add("morphism(4)", tuple_label(G, {g, h}), to_string(rhs), to_string(lhs));
  }
  return rep;
}

RuthMorphism identity_morphism(const Ruth& r) {
  RuthMorphism m;
  const auto& G = r.groupoid;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    m.phi0.push_back(Matrix::identity(r.dim0(x)));
    m.phi1.push_back(Matrix::identity(r.dim1(x)));
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) m.mu.push_back(Matrix::zero(r.dim0(G.tgt(g)), r.dim1(G.src(g))));
  return m;
}

RuthMorphism compose_morphisms(const FiniteGroupoid& G, const RuthMorphism& m2, const RuthMorphism& m1) {
  if (m2.phi0.size() != m1.phi0.size() || m2.mu.size() != m1.mu.size() || m1.mu.size() != G.arrow_count() ||
      m1.phi0.size() != G.object_count())
    throw CompositionError("morphisms over different groupoids");
  RuthMorphism out;
  try {
    for (std::size_t x = 0; x < m1.phi0.size(); ++x) {
      out.phi0.push_back(m2.phi0[x] * m1.phi0[x]);
      out.phi1.push_back(m2.phi1[x] * m1.phi1[x]);
    }
    for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g)
      out.mu.push_back(m2.phi0[idx(G.tgt(g))] * m1.mu[idx(g)] + m2.mu[idx(g)] * m1.phi1[idx(G.src(g))]);
  } catch (const DimensionError& e) {
    throw CompositionError(std::string("morphisms do not compose: ") + e.what());
  }
  return out;
}

bool is_isomorphism(const RuthMorphism& m) {
  for (const auto& p : m.phi0)
    if (!is_invertible(p)) return false;
  for (const auto& p : m.phi1)
    if (!is_invertible(p)) return false;
  return true;
}

RuthMorphism inverse_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m) {
  check_morphism_shapes(source, target, m);
  const auto& G = source.groupoid;
  RuthMorphism out;
  for (std::size_t x = 0; x < m.phi0.size(); ++x) {
    out.phi0.push_back(inverse(m.phi0[x]));
    out.phi1.push_back(inverse(m.phi1[x]));
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g)
    out.mu.push_back(-(out.phi0[idx(G.tgt(g))] * m.mu[idx(g)] * out.phi1[idx(G.src(g))]));
  return out;
}

GaugeResult gauge_transport(const Ruth& target, const std::vector<Matrix>& phi0, const std::vector<Matrix>& phi1,
                            const std::vector<Matrix>& mu) {
  check_ruth_shapes(target);
  const auto& G = target.groupoid;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (phi0.size() != no || phi1.size() != no || mu.size() != na) throw StructureError("gauge data has wrong length");
  std::vector<Matrix> inv0, inv1;
  for (std::size_t x = 0; x < no; ++x) {
    inv0.push_back(inverse(phi0[x]));
    inv1.push_back(inverse(phi1[x]));
  }
  for (int g = 0; g < static_cast<int>(na); ++g)
    if (G.is_unit(g) && !mu[idx(g)].is_zero()) throw StructureError("gauge mu must vanish at units");

  Ruth r;
  r.groupoid = G;
  r.complex.base = target.complex.base;
  for (std::size_t x = 0; x < no; ++x) r.complex.diff.push_back(inv1[x] * target.complex.diff[x] * phi0[x]);
  for (int g = 0; g < static_cast<int>(na); ++g) {
    const auto s = idx(G.src(g)), t = idx(G.tgt(g));
    r.lambda0.push_back(inv0[t] * (target.lambda0[idx(g)] * phi0[s] + mu[idx(g)] * r.complex.diff[s]));
    r.lambda1.push_back(inv1[t] * (target.lambda1[idx(g)] * phi1[s] + target.complex.diff[t] * mu[idx(g)]));
  }
  for (const auto& [p, w] : target.omega) {
    const auto [g, h] = p;
    const Matrix v = mu[idx(G.compose(g, h))] + w * phi1[idx(G.src(h))] - mu[idx(g)] * r.lambda1[idx(h)] -
                     target.lambda0[idx(g)] * mu[idx(h)];
    r.omega[p] = inv0[idx(G.tgt(g))] * v;
  }
  return {std::move(r), RuthMorphism{phi0, phi1, mu}};
}

}  // namespace wrep
