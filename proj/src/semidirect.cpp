#include "wrep/semidirect.hpp"

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_valid(const Report& r, const std::string& what) {
  if (!r.ok())
    throw ValidationError(what + " is invalid: " + r.violations.front().check + " at " + r.violations.front().location);
}

}  // namespace

VBGroupoid semidirect_unchecked(const Ruth& r) {
  check_ruth_shapes(r);
  const auto& G = r.groupoid;
  VBGroupoid v;
  v.base = G;
  const int no = static_cast<int>(G.object_count()), na = static_cast<int>(G.arrow_count());
  for (int x = 0; x < no; ++x) {
    v.objdim.push_back(r.dim1(x));
    v.unit.push_back(Matrix::vstack(Matrix::zero(r.dim0(x), r.dim1(x)), Matrix::identity(r.dim1(x))));
  }
  for (int g = 0; g < na; ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const std::size_t a0 = r.dim0(t), a1 = r.dim1(s);
    v.arrdim.push_back(a0 + a1);
    v.source.push_back(Matrix::hstack(Matrix::zero(a1, a0), Matrix::identity(a1)));
    v.target.push_back(Matrix::hstack(r.delta(t), r.lambda1[idx(g)]));
    const int gi = G.inverse(g);
    v.inverse.push_back(Matrix::blocks(-r.lambda0[idx(gi)], r.omega_at(gi, g), r.delta(t), r.lambda1[idx(g)]));
  }
  for (const auto& [p, w] : r.omega) {
    const auto [g, h] = p;
    const std::size_t e0 = r.dim0(G.tgt(g)), e1 = r.dim1(G.src(g)), f0 = r.dim0(G.tgt(h)), f1 = r.dim1(G.src(h));
    const Matrix top = Matrix::hstack(Matrix::hstack(Matrix::identity(e0), Matrix::zero(e0, e1)),
                                      Matrix::hstack(r.lambda0[idx(g)], -w));
    const Matrix bottom = Matrix::hstack(Matrix::zero(f1, e0 + e1 + f0), Matrix::identity(f1));
    v.mult[p] = restrict_to_fibered_product(v, g, h, Matrix::vstack(top, bottom));
  }
  return v;
}

VBGroupoid semidirect(const Ruth& r) {
  require_valid(validate_ruth(r), "Ruth");
  return semidirect_unchecked(r);
}

VBMap psi_morphism(const Ruth& source, const Ruth& target, const RuthMorphism& m) {
  require_valid(validate_morphism(source, target, m), "Ruth morphism");
  const auto& G = source.groupoid;
  VBMap f;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    f.object_map.push_back(x);
    f.on_objects.push_back(m.phi1[idx(x)]);
  }
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const int s = G.src(g), t = G.tgt(g);
    f.arrow_map.push_back(g);
    f.on_arrows.push_back(Matrix::blocks(m.phi0[idx(t)], m.mu[idx(g)], Matrix::zero(target.dim1(s), source.dim0(t)),
                                         m.phi1[idx(s)]));
  }
  return f;
}

RuthMorphism morphism_from_semidirect_map(const Ruth& source, const Ruth& target, const VBMap& f) {
  const auto& G = source.groupoid;
  const int no = static_cast<int>(G.object_count()), na = static_cast<int>(G.arrow_count());
  if (f.on_objects.size() != idx(no) || f.on_arrows.size() != idx(na)) throw StructureError("VB map tables have wrong length");
  for (int x = 0; x < no; ++x)
    if (f.object_map[idx(x)] != x) throw NotInducedError("VB map does not cover the identity");
  for (int g = 0; g < na; ++g)
    if (f.arrow_map[idx(g)] != g) throw NotInducedError("VB map does not cover the identity");
  RuthMorphism m;
  for (int x = 0; x < no; ++x) {
    m.phi1.push_back(f.on_objects[idx(x)]);
    m.phi0.push_back(f.on_arrows[idx(G.unit(x))].block(0, 0, target.dim0(x), source.dim0(x)));
  }
  for (int g = 0; g < na; ++g) {
    const int s = G.src(g), t = G.tgt(g);
    const Matrix& a = f.on_arrows[idx(g)];
    const std::size_t r0 = target.dim0(t), r1 = target.dim1(s), c0 = source.dim0(t), c1 = source.dim1(s);
    if (a.rows() != r0 + r1 || a.cols() != c0 + c1) throw StructureError("VB map block at " + G.arrow_name(g) + " has wrong shape");
    if (!(a.block(0, 0, r0, c0) == m.phi0[idx(t)]) || !a.block(r0, 0, r1, c0).is_zero() ||
        !(a.block(r0, c0, r1, c1) == m.phi1[idx(s)]))
      throw NotInducedError("VB map at " + G.arrow_name(g) + " is not of semi-direct form");
    m.mu.push_back(a.block(0, c0, r0, c1));
  }
  return m;
}

Report validate_connection(const VBGroupoid& v, const Connection& c) {
  Report r;
  const auto& G = v.base;
  if (c.sigma.size() != G.arrow_count()) throw StructureError("connection has wrong number of components");
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const Matrix& s = c.sigma[idx(g)];
    if (s.rows() != v.arrdim[idx(g)] || s.cols() != v.objdim[idx(G.src(g))])
      throw StructureError("connection component at " + G.arrow_name(g) + " has wrong shape");
    const Matrix p = v.source[idx(g)] * s;
    if (!p.is_identity()) r.add("splitting", G.arrow_name(g), "identity", to_string(p));
  }
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const int u = G.unit(x);
    if (!(c.sigma[idx(u)] == v.unit[idx(x)])) r.add("unital", G.arrow_name(u), to_string(v.unit[idx(x)]), to_string(c.sigma[idx(u)]));
  }
  return r;
}

Connection find_unital_connection(const VBGroupoid& v) {
  const auto& G = v.base;
  Connection c;
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    const std::size_t d = v.objdim[idx(G.src(g))];
    std::optional<Pinning> pin;
    if (G.is_unit(g)) pin = Pinning{Matrix::identity(d), v.unit[idx(G.src(g))]};
    try {
      c.sigma.push_back(right_inverse_on_image(v.source[idx(g)], pin));
    } catch (const NotSurjectiveError&) {
      throw StructureError("source map at " + G.arrow_name(g) + " is not surjective");
    } catch (const PinningError&) {
      throw StructureError("unit map at " + G.object_name(G.src(g)) + " is not a section of the source map");
    }
  }
  return c;
}

LinearGroupoidBundle kernel_groupoid(const VBGroupoid& v) {
  const auto& G = v.base;
  LinearGroupoidBundle k;
  k.base = FiniteGroupoid::trivial(G.object_names());
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const auto u = idx(G.unit(x));
    k.objdim.push_back(v.objdim[idx(x)]);
    k.arrdim.push_back(v.arrdim[u]);
    k.source.push_back(v.source[u]);
    k.target.push_back(v.target[u]);
    k.unit.push_back(v.unit[idx(x)]);
    k.inverse.push_back(v.inverse[u]);
    k.mult[{x, x}] = v.mult.at({G.unit(x), G.unit(x)});
  }
  return k;
}

}  // namespace wrep
