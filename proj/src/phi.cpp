#include "wrep/phi.hpp"

#include "wrep/errors.hpp"

namespace wrep {

LinearGroupoidBundle phi_object(const TwoTermComplex& c) {
  check_complex(c);
  LinearGroupoidBundle v;
  v.base = FiniteGroupoid::trivial(c.base);
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    const std::size_t d0 = c.dim0(x), d1 = c.dim1(x);
    const Matrix& delta = c.diff[static_cast<std::size_t>(x)];
    const Matrix i0 = Matrix::identity(d0), i1 = Matrix::identity(d1);
    v.objdim.push_back(d1);
    v.arrdim.push_back(d0 + d1);
    v.source.push_back(Matrix::hstack(Matrix::zero(d1, d0), i1));
    v.target.push_back(Matrix::hstack(delta, i1));
    v.unit.push_back(Matrix::vstack(Matrix::zero(d0, d1), i1));
    v.inverse.push_back(Matrix::blocks(-i0, Matrix::zero(d0, d1), delta, i1));
  }
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    const std::size_t d0 = c.dim0(x), d1 = c.dim1(x);
    const Matrix i0 = Matrix::identity(d0), i1 = Matrix::identity(d1);
    // (c0, c1, c0', c1') ↦ (c0 + c0', c1')
    const Matrix ambient = Matrix::blocks(Matrix::hstack(i0, Matrix::zero(d0, d1)), Matrix::hstack(i0, Matrix::zero(d0, d1)),
                                          Matrix::zero(d1, d0 + d1), Matrix::hstack(Matrix::zero(d1, d0), i1));
    v.mult[{x, x}] = restrict_to_fibered_product(v, x, x, ambient);
  }
  return v;
}

VBMap phi_onemorphism(const ChainMap& f) {
  VBMap m;
  m.object_map = f.basemap;
  m.arrow_map = f.basemap;
  m.on_objects = f.f1;
  for (std::size_t x = 0; x < f.basemap.size(); ++x) m.on_arrows.push_back(Matrix::block_diagonal(f.f0[x], f.f1[x]));
  return m;
}

BundleTransformation phi_twomorphism(const ChainHomotopy& h) {
  BundleTransformation t;
  for (std::size_t x = 0; x < h.omega.size(); ++x) t.components.push_back(Matrix::vstack(h.omega[x], h.from.f1.at(x)));
  return t;
}

Splitting split_bundle(const LinearGroupoidBundle& v) {
  if (!is_over_trivial_base(v)) throw StructureError("split_bundle needs a bundle over a trivial groupoid");
  Splitting out;
  out.complex.base = v.base.object_names();
  const int no = static_cast<int>(v.base.object_count());
  std::vector<Matrix> change;  // per object: phi coordinates -> V1
  for (int x = 0; x < no; ++x) {
    const auto u = static_cast<std::size_t>(v.base.unit(x));
    const Matrix k = kernel_matrix(v.source[u]);
    out.complex.diff.push_back(v.target[u] * k);
    change.push_back(Matrix::hstack(k, v.unit[static_cast<std::size_t>(x)]));
  }
  for (int x = 0; x < no; ++x) {
    out.to_phi.object_map.push_back(x);
    out.to_phi.on_objects.push_back(Matrix::identity(v.objdim[static_cast<std::size_t>(x)]));
    out.from_phi.object_map.push_back(x);
    out.from_phi.arrow_map.push_back(v.base.unit(x));
    out.from_phi.on_objects.push_back(Matrix::identity(v.objdim[static_cast<std::size_t>(x)]));
    out.from_phi.on_arrows.push_back(change[static_cast<std::size_t>(x)]);
  }
  for (int a = 0; a < static_cast<int>(v.base.arrow_count()); ++a) {
    out.to_phi.arrow_map.push_back(v.base.src(a));
    out.to_phi.on_arrows.push_back(inverse(change[static_cast<std::size_t>(v.base.src(a))]));
  }
  return out;
}

ChainMap extract_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const VBMap& f) {
  if (f.object_map.size() != c.size() || f.on_arrows.size() != c.size() || f.on_objects.size() != c.size())
    throw StructureError("functor tables do not match the source complex");
  ChainMap out;
  out.basemap = f.object_map;
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    const auto xi = static_cast<std::size_t>(x);
    const int y = f.object_map[xi];
    const std::size_t c0 = c.dim0(x), c1 = c.dim1(x), d0 = d.dim0(y), d1 = d.dim1(y);
    const Matrix& m = f.on_arrows[xi];
    if (m.rows() != d0 + d1 || m.cols() != c0 + c1)
      throw StructureError("functor component at " + c.base[xi] + " has the wrong shape");
    const Matrix w = m.block(0, 0, d0, c0), xb = m.block(0, c0, d0, c1), yb = m.block(d0, 0, d1, c0),
                 z = m.block(d0, c0, d1, c1);
    if (!xb.is_zero()) throw NotInducedError("functor has a nonzero C1 -> D0 block at " + c.base[xi]);
    if (!yb.is_zero()) throw NotInducedError("functor has a nonzero C0 -> D1 block at " + c.base[xi]);
    if (!(z == f.on_objects[xi])) throw NotInducedError("functor's C1 block differs from its map on objects at " + c.base[xi]);
    out.f0.push_back(w);
    out.f1.push_back(z);
  }
  return out;
}

ChainHomotopy extract_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& from,
                               const ChainMap& to, const BundleTransformation& alpha) {
  if (alpha.components.size() != c.size()) throw StructureError("transformation has the wrong number of components");
  ChainHomotopy h{from, to, {}};
  for (std::size_t x = 0; x < c.size(); ++x) {
    const int y = from.basemap.at(x);
    const std::size_t d0 = d.dim0(y), d1 = d.dim1(y);
    const Matrix& m = alpha.components[x];
    if (m.rows() != d0 + d1 || m.cols() != c.dim1(static_cast<int>(x)))
      throw StructureError("transformation component at " + c.base[x] + " has the wrong shape");
    if (!(m.rows_range(d0, d1) == from.f1.at(x)))
      throw NotInducedError("transformation does not start at the source map at " + c.base[x]);
    h.omega.push_back(m.rows_range(0, d0));
  }
  const Report r = validate_homotopy(c, d, h);
  if (!r.ok())
    throw NotInducedError("extracted homotopy fails " + r.violations.front().check + " at " + r.violations.front().location);
  return h;
}

}  // namespace wrep
