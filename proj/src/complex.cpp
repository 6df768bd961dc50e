#include "wrep/complex.hpp"

#include <algorithm>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

bool has_shape(const Matrix& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; }

void check_map_tables(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
  if (f.basemap.size() != c.size() || f.f0.size() != c.size() || f.f1.size() != c.size())
    throw StructureError("chain map tables do not match the source base");
  for (std::size_t x = 0; x < c.size(); ++x) {
    const int y = f.basemap[x];
    if (y < 0 || static_cast<std::size_t>(y) >= d.size()) throw StructureError("chain map base map out of range");
    const int xi = static_cast<int>(x);
    if (!has_shape(f.f0[x], d.dim0(y), c.dim0(xi)) || !has_shape(f.f1[x], d.dim1(y), c.dim1(xi)))
      throw StructureError("chain map component at " + c.base[x] + " has the wrong shape");
  }
}

}  // namespace

void check_complex(const TwoTermComplex& c) {
  if (c.base.size() != c.diff.size()) throw StructureError("complex base and differential sizes differ");
  if (!std::is_sorted(c.base.begin(), c.base.end()) ||
      std::adjacent_find(c.base.begin(), c.base.end()) != c.base.end())
    throw StructureError("complex base must be sorted and duplicate-free");
}

Report validate_chain_map(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
  check_map_tables(c, d, f);
  Report r;
  for (std::size_t x = 0; x < c.size(); ++x) {
    const auto y = static_cast<std::size_t>(f.basemap[x]);
    const Matrix lhs = f.f1[x] * c.diff[x], rhs = d.diff[y] * f.f0[x];
    if (!(lhs == rhs)) r.add("chain-map", c.base[x], to_string(rhs), to_string(lhs));
  }
  return r;
}

Report validate_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainHomotopy& h) {
  Report r;
  r.merge(validate_chain_map(c, d, h.from), "from:");
  r.merge(validate_chain_map(c, d, h.to), "to:");
  if (h.from.basemap != h.to.basemap) throw StructureError("homotopy between maps over different base maps");
  if (h.omega.size() != c.size()) throw StructureError("homotopy has wrong number of components");
  for (std::size_t x = 0; x < c.size(); ++x) {
    const int y = h.from.basemap[x];
    const auto yi = static_cast<std::size_t>(y);
    if (!has_shape(h.omega[x], d.dim0(y), c.dim1(static_cast<int>(x))))
      throw StructureError("homotopy component at " + c.base[x] + " has the wrong shape");
    const Matrix top = d.diff[yi] * h.omega[x], want_top = h.to.f1[x] - h.from.f1[x];
    if (!(top == want_top)) r.add("homotopy-degree1", c.base[x], to_string(want_top), to_string(top));
    const Matrix bottom = h.omega[x] * c.diff[x], want_bottom = h.to.f0[x] - h.from.f0[x];
    if (!(bottom == want_bottom)) r.add("homotopy-degree0", c.base[x], to_string(want_bottom), to_string(bottom));
  }
  return r;
}

ChainMap identity_chain_map(const TwoTermComplex& c) {
  ChainMap f;
  for (std::size_t x = 0; x < c.size(); ++x) {
    f.basemap.push_back(static_cast<int>(x));
    f.f0.push_back(Matrix::identity(c.dim0(static_cast<int>(x))));
    f.f1.push_back(Matrix::identity(c.dim1(static_cast<int>(x))));
  }
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  try {
    for (std::size_t x = 0; x < f.basemap.size(); ++x) {
      const auto y = static_cast<std::size_t>(f.basemap[x]);
      if (y >= g.basemap.size()) throw CompositionError("chain maps do not compose: base map out of range");
      out.basemap.push_back(g.basemap[y]);
      out.f0.push_back(g.f0[y] * f.f0[x]);
      out.f1.push_back(g.f1[y] * f.f1[x]);
    }
  } catch (const DimensionError& e) {
    throw CompositionError(std::string("chain maps do not compose: ") + e.what());
  }
  return out;
}

ChainHomotopy zero_homotopy(const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
  ChainHomotopy h{f, f, {}};
  for (std::size_t x = 0; x < c.size(); ++x)
    h.omega.push_back(Matrix::zero(d.dim0(f.basemap[x]), c.dim1(static_cast<int>(x))));
  return h;
}

ChainHomotopy vcompose(const ChainHomotopy& a, const ChainHomotopy& b) {
  if (!(a.to == b.from)) throw CompositionError("vertical composition: boundary maps differ");
  ChainHomotopy h{a.from, b.to, {}};
  for (std::size_t x = 0; x < a.omega.size(); ++x) {
    if (!a.omega[x].same_shape(b.omega.at(x))) throw CompositionError("vertical composition: component shapes differ");
    h.omega.push_back(a.omega[x] + b.omega[x]);
  }
  return h;
}

ChainHomotopy hcompose(const ChainHomotopy& psi, const ChainHomotopy& omega) {
  ChainHomotopy h{compose(omega.from, psi.from), compose(omega.to, psi.to), {}};
  const ChainMap& k = omega.from;
  const ChainMap& g = psi.to;
  try {
    for (std::size_t x = 0; x < psi.omega.size(); ++x) {
      const auto y = static_cast<std::size_t>(g.basemap[x]);
      h.omega.push_back(k.f0.at(y) * psi.omega[x] + omega.omega.at(y) * g.f1[x]);
    }
  } catch (const DimensionError& e) {
    throw CompositionError(std::string("horizontal composition: ") + e.what());
  }
  return h;
}

bool check_interchange(const TwoTermComplex& c, const TwoTermComplex& d, const TwoTermComplex& e,
                       const ChainHomotopy& psi, const ChainHomotopy& phi, const ChainHomotopy& omega,
                       const ChainHomotopy& chi) {
  for (const auto* h : {&psi, &phi})
    if (!validate_homotopy(c, d, *h).ok()) throw ValidationError("interchange: input is not a homotopy C -> D");
  for (const auto* h : {&omega, &chi})
    if (!validate_homotopy(d, e, *h).ok()) throw ValidationError("interchange: input is not a homotopy D -> E");
  if (!(psi.to == phi.from) || !(omega.to == chi.from)) throw CompositionError("interchange: homotopies do not paste");
  const ChainHomotopy lhs = hcompose(vcompose(psi, phi), vcompose(omega, chi));
  const ChainHomotopy rhs = vcompose(hcompose(psi, omega), hcompose(phi, chi));
  return lhs == rhs;
}

}  // namespace wrep
