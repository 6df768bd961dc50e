#include "wrep/vb.hpp"

#include <string>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::string arrow_label(const FiniteGroupoid& g, int a) { return g.arrow_name(a); }

std::string pair_label(const FiniteGroupoid& g, int a, int b) {
  return "(" + g.arrow_name(a) + "," + g.arrow_name(b) + ")";
}

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw StructureError(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

Matrix pair_constraint(const VBGroupoid& v, int g, int h) {
  return Matrix::hstack(v.source[static_cast<std::size_t>(g)], -v.target[static_cast<std::size_t>(h)]);
}

}  // namespace

bool is_over_trivial_base(const VBGroupoid& v) {
  for (int a = 0; a < static_cast<int>(v.base.arrow_count()); ++a)
    if (!v.base.is_unit(a)) return false;
  return true;
}

Matrix fibered_product_basis(const VBGroupoid& v, int g, int h) { return kernel_matrix(pair_constraint(v, g, h)); }

FiberedProducts::FiberedProducts(const VBGroupoid& v) {
  const int n = static_cast<int>(v.base.arrow_count());
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (!v.base.composable(g, h)) continue;
      Matrix b = fibered_product_basis(v, g, h);
      Matrix l = left_inverse(b);
      entries_.emplace(ArrowPair{g, h}, Entry{std::move(b), std::move(l)});
    }
}

std::optional<Matrix> multiply_maps(const VBGroupoid& v, const FiberedProducts& fp, int g, int h, const Matrix& a,
                                    const Matrix& b) {
  const auto gi = static_cast<std::size_t>(g), hi = static_cast<std::size_t>(h);
  if (!v.base.composable(g, h)) return std::nullopt;
  if (!(v.source[gi] * a == v.target[hi] * b)) return std::nullopt;
  const int gh = v.base.compose(g, h);
  (void)gh;
  return v.mult.at({g, h}) * (fp.coordinates(g, h) * Matrix::vstack(a, b));
}

Matrix multiply_maps_or_throw(const VBGroupoid& v, const FiberedProducts& fp, int g, int h, const Matrix& a,
                              const Matrix& b) {
  auto m = multiply_maps(v, fp, g, h, a, b);
  if (!m) throw CompositionError("arrows over " + pair_label(v.base, g, h) + " are not composable");
  return *std::move(m);
}

void check_vb_shapes(const VBGroupoid& v) {
  const auto& G = v.base;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (v.objdim.size() != no || v.unit.size() != no) throw StructureError("per-object tables have wrong length");
  if (v.arrdim.size() != na || v.source.size() != na || v.target.size() != na || v.inverse.size() != na)
    throw StructureError("per-arrow tables have wrong length");
  for (std::size_t a = 0; a < na; ++a) {
    const int ai = static_cast<int>(a);
    const std::string at = " at " + arrow_label(G, ai);
    expect_shape(v.source[a], v.objdim[static_cast<std::size_t>(G.src(ai))], v.arrdim[a], "source" + at);
    expect_shape(v.target[a], v.objdim[static_cast<std::size_t>(G.tgt(ai))], v.arrdim[a], "target" + at);
    expect_shape(v.inverse[a], v.arrdim[static_cast<std::size_t>(G.inverse(ai))], v.arrdim[a], "inverse" + at);
  }
  for (std::size_t x = 0; x < no; ++x)
    expect_shape(v.unit[x], v.arrdim[static_cast<std::size_t>(G.unit(static_cast<int>(x)))], v.objdim[x],
                 "unit at " + G.object_name(static_cast<int>(x)));
  std::size_t expected_pairs = 0;
  for (int g = 0; g < static_cast<int>(na); ++g)
    for (int h = 0; h < static_cast<int>(na); ++h) {
      if (!G.composable(g, h)) continue;
      ++expected_pairs;
      auto it = v.mult.find({g, h});
      if (it == v.mult.end()) throw StructureError("no multiplication over " + pair_label(G, g, h));
      const auto gh = G.compose_entry(g, h);
      if (!gh) throw StructureError("base groupoid has no composite for " + pair_label(G, g, h));
      const std::size_t pdim = kernel_basis(pair_constraint(v, g, h)).size();
      expect_shape(it->second, v.arrdim[static_cast<std::size_t>(*gh)], pdim, "multiplication over " + pair_label(G, g, h));
    }
  if (v.mult.size() != expected_pairs) throw StructureError("multiplication given over non-composable pairs");
}

Report validate_vb(const VBGroupoid& v) {
  Report r;
  const auto& G = v.base;
  r.merge(validate_groupoid(G), "base:");
  if (!r.ok()) return r;
  check_vb_shapes(v);
  const FiberedProducts fp(v);
  const int na = static_cast<int>(G.arrow_count());
  auto S = [&](int a) -> const Matrix& { return v.source[static_cast<std::size_t>(a)]; };
  auto T = [&](int a) -> const Matrix& { return v.target[static_cast<std::size_t>(a)]; };
  auto U = [&](int x) -> const Matrix& { return v.unit[static_cast<std::size_t>(x)]; };
  auto I = [&](int a) { return Matrix::identity(v.arrdim[static_cast<std::size_t>(a)]); };

  for (int a = 0; a < na; ++a)
    if (rank(S(a)) != S(a).rows())
      r.add("source-surjective", arrow_label(G, a), std::to_string(S(a).rows()), std::to_string(rank(S(a))));

  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const int u = G.unit(x);
    const Matrix id = Matrix::identity(v.objdim[static_cast<std::size_t>(x)]);
    if (!(S(u) * U(x) == id)) r.add("unit-source", G.object_name(x), to_string(id), to_string(S(u) * U(x)));
    if (!(T(u) * U(x) == id)) r.add("unit-target", G.object_name(x), to_string(id), to_string(T(u) * U(x)));
  }

  for (const auto& [gh_pair, m] : v.mult) {
    const auto [g, h] = gh_pair;
    const int gh = G.compose(g, h);
    const Matrix& basis = fp.basis(g, h);
    const Matrix bv = basis.rows_range(0, v.arrdim[static_cast<std::size_t>(g)]);
    const Matrix bw = basis.rows_range(v.arrdim[static_cast<std::size_t>(g)], v.arrdim[static_cast<std::size_t>(h)]);
    if (!(S(gh) * m == S(h) * bw))
      r.add("multiplication-source", pair_label(G, g, h), to_string(S(h) * bw), to_string(S(gh) * m));
    if (!(T(gh) * m == T(g) * bv))
      r.add("multiplication-target", pair_label(G, g, h), to_string(T(g) * bv), to_string(T(gh) * m));
  }

  for (int a = 0; a < na; ++a) {
    const int ut = G.unit(G.tgt(a)), us = G.unit(G.src(a));
    auto left = multiply_maps(v, fp, ut, a, U(G.tgt(a)) * T(a), I(a));
    if (!left || !(*left == I(a))) r.add("left-unit", arrow_label(G, a), to_string(I(a)), left ? to_string(*left) : "not composable");
    auto right = multiply_maps(v, fp, a, us, I(a), U(G.src(a)) * S(a));
    if (!right || !(*right == I(a))) r.add("right-unit", arrow_label(G, a), to_string(I(a)), right ? to_string(*right) : "not composable");

    const int ai = G.inverse(a);
    const Matrix& inv = v.inverse[static_cast<std::size_t>(a)];
    if (!(S(ai) * inv == T(a)) || !(T(ai) * inv == S(a))) {
      r.add("inverse-endpoints", arrow_label(G, a), "source/target swapped", to_string(S(ai) * inv) + " / " + to_string(T(ai) * inv));
      continue;
    }
    auto after = multiply_maps(v, fp, ai, a, inv, I(a));
    const Matrix want_s = U(G.src(a)) * S(a);
    if (!after || !(*after == want_s))
      r.add("inverse", pair_label(G, ai, a), to_string(want_s), after ? to_string(*after) : "not composable");
    auto before = multiply_maps(v, fp, a, ai, I(a), inv);
    const Matrix want_t = U(G.tgt(a)) * T(a);
    if (!before || !(*before == want_t))
      r.add("inverse", pair_label(G, a, ai), to_string(want_t), before ? to_string(*before) : "not composable");
  }

  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) {
      if (!G.composable(g, h)) continue;
      for (int k = 0; k < na; ++k) {
        if (!G.composable(h, k)) continue;
        const std::size_t dg = v.arrdim[static_cast<std::size_t>(g)], dh = v.arrdim[static_cast<std::size_t>(h)],
                          dk = v.arrdim[static_cast<std::size_t>(k)];
        // Composable triples (a, b, c): s(a) = t(b), s(b) = t(c).
        Matrix constraint(S(g).rows() + S(h).rows(), dg + dh + dk);
        for (std::size_t i = 0; i < S(g).rows(); ++i) {
          for (std::size_t j = 0; j < dg; ++j) constraint(i, j) = S(g)(i, j);
          for (std::size_t j = 0; j < dh; ++j) constraint(i, dg + j) = -T(h)(i, j);
        }
        for (std::size_t i = 0; i < S(h).rows(); ++i) {
          for (std::size_t j = 0; j < dh; ++j) constraint(S(g).rows() + i, dg + j) = S(h)(i, j);
          for (std::size_t j = 0; j < dk; ++j) constraint(S(g).rows() + i, dg + dh + j) = -T(k)(i, j);
        }
        const Matrix triples = kernel_matrix(constraint);
        const Matrix a = triples.rows_range(0, dg), b = triples.rows_range(dg, dh), c = triples.rows_range(dg + dh, dk);
        const int gh = G.compose(g, h), hk = G.compose(h, k);
        auto ab = multiply_maps(v, fp, g, h, a, b);
        auto bc = multiply_maps(v, fp, h, k, b, c);
        std::optional<Matrix> left, right;
        if (ab) left = multiply_maps(v, fp, gh, k, *ab, c);
        if (bc) right = multiply_maps(v, fp, g, hk, a, *bc);
        if (!left || !right || !(*left == *right)) {
          r.add("associativity", "(" + G.arrow_name(g) + "," + G.arrow_name(h) + "," + G.arrow_name(k) + ")",
                left ? to_string(*left) : "not composable", right ? to_string(*right) : "not composable");
        }
      }
    }
  return r;
}

VBMap identity_vb_map(const VBGroupoid& v) {
  VBMap f;
  for (std::size_t x = 0; x < v.objdim.size(); ++x) {
    f.object_map.push_back(static_cast<int>(x));
    f.on_objects.push_back(Matrix::identity(v.objdim[x]));
  }
  for (std::size_t a = 0; a < v.arrdim.size(); ++a) {
    f.arrow_map.push_back(static_cast<int>(a));
    f.on_arrows.push_back(Matrix::identity(v.arrdim[a]));
  }
  return f;
}

VBMap compose(const VBMap& f2, const VBMap& f1) {
  VBMap f;
  for (std::size_t x = 0; x < f1.object_map.size(); ++x) {
    const auto mid = static_cast<std::size_t>(f1.object_map[x]);
    f.object_map.push_back(f2.object_map.at(mid));
    f.on_objects.push_back(compose(f2.on_objects.at(mid), f1.on_objects[x]));
  }
  for (std::size_t a = 0; a < f1.arrow_map.size(); ++a) {
    const auto mid = static_cast<std::size_t>(f1.arrow_map[a]);
    f.arrow_map.push_back(f2.arrow_map.at(mid));
    f.on_arrows.push_back(compose(f2.on_arrows.at(mid), f1.on_arrows[a]));
  }
  return f;
}

bool is_fiberwise_invertible(const VBMap& f) {
  for (const auto& m : f.on_objects)
    if (!is_invertible(m)) return false;
  for (const auto& m : f.on_arrows)
    if (!is_invertible(m)) return false;
  return true;
}

VBMap inverse(const VBMap& f) {
  VBMap g = f;
  for (std::size_t x = 0; x < f.object_map.size(); ++x)
    if (f.object_map[x] != static_cast<int>(x)) throw NotInvertibleError("inverse of a map with a nontrivial base map");
  for (std::size_t a = 0; a < f.arrow_map.size(); ++a)
    if (f.arrow_map[a] != static_cast<int>(a)) throw NotInvertibleError("inverse of a map with a nontrivial base map");
  for (auto& m : g.on_objects) m = wrep::inverse(m);
  for (auto& m : g.on_arrows) m = wrep::inverse(m);
  return g;
}

Report validate_vb_map(const VBGroupoid& v, const VBGroupoid& w, const VBMap& f) {
  Report r;
  const auto& G = v.base;
  const auto& H = w.base;
  const std::size_t no = G.object_count(), na = G.arrow_count();
  if (f.object_map.size() != no || f.on_objects.size() != no || f.arrow_map.size() != na || f.on_arrows.size() != na)
    throw StructureError("VB map tables have wrong length");
  for (std::size_t x = 0; x < no; ++x)
    expect_shape(f.on_objects[x], w.objdim.at(static_cast<std::size_t>(f.object_map[x])), v.objdim[x],
                 "map on objects at " + G.object_name(static_cast<int>(x)));
  for (std::size_t a = 0; a < na; ++a)
    expect_shape(f.on_arrows[a], w.arrdim.at(static_cast<std::size_t>(f.arrow_map[a])), v.arrdim[a],
                 "map on arrows at " + G.arrow_name(static_cast<int>(a)));

  auto om = [&](int x) { return f.object_map[static_cast<std::size_t>(x)]; };
  auto am = [&](int a) { return f.arrow_map[static_cast<std::size_t>(a)]; };
  auto F0 = [&](int x) -> const Matrix& { return f.on_objects[static_cast<std::size_t>(x)]; };
  auto F1 = [&](int a) -> const Matrix& { return f.on_arrows[static_cast<std::size_t>(a)]; };

  for (int a = 0; a < static_cast<int>(na); ++a) {
    if (H.src(am(a)) != om(G.src(a)) || H.tgt(am(a)) != om(G.tgt(a))) {
      r.add("base-functor", G.arrow_name(a), "endpoints preserved", "endpoints moved");
      return r;
    }
  }
  for (int x = 0; x < static_cast<int>(no); ++x)
    if (am(G.unit(x)) != H.unit(om(x))) r.add("base-functor", G.object_name(x), "unit preserved", "unit moved");
  for (const auto& [pair, m] : v.mult)
    if (am(G.compose(pair.first, pair.second)) != H.compose(am(pair.first), am(pair.second)))
      r.add("base-functor", pair_label(G, pair.first, pair.second), "composition preserved", "composition moved");
  if (!r.ok()) return r;

  for (int a = 0; a < static_cast<int>(na); ++a) {
    const auto wa = static_cast<std::size_t>(am(a));
    const Matrix ls = w.source[wa] * F1(a), rs = F0(G.src(a)) * v.source[static_cast<std::size_t>(a)];
    if (!(ls == rs)) r.add("preserves-source", G.arrow_name(a), to_string(rs), to_string(ls));
    const Matrix lt = w.target[wa] * F1(a), rt = F0(G.tgt(a)) * v.target[static_cast<std::size_t>(a)];
    if (!(lt == rt)) r.add("preserves-target", G.arrow_name(a), to_string(rt), to_string(lt));
    const Matrix li = F1(G.inverse(a)) * v.inverse[static_cast<std::size_t>(a)], ri = w.inverse[wa] * F1(a);
    if (!(li == ri)) r.add("preserves-inverse", G.arrow_name(a), to_string(ri), to_string(li));
  }
  for (int x = 0; x < static_cast<int>(no); ++x) {
    const Matrix lu = F1(G.unit(x)) * v.unit[static_cast<std::size_t>(x)];
    const Matrix ru = w.unit[static_cast<std::size_t>(om(x))] * F0(x);
    if (!(lu == ru)) r.add("preserves-unit", G.object_name(x), to_string(ru), to_string(lu));
  }
  if (!r.ok()) return r;

  const FiberedProducts fpv(v), fpw(w);
  for (const auto& [pair, m] : v.mult) {
    const auto [g, h] = pair;
    const Matrix& basis = fpv.basis(g, h);
    const std::size_t dg = v.arrdim[static_cast<std::size_t>(g)];
    const Matrix image = F1(G.compose(g, h)) * m;
    auto product = multiply_maps(w, fpw, am(g), am(h), F1(g) * basis.rows_range(0, dg),
                                 F1(h) * basis.rows_range(dg, basis.rows() - dg));
    if (!product || !(*product == image))
      r.add("preserves-multiplication", pair_label(G, g, h), to_string(image), product ? to_string(*product) : "not composable");
  }
  return r;
}

Report validate_transformation(const LinearGroupoidBundle& v, const LinearGroupoidBundle& w, const VBMap& from,
                               const VBMap& to, const BundleTransformation& eta) {
  Report r;
  const auto& M = v.base;
  const std::size_t no = M.object_count();
  if (eta.components.size() != no) throw StructureError("transformation has wrong number of components");
  if (from.object_map != to.object_map) throw StructureError("transformation between maps over different base maps");
  const FiberedProducts fpw(w);
  for (int x = 0; x < static_cast<int>(no); ++x) {
    const int fx = from.object_map[static_cast<std::size_t>(x)];
    const int wa = w.base.unit(fx);
    const int va = M.unit(x);
    const Matrix& c = eta.components[static_cast<std::size_t>(x)];
    expect_shape(c, w.arrdim[static_cast<std::size_t>(wa)], v.objdim[static_cast<std::size_t>(x)],
                 "transformation component at " + M.object_name(x));
    const Matrix& f0 = from.on_objects[static_cast<std::size_t>(x)];
    const Matrix& g0 = to.on_objects[static_cast<std::size_t>(x)];
    if (!(w.source[static_cast<std::size_t>(wa)] * c == f0))
      r.add("transformation-source", M.object_name(x), to_string(f0), to_string(w.source[static_cast<std::size_t>(wa)] * c));
    if (!(w.target[static_cast<std::size_t>(wa)] * c == g0))
      r.add("transformation-target", M.object_name(x), to_string(g0), to_string(w.target[static_cast<std::size_t>(wa)] * c));
    if (!r.ok()) continue;
    // eta(y) ∘ F(v) = G(v) ∘ eta(x) for every arrow v : x -> y of the fiber.
    const Matrix& f1 = from.on_arrows[static_cast<std::size_t>(va)];
    const Matrix& g1 = to.on_arrows[static_cast<std::size_t>(va)];
    auto lhs = multiply_maps(w, fpw, wa, wa, c * v.target[static_cast<std::size_t>(va)], f1);
    auto rhs = multiply_maps(w, fpw, wa, wa, g1, c * v.source[static_cast<std::size_t>(va)]);
    if (!lhs || !rhs || !(*lhs == *rhs))
      r.add("naturality", M.object_name(x), lhs ? to_string(*lhs) : "not composable", rhs ? to_string(*rhs) : "not composable");
  }
  return r;
}

VBGroupoid transport(const VBGroupoid& v, const std::vector<Matrix>& object_iso, const std::vector<Matrix>& arrow_iso) {
  const auto& G = v.base;
  if (object_iso.size() != G.object_count() || arrow_iso.size() != G.arrow_count())
    throw StructureError("transport: wrong number of fiber isomorphisms");
  std::vector<Matrix> obj_inv, arr_inv;
  for (const auto& q : object_iso) obj_inv.push_back(inverse(q));
  for (const auto& p : arrow_iso) arr_inv.push_back(inverse(p));

  VBGroupoid out;
  out.base = G;
  out.objdim = v.objdim;
  out.arrdim = v.arrdim;
  for (int a = 0; a < static_cast<int>(G.arrow_count()); ++a) {
    const auto ai = static_cast<std::size_t>(a);
    out.source.push_back(object_iso[static_cast<std::size_t>(G.src(a))] * v.source[ai] * arr_inv[ai]);
    out.target.push_back(object_iso[static_cast<std::size_t>(G.tgt(a))] * v.target[ai] * arr_inv[ai]);
    out.inverse.push_back(arrow_iso[static_cast<std::size_t>(G.inverse(a))] * v.inverse[ai] * arr_inv[ai]);
  }
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    const auto xi = static_cast<std::size_t>(x);
    out.unit.push_back(arrow_iso[static_cast<std::size_t>(G.unit(x))] * v.unit[xi] * obj_inv[xi]);
  }
  const FiberedProducts fp(v);
  for (const auto& [pair, m] : v.mult) {
    const auto [g, h] = pair;
    const Matrix new_basis = fibered_product_basis(out, g, h);
    const Matrix back = Matrix::block_diagonal(arr_inv[static_cast<std::size_t>(g)], arr_inv[static_cast<std::size_t>(h)]);
    out.mult[pair] = arrow_iso[static_cast<std::size_t>(G.compose(g, h))] * m * fp.coordinates(g, h) * back * new_basis;
  }
  return out;
}

VBMap fiber_iso_map(const VBGroupoid& v, std::vector<Matrix> object_iso, std::vector<Matrix> arrow_iso) {
  VBMap f = identity_vb_map(v);
  f.on_objects = std::move(object_iso);
  f.on_arrows = std::move(arrow_iso);
  return f;
}

Matrix restrict_to_fibered_product(const VBGroupoid& v, int g, int h, const Matrix& ambient) {
  return ambient * fibered_product_basis(v, g, h);
}

}  // namespace wrep
