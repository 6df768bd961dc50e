#include "wrep/generate.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

GroupoidTables one_object_tables(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table) {
  GroupoidTables t;
  t.objects = {"*"};
  for (const auto& n : names) t.arrows.push_back({n, "*", "*"});
  t.units["*"] = names[0];
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) {
      const int k = table[i][j];
      t.compose.emplace_back(names[i], names[j], names[idx(k)]);
      if (k == 0) t.inverse[names[i]] = names[j];
    }
  return t;
}

/// Group homomorphisms from the isotropy group at `root` to {±1}.
std::vector<std::map<int, int>> sign_characters(const FiniteGroupoid& g, const std::vector<int>& group) {
  std::vector<std::map<int, int>> out;
  const std::size_t n = group.size();
  if (n > 16) return {std::map<int, int>()};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::map<int, int> chi;
    for (std::size_t i = 0; i < n; ++i) chi[group[i]] = (mask >> i) & 1u ? -1 : 1;
    bool ok = true;
    for (int a : group) {
      for (int b : group)
        if (chi[g.compose(a, b)] != chi[a] * chi[b]) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace

FiniteGroupoid z2_groupoid() { return FiniteGroupoid::from_tables(one_object_tables({"e", "g"}, {{0, 1}, {1, 0}})); }

FiniteGroupoid pair_groupoid() {
  GroupoidTables t;
  t.objects = {"x", "y"};
  t.arrows = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"a", "x", "y"}, {"b", "y", "x"}};
  t.units = {{"x", "1x"}, {"y", "1y"}};
  t.compose = {{"1x", "1x", "1x"}, {"1y", "1y", "1y"}, {"a", "1x", "a"}, {"1y", "a", "a"},
               {"b", "1y", "b"},   {"1x", "b", "b"},   {"b", "a", "1x"}, {"a", "b", "1y"}};
  t.inverse = {{"1x", "1x"}, {"1y", "1y"}, {"a", "b"}, {"b", "a"}};
  return FiniteGroupoid::from_tables(t);
}

FiniteGroupoid cyclic_group(int n) {
  if (n < 1) throw StructureError("cyclic group of order < 1");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(idx(n), std::vector<int>(idx(n)));
  for (int k = 0; k < n; ++k) names.push_back("r" + std::to_string(k));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[idx(a)][idx(b)] = (a + b) % n;
  return FiniteGroupoid::from_tables(one_object_tables(names, table));
}

FiniteGroupoid product_groupoid(const std::vector<ComponentShape>& components) {
  GroupoidTables t;
  int base = 0;
  for (const auto& c : components) {
    auto obj = [&](int i) { return "x" + std::to_string(base + i); };
    auto arr = [&](int i, int j, int k) {
      return "g" + std::to_string(base + i) + "_" + std::to_string(base + j) + "_" + std::to_string(k);
    };
    for (int i = 0; i < c.objects; ++i) {
      t.objects.push_back(obj(i));
      t.units[obj(i)] = arr(i, i, 0);
    }
    for (int i = 0; i < c.objects; ++i)
      for (int j = 0; j < c.objects; ++j)
        for (int k = 0; k < c.order; ++k) {
          // arrow i -> j carrying k
          t.arrows.push_back({arr(i, j, k), obj(i), obj(j)});
          t.inverse[arr(i, j, k)] = arr(j, i, (c.order - k) % c.order);
          for (int l = 0; l < c.objects; ++l)
            for (int m = 0; m < c.order; ++m) t.compose.emplace_back(arr(j, l, m), arr(i, j, k), arr(i, l, (k + m) % c.order));
        }
    base += c.objects;
  }
  return FiniteGroupoid::from_tables(t);
}

Ruth z2_ruth(const Rational& omega) {
  Ruth r;
  r.groupoid = z2_groupoid();
  r.complex.base = {"*"};
  r.complex.diff = {Matrix::zero(1, 1)};
  const int e = r.groupoid.arrow_index("e"), g = r.groupoid.arrow_index("g");
  r.lambda0 = {Matrix::identity(1), Matrix::identity(1)};
  r.lambda1 = r.lambda0;
  r.lambda0[idx(g)] = -Matrix::identity(1);
  r.lambda1[idx(g)] = -Matrix::identity(1);
  for (int a : {e, g})
    for (int b : {e, g}) r.omega[{a, b}] = Matrix::zero(1, 1);
  r.omega[{g, g}] = Matrix(1, 1, {omega});
  return r;
}

Ruth z2_ruth_broken4() {
  Ruth r = z2_ruth(1);
  r.lambda1[idx(r.groupoid.arrow_index("g"))] = Matrix::identity(1);
  return r;
}

Ruth strict_ruth(const FiniteGroupoid& g, Rng& rng, int max_dim) {
  const int no = static_cast<int>(g.object_count()), na = static_cast<int>(g.arrow_count());
  Ruth r;
  r.groupoid = g;
  r.complex.base = g.object_names();
  r.complex.diff.assign(idx(no), Matrix());
  r.lambda0.assign(idx(na), Matrix());
  r.lambda1.assign(idx(na), Matrix());

  std::vector<int> root(idx(no), -1), tree(idx(no), -1);  // tree[x] : root -> x
  for (int x0 = 0; x0 < no; ++x0) {
    if (root[idx(x0)] >= 0) continue;
    root[idx(x0)] = x0;
    tree[idx(x0)] = g.unit(x0);
    std::queue<int> todo;
    todo.push(x0);
    std::vector<int> members{x0};
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop();
      for (int a = 0; a < na; ++a) {
        if (g.src(a) != x || root[idx(g.tgt(a))] >= 0) continue;
        const int y = g.tgt(a);
        root[idx(y)] = x0;
        tree[idx(y)] = g.compose(a, tree[idx(x)]);
        members.push_back(y);
        todo.push(y);
      }
    }
    std::vector<int> group;
    for (int a = 0; a < na; ++a)
      if (g.src(a) == x0 && g.tgt(a) == x0) group.push_back(a);
    const auto chars = sign_characters(g, group);

    const auto d0 = static_cast<std::size_t>(rng.range(0, max_dim));
    const auto d1 = static_cast<std::size_t>(rng.range(1, max_dim));
    std::vector<std::size_t> c0(d0), c1(d1);
    for (auto& c : c0) c = static_cast<std::size_t>(rng.range(0, static_cast<int>(chars.size()) - 1));
    for (auto& c : c1) c = static_cast<std::size_t>(rng.range(0, static_cast<int>(chars.size()) - 1));
    Matrix delta(d1, d0);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d0; ++j)
        if (c1[i] == c0[j]) delta(i, j) = rng.range(-2, 2);
    for (int x : members) r.complex.diff[idx(x)] = delta;
    for (int a = 0; a < na; ++a) {
      if (root[idx(g.src(a))] != x0) continue;
      // loop at the root: tree(t)^-1 ∘ a ∘ tree(s)
      const int loop = g.compose(g.inverse(tree[idx(g.tgt(a))]), g.compose(a, tree[idx(g.src(a))]));
      Matrix l0(d0, d0), l1(d1, d1);
      for (std::size_t i = 0; i < d0; ++i) l0(i, i) = chars[c0[i]].at(loop);
      for (std::size_t i = 0; i < d1; ++i) l1(i, i) = chars[c1[i]].at(loop);
      r.lambda0[idx(a)] = l0;
      r.lambda1[idx(a)] = l1;
    }
  }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (g.composable(a, b)) r.omega[{a, b}] = Matrix::zero(r.dim0(g.tgt(a)), r.dim1(g.src(b)));
  return r;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-bound, bound);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n, int bound) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, bound);
    if (is_invertible(m)) return m;
  }
}

GaugeData random_gauge(const Ruth& target, Rng& rng) {
  const auto& G = target.groupoid;
  GaugeData d;
  for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
    d.phi0.push_back(random_invertible(rng, target.dim0(x)));
    d.phi1.push_back(random_invertible(rng, target.dim1(x)));
  }
  for (int a = 0; a < static_cast<int>(G.arrow_count()); ++a) {
    const std::size_t rows = target.dim0(G.tgt(a)), cols = target.dim1(G.src(a));
    d.mu.push_back(G.is_unit(a) ? Matrix::zero(rows, cols) : random_matrix(rng, rows, cols, 1));
  }
  return d;
}

FiniteGroupoid random_groupoid(Rng& rng, const RandomBounds& bounds) {
  std::vector<ComponentShape> comps;
  int objects = 0, arrows = 0;
  do {
    const int left_obj = bounds.max_objects - objects, left_arr = bounds.max_arrows - arrows;
    if (left_obj < 1 || left_arr < 1) break;
    int n = rng.range(1, left_obj);
    while (n * n > left_arr) --n;
    const int m = rng.range(1, std::max(1, left_arr / (n * n)));
    comps.push_back({n, m});
    objects += n;
    arrows += n * n * m;
  } while (rng.range(0, 2) == 0);
  return product_groupoid(comps);
}

Ruth random_ruth(Rng& rng, const RandomBounds& bounds) {
  const Ruth strict = strict_ruth(random_groupoid(rng, bounds), rng, bounds.max_dim);
  const GaugeData d = random_gauge(strict, rng);
  return gauge_transport(strict, d.phi0, d.phi1, d.mu).source;
}

GaugeResult random_morphism_into(const Ruth& r, Rng& rng) {
  const GaugeData d = random_gauge(r, rng);
  return gauge_transport(r, d.phi0, d.phi1, d.mu);
}

TwoTermComplex random_complex(Rng& rng, const std::vector<std::string>& base, int max_dim) {
  TwoTermComplex c;
  c.base = base;
  for (std::size_t x = 0; x < base.size(); ++x) {
    const auto d0 = static_cast<std::size_t>(rng.range(0, max_dim));
    const auto d1 = static_cast<std::size_t>(rng.range(0, max_dim));
    c.diff.push_back(random_matrix(rng, d1, d0, 1));
  }
  return c;
}

ChainMap random_chain_map(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& d) {
  ChainMap f;
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    const std::size_t c0 = c.dim0(x), c1 = c.dim1(x), d0 = d.dim0(x), d1 = d.dim1(x);
    const Matrix& dc = c.diff[idx(x)];
    const Matrix& dd = d.diff[idx(x)];
    // unknowns: f0 (d0 x c0) then f1 (d1 x c1), row-major; equation f1 dc - dd f0 = 0 (d1 x c0)
    const std::size_t n0 = d0 * c0, n1 = d1 * c1;
    Matrix eq(d1 * c0, n0 + n1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < c0; ++j) {
        const std::size_t row = i * c0 + j;
        for (std::size_t k = 0; k < c1; ++k) eq(row, n0 + i * c1 + k) += dc(k, j);
        for (std::size_t k = 0; k < d0; ++k) eq(row, k * c0 + j) -= dd(i, k);
      }
    const auto basis = kernel_basis(eq);
    Vector sol(n0 + n1);
    for (const auto& b : basis) sol = sol + Rational(rng.range(-2, 2)) * b;
    Matrix f0(d0, c0), f1(d1, c1);
    for (std::size_t i = 0; i < n0; ++i) f0(i / c0, i % c0) = sol[i];
    for (std::size_t i = 0; i < n1; ++i) f1(i / c1, i % c1) = sol[n0 + i];
    f.basemap.push_back(x);
    f.f0.push_back(std::move(f0));
    f.f1.push_back(std::move(f1));
  }
  return f;
}

ChainHomotopy random_homotopy_from(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& d, const ChainMap& f) {
  ChainHomotopy h{f, f, {}};
  for (int x = 0; x < static_cast<int>(c.size()); ++x) {
    const int y = f.basemap[idx(x)];
    Matrix w = random_matrix(rng, d.dim0(y), c.dim1(x), 2);
    h.to.f0[idx(x)] = f.f0[idx(x)] + w * c.diff[idx(x)];
    h.to.f1[idx(x)] = f.f1[idx(x)] + d.diff[idx(y)] * w;
    h.omega.push_back(std::move(w));
  }
  return h;
}

std::vector<Matrix> random_isos(Rng& rng, const std::vector<std::size_t>& dims) {
  std::vector<Matrix> out;
  for (auto d : dims) out.push_back(random_invertible(rng, d));
  return out;
}

VBGroupoid random_vb(Rng& rng, const RandomBounds& bounds) {
  const VBGroupoid v = semidirect(random_ruth(rng, bounds));
  const auto q = random_isos(rng, v.objdim);
  return transport(v, q, random_isos(rng, v.arrdim));
}

Connection random_connection(const VBGroupoid& v, const Connection& sigma, Rng& rng) {
  Connection out = sigma;
  const auto& G = v.base;
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g) {
    if (G.is_unit(g)) continue;
    const Matrix k = kernel_matrix(v.source[idx(g)]);
    auto& s = out.sigma[idx(g)];
    s = s + k * random_matrix(rng, k.cols(), s.cols());
  }
  return out;
}

}  // namespace wrep
