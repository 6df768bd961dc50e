#include "wrep/cochain.hpp"

#include <map>
#include <string>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

/// Index in nerve(k) of the i-th face of a (k+1)-tuple (i = 0..k+1).
std::size_t face(const CochainContext& ctx, const std::vector<int>& t, std::size_t i) {
  const auto& G = ctx.groupoid();
  const std::size_t n = t.size();
  if (n == 1) return ctx.nerve(0).find_object(i == 0 ? G.src(t[0]) : G.tgt(t[0]));
  std::vector<int> f;
  f.reserve(n - 1);
  if (i == 0) {
    f.assign(t.begin() + 1, t.end());
  } else if (i == n) {
    f.assign(t.begin(), t.end() - 1);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      if (j + 1 == i) {
        f.push_back(G.compose(t[j], t[j + 1]));
        ++j;
      } else {
        f.push_back(t[j]);
      }
    }
  }
  return *ctx.nerve(static_cast<int>(n - 1)).find(f);
}

/// Index of the sub-tuple t[from..to) in its nerve; empty ranges become the
/// object at the joint (target of t[from] side, i.e. source of t[from-1]).
std::size_t sub_simplex(const CochainContext& ctx, const std::vector<int>& t, std::size_t from, std::size_t to, int object) {
  if (from == to) return ctx.nerve(0).find_object(object);
  return *ctx.nerve(static_cast<int>(to - from)).find(std::vector<int>(t.begin() + static_cast<std::ptrdiff_t>(from),
                                                                         t.begin() + static_cast<std::ptrdiff_t>(to)));
}

Rational sign(std::size_t i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

void require_degree(const CochainContext& ctx, int degree, const char* what) {
  if (degree < 0 || degree > ctx.max_degree())
    throw DegreeError(std::string(what) + ": degree " + std::to_string(degree) + " outside 0.." +
                      std::to_string(ctx.max_degree()));
}

Cochain empty_cochain() { return Cochain{-1, {}}; }

Matrix scaled_identity(std::size_t n, const Rational& c) { return c * Matrix::identity(n); }

}  // namespace

CochainContext::CochainContext(FiniteGroupoid g, int max_degree) : g_(std::move(g)), max_degree_(max_degree) {
  if (max_degree < 0) throw DegreeError("negative maximum degree");
  for (int k = 0; k <= max_degree; ++k) nerves_.emplace_back(g_, k);
}

const Nerve& CochainContext::nerve(int k) const {
  if (k < 0 || k > max_degree_)
    throw DegreeError("nerve degree " + std::to_string(k) + " outside 0.." + std::to_string(max_degree_));
  return nerves_[idx(k)];
}

int CochainContext::value_object(int k, std::size_t i) const {
  const Simplex& s = nerve(k)[i];
  return s.target;
}

FiberDims scalar_dims(const FiniteGroupoid& g) { return FiberDims(g.object_count(), 1); }

Cochain zero_cochain(const CochainContext& ctx, int degree, const FiberDims& dims) {
  if (degree < 0) return empty_cochain();
  Cochain c{degree, {}};
  const Nerve& n = ctx.nerve(degree);
  for (std::size_t i = 0; i < n.size(); ++i) c.values.emplace_back(dims.at(idx(n[i].target)));
  return c;
}

bool is_zero(const Cochain& c) {
  for (const auto& v : c.values)
    if (!is_zero(v)) return false;
  return true;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) throw DimensionError("adding cochains of different degrees");
  Cochain c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.values[i] + b.values[i];
  return c;
}

Cochain operator-(const Cochain& a) {
  Cochain c = a;
  for (auto& v : c.values) v = Rational(-1) * v;
  return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

bool is_normalized(const CochainContext& ctx, const Cochain& c) {
  if (c.degree <= 0) return true;
  const Nerve& n = ctx.nerve(c.degree);
  const auto flags = degeneracy_positions(ctx.groupoid(), n);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (flags[i] && !is_zero(c.values[i])) return false;
  return true;
}

Cochain coboundary(const CochainContext& ctx, const Cochain& f) {
  const int k = f.degree;
  require_degree(ctx, k + 1, "coboundary");
  const Nerve& out = ctx.nerve(k + 1);
  Cochain c{k + 1, {}};
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& t = out[j].arrows;
    Vector v = f.values[face(ctx, t, 0)];
    for (std::size_t i = 1; i <= t.size(); ++i) v = v + sign(i) * f.values[face(ctx, t, i)];
    c.values.push_back(std::move(v));
  }
  return c;
}

Cochain star(const CochainContext& ctx, const Cochain& w, const Cochain& f) {
  const int p = w.degree, q = f.degree;
  require_degree(ctx, p + q, "star");
  const Nerve& out = ctx.nerve(p + q);
  Cochain c{p + q, {}};
  const auto& G = ctx.groupoid();
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& t = out[j].arrows;
    const auto pp = idx(p);
    // front (g1..gp) sits over t(g1); back (g_{p+1}..) starts at s(gp)
    const int joint = p + q == 0 ? out[j].target : (p > 0 ? G.src(t[pp - 1]) : G.tgt(t[0]));
    const std::size_t front = sub_simplex(ctx, t, 0, pp, joint);
    const std::size_t back = sub_simplex(ctx, t, pp, t.size(), joint);
    c.values.push_back(f.values[back].at(0) * w.values[front]);
  }
  return c;
}

Cochain twisted_differential(const CochainContext& ctx, const std::vector<Matrix>& lambda, const Cochain& w) {
  const int k = w.degree;
  require_degree(ctx, k + 1, "twisted differential");
  const Nerve& out = ctx.nerve(k + 1);
  Cochain c{k + 1, {}};
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& t = out[j].arrows;
    Vector v = lambda.at(idx(t[0])).apply(w.values[face(ctx, t, 0)]);
    for (std::size_t i = 1; i <= t.size(); ++i) v = v + sign(i) * w.values[face(ctx, t, i)];
    c.values.push_back(std::move(v));
  }
  return c;
}

namespace {

FiberDims dims0(const Ruth& r) {
  FiberDims d;
  for (int x = 0; x < static_cast<int>(r.complex.size()); ++x) d.push_back(r.dim0(x));
  return d;
}

FiberDims dims1(const Ruth& r) {
  FiberDims d;
  for (int x = 0; x < static_cast<int>(r.complex.size()); ++x) d.push_back(r.dim1(x));
  return d;
}

Cochain omega_insert(const CochainContext& ctx, const Ruth& r, const Cochain& eta) {
  const int m = eta.degree;
  require_degree(ctx, m + 2, "omega insertion");
  const Nerve& out = ctx.nerve(m + 2);
  const auto& G = ctx.groupoid();
  Cochain c{m + 2, {}};
  for (std::size_t j = 0; j < out.size(); ++j) {
    const auto& t = out[j].arrows;
    const std::size_t rest = sub_simplex(ctx, t, 2, t.size(), G.src(t[1]));
    c.values.push_back(r.omega_at(t[0], t[1]).apply(eta.values[rest]));
  }
  return c;
}

Cochain apply_delta(const CochainContext& ctx, const Ruth& r, const Cochain& w) {
  Cochain c{w.degree, {}};
  for (std::size_t j = 0; j < w.values.size(); ++j) c.values.push_back(r.delta(ctx.value_object(w.degree, j)).apply(w.values[j]));
  return c;
}

}  // namespace

TotalCochain zero_total(const CochainContext& ctx, const Ruth& r, int degree) {
  return {degree, zero_cochain(ctx, degree, dims0(r)), zero_cochain(ctx, degree - 1, dims1(r))};
}

std::size_t total_dimension(const CochainContext& ctx, const Ruth& r, int degree) {
  std::size_t n = 0;
  const Nerve& a = ctx.nerve(degree);
  for (std::size_t i = 0; i < a.size(); ++i) n += r.dim0(a[i].target);
  if (degree >= 1) {
    const Nerve& b = ctx.nerve(degree - 1);
    for (std::size_t i = 0; i < b.size(); ++i) n += r.dim1(b[i].target);
  }
  return n;
}

TotalCochain total_basis_element(const CochainContext& ctx, const Ruth& r, int degree, int layer, std::size_t simplex,
                                 std::size_t coord) {
  TotalCochain c = zero_total(ctx, r, degree);
  Cochain& part = layer == 0 ? c.e0 : c.e1;
  part.values.at(simplex).at(coord) = 1;
  return c;
}

TotalCochain total_basis_element(const CochainContext& ctx, const Ruth& r, int degree, std::size_t index) {
  const Nerve& a = ctx.nerve(degree);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t d = r.dim0(a[i].target);
    if (index < d) return total_basis_element(ctx, r, degree, 0, i, index);
    index -= d;
  }
  if (degree >= 1) {
    const Nerve& b = ctx.nerve(degree - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::size_t d = r.dim1(b[i].target);
      if (index < d) return total_basis_element(ctx, r, degree, 1, i, index);
      index -= d;
    }
  }
  throw DimensionError("basis index out of range");
}

TotalCochain total_operator(const CochainContext& ctx, const Ruth& r, const TotalCochain& c) {
  const int n = c.degree;
  require_degree(ctx, n + 1, "total operator");
  TotalCochain out;
  out.degree = n + 1;
  out.e0 = twisted_differential(ctx, r.lambda0, c.e0);
  out.e1 = apply_delta(ctx, r, c.e0);
  if (n >= 1) {
    out.e0 = out.e0 + omega_insert(ctx, r, c.e1);
    out.e1 = out.e1 - twisted_differential(ctx, r.lambda1, c.e1);
  }
  return out;
}

TotalCochain star(const CochainContext& ctx, const Ruth& r, const TotalCochain& w, const Cochain& f) {
  TotalCochain out;
  out.degree = w.degree + f.degree;
  out.e0 = star(ctx, w.e0, f);
  out.e1 = w.e1.degree >= 0 ? star(ctx, w.e1, f) : zero_cochain(ctx, out.degree - 1, dims1(r));
  return out;
}

SparseOperator total_operator_blocks(const CochainContext& ctx, const Ruth& r, int n) {
  require_degree(ctx, n + 1, "total operator");
  using Key = SparseOperator::Key;
  SparseOperator op;
  op.degree = n;
  const auto& G = ctx.groupoid();
  auto flush = [&](Key target, std::map<Key, Matrix>& acc) {
    std::vector<std::pair<Key, Matrix>> terms;
    for (auto& [k, m] : acc)
      if (!m.is_zero()) terms.emplace_back(k, std::move(m));
    op.rows.emplace_back(target, std::move(terms));
    acc.clear();
  };
  auto add = [](std::map<Key, Matrix>& acc, Key k, const Matrix& m) {
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, m);
    else
      it->second += m;
  };

  std::map<Key, Matrix> acc;
  const Nerve& top = ctx.nerve(n + 1);
  for (std::size_t j = 0; j < top.size(); ++j) {
    const auto& t = top[j].arrows;
    const std::size_t d = r.dim0(top[j].target);
    add(acc, {0, face(ctx, t, 0)}, r.lambda0[idx(t[0])]);
    for (std::size_t i = 1; i <= t.size(); ++i) add(acc, {0, face(ctx, t, i)}, scaled_identity(d, sign(i)));
    if (n >= 1) add(acc, {1, sub_simplex(ctx, t, 2, t.size(), G.src(t[1]))}, r.omega_at(t[0], t[1]));
    flush({0, j}, acc);
  }
  const Nerve& mid = ctx.nerve(n);
  for (std::size_t j = 0; j < mid.size(); ++j) {
    const int x = mid[j].target;
    add(acc, {0, j}, r.delta(x));
    if (n >= 1) {
      const auto& t = mid[j].arrows;
      add(acc, {1, face(ctx, t, 0)}, -r.lambda1[idx(t[0])]);
      for (std::size_t i = 1; i <= t.size(); ++i) add(acc, {1, face(ctx, t, i)}, scaled_identity(r.dim1(x), -sign(i)));
    }
    flush({1, j}, acc);
  }
  return op;
}

Report check_d_squared(const Ruth& r, int max_total_degree) {
  check_ruth_shapes(r);
  const CochainContext ctx(r.groupoid, max_total_degree + 2);
  using Key = SparseOperator::Key;
  Report rep;
  auto label = [&](int degree, Key k) {
    const int gdeg = k.layer == 0 ? degree : degree - 1;
    return std::string(k.layer == 0 ? "E0" : "E1") + simplex_label(ctx.groupoid(), ctx.nerve(gdeg)[k.simplex]);
  };
  SparseOperator first = total_operator_blocks(ctx, r, 0);
  for (int n = 0; n <= max_total_degree; ++n) {
    SparseOperator second = total_operator_blocks(ctx, r, n + 1);
    std::map<Key, const std::vector<std::pair<Key, Matrix>>*> rows;
    for (const auto& [k, terms] : first.rows) rows.emplace(k, &terms);
    for (const auto& [target, terms] : second.rows) {
      std::map<Key, Matrix> acc;
      for (const auto& [mid, outer] : terms)
        for (const auto& [src, inner] : *rows.at(mid)) {
          Matrix prod = outer * inner;
          auto it = acc.find(src);
          if (it == acc.end())
            acc.emplace(src, std::move(prod));
          else
            it->second += prod;
        }
      for (const auto& [src, m] : acc)
        if (!m.is_zero())
          rep.add("D^2", "degree " + std::to_string(n) + ": " + label(n + 2, target) + " <- " + label(n, src), "0",
                  to_string(m));
    }
    first = std::move(second);
  }
  return rep;
}

Report check_leibniz(const CochainContext& ctx, const Ruth& r, const std::vector<LeibnizSample>& samples) {
  Report rep;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [w, f] = samples[i];
    const TotalCochain lhs = total_operator(ctx, r, star(ctx, r, w, f));
    const TotalCochain dw_f = star(ctx, r, total_operator(ctx, r, w), f);
    const TotalCochain w_df = star(ctx, r, w, coboundary(ctx, f));
    const Rational s = sign(idx(w.degree));
    TotalCochain rhs = dw_f;
    for (std::size_t j = 0; j < rhs.e0.values.size(); ++j) rhs.e0.values[j] = rhs.e0.values[j] + s * w_df.e0.values[j];
    for (std::size_t j = 0; j < rhs.e1.values.size(); ++j) rhs.e1.values[j] = rhs.e1.values[j] + s * w_df.e1.values[j];
    if (!(lhs.e0 == rhs.e0) || !(lhs.e1 == rhs.e1)) rep.add("leibniz", "sample " + std::to_string(i));
  }
  return rep;
}

}  // namespace wrep
