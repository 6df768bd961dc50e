#include "wrep/fuzz.hpp"

#include <set>
#include <utility>

#include "wrep/cochain.hpp"
#include "wrep/errors.hpp"
#include "wrep/phi.hpp"

namespace wrep {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::string pair_name(const FiniteGroupoid& g, const ArrowPair& p) {
  return "(" + g.arrow_name(p.first) + "," + g.arrow_name(p.second) + ")";
}

// Columns x with f x = columns of b, or nullopt if one is unsolvable.
std::optional<Matrix> solve_columns(const Matrix& f, const Matrix& b) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto x = solve(f, b.column_vector(j));
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(cols, f.cols());
}

class VBEvaluator {
 public:
  explicit VBEvaluator(const VBGroupoid& v) : v_(v) {}

  const Matrix& S(int a) const { return v_.source[idx(a)]; }
  const Matrix& T(int a) const { return v_.target[idx(a)]; }
  const Matrix& U(int x) const { return v_.unit[idx(x)]; }
  const Matrix& I(int a) const { return v_.inverse[idx(a)]; }

  // Pointwise products a_j·b_j of the columns of a (in V1(g)) and b (in V1(h)).
  std::optional<Matrix> product(int g, int h, const Matrix& a, const Matrix& b) const {
    const auto it = v_.mult.find({g, h});
    if (it == v_.mult.end()) return std::nullopt;
    const auto coords = solve_columns(fibered_product_basis(v_, g, h), Matrix::vstack(a, b));
    if (!coords) return std::nullopt;
    return it->second * *coords;
  }

  // b with t̃_h b = s̃_g a column by column, followed by a basis of ker t̃_h
  // (paired with zero columns of a): together they span P(g,h).
  std::optional<std::pair<Matrix, Matrix>> span(int g, int h, const Matrix& a) const {
    const auto lifted = solve_columns(T(h), S(g) * a);
    if (!lifted) return std::nullopt;
    const Matrix k = kernel_matrix(T(h));
    return std::pair{Matrix::hstack(a, Matrix::zero(a.rows(), k.cols())), Matrix::hstack(*lifted, k)};
  }

 private:
  const VBGroupoid& v_;
};

struct Slot {
  std::string label;
  Matrix* matrix;
};

std::optional<Mutation> mutate_slots(const std::vector<Slot>& slots, Rng& rng, bool noop) {
  std::size_t total = 0;
  for (const auto& s : slots) total += s.matrix->entries().size();
  if (total == 0) return std::nullopt;
  auto pick = static_cast<std::size_t>(rng.range(0, static_cast<int>(total) - 1));
  for (const auto& s : slots) {
    const std::size_t n = s.matrix->entries().size();
    if (pick >= n) {
      pick -= n;
      continue;
    }
    const std::size_t i = pick / s.matrix->cols(), j = pick % s.matrix->cols();
    const int delta = noop ? 0 : rng.range(1, 2) * (rng.coin() ? 1 : -1);
    (*s.matrix)(i, j) += delta;
    const auto space = s.label.find(' ');
    return Mutation{s.label.substr(0, space), s.label.substr(space + 1) + " (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    noop};
  }
  return std::nullopt;
}

void add_vb_slots(std::vector<Slot>& slots, VBGroupoid& v, const std::string& prefix) {
  const auto& G = v.base;
  for (std::size_t a = 0; a < G.arrow_count(); ++a) {
    const std::string& n = G.arrow_name(static_cast<int>(a));
    slots.push_back({prefix + "source " + n, &v.source[a]});
    slots.push_back({prefix + "target " + n, &v.target[a]});
    slots.push_back({prefix + "inverse " + n, &v.inverse[a]});
  }
  for (std::size_t x = 0; x < G.object_count(); ++x) slots.push_back({prefix + "unit " + G.object_name(static_cast<int>(x)), &v.unit[x]});
  for (auto& [p, m] : v.mult) slots.push_back({prefix + "mult " + pair_name(G, p), &m});
}

}  // namespace

bool ruth_oracle(const Ruth& r) {
  try {
    check_ruth_shapes(r);
    const auto& G = r.groupoid;
    for (int x = 0; x < static_cast<int>(G.object_count()); ++x) {
      const auto u = idx(G.unit(x));
      if (!r.lambda0[u].is_identity() || !r.lambda1[u].is_identity()) return false;
    }
    for (const auto& [p, m] : r.omega)
      if ((G.is_unit(p.first) || G.is_unit(p.second)) && !m.is_zero()) return false;
    return check_d_squared(r).ok();
  } catch (const Error&) {
    return false;
  }
}

bool vb_oracle(const VBGroupoid& v) {
  try {
    check_vb_shapes(v);
    const auto& G = v.base;
    if (!validate_groupoid(G).ok()) return false;
    const VBEvaluator e(v);
    const int n_obj = static_cast<int>(G.object_count()), n_arr = static_cast<int>(G.arrow_count());
    for (int x = 0; x < n_obj; ++x) {
      const int u = G.unit(x);
      if (!(e.S(u) * e.U(x)).is_identity() || !(e.T(u) * e.U(x)).is_identity()) return false;
    }
    for (int a = 0; a < n_arr; ++a) {
      if (rank(e.S(a)) != v.objdim[idx(G.src(a))]) return false;
      const Matrix id = Matrix::identity(v.arrdim[idx(a)]);
      const int x = G.src(a), y = G.tgt(a), ai = G.inverse(a);
      const auto left = e.product(G.unit(y), a, e.U(y) * e.T(a), id);
      const auto right = e.product(a, G.unit(x), id, e.U(x) * e.S(a));
      if (!left || !(*left == id) || !right || !(*right == id)) return false;
      if (!(e.S(ai) * e.I(a) == e.T(a)) || !(e.T(ai) * e.I(a) == e.S(a))) return false;
      const auto after = e.product(a, ai, id, e.I(a));
      const auto before = e.product(ai, a, e.I(a), id);
      if (!after || !(*after == e.U(y) * e.T(a)) || !before || !(*before == e.U(x) * e.S(a))) return false;
    }
    for (int g = 0; g < n_arr; ++g)
      for (int h = 0; h < n_arr; ++h) {
        if (!G.composable(g, h)) continue;
        const int gh = G.compose(g, h);
        const auto pair = e.span(g, h, Matrix::identity(v.arrdim[idx(g)]));
        if (!pair) return false;
        const auto& [a, b] = *pair;
        const auto ab = e.product(g, h, a, b);
        if (!ab || !(e.S(gh) * *ab == e.S(h) * b) || !(e.T(gh) * *ab == e.T(g) * a)) return false;
        for (int k = 0; k < n_arr; ++k) {
          if (!G.composable(h, k)) continue;
          const int hk = G.compose(h, k);
          const auto bc = e.span(h, k, b);
          if (!bc) return false;
          const auto& [b3, c3] = *bc;
          const Matrix a3 = Matrix::hstack(a, Matrix::zero(a.rows(), b3.cols() - b.cols()));
          const auto lhs_inner = e.product(g, h, a3, b3);
          const auto rhs_inner = e.product(h, k, b3, c3);
          if (!lhs_inner || !rhs_inner) return false;
          const auto lhs = e.product(gh, k, *lhs_inner, c3);
          const auto rhs = e.product(g, hk, a3, *rhs_inner);
          if (!lhs || !rhs || !(*lhs == *rhs)) return false;
        }
      }
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool wrep_oracle(const WeakRepresentation& w) {
  try {
    check_wrep_shapes(w);
    const Splitting sp = split_bundle(w.bundle);
    if (!is_fiberwise_invertible(sp.to_phi) || !(compose(sp.from_phi, sp.to_phi) == identity_vb_map(w.bundle))) return false;
    const Ruth r = ruth_from_wrep(w);
    if (!ruth_oracle(r)) return false;
    return transport_wrep(w, sp.to_phi.on_objects, sp.to_phi.on_arrows) == wrep_from_ruth(r);
  } catch (const Error&) {
    return false;
  }
}

bool groupoid_oracle(const FiniteGroupoid& g) {
  const int n = static_cast<int>(g.arrow_count());
  for (int x = 0; x < static_cast<int>(g.object_count()); ++x)
    if (g.src(g.unit(x)) != x || g.tgt(g.unit(x)) != x) return false;
  for (int a = 0; a < n; ++a) {
    std::set<int> row, column;
    for (int b = 0; b < n; ++b) {
      const auto ab = g.compose_entry(a, b);
      if (g.composable(a, b) != ab.has_value()) return false;
      if (ab) {
        if (g.src(*ab) != g.src(b) || g.tgt(*ab) != g.tgt(a)) return false;
        if (!row.insert(*ab).second) return false;
      }
      const auto ba = g.compose_entry(b, a);
      if (ba && !column.insert(*ba).second) return false;
    }
  }
  return true;
}

std::optional<Mutation> mutate_entry(Ruth& r, Rng& rng, bool noop) {
  const auto& G = r.groupoid;
  std::vector<Slot> slots;
  for (std::size_t a = 0; a < G.arrow_count(); ++a) {
    slots.push_back({"lambda0 " + G.arrow_name(static_cast<int>(a)), &r.lambda0[a]});
    slots.push_back({"lambda1 " + G.arrow_name(static_cast<int>(a)), &r.lambda1[a]});
  }
  for (auto& [p, m] : r.omega) slots.push_back({"omega " + pair_name(G, p), &m});
  for (std::size_t x = 0; x < r.complex.base.size(); ++x) slots.push_back({"diff " + r.complex.base[x], &r.complex.diff[x]});
  return mutate_slots(slots, rng, noop);
}

std::optional<Mutation> mutate_entry(VBGroupoid& v, Rng& rng, bool noop) {
  std::vector<Slot> slots;
  add_vb_slots(slots, v, "");
  return mutate_slots(slots, rng, noop);
}

std::optional<Mutation> mutate_entry(WeakRepresentation& w, Rng& rng, bool noop) {
  const auto& G = w.groupoid;
  std::vector<Slot> slots;
  for (std::size_t a = 0; a < G.arrow_count(); ++a) {
    slots.push_back({"a0 " + G.arrow_name(static_cast<int>(a)), &w.a0[a]});
    slots.push_back({"a1 " + G.arrow_name(static_cast<int>(a)), &w.a1[a]});
  }
  for (auto& [p, m] : w.alpha) slots.push_back({"alpha " + pair_name(G, p), &m});
  add_vb_slots(slots, w.bundle, "bundle.");
  return mutate_slots(slots, rng, noop);
}

std::optional<Mutation> mutate_compose(FiniteGroupoid& g, Rng& rng, bool noop) {
  const int n = static_cast<int>(g.arrow_count());
  std::vector<ArrowPair> defined;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.compose_entry(a, b)) defined.emplace_back(a, b);
  if (defined.empty() || n < 2) return std::nullopt;
  const auto [a, b] = defined[idx(rng.range(0, static_cast<int>(defined.size()) - 1))];
  const int old = *g.compose_entry(a, b);
  if (!noop) {
    const int shift = rng.range(1, n - 1);
    g.set_compose_entry(a, b, (old + shift) % n);
  }
  return Mutation{"compose", pair_name(g, {a, b}) + " " + g.arrow_name(old) + " -> " + g.arrow_name(*g.compose_entry(a, b)), noop};
}

}  // namespace wrep
