#include "wrep/weak_action.hpp"

#include <optional>
#include <string>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::string name_list(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + ")";
}

class Tables {
 public:
  explicit Tables(const WeakAction& w) : w_(w) {}

  int obj(int g, int x) const { return w_.act_objects.at({g, x}); }
  int arr(int g, int h) const { return w_.act_arrows.at({g, h}); }
  int eps(int x) const { return w_.epsilon.at(static_cast<std::size_t>(x)); }

 private:
  const WeakAction& w_;
};

}  // namespace

void check_weak_action_tables(const WeakAction& w) {
  const auto& G = w.acting;
  const auto& H = w.target;
  const int ng = static_cast<int>(G.arrow_count()), no = static_cast<int>(H.object_count()),
            nh = static_cast<int>(H.arrow_count());
  if (w.moment.size() != H.object_count() || w.epsilon.size() != H.object_count())
    throw StructureError("moment and epsilon need one entry per object of H");
  for (int x = 0; x < no; ++x) {
    const int f = w.moment[static_cast<std::size_t>(x)];
    if (f < 0 || f >= static_cast<int>(G.object_count())) throw StructureError("moment out of range at " + H.object_name(x));
    const int e = w.epsilon[static_cast<std::size_t>(x)];
    if (e < 0 || e >= nh) throw StructureError("epsilon out of range at " + H.object_name(x));
  }
  auto f = [&](int x) { return w.moment[static_cast<std::size_t>(x)]; };
  std::size_t objects = 0, arrows = 0, cells = 0;
  for (int g = 0; g < ng; ++g) {
    for (int x = 0; x < no; ++x) {
      if (G.src(g) != f(x)) continue;
      ++objects;
      const auto it = w.act_objects.find({g, x});
      if (it == w.act_objects.end() || it->second < 0 || it->second >= no)
        throw StructureError("action on objects missing or out of range at " + name_list({G.arrow_name(g), H.object_name(x)}));
    }
    for (int h = 0; h < nh; ++h) {
      if (G.src(g) != f(H.src(h))) continue;
      ++arrows;
      const auto it = w.act_arrows.find({g, h});
      if (it == w.act_arrows.end() || it->second < 0 || it->second >= nh)
        throw StructureError("action on arrows missing or out of range at " + name_list({G.arrow_name(g), H.arrow_name(h)}));
    }
    for (int k = 0; k < ng; ++k) {
      if (!G.composable(g, k)) continue;
      for (int x = 0; x < no; ++x) {
        if (G.src(k) != f(x)) continue;
        ++cells;
        const auto it = w.alpha.find({g, k, x});
        if (it == w.alpha.end() || it->second < 0 || it->second >= nh)
          throw StructureError("alpha missing or out of range at " +
                               name_list({G.arrow_name(g), G.arrow_name(k), H.object_name(x)}));
      }
    }
  }
  if (w.act_objects.size() != objects || w.act_arrows.size() != arrows || w.alpha.size() != cells)
    throw StructureError("weak action tables have entries outside their domains");
}

Report validate_weak_action(const WeakAction& w) {
  Report rep;
  rep.merge(validate_groupoid(w.acting), "acting:");
  rep.merge(validate_groupoid(w.target), "target:");
  if (!rep.ok()) return rep;
  check_weak_action_tables(w);
  const auto& G = w.acting;
  const auto& H = w.target;
  const Tables T(w);
  const int ng = static_cast<int>(G.arrow_count()), no = static_cast<int>(H.object_count()),
            nh = static_cast<int>(H.arrow_count());
  auto f = [&](int x) { return w.moment[static_cast<std::size_t>(x)]; };
  auto arrow = [&](int a) { return H.arrow_name(a); };
  auto check = [&](const std::string& id, const std::vector<std::string>& at, int expected, int actual) {
    if (expected != actual) rep.add(id, name_list(at), arrow(expected), arrow(actual));
  };
  auto compose = [&](int a, int b) -> std::optional<int> { return H.composable(a, b) ? H.compose_entry(a, b) : std::nullopt; };

  for (int h = 0; h < nh; ++h)
    if (f(H.src(h)) != f(H.tgt(h))) rep.add("moment", name_list({arrow(h)}), G.object_name(f(H.src(h))), G.object_name(f(H.tgt(h))));
  if (!rep.ok()) return rep;

  for (const auto& [p, y] : w.act_objects)
    if (f(y) != G.tgt(p.first))
      rep.add("moment-compatibility", name_list({G.arrow_name(p.first), H.object_name(p.second)}), G.object_name(G.tgt(p.first)),
              G.object_name(f(y)));
  for (const auto& [p, a] : w.act_arrows) {
    const auto [g, h] = p;
    const std::vector<std::string> at{G.arrow_name(g), arrow(h)};
    if (H.src(a) != T.obj(g, H.src(h)) || H.tgt(a) != T.obj(g, H.tgt(h)))
      rep.add("functor-endpoints", name_list(at), H.object_name(T.obj(g, H.src(h))) + "->" + H.object_name(T.obj(g, H.tgt(h))),
              H.object_name(H.src(a)) + "->" + H.object_name(H.tgt(a)));
  }
  if (!rep.ok()) return rep;

  for (int g = 0; g < ng; ++g) {
    for (int x = 0; x < no; ++x)
      if (G.src(g) == f(x)) check("functor-unit", {G.arrow_name(g), H.object_name(x)}, H.unit(T.obj(g, x)), T.arr(g, H.unit(x)));
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b) {
        if (G.src(g) != f(H.src(a)) || !H.composable(a, b)) continue;
        const auto ab = compose(a, b);
        const auto image = compose(T.arr(g, a), T.arr(g, b));
        if (!ab || !image) continue;
        check("functor-composition", {G.arrow_name(g), arrow(a), arrow(b)}, *image, T.arr(g, *ab));
      }
  }

  bool endpoints_ok = true;
  for (const auto& [key, a] : w.alpha) {
    const auto [g, k, x] = key;
    const int from = T.obj(g, T.obj(k, x)), to = T.obj(G.compose(g, k), x);
    if (H.src(a) != from || H.tgt(a) != to) {
      endpoints_ok = false;
      rep.add("alpha-endpoints", name_list({G.arrow_name(g), G.arrow_name(k), H.object_name(x)}),
              H.object_name(from) + "->" + H.object_name(to), H.object_name(H.src(a)) + "->" + H.object_name(H.tgt(a)));
    }
  }
  for (int x = 0; x < no; ++x) {
    const int e = T.eps(x), from = T.obj(G.unit(f(x)), x);
    if (H.src(e) != from || H.tgt(e) != x) {
      endpoints_ok = false;
      rep.add("epsilon-endpoints", name_list({H.object_name(x)}), H.object_name(from) + "->" + H.object_name(x),
              H.object_name(H.src(e)) + "->" + H.object_name(H.tgt(e)));
    }
  }
  if (!endpoints_ok) return rep;

  for (const auto& [key, a] : w.alpha) {
    const auto [g, k, x] = key;
    const int gk = G.compose(g, k);
    const std::vector<std::string> base{G.arrow_name(g), G.arrow_name(k)};
    for (int h = 0; h < nh; ++h) {
      if (H.tgt(h) != x) continue;
      const auto lhs = compose(a, T.arr(g, T.arr(k, h)));
      const auto rhs = compose(T.arr(gk, h), w.alpha.at({g, k, H.src(h)}));
      if (lhs && rhs) check("alpha-naturality", {base[0], base[1], arrow(h)}, *rhs, *lhs);
    }
    for (int l = 0; l < ng; ++l) {
      if (!G.composable(k, l)) continue;
      for (int y = 0; y < no; ++y) {
        if (f(y) != G.src(l) || T.obj(l, y) != x) continue;
        const auto lhs = compose(w.alpha.at({g, G.compose(k, l), y}), T.arr(g, w.alpha.at({k, l, y})));
        const auto rhs = compose(w.alpha.at({gk, l, y}), a);
        if (lhs && rhs) check("pentagon", {base[0], base[1], G.arrow_name(l), H.object_name(y)}, *rhs, *lhs);
      }
    }
    if (G.is_unit(k)) check("unit-coherence", {base[0], base[1], H.object_name(x)}, T.arr(g, T.eps(x)), a);
    if (G.is_unit(g)) check("unit-coherence", {base[0], base[1], H.object_name(x)}, T.eps(T.obj(k, x)), a);
  }
  for (int h = 0; h < nh; ++h) {
    const int u = G.unit(f(H.src(h)));
    const auto lhs = compose(T.eps(H.tgt(h)), T.arr(u, h));
    const auto rhs = compose(h, T.eps(H.src(h)));
    if (lhs && rhs) check("epsilon-naturality", {arrow(h)}, *rhs, *lhs);
  }
  return rep;
}

WeakAction strict_set_action(const FiniteGroupoid& g, const std::vector<std::string>& points, const std::vector<int>& moment,
                             const std::map<std::pair<int, int>, int>& object_action) {
  WeakAction w;
  w.acting = g;
  w.target = FiniteGroupoid::trivial(points);
  w.moment = moment;
  w.act_objects = object_action;
  for (const auto& [p, y] : object_action) w.act_arrows[{p.first, w.target.unit(p.second)}] = w.target.unit(y);
  for (int a = 0; a < static_cast<int>(g.arrow_count()); ++a)
    for (int k = 0; k < static_cast<int>(g.arrow_count()); ++k) {
      if (!g.composable(a, k)) continue;
      for (int x = 0; x < static_cast<int>(points.size()); ++x)
        if (moment[static_cast<std::size_t>(x)] == g.src(k))
          w.alpha[{a, k, x}] = w.target.unit(object_action.at({a, object_action.at({k, x})}));
    }
  for (int x = 0; x < static_cast<int>(points.size()); ++x) w.epsilon.push_back(w.target.unit(x));
  return w;
}

FiniteGroupoid action_groupoid(const WeakAction& w) {
  const Report rep = validate_weak_action(w);
  if (!rep.ok())
    throw ValidationError("weak action is invalid: " + rep.violations.front().check + " at " + rep.violations.front().location);
  const auto& G = w.acting;
  const auto& H = w.target;
  const Tables T(w);
  auto f = [&](int x) { return w.moment[static_cast<std::size_t>(x)]; };
  struct Arrow {
    int g, x, h;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<int, int, int>, std::string> names;
  GroupoidTables t;
  t.objects = H.object_names();
  for (int g = 0; g < static_cast<int>(G.arrow_count()); ++g)
    for (int x = 0; x < static_cast<int>(H.object_count()); ++x) {
      if (G.src(g) != f(x)) continue;
      for (int h = 0; h < static_cast<int>(H.arrow_count()); ++h) {
        if (H.tgt(h) != T.obj(g, x)) continue;
        const std::string id = name_list({G.arrow_name(g), H.object_name(x), H.arrow_name(h)});
        arrows.push_back({g, x, h});
        names[{g, x, h}] = id;
        t.arrows.push_back({id, H.object_name(x), H.object_name(H.src(h))});
      }
    }
  auto inv = [&](int a) { return H.inverse(a); };
  for (const auto& a : arrows) {
    t.units.emplace(H.object_name(a.x), names.at({G.unit(f(a.x)), a.x, inv(T.eps(a.x))}));
    const int gi = G.inverse(a.g);
    const int h_inv = H.compose(H.compose(inv(T.arr(gi, a.h)), inv(w.alpha.at({gi, a.g, a.x}))), inv(T.eps(a.x)));
    t.inverse[names.at({a.g, a.x, a.h})] = names.at({gi, H.src(a.h), h_inv});
  }
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      if (a.x != H.src(b.h)) continue;
      const int h = H.compose(H.compose(w.alpha.at({a.g, b.g, b.x}), T.arr(a.g, b.h)), a.h);
      t.compose.emplace_back(names.at({a.g, a.x, a.h}), names.at({b.g, b.x, b.h}), names.at({G.compose(a.g, b.g), b.x, h}));
    }
  return FiniteGroupoid::from_tables(t);
}

}  // namespace wrep
