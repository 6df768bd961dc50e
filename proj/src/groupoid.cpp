#include "wrep/groupoid.hpp"

#include <algorithm>
#include <set>

#include "wrep/errors.hpp"

namespace wrep {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names, const char* what) {
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw StructureError(std::string("duplicate ") + what + " identifier");
  return names;
}

int index_in(const std::vector<std::string>& sorted, const std::string& name, const char* what) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) throw StructureError(std::string("unknown ") + what + " '" + name + "'");
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

FiniteGroupoid FiniteGroupoid::from_tables(const GroupoidTables& t) {
  FiniteGroupoid g;
  g.objects_ = sorted_unique(t.objects, "object");
  std::vector<std::string> arrow_ids;
  for (const auto& a : t.arrows) arrow_ids.push_back(a.id);
  g.arrows_ = sorted_unique(arrow_ids, "arrow");

  const std::size_t n = g.arrows_.size();
  g.src_.assign(n, -1);
  g.tgt_.assign(n, -1);
  for (const auto& a : t.arrows) {
    const auto i = static_cast<std::size_t>(g.arrow_index(a.id));
    g.src_[i] = index_in(g.objects_, a.src, "object");
    g.tgt_[i] = index_in(g.objects_, a.tgt, "object");
  }

  g.unit_.assign(g.objects_.size(), -1);
  for (const auto& [obj, arrow] : t.units)
    g.unit_[static_cast<std::size_t>(index_in(g.objects_, obj, "object"))] = index_in(g.arrows_, arrow, "arrow");
  for (std::size_t x = 0; x < g.unit_.size(); ++x)
    if (g.unit_[x] < 0) throw StructureError("object '" + g.objects_[x] + "' has no unit arrow");

  g.inv_.assign(n, -1);
  for (const auto& [a, b] : t.inverse)
    g.inv_[static_cast<std::size_t>(index_in(g.arrows_, a, "arrow"))] = index_in(g.arrows_, b, "arrow");
  for (std::size_t a = 0; a < n; ++a)
    if (g.inv_[a] < 0) throw StructureError("arrow '" + g.arrows_[a] + "' has no inverse entry");

  g.comp_.assign(n * n, -1);
  for (const auto& [a, b, ab] : t.compose) {
    const auto i = static_cast<std::size_t>(index_in(g.arrows_, a, "arrow"));
    const auto j = static_cast<std::size_t>(index_in(g.arrows_, b, "arrow"));
    if (g.comp_[i * n + j] >= 0) throw StructureError("duplicate composition entry (" + a + "," + b + ")");
    g.comp_[i * n + j] = index_in(g.arrows_, ab, "arrow");
  }
  return g;
}

GroupoidTables FiniteGroupoid::to_tables() const {
  GroupoidTables t;
  t.objects = objects_;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    t.arrows.push_back({arrows_[a], objects_[static_cast<std::size_t>(src_[a])], objects_[static_cast<std::size_t>(tgt_[a])]});
  for (std::size_t x = 0; x < objects_.size(); ++x) t.units[objects_[x]] = arrows_[static_cast<std::size_t>(unit_[x])];
  const std::size_t n = arrows_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (comp_[i * n + j] >= 0) t.compose.emplace_back(arrows_[i], arrows_[j], arrows_[static_cast<std::size_t>(comp_[i * n + j])]);
  for (std::size_t a = 0; a < n; ++a) t.inverse[arrows_[a]] = arrows_[static_cast<std::size_t>(inv_[a])];
  return t;
}

FiniteGroupoid FiniteGroupoid::trivial(const std::vector<std::string>& objects) {
  GroupoidTables t;
  t.objects = objects;
  for (const auto& x : objects) {
    t.arrows.push_back({x, x, x});
    t.units[x] = x;
    t.compose.emplace_back(x, x, x);
    t.inverse[x] = x;
  }
  return from_tables(t);
}

int FiniteGroupoid::object_index(const std::string& name) const { return index_in(objects_, name, "object"); }
int FiniteGroupoid::arrow_index(const std::string& name) const { return index_in(arrows_, name, "arrow"); }

bool FiniteGroupoid::is_unit(int a) const {
  const int x = src(a);
  return x >= 0 && unit(x) == a;
}

std::optional<int> FiniteGroupoid::compose_entry(int a, int b) const {
  const int v = comp_[static_cast<std::size_t>(a) * arrows_.size() + static_cast<std::size_t>(b)];
  if (v < 0) return std::nullopt;
  return v;
}

int FiniteGroupoid::compose(int a, int b) const {
  if (auto v = compose_entry(a, b)) return *v;
  throw CompositionError("no composite for (" + arrow_name(a) + "," + arrow_name(b) + ")");
}

void FiniteGroupoid::set_compose_entry(int a, int b, std::optional<int> value) {
  comp_.at(static_cast<std::size_t>(a) * arrows_.size() + static_cast<std::size_t>(b)) = value.value_or(-1);
}

Report validate_groupoid(const FiniteGroupoid& g) {
  Report r;
  const int n = static_cast<int>(g.arrow_count());
  auto name = [&](int a) { return g.arrow_name(a); };
  auto pair = [&](int a, int b) { return "(" + name(a) + "," + name(b) + ")"; };

  for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
    const int u = g.unit(x);
    if (g.src(u) != x || g.tgt(u) != x)
      r.add("unit-endpoints", g.object_name(x), g.object_name(x), g.object_name(g.src(u)) + "->" + g.object_name(g.tgt(u)));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto ab = g.compose_entry(a, b);
      if (g.composable(a, b) && !ab) {
        r.add("composition-domain", pair(a, b), "defined", "undefined");
      } else if (!g.composable(a, b) && ab) {
        r.add("composition-domain", pair(a, b), "undefined", name(*ab));
      } else if (ab && (g.src(*ab) != g.src(b) || g.tgt(*ab) != g.tgt(a))) {
        r.add("composite-endpoints", pair(a, b), g.object_name(g.src(b)) + "->" + g.object_name(g.tgt(a)),
              g.object_name(g.src(*ab)) + "->" + g.object_name(g.tgt(*ab)));
      }
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!g.composable(a, b)) continue;
      const auto ab = g.compose_entry(a, b);
      for (int c = 0; c < n; ++c) {
        if (!g.composable(b, c)) continue;
        const auto bc = g.compose_entry(b, c);
        if (!ab || !bc) continue;
        const auto left = g.compose_entry(*ab, c);
        const auto right = g.compose_entry(a, *bc);
        if (left != right) {
          r.add("associativity", "(" + name(a) + "," + name(b) + "," + name(c) + ")",
                left ? name(*left) : "undefined", right ? name(*right) : "undefined");
        }
      }
    }

  for (int a = 0; a < n; ++a) {
    const auto lu = g.compose_entry(g.unit(g.tgt(a)), a);
    if (lu != a) r.add("left-unit", name(a), name(a), lu ? name(*lu) : "undefined");
    const auto ru = g.compose_entry(a, g.unit(g.src(a)));
    if (ru != a) r.add("right-unit", name(a), name(a), ru ? name(*ru) : "undefined");

    const int ai = g.inverse(a);
    if (g.src(ai) != g.tgt(a) || g.tgt(ai) != g.src(a)) {
      r.add("inverse-endpoints", name(a), g.object_name(g.tgt(a)) + "->" + g.object_name(g.src(a)),
            g.object_name(g.src(ai)) + "->" + g.object_name(g.tgt(ai)));
      continue;
    }
    const auto right = g.compose_entry(a, ai);
    if (right != g.unit(g.tgt(a)))
      r.add("inverse", pair(a, ai), name(g.unit(g.tgt(a))), right ? name(*right) : "undefined");
    const auto left = g.compose_entry(ai, a);
    if (left != g.unit(g.src(a)))
      r.add("inverse", pair(ai, a), name(g.unit(g.src(a))), left ? name(*left) : "undefined");
  }
  return r;
}

Nerve::Nerve(const FiniteGroupoid& g, int degree) : degree_(degree) {
  if (degree < 0) return;
  if (degree == 0) {
    for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
      index_[{x}] = simplices_.size();
      simplices_.push_back({{}, x, x});
    }
    return;
  }
  const int n = static_cast<int>(g.arrow_count());
  std::vector<int> current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == degree) {
      index_[current] = simplices_.size();
      simplices_.push_back({current, g.src(current.back()), g.tgt(current.front())});
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (!current.empty() && g.tgt(a) != g.src(current.back())) continue;
      current.push_back(a);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
}

std::optional<std::size_t> Nerve::find(const std::vector<int>& arrows) const {
  auto it = index_.find(arrows);
  if (it == index_.end() || degree_ == 0) return std::nullopt;
  return it->second;
}

std::size_t Nerve::find_object(int x) const {
  if (degree_ != 0) throw DegreeError("find_object on a nerve of positive degree");
  return index_.at({x});
}

Nerve nerve(const FiniteGroupoid& g, int degree) { return Nerve(g, degree); }

std::vector<bool> degeneracy_positions(const FiniteGroupoid& g, const Nerve& n) {
  std::vector<bool> flags(n.size(), false);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (int a : n[i].arrows)
      if (g.is_unit(a)) flags[i] = true;
  return flags;
}

std::string tuple_label(const FiniteGroupoid& g, const std::vector<int>& arrows) {
  std::string s = "(";
  for (std::size_t i = 0; i < arrows.size(); ++i) s += (i ? "," : "") + g.arrow_name(arrows[i]);
  return s + ")";
}

std::string simplex_label(const FiniteGroupoid& g, const Simplex& s) {
  if (s.arrows.empty()) return g.object_name(s.target);
  return tuple_label(g, s.arrows);
}

}  // namespace wrep
