#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wrep/report.hpp"

namespace wrep {

/// Raw presentation of a finite groupoid, as it appears in instance files.
struct GroupoidTables {
  struct Arrow {
    std::string id, src, tgt;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> units;                         // object -> arrow
  std::vector<std::tuple<std::string, std::string, std::string>> compose;  // (g1, g2, g1∘g2)
  std::map<std::string, std::string> inverse;                       // arrow -> arrow
};

/// A finite groupoid with explicit tables. Objects and arrows are indexed in
/// lexicographic order of their identifiers. `compose(a, b)` is a∘b ("b, then
/// a") and is expected exactly when src(a) == tgt(b); the table may be
/// incomplete or contain extra entries so that invalid candidates can be
/// represented and reported by validate_groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  /// Throws StructureError on unknown or duplicate identifiers and on missing
  /// unit/inverse entries.
  static FiniteGroupoid from_tables(const GroupoidTables& tables);
  GroupoidTables to_tables() const;

  /// The groupoid whose only arrows are units; unit arrows carry the object's name.
  static FiniteGroupoid trivial(const std::vector<std::string>& objects);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const std::string& arrow_name(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& arrow_names() const { return arrows_; }
  int object_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  int src(int a) const { return src_[static_cast<std::size_t>(a)]; }
  int tgt(int a) const { return tgt_[static_cast<std::size_t>(a)]; }
  int unit(int x) const { return unit_[static_cast<std::size_t>(x)]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  bool is_unit(int a) const;
  bool composable(int a, int b) const { return src(a) == tgt(b); }
  std::optional<int> compose_entry(int a, int b) const;
  /// a∘b; throws CompositionError when the entry is absent.
  int compose(int a, int b) const;

  /// Overwrites one composition-table entry (used to build mutants).
  void set_compose_entry(int a, int b, std::optional<int> value);
  void set_inverse_entry(int a, int value) { inv_.at(static_cast<std::size_t>(a)) = value; }

  bool operator==(const FiniteGroupoid&) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<int> src_, tgt_, unit_, inv_;
  std::vector<int> comp_;  // arrows x arrows, -1 when undefined
};

/// Lists every violated axiom instance; an empty report means the tables
/// define a groupoid.
Report validate_groupoid(const FiniteGroupoid& g);

/// A composable string g_1, ..., g_p with s(g_i) = t(g_{i+1}). Degree-0
/// simplices have no arrows and source = target = the object.
struct Simplex {
  std::vector<int> arrows;
  int source = 0;  // s_p: source of g_p
  int target = 0;  // t_p: target of g_1
};

/// All composable p-tuples of a groupoid in lexicographic order of arrow
/// indices (degree 0: the objects in index order).
class Nerve {
 public:
  Nerve() = default;
  Nerve(const FiniteGroupoid& g, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return simplices_.size(); }
  const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  /// Index of the tuple with these arrows (degree >= 1), if composable.
  std::optional<std::size_t> find(const std::vector<int>& arrows) const;
  /// Index of the degree-0 simplex of object x.
  std::size_t find_object(int x) const;

 private:
  int degree_ = 0;
  std::vector<Simplex> simplices_;
  std::map<std::vector<int>, std::size_t> index_;
};

Nerve nerve(const FiniteGroupoid& g, int degree);

/// Per-simplex flag: true when some g_i is a unit arrow.
std::vector<bool> degeneracy_positions(const FiniteGroupoid& g, const Nerve& n);

std::string simplex_label(const FiniteGroupoid& g, const Simplex& s);
std::string tuple_label(const FiniteGroupoid& g, const std::vector<int>& arrows);

}  // namespace wrep
