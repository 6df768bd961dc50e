#pragma once

// Weak actions of a finite groupoid G on a finite groupoid H, given by tables.
//   moment[x]                  f(x) ∈ G0 for x ∈ H0
//   act_objects[(g, x)]        g·x, for s(g) = f(x)
//   act_arrows[(g, h)]         g·h, for s(g) = f(s h)
//   alpha[(g, k, x)]           the arrow g·(k·x) -> (gk)·x
//   epsilon[x]                 the arrow u·x -> x

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "wrep/groupoid.hpp"
#include "wrep/report.hpp"

namespace wrep {

struct WeakAction {
  FiniteGroupoid acting;
  FiniteGroupoid target;
  std::vector<int> moment;
  std::map<std::pair<int, int>, int> act_objects;
  std::map<std::pair<int, int>, int> act_arrows;
  std::map<std::tuple<int, int, int>, int> alpha;
  std::vector<int> epsilon;

  bool operator==(const WeakAction&) const = default;
};

/// Throws StructureError when a table is missing an entry, has an extra one,
/// or refers to an index out of range.
void check_weak_action_tables(const WeakAction& w);

/// Moment compatibility, functoriality, naturality of α and ε, the pentagon
///   α(g,kl,x)·(g·α(k,l,x)) = α(gk,l,x)·α(g,k,l·x)
/// and the unit coherences α(g,u,x) = g·ε(x), α(u,g,x) = ε(g·x).
Report validate_weak_action(const WeakAction& w);

/// A weak action with α and ε given by units; `object_action(g, x)` must be a
/// strict action on the objects of a unit groupoid H.
WeakAction strict_set_action(const FiniteGroupoid& g, const std::vector<std::string>& points, const std::vector<int>& moment,
                             const std::map<std::pair<int, int>, int>& object_action);

/// Objects H0; arrows (g, x, h) with s(g) = f(x) and t(h) = g·x, from x to s(h);
///   (g,x,h)·(g',x',h') = (gg', x', α(g,g',x')∘(g·h')∘h),
///   unit (u(f x), x, ε(x)⁻¹).
/// Throws ValidationError for an invalid weak action.
FiniteGroupoid action_groupoid(const WeakAction& w);

}  // namespace wrep
