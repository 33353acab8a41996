#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alias_calc/path_expr.hpp"

namespace aliasing {

using PathSet = std::set<PathExpr>;

/// A finite symmetric irreflexive relation over path expressions.
///
/// Stored as a symmetric adjacency map; every vertex present has at least one
/// neighbour, so two relations are equal iff their maps are equal.
class AliasRelation {
 public:
  using Pair = std::pair<PathExpr, PathExpr>;

  AliasRelation() = default;

  /// Adds [a, b] and [b, a]. Reflexive pairs are ignored. Returns true if new.
  bool add(const PathExpr& a, const PathExpr& b);
  bool remove(const PathExpr& a, const PathExpr& b);
  bool contains(const PathExpr& a, const PathExpr& b) const;

  /// Neighbours of e (empty if e takes part in no pair).
  const PathSet& neighbors(const PathExpr& e) const;

  /// Unordered pairs with first < second.
  std::vector<Pair> pairs() const;
  /// Every expression that occurs in some pair.
  PathSet elements() const;

  std::size_t size() const { return pair_count_; }
  bool empty() const { return pair_count_ == 0; }

  bool is_subset_of(const AliasRelation& other) const;

  /// Largest dot count among member expressions (0 for the empty relation).
  std::size_t max_dot_count() const;

  const std::map<PathExpr, PathSet>& adjacency() const { return adj_; }

  template <typename Pred>
  std::size_t remove_if(Pred&& pred) {
    std::size_t removed = 0;
    for (const auto& [a, b] : pairs()) {
      if (pred(a, b)) {
        remove(a, b);
        ++removed;
      }
    }
    return removed;
  }

  friend bool operator==(const AliasRelation& x, const AliasRelation& y) {
    return x.adj_ == y.adj_;
  }
  friend bool operator<(const AliasRelation& x, const AliasRelation& y) {
    return x.adj_ < y.adj_;
  }

 private:
  std::map<PathExpr, PathSet> adj_;
  std::size_t pair_count_ = 0;
};

/// Canonical form: the maximal cliques of the alias graph.
struct CanonicalForm {
  /// Each clique sorted textually; cliques sorted by their smallest member,
  /// then by full content.
  std::vector<std::vector<PathExpr>> cliques;

  bool operator==(const CanonicalForm&) const = default;

  /// `{a, c, h}, {c, e, f}`; the empty relation renders as `{}`.
  std::string str() const;
  AliasRelation to_relation() const;
};

enum class SetOp { Union, Intersection, Difference };

/// A×A without reflexive pairs.
AliasRelation overline(const PathSet& set);
/// Symmetrized pair set without reflexive pairs.
AliasRelation overline(const std::vector<AliasRelation::Pair>& pairs);

/// Removes pairs whose element is one of `vars`, or a path headed by one.
AliasRelation restrict(const AliasRelation& a, const std::set<std::string>& vars);

/// a/y: y together with everything aliased to it, where dot paths are
/// related component-wise (dot completeness) up to `bound` dots.
PathSet quotient(const AliasRelation& a, const PathExpr& y, std::size_t bound);

/// Closure query for dot completeness: [e, f] stored, or e = e1.f1 and
/// f = e2.f2 with each component pair aliased or equal (not both equal).
bool aliased(const AliasRelation& a, const PathExpr& e, const PathExpr& f,
             std::size_t bound);

/// a[x: y], the effect of x := y.
AliasRelation subst(const AliasRelation& a, const std::string& x,
                    const PathExpr& y, std::size_t bound);

/// Left fold of subst over paired lists. Throws std::invalid_argument on
/// length mismatch.
AliasRelation subst_list(const AliasRelation& a,
                         const std::vector<std::string>& xs,
                         const std::vector<PathExpr>& ys, std::size_t bound);

AliasRelation cut_pair(const AliasRelation& a, const PathExpr& e,
                       const PathExpr& f);

AliasRelation combine(const AliasRelation& a, const AliasRelation& b, SetOp op);

CanonicalForm canonical(const AliasRelation& a);

/// The assertion a⁻ over `universe`: "e ≠ f" for every absent pair.
std::string to_assertion(const AliasRelation& a, const PathSet& universe);

class RelationSyntaxError : public std::invalid_argument {
 public:
  RelationSyntaxError(std::size_t column, const std::string& message)
      : std::invalid_argument(message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Reads `{b,c},{f,g}`; each clique needs at least two members. `{}` and the
/// empty string denote the empty relation. Throws RelationSyntaxError.
AliasRelation parse_relation(std::string_view text);

}  // namespace aliasing
