#include "alias_calc/relation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace aliasing {

namespace {

const PathSet kEmptySet;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool invalidated_by(const PathExpr& e, const std::set<std::string>& vars) {
  auto h = e.head();
  return h && !h->negated && vars.count(h->name) > 0;
}

class QuotientBuilder {
 public:
  QuotientBuilder(const AliasRelation& a, std::size_t bound)
      : rel_(a), bound_(bound) {}

  const PathSet& of(const PathExpr& y) {
    if (auto it = memo_.find(y); it != memo_.end()) return it->second;
    PathSet out;
    out.insert(y);
    const auto& direct = rel_.neighbors(y);
    out.insert(direct.begin(), direct.end());
    for (std::size_t k = 1; k < y.size(); ++k) {
      const PathSet& left = of(y.slice(0, k));
      const PathSet& right = of(y.slice(k, y.size()));
      for (const auto& e1 : left) {
        for (const auto& e2 : right) {
          PathExpr e = concat(e1, e2);
          if (e.dot_count() <= bound_) out.insert(std::move(e));
        }
      }
    }
    return memo_.emplace(y, std::move(out)).first->second;
  }

 private:
  const AliasRelation& rel_;
  std::size_t bound_;
  std::map<PathExpr, PathSet> memo_;
};

}  // namespace

bool AliasRelation::add(const PathExpr& a, const PathExpr& b) {
  if (a == b) return false;
  if (!adj_[a].insert(b).second) return false;
  adj_[b].insert(a);
  ++pair_count_;
  return true;
}

bool AliasRelation::remove(const PathExpr& a, const PathExpr& b) {
  auto ia = adj_.find(a);
  if (ia == adj_.end() || ia->second.erase(b) == 0) return false;
  if (ia->second.empty()) adj_.erase(ia);
  auto ib = adj_.find(b);
  ib->second.erase(a);
  if (ib->second.empty()) adj_.erase(ib);
  --pair_count_;
  return true;
}

bool AliasRelation::contains(const PathExpr& a, const PathExpr& b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) > 0;
}

const PathSet& AliasRelation::neighbors(const PathExpr& e) const {
  auto it = adj_.find(e);
  return it == adj_.end() ? kEmptySet : it->second;
}

std::vector<AliasRelation::Pair> AliasRelation::pairs() const {
  std::vector<Pair> out;
  out.reserve(pair_count_);
  for (const auto& [a, ns] : adj_) {
    for (auto it = ns.upper_bound(a); it != ns.end(); ++it) {
      out.emplace_back(a, *it);
    }
  }
  return out;
}

PathSet AliasRelation::elements() const {
  PathSet out;
  for (const auto& [a, ns] : adj_) out.insert(a);
  return out;
}

bool AliasRelation::is_subset_of(const AliasRelation& other) const {
  if (pair_count_ > other.pair_count_) return false;
  for (const auto& [a, ns] : adj_) {
    const auto& theirs = other.neighbors(a);
    if (!std::includes(theirs.begin(), theirs.end(), ns.begin(), ns.end())) {
      return false;
    }
  }
  return true;
}

std::size_t AliasRelation::max_dot_count() const {
  std::size_t m = 0;
  for (const auto& [a, ns] : adj_) m = std::max(m, a.dot_count());
  return m;
}

std::string CanonicalForm::str() const {
  if (cliques.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (i) out += ", ";
    out += '{';
    for (std::size_t j = 0; j < cliques[i].size(); ++j) {
      if (j) out += ", ";
      out += cliques[i][j].str();
    }
    out += '}';
  }
  return out;
}

AliasRelation CanonicalForm::to_relation() const {
  AliasRelation r;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) r.add(c[i], c[j]);
    }
  }
  return r;
}

AliasRelation overline(const PathSet& set) {
  AliasRelation r;
  for (auto i = set.begin(); i != set.end(); ++i) {
    for (auto j = std::next(i); j != set.end(); ++j) r.add(*i, *j);
  }
  return r;
}

AliasRelation overline(const std::vector<AliasRelation::Pair>& pairs) {
  AliasRelation r;
  for (const auto& [a, b] : pairs) r.add(a, b);
  return r;
}

AliasRelation restrict(const AliasRelation& a,
                       const std::set<std::string>& vars) {
  AliasRelation r;
  for (const auto& [e, f] : a.pairs()) {
    if (!invalidated_by(e, vars) && !invalidated_by(f, vars)) r.add(e, f);
  }
  return r;
}

PathSet quotient(const AliasRelation& a, const PathExpr& y,
                 std::size_t bound) {
  QuotientBuilder builder(a, bound);
  return builder.of(y);
}

bool aliased(const AliasRelation& a, const PathExpr& e, const PathExpr& f,
             std::size_t bound) {
  if (e == f) return false;
  if (a.contains(e, f)) return true;
  const auto& es = e.segments();
  const auto& fs = f.segments();
  for (std::size_t i = 1; i < es.size(); ++i) {
    PathExpr e1 = e.slice(0, i);
    PathExpr f1 = e.slice(i, es.size());
    for (std::size_t j = 1; j < fs.size(); ++j) {
      PathExpr e2 = f.slice(0, j);
      PathExpr f2 = f.slice(j, fs.size());
      bool heads_equal = e1 == e2;
      bool tails_equal = f1 == f2;
      if (heads_equal && tails_equal) continue;
      if ((heads_equal || aliased(a, e1, e2, bound)) &&
          (tails_equal || aliased(a, f1, f2, bound))) {
        return true;
      }
    }
  }
  return false;
}

AliasRelation subst(const AliasRelation& a, const std::string& x,
                    const PathExpr& y, std::size_t bound) {
  // Aliases of y are taken in a, then x and paths through x are dropped.
  const PathExpr xv = PathExpr::variable(x);
  if (y == xv) return a;
  const std::set<std::string> target{x};
  PathSet sources = quotient(a, y, bound);
  AliasRelation r = restrict(a, target);
  for (const auto& e : sources) {
    if (invalidated_by(e, target) || e.dot_count() > bound) continue;
    r.add(xv, e);
  }
  return r;
}

AliasRelation subst_list(const AliasRelation& a,
                         const std::vector<std::string>& xs,
                         const std::vector<PathExpr>& ys, std::size_t bound) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("subst_list: " + std::to_string(xs.size()) +
                                " targets but " + std::to_string(ys.size()) +
                                " sources");
  }
  AliasRelation r = a;
  for (std::size_t i = 0; i < xs.size(); ++i) r = subst(r, xs[i], ys[i], bound);
  return r;
}

AliasRelation cut_pair(const AliasRelation& a, const PathExpr& e,
                       const PathExpr& f) {
  AliasRelation r = a;
  r.remove(e, f);
  return r;
}

AliasRelation combine(const AliasRelation& a, const AliasRelation& b,
                      SetOp op) {
  switch (op) {
    case SetOp::Union: {
      AliasRelation r = a;
      for (const auto& [e, f] : b.pairs()) r.add(e, f);
      return r;
    }
    case SetOp::Intersection: {
      AliasRelation r;
      for (const auto& [e, f] : a.pairs()) {
        if (b.contains(e, f)) r.add(e, f);
      }
      return r;
    }
    case SetOp::Difference: {
      AliasRelation r;
      for (const auto& [e, f] : a.pairs()) {
        if (!b.contains(e, f)) r.add(e, f);
      }
      return r;
    }
  }
  return {};
}

namespace {

// Bron–Kerbosch with Tomita pivoting over index sets.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)) {}

  std::vector<std::vector<int>> run() {
    std::vector<int> r, p(adj_.size()), x;
    for (std::size_t i = 0; i < adj_.size(); ++i) p[i] = static_cast<int>(i);
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  std::vector<int> meet(const std::vector<int>& s, int v) const {
    std::vector<int> out;
    std::set_intersection(s.begin(), s.end(), adj_[v].begin(), adj_[v].end(),
                          std::back_inserter(out));
    return out;
  }

  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty()) {
      if (x.empty()) out_.push_back(r);
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* s : {&p, &x}) {
      for (int u : *s) {
        std::size_t n = meet(p, u).size();
        if (pivot < 0 || n > best) {
          pivot = u;
          best = n;
        }
      }
    }
    std::vector<int> candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(),
                        adj_[pivot].end(), std::back_inserter(candidates));
    for (int v : candidates) {
      r.push_back(v);
      expand(r, meet(p, v), meet(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

CanonicalForm canonical(const AliasRelation& a) {
  std::vector<PathExpr> vertices;
  for (const auto& [e, ns] : a.adjacency()) vertices.push_back(e);
  std::sort(vertices.begin(), vertices.end(), TextualLess{});
  std::map<PathExpr, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index.emplace(vertices[i], static_cast<int>(i));
  }
  std::vector<std::vector<int>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const auto& n : a.neighbors(vertices[i])) adj[i].push_back(index.at(n));
    std::sort(adj[i].begin(), adj[i].end());
  }

  CanonicalForm form;
  if (vertices.empty()) return form;
  for (auto& clique : CliqueEnumerator(std::move(adj)).run()) {
    // Index order is textual order.
    std::sort(clique.begin(), clique.end());
    std::vector<PathExpr> members;
    for (int v : clique) members.push_back(vertices[v]);
    form.cliques.push_back(std::move(members));
  }
  std::sort(form.cliques.begin(), form.cliques.end(),
            [](const auto& l, const auto& r) {
              return std::lexicographical_compare(l.begin(), l.end(), r.begin(),
                                                  r.end(), TextualLess{});
            });
  return form;
}

std::string to_assertion(const AliasRelation& a, const PathSet& universe) {
  std::vector<PathExpr> sorted(universe.begin(), universe.end());
  std::sort(sorted.begin(), sorted.end(), TextualLess{});
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (a.contains(sorted[i], sorted[j])) continue;
      if (!out.empty()) out += " and ";
      out += sorted[i].str() + " ≠ " + sorted[j].str();
    }
  }
  return out.empty() ? "true" : out;
}

AliasRelation parse_relation(std::string_view text) {
  auto column = [&](std::string_view at) {
    return static_cast<std::size_t>(at.data() - text.data()) + 1;
  };
  AliasRelation r;
  std::string_view rest = trim(text);
  if (rest.empty() || rest == "{}") return r;
  while (!rest.empty()) {
    if (rest.front() != '{') {
      throw RelationSyntaxError(column(rest), "expected '{'");
    }
    auto close = rest.find('}');
    if (close == std::string_view::npos) {
      throw RelationSyntaxError(column(rest), "missing '}'");
    }
    std::string_view body = rest.substr(1, close - 1);
    PathSet members;
    std::size_t count = 0;
    while (true) {
      auto comma = body.find(',');
      std::string_view item = trim(body.substr(0, comma));
      try {
        members.insert(PathExpr::parse(item));
      } catch (const std::invalid_argument& e) {
        throw RelationSyntaxError(column(item.empty() ? body : item), e.what());
      }
      ++count;
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (count < 2 || members.size() < 2) {
      throw RelationSyntaxError(
          column(rest), "every clique needs at least two distinct members");
    }
    AliasRelation clique = overline(members);
    for (const auto& [e, f] : clique.pairs()) r.add(e, f);
    rest = trim(rest.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != ',') {
        throw RelationSyntaxError(column(rest), "expected ',' between cliques");
      }
      rest = trim(rest.substr(1));
      if (rest.empty()) {
        throw RelationSyntaxError(column(text.substr(text.size())), "trailing ','");
      }
    }
  }
  return r;
}

}  // namespace aliasing
