#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aliasing {

/// One step of a dot path: an attribute/variable name, possibly negated (x').
struct Segment {
  std::string name;
  bool negated = false;

  Segment() = default;
  explicit Segment(std::string n, bool neg = false)
      : name(std::move(n)), negated(neg) {}

  Segment inverse() const { return Segment(name, !negated); }
  std::string str() const { return negated ? name + "'" : name; }

  auto operator<=>(const Segment&) const = default;
  bool operator==(const Segment&) const = default;
};

/// A reduced dot path. The empty path is Current.
///
/// Construction always normalizes: adjacent x.x' and x'.x pairs cancel, so
/// two PathExpr values compare equal iff they denote the same reduced word.
class PathExpr {
 public:
  PathExpr() = default;
  explicit PathExpr(std::vector<Segment> segments);

  static PathExpr current() { return PathExpr(); }
  static PathExpr variable(std::string name);

  /// Parses "Current", "x", "x.y.z", "x'.f". Throws std::invalid_argument.
  static PathExpr parse(std::string_view text);

  bool is_current() const { return segments_.empty(); }
  bool is_variable() const {
    return segments_.size() == 1 && !segments_.front().negated;
  }
  bool has_negation() const;

  std::size_t size() const { return segments_.size(); }
  const std::vector<Segment>& segments() const { return segments_; }

  std::optional<Segment> head() const;
  std::size_t dot_count() const {
    return segments_.empty() ? 0 : segments_.size() - 1;
  }

  /// Segments [from, to) as a new path.
  PathExpr slice(std::size_t from, std::size_t to) const;

  /// True if this path starts with all segments of `prefix`.
  bool starts_with(const PathExpr& prefix) const;

  /// The path leading back: (x.y)' = y'.x'.
  PathExpr inverse() const;

  std::string str() const;

  auto operator<=>(const PathExpr&) const = default;
  bool operator==(const PathExpr&) const = default;

 private:
  std::vector<Segment> segments_;
};

PathExpr normalize(std::vector<Segment> segments);
PathExpr concat(const PathExpr& p, const PathExpr& q);

inline std::size_t dot_count(const PathExpr& p) { return p.dot_count(); }
inline std::optional<Segment> head(const PathExpr& p) { return p.head(); }

/// Orders by textual rendering; used for every user-visible listing.
struct TextualLess {
  bool operator()(const PathExpr& a, const PathExpr& b) const {
    return a.str() < b.str();
  }
};

bool is_identifier(std::string_view text);

}  // namespace aliasing
