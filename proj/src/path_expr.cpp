#include "alias_calc/path_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace aliasing {

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    return false;
  }
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

PathExpr normalize(std::vector<Segment> segments) {
  return PathExpr(std::move(segments));
}

PathExpr::PathExpr(std::vector<Segment> segments) {
  for (const auto& seg : segments) {
    if (seg.name.empty()) {
      throw std::invalid_argument("path segment with empty name");
    }
  }
  // Free-group reduction: a stack cancels x against x' as they meet.
  std::vector<Segment> out;
  out.reserve(segments.size());
  for (auto& seg : segments) {
    if (!out.empty() && out.back().name == seg.name &&
        out.back().negated != seg.negated) {
      out.pop_back();
    } else {
      out.push_back(std::move(seg));
    }
  }
  segments_ = std::move(out);
}

PathExpr PathExpr::variable(std::string name) {
  return PathExpr(std::vector<Segment>{Segment(std::move(name))});
}

PathExpr PathExpr::parse(std::string_view text) {
  if (text == "Current") {
    return PathExpr();
  }
  std::vector<Segment> segs;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = text.find('.', pos);
    std::string_view part = text.substr(
        pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    bool neg = false;
    if (!part.empty() && part.back() == '\'') {
      neg = true;
      part.remove_suffix(1);
    }
    if (part == "Current" && !neg) {
      // Current is the identity of concatenation.
    } else if (part != "Current" && is_identifier(part)) {
      segs.emplace_back(std::string(part), neg);
    } else {
      throw std::invalid_argument("malformed path expression '" +
                                  std::string(text) + "'");
    }
    if (dot == std::string_view::npos) {
      break;
    }
    pos = dot + 1;
  }
  return PathExpr(std::move(segs));
}

bool PathExpr::has_negation() const {
  for (const auto& s : segments_) {
    if (s.negated) return true;
  }
  return false;
}

std::optional<Segment> PathExpr::head() const {
  if (segments_.empty()) return std::nullopt;
  return segments_.front();
}

PathExpr PathExpr::slice(std::size_t from, std::size_t to) const {
  return PathExpr(std::vector<Segment>(segments_.begin() + from,
                                       segments_.begin() + to));
}

bool PathExpr::starts_with(const PathExpr& prefix) const {
  if (prefix.size() > size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (segments_[i] != prefix.segments_[i]) return false;
  }
  return true;
}

PathExpr PathExpr::inverse() const {
  std::vector<Segment> segs;
  segs.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    segs.push_back(it->inverse());
  }
  return PathExpr(std::move(segs));
}

std::string PathExpr::str() const {
  if (segments_.empty()) return "Current";
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += '.';
    out += segments_[i].str();
  }
  return out;
}

PathExpr concat(const PathExpr& p, const PathExpr& q) {
  std::vector<Segment> segs = p.segments();
  segs.insert(segs.end(), q.segments().begin(), q.segments().end());
  return PathExpr(std::move(segs));
}

}  // namespace aliasing
