#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"

namespace nakayama {

/**
 * Element of the index set I_A: an up step (i), a down step (Si), or a
 * diamond (i,j) whose top corner lies on or below the path.
 */
struct Label {
  enum class Kind : uint8_t { Up, Down, Diamond };
  Kind kind;
  int i;
  int j;  // diamonds only; 0 otherwise

  static Label up(int i) { return Label{Kind::Up, i, 0}; }
  static Label down(int i) { return Label{Kind::Down, i, 0}; }
  static Label diamond(int i, int j) { return Label{Kind::Diamond, i, j}; }

  bool is_up() const { return kind == Kind::Up; }
  bool is_down() const { return kind == Kind::Down; }
  bool is_diamond() const { return kind == Kind::Diamond; }

  friend bool operator==(const Label&, const Label&) = default;
  // Listing order: up steps, down steps, diamonds in lex order.
  friend auto operator<=>(const Label& a, const Label& b) {
    return std::tuple(static_cast<int>(a.kind), a.i, a.j) <=>
           std::tuple(static_cast<int>(b.kind), b.i, b.j);
  }

  // "u3", "s3", "d2.4"
  std::string token() const {
    switch (kind) {
      case Kind::Up: return "u" + std::to_string(i);
      case Kind::Down: return "s" + std::to_string(i);
      default:
        return "d" + std::to_string(i) + "." + std::to_string(j);
    }
  }

  // Coordinate name: "u2", "us3", "u24" (dotted past rank 9).
  std::string var() const {
    switch (kind) {
      case Kind::Up: return "u" + std::to_string(i);
      case Kind::Down: return "us" + std::to_string(i);
      default:
        if (j <= 9) return "u" + std::to_string(i) + std::to_string(j);
        return "u" + std::to_string(i) + "." + std::to_string(j);
    }
  }
};

// Order used inside monomials: up steps, then diamonds, then down steps.
inline bool monomial_less(const Label& a, const Label& b) {
  auto rank = [](const Label& l) {
    switch (l.kind) {
      case Label::Kind::Up: return 0;
      case Label::Kind::Diamond: return 1;
      default: return 2;
    }
  };
  return std::tuple(rank(a), a.i, a.j) < std::tuple(rank(b), b.i, b.j);
}

inline Label parse_label(const std::string& s) {
  auto bad = [&]() { return UnknownLabel("cannot parse label '" + s + "'"); };
  if (s.size() < 2) throw bad();
  try {
    if (s[0] == 'u') return Label::up(std::stoi(s.substr(1)));
    if (s[0] == 's') return Label::down(std::stoi(s.substr(1)));
    if (s[0] == 'd') {
      size_t dot = s.find('.');
      if (dot == std::string::npos) throw bad();
      return Label::diamond(std::stoi(s.substr(1, dot - 1)),
                            std::stoi(s.substr(dot + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  throw bad();
}

/**
 * The index set of the algebra attached to a Dyck path: all 2n steps plus
 * every diamond (i,j) with j <= k_i.  Labels are listed up steps first,
 * then down steps, then diamonds in lex order.
 */
class IndexSet {
 public:
  static IndexSet of(const DyckPath& d) {
    IndexSet is(d);
    int n = d.rank();
    for (int i = 1; i <= n; ++i) is.labels_.push_back(Label::up(i));
    for (int i = 1; i <= n; ++i) is.labels_.push_back(Label::down(i));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= d.k(i); ++j)
        is.labels_.push_back(Label::diamond(i, j));
    for (size_t p = 0; p < is.labels_.size(); ++p)
      is.pos_[is.labels_[p]] = static_cast<int>(p);
    return is;
  }

  const DyckPath& path() const { return path_; }
  int rank() const { return path_.rank(); }
  const std::vector<Label>& labels() const { return labels_; }
  size_t size() const { return labels_.size(); }

  bool contains(const Label& x) const { return pos_.count(x) > 0; }

  int position(const Label& x) const {
    auto it = pos_.find(x);
    if (it == pos_.end())
      throw UnknownLabel("label " + x.token() + " not in index set");
    return it->second;
  }

  // Compatibility of two labels.  Diamonds are compatible when their
  // intervals are nested or disjoint; a diamond tolerates an up step
  // strictly left of it or at/right of its right end, and dually for down
  // steps; an up step and a down step are compatible when i < j or the
  // down step precedes the up step along the walk.  Pairs of equal kind
  // among steps, and any label with itself, are compatible.
  bool compatible(const Label& x, const Label& y) const {
    position(x);
    position(y);
    return compatible_nocheck(x, y);
  }

  int compatibility_degree(const Label& x, const Label& y) const {
    return compatible(x, y) ? 0 : 1;
  }

  // Incompatible labels in monomial order (ups, diamonds, downs).
  std::vector<Label> incompatible_set(const Label& x) const {
    position(x);
    std::vector<Label> out;
    for (const Label& y : labels_)
      if (!compatible_nocheck(x, y)) out.push_back(y);
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
  }

 private:
  explicit IndexSet(const DyckPath& d) : path_(d) {}

  bool compatible_nocheck(const Label& x, const Label& y) const {
    if (x == y) return true;
    if (x.kind == y.kind && !x.is_diamond()) return true;
    if (x.is_diamond() && y.is_diamond()) {
      bool nested = (y.i <= x.i && x.j <= y.j) || (x.i <= y.i && y.j <= x.j);
      bool disjoint = x.j < y.i || y.j < x.i;
      return nested || disjoint;
    }
    if (x.is_diamond() || y.is_diamond()) {
      const Label& dia = x.is_diamond() ? x : y;
      const Label& stp = x.is_diamond() ? y : x;
      if (stp.is_up()) return stp.i < dia.i || dia.j <= stp.i;
      return stp.i <= dia.i || dia.j < stp.i;
    }
    // one up step, one down step
    int i = x.is_up() ? x.i : y.i;
    int jj = x.is_down() ? x.i : y.i;
    if (i < jj) return true;
    return down_pos(jj) < up_pos(i);
  }

  int up_pos(int i) const {
    int seen = 0;
    const auto& s = path_.steps();
    for (int t = 0; t < static_cast<int>(s.size()); ++t)
      if (s[t] == Step::Up && ++seen == i) return t;
    return -1;
  }

  int down_pos(int i) const {
    int seen = 0;
    const auto& s = path_.steps();
    for (int t = 0; t < static_cast<int>(s.size()); ++t)
      if (s[t] == Step::Down && ++seen == i) return t;
    return -1;
  }

  DyckPath path_;
  std::vector<Label> labels_;
  std::map<Label, int> pos_;
};

inline IndexSet index_set(const DyckPath& d) { return IndexSet::of(d); }

// Chord of the (n+3)-gon attached to a label of the full path algebra.
// Up steps take the chords at vertex 1, down steps those at vertex n+3,
// and a diamond (i,j) the chord {i+1, j+2}; two labels are compatible
// exactly when their chords do not cross.
inline std::pair<int, int> chord_label(const IndexSet& is, const Label& x) {
  if (!is.path().is_top())
    throw TopPathOnly("chord dictionary exists for the top path only");
  is.position(x);
  int n = is.rank();
  switch (x.kind) {
    case Label::Kind::Up: return {1, x.i + 2};
    case Label::Kind::Down: return {x.i + 1, n + 3};
    default: return {x.i + 1, x.j + 2};
  }
}

inline std::pair<int, int> chord_label(int n, const Label& x) {
  return chord_label(IndexSet::of(DyckPath::top(n)), x);
}

// Two chords of a convex polygon cross iff exactly one endpoint of the
// second lies strictly between the endpoints of the first.
inline bool chords_cross(std::pair<int, int> c1, std::pair<int, int> c2) {
  int a = c1.first, b = c1.second;
  int c = c2.first, d = c2.second;
  if (a == c || a == d || b == c || b == d) return false;
  auto between = [&](int x) { return a < x && x < b; };
  return between(c) != between(d);
}

}  // namespace nakayama
