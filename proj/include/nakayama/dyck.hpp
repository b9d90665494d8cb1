#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nakayama {

enum class Step : uint8_t { Up, Down };

struct GridPoint {
  int i, j;  // 1 <= i <= j <= n, the module supported on vertices i..j
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Lattice point preceded by a down step and followed by an up step.
// The valley at (a,b) contributes the ideal generator a_b a_{b-1} ... a_{a-1}.
struct Valley {
  int a, b;
  friend bool operator==(const Valley&, const Valley&) = default;
};

/**
 * Monotone lattice walk from (1,0) to (n+1,n) with n up and n down steps,
 * never crossing below b = a-1.  Stored normal form is the height vector
 * k_1 <= ... <= k_n of the down steps (k_i >= i, k_n = n); j_i is the
 * x-coordinate of the i-th up step.  Immutable after construction.
 */
class DyckPath {
 public:
  static DyckPath from_steps(int n, std::string_view steps) {
    if (static_cast<int>(steps.size()) != 2 * n)
      throw MalformedPath("step string must have length 2n");
    std::vector<Step> s;
    s.reserve(steps.size());
    int ups = 0, downs = 0;
    for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
      char c = steps[t];
      if (c == 'U' || c == 'u') {
        if (ups == n)
          throw MalformedPath("more than n up steps, first excess at index " +
                                  std::to_string(t),
                              t);
        ++ups;
        s.push_back(Step::Up);
      } else if (c == 'D' || c == 'd') {
        if (downs == ups)
          throw MalformedPath(
              "baseline violated at index " + std::to_string(t), t);
        ++downs;
        s.push_back(Step::Down);
      } else {
        throw MalformedPath("invalid step character at index " +
                                std::to_string(t),
                            t);
      }
    }
    return DyckPath(n, std::move(s));
  }

  static DyckPath from_k_heights(const std::vector<int>& k) {
    int n = static_cast<int>(k.size());
    std::vector<Step> s;
    s.reserve(2 * n);
    int ups = 0;
    for (int i = 1; i <= n; ++i) {
      if (k[i - 1] < i || k[i - 1] > n || (i > 1 && k[i - 1] < k[i - 2]))
        throw MalformedPath("k-heights must be nondecreasing with i <= k_i <= n");
      while (ups < k[i - 1]) {
        s.push_back(Step::Up);
        ++ups;
      }
      s.push_back(Step::Down);
    }
    if (n > 0 && k[n - 1] != n)
      throw MalformedPath("k_n must equal n");
    return DyckPath(n, std::move(s));
  }

  // Accepts a step string ("UUDD") or comma-separated k-heights ("2,2").
  static DyckPath parse(std::string_view text) {
    if (text.find(',') != std::string_view::npos ||
        (!text.empty() && text.find_first_not_of("0123456789") ==
                              std::string_view::npos)) {
      std::vector<int> k;
      size_t pos = 0;
      while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? text.size() - pos
                                                 : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") !=
                               std::string_view::npos)
          throw MalformedPath("bad k-height token");
        k.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      return from_k_heights(k);
    }
    return from_steps(static_cast<int>(text.size()) / 2, text);
  }

  static DyckPath top(int n) {
    return from_k_heights(std::vector<int>(n, n));
  }

  static DyckPath bottom(int n) {
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = i + 1;
    return from_k_heights(k);
  }

  int rank() const { return n_; }
  const std::vector<Step>& steps() const { return steps_; }
  int k(int i) const { return k_[i - 1]; }  // height of i-th down step
  int j(int i) const { return j_[i - 1]; }  // x-coordinate of i-th up step
  const std::vector<int>& k_heights() const { return k_; }

  bool is_top() const { return n_ == 0 || k_[0] == n_; }

  std::string step_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s += (st == Step::Up ? 'U' : 'D');
    return s;
  }

  std::string k_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(k_[i]);
    }
    return s;
  }

  bool on_or_below(GridPoint p) const { return p.j <= k_[p.i - 1]; }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.k_ <=> b.k_;
  }

 private:
  DyckPath(int n, std::vector<Step> steps) : n_(n), steps_(std::move(steps)) {
    k_.reserve(n);
    j_.reserve(n);
    int ups = 0, downs = 0;
    for (Step st : steps_) {
      if (st == Step::Up) {
        ++ups;
        j_.push_back(downs + 1);
      } else {
        ++downs;
        k_.push_back(ups);
      }
    }
  }

  int n_;
  std::vector<Step> steps_;
  std::vector<int> k_;
  std::vector<int> j_;
};

// All Dyck paths of rank n in lexicographic order on step strings, U < D.
inline std::vector<DyckPath> enumerate_paths(int n) {
  std::vector<DyckPath> out;
  std::string cur;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups + downs == 2 * n) {
      out.push_back(DyckPath::from_steps(n, cur));
      return;
    }
    if (ups < n) {
      cur += 'U';
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur += 'D';
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// D1 <= D2 iff D1 lies on or below D2, i.e. k_i(D1) <= k_i(D2) for all i.
inline bool leq(const DyckPath& d1, const DyckPath& d2) {
  if (d1.rank() != d2.rank())
    throw RankMismatch("cannot compare paths of different rank");
  for (int i = 1; i <= d1.rank(); ++i)
    if (d1.k(i) > d2.k(i)) return false;
  return true;
}

inline std::vector<Valley> valleys(const DyckPath& d) {
  std::vector<Valley> out;
  const auto& s = d.steps();
  int a = 1, b = 0;
  for (size_t t = 0; t < s.size(); ++t) {
    if (s[t] == Step::Up)
      ++b;
    else
      ++a;
    if (t + 1 < s.size() && s[t] == Step::Down && s[t + 1] == Step::Up)
      out.push_back(Valley{a, b});
  }
  return out;
}

// Generator words as index pairs: valley (a,b) encodes a_b ... a_{a-1}.
inline std::vector<std::pair<int, int>> ideal_generators(const DyckPath& d) {
  std::vector<std::pair<int, int>> out;
  for (const Valley& v : valleys(d)) out.emplace_back(v.a, v.b);
  return out;
}

// Covers of D in the path poset: one valley turned into a peak.
inline std::vector<DyckPath> upper_covers(const DyckPath& d) {
  std::vector<DyckPath> out;
  std::string s = d.step_string();
  for (size_t t = 0; t + 1 < s.size(); ++t) {
    if (s[t] == 'D' && s[t + 1] == 'U') {
      std::swap(s[t], s[t + 1]);
      out.push_back(DyckPath::from_steps(d.rank(), s));
      std::swap(s[t], s[t + 1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GridPoint> modules_below(const DyckPath& d) {
  std::vector<GridPoint> out;
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = i; j <= d.k(i); ++j) out.push_back(GridPoint{i, j});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nakayama
