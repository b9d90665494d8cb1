#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "labels.hpp"
#include "rng.hpp"
#include "uspace.hpp"

namespace nakayama {

/**
 * Monomial map of coordinate rings for a comparable pair of paths
 * source <= target: each source coordinate is sent to a monomial in the
 * target coordinates.  Diamonds below the source map to themselves; a
 * step of the source picks up the diamonds lying between the two paths
 * in its own row or column of the grid.
 */
class MonomialMap {
 public:
  static MonomialMap between(const DyckPath& source, const DyckPath& target) {
    if (!leq(source, target))
      throw NotComparable("source path must lie on or below the target");
    MonomialMap phi(source, target);
    IndexSet sis = IndexSet::of(source);
    for (const Label& x : sis.labels()) {
      std::map<Label, int> img;
      img[x] = 1;
      if (x.is_up()) {
        for (int k = target.j(x.i); k < source.j(x.i); ++k)
          img[Label::diamond(k, x.i)] = 1;
      } else if (x.is_down()) {
        for (int l = source.k(x.i) + 1; l <= target.k(x.i); ++l)
          img[Label::diamond(x.i, l)] = 1;
      }
      phi.expo_.emplace(x, std::move(img));
    }
    return phi;
  }

  static MonomialMap identity(const DyckPath& d) { return between(d, d); }

  // inner: I -> J, outer: J -> K, result: I -> K
  static MonomialMap compose(const MonomialMap& outer,
                             const MonomialMap& inner) {
    if (!(inner.target_ == outer.source_))
      throw ChainMismatch("composition requires matching middle path");
    MonomialMap out(inner.source_, outer.target_);
    for (const auto& [x, img] : inner.expo_) {
      std::map<Label, int> acc;
      for (const auto& [y, e1] : img)
        for (const auto& [z, e2] : outer.expo_.at(y)) acc[z] += e1 * e2;
      out.expo_.emplace(x, std::move(acc));
    }
    return out;
  }

  const DyckPath& source() const { return source_; }
  const DyckPath& target() const { return target_; }

  const std::map<Label, std::map<Label, int>>& exponents() const {
    return expo_;
  }

  const std::map<Label, int>& image(const Label& x) const {
    auto it = expo_.find(x);
    if (it == expo_.end())
      throw UnknownLabel("label " + x.token() + " not in source index set");
    return it->second;
  }

  bool is_identity() const {
    if (!(source_ == target_)) return false;
    for (const auto& [x, img] : expo_)
      if (img.size() != 1 || img.begin()->first != x ||
          img.begin()->second != 1)
        return false;
    return true;
  }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.expo_ == b.expo_;
  }

  // "u~2 -> u2 * d1.2"
  std::string render(const Label& x) const {
    std::string lhs = x.token();
    lhs.insert(1, "~");
    std::string rhs;
    std::vector<std::pair<Label, int>> sorted(image(x).begin(),
                                              image(x).end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) {
                return monomial_less(a.first, b.first);
              });
    for (const auto& [y, e] : sorted) {
      if (!rhs.empty()) rhs += " * ";
      rhs += y.token();
      if (e != 1) rhs += "^" + std::to_string(e);
    }
    return lhs + " -> " + (rhs.empty() ? "1" : rhs);
  }

 private:
  MonomialMap(DyckPath s, DyckPath t)
      : source_(std::move(s)), target_(std::move(t)) {}
  DyckPath source_, target_;
  std::map<Label, std::map<Label, int>> expo_;
};

inline MonomialMap monomial_map(const DyckPath& source,
                                const DyckPath& target) {
  return MonomialMap::between(source, target);
}

inline bool verify_functoriality(const DyckPath& d1, const DyckPath& d2,
                                 const DyckPath& d3) {
  MonomialMap composed = MonomialMap::compose(MonomialMap::between(d2, d3),
                                              MonomialMap::between(d1, d2));
  return composed == MonomialMap::between(d1, d3);
}

// Evaluates each source coordinate as its monomial in the target point.
inline std::map<Label, Rat> pushforward_point(
    const MonomialMap& phi, const std::map<Label, Rat>& target_point) {
  std::map<Label, Rat> out;
  for (const auto& [x, img] : phi.exponents()) {
    Rat v = 1;
    for (const auto& [y, e] : img) {
      const Rat& base = target_point.at(y);
      for (int t = 0; t < e; ++t) v *= base;
    }
    out[x] = v;
  }
  return out;
}

// Every diamond below the target but not below the source must occur in
// exactly one up-step monomial and exactly one down-step monomial.
inline Report verify_partition_invariant(const MonomialMap& phi) {
  Report rep;
  rep.path = phi.source().step_string() + " <= " + phi.target().step_string();
  IndexSet tis = IndexSet::of(phi.target());
  for (const Label& z : tis.labels()) {
    if (!z.is_diamond()) continue;
    bool below_source = phi.source().on_or_below(GridPoint{z.i, z.j});
    int in_up = 0, in_down = 0, in_diamond = 0;
    for (const auto& [x, img] : phi.exponents()) {
      auto it = img.find(z);
      if (it == img.end() || it->second == 0) continue;
      if (x.is_up()) in_up += it->second;
      if (x.is_down()) in_down += it->second;
      if (x.is_diamond()) in_diamond += it->second;
    }
    bool ok = below_source ? (in_up == 0 && in_down == 0 && in_diamond == 1)
                           : (in_up == 1 && in_down == 1 && in_diamond == 0);
    rep.add(z.token(), "partition", ok,
            ok ? ""
               : "occurrences up=" + std::to_string(in_up) +
                     " down=" + std::to_string(in_down));
  }
  return rep;
}

/**
 * Symbolic compatibility of the map with the two parametrizations in the
 * same y-variables: substituting the target f-values into each source
 * monomial must reproduce the source f-value.  Factored products are
 * compared first; on mismatch the expanded cross-multiplication decides.
 */
inline Report verify_parametrization_compat(const DyckPath& source,
                                            const DyckPath& target) {
  Report rep;
  rep.path = source.step_string() + " <= " + target.step_string();
  MonomialMap phi = MonomialMap::between(source, target);
  Parametrization ps = Parametrization::of(source);
  Parametrization pt = Parametrization::of(target);
  for (const auto& [x, img] : phi.exponents()) {
    FactorProduct prod(target.rank());
    for (const auto& [y, e] : img) prod.mul_pow(pt.factored(y), e);
    bool ok = prod == ps.factored(x);
    if (!ok) {
      RationalFunction a = prod.expand();
      const RationalFunction& b = ps.expanded(x);
      ok = a.equals(b);
    }
    rep.add(x.token(), "map_compat", ok,
            ok ? "" : "monomial image differs from source coordinate");
  }
  return rep;
}

// Numeric fallback: the pushforward of a parametrized target point must
// be the source point with the same parameters.
inline bool verify_pushforward_at(const DyckPath& source,
                                  const DyckPath& target,
                                  const std::vector<Rat>& y) {
  MonomialMap phi = MonomialMap::between(source, target);
  std::map<Label, Rat> pt = evaluate_point(target, y);
  std::map<Label, Rat> ps = evaluate_point(source, y);
  return pushforward_point(phi, pt) == ps;
}

}  // namespace nakayama
