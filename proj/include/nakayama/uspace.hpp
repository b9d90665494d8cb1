#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "labels.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace nakayama {

struct UEquation {
  Label x;
  std::vector<Label> rhs;  // incompatible labels, monomial order
};

/**
 * The square system u_X + prod u_Y = 1, one equation per label, where Y
 * runs over the labels incompatible with X.
 */
class UEquationSystem {
 public:
  static UEquationSystem of(const DyckPath& d) {
    UEquationSystem sys(IndexSet::of(d));
    for (const Label& x : sys.is_.labels())
      sys.eqs_.push_back({x, sys.is_.incompatible_set(x)});
    return sys;
  }

  const IndexSet& index_set() const { return is_; }
  const std::vector<UEquation>& equations() const { return eqs_; }

  const UEquation& equation_for(const Label& x) const {
    return eqs_[is_.position(x)];
  }

  static std::string equation_string(const UEquation& eq) {
    std::string s = eq.x.var() + " + ";
    for (size_t t = 0; t < eq.rhs.size(); ++t) {
      if (t) s += "*";
      s += eq.rhs[t].var();
    }
    return s + " = 1";
  }

  std::vector<std::string> equation_strings() const {
    std::vector<std::string> out;
    for (const auto& eq : eqs_) out.push_back(equation_string(eq));
    return out;
  }

 private:
  explicit UEquationSystem(IndexSet is) : is_(std::move(is)) {}
  IndexSet is_;
  std::vector<UEquation> eqs_;
};

inline UEquationSystem u_system(const DyckPath& d) {
  return UEquationSystem::of(d);
}

/**
 * The coordinate f_X attached to each label, kept in factored form:
 *   f_{i,j} = F_{i,j}F_{i+1,j-1} / (F_{i+1,j}F_{i,j-1})
 *   f_i     = F_{j_i,i-1} / F_{j_i,i}
 *   f_{Si}  = y_i F_{i+1,k_i} / F_{i,k_i}
 */
class Parametrization {
 public:
  static Parametrization of(const DyckPath& d) {
    Parametrization par(d);
    int n = d.rank();
    for (const Label& x : par.is_.labels()) {
      FactorProduct fp(n);
      if (x.is_diamond()) {
        fp.mul_f(x.i, x.j, 1).mul_f(x.i + 1, x.j - 1, 1);
        fp.mul_f(x.i + 1, x.j, -1).mul_f(x.i, x.j - 1, -1);
      } else if (x.is_up()) {
        fp.mul_f(d.j(x.i), x.i - 1, 1).mul_f(d.j(x.i), x.i, -1);
      } else {
        fp.mul_y(x.i, 1);
        fp.mul_f(x.i + 1, d.k(x.i), 1).mul_f(x.i, d.k(x.i), -1);
      }
      par.f_.emplace(x, std::move(fp));
    }
    return par;
  }

  const DyckPath& path() const { return path_; }
  const IndexSet& index_set() const { return is_; }

  const FactorProduct& factored(const Label& x) const {
    auto it = f_.find(x);
    if (it == f_.end())
      throw UnknownLabel("label " + x.token() + " not in index set");
    return it->second;
  }

  const RationalFunction& expanded(const Label& x) const {
    auto it = cache_.find(x);
    if (it == cache_.end())
      it = cache_.emplace(x, factored(x).expand()).first;
    return it->second;
  }

 private:
  explicit Parametrization(const DyckPath& d)
      : path_(d), is_(IndexSet::of(d)) {}
  DyckPath path_;
  IndexSet is_;
  std::map<Label, FactorProduct> f_;
  mutable std::map<Label, RationalFunction> cache_;
};

inline Parametrization parametrization(const DyckPath& d) {
  return Parametrization::of(d);
}

// e_i for a down step, -e_i for an up step, e_i - e_j for a diamond.
inline std::vector<int> g_vector(const Label& x, int n) {
  std::vector<int> g(n, 0);
  if (x.is_down()) {
    g[x.i - 1] = 1;
  } else if (x.is_up()) {
    g[x.i - 1] = -1;
  } else {
    g[x.i - 1] = 1;
    g[x.j - 1] = -1;
  }
  return g;
}

// 1 - f_X in closed form, as a factored product.
inline FactorProduct one_minus_f_closed(const DyckPath& d, const Label& x) {
  FactorProduct fp(d.rank());
  if (x.is_diamond()) {
    for (int m = x.i + 1; m <= x.j; ++m) fp.mul_y(m, 1);
    fp.mul_f(x.i, x.j - 1, -1).mul_f(x.i + 1, x.j, -1);
  } else if (x.is_up()) {
    for (int m = d.j(x.i); m <= x.i; ++m) fp.mul_y(m, 1);
    fp.mul_f(d.j(x.i), x.i, -1);
  } else {
    fp.mul_f(x.i, d.k(x.i), -1);
  }
  return fp;
}

/**
 * Checks, for every label X, that f_X + prod of f_Y over incompatible Y
 * equals 1 as an exact rational function, and that 1 - f_X matches its
 * closed form.  The product is accumulated factor-by-factor so common
 * F-polynomials cancel before anything is expanded.
 */
inline Report verify_parametrization(const DyckPath& d) {
  Report rep;
  rep.path = d.step_string();
  Parametrization par = Parametrization::of(d);
  const IndexSet& is = par.index_set();
  for (const Label& x : is.labels()) {
    FactorProduct prod(d.rank());
    for (const Label& y : is.incompatible_set(x)) prod *= par.factored(y);

    const RationalFunction& fx = par.expanded(x);
    RationalFunction pr = prod.expand();
    // f_X + prod = 1  <=>  num_f*den_p + num_p*den_f = den_f*den_p
    Polynomial lhs = fx.num * pr.den + pr.num * fx.den;
    Polynomial rhs = fx.den * pr.den;
    bool ueq_ok = lhs == rhs;
    rep.add(x.token(), "ueq", ueq_ok,
            ueq_ok ? "" : "difference " + (lhs - rhs).str());

    RationalFunction closed = one_minus_f_closed(d, x).expand();
    Polynomial clhs = (fx.den - fx.num) * closed.den;
    Polynomial crhs = closed.num * fx.den;
    bool closed_ok = clhs == crhs;
    rep.add(x.token(), "closed_form", closed_ok,
            closed_ok ? "" : "difference " + (clhs - crhs).str());
  }
  return rep;
}

// trop(f_X)(g_Y) must be the identity matrix over all label pairs.
inline Report verify_tropical_duality(const DyckPath& d) {
  Report rep;
  rep.path = d.step_string();
  Parametrization par = Parametrization::of(d);
  const IndexSet& is = par.index_set();
  int n = d.rank();
  for (const Label& x : is.labels()) {
    bool row_ok = true;
    std::string witness;
    const FactorProduct& fx = par.factored(x);
    for (const Label& y : is.labels()) {
      std::vector<int> g = g_vector(y, n);
      std::vector<Rat> gy(g.begin(), g.end());
      Rat v = fx.trop(gy);
      Rat want = (x == y) ? 1 : 0;
      if (v != want) {
        row_ok = false;
        witness = "trop(f_" + x.token() + ")(g_" + y.token() + ") = " +
                  rat_str(v);
        break;
      }
    }
    rep.add(x.token(), "trop", row_ok, witness);
  }
  return rep;
}

// Exact point of the configuration space from a positive parameter vector.
inline std::map<Label, Rat> evaluate_point(const DyckPath& d,
                                           const std::vector<Rat>& y) {
  Parametrization par = Parametrization::of(d);
  std::map<Label, Rat> out;
  for (const Label& x : par.index_set().labels())
    out[x] = par.factored(x).eval(y);
  return out;
}

// Rank over exact rationals of the matrix (df_X / dy_k) at y.
inline int jacobian_rank(const DyckPath& d, const std::vector<Rat>& y) {
  Parametrization par = Parametrization::of(d);
  const IndexSet& is = par.index_set();
  int n = d.rank();
  linalg::Matrix m;
  for (const Label& x : is.labels()) {
    const RationalFunction& f = par.expanded(x);
    Rat nv = f.num.eval(y);
    Rat dv = f.den.eval(y);
    if (dv == 0) throw PoleAtPoint("pole at " + rat_vec_str(y));
    std::vector<Rat> row(n);
    for (int k = 1; k <= n; ++k) {
      Rat nk = f.num.derivative(k).eval(y);
      Rat dk = f.den.derivative(k).eval(y);
      row[k - 1] = (nk * dv - nv * dk) / (dv * dv);
    }
    m.push_back(std::move(row));
  }
  return linalg::rank(std::move(m));
}

/**
 * The divisor u_X = 0 of the configuration space factors as a product of
 * the spaces of two lower-rank paths.  `first` and `second` are those
 * paths (inner triangle and contracted outer grid for a diamond; the two
 * sides of the light ray for a step) and `relabel` sends each surviving
 * label of the ambient index set to its factor (0 = first, 1 = second)
 * and its label there.
 */
struct DivisorFactorization {
  Label x;
  DyckPath first, second;
  std::map<Label, std::pair<int, Label>> relabel;
};

inline DivisorFactorization divisor_factorization(const DyckPath& d,
                                                  const Label& x) {
  IndexSet is = IndexSet::of(d);
  is.position(x);  // throws UnknownLabel when absent
  int n = d.rank();
  std::map<Label, std::pair<int, Label>> rel;

  if (x.is_diamond()) {
    int i = x.i, j = x.j, delta = j - i;
    // inner triangle: diamonds strictly nested in [i,j]
    for (const Label& z : is.labels()) {
      if (!z.is_diamond() || z == x) continue;
      int k = z.i, l = z.j;
      if (k >= i && l <= j) {
        if (k == i)
          rel[z] = {0, Label::up(l - i)};
        else if (l == j)
          rel[z] = {0, Label::down(k - i)};
        else
          rel[z] = {0, Label::diamond(k - i, l - i)};
      } else if (l < i) {
        rel[z] = {1, z};
      } else if (k > j) {
        rel[z] = {1, Label::diamond(k - delta, l - delta)};
      } else if (k <= i && l >= j) {
        rel[z] = {1, Label::diamond(k, l - delta)};
      }
      // remaining diamonds overlap [i,j] and die on the divisor
    }
    for (int k = 1; k <= n; ++k) {
      if (k < i)
        rel[Label::up(k)] = {1, Label::up(k)};
      else if (k >= j)
        rel[Label::up(k)] = {1, Label::up(k - delta)};
      if (k <= i)
        rel[Label::down(k)] = {1, Label::down(k)};
      else if (k > j)
        rel[Label::down(k)] = {1, Label::down(k - delta)};
    }
    // contracted outer path: rows of the grid with [i,j] collapsed
    std::vector<int> kk;
    for (int p = 1; p <= n - delta; ++p) {
      int h;
      if (p < i)
        h = d.k(p) >= j ? d.k(p) - delta : std::min(d.k(p), i - 1);
      else if (p == i)
        h = d.k(i) - delta;
      else
        h = d.k(p + delta) - delta;
      kk.push_back(h);
    }
    return {x, DyckPath::top(delta - 1), DyckPath::from_k_heights(kk),
            std::move(rel)};
  }

  int i = x.i;
  // right part: rows above the step's light ray, shifted down by i
  std::vector<int> kr;
  for (int p = 1; p <= n - i; ++p) kr.push_back(d.k(p + i) - i);
  // left part: rows below, clipped to height i-1
  std::vector<int> kl;
  for (int p = 1; p <= i - 1; ++p) kl.push_back(std::min(d.k(p), i - 1));

  if (x.is_up()) {
    for (int k = 1; k <= n; ++k) {
      if (k > i)
        rel[Label::up(k)] = {0, Label::up(k - i)};
      else if (k < i)
        rel[Label::up(k)] = {1, Label::up(k)};
      if (k > i)
        rel[Label::down(k)] = {0, Label::down(k - i)};
      else if (k < d.j(i))
        rel[Label::down(k)] = {1, Label::down(k)};
    }
    for (const Label& z : is.labels()) {
      if (!z.is_diamond()) continue;
      if (z.i > i)
        rel[z] = {0, Label::diamond(z.i - i, z.j - i)};
      else if (z.j == i)
        rel[z] = {1, Label::down(z.i)};
      else if (z.j < i)
        rel[z] = {1, z};
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      if (k > d.k(i))
        rel[Label::up(k)] = {0, Label::up(k - i)};
      else if (k < i)
        rel[Label::up(k)] = {1, Label::up(k)};
      if (k > i)
        rel[Label::down(k)] = {0, Label::down(k - i)};
      else if (k < i)
        rel[Label::down(k)] = {1, Label::down(k)};
    }
    for (const Label& z : is.labels()) {
      if (!z.is_diamond()) continue;
      if (z.i == i)
        rel[z] = {0, Label::up(z.j - i)};
      else if (z.i > i)
        rel[z] = {0, Label::diamond(z.i - i, z.j - i)};
      else if (z.j < i)
        rel[z] = {1, z};
    }
  }
  return {x, DyckPath::from_k_heights(kr), DyckPath::from_k_heights(kl),
          std::move(rel)};
}

/**
 * Substitution oracle for a divisor: set u_X = 0, set u_Y = 1 for Y
 * incompatible with X, and require the residual equations on the
 * surviving labels to be exactly the disjoint union of the u-systems of
 * the two factor paths under the relabeling.
 */
inline Report verify_divisor(const DyckPath& d, const Label& x) {
  Report rep;
  rep.path = d.step_string();
  IndexSet is = IndexSet::of(d);
  DivisorFactorization fact = divisor_factorization(d, x);

  int n1 = fact.first.rank(), n2 = fact.second.rank();
  rep.add(x.token(), "divisor_ranks", n1 + n2 == d.rank() - 1,
          "ranks " + std::to_string(n1) + "+" + std::to_string(n2));

  std::vector<Label> survivors;
  for (const Label& z : is.labels())
    if (!(z == x) && is.compatible(z, x)) survivors.push_back(z);

  bool domain_ok = fact.relabel.size() == survivors.size();
  for (const Label& z : survivors)
    if (!fact.relabel.count(z)) domain_ok = false;
  rep.add(x.token(), "divisor_domain", domain_ok,
          domain_ok ? "" : "relabeling domain differs from survivors");
  if (!domain_ok) return rep;

  IndexSet fis[2] = {IndexSet::of(fact.first), IndexSet::of(fact.second)};

  // the relabeling must hit each factor index set exactly once
  std::map<std::pair<int, Label>, Label> inverse;
  bool onto_ok = true;
  for (const auto& [z, tgt] : fact.relabel) {
    if (!fis[tgt.first].contains(tgt.second) || inverse.count(tgt))
      onto_ok = false;
    inverse[tgt] = z;
  }
  if (inverse.size() != fis[0].size() + fis[1].size()) onto_ok = false;
  rep.add(x.token(), "divisor_bijection", onto_ok,
          onto_ok ? "" : "relabeling is not a bijection onto the factors");
  if (!onto_ok) return rep;

  for (const Label& z : survivors) {
    auto [w, zf] = fact.relabel.at(z);
    std::vector<std::pair<int, Label>> residual;
    for (const Label& y : is.incompatible_set(z))
      if (fact.relabel.count(y)) residual.push_back(fact.relabel.at(y));
    std::vector<std::pair<int, Label>> expect;
    for (const Label& e : fis[w].incompatible_set(zf))
      expect.emplace_back(w, e);
    std::sort(residual.begin(), residual.end());
    std::sort(expect.begin(), expect.end());
    bool ok = residual == expect;
    rep.add(x.token() + "/" + z.token(), "divisor", ok,
            ok ? "" : "residual equation differs for " + z.token());
  }
  return rep;
}

}  // namespace nakayama
