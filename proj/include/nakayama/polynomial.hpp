#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace nakayama {

/**
 * Sparse multivariate polynomial over arbitrary-precision integers.
 * Terms are keyed by dense exponent tuples in lex order and zero
 * coefficients are never stored, so operator== is structural equality.
 */
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, Int c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = std::move(c);
    return p;
  }

  static Polynomial variable(int nvars, int index1) {
    Exponents e(nvars, 0);
    e[index1 - 1] = 1;
    return monomial(nvars, std::move(e), 1);
  }

  static Polynomial monomial(int nvars, Exponents e, Int c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[std::move(e)] = std::move(c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == Exponents(nvars_, 0);
  }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int e) const {
    Polynomial out = constant(nvars_, 1);
    for (int t = 0; t < e; ++t) out *= *this;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int var1) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var1 - 1] == 0) continue;
      Exponents d = e;
      --d[var1 - 1];
      out.add_term(d, c * e[var1 - 1]);
    }
    return out;
  }

  Rat eval(const std::vector<Rat>& y) const {
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
      Rat term(c);
      for (int v = 0; v < nvars_; ++v)
        for (int t = 0; t < e[v]; ++t) term *= y[v];
      total += term;
    }
    return total;
  }

  // "1 + y1 + y1*y2", terms in lex order on exponent tuples
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      std::string mono;
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "y" + std::to_string(v + 1);
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      if (mono.empty()) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, Int c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int nvars_;
  std::map<Exponents, Int> terms_;
};

inline Polynomial partial_derivative(const Polynomial& p, int var1) {
  return p.derivative(var1);
}

// F_{i,j} = 1 + y_i + y_i y_{i+1} + ... + y_i...y_j, the F-polynomial of
// the module supported on vertices i..j.  Degenerate indices (i = 0,
// j = n+1, or i > j) give the constant 1.
inline Polynomial f_polynomial(int n, int i, int j) {
  if (i == 0 || j == n + 1 || i > j) return Polynomial::constant(n, 1);
  Polynomial p = Polynomial::constant(n, 1);
  Polynomial::Exponents e(n, 0);
  for (int m = i; m <= j; ++m) {
    e[m - 1] = 1;
    p += Polynomial::monomial(n, e, 1);
  }
  return p;
}

/**
 * Unreduced quotient of polynomials.  Equality is by cross-multiplication;
 * no gcd reduction is ever performed.
 */
struct RationalFunction {
  Polynomial num, den;

  RationalFunction(Polynomial n, Polynomial d)
      : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
  }

  static RationalFunction from(Polynomial p) {
    int nv = p.nvars();
    return RationalFunction(std::move(p), Polynomial::constant(nv, 1));
  }
  static RationalFunction one(int nvars) {
    return from(Polynomial::constant(nvars, 1));
  }

  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num * b.num, a.den * b.den);
  }
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
  }

  bool equals(const RationalFunction& o) const {
    return num * o.den == o.num * den;
  }
  bool is_one() const { return num == den; }

  Rat eval(const std::vector<Rat>& y) const {
    Rat d = den.eval(y);
    if (d == 0) throw PoleAtPoint("denominator vanishes at " + rat_vec_str(y));
    return num.eval(y) / d;
  }

  std::string str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }
};

inline RationalFunction rf_mul(const RationalFunction& a,
                               const RationalFunction& b) {
  return a * b;
}
inline bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.equals(b);
}

/**
 * Support of a Laurent expression; evaluates min-plus as
 * min over support of <a, Y>.
 */
struct TropicalForm {
  int nvars;
  std::vector<std::vector<int>> support;

  static TropicalForm of(const Polynomial& p) {
    TropicalForm t{p.nvars(), {}};
    for (const auto& [e, c] : p.terms()) t.support.push_back(e);
    return t;
  }

  Rat eval(const std::vector<Rat>& y) const {
    bool have = false;
    Rat best = 0;
    for (const auto& a : support) {
      Rat v = 0;
      for (int i = 0; i < nvars; ++i)
        if (a[i] != 0) v += Rat(a[i]) * y[i];
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
    return best;
  }
};

inline Rat trop_eval(const TropicalForm& t, const std::vector<Rat>& y) {
  return t.eval(y);
}

// min(0, y_i, y_i+y_{i+1}, ..., y_i+...+y_j): the tropicalization of
// F_{i,j}, computed without expanding the polynomial.
inline Rat trop_f(int n, int i, int j, const std::vector<Rat>& y) {
  if (i == 0 || j == n + 1 || i > j) return Rat(0);
  Rat best = 0, run = 0;
  for (int m = i; m <= j; ++m) {
    run += y[m - 1];
    if (run < best) best = run;
  }
  return best;
}

/**
 * Product of F-polynomials and variables with integer exponents; the
 * factored carrier for parametrization coordinates.  Exponents of value
 * zero are dropped, so operator== detects equal products by cancellation.
 */
struct FactorProduct {
  int n = 0;
  std::map<std::pair<int, int>, int> f;  // (i,j) -> exponent of F_{i,j}
  std::vector<int> yexp;                 // y monomial, entries may be negative

  explicit FactorProduct(int rank) : n(rank), yexp(rank, 0) {}

  FactorProduct& mul_f(int i, int j, int e) {
    if (i == 0 || j == n + 1 || i > j || e == 0) return *this;  // trivial F
    auto it = f.find({i, j});
    if (it == f.end()) {
      f[{i, j}] = e;
    } else {
      it->second += e;
      if (it->second == 0) f.erase(it);
    }
    return *this;
  }

  FactorProduct& mul_y(int i, int e) {
    yexp[i - 1] += e;
    return *this;
  }

  FactorProduct& operator*=(const FactorProduct& o) {
    for (const auto& [ij, e] : o.f) mul_f(ij.first, ij.second, e);
    for (int i = 1; i <= n; ++i) mul_y(i, o.yexp[i - 1]);
    return *this;
  }

  FactorProduct& mul_pow(const FactorProduct& o, int e) {
    for (const auto& [ij, ee] : o.f) mul_f(ij.first, ij.second, ee * e);
    for (int i = 1; i <= n; ++i) mul_y(i, o.yexp[i - 1] * e);
    return *this;
  }

  bool is_one() const {
    if (!f.empty()) return false;
    return std::all_of(yexp.begin(), yexp.end(), [](int e) { return e == 0; });
  }

  friend bool operator==(const FactorProduct&, const FactorProduct&) = default;

  RationalFunction expand() const {
    Polynomial num = Polynomial::constant(n, 1);
    Polynomial den = Polynomial::constant(n, 1);
    Polynomial::Exponents pos(n, 0), neg(n, 0);
    for (int v = 0; v < n; ++v) {
      if (yexp[v] > 0) pos[v] = yexp[v];
      if (yexp[v] < 0) neg[v] = -yexp[v];
    }
    num = Polynomial::monomial(n, pos, 1);
    den = Polynomial::monomial(n, neg, 1);
    for (const auto& [ij, e] : f) {
      Polynomial base = f_polynomial(n, ij.first, ij.second);
      if (e > 0)
        num *= base.pow(e);
      else
        den *= base.pow(-e);
    }
    return RationalFunction(std::move(num), std::move(den));
  }

  // Piecewise-linear evaluation: sum of exponent * trop(factor).
  Rat trop(const std::vector<Rat>& y) const {
    Rat total = 0;
    for (int v = 0; v < n; ++v)
      if (yexp[v] != 0) total += Rat(yexp[v]) * y[v];
    for (const auto& [ij, e] : f)
      total += Rat(e) * trop_f(n, ij.first, ij.second, y);
    return total;
  }

  // Exact value at a point.  A vanishing factor with negative exponent is
  // a pole; with positive exponent the product is zero.
  Rat eval(const std::vector<Rat>& y) const {
    Rat total = 1;
    auto apply = [&](const Rat& base, int e) {
      if (base == 0) {
        if (e < 0) throw PoleAtPoint("pole at " + rat_vec_str(y));
        total = 0;
        return;
      }
      for (int t = 0; t < e; ++t) total *= base;
      for (int t = 0; t > e; --t) total /= base;
    };
    for (int v = 0; v < n; ++v)
      if (yexp[v] != 0) apply(y[v], yexp[v]);
    if (total == 0) {
      // still must reject poles hidden behind a zero factor
      for (const auto& [ij, e] : f)
        if (e < 0 && f_polynomial(n, ij.first, ij.second).eval(y) == 0)
          throw PoleAtPoint("pole at " + rat_vec_str(y));
      return 0;
    }
    for (const auto& [ij, e] : f)
      apply(f_polynomial(n, ij.first, ij.second).eval(y), e);
    return total;
  }

  std::string str() const {
    std::string num, den;
    auto part = [](std::string& s, const std::string& piece) {
      if (!s.empty()) s += "*";
      s += piece;
    };
    for (int v = 0; v < n; ++v) {
      if (yexp[v] == 0) continue;
      std::string piece = "y" + std::to_string(v + 1);
      int e = std::abs(yexp[v]);
      if (e > 1) piece += "^" + std::to_string(e);
      part(yexp[v] > 0 ? num : den, piece);
    }
    for (const auto& [ij, e] : f) {
      std::string piece =
          "F" + std::to_string(ij.first) + "," + std::to_string(ij.second);
      if (std::abs(e) > 1) piece += "^" + std::to_string(std::abs(e));
      part(e > 0 ? num : den, piece);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + " / " + den;
  }
};

}  // namespace nakayama
