#include <catch2/catch_amalgamated.hpp>

#include "nakayama/monomap.hpp"
#include "nakayama/rng.hpp"

using namespace nakayama;

TEST_CASE("the rank-2 square-to-pentagon map") {
  MonomialMap phi = monomial_map(DyckPath::parse("UDUD"), DyckPath::top(2));

  CHECK(phi.image(Label::up(1)) == std::map<Label, int>{{Label::up(1), 1}});
  CHECK(phi.image(Label::up(2)) ==
        std::map<Label, int>{{Label::up(2), 1}, {Label::diamond(1, 2), 1}});
  CHECK(phi.image(Label::down(1)) ==
        std::map<Label, int>{{Label::down(1), 1}, {Label::diamond(1, 2), 1}});
  CHECK(phi.image(Label::down(2)) ==
        std::map<Label, int>{{Label::down(2), 1}});

  CHECK(phi.render(Label::up(2)) == "u~2 -> u2 * d1.2");
  CHECK(phi.render(Label::down(1)) == "s~1 -> d1.2 * s1");
}

TEST_CASE("the rank-5 two-valley map to the top path") {
  DyckPath lower = DyckPath::parse("2,4,5,5,5");
  MonomialMap phi = monomial_map(lower, DyckPath::top(5));

  CHECK(phi.image(Label::down(1)) ==
        std::map<Label, int>{{Label::down(1), 1},
                             {Label::diamond(1, 3), 1},
                             {Label::diamond(1, 4), 1},
                             {Label::diamond(1, 5), 1}});
  CHECK(phi.image(Label::up(5)) ==
        std::map<Label, int>{{Label::up(5), 1},
                             {Label::diamond(1, 5), 1},
                             {Label::diamond(2, 5), 1}});
  CHECK(phi.image(Label::up(3)) ==
        std::map<Label, int>{{Label::up(3), 1}, {Label::diamond(1, 3), 1}});
  CHECK(phi.image(Label::down(2)) ==
        std::map<Label, int>{{Label::down(2), 1}, {Label::diamond(2, 5), 1}});
  CHECK(phi.image(Label::down(3)) ==
        std::map<Label, int>{{Label::down(3), 1}});
}

TEST_CASE("identity and comparability") {
  DyckPath d = DyckPath::parse("UUDUDD");
  CHECK(monomial_map(d, d).is_identity());
  CHECK_THROWS_AS(monomial_map(DyckPath::top(3), DyckPath::bottom(3)),
                  NotComparable);

  // the map is the identity only for equal paths
  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (!leq(p, q)) continue;
        CHECK(monomial_map(p, q).is_identity() == (p == q));
      }
  }
}

TEST_CASE("composition") {
  DyckPath bottom = DyckPath::bottom(3);
  DyckPath mid = DyckPath::parse("UUDDUD");
  DyckPath top = DyckPath::top(3);
  MonomialMap lo = monomial_map(bottom, mid);
  MonomialMap hi = monomial_map(mid, top);
  CHECK(MonomialMap::compose(hi, lo) == monomial_map(bottom, top));

  CHECK(MonomialMap::compose(monomial_map(mid, mid), lo) == lo);
  CHECK(MonomialMap::compose(hi, monomial_map(mid, mid)) == hi);

  CHECK_THROWS_AS(MonomialMap::compose(lo, lo), ChainMismatch);
}

TEST_CASE("functoriality over all chains of length three") {
  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& a : paths)
      for (const auto& b : paths) {
        if (!leq(a, b)) continue;
        for (const auto& c : paths) {
          if (!leq(b, c)) continue;
          CHECK(verify_functoriality(a, b, c));
        }
      }
  }
}

TEST_CASE("between-path diamonds appear once among ups and once among downs") {
  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (!leq(p, q)) continue;
        Report rep = verify_partition_invariant(monomial_map(p, q));
        if (!rep.all_pass())
          for (const auto& c : rep.failures())
            UNSCOPED_INFO(rep.path + " " + c.label + ": " + c.witness);
        CHECK(rep.all_pass());
      }
  }
}

TEST_CASE("the map is compatible with both parametrizations") {
  // worked rank-2 instances: f_2 f_12 = f~_2 and f_12 f_S1 = f~_S1
  Parametrization pt = Parametrization::of(DyckPath::top(2));
  Parametrization pv = Parametrization::of(DyckPath::parse("UDUD"));
  FactorProduct lhs(2);
  lhs *= pt.factored(Label::up(2));
  lhs *= pt.factored(Label::diamond(1, 2));
  CHECK(lhs == pv.factored(Label::up(2)));
  FactorProduct lhs2(2);
  lhs2 *= pt.factored(Label::diamond(1, 2));
  lhs2 *= pt.factored(Label::down(1));
  CHECK(lhs2 == pv.factored(Label::down(1)));

  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (!leq(p, q)) continue;
        Report rep = verify_parametrization_compat(p, q);
        if (!rep.all_pass())
          for (const auto& c : rep.failures())
            UNSCOPED_INFO(rep.path + " " + c.label + ": " + c.witness);
        CHECK(rep.all_pass());
      }
  }
}

namespace {

// exact point on the divisor u_x = 0: zero at x, one at everything
// incompatible with x, factor parametrizations elsewhere
std::map<Label, Rat> boundary_point(const DyckPath& d, const Label& x,
                                    Rng& rng) {
  DivisorFactorization fact = divisor_factorization(d, x);
  std::vector<Rat> y1 = rng.small_rational_vector(fact.first.rank());
  std::vector<Rat> y2 = rng.small_rational_vector(fact.second.rank());
  std::map<Label, Rat> factor_pts[2] = {evaluate_point(fact.first, y1),
                                        evaluate_point(fact.second, y2)};
  IndexSet is = index_set(d);
  std::map<Label, Rat> pt;
  for (const Label& z : is.labels()) {
    if (z == x)
      pt[z] = 0;
    else if (!is.compatible(z, x))
      pt[z] = 1;
    else {
      auto [w, zf] = fact.relabel.at(z);
      pt[z] = factor_pts[w].at(zf);
    }
  }
  return pt;
}

bool satisfies(const UEquationSystem& sys, const std::map<Label, Rat>& pt) {
  for (const UEquation& eq : sys.equations()) {
    Rat prod = 1;
    for (const Label& y : eq.rhs) prod *= pt.at(y);
    if (pt.at(eq.x) + prod != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("divisor points satisfy the system and push forward") {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& q : paths) {
      IndexSet qis = index_set(q);
      for (const Label& x : qis.labels()) {
        std::map<Label, Rat> pt = boundary_point(q, x, rng);
        CHECK(satisfies(u_system(q), pt));

        for (const auto& p : paths) {
          if (!leq(p, q) || p == q) continue;
          MonomialMap phi = monomial_map(p, q);
          auto pushed = pushforward_point(phi, pt);
          CHECK(satisfies(u_system(p), pushed));
          // a source coordinate vanishes exactly when its monomial
          // contains the vanished target coordinate
          for (const auto& [src, img] : phi.exponents()) {
            bool contains_x = img.count(x) > 0;
            CHECK((pushed.at(src) == 0) == contains_x);
          }
        }
      }
    }
  }
}

TEST_CASE("pushforward of points") {
  Rng rng(29);
  for (int n = 1; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (!leq(p, q)) continue;
        std::vector<Rat> y = rng.small_rational_vector(n);
        MonomialMap phi = monomial_map(p, q);
        auto target_pt = evaluate_point(q, y);
        auto pushed = pushforward_point(phi, target_pt);
        CHECK(pushed == evaluate_point(p, y));

        // the image satisfies the source system exactly
        UEquationSystem sys = u_system(p);
        for (const UEquation& eq : sys.equations()) {
          Rat prod = 1;
          for (const Label& yy : eq.rhs) prod *= pushed.at(yy);
          CHECK(pushed.at(eq.x) + prod == 1);
        }
      }
  }
}
