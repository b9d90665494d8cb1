#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nakayama/dyck.hpp"

using namespace nakayama;

namespace {

// Independent count: filter all 2^(2n) step strings.
int brute_force_path_count(int n) {
  int count = 0;
  for (int bits = 0; bits < (1 << (2 * n)); ++bits) {
    int ups = 0, downs = 0;
    bool ok = true;
    for (int t = 0; t < 2 * n && ok; ++t) {
      if (bits & (1 << t)) {
        if (downs == ups) ok = false;
        ++downs;
      } else {
        ++ups;
      }
    }
    if (ok && ups == n && downs == n) ++count;
  }
  return count;
}

long long catalan(int n) {
  std::vector<long long> c{1};
  for (int m = 0; m < n; ++m) {
    long long next = 0;
    for (int i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  return c[n];
}

}  // namespace

TEST_CASE("path construction and encodings") {
  DyckPath d = DyckPath::from_steps(3, "UUDDUD");
  CHECK(d.rank() == 3);
  CHECK(d.k_heights() == std::vector<int>{2, 2, 3});
  CHECK(d.j(1) == 1);
  CHECK(d.j(2) == 1);
  CHECK(d.j(3) == 3);
  CHECK(d.step_string() == "UUDDUD");

  CHECK(DyckPath::from_steps(1, "UD").rank() == 1);

  // k and j encodings reconstruct the same walk
  for (const DyckPath& p : enumerate_paths(4)) {
    CHECK(DyckPath::from_k_heights(p.k_heights()) == p);
    CHECK(DyckPath::parse(p.k_string()) == p);
    CHECK(DyckPath::parse(p.step_string()) == p);
  }
}

TEST_CASE("malformed paths are rejected with the offending index") {
  try {
    DyckPath::from_steps(2, "DU..");
    FAIL("expected MalformedPath");
  } catch (const MalformedPath& e) {
    CHECK(e.index == 0);
  }
  CHECK_THROWS_AS(DyckPath::from_steps(2, "UUDDU"), MalformedPath);
  CHECK_THROWS_AS(DyckPath::from_steps(2, "UUUU"), MalformedPath);
  CHECK_THROWS_AS(DyckPath::from_steps(2, "UDX."), MalformedPath);
  CHECK_THROWS_AS(DyckPath::from_k_heights({2, 1}), MalformedPath);
  CHECK_THROWS_AS(DyckPath::from_k_heights({1, 1}), MalformedPath);
}

TEST_CASE("enumeration counts match the Catalan numbers") {
  for (int n = 1; n <= 8; ++n) {
    auto paths = enumerate_paths(n);
    CHECK(static_cast<long long>(paths.size()) == catalan(n));
    CHECK(static_cast<int>(paths.size()) == brute_force_path_count(n));
    std::set<std::string> uniq;
    for (const auto& p : paths) uniq.insert(p.step_string());
    CHECK(uniq.size() == paths.size());
  }
  CHECK(enumerate_paths(3).size() == 5);
  CHECK(enumerate_paths(1).size() == 1);
  CHECK(enumerate_paths(6).size() == 132);
  CHECK(enumerate_paths(8).size() == 1430);
}

TEST_CASE("enumeration order is lex on step strings with U before D") {
  auto paths = enumerate_paths(3);
  std::vector<std::string> got;
  for (const auto& p : paths) got.push_back(p.step_string());
  auto lexless = [](const std::string& a, const std::string& b) {
    for (size_t t = 0; t < a.size(); ++t) {
      if (a[t] == b[t]) continue;
      return a[t] == 'U';
    }
    return false;
  };
  for (size_t t = 0; t + 1 < got.size(); ++t) CHECK(lexless(got[t], got[t + 1]));
  CHECK(got.front() == "UUUDDD");
  CHECK(got.back() == "UDUDUD");
}

TEST_CASE("leq is the componentwise order on down-step heights") {
  CHECK(leq(DyckPath::parse("UDUDUD"), DyckPath::parse("UUUDDD")));
  DyckPath d = DyckPath::parse("UUDUDD");
  CHECK(leq(d, d));
  CHECK_THROWS_AS(leq(DyckPath::top(2), DyckPath::top(3)), RankMismatch);

  // incomparable pair at n=4
  DyckPath a = DyckPath::parse("UUDDUDUD");
  DyckPath b = DyckPath::parse("UDUUDDUD");
  CHECK(!leq(a, b));
  CHECK(!leq(b, a));

  // partial order axioms over the whole rank-4 poset
  auto paths = enumerate_paths(4);
  for (const auto& p : paths)
    for (const auto& q : paths) {
      if (leq(p, q) && leq(q, p)) CHECK(p == q);
      for (const auto& r : paths)
        if (leq(p, q) && leq(q, r)) CHECK(leq(p, r));
    }
}

TEST_CASE("upper covers flip one valley into a peak") {
  auto c1 = upper_covers(DyckPath::parse("UDUD"));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == DyckPath::parse("UUDD"));

  CHECK(upper_covers(DyckPath::top(4)).empty());
  CHECK(upper_covers(DyckPath::bottom(3)).size() == 2);
}

TEST_CASE("rank-3 Hasse diagram has 5 nodes and 5 edges") {
  auto paths = enumerate_paths(3);
  REQUIRE(paths.size() == 5);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& p : paths)
    for (const auto& q : upper_covers(p))
      edges.insert({p.step_string(), q.step_string()});
  std::set<std::pair<std::string, std::string>> expected{
      {"UDUDUD", "UDUUDD"}, {"UDUDUD", "UUDDUD"}, {"UDUUDD", "UUDUDD"},
      {"UUDDUD", "UUDUDD"}, {"UUDUDD", "UUUDDD"}};
  CHECK(edges == expected);
}

TEST_CASE("covers are the transitive reduction of leq") {
  for (int n = 2; n <= 4; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths) {
      std::set<std::string> covers;
      for (const auto& q : upper_covers(p)) covers.insert(q.step_string());
      std::set<std::string> reduction;
      for (const auto& q : paths) {
        if (p == q || !leq(p, q)) continue;
        bool direct = true;
        for (const auto& r : paths)
          if (!(r == p) && !(r == q) && leq(p, r) && leq(r, q)) direct = false;
        if (direct) reduction.insert(q.step_string());
      }
      CHECK(covers == reduction);
    }
  }
}

TEST_CASE("valleys and ideal generators") {
  auto v = valleys(DyckPath::parse("UUDDUD"));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Valley{3, 2});
  CHECK(ideal_generators(DyckPath::parse("UUDDUD")) ==
        std::vector<std::pair<int, int>>{{3, 2}});

  CHECK(valleys(DyckPath::top(5)).empty());

  auto g = ideal_generators(DyckPath::bottom(3));
  CHECK(g == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});

  // valley coordinate bounds
  for (const auto& p : enumerate_paths(5))
    for (const Valley& w : valleys(p)) {
      CHECK(w.a >= 2);
      CHECK(w.a - 1 <= w.b);
      CHECK(w.b <= 4);
    }
}

TEST_CASE("ideal containment mirrors the path order") {
  // D <= D' iff every generator word of D' extends a generator of D
  for (int n = 2; n <= 5; ++n) {
    auto paths = enumerate_paths(n);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        bool contained = true;
        for (auto [a2, b2] : ideal_generators(q)) {
          bool found = false;
          for (auto [a1, b1] : ideal_generators(p))
            if (a1 >= a2 && b1 <= b2) found = true;
          if (!found) contained = false;
        }
        CHECK(contained == leq(p, q));
      }
  }
}

TEST_CASE("modules below the path") {
  auto below = modules_below(DyckPath::parse("UUDDUD"));
  std::set<GridPoint> got(below.begin(), below.end());
  std::set<GridPoint> expected{{1, 1}, {2, 2}, {3, 3}, {1, 2}};
  CHECK(got == expected);

  CHECK(modules_below(DyckPath::top(3)).size() == 6);
  CHECK(modules_below(DyckPath::bottom(4)).size() == 4);

  // a point survives iff every valley leaves it alone
  for (const auto& p : enumerate_paths(5)) {
    auto vs = valleys(p);
    std::set<GridPoint> via_valleys;
    for (int i = 1; i <= 5; ++i)
      for (int j = i; j <= 5; ++j) {
        bool keep = true;
        for (const Valley& w : vs)
          if (!(i >= w.a || j <= w.b)) keep = false;
        if (keep) via_valleys.insert(GridPoint{i, j});
      }
    auto mb = modules_below(p);
    CHECK(std::set<GridPoint>(mb.begin(), mb.end()) == via_valleys);
  }
}

TEST_CASE("on-or-below has three equivalent formulations") {
  for (const auto& p : enumerate_paths(5)) {
    for (int i = 1; i <= 5; ++i)
      for (int j = i; j <= 5; ++j) {
        bool by_k = j <= p.k(i);
        bool by_j = i >= p.j(j);
        CHECK(by_k == by_j);
        CHECK(p.on_or_below(GridPoint{i, j}) == by_k);
      }
  }
}
