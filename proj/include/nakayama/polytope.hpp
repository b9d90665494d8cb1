#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "labels.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "uspace.hpp"

namespace nakayama {

struct Interval {
  int a, b;  // subset {a,...,b} of {0,...,n}
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
  bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }
  std::string str() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
};

// The intervals [i-1,j] for grid points (i,j) on or below the path; the
// simplex of each is a Minkowski summand of the polytope.
struct IntervalFamily {
  int n;
  std::vector<Interval> members;  // sorted, all with b > a

  Int members_inside(const Interval& f) const {
    Int c = 0;
    for (const Interval& g : members)
      if (f.contains(g)) ++c;
    return c;
  }
};

inline IntervalFamily interval_family(const DyckPath& d) {
  IntervalFamily fam{d.rank(), {}};
  for (const GridPoint& p : modules_below(d))
    fam.members.push_back(Interval{p.i - 1, p.j});
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

struct Facet {
  Interval f;
  Int rhs;      // number of family members contained in f
  Label label;  // [0,i-1] <-> up i, [i,n] <-> down i, [i,j-1] <-> diamond (i,j)
};

// Exact halfspace description: sum_{i in F} x_i >= rhs per facet, together
// with the global equality sum x_i = |family|.
struct HRep {
  int n;
  Int total;
  IntervalFamily family;
  std::vector<Facet> facets;  // in label listing order

  int facet_index(const Interval& f) const {
    for (size_t s = 0; s < facets.size(); ++s)
      if (facets[s].f == f) return static_cast<int>(s);
    return -1;
  }
};

inline HRep facets(const DyckPath& d) {
  int n = d.rank();
  HRep h{n, 0, interval_family(d), {}};
  h.total = static_cast<int>(h.family.members.size());
  IndexSet is = IndexSet::of(d);
  for (const Label& x : is.labels()) {
    Interval f{};
    if (x.is_up())
      f = Interval{0, x.i - 1};
    else if (x.is_down())
      f = Interval{x.i, n};
    else
      f = Interval{x.i, x.j - 1};
    h.facets.push_back(Facet{f, h.family.members_inside(f), x});
  }
  return h;
}

// ---------------------------------------------------------------------------
// vertex enumeration and the face lattice

struct VRep {
  int n;
  std::vector<std::vector<Rat>> vertices;  // points in R^{n+1}
  std::vector<uint64_t> incidence;         // facets tight at each vertex
};

inline Rat facet_value(const Facet& f, const std::vector<Rat>& x) {
  Rat s = 0;
  for (int i = f.f.a; i <= f.f.b; ++i) s += x[i];
  return s;
}

// Solves every n-subset of facet equalities inside the hyperplane
// sum x = total; feasible unique solutions are the vertices.
inline VRep vertices(const HRep& h) {
  int n = h.n;
  int m = static_cast<int>(h.facets.size());
  VRep v{n, {}, {}};
  std::set<std::vector<Rat>> seen;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto attempt = [&](const std::vector<int>& subset) {
    linalg::Matrix a;
    std::vector<Rat> b;
    for (int s : subset) {
      std::vector<Rat> row(n + 1, Rat(0));
      for (int i = h.facets[s].f.a; i <= h.facets[s].f.b; ++i) row[i] = 1;
      a.push_back(std::move(row));
      b.push_back(Rat(h.facets[s].rhs));
    }
    a.push_back(std::vector<Rat>(n + 1, Rat(1)));
    b.push_back(Rat(h.total));
    auto sol = linalg::solve_unique(std::move(a), std::move(b));
    if (!sol) return;
    for (const Facet& f : h.facets)
      if (facet_value(f, *sol) < f.rhs) return;
    if (!seen.insert(*sol).second) return;
    uint64_t inc = 0;
    for (int s = 0; s < m; ++s)
      if (facet_value(h.facets[s], *sol) == h.facets[s].rhs)
        inc |= uint64_t(1) << s;
    v.vertices.push_back(std::move(*sol));
    v.incidence.push_back(inc);
  };
  if (n == 0) {
    attempt({});
    return v;
  }
  // all n-subsets of {0..m-1}
  while (true) {
    attempt(idx);
    int p = n - 1;
    while (p >= 0 && idx[p] == m - n + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }
  return v;
}

struct Face {
  uint64_t facet_mask;
  std::vector<int> vertex_ids;
  int dim;
};

struct FaceLattice {
  int n;
  std::vector<Face> faces;     // includes the empty face (dim -1)
  std::vector<Int> f_vector;   // f_0 .. f_n (empty face excluded)
};

// Reconstructs all faces from vertex-facet incidence: the nonempty faces
// correspond to intersections of vertex incidence masks.
inline FaceLattice face_lattice(const HRep& h, const VRep& v) {
  size_t nv = v.vertices.size();
  std::set<uint64_t> masks(v.incidence.begin(), v.incidence.end());
  masks.insert(0);  // the whole polytope
  std::vector<uint64_t> queue(masks.begin(), masks.end());
  while (!queue.empty()) {
    uint64_t t = queue.back();
    queue.pop_back();
    for (uint64_t a : v.incidence) {
      uint64_t m = t & a;
      if (masks.insert(m).second) queue.push_back(m);
    }
  }

  FaceLattice lat{h.n, {}, std::vector<Int>(h.n + 1, Int(0))};
  for (uint64_t mask : masks) {
    Face f{mask, {}, -1};
    std::vector<std::vector<Rat>> pts;
    for (size_t t = 0; t < nv; ++t) {
      if ((v.incidence[t] & mask) == mask) {
        f.vertex_ids.push_back(static_cast<int>(t));
        pts.push_back(v.vertices[t]);
      }
    }
    // only closed masks name faces: the facets through the vertex set
    // must be exactly the mask
    uint64_t closure = ~uint64_t(0);
    for (int id : f.vertex_ids) closure &= v.incidence[id];
    if (f.vertex_ids.empty() || closure != mask) continue;
    f.dim = linalg::affine_rank(pts);
    lat.f_vector[f.dim] += 1;
    lat.faces.push_back(std::move(f));
  }
  uint64_t all = v.incidence.empty()
                     ? 0
                     : (h.facets.size() >= 64
                            ? ~uint64_t(0)
                            : (uint64_t(1) << h.facets.size()) - 1);
  lat.faces.push_back(Face{all, {}, -1});
  return lat;
}

inline bool is_simple(const HRep& h, const VRep& v) {
  for (uint64_t inc : v.incidence)
    if (std::popcount(inc) != h.n) return false;
  return true;
}

inline bool is_simple(const DyckPath& d) {
  HRep h = facets(d);
  return is_simple(h, vertices(h));
}

// ---------------------------------------------------------------------------
// facet intersection rule

// F and F' are family-compatible when every member inside their union
// already lies inside one of them.
inline bool facets_intersect_rule(const IntervalFamily& fam,
                                  const Interval& f1, const Interval& f2) {
  auto in_union = [&](int x) {
    return (f1.a <= x && x <= f1.b) || (f2.a <= x && x <= f2.b);
  };
  for (const Interval& g : fam.members) {
    bool inside = true;
    for (int x = g.a; x <= g.b && inside; ++x) inside = in_union(x);
    if (inside && !f1.contains(g) && !f2.contains(g)) return false;
  }
  return true;
}

inline bool facets_intersect(const DyckPath& d, const Interval& f1,
                             const Interval& f2) {
  return facets_intersect_rule(interval_family(d), f1, f2);
}

// Bundled halfspace data, vertices, and lattice for one path, so the
// verification drivers enumerate vertices only once per polytope.
struct PolytopeData {
  DyckPath path;
  HRep h;
  VRep v;

  static PolytopeData of(const DyckPath& d) {
    HRep h = facets(d);
    VRep v = vertices(h);
    return {d, std::move(h), std::move(v)};
  }
};

// Compares the combinatorial rule against actual geometry: two facets
// intersect iff some vertex is tight on both.
inline Report verify_facet_intersection(const HRep& h, const VRep& v) {
  Report rep;
  rep.path = "";
  int m = static_cast<int>(h.facets.size());
  for (int s = 0; s < m; ++s) {
    for (int t = s; t < m; ++t) {
      bool rule = facets_intersect_rule(h.family, h.facets[s].f,
                                        h.facets[t].f);
      bool geo = false;
      for (uint64_t inc : v.incidence) {
        uint64_t both = (uint64_t(1) << s) | (uint64_t(1) << t);
        if ((inc & both) == both) {
          geo = true;
          break;
        }
      }
      rep.add(h.facets[s].f.str() + "&" + h.facets[t].f.str(), "facet_rule",
              rule == geo,
              rule == geo ? ""
                          : "rule says " + std::to_string(rule) +
                                ", geometry says " + std::to_string(geo));
    }
  }
  return rep;
}

inline Report verify_facet_intersection(const DyckPath& d) {
  HRep h = facets(d);
  VRep v = vertices(h);
  Report rep = verify_facet_intersection(h, v);
  rep.path = d.step_string();
  return rep;
}

// ---------------------------------------------------------------------------
// normal fan rays

// Image of the facet normal in the rank-n coordinates:
// [i,n] -> e_i, [0,j] -> -e_{j+1}, [i,j] -> e_i - e_{j+1}.
inline std::vector<int> facet_ray_y(int n, const Interval& f) {
  std::vector<int> r(n, 0);
  if (f.a == 0 && f.b == n) return r;  // degenerate, not a facet
  if (f.a > 0) r[f.a - 1] += 1;
  if (f.b < n) r[f.b + 1 - 1] -= 1;
  return r;
}

inline std::vector<std::vector<int>> normal_fan_rays(const DyckPath& d) {
  HRep h = facets(d);
  std::vector<std::vector<int>> out;
  for (const Facet& f : h.facets) out.push_back(facet_ray_y(h.n, f.f));
  return out;
}

// ---------------------------------------------------------------------------
// Minkowski sum realization (independent oracle)

// Vertices of Newt(F_{i,j}): the zero vector and the prefix indicators
// of [i,i], ..., [i,j].
inline std::vector<std::vector<int>> newton_simplex_vertices(int n, int i,
                                                             int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  out.push_back(e);
  for (int m = i; m <= j; ++m) {
    e[m - 1] = 1;
    out.push_back(e);
  }
  return out;
}

// Prunes a point set to its convex-position subset.  Cheap certificates
// go first (unique minimizers of sampled directions are vertices,
// midpoints of point pairs are not); the exact LP decides the rest.
inline std::vector<std::vector<int>> hull_vertices_int(
    const std::vector<std::vector<int>>& pts) {
  size_t m = pts.size();
  if (m <= 1) return pts;
  int n = static_cast<int>(pts[0].size());
  std::vector<int8_t> status(m, 0);  // 0 unknown, 1 vertex, -1 interior

  uint64_t state = 0x5bf03e9d2ac1f64bULL;
  auto next = [&]() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<long long> c(n);
  for (size_t trial = 0; trial < 16 * m + 64; ++trial) {
    for (int v = 0; v < n; ++v)
      c[v] = static_cast<long long>(next() % 2000001) - 1000000;
    long long best = 0;
    size_t arg = m;
    bool tie = false;
    for (size_t t = 0; t < m; ++t) {
      long long val = 0;
      for (int v = 0; v < n; ++v) val += c[v] * pts[t][v];
      if (arg == m || val < best) {
        best = val;
        arg = t;
        tie = false;
      } else if (val == best) {
        tie = true;
      }
    }
    if (!tie) status[arg] = 1;
  }

  // a point that is the midpoint of two others cannot be a vertex
  std::vector<int> mid(n);
  std::map<std::vector<int>, size_t> locate;
  for (size_t t = 0; t < m; ++t) locate[pts[t]] = t;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      bool even = true;
      for (int v = 0; v < n && even; ++v)
        even = ((pts[a][v] + pts[b][v]) % 2) == 0;
      if (!even) continue;
      for (int v = 0; v < n; ++v) mid[v] = (pts[a][v] + pts[b][v]) / 2;
      auto it = locate.find(mid);
      if (it != locate.end() && it->second != a && it->second != b)
        status[it->second] = -1;
    }

  std::vector<std::vector<Rat>> q;
  for (const auto& p : pts) q.emplace_back(p.begin(), p.end());
  std::vector<std::vector<int>> out;
  for (size_t t = 0; t < m; ++t) {
    if (status[t] == -1) continue;
    if (status[t] == 0) {
      std::vector<std::vector<Rat>> others;
      for (size_t s = 0; s < m; ++s)
        if (s != t && status[s] != -1) others.push_back(q[s]);
      if (linalg::in_convex_hull(q[t], others)) continue;
    }
    out.push_back(pts[t]);
  }
  return out;
}

// Vertices of the Minkowski sum of the Newton simplices below the path,
// by brute force: sum vertex tuples pairwise, deduplicate, prune.
inline std::vector<std::vector<int>> minkowski_vertices_y(const DyckPath& d) {
  int n = d.rank();
  std::vector<std::vector<int>> acc{std::vector<int>(n, 0)};
  for (const GridPoint& p : modules_below(d)) {
    std::vector<std::vector<int>> next;
    std::set<std::vector<int>> seen;
    for (const auto& a : acc) {
      for (const auto& s : newton_simplex_vertices(n, p.i, p.j)) {
        std::vector<int> sum(n);
        for (int v = 0; v < n; ++v) sum[v] = a[v] + s[v];
        if (seen.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    acc = hull_vertices_int(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

inline long long small_det(std::vector<std::vector<long long>> m) {
  size_t k = m.size();
  if (k == 0) return 1;
  long long det = 1;
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    for (size_t r = c + 1; r < k; ++r) {
      // fraction-free elimination: scale then reduce by the previous pivot
      long long a = m[r][c], b = m[c][c];
      for (size_t t = c; t < k; ++t) m[r][t] = m[r][t] * b - a * m[c][t];
      if (c > 0) {
        long long prev = m[c - 1][c - 1];
        for (size_t t = c; t < k; ++t) m[r][t] /= prev;
      }
    }
  }
  // after Bareiss elimination the last pivot is the determinant
  long long bareiss = m[k - 1][k - 1];
  return det < 0 ? -bareiss : bareiss;
}

// Inner primitive facet normals of the convex hull of a full-dimensional
// integer point set: every spanning hyperplane through dim-many points
// with all points on one side.  Normals come from cofactor expansion of
// the difference matrix; all arithmetic stays in 64-bit integers, which
// the small coordinates of these sums never overflow.
inline std::set<std::vector<int>> hull_facet_normals(
    const std::vector<std::vector<int>>& pts, int dim) {
  std::set<std::vector<int>> out;
  size_t nv = pts.size();
  if (dim == 0 || nv < static_cast<size_t>(dim)) return out;
  std::vector<int> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  std::set<std::pair<std::vector<int>, long long>> seen;
  std::vector<long long> normal(dim);
  while (true) {
    for (int v = 0; v < dim; ++v) {
      std::vector<std::vector<long long>> minor;
      for (int t = 1; t < dim; ++t) {
        std::vector<long long> row;
        for (int c = 0; c < dim; ++c) {
          if (c == v) continue;
          row.push_back(pts[idx[t]][c] - pts[idx[0]][c]);
        }
        minor.push_back(std::move(row));
      }
      long long cof = small_det(std::move(minor));
      normal[v] = (v % 2 == 0) ? cof : -cof;
    }
    bool zero = std::all_of(normal.begin(), normal.end(),
                            [](long long x) { return x == 0; });
    if (!zero) {
      long long offset = 0;
      for (int v = 0; v < dim; ++v) offset += normal[v] * pts[idx[0]][v];
      bool above = false, below = false;
      for (const auto& p : pts) {
        long long val = 0;
        for (int v = 0; v < dim; ++v) val += normal[v] * p[v];
        if (val > offset) above = true;
        if (val < offset) below = true;
        if (above && below) break;
      }
      if (above != below) {
        std::vector<long long> oriented = normal;
        if (below)
          for (long long& x : oriented) x = -x;
        long long g = 0;
        for (long long x : oriented) g = std::gcd(g, x);
        std::vector<int> prim;
        for (long long x : oriented) prim.push_back(static_cast<int>(x / g));
        long long off2 = 0;
        for (int v = 0; v < dim; ++v) off2 += prim[v] * pts[idx[0]][v];
        if (seen.insert({prim, off2}).second) out.insert(prim);
      }
    }
    int p = dim - 1;
    while (p >= 0 && idx[p] == static_cast<int>(nv) - dim + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < dim; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

// Ray set in rank-n coordinates must match the g-vectors label by label;
// for small ranks the Minkowski realization provides an independent
// geometric cross-check.
inline Report verify_rays_are_gvectors(const DyckPath& d,
                                       bool cross_check_minkowski) {
  Report rep;
  rep.path = d.step_string();
  HRep h = facets(d);
  int n = h.n;
  std::set<std::vector<int>> rays, gvecs;
  bool per_facet = true;
  for (const Facet& f : h.facets) {
    std::vector<int> ray = facet_ray_y(n, f.f);
    rays.insert(ray);
    if (ray != g_vector(f.label, n)) per_facet = false;
  }
  IndexSet is = IndexSet::of(d);
  for (const Label& x : is.labels()) gvecs.insert(g_vector(x, n));
  rep.add("rays", "rays_eq_gvectors", rays == gvecs,
          rays == gvecs ? "" : "ray set differs from g-vector set");
  rep.add("rays", "facet_label_match", per_facet,
          per_facet ? "" : "facet ray differs from its label's g-vector");
  if (cross_check_minkowski && n >= 1) {
    auto verts = minkowski_vertices_y(d);
    std::set<std::vector<int>> geo = hull_facet_normals(verts, n);
    rep.add("rays", "minkowski_cross_check", geo == gvecs,
            geo == gvecs ? "" : "hull facet normals differ from g-vectors");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// star subdivision

struct StarSubdivisionWitness {
  GridPoint added;          // grid point gained by the cover
  Interval added_facet;     // its facet interval
  std::vector<int> ray_y;   // new ray in rank-n coordinates
  bool ok = false;
  std::string witness;
};

// nonnegative coefficients expressing r in the cone of u and v, if any
inline std::optional<std::pair<Rat, Rat>> cone_coefficients(
    const std::vector<int>& r, const std::vector<int>& u,
    const std::vector<int>& v) {
  size_t n = r.size();
  linalg::Matrix a(n, std::vector<Rat>(2));
  std::vector<Rat> b(n);
  for (size_t i = 0; i < n; ++i) {
    a[i][0] = u[i];
    a[i][1] = v[i];
    b[i] = r[i];
  }
  auto sol = linalg::solve_unique(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  if ((*sol)[0] < 0 || (*sol)[1] < 0) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

inline StarSubdivisionWitness star_subdivision_check(
    const PolytopeData& coarse, const PolytopeData& fine) {
  const DyckPath& d = coarse.path;
  const DyckPath& cover = fine.path;
  StarSubdivisionWitness w;
  auto below_d = modules_below(d);
  auto below_c = modules_below(cover);
  std::vector<GridPoint> gained;
  std::set_difference(below_c.begin(), below_c.end(), below_d.begin(),
                      below_d.end(), std::back_inserter(gained));
  if (gained.size() != 1 || !leq(d, cover)) {
    w.witness = "not a covering pair";
    return w;
  }
  w.added = gained[0];
  int p = w.added.i, q = w.added.j, n = d.rank();
  w.added_facet = Interval{p, q - 1};
  w.ray_y = facet_ray_y(n, w.added_facet);

  const HRep& hc = coarse.h;
  const HRep& hf = fine.h;
  const VRep& vc = coarse.v;
  const VRep& vf = fine.v;

  // (a) facet sets differ by exactly the new interval
  std::set<Interval> fc, ff;
  for (const Facet& f : hc.facets) fc.insert(f.f);
  for (const Facet& f : hf.facets) ff.insert(f.f);
  std::set<Interval> want = fc;
  if (!want.insert(w.added_facet).second) {
    w.witness = "new facet already present in the coarse polytope";
    return w;
  }
  if (ff != want) {
    w.witness = "facet sets do not differ by exactly the new interval";
    return w;
  }

  // (b) the new ray sits in the relative interior of the 2-cone spanned by
  // the normals of [0,q-1] and [p,n], and in no other 2-cone of the
  // coarse fan
  Interval f1{0, q - 1}, f2{p, n};
  int s1 = hc.facet_index(f1), s2 = hc.facet_index(f2);
  if (s1 < 0 || s2 < 0) {
    w.witness = "expected spanning facets are missing";
    return w;
  }
  auto adjacent = [](const VRep& v, int s, int t) {
    uint64_t both = (uint64_t(1) << s) | (uint64_t(1) << t);
    for (uint64_t inc : v.incidence)
      if ((inc & both) == both) return true;
    return false;
  };
  if (!adjacent(vc, s1, s2)) {
    w.witness = "spanning facets are not adjacent in the coarse polytope";
    return w;
  }
  int m = static_cast<int>(hc.facets.size());
  for (int s = 0; s < m; ++s) {
    for (int t = s + 1; t < m; ++t) {
      if (!adjacent(vc, s, t)) continue;
      auto co = cone_coefficients(w.ray_y, facet_ray_y(n, hc.facets[s].f),
                                  facet_ray_y(n, hc.facets[t].f));
      bool designated = (s == std::min(s1, s2) && t == std::max(s1, s2));
      if (designated) {
        if (!co || (*co).first <= 0 || (*co).second <= 0) {
          w.witness = "ray not interior to the designated 2-cone";
          return w;
        }
      } else if (co) {
        w.witness = "ray lies in a second 2-cone " + hc.facets[s].f.str() +
                    "," + hc.facets[t].f.str();
        return w;
      }
    }
  }

  // (c) both new 2-cones appear in the fine fan
  int r0 = hf.facet_index(w.added_facet);
  int t1 = hf.facet_index(f1), t2 = hf.facet_index(f2);
  if (!adjacent(vf, r0, t1) || !adjacent(vf, r0, t2)) {
    w.witness = "new 2-cones missing from the fine fan";
    return w;
  }
  w.ok = true;
  return w;
}

inline StarSubdivisionWitness star_subdivision_check(const DyckPath& d,
                                                     const DyckPath& cover) {
  return star_subdivision_check(PolytopeData::of(d), PolytopeData::of(cover));
}

// ---------------------------------------------------------------------------
// cliques vs faces

// Faces must correspond exactly to the pairwise compatible facet subsets,
// by the map sending a face to the set of facets containing it.
inline Report clique_face_correspondence(const HRep& h, const VRep& v) {
  Report rep;
  FaceLattice lat = face_lattice(h, v);
  int m = static_cast<int>(h.facets.size());

  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      compat[s][t] =
          facets_intersect_rule(h.family, h.facets[s].f, h.facets[t].f);

  std::set<uint64_t> cliques;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int start, uint64_t mask) -> void {
    cliques.insert(mask);
    for (int s = start; s < m; ++s) {
      bool ok = true;
      for (int c : chosen)
        if (!compat[c][s]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(s);
      self(self, s + 1, mask | (uint64_t(1) << s));
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  std::set<uint64_t> face_masks;
  for (const Face& f : lat.faces)
    if (f.dim >= 0) face_masks.insert(f.facet_mask);

  bool equal = cliques == face_masks;
  std::string witness;
  if (!equal) {
    for (uint64_t c : cliques)
      if (!face_masks.count(c)) {
        witness = "clique without a face, mask " + std::to_string(c);
        break;
      }
    if (witness.empty())
      for (uint64_t f : face_masks)
        if (!cliques.count(f)) {
          witness = "face whose facet set is not a clique, mask " +
                    std::to_string(f);
          break;
        }
  }
  rep.add("cliques", "clique_face", equal, witness);

  // inclusion reversal: smaller clique, larger face
  if (equal) {
    bool mono = true;
    for (const Face& f : lat.faces) {
      if (f.dim < 0) continue;
      for (const Face& g : lat.faces) {
        if (g.dim < 0) continue;
        bool mask_sub = (f.facet_mask & g.facet_mask) == f.facet_mask;
        bool verts_sup =
            std::includes(f.vertex_ids.begin(), f.vertex_ids.end(),
                          g.vertex_ids.begin(), g.vertex_ids.end());
        if (mask_sub != verts_sup) mono = false;
      }
    }
    rep.add("cliques", "inclusion_reversing", mono,
            mono ? "" : "facet-set inclusion does not reverse face inclusion");
  }
  return rep;
}

inline Report clique_face_correspondence(const DyckPath& d) {
  HRep h = facets(d);
  VRep v = vertices(h);
  Report rep = clique_face_correspondence(h, v);
  rep.path = d.step_string();
  return rep;
}

// Number of integer points satisfying the halfspace description.
inline Int lattice_point_count(const HRep& h) {
  Int count = 0;
  std::vector<Int> x(h.n + 1, Int(0));
  auto rec = [&](auto&& self, int pos, Int budget) -> void {
    if (pos == h.n) {
      x[pos] = budget;
      for (const Facet& f : h.facets) {
        Int s = 0;
        for (int i = f.f.a; i <= f.f.b; ++i) s += x[i];
        if (s < f.rhs) return;
      }
      ++count;
      return;
    }
    for (Int t = 0; t <= budget; ++t) {
      x[pos] = t;
      self(self, pos + 1, budget - t);
    }
  };
  rec(rec, 0, h.total);
  return count;
}

}  // namespace nakayama
