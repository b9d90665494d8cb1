// Command-line front end: enumeration, inspection, verification suites,
// polytope output, and monomial maps for Dyck-path configuration spaces.

#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nakayama/dyck.hpp"
#include "nakayama/labels.hpp"
#include "nakayama/monomap.hpp"
#include "nakayama/polytope.hpp"
#include "nakayama/rng.hpp"
#include "nakayama/uspace.hpp"

using json = nlohmann::ordered_json;
using namespace nakayama;

namespace {

constexpr const char* kSchema = "nakayama/1";

int max_rank() {
  const char* env = std::getenv("NAKAYAMA_MAX_N");
  if (!env) return 8;
  int v = std::atoi(env);
  return v > 0 ? v : 8;
}

json report_json(const Report& rep) {
  json checks = json::array();
  for (const CheckItem& c : rep.checks) {
    json item{{"label", c.label}, {"kind", c.kind}, {"pass", c.pass}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return json{{"path", rep.path}, {"checks", checks}};
}

// [[exponents], coefficient] pairs, terms in lex order
json poly_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term = json::array();
    term.push_back(e);
    if (c >= std::numeric_limits<long long>::min() &&
        c <= std::numeric_limits<long long>::max())
      term.push_back(c.convert_to<long long>());
    else
      term.push_back(c.str());
    out.push_back(term);
  }
  return out;
}

void print_report_failures(const Report& rep) {
  for (const CheckItem& c : rep.failures())
    std::cout << "  FAIL " << rep.path << " " << c.kind << " " << c.label
              << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
}

std::vector<DyckPath> paths_for(int n, const std::string& path_text) {
  if (!path_text.empty()) return {DyckPath::parse(path_text)};
  if (n < 1) throw MalformedPath("need --n or --path");
  if (n > max_rank())
    throw MalformedPath("rank exceeds NAKAYAMA_MAX_N = " +
                        std::to_string(max_rank()));
  return enumerate_paths(n);
}

// ---------------------------------------------------------------------- svg

void write_grid_svg(const DyckPath& d, const std::string& file) {
  int n = d.rank();
  const double ux = 28, uy = 28, margin = 30;
  auto px = [&](double a, double b) { return margin + (a - 1 + b) * ux; };
  auto py = [&](double a, double b) {
    return margin + (n + 1) * uy - (b - a + 1) * uy;
  };
  std::ofstream out(file);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='"
      << 2 * margin + 2 * n * ux << "' height='" << 2 * margin + (n + 2) * uy
      << "'>\n";
  // grid edges between neighbouring module points, truncated at the path
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= d.k(i); ++j) {
      if (j < d.k(i))
        out << "<line x1='" << px(i, j) << "' y1='" << py(i, j) << "' x2='"
            << px(i, j + 1) << "' y2='" << py(i, j + 1)
            << "' stroke='#bbb'/>\n";
      if (i < n && j >= i + 1 && j <= d.k(i + 1))
        out << "<line x1='" << px(i, j) << "' y1='" << py(i, j) << "' x2='"
            << px(i + 1, j) << "' y2='" << py(i + 1, j)
            << "' stroke='#bbb'/>\n";
    }
  // the walk
  out << "<polyline fill='none' stroke='#c00' stroke-width='2' points='";
  int a = 1, b = 0;
  out << px(a, b) << "," << py(a, b) << " ";
  for (Step s : d.steps()) {
    if (s == Step::Up)
      ++b;
    else
      ++a;
    out << px(a, b) << "," << py(a, b) << " ";
  }
  out << "'/>\n";
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= d.k(i); ++j) {
      out << "<circle cx='" << px(i, j) << "' cy='" << py(i, j)
          << "' r='2.5' fill='#333'/>\n";
      out << "<text x='" << px(i, j) + 4 << "' y='" << py(i, j) - 4
          << "' font-size='9'>" << i << j << "</text>\n";
    }
  out << "</svg>\n";
}

// ---------------------------------------------------------------- commands

int cmd_enumerate(int n, bool poset, const std::string& format) {
  if (n < 1) throw MalformedPath("need --n >= 1");
  if (n > max_rank())
    throw MalformedPath("rank exceeds NAKAYAMA_MAX_N = " +
                        std::to_string(max_rank()));
  auto paths = enumerate_paths(n);
  if (format == "json") {
    json out{{"schema", kSchema}, {"n", n}};
    json arr = json::array();
    for (const auto& p : paths) arr.push_back(p.step_string());
    out["paths"] = arr;
    out["count"] = paths.size();
    if (poset) {
      json edges = json::array();
      for (const auto& p : paths)
        for (const auto& q : upper_covers(p))
          edges.push_back(json::array({p.step_string(), q.step_string()}));
      out["hasse"] = edges;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& p : paths)
    std::cout << p.step_string() << "  k=" << p.k_string() << "\n";
  std::cout << paths.size() << " paths\n";
  if (poset) {
    std::cout << "hasse edges:\n";
    for (const auto& p : paths)
      for (const auto& q : upper_covers(p))
        std::cout << "  " << p.step_string() << " < " << q.step_string()
                  << "\n";
  }
  return 0;
}

int cmd_info(const std::string& path_text, const std::string& format,
             const std::string& svg_file) {
  DyckPath d = DyckPath::parse(path_text);
  IndexSet is = index_set(d);
  UEquationSystem sys = u_system(d);
  if (!svg_file.empty()) write_grid_svg(d, svg_file);

  if (format == "json") {
    json out{{"schema", kSchema},
             {"path", d.step_string()},
             {"n", d.rank()},
             {"k_heights", d.k_heights()}};
    json gens = json::array();
    for (auto [va, vb] : ideal_generators(d))
      gens.push_back(json::array({va, vb}));
    out["ideal_generators"] = gens;
    json labels = json::array();
    for (const Label& x : is.labels()) {
      json l{{"token", x.token()}};
      if (x.is_diamond()) {
        l["kind"] = "diamond";
        l["i"] = x.i;
        l["j"] = x.j;
      } else {
        l["kind"] = x.is_up() ? "up" : "down";
        l["i"] = x.i;
      }
      labels.push_back(l);
    }
    out["index_set"] = labels;
    out["u_equations"] = sys.equation_strings();
    json compat = json::array();
    for (const Label& x : is.labels()) {
      std::string row;
      for (const Label& y : is.labels())
        row += is.compatible(x, y) ? '1' : '0';
      compat.push_back(row);
    }
    out["compatibility"] = compat;
    Parametrization par = Parametrization::of(d);
    json fs = json::object();
    for (const Label& x : is.labels()) {
      const RationalFunction& f = par.expanded(x);
      fs[x.token()] =
          json{{"num", poly_json(f.num)}, {"den", poly_json(f.den)}};
    }
    out["parametrization"] = fs;
    if (d.is_top() && d.rank() > 0) {
      json chords = json::object();
      for (const Label& x : is.labels()) {
        auto c = chord_label(is, x);
        chords[x.token()] = json::array({c.first, c.second});
      }
      out["chords"] = chords;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "path " << d.step_string() << "  (n=" << d.rank()
            << ", k=" << d.k_string() << ")\n";
  auto gens = ideal_generators(d);
  std::cout << "ideal generators:";
  if (gens.empty()) std::cout << " none (top path)";
  for (auto [va, vb] : gens) {
    std::cout << " ";
    for (int m = vb; m >= va - 1; --m) std::cout << "a" << m;
  }
  std::cout << "\n";
  std::cout << "index set (" << is.size() << "):";
  for (const Label& x : is.labels()) std::cout << " " << x.token();
  std::cout << "\nu-equations:\n";
  for (const auto& s : sys.equation_strings()) std::cout << "  " << s << "\n";
  Parametrization par = Parametrization::of(d);
  std::cout << "parametrization:\n";
  for (const Label& x : is.labels())
    std::cout << "  f_" << x.token() << " = " << par.factored(x).str()
              << "\n";
  if (d.is_top() && d.rank() > 0) {
    std::cout << "chords of the " << d.rank() + 3 << "-gon:";
    for (const Label& x : is.labels()) {
      auto c = chord_label(is, x);
      std::cout << " " << x.token() << "={" << c.first << "," << c.second
                << "}";
    }
    std::cout << "\n";
  }
  std::cout << "compatibility matrix (rows/cols in index order):\n";
  for (const Label& x : is.labels()) {
    std::cout << "  ";
    for (const Label& y : is.labels())
      std::cout << (is.compatible(x, y) ? '1' : '0');
    std::cout << "  " << x.token() << "\n";
  }
  return 0;
}

// grid bookkeeping checks folded into `verify`: encodings, valleys,
// modules, and the chord dictionary for the top path
Report verify_grid(const DyckPath& d) {
  Report rep;
  rep.path = d.step_string();
  bool roundtrip = DyckPath::parse(d.step_string()) == d &&
                   DyckPath::parse(d.k_string()) == d;
  rep.add("encodings", "grid", roundtrip, roundtrip ? "" : "reparse differs");

  auto vs = valleys(d);
  bool vok = true;
  for (const Valley& v : vs)
    if (!(v.a >= 2 && v.a - 1 <= v.b && v.b <= d.rank() - 1)) vok = false;
  rep.add("valleys", "grid", vok);

  std::set<GridPoint> below;
  for (const GridPoint& g : modules_below(d)) below.insert(g);
  bool mok = true;
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = i; j <= d.rank(); ++j) {
      bool keep = true;
      for (const Valley& v : vs)
        if (!(i >= v.a || j <= v.b)) keep = false;
      if (keep != (below.count(GridPoint{i, j}) > 0)) mok = false;
    }
  rep.add("modules_below", "grid", mok);

  if (d.is_top()) {
    IndexSet is = index_set(d);
    bool cok = true;
    for (const Label& x : is.labels())
      for (const Label& y : is.labels())
        if (is.compatible(x, y) ==
            chords_cross(chord_label(is, x), chord_label(is, y)))
          cok = false;
    rep.add("chords", "grid", cok);
  }
  return rep;
}

Report verify_param_suite(const DyckPath& d, uint64_t seed) {
  Report rep = verify_parametrization(d);
  Rng rng(seed);
  int n = d.rank();
  for (int t = 0; t < 5; ++t) {
    std::vector<Rat> y = rng.small_rational_vector(n);
    int r = jacobian_rank(d, y);
    rep.add("point" + std::to_string(t), "jacobian", r == n,
            r == n ? "" : "rank " + std::to_string(r) + " at " + rat_vec_str(y));
  }
  std::vector<Rat> y = rng.small_rational_vector(n);
  auto pt = evaluate_point(d, y);
  UEquationSystem sys = u_system(d);
  bool sat = true, open01 = true;
  for (const UEquation& eq : sys.equations()) {
    Rat prod = 1;
    for (const Label& yy : eq.rhs) prod *= pt.at(yy);
    if (pt.at(eq.x) + prod != 1) sat = false;
  }
  for (const auto& [x, v] : pt)
    if (!(v > 0 && v < 1)) open01 = false;
  rep.add("point", "evaluate", sat && open01,
          sat ? (open01 ? "" : "coordinate outside (0,1)")
              : "u-equation violated");
  return rep;
}

Report verify_divisor_suite(const DyckPath& d) {
  Report rep;
  rep.path = d.step_string();
  IndexSet is = index_set(d);
  for (const Label& x : is.labels()) {
    Report sub = verify_divisor(d, x);
    rep.merge(sub);
    auto fact = divisor_factorization(d, x);
    int n1 = fact.first.rank(), n2 = fact.second.rank();
    bool formulas = x.is_diamond()
                        ? (n1 == x.j - x.i - 1 && n2 == d.rank() + x.i - x.j)
                        : (n1 == d.rank() - x.i && n2 == x.i - 1);
    rep.add(x.token(), "divisor_formula", formulas,
            formulas ? ""
                     : "ranks (" + std::to_string(n1) + "," +
                           std::to_string(n2) + ")");
  }
  return rep;
}

Report verify_maps_suite(const std::vector<DyckPath>& paths, uint64_t seed,
                         bool* compat_warning) {
  Report rep;
  rep.path = "rank " + std::to_string(paths.empty() ? 0 : paths[0].rank());
  Rng rng(seed);
  int n = paths.empty() ? 0 : paths[0].rank();
  for (const auto& p : paths) {
    for (const auto& q : paths) {
      if (!leq(p, q)) continue;
      MonomialMap phi = monomial_map(p, q);
      std::string pair = p.step_string() + "<=" + q.step_string();
      Report part = verify_partition_invariant(phi);
      rep.add(pair, "map_partition", part.all_pass());

      bool ident_ok = phi.is_identity() == (p == q);
      rep.add(pair, "map_faithful", ident_ok);

      if (n <= 4) {
        Report compat = verify_parametrization_compat(p, q);
        if (!compat.all_pass()) {
          *compat_warning = true;
          std::vector<Rat> y = rng.small_rational_vector(n);
          bool push_ok = verify_pushforward_at(p, q, y);
          rep.add(pair, "map_compat_pushforward", push_ok,
                  "symbolic compatibility failed, pushforward check " +
                      std::string(push_ok ? "passed" : "failed"));
        } else {
          rep.add(pair, "map_compat", true);
        }
      } else {
        std::vector<Rat> y = rng.small_rational_vector(n);
        bool push_ok = verify_pushforward_at(p, q, y);
        rep.add(pair, "map_pushforward", push_ok);
      }
    }
  }
  // functoriality over all chains of length three
  bool chains_ok = true;
  for (const auto& a : paths)
    for (const auto& b : paths) {
      if (!leq(a, b)) continue;
      for (const auto& c : paths) {
        if (!leq(b, c)) continue;
        if (!verify_functoriality(a, b, c)) {
          chains_ok = false;
          rep.add(a.step_string() + "<=" + b.step_string() + "<=" +
                      c.step_string(),
                  "map_functorial", false);
        }
      }
    }
  if (chains_ok) rep.add("chains", "map_functorial", true);
  return rep;
}

Report verify_polytope_suite(const DyckPath& d,
                             std::map<std::string, PolytopeData>& cache) {
  auto data_of = [&](const DyckPath& p) -> const PolytopeData& {
    auto it = cache.find(p.step_string());
    if (it == cache.end())
      it = cache.emplace(p.step_string(), PolytopeData::of(p)).first;
    return it->second;
  };
  Report rep;
  rep.path = d.step_string();
  int n = d.rank();
  const PolytopeData& pd = data_of(d);
  const HRep& h = pd.h;
  const VRep& v = pd.v;

  rep.add("facets", "polytope", h.facets.size() == index_set(d).size(),
          "facet count vs index set");
  rep.add("simple", "polytope", is_simple(h, v));

  bool hv = true;
  for (size_t t = 0; t < v.vertices.size() && hv; ++t) {
    Rat total = 0;
    for (const Rat& x : v.vertices[t]) total += x;
    if (total != Rat(h.total)) hv = false;
    for (size_t s = 0; s < h.facets.size(); ++s) {
      Rat val = facet_value(h.facets[s], v.vertices[t]);
      if (val < h.facets[s].rhs) hv = false;
      if ((val == h.facets[s].rhs) != (((v.incidence[t] >> s) & 1) != 0))
        hv = false;
    }
  }
  for (size_t s = 0; s < h.facets.size() && hv; ++s) {
    std::vector<std::vector<Rat>> on;
    for (size_t t = 0; t < v.vertices.size(); ++t)
      if ((v.incidence[t] >> s) & 1) on.push_back(v.vertices[t]);
    if (linalg::affine_rank(on) != n - 1) hv = false;
  }
  rep.add("hv", "polytope", hv, hv ? "" : "H/V cross-validation failed");

  rep.merge(verify_facet_intersection(h, v));
  rep.merge(verify_rays_are_gvectors(d, n <= 4));
  if (n <= 5) rep.merge(clique_face_correspondence(h, v));

  for (const DyckPath& q : upper_covers(d)) {
    StarSubdivisionWitness w = star_subdivision_check(pd, data_of(q));
    rep.add(d.step_string() + "->" + q.step_string(), "star", w.ok,
            w.witness);
  }
  return rep;
}

int cmd_verify(const std::string& suite, int n, const std::string& path_text,
               uint64_t seed, const std::string& format) {
  auto paths = paths_for(n, path_text);
  std::vector<Report> reports;
  bool compat_warning = false;

  auto want = [&](const char* s) { return suite == s || suite == "all"; };

  std::map<std::string, PolytopeData> cache;
  for (const auto& p : paths) {
    if (suite == "all") reports.push_back(verify_grid(p));
    if (want("param")) reports.push_back(verify_param_suite(p, seed));
    if (want("trop")) reports.push_back(verify_tropical_duality(p));
    if (want("divisors")) reports.push_back(verify_divisor_suite(p));
    if (want("polytope")) reports.push_back(verify_polytope_suite(p, cache));
  }
  if (want("maps")) reports.push_back(verify_maps_suite(paths, seed, &compat_warning));

  bool pass = true;
  size_t checks = 0;
  for (const Report& r : reports) {
    checks += r.checks.size();
    if (!r.all_pass()) pass = false;
  }

  if (format == "json") {
    json out{{"schema", kSchema},
             {"suite", suite},
             {"paths_checked", paths.size()},
             {"checks", checks},
             {"pass", pass}};
    json arr = json::array();
    for (const Report& r : reports) arr.push_back(report_json(r));
    out["reports"] = arr;
    if (compat_warning)
      out["warning"] =
          "symbolic map compatibility failed somewhere; pushforward point "
          "checks used instead";
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Report& r : reports) print_report_failures(r);
    if (compat_warning)
      std::cout << "warning: symbolic map compatibility failed somewhere; "
                   "pushforward point checks used instead\n";
    std::cout << "suite " << suite << ": " << paths.size()
              << " paths checked, " << checks << " checks, "
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_polytope(const std::string& path_text, bool y_coords,
                 const std::string& format) {
  DyckPath d = DyckPath::parse(path_text);
  HRep h = facets(d);
  VRep v = vertices(h);
  FaceLattice lat = face_lattice(h, v);

  json out{{"schema", kSchema}, {"path", d.step_string()}, {"n", d.rank()}};
  json fs = json::array();
  for (const Facet& f : h.facets)
    fs.push_back(json{{"interval", json::array({f.f.a, f.f.b})},
                      {"rhs", f.rhs.convert_to<long long>()},
                      {"label", f.label.token()}});
  out["facets"] = fs;
  out["equality_total"] = h.total.convert_to<long long>();
  json vs = json::array();
  for (const auto& vert : v.vertices) {
    json row = json::array();
    for (const Rat& x : vert) row.push_back(rat_str(x));
    vs.push_back(row);
  }
  out["vertices"] = vs;
  json fv = json::array();
  for (const Int& c : lat.f_vector) fv.push_back(c.convert_to<long long>());
  out["f_vector"] = fv;
  out["simple"] = is_simple(h, v);
  out["lattice_points"] = lattice_point_count(h).convert_to<long long>();
  if (y_coords) {
    auto yv = minkowski_vertices_y(d);
    json arr = json::array();
    for (const auto& p : yv) arr.push_back(p);
    out["y_vertices"] = arr;
    json normals = json::array();
    for (const auto& r : hull_facet_normals(yv, d.rank())) normals.push_back(r);
    out["y_facet_normals"] = normals;
  }
  if (format == "text") {
    std::cout << "path " << d.step_string() << ": " << h.facets.size()
              << " facets, " << v.vertices.size() << " vertices, f-vector (";
    for (size_t t = 0; t < lat.f_vector.size(); ++t)
      std::cout << (t ? "," : "") << lat.f_vector[t];
    std::cout << "), " << (is_simple(h, v) ? "simple" : "NOT SIMPLE") << "\n";
    return 0;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_map(const std::string& from_text, const std::string& to_text,
            bool check, uint64_t seed, const std::string& format) {
  DyckPath from = DyckPath::parse(from_text);
  DyckPath to = DyckPath::parse(to_text);
  MonomialMap phi = monomial_map(from, to);
  IndexSet sis = index_set(from);

  bool pass = true;
  Report checks;
  if (check) {
    checks = verify_partition_invariant(phi);
    checks.merge(verify_parametrization_compat(from, to));
    Rng rng(seed);
    bool push =
        verify_pushforward_at(from, to, rng.small_rational_vector(from.rank()));
    checks.add("pushforward", "map", push);
    bool fun = verify_functoriality(from, to, DyckPath::top(from.rank()));
    checks.add("chain_to_top", "map_functorial", fun);
    pass = checks.all_pass();
  }

  if (format == "json") {
    json out{{"schema", kSchema},
             {"from", from.step_string()},
             {"to", to.step_string()}};
    json assigns = json::object();
    for (const Label& x : sis.labels()) {
      json img = json::object();
      for (const auto& [y, e] : phi.image(x)) img[y.token()] = e;
      assigns[x.token()] = img;
    }
    out["map"] = assigns;
    if (check) {
      out["pass"] = pass;
      json arr = json::array();
      arr.push_back(report_json(checks));
      out["reports"] = arr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Label& x : sis.labels()) std::cout << phi.render(x) << "\n";
    if (check) {
      print_report_failures(checks);
      std::cout << "map checks: " << (pass ? "PASS" : "FAIL") << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dyck-path configuration spaces: u-equations, parametrizations, "
      "polytopes"};
  app.require_subcommand(1);

  int n = 0;
  std::string path_text, format = "text", suite = "all";
  uint64_t seed = 1;
  bool poset = false, y_coords = false, check = false;
  std::string svg_file, from_text, to_text;

  auto* enumerate = app.add_subcommand("enumerate", "list all paths of rank n");
  enumerate->add_option("--n", n, "rank")->required();
  enumerate->add_flag("--poset", poset, "also print Hasse edges");
  enumerate->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* info = app.add_subcommand("info", "index set, u-equations, chords");
  info->add_option("--path", path_text, "step string or k-heights")
      ->required();
  info->add_option("--n", n, "rank (redundant, for symmetry)");
  info->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  info->add_option("--svg", svg_file, "write a grid diagram to this file");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"param", "trop", "divisors", "maps", "polytope", "all"}));
  verify->add_option("--n", n, "verify all paths of this rank");
  verify->add_option("--path", path_text, "verify one path");
  verify->add_option("--seed", seed, "seed for rational sample points");
  verify->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  std::string poly_format = "json";
  auto* polytope =
      app.add_subcommand("polytope", "H/V representations and face data");
  polytope->add_option("--path", path_text)->required();
  polytope->add_option("--n", n, "rank (redundant, for symmetry)");
  polytope->add_flag("--y-coords", y_coords,
                     "include the Minkowski realization");
  polytope->add_option("--format", poly_format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* map =
      app.add_subcommand("map", "monomial map between comparable paths");
  map->add_option("--from", from_text, "lower path")->required();
  map->add_option("--to", to_text, "higher path")->required();
  map->add_option("--n", n, "rank (redundant, for symmetry)");
  map->add_flag("--check", check, "verify the map");
  map->add_option("--seed", seed, "seed for rational sample points");
  map->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(n, poset, format);
    if (info->parsed()) return cmd_info(path_text, format, svg_file);
    if (verify->parsed()) return cmd_verify(suite, n, path_text, seed, format);
    if (polytope->parsed()) return cmd_polytope(path_text, y_coords, poly_format);
    if (map->parsed()) return cmd_map(from_text, to_text, check, seed, format);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
