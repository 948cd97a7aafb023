// postrop: batch command-line front end for the library.
//
// Every subcommand reads at most one JSON document (--input FILE, "-" for
// stdin) and writes one JSON document (or a text rendering) to stdout or
// --out. Exit status: 0 success, 1 domain error, 2 usage or malformed input.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "postrop/errors.hpp"
#include "postrop/fans.hpp"
#include "postrop/polytope.hpp"
#include "postrop/trees.hpp"

using namespace postrop;
using namespace postrop::cli;

namespace {

struct Options {
  std::string input, out, format = "json", kn, param, tree, ij;
  int jobs = 1;
  bool quiet = false;
};

// A domain-level failure that still produced a report (e.g. `check` on a bad vector).
struct Rejected {
  json report;
  std::string message;
};

json load(const Options& o) {
  if (o.input.empty()) throw CLI::ValidationError("--input", "this subcommand needs --input FILE");
  if (o.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_document(ss.str(), "<stdin>");
  }
  return read_document(o.input);
}

std::pair<int, int> kn_of(const Options& o) {
  if (o.kn.empty()) throw CLI::ValidationError("--kn", "this subcommand needs --kn k,n");
  int k = 0, n = 0;
  char comma = 0, extra = 0;
  std::istringstream in(o.kn);
  if (!(in >> k >> comma >> n) || comma != ',' || (in >> extra))
    throw CLI::ValidationError("--kn", "expected k,n (e.g. 3,6)");
  if (k < 1 || n <= k || n > kMaxN) throw CLI::ValidationError("--kn", "need 1 <= k < n <= " + std::to_string(kMaxN));
  return {k, n};
}

// The parametrization used for fan computations of (k, n).
std::string param_id(const Options& o) {
  if (!o.param.empty()) return o.param;
  auto [k, n] = kn_of(o);
  if (k == 3 && n == 6) return "3,6-reference";
  if (k == 3 && n == 7) return "3,7-reference";
  if (k == 2) return "2," + std::to_string(n) + "-markparam";
  return "cluster:" + std::to_string(n) + "," + std::to_string(k);
}

void progress(const Options& o, const std::string& msg) {
  if (!o.quiet) std::cerr << "postrop: " << msg << std::endl;
}

std::vector<json> ints_of(const std::vector<IntVec>& vs) {
  std::vector<json> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

Subdivision subdivision_input(const json& j) {
  if (j.is_object() && j.contains("entries")) return regular_subdivision(trop_from(j));
  return subdivision_from(j);
}

json dims_of(const Subdivision& s) {
  std::vector<int> pieces;
  for (const auto& p : s.positroids()) pieces.push_back(dim_positroid(p));
  std::sort(pieces.begin(), pieces.end());
  return json{{"faces", s.maximal_faces.size()}, {"piece_dims", pieces}, {"dim", dim_subdivision(s)}, {"ndim", ndim(s)}};
}

Positroid positroid_input(const json& j) {
  if (j.contains("perm")) {
    int n = int_from(field(j, "n"), "n");
    std::vector<int> w;
    const json& p = field(j, "perm");
    if (!p.is_array()) throw FormatError("perm: expected an integer array");
    for (const auto& x : p) w.push_back(int_from(x, "perm"));
    return Positroid::from_perm(BoundedAffinePermutation(n, w));
  }
  if (j.contains("necklace")) {
    int n = int_from(field(j, "n"), "n"), k = int_from(field(j, "k"), "k");
    const json& nk = field(j, "necklace");
    if (!nk.is_array()) throw FormatError("necklace: expected an array of subsets");
    Necklace I;
    for (const auto& s : nk) I.push_back(subset_from(s, n, "necklace"));
    return Positroid::from_necklace(n, k, I);
  }
  return Positroid::from_matroid(matroid_from(j));
}

json move_to(const BridgeMove& m, int n) {
  switch (m.kind) {
    case BridgeMove::Kind::Bridge:
      return json{{"kind", "bridge"}, {"i", m.i}, {"j", m.j}, {"a", rational_to(m.a)}};
    case BridgeMove::Kind::AddZeroColumn:
      return json{{"kind", "add_zero_column"}, {"i", m.i}};
    case BridgeMove::Kind::AddPivotColumn:
      return json{{"kind", "add_pivot_column"}, {"i", m.i}};
    case BridgeMove::Kind::Base:
      return json{{"kind", "base"}, {"base", SubsetK(n, m.base).elements()}, {"a", rational_to(m.a)}};
  }
  return {};
}

// ---- subcommands -----------------------------------------------------------

json cmd_check(const Options& o) {
  TropVector p = trop_from(load(o));
  auto bad = first_violation(p);
  json r{{"n", p.n()}, {"k", p.k()}, {"positive_tropical", !bad.has_value()}};
  if (!bad) return r;
  const PluckerFrame& f = *bad;
  TropValue lhs = p.at(f.with(f.a, f.c)) + p.at(f.with(f.b, f.d));
  TropValue rhs = tmin(p.at(f.with(f.a, f.b)) + p.at(f.with(f.c, f.d)), p.at(f.with(f.a, f.d)) + p.at(f.with(f.b, f.c)));
  r["violation"] = json{{"frame", f.str(p.n())}, {"S", mask_elements(f.S)}, {"a", f.a}, {"b", f.b}, {"c", f.c},
                        {"d", f.d}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
  throw Rejected{r, "violated frame " + f.str(p.n()) + ": p_Sac + p_Sbd = " + lhs.str() + " but min = " + rhs.str()};
}

json cmd_support(const Options& o) { return positroid_to(support(trop_from(load(o)))); }

json cmd_propagate(const Options& o) {
  json j = load(o);
  Cluster C = cluster_from(field(j, "cluster"));
  const json& v = field(j, "values");
  std::vector<Rational> values;
  if (v.is_array()) {
    if (v.size() != C.members.size()) throw FormatError("values: expected one entry per cluster member");
    for (std::size_t i = 0; i < v.size(); ++i) values.push_back(rational_from(v[i], "values[" + std::to_string(i) + "]"));
  } else if (v.is_object()) {
    for (Mask m : C.members) {
      std::string key = SubsetK(C.positroid.n(), m).key();
      if (!v.contains(key)) throw FormatError("values: missing cluster member \"" + key + "\"");
      values.push_back(rational_from(v[key], "values[\"" + key + "\"]"));
    }
    if (v.size() != C.members.size()) throw FormatError("values: keys must be exactly the cluster members");
  } else {
    throw FormatError("values: expected an array or an object keyed by cluster members");
  }
  return trop_to(propagate(C.positroid, C, values));
}

json cmd_bridge_reduce(const Options& o) {
  TropVector p = trop_from(load(o));
  auto moves = bridge_reduce(p);
  json ms = json::array();
  for (const auto& m : moves) ms.push_back(move_to(m, p.n()));
  json z = json::array();
  for (const auto& x : bridge_coordinates(moves)) z.push_back(rational_to(x));
  return json{{"n", p.n()}, {"k", p.k()}, {"moves", ms}, {"z", z}};
}

json cmd_bridge_param(const Options& o) {
  json j = load(o);
  Positroid m = positroid_input(field(j, "positroid"));
  const json& zj = field(j, "z");
  if (!zj.is_array()) throw FormatError("z: expected an array of rationals");
  std::vector<Rational> z;
  for (std::size_t i = 0; i < zj.size(); ++i) z.push_back(rational_from(zj[i], "z[" + std::to_string(i) + "]"));
  return trop_to(bridge_parametrize(m, z));
}

json cmd_subdivide(const Options& o) {
  Subdivision s = regular_subdivision(trop_from(load(o)));
  json r = subdivision_to(s);
  r["positroid_subdivision"] = is_positroid_subdivision(s);
  return r;
}

json cmd_secondary_cone(const Options& o) {
  Subdivision s = subdivision_input(load(o));
  SecondaryCone c = secondary_cone(s);
  auto rows = [](const std::vector<QVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) {
      json row = json::array();
      for (const auto& x : v) row.push_back(rational_to(x));
      a.push_back(row);
    }
    return a;
  };
  json coords = json::array();
  for (Mask m : c.coords) coords.push_back(subset_to(m));
  json r{{"n", c.n},
         {"k", c.k},
         {"coords", coords},
         {"feasible", c.feasible},
         {"dimension", c.dimension},
         {"equalities", rows(c.equalities)},
         {"inequalities", rows(c.inequalities)}};
  r["interior_point"] = c.interior_point ? rows({*c.interior_point})[0] : json(nullptr);
  return r;
}

json cmd_dims(const Options& o) { return dims_of(subdivision_input(load(o))); }

json cmd_rays(const Options& o) {
  std::string id = param_id(o);
  Parametrization P = plucker_polynomials(id);
  progress(o, "walking the normal fan of " + id);
  NormalFan F = normal_fan(P);
  progress(o, std::to_string(F.vertices.size()) + " maximal cones, " + std::to_string(F.rays.size()) + " rays");
  // Per-ray subdivision summaries; independent, so computed in parallel and stored by index.
  std::vector<json> summary(F.rays.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < F.rays.size();) {
      try {
        Subdivision s = regular_subdivision(P.trop(to_qvec(F.rays[i])));
        summary[i] = dims_of(s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, o.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::map<std::string, int> signatures;
  for (const auto& s : summary) signatures[s.dump()]++;
  json sig = json::array();
  for (const auto& [k, c] : signatures) {
    json e = json::parse(k);
    e["rays"] = c;
    sig.push_back(e);
  }
  return json{{"parametrization", id}, {"dim", P.r}, {"rays", ints_of(F.rays)}, {"ray_subdivisions", summary},
              {"signatures", sig}};
}

json cmd_fvector(const Options& o) {
  std::string id = param_id(o);
  Parametrization P = plucker_polynomials(id);
  progress(o, "walking the normal fan of " + id);
  NormalFan F = normal_fan(P);
  progress(o, std::to_string(F.vertices.size()) + " vertices; computing the face lattice");
  return json{{"parametrization", id}, {"f_vector", f_vector(polytope_from_fan(F))}};
}

json cmd_realize(const Options& o) {
  Realization R = realize(trop_from(load(o)));
  json matrix = json::array();
  for (const auto& row : R.matrix) {
    json r = json::array();
    for (const auto& f : row) r.push_back(puiseux_to(f));
    matrix.push_back(r);
  }
  json pl = json::object();
  const auto& idx = subset_index(R.point.n, R.point.k);
  for (int i = 0; i < idx.size(); ++i)
    if (!R.point.pluckers[i].is_zero()) pl[SubsetK(R.point.n, idx.mask(i)).key()] = puiseux_to(R.point.pluckers[i]);
  return json{{"n", R.point.n}, {"k", R.point.k}, {"denom", R.denom}, {"matrix", matrix}, {"pluckers", pl}};
}

json cmd_verify_realization(const Options& o) {
  json j = load(o);
  const json& mj = field(j, "matrix");
  if (!mj.is_array() || mj.empty() || !mj[0].is_array()) throw FormatError("matrix: expected k rows of Puiseux polynomials");
  PuiseuxMatrix V;
  for (std::size_t r = 0; r < mj.size(); ++r) {
    if (!mj[r].is_array() || mj[r].size() != mj[0].size()) throw FormatError("matrix: rows must have equal length");
    std::vector<PuiseuxPoly> row;
    for (std::size_t c = 0; c < mj[r].size(); ++c)
      row.push_back(puiseux_from(mj[r][c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    V.push_back(std::move(row));
  }
  PuiseuxPluckerPoint pt = plucker_point(V);
  TropVector val = valuation(pt);
  json r{{"valuation", trop_to(val)}, {"nonnegative", is_nonnegative(pt)}, {"three_term", satisfies_three_term(pt)}};
  bool ok = r["nonnegative"].get<bool>() && r["three_term"].get<bool>();
  if (j.contains("expected")) {
    bool match = trop_from(j["expected"]) == val;
    r["matches_expected"] = match;
    ok = ok && match;
  }
  r["valid"] = ok;
  if (!ok) throw Rejected{r, "the matrix is not a valid positive realization"};
  return r;
}

json tree_report(const PlanarTree& T) {
  json splits = json::array();
  for (Mask s : T.splits()) splits.push_back(subset_to(s));
  return json{{"n", T.n()}, {"tree", T.str()}, {"splits", splits}, {"internal_vertices", T.vertices().size()}};
}

json cmd_tree(const Options& o) {
  if (!o.tree.empty()) {
    PlanarTree T = PlanarTree::parse(o.tree);
    json r = tree_report(T);
    r["trop"] = trop_to(trop_from_tree(T));
    r["subdivision"] = subdivision_to(subdivision_from_tree(T));
    return r;
  }
  return tree_report(tree_from_trop(trop_from(load(o))));
}

json cmd_u_trop(const Options& o) {
  TropVector p = trop_from(load(o));
  json u = json::object();
  auto one = [&](int i, int j) {
    TropValue v = u_trop(p, i, j);
    u[std::to_string(i) + "," + std::to_string(j)] = v.str();
  };
  if (!o.ij.empty()) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream in(o.ij);
    if (!(in >> i >> comma >> j) || comma != ',') throw CLI::ValidationError("--ij", "expected i,j");
    one(i, j);
  } else {
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        if (!(i == 1 && j == n)) one(i, j);
  }
  return json{{"n", p.n()}, {"u", u}};
}

json cmd_envelope(const Options& o) {
  Matroid m = matroid_from(load(o));
  return json{{"is_positroid", is_positroid(m)}, {"envelope", positroid_to(positroid_envelope(m))}};
}

json cmd_convert(const Options& o) { return positroid_to(positroid_input(load(o))); }

void emit(const Options& o, const json& result) {
  std::string text = o.format == "text" ? render_text(result) : render_json(result);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw FormatError(o.out + ": cannot open output file");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postrop: exact computations with positroids, positive tropical Plücker vectors and their fans"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "input JSON file ('-' for stdin)");
  app.add_option("--out", o.out, "write the result to FILE instead of stdout");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--kn", o.kn, "k,n for fan computations");
  app.add_option("--jobs", o.jobs, "worker threads for parallel stages (results are identical for any value)")
      ->check(CLI::Range(1, 256));
  app.add_flag("--quiet", o.quiet, "suppress progress messages on stderr");

  std::map<std::string, std::function<json(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<json(const Options&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };
  sub("check", "validate the positive tropical Plücker relations", cmd_check);
  sub("support", "the positroid of finite entries", cmd_support);
  sub("propagate", "extend cluster values to a positive tropical vector", cmd_propagate);
  sub("bridge-reduce", "bridge decomposition and coordinates of a vector", cmd_bridge_reduce);
  sub("bridge-param", "vector from bridge coordinates", cmd_bridge_param);
  sub("subdivide", "regular subdivision induced by a vector", cmd_subdivide);
  sub("secondary-cone", "secondary cone of a subdivision (or of the one a vector induces)", cmd_secondary_cone);
  sub("dims", "dimension data of a subdivision", cmd_dims);
  sub("rays", "rays of the positive fan of (k,n)", cmd_rays)->add_option("--param", o.param, "parametrization id");
  sub("fvector", "f-vector of the Plücker polytope of (k,n)", cmd_fvector)
      ->add_option("--param", o.param, "parametrization id");
  sub("realize", "Puiseux matrix realizing a vector", cmd_realize);
  sub("verify-realization", "check a Puiseux matrix and its valuation", cmd_verify_realization);
  sub("tree", "planar tree of a (2,n) vector, or data of --tree TEXT", cmd_tree)
      ->add_option("--tree", o.tree, "tree as nested leaf lists, e.g. (1,2,(3,4),5)");
  sub("u-trop", "tropical u-variables of a (2,n) vector", cmd_u_trop)->add_option("--ij", o.ij, "a single diagonal i,j");
  sub("envelope", "positroid envelope of a matroid", cmd_envelope);
  sub("necklace", "Grassmann necklace, bases and permutation of a positroid", cmd_convert);
  sub("perm", "bounded affine permutation, bases and necklace of a positroid", cmd_convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    emit(o, handlers.at(name)(o));
    return 0;
  } catch (const Rejected& r) {
    try {
      emit(o, r.report);
    } catch (const std::exception&) {
    }
    std::cerr << "postrop " << name << ": " << r.message << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "postrop " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "postrop " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "postrop " << name << ": invalid input: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "postrop " << name << ": precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << "postrop " << name << ": overflow: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "postrop " << name << ": internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "postrop " << name << ": " << e.what() << "\n";
    return 1;
  }
}
