#include "cli_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "postrop/errors.hpp"

namespace postrop::cli {

namespace {

std::string at(const std::string& where, const std::string& what) { return where + ": " + what; }

}  // namespace

json parse_document(const std::string& text, const std::string& name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto colon = msg.find(": ");
    if (msg.rfind("[json.exception", 0) == 0 && colon != std::string::npos) msg = msg.substr(colon + 2);
    throw FormatError(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON: " + msg);
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open input file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

int int_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(at(where, "expected an integer"));
  long long v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw FormatError(at(where, "integer out of range"));
  return static_cast<int>(v);
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw FormatError(at(where, e.what()));
    }
  }
  throw FormatError(at(where, "expected a rational as \"p/q\" or an integer"));
}

json rational_to(const Rational& q) { return to_string(q); }

Mask subset_from(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw FormatError(at(where, "expected a subset as an integer array"));
  Mask m = 0;
  for (const auto& e : j) {
    int x = int_from(e, where);
    if (x < 1 || x > n) throw FormatError(at(where, "element " + std::to_string(x) + " outside 1.." + std::to_string(n)));
    if (m & bit(x)) throw FormatError(at(where, "repeated element " + std::to_string(x)));
    m |= bit(x);
  }
  return m;
}

json subset_to(Mask m) { return mask_elements(m); }

namespace {

std::pair<int, int> nk_from(const json& j) {
  int n = int_from(field(j, "n"), "n");
  int k = int_from(field(j, "k"), "k");
  if (n < 1 || n > kMaxN) throw FormatError("n must lie in 1.." + std::to_string(kMaxN));
  if (k < 0 || k > n) throw FormatError("k must lie in 0..n");
  return {n, k};
}

std::vector<Mask> bases_from(const json& j, int n, int k, const std::string& where) {
  if (!j.is_array()) throw FormatError(at(where, "expected an array of subsets"));
  std::vector<Mask> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    Mask m = subset_from(j[i], n, w);
    if (popcount(m) != k) throw FormatError(at(w, "expected " + std::to_string(k) + " elements"));
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TropVector trop_from(const json& j) {
  auto [n, k] = nk_from(j);
  if (k == 0 || k == n) throw FormatError("tropical vectors need 0 < k < n");
  TropVector p(n, k);
  const json& e = field(j, "entries");
  if (!e.is_object()) throw FormatError("entries: expected an object keyed by \"i,j,…\"");
  for (auto it = e.begin(); it != e.end(); ++it) {
    std::string where = "entries[\"" + it.key() + "\"]";
    SubsetK s;
    try {
      s = SubsetK::parse_key(n, it.key());
    } catch (const InputError& err) {
      throw FormatError(at(where, err.what()));
    }
    if (s.size() != k) throw FormatError(at(where, "expected " + std::to_string(k) + " elements"));
    if (it.value().is_string() && it.value().get<std::string>() == "inf") continue;
    p.set(s.mask(), rational_from(it.value(), where));
  }
  return p;
}

json trop_to(const TropVector& p) {
  json entries = json::object();
  for (Mask m : p.index().masks()) {
    const TropValue& v = p.at(m);
    if (!v.inf) entries[SubsetK(p.n(), m).key()] = rational_to(v.v);
  }
  return json{{"n", p.n()}, {"k", p.k()}, {"entries", entries}};
}

Matroid matroid_from(const json& j) {
  auto [n, k] = nk_from(j);
  return Matroid::from_masks(n, k, bases_from(field(j, "bases"), n, k, "bases"));
}

json matroid_to(const Matroid& m) {
  json b = json::array();
  for (Mask x : m.masks()) b.push_back(subset_to(x));
  return json{{"n", m.n()}, {"k", m.k()}, {"bases", b}};
}

json positroid_to(const Positroid& p) {
  json j = matroid_to(p.matroid());
  json neck = json::array();
  for (Mask x : p.necklace()) neck.push_back(subset_to(x));
  j["necklace"] = neck;
  j["perm"] = p.perm().window();
  return j;
}

Cluster cluster_from(const json& j) {
  Positroid p = Positroid::from_matroid(matroid_from(field(j, "positroid")));
  std::vector<Mask> members = bases_from(field(j, "members"), p.n(), p.k(), "members");
  std::vector<SubsetK> subs;
  for (Mask m : members) subs.emplace_back(p.n(), m);
  if (!is_cluster(p, subs)) throw InputError("members do not form a cluster of the positroid");
  return Cluster{p, members};
}

json cluster_to(const Cluster& C) {
  json members = json::array();
  for (Mask m : C.members) members.push_back(subset_to(m));
  return json{{"positroid", matroid_to(C.positroid.matroid())}, {"members", members}};
}

Subdivision subdivision_from(const json& j) {
  auto [n, k] = nk_from(j);
  const json& faces = field(j, "maximal_faces");
  if (!faces.is_array() || faces.empty()) throw FormatError("maximal_faces: expected a nonempty array");
  Subdivision s;
  s.n = n;
  s.k = k;
  std::set<Mask> support;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::string where = "maximal_faces[" + std::to_string(i) + "]";
    const json& f = faces[i].is_object() ? field(faces[i], "bases") : faces[i];
    std::vector<Mask> cell = bases_from(f, n, k, where);
    if (cell.empty()) throw FormatError(at(where, "empty cell"));
    support.insert(cell.begin(), cell.end());
    s.maximal_faces.push_back(std::move(cell));
  }
  auto cell_less = [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  };
  std::sort(s.maximal_faces.begin(), s.maximal_faces.end(), cell_less);
  s.support.assign(support.begin(), support.end());
  std::sort(s.support.begin(), s.support.end(), lex_less);
  return s;
}

json subdivision_to(const Subdivision& s) {
  json faces = json::array();
  for (const auto& cell : s.maximal_faces) {
    json b = json::array();
    for (Mask m : cell) b.push_back(subset_to(m));
    faces.push_back(json{{"n", s.n}, {"k", s.k}, {"bases", b}});
  }
  json cs = json::array();
  for (const Cut& c : cuts(s)) cs.push_back(json{{"normal", c.normal}, {"rhs", c.rhs}});
  return json{{"n", s.n}, {"k", s.k}, {"maximal_faces", faces}, {"cuts", cs}};
}

PuiseuxPoly puiseux_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(at(where, "expected {\"denom\":N, \"terms\":{…}}"));
  int denom = int_from(field(j, "denom"), where + ".denom");
  if (denom < 1) throw FormatError(at(where, "denom must be positive"));
  const json& t = field(j, "terms");
  if (!t.is_object()) throw FormatError(at(where, "terms: expected an object"));
  std::map<long, Rational> terms;
  for (auto it = t.begin(); it != t.end(); ++it) {
    long e = 0;
    std::size_t used = 0;
    try {
      e = std::stol(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it.key().size() || it.key().empty())
      throw FormatError(at(where, "term key \"" + it.key() + "\" is not an integer numerator"));
    terms[e] += rational_from(it.value(), where + ".terms[\"" + it.key() + "\"]");
  }
  return PuiseuxPoly::from_terms(denom, terms);
}

json puiseux_to(const PuiseuxPoly& f) {
  json terms = json::object();
  for (const auto& [e, c] : f.terms()) terms[std::to_string(e)] = rational_to(c);
  return json{{"denom", f.denom()}, {"terms", terms}};
}

namespace {

void render(const json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    bool nested = v.is_object() || (v.is_array() && !v.empty() && v.front().is_object());
    if (!nested) {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render(v, indent + "  ", out);
    } else {
      out << indent << it.key() << ": " << v.size() << " item(s)\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << indent << "  [" << i << "]\n";
        if (v[i].is_object()) render(v[i], indent + "    ", out);
        else out << indent << "    " << v[i].dump() << "\n";
      }
    }
  }
}

}  // namespace

namespace {

bool flat(const json& j) {
  if (j.is_object()) return j.empty();
  if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const json& e) { return flat(e); });
  return true;
}

void pretty(const json& j, const std::string& indent, std::ostringstream& out) {
  if (flat(j) || j.dump().size() <= 72) {
    out << j.dump();
    return;
  }
  const std::string inner = indent + "  ";
  bool first = true;
  if (j.is_object()) {
    out << "{\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << inner << json(it.key()).dump() << ": ";
      pretty(it.value(), inner, out);
    }
    out << "\n" << indent << "}";
  } else {
    out << "[\n";
    for (const auto& e : j) {
      if (!first) out << ",\n";
      first = false;
      out << inner;
      pretty(e, inner, out);
    }
    out << "\n" << indent << "]";
  }
}

}  // namespace

std::string render_json(const json& j) {
  std::ostringstream out;
  pretty(j, "", out);
  out << "\n";
  return out.str();
}

std::string render_text(const json& j) {
  std::ostringstream out;
  if (j.is_object()) render(j, "", out);
  else out << j.dump() << "\n";
  return out.str();
}

}  // namespace postrop::cli
