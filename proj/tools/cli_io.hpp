#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "postrop/clusters.hpp"
#include "postrop/matroid.hpp"
#include "postrop/realize.hpp"
#include "postrop/subdivision.hpp"
#include "postrop/tropical.hpp"

namespace postrop::cli {

using nlohmann::json;

// Malformed or schema-violating input; maps to exit status 2.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses a JSON document; syntax errors are reported as "<name>:<line>:<column>: ...".
json parse_document(const std::string& text, const std::string& name);
json read_document(const std::string& path);

// Accepts "p/q" strings and JSON integers.
Rational rational_from(const json& j, const std::string& where);
json rational_to(const Rational& q);

Mask subset_from(const json& j, int n, const std::string& where);
json subset_to(Mask m);

// {"n":…, "k":…, "entries":{"1,3":"5/2", …}}; omitted keys are ∞.
TropVector trop_from(const json& j);
json trop_to(const TropVector& p);

// {"n":…, "k":…, "bases":[[…], …]}.
Matroid matroid_from(const json& j);
json matroid_to(const Matroid& m);
json positroid_to(const Positroid& p);  // adds "necklace" and "perm"

// {"positroid":…, "members":[[…]]}.
Cluster cluster_from(const json& j);
json cluster_to(const Cluster& C);

// {"n":…, "k":…, "maximal_faces":[positroid…], "cuts":[{"normal":[…], "rhs":…}]}
Subdivision subdivision_from(const json& j);
json subdivision_to(const Subdivision& s);

// {"denom":N, "terms":{"<numerator>":"p/q"}}
PuiseuxPoly puiseux_from(const json& j, const std::string& where);
json puiseux_to(const PuiseuxPoly& f);

// Required-field access with FormatError diagnostics.
const json& field(const json& j, const char* key);
int int_from(const json& j, const std::string& where);

// Indented JSON with arrays of scalars kept on one line.
std::string render_json(const json& j);

// Human-readable rendering of a result document.
std::string render_text(const json& j);

}  // namespace postrop::cli
