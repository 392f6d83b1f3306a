// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcross/dist_io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "lcross/error.hpp"

namespace lcross {

namespace {

using nlohmann::json;

Rational rational_field(const json& node, const std::string& field) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (!node.is_string()) {
    throw InputError(field, "expected a rational string like \"3/8\"");
  }
  try {
    return parse_rational(node.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw InputError(field, e.what());
  }
}

}  // namespace

NormalizedDist parse_dist_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("atoms")) {
    throw InputError("atoms", "missing \"atoms\" array");
  }
  const json& atoms = doc.at("atoms");
  if (!atoms.is_array()) throw InputError("atoms", "expected an array");
  if (atoms.empty()) throw InputError("atoms", "distribution has no atoms");

  std::vector<Atom> raw;
  raw.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    const json& atom = atoms[i];
    if (!atom.is_object() || !atom.contains("v") || !atom.contains("w")) {
      throw InputError(where, "expected an object with \"v\" and \"w\"");
    }
    Rational v = rational_field(atom.at("v"), where + ".v");
    Rational w = rational_field(atom.at("w"), where + ".w");
    if (sgn(w) < 0) throw InputError(where + ".w", "negative weight");
    raw.push_back({std::move(v), std::move(w)});
  }
  try {
    return normalize_atoms(std::move(raw));
  } catch (const InvalidDistribution& e) {
    throw InputError("atoms", e.what());
  }
}

NormalizedDist load_dist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open distribution file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dist_json(buf.str());
}

std::string dist_to_json(const DiscreteDist& d) {
  json atoms = json::array();
  for (const auto& atom : d.atoms()) {
    atoms.push_back({{"v", to_string(atom.value)}, {"w", to_string(atom.weight)}});
  }
  return json{{"atoms", atoms}}.dump();
}

namespace {

const std::regex& uniform_pattern() {
  static const std::regex re(R"(uniform\{(-?\d+)\.\.(-?\d+)\})");
  return re;
}

const std::regex& point_pattern() {
  static const std::regex re(R"(point\{(-?\d+(/\d+)?)\})");
  return re;
}

}  // namespace

bool is_builtin_dist_name(std::string_view name) {
  const std::string s(name);
  return s == "rademacher" || s == "lazy" ||
         std::regex_match(s, uniform_pattern()) ||
         std::regex_match(s, point_pattern());
}

DiscreteDist builtin_dist(std::string_view name) {
  const std::string s(name);
  if (s == "rademacher") {
    return make_dist({{Rational(-1), Rational(1)}, {Rational(1), Rational(1)}});
  }
  if (s == "lazy") {
    return make_dist({{Rational(-1), Rational(1)},
                      {Rational(0), Rational(2)},
                      {Rational(1), Rational(1)}});
  }
  std::smatch m;
  if (std::regex_match(s, m, uniform_pattern())) {
    const long a = std::stol(m[1]);
    const long b = std::stol(m[2]);
    if (a > b) throw InputError(s, "empty integer range");
    if (b - a > 1000000) throw InputError(s, "range too large");
    std::vector<Rational> values;
    for (long v = a; v <= b; ++v) values.emplace_back(v);
    return uniform_on(values);
  }
  if (std::regex_match(s, m, point_pattern())) {
    return point_mass(parse_rational(m[1].str()));
  }
  throw InputError(s, "unknown built-in distribution");
}

NormalizedDist resolve_dist(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    return load_dist_file(name_or_path);
  }
  if (is_builtin_dist_name(name_or_path)) {
    return {builtin_dist(name_or_path), false};
  }
  throw InputError(name_or_path,
                   "neither a distribution file nor a built-in name");
}

}  // namespace lcross
