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

#ifndef LCROSS_DIST_IO_HPP_
#define LCROSS_DIST_IO_HPP_

#include <string>
#include <string_view>

#include "lcross/discrete_dist.hpp"

namespace lcross {

// Distribution files are JSON objects of the form
//   {"atoms": [{"v": "-1", "w": "1/2"}, {"v": "1", "w": "1/2"}]}
// with rationals written as canonical "p/q" strings ("3" for "3/1").
// Parsing applies normalize_atoms; InputError names the offending field.

NormalizedDist parse_dist_json(std::string_view text);
NormalizedDist load_dist_file(const std::string& path);
std::string dist_to_json(const DiscreteDist& d);

/// Named built-in laws:
///   rademacher       uniform on {-1, 1}
///   lazy             1/4, 1/2, 1/4 on {-1, 0, 1}
///   uniform{a..b}    uniform on the integers a..b
///   point{c}         point mass at the rational c
/// Unknown names throw InputError.
DiscreteDist builtin_dist(std::string_view name);
bool is_builtin_dist_name(std::string_view name);

/// A built-in name, or else a path to a distribution file.
NormalizedDist resolve_dist(const std::string& name_or_path);

}  // namespace lcross

#endif  // LCROSS_DIST_IO_HPP_
