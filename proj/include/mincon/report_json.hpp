// Copyright 2026 The mincon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINCON_REPORT_JSON_HPP_
#define MINCON_REPORT_JSON_HPP_

// JSON views of the library's report types. Field order is fixed so that
// output can be diffed byte-for-byte.

#include <nlohmann/json.hpp>

#include "mincon/connectivity.hpp"
#include "mincon/rewire.hpp"
#include "mincon/spectral.hpp"
#include "mincon/structure.hpp"

namespace mincon {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(std::span<const Edge> edges);
Json to_json(const ConnectivityReport& r);
Json to_json(const MinimalityCertificate& c);
Json to_json(const DecompositionTree& t);
Json to_json(const PerronResult& p);
Json to_json(const BoundReport& b);
Json to_json(const LevelSets& l);
Json to_json(const EigenStructureReport& r);
Json to_json(const PeelStep& s);
Json to_json(const RewirePlan& p);
Json to_json(const RayleighCertificate& c);

}  // namespace mincon

#endif  // MINCON_REPORT_JSON_HPP_
