// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include "qising/commoncause.hpp"

namespace qising {

/// Row-major array of [re, im] pairs.
nlohmann::json cmat_to_json(const CMat &m);
/// Inverse of cmat_to_json. The element count must be a perfect square.
CMat cmat_from_json(const nlohmann::json &j);

void to_json(nlohmann::json &j, const HalfIndex &h);
void to_json(nlohmann::json &j, const MinimalCone &c);
void to_json(nlohmann::json &j, const Region &r);
void to_json(nlohmann::json &j, const DynamicsParams &p);
void from_json(const nlohmann::json &j, DynamicsParams &p);
void to_json(nlohmann::json &j, const ScreeningResult &s);
void to_json(nlohmann::json &j, const ReichenbachReport &r);
/// Omits the matrix C; add it with cmat_to_json when needed.
void to_json(nlohmann::json &j, const CommonCauseCertificate &c);
void to_json(nlohmann::json &j, const U0Entry &e);
void to_json(nlohmann::json &j, const U0Report &r);
void to_json(nlohmann::json &j, const SearchReport &r);

}  // namespace qising
