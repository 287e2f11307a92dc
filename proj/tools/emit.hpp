/*
   Copyright 2026 The wpid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WPID_TOOLS_EMIT_HPP
#define WPID_TOOLS_EMIT_HPP

#include <json.hpp>

#include <string>

#include "wpid/catalog.hpp"
#include "wpid/oracle.hpp"
#include "wpid/suite.hpp"

namespace wpid::io {

using nlohmann::json;

/*
 * Term encoding: [[num, den, [[kind, index, exp], ...]], ...] with kind one
 * of "a", "wp", "wpB", "x", "y", "l", "k", "r". The index is an integer, or
 * the sorted index list for "wp" and "wpB". Integers that do not fit in 64
 * bits are written as decimal strings.
 */
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json identity_to_json(const Identity& id);
Identity identity_from_json(const json& j);
json set_to_json(const IdentitySet& s);

std::string identity_latex(const Identity& id);
std::string identity_text(const Identity& id);

json multiplet_to_json(const MultipletRecord& m);
json suite_to_json(const std::vector<SuiteCheck>& checks);
json report_to_json(const OracleReport& r);
json discrepancies_to_json(const std::vector<Discrepancy>& d);

} // namespace wpid::io

#endif
