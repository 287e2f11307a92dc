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

#include "emit.hpp"

#include <stdexcept>

namespace wpid::io {

namespace {

json integer(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

const char* kind_name(SymKind k) {
    switch (k) {
    case SymKind::Coeff: return "a";
    case SymKind::Wp: return "wp";
    case SymKind::WpB: return "wpB";
    case SymKind::PointX: return "x";
    case SymKind::PointY: return "y";
    case SymKind::BorderL: return "l";
    case SymKind::BorderK: return "k";
    case SymKind::Root: return "r";
    }
    return "?";
}

json symbol_index(Symbol s) {
    if (s.kind() == SymKind::Wp || s.kind() == SymKind::WpB) return s.wp_indices();
    if (s.kind() == SymKind::Root) return 0;
    return s.index();
}

Symbol symbol_from(const std::string& kind, const json& idx) {
    if (kind == "a") return Symbol::a(idx.get<int>());
    if (kind == "wp") return Symbol::wp(idx.get<std::vector<int>>());
    if (kind == "wpB") return Symbol::wpB(idx.get<std::vector<int>>());
    if (kind == "x") return Symbol::x(idx.get<int>());
    if (kind == "y") return Symbol::y(idx.get<int>());
    if (kind == "l") return Symbol::l(idx.get<int>());
    if (kind == "k") return Symbol::k(idx.get<int>());
    if (kind == "r") return Symbol::root();
    throw std::invalid_argument("unknown symbol kind " + kind);
}

} // namespace

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (auto& t : p.terms()) {
        json fs = json::array();
        for (auto& [s, e] : t.mono.factors()) fs.push_back({kind_name(s.kind()), symbol_index(s), e});
        out.push_back({integer(t.coeff.get_num()), integer(t.coeff.get_den()), fs});
    }
    return out;
}

Poly poly_from_json(const json& j) {
    std::vector<Term> terms;
    for (auto& t : j) {
        Rational c(integer_from(t.at(0)), integer_from(t.at(1)));
        c.canonicalize();
        Monomial m;
        for (auto& f : t.at(2)) m = m * Monomial(symbol_from(f.at(0).get<std::string>(), f.at(1)), f.at(2).get<unsigned>());
        terms.push_back({m, c});
    }
    return Poly::from_terms(std::move(terms));
}

json identity_to_json(const Identity& id) {
    json j;
    j["name"] = id.name;
    j["genus"] = id.genus;
    j["weight"] = id.weight ? json(*id.weight) : json(nullptr);
    j["multiplet"] = id.multiplet.empty() ? json(nullptr) : json(id.multiplet);
    j["source"] = to_string(id.source);
    j["ref"] = id.ref;
    j["relation"] = id.relation.to_string();
    j["terms"] = poly_to_json(id.relation);
    return j;
}

Identity identity_from_json(const json& j) {
    Identity id;
    id.name = j.at("name").get<std::string>();
    id.genus = j.at("genus").get<int>();
    if (!j.at("weight").is_null()) id.weight = j.at("weight").get<int>();
    if (!j.at("multiplet").is_null()) id.multiplet = j.at("multiplet").get<std::string>();
    auto src = j.at("source").get<std::string>();
    for (auto s : {Source::PaperAsPrinted, Source::Generated, Source::OracleCorrected})
        if (to_string(s) == src) id.source = s;
    id.ref = j.at("ref").get<std::string>();
    id.relation = poly_from_json(j.at("terms"));
    return id;
}

json set_to_json(const IdentitySet& s) {
    json j;
    j["set"] = s.name;
    j["genus"] = s.genus;
    j["representation"] = s.representation;
    j["expect_vanish"] = s.expect_vanish;
    j["identities"] = json::array();
    for (auto& m : s.members) j["identities"].push_back(identity_to_json(m));
    return j;
}

std::string identity_latex(const Identity& id) {
    return "% " + id.name + "\n\\begin{equation}\n" + id.relation.to_latex() + " = 0\n\\end{equation}\n";
}

std::string identity_text(const Identity& id) { return id.name + ": " + id.relation.to_string() + " = 0\n"; }

json multiplet_to_json(const MultipletRecord& m) {
    json j;
    j["name"] = m.name;
    j["genus"] = m.genus;
    j["dimension"] = m.multiplet.dimension();
    j["members"] = json::array();
    for (int i = 0; i < m.multiplet.dimension(); ++i) {
        auto& p = m.multiplet.members[static_cast<std::size_t>(i)];
        json mj;
        mj["index"] = i;
        auto w = weight(p, m.genus);
        mj["weight"] = w ? json(*w) : json(nullptr);
        mj["relation"] = p.to_string();
        mj["terms"] = poly_to_json(p);
        // e(member i) = factor * member i-1
        if (i > 0) mj["e_factor"] = to_string(m.multiplet.e_factors[static_cast<std::size_t>(i - 1)]);
        j["members"].push_back(mj);
    }
    return j;
}

json suite_to_json(const std::vector<SuiteCheck>& checks) {
    json j = json::array();
    for (auto& c : checks) j.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return j;
}

json report_to_json(const OracleReport& r) {
    json j;
    j["genus"] = r.genus;
    j["curve"] = json::array();
    for (auto& a : r.curve) j["curve"].push_back(integer(a));
    j["r"] = integer(r.r);
    j["seed"] = r.seed;
    j["integrability_failures"] = r.integrability_failures;
    j["holds"] = r.count(Verdict::Holds);
    j["fails"] = r.count(Verdict::Fails);
    j["missing_symbol"] = r.count(Verdict::MissingSymbol);
    j["checks"] = json::array();
    for (auto& c : r.checks) {
        json cj{{"set", c.set}, {"name", c.name}, {"source", to_string(c.source)}, {"verdict", to_string(c.verdict)}};
        if (!c.missing.empty()) cj["missing"] = c.missing;
        if (c.draws) cj["draws"] = c.draws;
        if (c.residual) cj["residual"] = c.residual->to_string();
        j["checks"].push_back(cj);
    }
    return j;
}

json discrepancies_to_json(const std::vector<Discrepancy>& d) {
    json j = json::array();
    for (auto& x : d) {
        json e{{"topic", x.topic}, {"detail", x.detail}};
        e["residual"] = x.residual ? json(x.residual->to_string()) : json(nullptr);
        j.push_back(e);
    }
    return j;
}

} // namespace wpid::io
