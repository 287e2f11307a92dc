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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "emit.hpp"

namespace {

using namespace wpid;
using io::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kDegenerate = 3 };

struct Config {
    int genus = 0;
    std::string set;
    std::string suite = "all";
    std::string curve;
    std::uint64_t seed = 1;
    int draws = 5;
    int root_sign = 1;
    std::string format = "json";
    std::string out;
    std::string hw;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void write(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Integer> parse_curve(const std::string& s) {
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Integer z;
        if (item.empty() || z.set_str(item, 10) != 0) throw UsageError("curve coefficients must be integers: " + s);
        out.push_back(z);
    }
    return out;
}

IdentitySet lookup(int g, const std::string& name) {
    auto names = set_names(g);
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown set " + name + " for genus " + std::to_string(g));
    return identity_set(g, name);
}

int cmd_emit(const Config& c) {
    if (c.set == "discrepancies") {
        auto d = discrepancy_report();
        if (c.format == "json") {
            write(c, dump(io::discrepancies_to_json(d)));
        } else {
            std::string s;
            for (auto& x : d) s += x.topic + ": " + x.detail + (x.residual ? " [" + x.residual->to_string() + "]" : "") + "\n";
            write(c, s);
        }
        return kOk;
    }
    if (!c.genus) throw UsageError("--genus is required");
    auto set = lookup(c.genus, c.set);
    std::string s;
    if (c.format == "json") {
        s = dump(io::set_to_json(set));
    } else {
        for (auto& m : set.members) s += c.format == "latex" ? io::identity_latex(m) : io::identity_text(m);
    }
    write(c, s);
    return kOk;
}

int cmd_multiplet(const Config& c) {
    auto names = highest_weight_names(c.genus);
    if (std::find(names.begin(), names.end(), c.hw) == names.end())
        throw UsageError("unknown highest weight " + c.hw + " for genus " + std::to_string(c.genus));
    auto rec = named_multiplet(c.genus, c.hw);
    if (c.format == "json") {
        write(c, dump(io::multiplet_to_json(rec)));
        return kOk;
    }
    std::string s;
    for (int i = 0; i < rec.multiplet.dimension(); ++i) {
        Identity id;
        id.name = rec.name + "(" + std::to_string(i) + ")";
        id.relation = rec.multiplet.members[static_cast<std::size_t>(i)];
        s += c.format == "latex" ? io::identity_latex(id) : io::identity_text(id);
    }
    write(c, s);
    return kOk;
}

int cmd_check(const Config& c) {
    bool failed = false;
    json report;
    report["genus"] = c.genus;
    report["suite"] = c.suite;
    std::string text;

    if (c.suite == "symbolic" || c.suite == "all") {
        auto checks = symbolic_suite(c.genus);
        report["symbolic"] = io::suite_to_json(checks);
        for (auto& k : checks) {
            failed = failed || !k.ok;
            text += std::string(k.ok ? "PASS " : "FAIL ") + k.name + (k.detail.empty() ? "" : ": " + k.detail) + "\n";
        }
    }
    if (c.suite == "oracle" || c.suite == "all") {
        std::vector<IdentitySet> sets;
        if (!c.set.empty())
            sets.push_back(lookup(c.genus, c.set));
        else
            for (auto& n : set_names(c.genus)) sets.push_back(identity_set(c.genus, n));
        std::vector<CurveInstance> curves;
        if (!c.curve.empty())
            curves.push_back(make_instance(c.genus, parse_curve(c.curve), c.root_sign));
        else
            for (int v = 0; v < 2; ++v) {
                auto d = default_instance(c.genus, v);
                curves.push_back(make_instance(c.genus, d.a, c.root_sign));
            }
        report["oracle"] = json::array();
        for (auto& curve : curves) {
            auto rep = verify_sets(sets, solve_wp(curve), c.seed, c.draws);
            report["oracle"].push_back(io::report_to_json(rep));
            std::string label = "curve";
            for (auto& a : curve.a) label += " " + a.get_str();
            text += label + ", r = " + curve.r.get_str() + ": " + std::to_string(rep.count(Verdict::Holds)) +
                    " hold, " + std::to_string(rep.count(Verdict::Fails)) + " fail, " +
                    std::to_string(rep.count(Verdict::MissingSymbol)) + " missing symbols\n";
            for (auto& f : rep.integrability_failures) text += "  integrability " + f + "\n";
            failed = failed || !rep.integrability_failures.empty();
            for (auto& k : rep.checks) {
                if (k.verdict == Verdict::Holds) continue;
                // Transcriptions are adjudicated, not required, unless asked for by name.
                bool counts = c.set == k.set;
                for (auto& s : sets)
                    if (s.name == k.set && s.expect_vanish) counts = true;
                failed = failed || counts;
                text += "  " + to_string(k.verdict) + " " + k.set + " " + k.name + (counts ? "" : " (expected)");
                for (auto& m : k.missing) text += " " + m;
                text += "\n";
            }
        }
    }
    report["status"] = failed ? "failed" : "ok";
    text += failed ? "FAILED\n" : "OK\n";
    write(c, c.format == "json" ? dump(report) : text);
    return failed ? kFailed : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covariant identities for hyperelliptic wp functions"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* s, bool need_genus) {
        auto* g = s->add_option("--genus", c.genus, "genus 1..3")->check(CLI::Range(1, 3));
        if (need_genus) g->required();
        s->add_option("--format", c.format, "json, latex or text")
            ->check(CLI::IsMember({"json", "latex", "text"}));
        s->add_option("--out", c.out, "output path (default stdout)");
    };

    auto* emit = app.add_subcommand("emit", "write an identity set");
    common(emit, false);
    emit->add_option("--set", c.set, "set name, or 'discrepancies'")->required();

    auto* check = app.add_subcommand("check", "run the symbolic and oracle suites");
    common(check, true);
    check->add_option("--suite", c.suite, "symbolic, oracle or all")
        ->check(CLI::IsMember({"symbolic", "oracle", "all"}));
    check->add_option("--set", c.set, "restrict the oracle to one set");
    check->add_option("--curve", c.curve, "a0,a1,...,a_{2g+2} (integers)");
    check->add_option("--seed", c.seed, "seed for border draws");
    check->add_option("--draws", c.draws, "border draws per bordered identity")->check(CLI::PositiveNumber);
    check->add_option("--root-sign", c.root_sign, "branch of the square root of the top coefficient")
        ->check(CLI::IsMember({-1, 1}));

    auto* mult = app.add_subcommand("multiplet", "generate a multiplet from a named highest weight");
    common(mult, true);
    mult->add_option("--hw", c.hw, "highest weight name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*emit) return cmd_emit(c);
        if (*check) {
            if (c.format == "latex") throw UsageError("check writes json or text");
            return cmd_check(c);
        }
        if (*mult) return cmd_multiplet(c);
    } catch (const UsageError& e) {
        std::cerr << "wpid: " << e.what() << "\n";
        return kUsage;
    } catch (const DegenerateCurve& e) {
        std::cerr << "wpid: degenerate curve: " << e.what() << "\n";
        return kDegenerate;
    } catch (const NotASquare& e) {
        std::cerr << "wpid: " << e.what() << "\n";
        return kDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wpid: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "wpid: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
