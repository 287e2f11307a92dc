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

#include <gtest/gtest.h>

#include <cstdio>
#include <sys/wait.h>

#include "emit.hpp"

using namespace wpid;
using io::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(WPID_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

} // namespace

TEST(Json, RoundTrip) {
    for (int g = 1; g <= 3; ++g)
        for (auto& name : set_names(g))
            for (auto& id : identity_set(g, name).members) {
                json j = json::parse(io::identity_to_json(id).dump());
                Identity back = io::identity_from_json(j);
                EXPECT_EQ(back.relation, id.relation) << name << " " << id.name;
                EXPECT_EQ(back.name, id.name);
                EXPECT_EQ(back.weight, id.weight);
                EXPECT_EQ(back.source, id.source);
            }
}

TEST(Json, TermEncoding) {
    Poly p = Poly::parse("1/2*a0^2*wp[1,1] - 3*wpB[1,2] + y2*l0 + r");
    json j = io::poly_to_json(p);
    EXPECT_EQ(io::poly_from_json(j), p);
    bool seen = false;
    for (auto& t : j)
        if (t[0] == 1 && t[1] == 2) {
            EXPECT_EQ(t[2], json::parse(R"([["a",0,2],["wp",[1,1],1]])"));
            seen = true;
        }
    EXPECT_TRUE(seen);
    // Large coefficients go through strings.
    Poly big = Poly(Rational(Integer("123456789012345678901234567890"))) * Poly(Symbol::a(1));
    EXPECT_EQ(io::poly_from_json(json::parse(io::poly_to_json(big).dump())), big);
}

TEST(Cli, Emit) {
    auto latex = run("emit --genus 3 --set appendix1 --format latex");
    EXPECT_EQ(latex.status, 0);
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = latex.out.find("\\begin{equation}", pos)) != std::string::npos; ++pos) ++count;
    EXPECT_EQ(count, 15u);

    auto bil = run("emit --genus 2 --set bilinear --format json");
    EXPECT_EQ(bil.status, 0);
    EXPECT_EQ(json::parse(bil.out)["identities"].size(), 4u);

    auto ode = run("emit --genus 1 --set ode");
    auto recs = json::parse(ode.out)["identities"];
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0]["weight"], 0);
    EXPECT_EQ(io::identity_from_json(recs[0]).relation, genus1_ode().relation);

    // Byte-identical output for the same configuration.
    EXPECT_EQ(run("emit --genus 3 --set fourindex").out, run("emit --genus 3 --set fourindex").out);

    auto disc = run("emit --set discrepancies");
    EXPECT_EQ(disc.status, 0);
    EXPECT_FALSE(json::parse(disc.out).empty());
}

TEST(Cli, Multiplet) {
    EXPECT_EQ(json::parse(run("multiplet --genus 3 --hw P9").out)["dimension"], 9);
    EXPECT_EQ(json::parse(run("multiplet --genus 3 --hw P7").out)["dimension"], 7);
    auto b = json::parse(run("multiplet --genus 2 --hw baker4").out);
    EXPECT_EQ(b["dimension"], 5);
    EXPECT_EQ(b["members"][0]["weight"], 4);
    EXPECT_EQ(b["members"][4]["weight"], -4);
    EXPECT_EQ(run("multiplet --genus 3 --hw P1").status, 2);
}

TEST(Cli, Check) {
    EXPECT_EQ(run("check --genus 1 --suite all").status, 0);
    EXPECT_EQ(run("check --genus 2 --suite symbolic").status, 0);
    auto r = run("check --genus 3 --suite oracle --set appendix2-as-printed");
    EXPECT_EQ(r.status, 1);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["status"], "failed");
    bool listed = false;
    for (auto& c : j["oracle"][0]["checks"])
        if (c["name"] == "wpB2223") {
            EXPECT_EQ(c["verdict"], "fails");
            EXPECT_TRUE(c.contains("residual"));
            listed = true;
        }
    EXPECT_TRUE(listed);
    EXPECT_EQ(run("check --genus 3 --suite oracle --set appendix2-corrected").status, 0);
    EXPECT_EQ(run("check --genus 2 --suite oracle --set quadratic --curve 2,-3,5,7,-2,6,9 --root-sign -1").status, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("emit --genus 2 --set nope").status, 2);
    EXPECT_EQ(run("emit --genus 4 --set ode").status, 2);
    EXPECT_EQ(run("check --genus 2 --curve 1,2,3").status, 2);
    EXPECT_EQ(run("check --genus 1 --curve 1,0,0,0,3").status, 3);
    EXPECT_EQ(run("check --genus 1 --curve 1,1,1,1,1").status, 3);
}
