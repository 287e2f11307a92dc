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

// Literal transcriptions. Nothing here is corrected; oddities stay as
// displayed and are adjudicated elsewhere.

#include "transcriptions.hpp"

#include <cctype>

namespace wpid::detail {

namespace {

const char* kDelta = "(p11*p33 - p12*p23 - p13^2 + p13*p22)";
// Baker writes Delta with the opposite sign.
const char* kDeltaB = "(b12*b23 + b13^2 - b11*b33 - b13*b22)";

std::string expand(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        bool word_start = i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]));
        if (word_start && (c == 'p' || c == 'b') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            std::size_t j = i + 1;
            std::string idx;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                if (!idx.empty()) idx += ',';
                idx += s[j];
                ++j;
            }
            out += (c == 'p' ? "wp[" : "wpB[") + idx + "]";
            i = j;
        } else if (word_start && (c == 'D' || c == 'E') &&
                   (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
            out += expand(c == 'D' ? kDelta : kDeltaB);
            ++i;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

} // namespace

Poly parse_shorthand(const std::string& s) { return Poly::parse(expand(s)); }

Poly relation_of(const Printed& p) { return parse_shorthand(p.lhs) - parse_shorthand(p.rhs); }

const std::vector<Printed>& appendix1_lines() {
    static const std::vector<Printed> v = {
        {"wp3333", "-p3333 + 6*p33^2", "8*a6*p33 - 8*a7*p23 + a8*(3*p22 - 4*p13) + 10*(a4*a8 - 4*a5*a7 + 3*a6^2)"},
        {"wp2333", "-p2333 + 6*p23*p33",
         "12*a5*p33 - 10*a6*p23 + 4*a7*(p22 - 3*p13) + 2*a8*p12 + 10*(a3*a8 - 3*a4*a7 + 2*a5*a6)"},
        {"wp2233", "-p2233 + 4*p23^2 + 2*p22*p33",
         "18*a4*p33 - 12*a5*p23 + 2*a6*(3*p22 - 14*p13) + 4*a7*p12 + 2*a8*p11 + 8*(a2*a8 - a3*a7 - 5*a4*a6 + 5*a5^2)"},
        {"wp2223", "-p2223 + 6*p22*p23",
         "28*a3*p33 - 16*a4*p23 + 4*a5*(3*p22 - 14*p13) + 12*a7*p11 + 4*(a1*a8 + 5*a2*a7 - 21*a3*a6 + 15*a4*a5)"},
        {"wp2222", "-p2222 + 6*p22^2 - 12*D",
         "48*a3*p33 - 32*a3*p23 + 32*a4*(p22 - 3*p13) - 32*a5*p12 + 48*a6*p11 + a0*a8 + 24*a1*a7 - 4*a2*a6 - 216*a3*a5 + "
         "195*a4^2"},
        {"wp1333", "-p1333 + 6*p13*p33", "3*a4*p33 - 10*a6*p13 + 4*a7*p12 - a8*p11 + 3*a2*a8 - 8*a3*a7 + 5*a4*a6"},
        {"wp1233", "-p1233 + 4*p13*p23 + 2*p12*p33",
         "4*a3*p33 + 2*a4*p23 - 20*a5*p13 + 6*a6*p12 + 2*(a1*a8 - 6*a3*a6 + 5*a4*a5)"},
        {"wp1223", "-p1223 + 4*p12*p23 + 2*p13*p22 + 2*D",
         "6*a2*p33 + 4*a3*p23 + 2*a4*(p22 - 18*p13) + 4*a5*p12 + 6*a6*p11 + 1/2*(a0*a8 + 16*a1*a7 - 36*a2*a6 - "
         "16*a3*a5 + 35*a4^2)"},
        {"wp1222", "-p1222 + 6*p12*p22",
         "12*a1*p33 + 4*a3*(3*p22 - 14*p13) - 16*a4*p12 + 28*a5*p11 + 4*(a0*a7 + 5*a1*a6 - 21*a2*a5 + 15*a3*a4)"},
        {"wp1133", "-p1133 + 4*p13^2 + 2*p11*p33 - 2*D",
         "4*a3*p23 - a4*(p22 - 12*p13) + 4*a5*p12 + 1/2*(a0*a8 - 16*a3*a5 + 15*a4^2)"},
        {"wp1123", "-p1123 + 4*p12*p13 + 2*p11*p23",
         "6*a2*p23 - 20*a3*p13 + 2*a4*p12 + 4*a5*p11 + 2*(a0*a7 - 6*a2*a5 + 5*a3*a4)"},
        {"wp1122", "-p1122 + 4*p12^2 + 2*p11*p22",
         "2*a0*p33 + 4*a1*p23 + 2*a2*(3*p22 - 14*p13) - 12*a3*p12 + 18*a4*p11 + 8*(a0*a6 - a1*a5 - 5*a2*a4 + 5*a3^2)"},
        {"wp1113", "-p1113 + 6*p11*p13", "-a0*p33 + 4*a1*p23 - 10*a2*p13 + 3*a4*p11 + 3*a0*a6 - 8*a1*a5 + 5*a2*a4"},
        {"wp1112", "-p1112 + 6*p11*p12",
         "2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11 + 10*(a0*a5 - 3*a1*a4 + 2*a2*a3)"},
        {"wp1111", "-p1111 + 6*p11^2", "a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11 + 10*(a0*a4 - 4*a1*a3 + 3*a2^2)"},
    };
    return v;
}

// E is Baker's Delta of the Baker symbols.
const std::vector<Printed>& appendix2_lines() {
    static const std::vector<Printed> v = {
        {"wpB3333", "b3333 - 6*b33^2", "28*a6*b33 + 8*a7*b23 + a8*(4*b13 - 3*b22) - 35*a4*a8 + 56*a5*a7"},
        {"wpB2333", "b2333 - 6*b23*b33", "28*a6*b23 + 4*a7*(3*b13 - b22) + 2*a8*b12 - 14*a3*a8"},
        {"wpB2233", "b2233 - 4*b23^2 - 2*b22*b33", "28*a5*b23 + 28*a6*b13 - 4*a7*b12 - 2*a8*b11 - 14*a2*a8"},
        {"wpB2223", "b2223 - 6*b22*b23",
         "-28*a3*b33 + 7 - a4*b23 + 56*a5*b13 - 12*a7*b11 - 4*a1*a8 - 56*a2*a7"},
        {"wpB2222", "b2222 - 6*b22^2 - 12*E",
         "-84*a2*b33 + 56*a3*b23 + 70*a4*b22 + 56*a5*b12 - 84*a6*b11 - 392*a2*a6 + 392*a3*a5"},
        {"wpB1333", "b1333 - 6*b13*b33", "28*a6*b13 - 4*a7*b14 + a8*b11"},
        {"wpB1233", "b1233 - 4*b13*b23 - 2*b12*b33", "28*a5*b13 - 2*a1*a8"},
        {"wpB1223", "b1223 - 4*b12*b23 - 2*b13*b22 + 2*E", "70*a4*b13 - 8*a1*a7 - 1/2*a0*a8"},
        {"wpB1222", "b1222 - 6*b12*b22",
         "-12*a1*b33 + 56*a3*b13 + 70*a4*b12 - 28*a5*b11 - 112*a1*a6 - 4*a0*a7"},
        {"wpB1133", "b1133 - 4*b13^2 - 2*b11*b33 - 2*E", "-1/2*a1*a8"},
        {"wpB1123", "b1123 - 4*b12*b13 - 2*b11*b23", "28*a3*b13 - 2*a0*a7"},
        {"wpB1122", "b1122 - 4*b12^2 - 2*b11*b22", "-2*a0*b33 - 4*a1*b23 + 28*a2*b13 + 28*a3*b12 - 14*a0*a6"},
        {"wpB1113", "b1113 - 6*b11*b13", "a0*b33 - 4*a1*b23 + 28*a2*b13"},
        {"wpB1112", "b1112 - 6*b11*b12", "-2*a0*b23 + 4*a1*(3*b13 - b22) + 28*a2*b12 - 14*a0*a5"},
        {"wpB1111", "b1111 - 6*b11^2", "a0*(4*p13 - 3*b22) + 8*a1*b12 + 28*a2*b11 - 35*a0*a4 + 56*a1*a3"},
    };
    return v;
}

// The three lists derived in the running text (nine, seven and five lines),
// followed by the determinant forms of the highest weights.
const std::vector<Printed>& main_text_lines() {
    static const std::vector<Printed> v = {
        {"nine-1", "-p3333 + 6*p33^2", "10*(a4*a8 - 4*a5*a7 + 3*a6^2) + 8*a6*p33 - 8*a7*p23 + a8*(3*p22 - 4*p13)"},
        {"nine-2", "-p2333 + 6*p23*p33",
         "10*(a3*a8 - 3*a4*a7 + 2*a5*a6) + 12*a5*p33 - 10*p23 + 4*a7*(p22 - 3*p13) + 2*a8*p12"},
        {"nine-3", "2*(-p1333 + 6*p13*p33) + 3*(-p2233 + 2*p22*p33 + 4*p23^2)",
         "10*(3*a2*a8 - 4*a3*a7 - 11*a4*a6 + 12*a5^2) + 60*a4*p33 - 36*a5*p23 - 2*a6*(9*p22 - 52*p13) + 20*a7*p12 + "
         "4*a8*p11"},
        {"nine-4", "-p2223 + 6*p22*p23 + 3*(-p1233 + 2*p12*p33 + 4*p13*p23)",
         "10*(a1*a8 + 2*a2*a7 - 12*a3*a6 + 9*a4*a5) + 40*a3*p33 - 10*a4*p23 + 4*a5*(3*p22 - 29*p13) + 18*a6*p12 + "
         "12*a7*p11"},
        {"nine-5", "-p2222 + 6*p22^2 + 6*(-p1133 + 2*p11*p33 + 4*p13^2) + 12*(-p1223 + 4*p12*p23 + 2*p13*p22)",
         "10*(a0*a8 + 12*a1*a7 - 22*a2*a6 - 36*a3*a5 + 45*a4^2) + 120*a2*p33 + 40*a3*p23 + 50*a4*(p22 - 12*p13) + "
         "40*a5*p12 + 120*a6*p11"},
        {"nine-6", "-p1222 + 6*p12*p22 + 3*(-p1123 + 4*p12*p13 + 2*p11*p23)",
         "10*(a0*a7 + 2*a1*a6 - 12*a2*a5 + 9*a3*a4) + 12*a1*p33 + 18*a2*p23 + 4*a3*(3*p22 - 29*p13) - 10*a4*p12 + "
         "40*a5*p11"},
        {"nine-7", "2*(-p1113 + 6*p11*p13) + 3*(-p1122 + 2*p11*p22 + 4*p12^2)",
         "10*(3*a0*a6 - 4*a1*a5 - 11*a2*a4 + 12*a3^2) + 4*a0*p33 + 20*a1*p23 + 2*a2*(9*p22 - 52*p13) - 36*a3*p12 + "
         "60*a4*p11"},
        {"nine-8", "-p1112 + 6*p11*p12",
         "10*(a0*a5 - 3*a1*a4 + 2*a2*a3) + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11"},
        {"nine-9", "-p1111 + 6*p11^2", "10*(a0*a4 - 4*a1*a3 + 3*a2^2) + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"},
        {"seven-1", "-p1333 + 6*p13*p33", "3*a2*a8 - 8*a3*a7 + 5*a4*a6 + 3*a4*p33 - 10*a6*p13 + 4*a7*p12 - a8*p11"},
        {"seven-2", "-p1233 + 2*p12*p33 + 4*p13*p23",
         "2*a1*a8 - 12*a3*a6 + 10*a4*a5 + 4*a3*p33 + 2*a4*p23 - 20*a5*p13 + 6*a6*p12"},
        {"seven-3", "-p1133 + 2*p11*p33 + 4*p13^2 - p1223 + 2*p13*p22 + 4*p12*p23",
         "a0*a8 + 8*a1*a7 - 18*a2*a6 - 16*a3*a5 + 25*a4^2 + 6*a2*p33 + 8*a3*p23 + a4*(p22 - 48*p13) + 8*a5*p12 + "
         "6*a6*p11"},
        {"seven-4", "-p1222 + 6*p12*p22 + 6*(-p1123 + 2*p11*p23 + 4*p12*p13)",
         "16*a0*a7 + 20*a1*a6 - 156*a2*a5 + 120*a3*a4 + 12*a1*p33 + 36*a2*p23 + 4*(3*a3*p22 - 44*p13) - 4*a4*p12 + "
         "52*a5*p11"},
        {"seven-5", "-p1113 + 6*p11*p12 - p1122 + 2*p11*p22 + 4*p12^2",
         "11*a0*a6 - 16*a1*a5 - 35*a2*a4 + 40*a3^2 + a0*p33 + 8*a1*p23 + 2*a2*(3*p22 - 19*p13) - 12*a3*p12 + "
         "21*a4*p11"},
        {"seven-6", "-p1112 + 6*p11*p12",
         "10*(a0*a5 - 3*a1*a4 + 2*a2*a3) + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11"},
        {"seven-7", "-p1111 + 6*p11^2", "10*(a0*a4 - 4*a1*a3 + 3*a2^2) + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"},
        {"five-1", "2*(-p1133 + 6*p13^2) + 4*(p23*p12 - p13*p22)",
         "a0*a8 - 16*a3*a5 + 15*a4^2 + 8*a3*p23 - 2*a4*(p22 + 12*p13) + 8*a5*p12"},
        {"five-2", "-p1123 + 4*p12*p13 + 2*p23*p11",
         "2*a0*a7 - 12*a2*a5 + 10*a3*a4 + 6*a2*p23 - 20*a3*p13 + 2*a4*p12 + 4*a5*p11"},
        {"five-3", "-p1122 + 2*p11*p22 + 4*p12^2 + 2*(-p1113 + 6*p11*p13)",
         "14*a0*a6 - 24*a1*a5 - 30*a2*a4 + 40*a3^3 + 12*a1*p23 + 6*a2*(p22 - 8*p13) - 12*a3*p12 + 24*a4*p11"},
        {"five-4", "-p1112 + 6*p11*p12",
         "10*a0*a5 - 30*a1*a4 + 20*a2*a3 + 2*a0*p23 + 4*a1*(p22 - 3*p13) - 10*a2*p12 + 12*a3*p11"},
        {"five-5", "-p1111 + 6*p11^2", "10*a0*a4 - 40*a1*a3 + 30*a2^2 + a0*(3*p22 - 4*p13) - 8*a1*p12 + 8*a2*p11"},
    };
    return v;
}

const std::vector<std::vector<const char*>>& genus3_A_rows() {
    static const std::vector<std::vector<const char*>> v = {
        {"0", "-p333", "p233", "-p223 + p133", "p222 - 2*p123"},
        {"p333", "0", "-p133", "p123", "-p122 + p113"},
        {"-p233", "p133", "0", "-p113", "p112"},
        {"p223 - p133", "-p123", "p113", "0", "-p111"},
        {"-p222 + 2*p123", "p122 - p113", "-p112", "p111", "0"},
    };
    return v;
}

const std::vector<const char*>& genus3_P5_lines() {
    static const std::vector<const char*> v = {
        "p113*p333 - p123*p233 + p223*p133 - p133^2",
        "-p233*p113 - p112*p333 - p133*p222 + 2*p133*p123 + p233*p122",
        "p133*p122 - p133*p113 - p223*p122 + p223*p113 + p111*p333 + p123*p222 - 2*p123^2",
        "-p233*p111 - p112*p133 + p112*p223 - p113*p222 + 2*p113*p123",
        "-p123*p112 + p113*p122 - p113^2 + p133*p111",
    };
    return v;
}

const std::vector<std::vector<const char*>>& baker_h_rows() {
    static const std::vector<std::vector<const char*>> v = {
        {"a0", "4*a1", "-2*b11", "-2*b12", "-2*b13"},
        {"4*a1", "28*a2 + 4*b11", "28*a3 + 2*b12", "-2*b22 + 4*b13", "-2*b23"},
        {"-2*b11", "28*a3 + 2*b12", "70*a4 + 4*b22 - 4*b13", "28*a5 + 2*b23", "-2*b33"},
        {"-2*b12", "-2*b22 + 4*b13", "28*a5 + 2*b23", "28*a6 + 4*b33", "4*a7"},
        {"-2*b13", "-2*b23", "-2*b33", "4*a7", "a8"},
    };
    return v;
}

} // namespace wpid::detail
