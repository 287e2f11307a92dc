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

#ifndef WPID_CATALOG_HPP
#define WPID_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpid/matrix.hpp"
#include "wpid/poly.hpp"
#include "wpid/sl2.hpp"

namespace wpid {

enum class Source { PaperAsPrinted, Generated, OracleCorrected };
std::string to_string(Source s);

// A relation that must vanish. `ref` is a short human anchor.
struct Identity {
    std::string name;
    int genus = 0;
    Poly relation;
    std::optional<int> weight;
    std::string multiplet;
    Source source = Source::Generated;
    std::string ref;
};

Identity make_identity(std::string name, int genus, Poly relation, Source source, std::string ref,
                       std::string multiplet = {});

struct IdentitySet {
    std::string name;
    int genus = 0;
    std::vector<Identity> members;
    // Claimed to be closed under e and f.
    bool representation = false;
    // False for transcriptions that are only adjudicated, never required.
    bool expect_vanish = true;

    std::vector<Poly> relations() const;
};

// ------------------------------------------------------------------ genus 1

Identity genus1_ode();
struct SecondOrder {
    Poly derivative;   // d/du1 of the ODE relation
    Poly quotient;     // derivative / wp111
    Rational factor;   // quotient = factor * relation
    Identity identity; // wp1111 - 6 wp11^2 + I/2
};
SecondOrder genus1_second_order();
// I = a0a4 - 4a1a3 + 3a2^2 and J = a0a2a4 - a0a3^2 + 2a1a2a3 - a2^3 - a1^2a4.
Poly genus1_invariant_I();
Poly genus1_invariant_J();

// ------------------------------------------------------------------ genus 2

// (wp222, -wp122, wp112, -wp111)
std::vector<Poly> genus2_three_index_vector();
IdentitySet genus2_bilinear();
Identity genus2_kummer();
// l0 wp222 - l1 wp122 + l2 wp112 - l3 wp111
Poly genus2_linear_form();
// Bordered 5x5 matrix with border (l0..l3).
PolyMatrix genus2_bordered_H();
// (form)^2 - 1/4 det H, the sign the expansion forces.
Identity genus2_quadratic();
// (form)^2 + 1/4 det H, as displayed.
Identity genus2_quadratic_as_printed();
// Coefficients of l_i l_j in genus2_quadratic().
IdentitySet genus2_quadratic_products();
// Highest weight 1/3(-wp2222 + 6 wp22^2) - ... and its f-chain, each
// normalised to coefficient -1 on its four-index symbol.
Poly genus2_baker_highest_weight();
IdentitySet genus2_fourindex();

// ------------------------------------------------------------------ genus 3

PolyMatrix genus3_A();
IdentitySet genus3_P5();
IdentitySet genus3_P5_printed();
IdentitySet genus3_linear(); // the 25 entries of hA
Poly genus3_P9_highest();    // second base identity
Poly genus3_base_first();    // first base identity
Poly genus3_P9_last_printed();
Poly genus3_P7_highest_printed();

// The doubly bordered identity (l^T A k)^2 + 1/4 det[h l k; l^T 0 0; k^T 0 0].
Identity genus3_quadratic();
// Its coefficients over monomials in l, k (duplicates removed).
IdentitySet genus3_quadratic_family();
// wp333^2 + 1/4 |h33..h55|, the case l = e1, k = e2.
Identity genus3_quadratic_leading();
// The same identity with numeric borders.
Identity genus3_quadratic_with(const std::vector<Rational>& l, const std::vector<Rational>& k);
Identity genus2_quadratic_with(const std::vector<Rational>& l);

// ---------------------------------------------------------- sl2 structure

struct MultipletRecord {
    std::string name;
    int genus;
    Multiplet multiplet;
};
// Named highest weights: P5, P9, P7, P3 (genus 3), baker4, bilinear (genus 2).
std::vector<std::string> highest_weight_names(int g);
MultipletRecord named_multiplet(int g, const std::string& name);

// Highest weight vectors inside the hA span of the given weight.
std::vector<Poly> genus3_linear_highest_weights(int weight);

struct LambdaSearch {
    std::vector<Symbol> candidates;
    Poly lambda;
    bool unique = false;
};
// Solves D(p0 + q * sum c_s s) = 0 over three-index symbols of matching weight.
LambdaSearch lambda_search(int g, const Poly& p0, const Poly& q, const Derivation& d);
LambdaSearch genus3_lambda();
LambdaSearch genus2_lambda();

struct MinorFactorization {
    // sign[i][j] with minor(A, {i}, {j}) = sign * P5(4 - i) * P5(4 - j); 0 when no sign works.
    std::vector<std::vector<int>> sign;
    int three_by_three_checked = 0;
    int three_by_three_divisible = 0; // by a single P5 member
    int three_by_three_in_ideal = 0;  // in the ideal generated by P5
    // 2x2 minors outside the ideal of the P5 relations.
    std::vector<std::string> rank_witnesses;
    bool all_four_by_four() const;
};
MinorFactorization genus3_minor_factorization();

// -------------------------------------------------------- four-index sets

struct FourIndexDerivation {
    Identity highest;          // 2 dL + Y = 0
    std::vector<Identity> chain; // highest and its f-images
    bool y_unique = false;
};
// Differentiates (form)^2 + (-1)^m 1/4 det(bordered) along u_dir and
// factors out the form modulo the linear three-index identities.
FourIndexDerivation derive_fourindex(int g, const std::vector<int>& border_rows, int dir, const std::string& name);

// Fifteen relations, each with coefficient -1 on one four-index symbol.
IdentitySet genus3_fourindex();
IdentitySet genus3_main_text();
IdentitySet appendix1();

// Unique four-index symbol of a relation and its coefficient, if any.
std::optional<std::pair<Symbol, Rational>> single_fourindex(const Poly& p);
// Solves p = 0 for its single four-index symbol: symbol -> expression.
std::optional<std::pair<Symbol, Poly>> solve_fourindex(const Poly& p);

// ------------------------------------------------------------ Baker's set

// wpB_ij = wp_ij - c_ij a_k
struct TransformationTable {
    std::map<Symbol, Poly> baker_of_wp; // wpB_ij -> wp_ij - c a
    Bindings to_covariant() const;     // wpB -> wp - c a, wpB_ijkl -> wp_ijkl
    Bindings to_baker() const;         // wp -> wpB + c a, wp_ijkl -> wpB_ijkl
};
TransformationTable baker_transformation();
IdentitySet appendix2();
// The printed Baker list rewritten in covariant symbols.
IdentitySet appendix2_transformed();
// The generated set rewritten in Baker symbols.
IdentitySet baker_from_generated();
PolyMatrix baker_h_printed();

struct TransformPair {
    std::string symbol;
    std::optional<Poly> from_appendix1;  // Baker-variable solution
    std::optional<Poly> from_generated;
    std::optional<Poly> from_appendix2;
    bool appendix1_match = false;
    bool generated_match = false;
    Poly difference; // appendix2 - appendix1 solutions
};
struct TransformReport {
    std::vector<TransformPair> pairs;
    // Entries of h^B that differ from h after substitution.
    std::vector<std::string> h_mismatches;
};
TransformReport baker_transform_report();

// --------------------------------------------------------------- lookup

std::vector<std::string> set_names(int g);
IdentitySet identity_set(int g, const std::string& name);

struct Discrepancy {
    std::string topic;
    std::string detail;
    std::optional<Poly> residual;
};
std::vector<Discrepancy> discrepancy_report();

} // namespace wpid

#endif
