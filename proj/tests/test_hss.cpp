/*
   Copyright 2026 The lwhss Authors

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

#include <set>

#include "doctest.h"
#include "lwhss/hss.hpp"
#include "oracles.hpp"
#include "schemes.hpp"

using namespace lwhss;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(64, 4) == 635376);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("subset index") {
    const SubsetIndex idx(4, 2);
    REQUIRE(idx.count() == 6);
    CHECK(idx.subset(0) == std::vector<std::size_t>{0, 1});
    CHECK(idx.subset(5) == std::vector<std::size_t>{2, 3});
    CHECK(idx.find(std::vector<std::size_t>{1, 3}) == 4u);
    CHECK_FALSE(idx.find(std::vector<std::size_t>{1, 1}).has_value());
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(idx.held_by(j).size() == binomial(3, 2));
        for (std::size_t s = 0; s < idx.count(); ++s) {
            const bool member = std::count(idx.subset(s).begin(), idx.subset(s).end(), j) == 1;
            CHECK((idx.position(j, s) < 0) == member);
        }
    }
    CHECK(oracle::error_of([] { SubsetIndex(3, 3); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("CNF sharing") {
    const Field f = Field::make(2);
    const SubsetIndex idx(2, 1);
    const std::vector<Code> r{0};
    const ShareBundle b = cnf_share_with(f, idx, 1, r);
    CHECK(b.shares == std::vector<Code>{0, 1});
    const auto frags = distribute(b, idx);
    // Server 0 holds y_{1}, server 1 holds y_{0}.
    CHECK(frags[0].values == std::vector<Code>{1});
    CHECK(frags[1].values == std::vector<Code>{0});

    const Field f7 = Field::make(7);
    const SubsetIndex idx53(5, 3);
    RandomStream rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Code x = rng.element(f7);
        const ShareBundle sb = cnf_share(f7, idx53, x, rng);
        Code sum = 0;
        for (Code y : sb.shares) sum = f7.add(sum, y);
        CHECK(sum == x);
        for (const auto& fr : distribute(sb, idx53)) CHECK(fr.values.size() == binomial(4, 3));
    }
    CHECK(oracle::error_of([&] { cnf_share_with(f, idx, 1, std::vector<Code>{}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("monomial space addressing") {
    const HssParams p{4, 1, 2, 3, 2, {}};
    const MonomialSpace space(p);
    CHECK(space.size() == 3 * 16);
    for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.at(i)) == i);
    const MonomialId id{1, {0, 2}};
    CHECK(space.touched_servers(id) == std::vector<std::size_t>{0, 2});
    CHECK(space.able_servers(id) == std::vector<std::size_t>{1, 3});
    const auto listing = enumerate_monomials(p);
    CHECK(listing.all.size() == 48);
    for (std::size_t j = 0; j < 4; ++j) CHECK(listing.per_server[j].size() == 3 * 9);  // l C(s-1,t)^d
    CHECK(oracle::error_of([&] { MonomialSpace(p, 10); }) == ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("parameter validation") {
    CHECK(oracle::error_of([] { HssParams{2, 1, 2, 1, 2, {}}.validate(); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { HssParams{3, 0, 1, 1, 1, {}}.validate(); }) == ErrorKind::Degenerate);
    CHECK(oracle::error_of([] { HssParams{3, 1, 2, 1, 1, {}}.validate(); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { HssParams{3, 1, 1, 1, 2, {2}}.validate(); }) == ErrorKind::ParameterOutOfRange);
    const auto rep = fixtures::repetition_scheme();
    CHECK(oracle::error_of([&] { synthesize_eval(rep.code(), HssParams{3, 1, 1, 1, 1, {}}); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("repetition scheme") {
    const HssScheme s = fixtures::repetition_scheme();
    CHECK(s.labelweight_status() == LabelweightStatus::Verified);
    CHECK(s.min_labelweight() == 2u);
    CHECK(scheme_rate(s) == Rational(1, 2));
    // Each server outputs the single share it holds.
    CHECK(s.eval_terms(0).size() == 1);
    CHECK(s.eval_terms(1).size() == 1);
    const std::vector<Code> z{1, 0};
    CHECK(reconstruct(s, z) == Vector{1});
    CHECK(reconstruct(s, std::vector<Code>{0, 0}) == Vector{0});
    for (Code x : {0u, 1u}) {
        const auto res = run_end_to_end(s, {{x}}, 5);
        CHECK(res.pass);
        CHECK(res.outputs == Vector{x});
    }
}

TEST_CASE("insufficient labelweight is reported") {
    const Field f = Field::make(2);
    // A code whose only nonzero codeword lives on one server.
    const LabeledCode weak(Matrix::from_rows(f, {{1, 0, 0}}, 3), Labeling::identity(3));
    const HssParams p{3, 1, 1, 1, 1, {}};
    CHECK(oracle::error_of([&] { synthesize_eval(weak, p); }) == ErrorKind::InsufficientLabelweight);
    SynthesisOptions no_check;
    no_check.verify_labelweight = false;
    CHECK(oracle::error_of([&] { synthesize_eval(weak, p, no_check); }) == ErrorKind::InsufficientLabelweight);
    // Hermitian k=6 has distance 2, too small for dt = 2.
    const LabeledCode h6 = hermitian_build(2, 6);
    CHECK(oracle::error_of([&] { synthesize_eval(h6, fixtures::params_for(h6, 1, 2)); }) ==
          ErrorKind::InsufficientLabelweight);
}

TEST_CASE("unverified labelweight is marked as asserted") {
    const LabeledCode h = hermitian_build(2, 5);
    SynthesisOptions opt;
    opt.labelweight_budget = 8;
    const HssScheme s = synthesize_eval(h, fixtures::params_for(h, 1, 2), opt);
    CHECK(s.labelweight_status() == LabelweightStatus::AssertedByConstruction);
    CHECK_FALSE(s.min_labelweight().has_value());
    CHECK(run_end_to_end(s, {{1, 2}, {3, 1}, {0, 1}, {1, 1}, {2, 2}}, 1).pass);
}

TEST_CASE("end-to-end correctness on the fixture schemes") {
    for (const auto& [name, scheme] : fixtures::end_to_end_schemes()) {
        CAPTURE(name);
        RandomStream rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            const auto secrets = random_secrets(scheme, rng);
            const auto res = run_end_to_end(scheme, secrets, 1000 + trial);
            REQUIRE(res.pass);
            // Independent expectation: product of the first d secrets of each instance.
            for (std::size_t i = 0; i < secrets.size(); ++i) {
                Code prod = 1;
                for (std::size_t k = 0; k < scheme.params().degree; ++k) prod = scheme.field().mul(prod, secrets[i][k]);
                REQUIRE(res.outputs[i] == prod);
            }
        }
        const std::vector<std::vector<Code>> ones(scheme.params().instances,
                                                  std::vector<Code>(scheme.params().variables, 1));
        CHECK(run_end_to_end(scheme, ones, 3).outputs == Vector(scheme.params().instances, 1));
    }
}

TEST_CASE("eval terms are local") {
    for (const auto& [name, scheme] : fixtures::end_to_end_schemes()) {
        CAPTURE(name);
        const auto& space = scheme.monomials();
        for (std::size_t r = 0; r < scheme.code().length(); ++r)
            for (const auto& term : scheme.eval_terms(r)) {
                const auto able = space.able_servers(space.at(term.monomial));
                CHECK(std::binary_search(able.begin(), able.end(), scheme.code().labeling()[r]));
                CHECK(term.coefficient != 0);
            }
    }
}

TEST_CASE("selected variables and repeated factors") {
    const LabeledCode rs = rs_build(5, 5, 2);
    HssParams p{5, 1, 2, 2, 3, {2, 2}};
    const HssScheme s = synthesize_eval(rs, p);
    const std::vector<std::vector<Code>> x{{1, 2, 3}, {4, 0, 2}};
    const auto res = run_end_to_end(s, x, 8);
    CHECK(res.pass);
    CHECK(res.outputs == Vector{4, 4});
}

TEST_CASE("block system S e = g on small schemes") {
    for (const auto& [name, scheme] : fixtures::small_schemes()) {
        CAPTURE(name);
        const auto res = fixtures::verify_block_system(scheme);
        CHECK(res.local);
        CHECK(res.satisfied);
    }
}

TEST_CASE("server evaluation rejects incomplete views") {
    const HssScheme s = fixtures::repetition_scheme();
    RandomStream rng(1);
    auto views = share_inputs(s, {{1}}, rng);
    views[0].secrets[0].clear();
    CHECK(oracle::error_of([&] { eval_server(s, views[0]); }) == ErrorKind::MissingShare);
    views[1].secrets.clear();
    CHECK(oracle::error_of([&] { eval_server(s, views[1]); }) == ErrorKind::MissingShare);
    CHECK(oracle::error_of([&] { reconstruct(s, std::vector<Code>{1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("scheme rate against the replicated-sharing ceiling") {
    const LabeledCode h = hermitian_build(2, 5);
    CHECK(scheme_rate(synthesize_eval(h, fixtures::params_for(h, 1, 2))) == Rational(5, 8));
    const LabeledCode g = goppa_build(4, 2).code;
    CHECK(scheme_rate(synthesize_eval(g, fixtures::params_for(g, 1, 2))) == Rational(8, 16));
}

TEST_CASE("restrictions to s - dt labels have full rank") {
    const LabeledCode h = hermitian_build(2, 5);
    const auto ok = check_restrictions(h, 2);
    CHECK(ok.checked == binomial(8, 2));
    CHECK(ok.deficient == 0);
    const auto bad = check_restrictions(h, 3);
    CHECK(bad.deficient > 0);
    CHECK(bad.first_deficient.size() == 5);
    CHECK(oracle::error_of([&] { check_restrictions(h, 3, 4); }) == ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("privacy audit") {
    const auto r2 = privacy_audit(1, 2, Field::make(2), 1, 1);
    CHECK(r2.entries.size() == 2);
    CHECK(r2.all_equal());
    CHECK(r2.randomness_per_secret == 2);
    const auto r3 = privacy_audit(1, 3, Field::make(2), 1, 1);
    CHECK(r3.entries.size() == 3);
    CHECK(r3.all_equal());
    const auto r4 = privacy_audit(2, 4, Field::make(3), 2, 2);
    CHECK(r4.randomness_per_secret == 243);
    std::set<std::vector<std::size_t>> coalitions;
    for (const auto& e : r4.entries) coalitions.insert(e.coalition);
    CHECK(coalitions.size() == 6);
    CHECK(r4.all_equal());
    CHECK(oracle::error_of([] { privacy_audit(2, 8, Field::make(2), 1, 1); }) == ErrorKind::EnumerationBudgetExceeded);
    CHECK(oracle::error_of([] { privacy_audit(1, 3, Field::make(2), 2, 1); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("deterministic replay from the seed") {
    const auto schemes = fixtures::end_to_end_schemes();
    const auto& s = schemes[2].scheme;
    RandomStream a(5), b(5);
    const auto va = share_inputs(s, random_secrets(s, a), a);
    const auto vb = share_inputs(s, random_secrets(s, b), b);
    for (std::size_t j = 0; j < va.size(); ++j) CHECK(va[j].secrets == vb[j].secrets);
}
