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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lwhss/analysis.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace lwhss;

namespace {

double binary_entropy_q(double q, double x) {
    if (x == 0) return 0;
    if (x == 1) return std::log(q - 1) / std::log(q);
    return (x * std::log(q - 1) - x * std::log(x) - (1 - x) * std::log(1 - x)) / std::log(q);
}

}  // namespace

TEST_CASE("rounding helpers") {
    CHECK(round_half_away(0.745, 2) == doctest::Approx(0.75));
    CHECK(round_half_away(-0.125, 2) == doctest::Approx(-0.13));
    CHECK(round_half_away(0.7473, 2) == doctest::Approx(0.75));
    CHECK(truncate_to(0.9375, 2) == doctest::Approx(0.93));
    CHECK(truncate_to(0.92, 2) == doctest::Approx(0.92));
    CHECK(truncate_to(-1.828, 1) == doctest::Approx(-1.8));
    CHECK(ceil_slack(41.06) == 42);
    CHECK(ceil_slack(144.0000000001) == 144);
}

TEST_CASE("baseline parameters") {
    const ParamRow r64 = fikw_params(64, 1, 4, 2);
    CHECK(r64.amortization_printed == 360);
    CHECK(r64.rate_printed == doctest::Approx(0.93));
    CHECK(*r64.rate_exact == Rational(15, 16));
    const ParamRow r1000 = fikw_params(1000, 1, 4, 100);
    CHECK(r1000.amortization_printed == 1494);
    const ParamRow edge = fikw_params(5, 1, 4, 2);
    CHECK(edge.amortization_printed == 3);  // ceil(log2 5) * 1
    CHECK(edge.rate == doctest::Approx(0.2));
    CHECK(fikw_params(100, 2, 2, 2).amortization_printed == 96 * 7);
    CHECK(oracle::error_of([] { fikw_params(4, 2, 2, 2); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("lower bound on baseline amortization") {
    CHECK(bw23_amort_lower(64, 1, 4, 2) == 360);
    CHECK(bw23_amort_lower(8, 2, 2, 2) == 4 * 3);  // both logs are log2(5)
    CHECK(bw23_amort_lower(20, 1, 4, 64) == 16);
}

TEST_CASE("Hermitian parameters") {
    const ParamRow t1000 = hermitian_params(1000, 2, 2);
    CHECK(t1000.amortization_printed == 951);
    CHECK(t1000.rate_printed == doctest::Approx(0.94));
    const ParamRow t50 = hermitian_params(50, 2, 2);
    CHECK(t50.amortization == doctest::Approx(41.06).epsilon(1e-3));
    CHECK(t50.amortization_printed == 42);
    CHECK(t50.rate_printed == doctest::Approx(0.75));
    const ParamRow exact = hermitian_params(8, 2, 1, FormulaMode::Exact);
    CHECK(exact.amortization_printed == 5);
    CHECK(*exact.rate_exact == Rational(5, 8));
    CHECK(exact.rate <= 6.0 / 8.0);
    CHECK(hermitian_params(27, 1, 4, FormulaMode::Exact).amortization_printed == 20);
    CHECK(oracle::error_of([] { hermitian_params(50, 2, 2, FormulaMode::Exact); }) == ErrorKind::NotACube);
    CHECK(oracle::error_of([] { hermitian_params(216, 2, 2, FormulaMode::Exact); }) == ErrorKind::NotACube);
}

TEST_CASE("Goppa parameters") {
    CHECK(goppa_u_star(4) == doctest::Approx(std::log2(50.6228)).epsilon(1e-5));
    const ParamRow t64 = goppa_params(64, 1, 4);
    CHECK(t64.amortization_printed == 42);
    CHECK(t64.rate_printed == doctest::Approx(0.65));
    CHECK(goppa_params(2048, 2, 2).amortization_printed == 2026);
    const ParamRow e64 = goppa_params(64, 1, 4, FormulaMode::Exact);
    CHECK(*e64.rate_exact == Rational(5, 8));
    CHECK(e64.amortization_printed == 40);
    CHECK(oracle::error_of([] { goppa_params(32, 1, 4, FormulaMode::Exact); }) == ErrorKind::ConditionViolated);
    CHECK(oracle::error_of([] { goppa_params(48, 1, 4, FormulaMode::Exact); }) == ErrorKind::ParameterOutOfRange);
    // Every exact row stays under the replicated-sharing ceiling.
    for (std::uint64_t s : {64u, 128u, 256u, 1024u}) CHECK(goppa_params(s, 1, 4, FormulaMode::Exact).rate <= 1 - 4.0 / s);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        CHECK(hermitian_params(q * q * q, 1, 2, FormulaMode::Exact).rate <= 1 - 2.0 / (q * q * q));
}

TEST_CASE("printed tables are reproduced") {
    const Table goppa = emit_table(TableKind::Goppa, 4, default_servers(TableKind::Goppa));
    REQUIRE(goppa.rows.size() == reference::kGoppa.size());
    for (std::size_t i = 0; i < goppa.rows.size(); ++i) {
        const auto& got = goppa.rows[i];
        const auto& want = reference::kGoppa[i];
        CAPTURE(want.s);
        CHECK(got.baseline.rate_printed == doctest::Approx(want.baseline_rate));
        CHECK(got.baseline.amortization_printed == want.baseline_amort);
        CHECK(got.ours.rate_printed == doctest::Approx(want.ours_rate));
        CHECK(got.ours.amortization_printed == want.ours_amort);
        CHECK(got.pct_rate == doctest::Approx(want.pct_rate));
        CHECK(got.pct_amort == want.pct_amort);
    }
    const Table herm = emit_table(TableKind::Hermitian, 4, default_servers(TableKind::Hermitian));
    REQUIRE(herm.rows.size() == reference::kHermitian.size());
    for (std::size_t i = 0; i < herm.rows.size(); ++i) {
        const auto& got = herm.rows[i];
        const auto& want = reference::kHermitian[i];
        CAPTURE(want.s);
        CHECK(got.baseline.rate_printed == doctest::Approx(want.baseline_rate));
        if (want.s == reference::kHermitianToleranceRow)
            CHECK(std::abs(got.baseline.amortization_printed - want.baseline_amort) <= 1);
        else
            CHECK(got.baseline.amortization_printed == want.baseline_amort);
        CHECK(got.ours.rate_printed == doctest::Approx(want.ours_rate));
        CHECK(got.ours.amortization_printed == want.ours_amort);
        CHECK(got.pct_rate == doctest::Approx(want.pct_rate));
    }
}

TEST_CASE("table rendering") {
    const Table t = emit_table(TableKind::Goppa, 4, {64, 1024});
    CHECK(t.render(TableFormat::Csv) ==
          "s,baseline_rate,baseline_amort,ours_rate,ours_amort,pct_rate,pct_amort\n"
          "64,0.93,360,0.65,42,-31,-88\n"
          "1024,0.99,10200,0.98,1002,-1.8,-90\n");
    const std::string md = t.render(TableFormat::Markdown);
    CHECK(md.find("| 64 | 0.93 | 360 | 0.65 | 42 | -31% | -88% |") != std::string::npos);
    CHECK(t.render(TableFormat::Text).find("1002") != std::string::npos);
    const Table gv = emit_table(TableKind::GvExample, 4, {64});
    CHECK(gv.rows[0].ours.amortization_printed == ceil_slack(gv_example_amortization(64, 4, 2, 0.01)));
}

TEST_CASE("generalized entropy") {
    CHECK(entropy_gen(2, 1, 0.5) == doctest::Approx(1.0));
    CHECK(entropy_gen(3, 2, 0) == 0);
    CHECK(entropy_gen(2, 3, 1) == doctest::Approx(std::log2(7.0)));
    for (double q : {2.0, 3.0, 5.0})
        for (int i = 0; i <= 19; ++i) {
            const double x = i / 19.0;
            CHECK(entropy_gen(q, 1, x) == doctest::Approx(binary_entropy_q(q, x)).epsilon(1e-12));
        }
    CHECK(oracle::error_of([] { entropy_gen(2, 1, 1.5); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("entropy observations on a grid") {
    for (double q : {2.0, 3.0})
        for (double w : {1.0, 2.0, 4.0}) {
            const double top = 1 - std::pow(q, -w);
            for (int i = 0; i < 50; ++i) {
                const double x = top * i / 49.0;
                const double h = entropy_gen(q, w, x);
                CHECK(x <= h / w + 1e-12);
                CHECK(h / w <= x + std::log(2) / std::log(q) / w + 1e-12);
                if (x > 0 && x < 1) {
                    const double s = 10;
                    const double lhs = std::pow(q, -s * h);
                    const double rhs = std::pow(1 - x, (1 - x) * s) * std::pow(x / (std::pow(q, w) - 1), x * s);
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
                    CHECK(x / ((1 - x) * (std::pow(q, w) - 1)) <= 1 + 1e-12);
                }
            }
        }
}

TEST_CASE("ball volume is bounded by the entropy exponent") {
    for (std::uint64_t q : {2u, 3u})
        for (std::uint64_t w : {1u, 2u, 4u}) {
            const std::uint64_t s = 10;
            for (std::uint64_t r = 0; r <= s; ++r) {
                const double p = static_cast<double>(r) / s;
                if (p > 1 - std::pow(static_cast<double>(q), -static_cast<double>(w))) continue;
                const double bound = std::pow(static_cast<double>(q), s * entropy_gen(q, w, p));
                CHECK(ball_volume(s, w, q, r) <= BigInt(std::ceil(bound * (1 + 1e-12))));
            }
        }
}

TEST_CASE("GV dimension") {
    GvConfig none{2, 2, 8, Rational(0), 0};
    CHECK(gv_dimension(none) == 16);
    GvConfig c2{2, 2, 8, Rational(3, 8), 0.05};
    const double h = entropy_gen(2, 2, 0.375);
    CHECK(gv_dimension(c2) == static_cast<std::uint64_t>(std::floor(16 - 8 * h - 0.8)));
    CHECK(gv_dimension(c2) == 2);
    GvConfig c1{2, 2, 6, Rational(1, 3), 0.1};
    CHECK(gv_dimension(c1) == 2);
    GvConfig bad{2, 1, 4, Rational(1, 3), 0};
    CHECK(oracle::error_of([&] { gv_dimension(bad); }) == ErrorKind::ParameterOutOfRange);
    GvConfig degenerate{2, 1, 4, Rational(1, 2), 0};
    CHECK(oracle::error_of([&] { gv_dimension(degenerate); }) == ErrorKind::Degenerate);
}

TEST_CASE("GV example amortization bound") {
    // w = log2(64) = 6, delta = 5/64: the GV dimension dominates the closed-form lower bound.
    const double eps = 0.01;
    GvConfig cfg{2, 6, 64, Rational(5, 64), eps};
    const double closed = (1 - eps) * 64 * 6 - 64 - 5 * 6;
    CHECK(gv_example_amortization(64, 4, 2, eps) == doctest::Approx(closed));
    CHECK(static_cast<double>(gv_dimension(cfg)) >= std::floor(closed));
}

TEST_CASE("GV Monte Carlo") {
    GvConfig c1{2, 2, 6, Rational(1, 3), 0.1};
    const GvReport r1 = gv_monte_carlo(c1, 500, 7);
    CHECK(r1.k == 2);
    CHECK(r1.volume_ok);
    CHECK(r1.pass);
    CHECK(r1.fraction <= r1.threshold);
    // Results do not depend on how trials are grouped.
    const GvReport again = gv_monte_carlo(c1, 500, 7);
    CHECK(again.failures == r1.failures);
    GvConfig one{2, 2, 6, Rational(1, 6), 0.0};
    const GvReport r0 = gv_monte_carlo(one, 50, 1);
    CHECK(r0.failures <= 50);
    GvConfig trivial{2, 2, 6, Rational(0), 0.1};
    CHECK(oracle::error_of([&] { gv_monte_carlo(trivial, 10, 1, 512); }) == ErrorKind::EnumerationBudgetExceeded);
}
