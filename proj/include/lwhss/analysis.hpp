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

/**
 * @file analysis.hpp
 * @brief Closed-form rate and amortization formulas, the labelweight GV machinery, and table output.
 *
 * Real-valued quantities are doubles compared with kSlack absolute slack. Counts stay integral.
 */

#ifndef LWHSS_ANALYSIS_HPP
#define LWHSS_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lwhss/codes.hpp"

namespace lwhss {

inline constexpr double kSlack = 1e-9;

/// Round half away from zero to `digits` decimals.
double round_half_away(double x, int digits);
/// Truncate toward zero to `digits` decimals, tolerating representation error of kSlack.
double truncate_to(double x, int digits);
/// Ceiling that treats values within kSlack of an integer as that integer.
std::int64_t ceil_slack(double x);

struct ParamRow {
    std::uint64_t s = 0;
    std::string scheme;
    double rate = 0;                    ///< exact real value
    std::optional<Rational> rate_exact; ///< when the construction is an actual integral instance
    double rate_printed = 0;            ///< two decimals, per the family's printing convention
    double amortization = 0;            ///< exact real value
    std::int64_t amortization_printed = 0;
};

/// Baseline replicated-sharing scheme: rate 1 - dt/s, l = (s - dt) j with j = log_b(s) when that is
/// an integer or half-integer, ceil(log_b(s)) otherwise. Printed rate is truncated.
ParamRow fikw_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, double base);

/// (s - dt) * ceil(max(log_q(s - dt + 1), log_q(dt + 1))).
std::uint64_t bw23_amort_lower(std::uint64_t s, std::uint64_t d, std::uint64_t t, double q);

enum class FormulaMode { Table, Exact };

/// Hermitian family. Table mode accepts any real s; exact mode needs s = q^3 for a prime power q.
ParamRow hermitian_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, FormulaMode mode = FormulaMode::Table);

/// log2(2r^2 - 4r + 2(r+1) sqrt(r^2 - 2r + 2) + 3) for r = dt.
double goppa_u_star(std::uint64_t dt);

/// Goppa family. Table mode uses the real u*; exact mode uses u = log2(s) and requires u > u*.
ParamRow goppa_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, FormulaMode mode = FormulaMode::Table);

/// H_{q,w}(x) = x log_q(q^w - 1) - x log_q x - (1 - x) log_q(1 - x), with limits at the endpoints.
double entropy_gen(double q, double w, double x);

struct GvConfig {
    std::uint64_t q = 2;
    std::uint64_t w = 1;
    std::uint64_t s = 1;
    Rational delta{0};  ///< relative labelweight; delta * s must be integral
    double epsilon = 0;

    std::uint64_t n() const { return s * w; }
    std::uint64_t target() const;  ///< delta * s
    void validate() const;
};

/// floor(n - s H_{q,w}(delta) - n eps); Degenerate when below 1.
std::uint64_t gv_dimension(const GvConfig& cfg);

struct GvReport {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;  ///< sampled generators whose labelweight is below delta*s
    double fraction = 0;
    double bound = 0;            ///< q^(-eps n)
    double threshold = 0;        ///< bound plus three binomial standard deviations
    BigInt ball;                 ///< labelweight ball of radius delta*s - 1
    bool volume_ok = false;      ///< ball / q^n <= q^(-k - eps n)
    bool pass = false;
};

/// Monte Carlo over uniform k x n generators with the balanced labeling; trial i uses derive(seed, i).
GvReport gv_monte_carlo(const GvConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                        std::uint64_t budget = kLabelweightBudget);

enum class TableKind { Hermitian, Goppa, GvExample };
enum class TableFormat { Csv, Markdown, Text };

struct TableRow {
    std::uint64_t s = 0;
    ParamRow baseline;
    ParamRow ours;
    double pct_rate = 0;
    std::int64_t pct_amort = 0;
};

struct Table {
    TableKind kind;
    std::uint64_t dt;
    std::vector<TableRow> rows;
    std::string render(TableFormat format) const;
};

/// Rate difference in percent as printed: truncated, one decimal below 2 in magnitude.
double percent_rate(double ours, double baseline);

/// Rows for the given server counts. GvExample uses q = 2, w = ceil(log2 s) and `epsilon`.
Table emit_table(TableKind kind, std::uint64_t dt, const std::vector<std::uint64_t>& servers, double epsilon = 0.01);

/// Lower bound (1 - eps) s log_q s - s log_q 2 - (dt + 1) log_q s on the random-code amortization.
double gv_example_amortization(std::uint64_t s, std::uint64_t dt, double q, double epsilon);

std::vector<std::uint64_t> default_servers(TableKind kind);

}  // namespace lwhss

#endif  // LWHSS_ANALYSIS_HPP
