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

#include "lwhss/analysis.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "lwhss/error.hpp"
#include "lwhss/random.hpp"

namespace lwhss {

namespace {

void require_positive_gap(std::uint64_t s, std::uint64_t dt) {
    if (dt == 0) fail(ErrorKind::ParameterOutOfRange, "need d, t >= 1");
    if (s <= dt) fail(ErrorKind::ParameterOutOfRange, "need s > dt, got s=" + std::to_string(s) + " dt=" + std::to_string(dt));
}

double log_base(double x, double b) { return std::log(x) / std::log(b); }

double log2_big(const BigInt& v) {
    if (v <= 0) return -INFINITY;
    const std::size_t msb = boost::multiprecision::msb(v);
    if (msb < 53) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (msb - 52);
    return static_cast<double>(msb - 52) + std::log2(top.convert_to<double>());
}

std::optional<std::uint64_t> exact_cube_root(std::uint64_t s) {
    auto r = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(s))));
    for (std::uint64_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c)
        if (c * c * c == s) return c;
    return std::nullopt;
}

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string format_pct(double v) {
    if (v == std::trunc(v)) return fixed(v, 0);
    return fixed(v, 1);
}

}  // namespace

double round_half_away(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    const double mag = std::floor(std::fabs(x) * scale + 0.5 + kSlack) / scale;
    return std::copysign(mag, x);
}

double truncate_to(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    const double mag = std::floor(std::fabs(x) * scale + kSlack) / scale;
    return mag == 0 ? 0.0 : std::copysign(mag, x);
}

std::int64_t ceil_slack(double x) { return static_cast<std::int64_t>(std::ceil(x - kSlack)); }

ParamRow fikw_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, double base) {
    const std::uint64_t dt = d * t;
    require_positive_gap(s, dt);
    if (!(base > 1)) fail(ErrorKind::ParameterOutOfRange, "log base must exceed 1");
    const double j_real = log_base(static_cast<double>(s), base);
    const double twice = 2 * j_real;
    const double j = std::fabs(twice - std::round(twice)) < kSlack ? std::round(twice) / 2 : std::ceil(j_real);
    ParamRow row;
    row.s = s;
    row.scheme = "fikw";
    row.rate_exact = Rational(static_cast<std::int64_t>(s - dt), static_cast<std::int64_t>(s));
    row.rate = 1.0 - static_cast<double>(dt) / static_cast<double>(s);
    row.rate_printed = truncate_to(row.rate, 2);
    row.amortization = static_cast<double>(s - dt) * j;
    row.amortization_printed = ceil_slack(row.amortization);
    return row;
}

std::uint64_t bw23_amort_lower(std::uint64_t s, std::uint64_t d, std::uint64_t t, double q) {
    const std::uint64_t dt = d * t;
    require_positive_gap(s, dt);
    const double a = log_base(static_cast<double>(s - dt + 1), q);
    const double b = log_base(static_cast<double>(dt + 1), q);
    return (s - dt) * static_cast<std::uint64_t>(ceil_slack(std::max(a, b)));
}

ParamRow hermitian_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, FormulaMode mode) {
    const std::uint64_t dt = d * t;
    require_positive_gap(s, dt);
    ParamRow row;
    row.s = s;
    row.scheme = "hermitian";
    if (mode == FormulaMode::Exact) {
        const auto q = exact_cube_root(s);
        if (!q || prime_power(*q).first == 0)
            fail(ErrorKind::NotACube, std::to_string(s) + " is not the cube of a prime power");
        const std::uint64_t genus = *q * (*q - 1) / 2;
        if (s <= dt + genus) fail(ErrorKind::ParameterOutOfRange, "no positive amortization for s=" + std::to_string(s));
        const std::uint64_t ell = s - dt - genus;
        row.rate_exact = Rational(static_cast<std::int64_t>(ell), static_cast<std::int64_t>(s));
        row.rate = static_cast<double>(ell) / static_cast<double>(s);
        row.amortization = static_cast<double>(ell);
    } else {
        const double sd = static_cast<double>(s);
        const double c1 = std::cbrt(sd);
        const double c2 = c1 * c1;
        row.amortization = sd - static_cast<double>(dt) - (c2 - c1) / 2;
        row.rate = 1.0 - static_cast<double>(dt) / sd - (c1 + 1) / (2 * c2);
    }
    row.rate_printed = round_half_away(row.rate, 2);
    row.amortization_printed = ceil_slack(row.amortization);
    return row;
}

double goppa_u_star(std::uint64_t dt) {
    const double r = static_cast<double>(dt);
    return std::log2(2 * r * r - 4 * r + 2 * (r + 1) * std::sqrt(r * r - 2 * r + 2) + 3);
}

ParamRow goppa_params(std::uint64_t s, std::uint64_t d, std::uint64_t t, FormulaMode mode) {
    const std::uint64_t dt = d * t;
    require_positive_gap(s, dt);
    const double u_star = goppa_u_star(dt);
    ParamRow row;
    row.s = s;
    row.scheme = "goppa";
    if (mode == FormulaMode::Exact) {
        if ((s & (s - 1)) != 0) fail(ErrorKind::ParameterOutOfRange, "s must be a power of two");
        const auto u = static_cast<std::uint64_t>(std::countr_zero(s));
        if (!(static_cast<double>(u) > u_star + kSlack))
            fail(ErrorKind::ConditionViolated, "u=" + std::to_string(u) + " does not exceed " + fixed(u_star, 4));
        if (s <= u * dt) fail(ErrorKind::ConditionViolated, "s - u dt is not positive");
        const std::uint64_t ell = s - u * dt;
        row.rate_exact = Rational(static_cast<std::int64_t>(ell), static_cast<std::int64_t>(s));
        row.rate = static_cast<double>(ell) / static_cast<double>(s);
        row.amortization = static_cast<double>(ell);
    } else {
        const double sd = static_cast<double>(s);
        row.amortization = sd - u_star * static_cast<double>(dt);
        if (row.amortization <= 0) fail(ErrorKind::ParameterOutOfRange, "s too small for u* dt");
        row.rate = 1.0 - u_star * static_cast<double>(dt) / sd;
    }
    row.rate_printed = round_half_away(row.rate, 2);
    row.amortization_printed = ceil_slack(row.amortization);
    return row;
}

double entropy_gen(double q, double w, double x) {
    if (!(q >= 2) || !(w >= 1)) fail(ErrorKind::ParameterOutOfRange, "need q >= 2 and w >= 1");
    if (!(x >= 0 && x <= 1)) fail(ErrorKind::ParameterOutOfRange, "entropy argument outside [0, 1]");
    const double lq = std::log(q);
    double h = x * std::log(std::pow(q, w) - 1) / lq;
    if (x > 0) h -= x * std::log(x) / lq;
    if (x < 1) h -= (1 - x) * std::log1p(-x) / lq;
    return h;
}

std::uint64_t GvConfig::target() const {
    const Rational v = delta * Rational(static_cast<std::int64_t>(s));
    if (v.denominator() != 1) fail(ErrorKind::ParameterOutOfRange, "delta * s must be an integer");
    return static_cast<std::uint64_t>(v.numerator());
}

void GvConfig::validate() const {
    if (prime_power(q).first == 0) fail(ErrorKind::ParameterOutOfRange, "q must be a prime power");
    if (w == 0 || s == 0) fail(ErrorKind::ParameterOutOfRange, "need w, s >= 1");
    target();
    const double d = boost::rational_cast<double>(delta);
    if (d < 0 || d > 1 - std::pow(static_cast<double>(q), -static_cast<double>(w)) + kSlack)
        fail(ErrorKind::ParameterOutOfRange, "delta outside [0, 1 - q^-w]");
    const double h = entropy_gen(static_cast<double>(q), static_cast<double>(w), d);
    if (epsilon < 0 || epsilon > 1 - h / static_cast<double>(w) + kSlack)
        fail(ErrorKind::ParameterOutOfRange, "epsilon outside [0, 1 - H(delta)/w]");
}

std::uint64_t gv_dimension(const GvConfig& cfg) {
    cfg.validate();
    const double n = static_cast<double>(cfg.n());
    const double h = entropy_gen(static_cast<double>(cfg.q), static_cast<double>(cfg.w),
                                 boost::rational_cast<double>(cfg.delta));
    const double k = std::floor(n - static_cast<double>(cfg.s) * h - n * cfg.epsilon + kSlack);
    if (k < 1) fail(ErrorKind::Degenerate, "GV dimension " + fixed(k, 0) + " is below 1");
    return static_cast<std::uint64_t>(k);
}

GvReport gv_monte_carlo(const GvConfig& cfg, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
    if (trials == 0) fail(ErrorKind::ParameterOutOfRange, "need at least one trial");
    GvReport rep;
    rep.k = gv_dimension(cfg);
    rep.n = cfg.n();
    rep.trials = trials;
    const auto [p, e] = prime_power(cfg.q);
    const Field field = Field::make(p, e);
    const Labeling labels = Labeling::balanced(cfg.s, cfg.w);
    const std::uint64_t target = cfg.target();
    const double lq = std::log2(static_cast<double>(cfg.q));

    double total = 1;
    for (std::uint64_t i = 0; i < rep.k; ++i) total *= static_cast<double>(cfg.q);
    if (total > static_cast<double>(budget))
        fail(ErrorKind::EnumerationBudgetExceeded, "q^k codewords per trial exceeds budget " + std::to_string(budget));

    for (std::uint64_t i = 0; i < trials; ++i) {
        RandomStream rng = RandomStream::derive(seed, i);
        Matrix g(field, rep.k, rep.n);
        for (std::size_t r = 0; r < rep.k; ++r)
            for (std::size_t c = 0; c < rep.n; ++c) g(r, c) = rng.element(field);
        if (target > 0 && min_message_labelweight(g, labels, budget) < target) ++rep.failures;
    }
    rep.fraction = static_cast<double>(rep.failures) / static_cast<double>(trials);
    rep.bound = std::pow(static_cast<double>(cfg.q), -cfg.epsilon * static_cast<double>(rep.n));
    rep.threshold = rep.bound + 3 * std::sqrt(rep.bound * (1 - rep.bound) / static_cast<double>(trials));

    rep.ball = target > 0 ? ball_volume(cfg.s, cfg.w, cfg.q, target - 1) : BigInt(0);
    const double lhs = log2_big(rep.ball) - static_cast<double>(rep.n) * lq;
    const double rhs = -(static_cast<double>(rep.k) + cfg.epsilon * static_cast<double>(rep.n)) * lq;
    rep.volume_ok = lhs <= rhs + kSlack;
    rep.pass = rep.volume_ok && rep.fraction <= rep.threshold + kSlack;
    return rep;
}

double percent_rate(double ours, double baseline) {
    const double v = 100.0 * (ours - baseline) / baseline;
    return std::fabs(v) < 2 ? truncate_to(v, 1) : truncate_to(v, 0);
}

double gv_example_amortization(std::uint64_t s, std::uint64_t dt, double q, double epsilon) {
    const double sd = static_cast<double>(s);
    const double lg = log_base(sd, q);
    return (1 - epsilon) * sd * lg - sd * log_base(2, q) - static_cast<double>(dt + 1) * lg;
}

std::vector<std::uint64_t> default_servers(TableKind kind) {
    switch (kind) {
        case TableKind::Hermitian: return {50, 100, 200, 300, 400, 500, 1000};
        case TableKind::Goppa: return {64, 128, 256, 512, 1024, 2048};
        case TableKind::GvExample: return {64, 128, 256, 512, 1024, 2048};
    }
    return {};
}

Table emit_table(TableKind kind, std::uint64_t dt, const std::vector<std::uint64_t>& servers, double epsilon) {
    Table table{kind, dt, {}};
    for (std::uint64_t s : servers) {
        TableRow row;
        row.s = s;
        switch (kind) {
            case TableKind::Hermitian:
                row.baseline = fikw_params(s, 1, dt, std::pow(static_cast<double>(s), 2.0 / 3.0));
                row.ours = hermitian_params(s, 1, dt);
                break;
            case TableKind::Goppa:
                row.baseline = fikw_params(s, 1, dt, 2);
                row.ours = goppa_params(s, 1, dt);
                break;
            case TableKind::GvExample: {
                row.baseline = fikw_params(s, 1, dt, 2);
                ParamRow ours;
                ours.s = s;
                ours.scheme = "random-code";
                ours.amortization = gv_example_amortization(s, dt, 2, epsilon);
                ours.amortization_printed = ceil_slack(ours.amortization);
                ours.rate = 1 - static_cast<double>(dt + 1) / static_cast<double>(s) - epsilon;
                ours.rate_printed = round_half_away(ours.rate, 2);
                row.ours = ours;
                break;
            }
        }
        row.pct_rate = percent_rate(row.ours.rate, row.baseline.rate);
        row.pct_amort = static_cast<std::int64_t>(round_half_away(
            100.0 * static_cast<double>(row.ours.amortization_printed - row.baseline.amortization_printed) /
                static_cast<double>(row.baseline.amortization_printed),
            0));
        table.rows.push_back(row);
    }
    return table;
}

std::string Table::render(TableFormat format) const {
    std::ostringstream os;
    const char* ours_name = kind == TableKind::Hermitian ? "Hermitian" : kind == TableKind::Goppa ? "Goppa" : "Random code";
    switch (format) {
        case TableFormat::Csv:
            os << "s,baseline_rate,baseline_amort,ours_rate,ours_amort,pct_rate,pct_amort\n";
            for (const auto& r : rows)
                os << r.s << ',' << fixed(r.baseline.rate_printed, 2) << ',' << r.baseline.amortization_printed << ','
                   << fixed(r.ours.rate_printed, 2) << ',' << r.ours.amortization_printed << ',' << format_pct(r.pct_rate)
                   << ',' << r.pct_amort << '\n';
            break;
        case TableFormat::Markdown:
            os << "| Servers | Baseline DL rate | Baseline amortization | " << ours_name << " DL rate | " << ours_name
               << " amortization | DL rate % | Amortization % |\n";
            os << "|---:|---:|---:|---:|---:|---:|---:|\n";
            for (const auto& r : rows)
                os << "| " << r.s << " | " << fixed(r.baseline.rate_printed, 2) << " | " << r.baseline.amortization_printed
                   << " | " << fixed(r.ours.rate_printed, 2) << " | " << r.ours.amortization_printed << " | "
                   << format_pct(r.pct_rate) << "% | " << r.pct_amort << "% |\n";
            break;
        case TableFormat::Text:
            os << std::left << std::setw(8) << "s" << std::setw(12) << "base_rate" << std::setw(12) << "base_amort"
               << std::setw(12) << "ours_rate" << std::setw(12) << "ours_amort" << std::setw(10) << "pct_rate"
               << "pct_amort\n";
            for (const auto& r : rows)
                os << std::left << std::setw(8) << r.s << std::setw(12) << fixed(r.baseline.rate_printed, 2)
                   << std::setw(12) << r.baseline.amortization_printed << std::setw(12) << fixed(r.ours.rate_printed, 2)
                   << std::setw(12) << r.ours.amortization_printed << std::setw(10) << format_pct(r.pct_rate)
                   << r.pct_amort << '\n';
            break;
    }
    return os.str();
}

}  // namespace lwhss
