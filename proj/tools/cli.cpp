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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "lwhss/analysis.hpp"
#include "lwhss/error.hpp"
#include "lwhss/io.hpp"
#include "lwhss/protocol.hpp"

namespace lwhss::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::uint64_t seed = 0;
    std::string format;
    std::string out_path;
};

struct FamilyOptions {
    std::string family = "goppa";
    unsigned u = 3;
    std::size_t r = 1;
    std::uint32_t q = 2;
    std::size_t k = 5;
    std::size_t n = 0;
    std::string in_path;
};

struct SchemeOptions {
    std::size_t t = 1;
    std::size_t d = 1;
    std::size_t m = 0;
    std::string scheme_path;
};

std::uint64_t budget_or(std::uint64_t fallback) {
    const char* env = std::getenv("HSS_ENUM_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
        throw UsageError("HSS_ENUM_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_common(CLI::App* app, CommonOptions& c) {
    app->add_option("--seed", c.seed, "Seed for all randomness")->capture_default_str();
    app->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown", "text"}));
    app->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

void add_family(CLI::App* app, FamilyOptions& f) {
    app->add_option("--code", f.family, "Code family")
        ->check(CLI::IsMember({"goppa", "hermitian", "rs"}))
        ->capture_default_str();
    app->add_option("--u", f.u, "Goppa extension degree (field GF(2^u))")->capture_default_str();
    app->add_option("--r", f.r, "Goppa polynomial degree")->capture_default_str();
    app->add_option("--q", f.q, "Hermitian q, or Reed-Solomon field size")->capture_default_str();
    app->add_option("--k", f.k, "Hermitian or Reed-Solomon dimension")->capture_default_str();
    app->add_option("--n", f.n, "Reed-Solomon length (defaults to q)");
    app->add_option("--in", f.in_path, "Read the code from a labelweight-code/v1 document");
}

void add_scheme(CLI::App* app, SchemeOptions& s) {
    app->add_option("--t", s.t, "Privacy threshold")->capture_default_str();
    app->add_option("--d", s.d, "Degree of the evaluated monomial")->capture_default_str();
    app->add_option("--m", s.m, "Variables per instance (defaults to d)");
    app->add_option("--scheme", s.scheme_path, "Read the scheme from a labelweight-hss-scheme/v1 document");
}

std::pair<LabeledCode, std::string> build_code(const FamilyOptions& f) {
    if (!f.in_path.empty()) return {read_code(read_file(f.in_path)), "file " + f.in_path};
    if (f.family == "goppa") {
        auto gc = goppa_build(f.u, f.r);
        return {std::move(gc.code), "goppa u=" + std::to_string(f.u) + " r=" + std::to_string(f.r) +
                                        " g=" + gc.polynomial.to_string()};
    }
    if (f.family == "hermitian")
        return {hermitian_build(f.q, f.k), "hermitian q=" + std::to_string(f.q) + " k=" + std::to_string(f.k)};
    const std::size_t n = f.n == 0 ? f.q : f.n;
    return {rs_build(f.q, n, f.k),
            "reed-solomon q=" + std::to_string(f.q) + " [" + std::to_string(n) + "," + std::to_string(f.k) + "]"};
}

std::pair<HssScheme, std::string> build_scheme(const FamilyOptions& f, const SchemeOptions& so) {
    if (!so.scheme_path.empty()) return {read_scheme(read_file(so.scheme_path)), "file " + so.scheme_path};
    auto [code, label] = build_code(f);
    HssParams p{code.servers(), so.t, so.d, code.dimension(), so.m == 0 ? so.d : so.m, {}};
    SynthesisOptions opt;
    opt.monomial_budget = budget_or(kMonomialBudget);
    opt.labelweight_budget = budget_or(kLabelweightBudget);
    return {synthesize_eval(code, p, opt), label};
}

std::string rational_str(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void describe_scheme(std::ostream& os, const HssScheme& s, const std::string& label) {
    const auto& p = s.params();
    os << "scheme: " << label << '\n';
    os << "field: " << s.field().to_string() << '\n';
    os << "n=" << s.code().length() << " l=" << p.instances << " s=" << p.servers << " t=" << p.threshold
       << " d=" << p.degree << " m=" << p.variables << '\n';
    os << "labelweight: ";
    if (s.labelweight_status() == LabelweightStatus::Verified && s.min_labelweight())
        os << *s.min_labelweight() << " (verified)\n";
    else
        os << "asserted by construction\n";
    os << "rate: " << rational_str(scheme_rate(s)) << '\n';
}

TableFormat table_format(const std::string& f) {
    if (f == "csv") return TableFormat::Csv;
    if (f == "markdown") return TableFormat::Markdown;
    return TableFormat::Text;
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    auto num = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw UsageError("--delta expects a fraction like 1/3, got '" + text + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(num(text));
    const std::int64_t den = num(std::string_view(text).substr(slash + 1));
    if (den == 0) throw UsageError("--delta has a zero denominator");
    return Rational(num(std::string_view(text).substr(0, slash)), den);
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DecodeError:
        case ErrorKind::MissingShare:
            return kExitVerificationFailed;
        default:
            return kExitUsage;
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear homomorphic secret sharing from labelweight codes", "hss"};
    app.require_subcommand(1);

    CommonOptions common;
    FamilyOptions family;
    SchemeOptions scheme_opts;
    std::uint64_t trials = 200;
    std::uint64_t dt = 4;
    std::vector<std::uint64_t> servers;
    double epsilon = 0.01;

    // table
    auto* table = app.add_subcommand("table", "Print a rate and amortization comparison table");
    std::string table_kind;
    table->add_option("kind", table_kind, "hermitian, goppa or gv-example")
        ->required()
        ->check(CLI::IsMember({"hermitian", "goppa", "gv-example"}));
    table->add_option("--dt", dt, "Product d*t")->capture_default_str();
    table->add_option("--servers", servers, "Comma-separated server counts")->delimiter(',');
    table->add_option("--epsilon", epsilon, "Slack for the gv-example rows")->capture_default_str();
    add_common(table, common);

    // code
    auto* code = app.add_subcommand("code", "Build, describe or measure a labeled code");
    std::string code_action;
    code->add_option("action", code_action, "build, info or labelweight")
        ->required()
        ->check(CLI::IsMember({"build", "info", "labelweight"}));
    add_family(code, family);
    add_common(code, common);

    // demo
    auto* demo = app.add_subcommand("demo", "Run seeded end-to-end trials of a synthesized scheme");
    add_family(demo, family);
    add_scheme(demo, scheme_opts);
    demo->add_option("--trials", trials, "Number of trials")->capture_default_str();
    std::string save_scheme;
    demo->add_option("--save-scheme", save_scheme, "Also write the scheme document to this path");
    add_common(demo, common);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run the message-passing protocol once");
    add_family(sim, family);
    add_scheme(sim, scheme_opts);
    std::string dump_path;
    std::string replay_path;
    bool parallel = false;
    sim->add_option("--dump-transcript", dump_path, "Write the hex transcript to this path");
    sim->add_option("--replay", replay_path, "Summarize a previously dumped transcript instead of running");
    sim->add_flag("--parallel", parallel, "Evaluate servers on separate threads");
    add_common(sim, common);

    // audit-privacy
    auto* audit = app.add_subcommand("audit-privacy", "Exhaustively compare coalition views of CNF shares");
    std::size_t audit_s = 3;
    std::size_t audit_t = 1;
    std::uint32_t audit_q = 2;
    std::size_t audit_d = 1;
    std::size_t audit_m = 0;
    audit->add_option("--s", audit_s, "Servers")->capture_default_str();
    audit->add_option("--t", audit_t, "Coalition size")->capture_default_str();
    audit->add_option("--q", audit_q, "Field size")->capture_default_str();
    audit->add_option("--d", audit_d, "Degree")->capture_default_str();
    audit->add_option("--m", audit_m, "Variables (defaults to d)");
    add_common(audit, common);

    // gv-sim
    auto* gv = app.add_subcommand("gv-sim", "Monte Carlo check of the labelweight GV bound");
    std::uint64_t gv_q = 2, gv_w = 2, gv_s = 6;
    std::string gv_delta = "1/3";
    double gv_eps = 0.1;
    gv->add_option("--q", gv_q, "Field size")->capture_default_str();
    gv->add_option("--w", gv_w, "Coordinates per server")->capture_default_str();
    gv->add_option("--s", gv_s, "Servers")->capture_default_str();
    gv->add_option("--delta", gv_delta, "Relative labelweight as a fraction")->capture_default_str();
    gv->add_option("--epsilon", gv_eps, "Slack")->capture_default_str();
    gv->add_option("--trials", trials, "Number of trials")->capture_default_str();
    add_common(gv, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (common.format.empty()) common.format = *table ? "csv" : "text";

    std::ostringstream buf;
    int status = kExitOk;
    try {
        if (*table) {
            const TableKind kind = table_kind == "hermitian" ? TableKind::Hermitian
                                   : table_kind == "goppa"   ? TableKind::Goppa
                                                             : TableKind::GvExample;
            if (servers.empty()) servers = default_servers(kind);
            buf << emit_table(kind, dt, servers, epsilon).render(table_format(common.format));
        } else if (*code) {
            const auto [c, label] = build_code(family);
            if (code_action == "build") {
                buf << write_code(c);
            } else if (code_action == "info") {
                buf << "code: " << label << '\n';
                buf << "field: " << c.field().to_string() << '\n';
                buf << "n=" << c.length() << " k=" << c.dimension() << " s=" << c.servers() << '\n';
                buf << "rate: " << rational_str(c.rate()) << '\n';
                const std::uint64_t budget = budget_or(kLabelweightBudget);
                if (codeword_count(c) <= budget)
                    buf << "min labelweight: " << min_labelweight(c, budget) << '\n';
                else
                    buf << "min labelweight: not enumerated (q^k above budget " << budget << ")\n";
            } else {
                buf << min_labelweight(c, budget_or(kLabelweightBudget)) << '\n';
            }
        } else if (*demo) {
            const auto [s, label] = build_scheme(family, scheme_opts);
            describe_scheme(buf, s, label);
            RandomStream rng(common.seed);
            std::uint64_t correct = 0;
            for (std::uint64_t i = 0; i < trials; ++i) {
                const auto secrets = random_secrets(s, rng);
                if (run_end_to_end(s, secrets, rng.next()).pass) ++correct;
            }
            buf << correct << '/' << trials << " correct\n";
            if (correct != trials) status = kExitVerificationFailed;
            if (!save_scheme.empty()) {
                std::ofstream f(save_scheme, std::ios::binary);
                if (!f) throw UsageError("cannot write " + save_scheme);
                f << write_scheme(s);
            }
        } else if (*sim) {
            if (!replay_path.empty()) {
                const Transcript t = Transcript::parse(read_file(replay_path));
                buf << "frames: " << t.frames.size() << '\n';
                for (const auto& [link, bytes] : t.link_bytes)
                    buf << "link " << link.first << "->" << link.second << ": " << bytes << " bytes\n";
                buf << "download: " << t.download_symbols << " symbols, " << t.download_bits() << " bits\n";
                buf << "measured rate: " << rational_str(t.measured_rate()) << '\n';
            } else {
                const auto [s, label] = build_scheme(family, scheme_opts);
                describe_scheme(buf, s, label);
                RandomStream rng(common.seed);
                const auto secrets = random_secrets(s, rng);
                SimulationOptions opt;
                opt.parallel = parallel;
                const auto res = simulate(s, secrets, common.seed, opt);
                const auto mono = run_end_to_end(s, secrets, common.seed);
                buf << "frames: " << res.transcript.frames.size() << '\n';
                buf << "download: " << res.transcript.download_symbols << " symbols, " << res.transcript.download_bits()
                    << " bits\n";
                buf << "measured rate: " << rational_str(res.transcript.measured_rate()) << '\n';
                buf << "outputs:";
                for (Code c : res.outputs) buf << ' ' << c;
                buf << '\n';
                const bool agree = res.pass && res.outputs == mono.outputs;
                buf << (agree ? "protocol output matches direct evaluation\n" : "MISMATCH against direct evaluation\n");
                if (!agree) status = kExitVerificationFailed;
                if (!dump_path.empty()) {
                    std::ofstream f(dump_path, std::ios::binary);
                    if (!f) throw UsageError("cannot write " + dump_path);
                    f << res.transcript.dump();
                }
            }
        } else if (*audit) {
            const auto pp = prime_power(audit_q);
            if (pp.first == 0) throw UsageError("--q must be a prime power");
            const Field f = Field::make(pp.first, pp.second);
            const auto rep = privacy_audit(audit_t, audit_s, f, audit_d, audit_m == 0 ? audit_d : audit_m,
                                           budget_or(kPrivacyBudget));
            if (common.format == "csv") {
                buf << "coalition,secret_a,secret_b,equal\n";
                for (const auto& e : rep.entries) {
                    std::ostringstream co;
                    for (std::size_t i = 0; i < e.coalition.size(); ++i) co << (i ? " " : "") << e.coalition[i];
                    buf << co.str() << ',' << e.secret_a << ',' << e.secret_b << ',' << (e.equal ? 1 : 0) << '\n';
                }
            } else {
                std::size_t equal = 0;
                for (const auto& e : rep.entries) equal += e.equal;
                buf << "randomness per secret: " << rep.randomness_per_secret << '\n';
                buf << "comparisons: " << rep.entries.size() << ", equal: " << equal << '\n';
                buf << (rep.all_equal() ? "all coalition views identically distributed\n"
                                        : "PRIVACY VIOLATION detected\n");
            }
            if (!rep.all_equal()) status = kExitVerificationFailed;
        } else if (*gv) {
            GvConfig cfg{gv_q, gv_w, gv_s, parse_fraction(gv_delta), gv_eps};
            const auto rep = gv_monte_carlo(cfg, trials, common.seed, budget_or(kLabelweightBudget));
            buf << std::setprecision(6);
            buf << "n=" << rep.n << " k=" << rep.k << " target labelweight=" << cfg.target() << '\n';
            buf << "failures: " << rep.failures << '/' << rep.trials << " (fraction " << rep.fraction << ")\n";
            buf << "bound q^(-eps n): " << rep.bound << ", with three-sigma slack: " << rep.threshold << '\n';
            buf << "ball volume: " << rep.ball << (rep.volume_ok ? " (within bound)\n" : " (EXCEEDS bound)\n");
            buf << (rep.pass ? "PASS\n" : "FAIL\n");
            if (!rep.pass) status = kExitVerificationFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }

    if (common.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(common.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << common.out_path << '\n';
            return kExitUsage;
        }
        f << buf.str();
    }
    return status;
}

}  // namespace lwhss::cli
