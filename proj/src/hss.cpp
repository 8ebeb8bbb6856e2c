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

#include "lwhss/hss.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "lwhss/error.hpp"

namespace lwhss {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kMaxDegree = 16;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::string join(std::span<const std::size_t> xs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << '}';
    return os.str();
}

// Next k-subset of [0, n) in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
        out.push_back(c);
    } while (k > 0 && next_combination(c, n));
    return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

void HssParams::validate() const {
    if (threshold == 0 || degree == 0) fail(ErrorKind::Degenerate, "t and d must both be >= 1");
    if (degree > kMaxDegree) fail(ErrorKind::ParameterOutOfRange, "degree above 16 is not supported");
    if (servers <= degree * threshold)
        fail(ErrorKind::ParameterOutOfRange, "need s > dt, got s=" + std::to_string(servers) +
                                                 " dt=" + std::to_string(degree * threshold));
    if (instances == 0) fail(ErrorKind::ParameterOutOfRange, "amortization l must be >= 1");
    if (variables < degree) fail(ErrorKind::ParameterOutOfRange, "need m >= d");
    if (!selection.empty()) {
        if (selection.size() != degree) fail(ErrorKind::ParameterOutOfRange, "selection must list d variables");
        for (auto v : selection)
            if (v >= variables) fail(ErrorKind::ParameterOutOfRange, "selected variable outside [0, m)");
    }
}

SubsetIndex::SubsetIndex(std::size_t servers, std::size_t size)
    : servers_(servers), size_(size), subsets_(all_combinations(servers, size)), held_(servers) {
    if (size == 0 || size >= servers) fail(ErrorKind::ParameterOutOfRange, "need 1 <= t < s");
    position_.assign(servers * subsets_.size(), -1);
    for (std::size_t idx = 0; idx < subsets_.size(); ++idx) {
        const auto& t = subsets_[idx];
        for (std::size_t j = 0; j < servers; ++j) {
            if (std::binary_search(t.begin(), t.end(), j)) continue;
            position_[j * subsets_.size() + idx] = static_cast<std::ptrdiff_t>(held_[j].size());
            held_[j].push_back(idx);
        }
    }
}

std::optional<std::size_t> SubsetIndex::find(std::span<const std::size_t> sorted_subset) const {
    auto it = std::lower_bound(subsets_.begin(), subsets_.end(), sorted_subset,
                               [](const std::vector<std::size_t>& a, std::span<const std::size_t> b) {
                                   return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                               });
    if (it == subsets_.end() || !std::equal(it->begin(), it->end(), sorted_subset.begin(), sorted_subset.end()))
        return std::nullopt;
    return static_cast<std::size_t>(it - subsets_.begin());
}

ShareBundle cnf_share_with(const Field& field, const SubsetIndex& subsets, Code secret,
                           std::span<const Code> randomness) {
    if (!field.contains(secret)) fail(ErrorKind::ParameterOutOfRange, "secret outside the field");
    const std::size_t count = subsets.count();
    if (randomness.size() != count - 1)
        fail(ErrorKind::DimensionMismatch, "CNF sharing needs C(s,t)-1 = " + std::to_string(count - 1) +
                                               " random elements");
    ShareBundle b{secret, std::vector<Code>(count)};
    Code sum = 0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        if (!field.contains(randomness[i])) fail(ErrorKind::ParameterOutOfRange, "randomness outside the field");
        b.shares[i] = randomness[i];
        sum = field.add(sum, randomness[i]);
    }
    b.shares[count - 1] = field.sub(secret, sum);
    return b;
}

ShareBundle cnf_share(const Field& field, const SubsetIndex& subsets, Code secret, RandomStream& rng) {
    std::vector<Code> r(subsets.count() - 1);
    for (auto& c : r) c = rng.element(field);
    return cnf_share_with(field, subsets, secret, r);
}

std::vector<ShareFragment> distribute(const ShareBundle& bundle, const SubsetIndex& subsets) {
    std::vector<ShareFragment> out(subsets.servers());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j].server = j;
        for (auto idx : subsets.held_by(j)) out[j].values.push_back(bundle.shares[idx]);
    }
    return out;
}

MonomialSpace::MonomialSpace(const HssParams& params, std::uint64_t budget)
    : servers_(params.servers), degree_(params.degree), subsets_(params.servers, params.threshold) {
    params.validate();
    per_instance_ = 1;
    for (std::size_t k = 0; k < degree_; ++k) per_instance_ = saturating_mul(per_instance_, subsets_.count());
    total_ = saturating_mul(per_instance_, params.instances);
    if (total_ > budget)
        fail(ErrorKind::EnumerationBudgetExceeded, "l*C(s,t)^d = " +
                                                       (total_ == kSaturated ? std::string("overflow") : std::to_string(total_)) +
                                                       " monomials exceeds budget " + std::to_string(budget));
}

MonomialId MonomialSpace::at(std::uint64_t index) const {
    MonomialId id;
    id.instance = static_cast<std::size_t>(index / per_instance_);
    std::uint64_t rem = index % per_instance_;
    id.subsets.assign(degree_, 0);
    for (std::size_t k = degree_; k-- > 0;) {
        id.subsets[k] = static_cast<std::size_t>(rem % subsets_.count());
        rem /= subsets_.count();
    }
    return id;
}

std::uint64_t MonomialSpace::index_of(const MonomialId& id) const {
    std::uint64_t idx = 0;
    for (auto s : id.subsets) idx = idx * subsets_.count() + s;
    return id.instance * per_instance_ + idx;
}

std::vector<std::size_t> MonomialSpace::touched_servers(const MonomialId& id) const {
    std::vector<std::size_t> out;
    for (auto s : id.subsets) {
        const auto& t = subsets_.subset(s);
        out.insert(out.end(), t.begin(), t.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> MonomialSpace::able_servers(const MonomialId& id) const {
    const auto touched = touched_servers(id);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < servers_; ++j)
        if (!std::binary_search(touched.begin(), touched.end(), j)) out.push_back(j);
    return out;
}

bool MonomialSpace::computable_by(std::uint64_t index, std::size_t server) const {
    const MonomialId id = at(index);
    return std::all_of(id.subsets.begin(), id.subsets.end(),
                       [&](std::size_t s) { return subsets_.position(server, s) >= 0; });
}

MonomialListing enumerate_monomials(const HssParams& params, std::uint64_t budget) {
    const MonomialSpace space(params, budget);
    MonomialListing out;
    out.per_server.resize(params.servers);
    out.all.reserve(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        out.all.push_back(space.at(i));
        for (std::size_t j = 0; j < params.servers; ++j)
            if (space.computable_by(i, j)) out.per_server[j].push_back(i);
    }
    return out;
}

HssScheme::HssScheme(HssParams params, LabeledCode code, std::vector<std::vector<EvalTerm>> eval,
                     LabelweightStatus status, std::optional<std::size_t> min_labelweight)
    : params_(std::move(params)),
      code_(std::move(code)),
      monomials_(params_, kSaturated),
      eval_(std::move(eval)),
      status_(status),
      min_labelweight_(min_labelweight) {
    if (params_.servers != code_.servers() || params_.instances != code_.dimension())
        fail(ErrorKind::DimensionMismatch, "scheme parameters disagree with the code (need s = #labels, l = dim)");
    if (eval_.size() != code_.length()) fail(ErrorKind::DimensionMismatch, "eval table needs one entry per coordinate");
    for (std::size_t r = 0; r < eval_.size(); ++r)
        for (const auto& term : eval_[r]) {
            if (term.monomial >= monomials_.size()) fail(ErrorKind::ParameterOutOfRange, "eval term monomial out of range");
            if (!code_.field().contains(term.coefficient)) fail(ErrorKind::ParameterOutOfRange, "eval coefficient");
            if (!monomials_.computable_by(term.monomial, code_.labeling()[r]))
                fail(ErrorKind::ParameterOutOfRange, "eval term of coordinate " + std::to_string(r) +
                                                         " uses a share its server does not hold");
        }
}

HssScheme synthesize_eval(const LabeledCode& code, HssParams params, const SynthesisOptions& options) {
    params.validate();
    if (params.servers != code.servers())
        fail(ErrorKind::DimensionMismatch, "s=" + std::to_string(params.servers) + " but the labeling has " +
                                               std::to_string(code.servers()) + " labels");
    if (params.instances != code.dimension())
        fail(ErrorKind::DimensionMismatch, "l=" + std::to_string(params.instances) + " but the code has dimension " +
                                               std::to_string(code.dimension()));
    const std::size_t dt = params.degree * params.threshold;
    const MonomialSpace space(params, options.monomial_budget);

    LabelweightStatus status = LabelweightStatus::AssertedByConstruction;
    std::optional<std::size_t> weight;
    if (options.verify_labelweight && codeword_count(code) <= options.labelweight_budget) {
        weight = min_labelweight(code, options.labelweight_budget);
        if (*weight < dt + 1)
            fail(ErrorKind::InsufficientLabelweight, "minimum labelweight " + std::to_string(*weight) +
                                                         " is below dt+1 = " + std::to_string(dt + 1));
        status = LabelweightStatus::Verified;
    }

    const Matrix& g = code.generator();
    const Labeling& labels = code.labeling();
    const std::size_t ell = code.dimension();
    const std::size_t n = code.length();

    // One solve per distinct union of the T_k; the system depends on the monomial only through it.
    std::map<std::vector<std::size_t>, std::vector<Vector>> solutions;
    auto solve_for = [&](const MonomialId& id) -> const std::vector<Vector>& {
        auto touched = space.touched_servers(id);
        auto it = solutions.find(touched);
        if (it != solutions.end()) return it->second;
        const auto able = space.able_servers(id);
        const Matrix restricted = restrict_columns(g, labels, able);
        std::vector<std::size_t> cols;
        for (std::size_t r = 0; r < n; ++r)
            if (!std::binary_search(touched.begin(), touched.end(), labels[r])) cols.push_back(r);
        std::vector<Vector> per_instance(ell);
        for (std::size_t i = 0; i < ell; ++i) {
            Vector unit(ell, 0);
            unit[i] = 1;
            auto x = solve_particular(restricted, unit);
            if (!x)
                fail(ErrorKind::InsufficientLabelweight, "G restricted to labels " + join(able) +
                                                             " is rank deficient (labelweight below dt+1)");
            Vector scattered(n, 0);
            for (std::size_t c = 0; c < cols.size(); ++c) scattered[cols[c]] = (*x)[c];
            per_instance[i] = std::move(scattered);
        }
        return solutions.emplace(std::move(touched), std::move(per_instance)).first->second;
    };

    std::vector<std::vector<EvalTerm>> eval(n);
    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const MonomialId id = space.at(mi);
        const Vector& e = solve_for(id)[id.instance];
        for (std::size_t r = 0; r < n; ++r)
            if (e[r] != 0) eval[r].push_back({mi, e[r]});
    }
    return HssScheme(std::move(params), code, std::move(eval), status, weight);
}

std::vector<ServerView> share_inputs(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                                     RandomStream& rng) {
    const auto& p = scheme.params();
    if (secrets.size() != p.instances)
        fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(p.instances) + " rows of secrets");
    std::vector<ServerView> views(p.servers);
    for (std::size_t j = 0; j < p.servers; ++j) {
        views[j].server = j;
        views[j].secrets.resize(p.instances * p.variables);
    }
    for (std::size_t i = 0; i < p.instances; ++i) {
        if (secrets[i].size() != p.variables)
            fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(p.variables) + " secrets per instance");
        for (std::size_t k = 0; k < p.variables; ++k) {
            const ShareBundle b = cnf_share(scheme.field(), scheme.subsets(), secrets[i][k], rng);
            for (auto& frag : distribute(b, scheme.subsets()))
                views[frag.server].secrets[i * p.variables + k] = std::move(frag.values);
        }
    }
    return views;
}

Vector eval_server(const HssScheme& scheme, const ServerView& view) {
    const auto& p = scheme.params();
    const auto& subsets = scheme.subsets();
    const Field& f = scheme.field();
    if (view.server >= p.servers) fail(ErrorKind::ParameterOutOfRange, "server index out of range");
    const std::size_t held = subsets.held_by(view.server).size();
    if (view.secrets.size() != p.instances * p.variables)
        fail(ErrorKind::MissingShare, "view of server " + std::to_string(view.server) + " lacks some secrets");
    for (const auto& frag : view.secrets)
        if (frag.size() != held)
            fail(ErrorKind::MissingShare, "server " + std::to_string(view.server) + " view has " +
                                              std::to_string(frag.size()) + " shares for a secret, expected " +
                                              std::to_string(held));

    const auto& space = scheme.monomials();
    const std::size_t count = subsets.count();
    std::array<std::size_t, kMaxDegree> tuple{};
    const auto& coords = scheme.code().labeling().coordinates_of(view.server);
    Vector z;
    z.reserve(coords.size());
    for (auto r : coords) {
        Code acc = 0;
        for (const auto& term : scheme.eval_terms(r)) {
            const std::size_t instance = static_cast<std::size_t>(term.monomial / space.per_instance());
            std::uint64_t rem = term.monomial % space.per_instance();
            for (std::size_t k = p.degree; k-- > 0;) {
                tuple[k] = static_cast<std::size_t>(rem % count);
                rem /= count;
            }
            Code value = term.coefficient;
            for (std::size_t k = 0; k < p.degree && value != 0; ++k) {
                const auto pos = subsets.position(view.server, tuple[k]);
                if (pos < 0) fail(ErrorKind::MissingShare, "eval term needs a share server does not hold");
                const auto& frag = view.secrets[instance * p.variables + p.factor_variable(k)];
                value = f.mul(value, frag[static_cast<std::size_t>(pos)]);
            }
            acc = f.add(acc, value);
        }
        z.push_back(acc);
    }
    return z;
}

Vector OutputShares::assemble(const Labeling& labeling) const {
    if (per_server.size() != labeling.servers())
        fail(ErrorKind::DimensionMismatch, "need output shares from every server");
    Vector z(labeling.length(), 0);
    for (std::size_t j = 0; j < per_server.size(); ++j) {
        const auto& coords = labeling.coordinates_of(j);
        if (per_server[j].size() != coords.size())
            fail(ErrorKind::DimensionMismatch, "server " + std::to_string(j) + " sent the wrong number of symbols");
        for (std::size_t i = 0; i < coords.size(); ++i) z[coords[i]] = per_server[j][i];
    }
    return z;
}

Vector reconstruct(const HssScheme& scheme, std::span<const Code> z) {
    if (z.size() != scheme.code().length())
        fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(scheme.code().length()) + " output symbols");
    return scheme.code().generator().apply(z);
}

Vector expected_outputs(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets) {
    const auto& p = scheme.params();
    const Field& f = scheme.field();
    Vector out(p.instances, 1);
    for (std::size_t i = 0; i < p.instances; ++i)
        for (std::size_t k = 0; k < p.degree; ++k) out[i] = f.mul(out[i], secrets.at(i).at(p.factor_variable(k)));
    return out;
}

EndToEndResult run_end_to_end(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                              std::uint64_t seed) {
    RandomStream rng(seed);
    const auto views = share_inputs(scheme, secrets, rng);
    OutputShares shares;
    for (const auto& v : views) shares.per_server.push_back(eval_server(scheme, v));
    EndToEndResult res;
    res.outputs = reconstruct(scheme, shares.assemble(scheme.code().labeling()));
    res.expected = expected_outputs(scheme, secrets);
    res.pass = res.outputs == res.expected;
    return res;
}

std::vector<std::vector<Code>> random_secrets(const HssScheme& scheme, RandomStream& rng) {
    const auto& p = scheme.params();
    std::vector<std::vector<Code>> x(p.instances, std::vector<Code>(p.variables));
    for (auto& row : x)
        for (auto& v : row) v = rng.element(scheme.field());
    return x;
}

Rational scheme_rate(const HssScheme& scheme) {
    const auto& p = scheme.params();
    const Rational rate = scheme.code().rate();
    const Rational ceiling(static_cast<std::int64_t>(p.servers - p.degree * p.threshold),
                           static_cast<std::int64_t>(p.servers));
    if (rate > ceiling) fail(ErrorKind::ConditionViolated, "rate l/n exceeds (s-dt)/s");
    return rate;
}

RestrictionCheck check_restrictions(const LabeledCode& code, std::size_t dt, std::uint64_t budget) {
    const std::size_t s = code.servers();
    if (dt >= s) fail(ErrorKind::ParameterOutOfRange, "need dt < s");
    if (binomial(s, dt) > budget)
        fail(ErrorKind::EnumerationBudgetExceeded, "C(s, dt) label sets exceed budget " + std::to_string(budget));
    RestrictionCheck out;
    std::vector<std::size_t> lambda(s - dt);
    for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = i;
    do {
        ++out.checked;
        if (rank(restrict_columns(code.generator(), code.labeling(), lambda)) != code.dimension()) {
            if (out.deficient++ == 0) out.first_deficient = lambda;
        }
    } while (next_combination(lambda, s));
    return out;
}

bool PrivacyReport::all_equal() const {
    return std::all_of(entries.begin(), entries.end(), [](const PrivacyEntry& e) { return e.equal; });
}

PrivacyReport privacy_audit(std::size_t t, std::size_t s, const Field& field, std::size_t d, std::size_t m,
                            std::uint64_t budget) {
    if (d == 0 || m < d) fail(ErrorKind::ParameterOutOfRange, "need m >= d >= 1");
    const SubsetIndex subsets(s, t);
    const std::uint64_t q = field.order();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i + 1 < subsets.count(); ++i) space = saturating_mul(space, q);
    if (saturating_mul(space, q) > budget)
        fail(ErrorKind::EnumerationBudgetExceeded, "q^C(s,t) = " + std::to_string(saturating_mul(space, q)) +
                                                       " exceeds budget " + std::to_string(budget));

    const auto coalitions = all_combinations(s, t);
    // counts[coalition][secret] : joint view -> multiplicity
    using Multiset = std::map<std::vector<Code>, std::uint64_t>;
    std::vector<std::vector<Multiset>> counts(coalitions.size(), std::vector<Multiset>(q));
    std::vector<Code> randomness(subsets.count() - 1, 0);
    for (Code x = 0; x < q; ++x) {
        std::fill(randomness.begin(), randomness.end(), 0);
        while (true) {
            const auto fragments = distribute(cnf_share_with(field, subsets, x, randomness), subsets);
            for (std::size_t c = 0; c < coalitions.size(); ++c) {
                std::vector<Code> view;
                for (auto j : coalitions[c]) view.insert(view.end(), fragments[j].values.begin(), fragments[j].values.end());
                ++counts[c][x][view];
            }
            std::size_t i = 0;
            for (; i < randomness.size(); ++i) {
                if (++randomness[i] < q) break;
                randomness[i] = 0;
            }
            if (i == randomness.size()) break;
        }
    }
    PrivacyReport report;
    report.randomness_per_secret = space;
    for (std::size_t c = 0; c < coalitions.size(); ++c)
        for (Code a = 0; a < q; ++a)
            for (Code b = a + 1; b < q; ++b)
                report.entries.push_back({coalitions[c], a, b, counts[c][a] == counts[c][b]});
    return report;
}

}  // namespace lwhss
