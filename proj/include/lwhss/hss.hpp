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
 * @file hss.hpp
 * @brief Linear homomorphic secret sharing from a labelweight code.
 *
 * Data flow of a scheme built on a code C (generator G, labeling L) with minimum labelweight >= dt+1:
 *
 *  - Share: every one of the l*m secrets x^{(i)}_k is CNF-shared: one value y_T per size-t subset T of
 *    servers, summing to the secret; server j holds every y_T with j not in T.
 *  - Eval: output coordinate r (owned by server L(r)) is z_r = sum over monomials chi of e[r][chi] chi(y),
 *    where a monomial picks one share per factor of the target product and is usable by server L(r)
 *    only if L(r) lies outside every chosen T.
 *  - Rec: the output client computes G z.
 *
 * The coefficients e are found monomial by monomial: for chi = (i, T_1..T_d) with
 * Lambda = [s] \ (T_1 u ... u T_d), solve G(Lambda) e_chi = unit_i. A solution exists because every
 * restriction of G to s-dt labels has full row rank when the labelweight is >= dt+1.
 */

#ifndef LWHSS_HSS_HPP
#define LWHSS_HSS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lwhss/codes.hpp"
#include "lwhss/galois.hpp"
#include "lwhss/random.hpp"

namespace lwhss {

inline constexpr std::uint64_t kMonomialBudget = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kPrivacyBudget = std::uint64_t{1} << 20;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct HssParams {
    std::size_t servers = 0;    ///< s
    std::size_t threshold = 0;  ///< t
    std::size_t degree = 0;     ///< d
    std::size_t instances = 0;  ///< l, the amortization parameter
    std::size_t variables = 0;  ///< m >= d
    /// Variable index used by each of the d factors; empty means x_0 * x_1 * ... * x_{d-1}.
    std::vector<std::size_t> selection;

    std::size_t factor_variable(std::size_t k) const { return selection.empty() ? k : selection[k]; }
    /// Throws ParameterOutOfRange / Degenerate when the invariants s > dt >= 1, m >= d fail.
    void validate() const;
};

/// The size-t subsets of [0, s) in lexicographic order.
class SubsetIndex {
public:
    SubsetIndex(std::size_t servers, std::size_t size);

    std::size_t servers() const noexcept { return servers_; }
    std::size_t subset_size() const noexcept { return size_; }
    std::size_t count() const noexcept { return subsets_.size(); }
    const std::vector<std::size_t>& subset(std::size_t idx) const { return subsets_[idx]; }
    std::optional<std::size_t> find(std::span<const std::size_t> sorted_subset) const;

    /// Indices of the subsets not containing `server`, increasing: what that server holds.
    const std::vector<std::size_t>& held_by(std::size_t server) const { return held_[server]; }
    /// Position of subset `idx` inside held_by(server), or -1 if server is in the subset.
    std::ptrdiff_t position(std::size_t server, std::size_t idx) const {
        return position_[server * subsets_.size() + idx];
    }

private:
    std::size_t servers_;
    std::size_t size_;
    std::vector<std::vector<std::size_t>> subsets_;
    std::vector<std::vector<std::size_t>> held_;
    std::vector<std::ptrdiff_t> position_;
};

/// CNF sharing of one secret: shares[idx] = y_T for T = subsets.subset(idx).
struct ShareBundle {
    Code secret = 0;
    std::vector<Code> shares;
};

/// What one server receives for one secret: y_T for T in held_by(server), in that order.
struct ShareFragment {
    std::size_t server = 0;
    std::vector<Code> values;
};

/// CNF sharing from explicit randomness (C(s,t) - 1 values, used for all subsets but the last).
ShareBundle cnf_share_with(const Field& field, const SubsetIndex& subsets, Code secret,
                           std::span<const Code> randomness);
ShareBundle cnf_share(const Field& field, const SubsetIndex& subsets, Code secret, RandomStream& rng);
std::vector<ShareFragment> distribute(const ShareBundle& bundle, const SubsetIndex& subsets);

/// All fragments server `server` holds, one per secret, secret (i, k) at index i*m + k.
struct ServerView {
    std::size_t server = 0;
    std::vector<std::vector<Code>> secrets;
};

/// Product monomial y^{(i)}_{1,T_1} ... y^{(i)}_{d,T_d}.
struct MonomialId {
    std::size_t instance = 0;
    std::vector<std::size_t> subsets;  ///< d indices into the SubsetIndex
    friend bool operator==(const MonomialId&, const MonomialId&) = default;
};

/**
 * Index arithmetic over the l * C(s,t)^d monomials, instance-major then lexicographic on the subset
 * tuple, so a monomial is addressed by one integer and never materialized unless asked for.
 */
class MonomialSpace {
public:
    MonomialSpace(const HssParams& params, std::uint64_t budget = kMonomialBudget);

    const SubsetIndex& subsets() const noexcept { return subsets_; }
    std::uint64_t size() const noexcept { return total_; }
    std::uint64_t per_instance() const noexcept { return per_instance_; }
    MonomialId at(std::uint64_t index) const;
    std::uint64_t index_of(const MonomialId& id) const;
    /// Servers appearing in some T_k, increasing.
    std::vector<std::size_t> touched_servers(const MonomialId& id) const;
    /// Lambda = servers able to compute the monomial.
    std::vector<std::size_t> able_servers(const MonomialId& id) const;
    bool computable_by(std::uint64_t index, std::size_t server) const;

private:
    std::size_t servers_;
    std::size_t degree_;
    SubsetIndex subsets_;
    std::uint64_t per_instance_;
    std::uint64_t total_;
};

struct MonomialListing {
    std::vector<MonomialId> all;
    std::vector<std::vector<std::uint64_t>> per_server;  ///< indices into `all` computable by each server
};

/// Materialized monomial set M and the per-server subsets M_j.
MonomialListing enumerate_monomials(const HssParams& params, std::uint64_t budget = kMonomialBudget);

struct EvalTerm {
    std::uint64_t monomial;
    Code coefficient;
    friend bool operator==(const EvalTerm&, const EvalTerm&) = default;
};

enum class LabelweightStatus { Verified, AssertedByConstruction };

struct SynthesisOptions {
    std::uint64_t monomial_budget = kMonomialBudget;
    std::uint64_t labelweight_budget = kLabelweightBudget;
    /// Brute-force the minimum labelweight before solving when q^l is within budget.
    bool verify_labelweight = true;
};

class HssScheme {
public:
    HssScheme(HssParams params, LabeledCode code, std::vector<std::vector<EvalTerm>> eval,
              LabelweightStatus status, std::optional<std::size_t> min_labelweight);

    const HssParams& params() const noexcept { return params_; }
    const LabeledCode& code() const noexcept { return code_; }
    const Field& field() const noexcept { return code_.field(); }
    const MonomialSpace& monomials() const noexcept { return monomials_; }
    const SubsetIndex& subsets() const noexcept { return monomials_.subsets(); }
    /// Sparse coefficient map of output coordinate r, sorted by monomial index.
    const std::vector<EvalTerm>& eval_terms(std::size_t r) const { return eval_[r]; }
    LabelweightStatus labelweight_status() const noexcept { return status_; }
    std::optional<std::size_t> min_labelweight() const noexcept { return min_labelweight_; }

private:
    HssParams params_;
    LabeledCode code_;
    MonomialSpace monomials_;
    std::vector<std::vector<EvalTerm>> eval_;
    LabelweightStatus status_;
    std::optional<std::size_t> min_labelweight_;
};

/// Eval coefficients for `code` (l = dim, s = number of labels). Throws InsufficientLabelweight.
HssScheme synthesize_eval(const LabeledCode& code, HssParams params, const SynthesisOptions& options = {});

/// Shares every secret (row i = instance i, column k = variable k) and groups fragments per server.
std::vector<ServerView> share_inputs(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                                     RandomStream& rng);

/// Output shares z_r for r owned by view.server, in coordinate order. Throws MissingShare.
Vector eval_server(const HssScheme& scheme, const ServerView& view);

/// Output shares of all servers, concatenated in code coordinate order.
struct OutputShares {
    std::vector<Vector> per_server;
    Vector assemble(const Labeling& labeling) const;
};

/// G z.
Vector reconstruct(const HssScheme& scheme, std::span<const Code> z);

/// prod_k x^{(i)}_{selection[k]} for each instance i.
Vector expected_outputs(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets);

struct EndToEndResult {
    Vector outputs;
    Vector expected;
    bool pass = false;
};

EndToEndResult run_end_to_end(const HssScheme& scheme, const std::vector<std::vector<Code>>& secrets,
                              std::uint64_t seed);

/// Uniform l x m secret matrix drawn from `rng`.
std::vector<std::vector<Code>> random_secrets(const HssScheme& scheme, RandomStream& rng);

/// l / n; throws ConditionViolated if it exceeds (s - dt)/s.
Rational scheme_rate(const HssScheme& scheme);

/// Rank of G restricted to every label set of size s - dt.
struct RestrictionCheck {
    std::uint64_t checked = 0;
    std::uint64_t deficient = 0;
    std::vector<std::size_t> first_deficient;
};
RestrictionCheck check_restrictions(const LabeledCode& code, std::size_t dt, std::uint64_t budget = 1u << 16);

struct PrivacyEntry {
    std::vector<std::size_t> coalition;
    Code secret_a = 0;
    Code secret_b = 0;
    bool equal = false;
};

struct PrivacyReport {
    std::vector<PrivacyEntry> entries;
    std::uint64_t randomness_per_secret = 0;
    bool all_equal() const;
};

/**
 * Exhaustive t-privacy check of CNF sharing: for every coalition of t servers and every pair of
 * secrets, the multisets of joint views over the whole randomness space are compared.
 *
 * d and m do not change the per-secret distribution (secrets are shared independently); they are
 * validated so the audit matches a concrete scheme's parameters.
 */
PrivacyReport privacy_audit(std::size_t t, std::size_t s, const Field& field, std::size_t d, std::size_t m,
                            std::uint64_t budget = kPrivacyBudget);

}  // namespace lwhss

#endif  // LWHSS_HSS_HPP
