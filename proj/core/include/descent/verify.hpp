#ifndef DESCENT_VERIFY_HPP
#define DESCENT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace descent {

struct VerificationReport {
    std::string check;
    nlohmann::json scope;
    long cases = 0;
    std::vector<nlohmann::json> failures;
    double ms = 0.0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Seeded fault injection: perturbs one case of a check so the check must
// report a counterexample.  Demonstrates that the checks are non-vacuous.
struct Mutation {
    std::uint64_t seed = 0;
};

// Decomposition bijection: all codes of rank <= max_rank decode to distinct reduced words,
// (r+1)! per rank, and encode inverts decode.
VerificationReport verify_pi_bijection(int max_rank, std::optional<Mutation> mutation = {});

// Coset representatives: for every composition of every n <= max_n, the
// tableau codes give one representative per coset, counted by the
// multinomial, each strictly minimal in its coset.
VerificationReport verify_coset_representatives(int max_n, std::optional<Mutation> mutation = {});

// Root lemmas: closed-form cycle action vs direct action at rank
// lemma33_rank (default max_rank + 2), and exhaustive cycle-product sweeps
// at max_rank.
VerificationReport verify_root_lemmas(int max_rank, std::optional<Mutation> mutation = {},
                                      std::optional<int> lemma33_rank = {});

// Support theorem: empty support under a partial-sum violation, singleton
// support {w_mu} at lambda = mu, plus the R_l staircase structure of every
// all-negative pair encountered.
VerificationReport verify_theorem31(int max_n, std::optional<Mutation> mutation = {});

// Attached orbit: the certificate of every sorted mu of n <= max_n
// is consistent.
VerificationReport verify_orbit_certificates(int max_n, std::optional<Mutation> mutation = {});

// Names accepted by run_checks, in canonical order.
std::vector<std::string> check_names();

// Runs the named checks (all when names is empty) at the given bounds.
std::vector<VerificationReport> run_checks(const std::vector<std::string>& names,
                                           int max_rank, int max_n,
                                           std::optional<Mutation> mutation = {});

}  // namespace descent

#endif
