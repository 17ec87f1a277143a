#ifndef DESCENT_ORBIT_HPP
#define DESCENT_ORBIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "descent/coset.hpp"
#include "descent/partition.hpp"
#include "descent/weyl.hpp"

namespace descent {

// The one-parameter torus h_O attached to a unipotent orbit O: each part p
// contributes exponents p-1, p-3, ..., 1-p, merged in decreasing order.
struct OrbitTorus {
    SortedPartition orbit;
    std::vector<int> exponents;  // length n, weakly decreasing, sum 0
};

OrbitTorus torus_exponents(const SortedPartition& orbit);

// Conjugation weight m of h_O on the root subgroup of rho = e_i - e_j:
// m = exponents[i] - exponents[j].
int root_weight(const OrbitTorus& torus, const Root& rho);

// Positive roots with conjugation weight >= l (the root support of U_l(O)).
RootSet u_level(const SortedPartition& orbit, int l);

// Simple roots inside the Levi of P_lambda (block boundaries excluded).
RootSet delta_lambda(const Composition& lambda);

// Negative roots inside the Levi of the parabolic: e_i - e_j with i > j in
// the same block.
RootSet levi_negative_roots(const Composition& parabolic);

enum class Verdict { Vanishes, Nonvanishing };

std::string to_string(Verdict v);

// Combinatorial support of the lambda-semi-Whittaker coefficient of the
// degenerate Eisenstein series attached to mu.
struct SupportReport {
    SortedPartition mu;
    Composition lambda;
    Verdict verdict;
    std::optional<int> violation_index;
    // Coset codes w for transpose(mu) with w(Delta_lambda) all negative.
    std::vector<CosetCode> support;
    // Subset whose Delta_lambda images also avoid Phi^-_{mu^T}.
    std::vector<CosetCode> refined_support;
};

SupportReport semiwhittaker_verdict(const SortedPartition& mu, const Composition& lambda);

struct CertificateRow {
    SortedPartition orbit;           // O'
    DominanceVerdict dominance;      // O' vs mu
    Verdict verdict;                 // vanishing verdict for lambda = O'
    bool consistent;                 // vanishing <=> O' not <= mu
};

// Machine-checkable certificate that the orbit attached to E_mu is mu:
// one row per partition O' of n.
struct OrbitCertificate {
    SortedPartition mu;
    std::vector<CertificateRow> rows;
    bool consistent;
};

OrbitCertificate attached_orbit_certificate(const SortedPartition& mu);

}  // namespace descent

#endif
