#include "descent/orbit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace descent {

OrbitTorus torus_exponents(const SortedPartition& orbit) {
    std::vector<int> exps;
    exps.reserve(static_cast<size_t>(orbit.sum()));
    for (int p : orbit.parts())
        for (int e = p - 1; e >= 1 - p; e -= 2) exps.push_back(e);
    std::sort(exps.rbegin(), exps.rend());
    return OrbitTorus{orbit, std::move(exps)};
}

int root_weight(const OrbitTorus& torus, const Root& rho) {
    int n = static_cast<int>(torus.exponents.size());
    if (rho.from > n || rho.to > n)
        throw std::invalid_argument("root_weight: root outside rank");
    return torus.exponents[static_cast<size_t>(rho.from - 1)] -
           torus.exponents[static_cast<size_t>(rho.to - 1)];
}

RootSet u_level(const SortedPartition& orbit, int l) {
    if (l < 0) throw std::invalid_argument("u_level: level must be nonnegative");
    OrbitTorus torus = torus_exponents(orbit);
    int n = orbit.sum();
    RootSet out(n - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Root rho(i, j);
            if (root_weight(torus, rho) >= l) out.insert(rho);
        }
    return out;
}

RootSet delta_lambda(const Composition& lambda) {
    int n = lambda.sum();
    std::vector<bool> boundary(static_cast<size_t>(n), false);
    int acc = 0;
    for (int i = 1; i < lambda.size(); ++i) {
        acc += lambda.part(i);
        boundary[static_cast<size_t>(acc - 1)] = true;
    }
    RootSet out(n - 1);
    for (int i = 1; i <= n - 1; ++i)
        if (!boundary[static_cast<size_t>(i - 1)]) out.insert(Root::simple(i));
    return out;
}

RootSet levi_negative_roots(const Composition& parabolic) {
    int n = parabolic.sum();
    RootSet out(n - 1);
    int lo = 1;
    for (int j = 1; j <= parabolic.size(); ++j) {
        int hi = lo + parabolic.part(j) - 1;
        for (int b = lo; b <= hi; ++b)
            for (int c = b + 1; c <= hi; ++c) out.insert(Root(c, b));
        lo = hi + 1;
    }
    return out;
}

std::string to_string(Verdict v) {
    return v == Verdict::Vanishes ? "vanishes" : "nonvanishing";
}

SupportReport semiwhittaker_verdict(const SortedPartition& mu, const Composition& lambda) {
    if (mu.sum() != lambda.sum())
        throw std::invalid_argument("semiwhittaker_verdict: partitions of different n");

    std::optional<int> violation = partial_sum_violation(lambda, mu);
    SupportReport report{mu, lambda,
                         violation ? Verdict::Vanishes : Verdict::Nonvanishing,
                         violation, {}, {}};

    Composition parabolic = transpose(mu).as_composition();
    RootSet delta = delta_lambda(lambda);
    RootSet levi_neg = levi_negative_roots(parabolic);
    for (const CosetCode& code : enumerate_coset_codes(parabolic)) {
        Permutation w = coset_decode(code);
        bool all_negative = true;
        bool refined = true;
        for (const Root& alpha : delta.members()) {
            Root img = act_on_root(w, alpha);
            if (!img.negative()) {
                all_negative = false;
                break;
            }
            if (levi_neg.contains(img)) refined = false;
        }
        if (all_negative) {
            report.support.push_back(code);
            if (refined) report.refined_support.push_back(code);
        }
    }
    return report;
}

OrbitCertificate attached_orbit_certificate(const SortedPartition& mu) {
    OrbitCertificate cert{mu, {}, true};
    for (const SortedPartition& other : enumerate_partitions(mu.sum())) {
        DominanceVerdict dom = dominance_compare(other, mu);
        Verdict verdict = semiwhittaker_verdict(mu, other.as_composition()).verdict;
        bool above_or_incomparable = dom.relation == DominanceRel::Greater ||
                                     dom.relation == DominanceRel::Incomparable;
        bool consistent = (verdict == Verdict::Vanishes) == above_or_incomparable;
        cert.consistent = cert.consistent && consistent;
        cert.rows.push_back(CertificateRow{other, dom, verdict, consistent});
    }
    return cert;
}

}  // namespace descent
