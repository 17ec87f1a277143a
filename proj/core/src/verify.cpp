#include "descent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "descent/coset.hpp"
#include "descent/orbit.hpp"
#include "descent/partition.hpp"
#include "descent/weyl.hpp"

namespace descent {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

json code_json(const DescendingCode& code) {
    return json{{"rank", code.rank()}, {"code", code.entries()}};
}

json coset_code_json(const CosetCode& code) {
    return json{{"parabolic", code.parabolic().parts()}, {"columns", code.columns()}};
}

json perm_json(const Permutation& w) { return json{{"images", w.images()}}; }

// All elements of W(P): block-wise permutations of {1..n}.
std::vector<Permutation> levi_weyl_group(const Composition& parabolic) {
    int n = parabolic.sum();
    std::vector<std::vector<int>> images{std::vector<int>{}};
    int lo = 1;
    for (int j = 1; j <= parabolic.size(); ++j) {
        int hi = lo + parabolic.part(j) - 1;
        std::vector<int> block;
        for (int b = lo; b <= hi; ++b) block.push_back(b);
        std::sort(block.begin(), block.end());
        std::vector<std::vector<int>> next;
        do {
            for (const auto& prefix : images) {
                std::vector<int> v = prefix;
                v.insert(v.end(), block.begin(), block.end());
                next.push_back(std::move(v));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        images = std::move(next);
        lo = hi + 1;
    }
    std::vector<Permutation> out;
    out.reserve(images.size());
    for (auto& v : images) out.emplace_back(std::move(v));
    (void)n;
    return out;
}

}  // namespace

json VerificationReport::to_json() const {
    return json{{"check", check}, {"scope", scope}, {"cases", cases},
                {"failures", failures}, {"ms", ms}};
}

VerificationReport verify_pi_bijection(int max_rank, std::optional<Mutation> mutation) {
    if (max_rank < 1) throw std::invalid_argument("verify_pi_bijection: max_rank >= 1 required");
    auto start = Clock::now();
    VerificationReport report{"pi_bijection", json{{"max_rank", max_rank}}, 0, {}, 0.0};

    for (int r = 1; r <= max_rank; ++r) {
        std::vector<DescendingCode> codes = enumerate_codes(r);
        if (mutation && r == max_rank) {
            std::uint64_t seed = mutation->seed;
            size_t which = seed % codes.size();
            int i = 1 + static_cast<int>((seed / codes.size()) % static_cast<std::uint64_t>(r));
            std::vector<int> entries = codes[which].entries();
            int& k = entries[static_cast<size_t>(i - 1)];
            k = (k % (i + 1)) + 1;  // different in-range value
            codes[which] = DescendingCode(r, std::move(entries));
        }

        std::map<Permutation, DescendingCode> seen;
        for (const DescendingCode& code : codes) {
            ++report.cases;
            DecodedElement dec = decode(code);
            int len = dec.permutation.length();
            if (dec.word.size() != len || len != code.expected_length())
                report.failures.push_back(json{{"reason", "word not reduced"},
                                               {"input", code_json(code)},
                                               {"word_length", dec.word.size()},
                                               {"inversions", len}});
            if (encode(dec.permutation) != code)
                report.failures.push_back(json{{"reason", "encode does not invert decode"},
                                               {"input", code_json(code)},
                                               {"observed", code_json(encode(dec.permutation))}});
            auto [it, inserted] = seen.emplace(dec.permutation, code);
            if (!inserted)
                report.failures.push_back(json{{"reason", "two codes decode to one permutation"},
                                               {"input", code_json(code)},
                                               {"other", code_json(it->second)},
                                               {"permutation", perm_json(dec.permutation)}});
        }
        if (static_cast<long>(seen.size()) != factorial(r + 1))
            report.failures.push_back(json{{"reason", "decoded element count wrong"},
                                           {"rank", r},
                                           {"observed", seen.size()},
                                           {"expected", factorial(r + 1)}});
    }
    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_coset_representatives(int max_n, std::optional<Mutation> mutation) {
    if (max_n < 2) throw std::invalid_argument("verify_coset_representatives: max_n >= 2 required");
    auto start = Clock::now();
    VerificationReport report{"coset_representatives", json{{"max_n", max_n}}, 0, {}, 0.0};

    for (int n = 2; n <= max_n; ++n) {
        for (const Composition& parabolic : enumerate_compositions(n)) {
            std::vector<CosetCode> codes = enumerate_coset_codes(parabolic);
            std::vector<std::pair<DescendingCode, Permutation>> reps;
            reps.reserve(codes.size());
            for (const CosetCode& code : codes) {
                DescendingCode full = code.full_code();
                reps.emplace_back(full, decode(full).permutation);
            }
            if (mutation && n == max_n && parabolic == enumerate_compositions(n).front()) {
                std::uint64_t seed = mutation->seed;
                size_t which = seed % reps.size();
                int i = parabolic.part(1) +
                        static_cast<int>((seed / reps.size()) % static_cast<std::uint64_t>(n - parabolic.part(1)));
                std::vector<int> entries = reps[which].first.entries();
                int& k = entries[static_cast<size_t>(i - 1)];
                k = (k % (i + 1)) + 1;
                DescendingCode full(n - 1, std::move(entries));
                reps[which] = {full, decode(full).permutation};
            }

            long expected = factorial(n);
            for (int p : parabolic.parts()) expected /= factorial(p);
            if (static_cast<long>(reps.size()) != expected)
                report.failures.push_back(json{{"reason", "representative count wrong"},
                                               {"parabolic", parabolic.parts()},
                                               {"observed", reps.size()},
                                               {"expected", expected}});

            std::vector<Permutation> levi = levi_weyl_group(parabolic);
            std::map<std::vector<int>, DescendingCode> coset_seen;
            for (const auto& [full, w] : reps) {
                ++report.cases;
                Permutation key = block_sorted_representative(w, parabolic);
                auto [it, inserted] = coset_seen.emplace(key.images(), full);
                if (!inserted)
                    report.failures.push_back(json{{"reason", "two representatives share a coset"},
                                                   {"parabolic", parabolic.parts()},
                                                   {"input", code_json(full)},
                                                   {"other", code_json(it->second)}});
                int len = w.length();
                for (const Permutation& p : levi) {
                    if (p == Permutation::identity(n)) continue;
                    if (p.compose(w).length() <= len) {
                        report.failures.push_back(json{{"reason", "representative not strictly minimal"},
                                                       {"parabolic", parabolic.parts()},
                                                       {"input", code_json(full)},
                                                       {"levi_element", perm_json(p)}});
                        break;
                    }
                }
                if (encode(w) != full)
                    report.failures.push_back(json{{"reason", "full code round trip failed"},
                                                   {"parabolic", parabolic.parts()},
                                                   {"input", code_json(full)}});
            }
        }
    }
    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_root_lemmas(int max_rank, std::optional<Mutation> mutation,
                                      std::optional<int> lemma33_rank) {
    if (max_rank < 2) throw std::invalid_argument("verify_root_lemmas: max_rank >= 2 required");
    int l33 = lemma33_rank.value_or(max_rank + 2);
    auto start = Clock::now();
    VerificationReport report{"root_lemmas",
                              json{{"max_rank", max_rank}, {"lemma33_rank", l33}}, 0, {}, 0.0};

    // Closed-form cycle action vs direct evaluation of s_j...s_i.
    int mut_i = 0, mut_j = 0;
    if (mutation) {
        mut_i = 1 + static_cast<int>(mutation->seed % static_cast<std::uint64_t>(l33));
        mut_j = l33;
    }
    for (int i = 1; i <= l33; ++i) {
        for (int j = i; j <= l33; ++j) {
            Permutation w = Permutation::identity(l33 + 1);
            int lo = (mutation && i == mut_i && j == mut_j) ? i + 1 : i;  // fault: drop last letter
            for (int t = j; t >= lo; --t) w.right_multiply_simple(t);
            for (int k = 1; k <= l33; ++k) {
                ++report.cases;
                Root expected = act_on_root(w, Root::simple(k));
                Root got = cycle_action(l33, i, j, k);
                if (!(expected == got))
                    report.failures.push_back(json{{"reason", "cycle action table mismatch"},
                                                   {"i", i}, {"j", j}, {"k", k},
                                                   {"direct", to_string(expected)},
                                                   {"closed_form", to_string(got)}});
            }
        }
    }

    // Exhaustive sweeps of the cycle products pi_{k_i}...pi_{k_j}.
    int degree = max_rank + 1;
    for (int i = 1; i <= max_rank; ++i) {
        for (int j = i; j <= max_rank; ++j) {
            std::vector<int> ks(static_cast<size_t>(j - i + 1));
            auto sweep = [&](auto&& self, int t, const Permutation& left) -> void {
                if (t > j) {
                    ++report.cases;
                    int kj = ks[static_cast<size_t>(j - i)];
                    Permutation last = cycle_permutation(j, kj, degree);
                    int negatives = 0;
                    for (int l = 1; l <= max_rank; ++l) {
                        Root img_last = act_on_root(last, Root::simple(l));
                        Root img = act_on_root(left, Root::simple(l));
                        if (img.negative()) ++negatives;
                        if (img_last.negative() && !img.negative())
                            report.failures.push_back(
                                json{{"reason", "negative image not propagated along cycle products"},
                                     {"i", i}, {"j", j}, {"ks", ks}, {"l", l}});
                        if (img_last.positive() && !img_last.is_simple() && !img.positive())
                            report.failures.push_back(
                                json{{"reason", "positive non-simple image went negative"},
                                     {"i", i}, {"j", j}, {"ks", ks}, {"l", l}});
                    }
                    if (negatives > j - i + 1)
                        report.failures.push_back(
                            json{{"reason", "more negated simple roots than nonempty cycles"},
                                 {"i", i}, {"j", j}, {"ks", ks}, {"negatives", negatives}});
                    if (std::is_sorted(ks.begin(), ks.end()) &&
                        std::adjacent_find(ks.begin(), ks.end()) == ks.end()) {
                        for (int l = kj + 1; l <= j; ++l) {
                            Root img = act_on_root(left, Root::simple(l));
                            if (!(img == Root::simple(l + i - j - 1)))
                                report.failures.push_back(
                                    json{{"reason", "strictly increasing code image mismatch"},
                                         {"i", i}, {"j", j}, {"ks", ks}, {"l", l},
                                         {"observed", to_string(img)}});
                        }
                    }
                    return;
                }
                for (int k = 1; k <= t + 1; ++k) {
                    ks[static_cast<size_t>(t - i)] = k;
                    self(self, t + 1, left.compose(cycle_permutation(t, k, degree)));
                }
            };
            sweep(sweep, i, Permutation::identity(degree));
        }
    }
    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_theorem31(int max_n, std::optional<Mutation> mutation) {
    if (max_n < 2) throw std::invalid_argument("verify_theorem31: max_n >= 2 required");
    auto start = Clock::now();
    VerificationReport report{"theorem31", json{{"max_n", max_n}}, 0, {}, 0.0};

    for (int n = 2; n <= max_n; ++n) {
        std::vector<Composition> lambdas = enumerate_compositions(n);
        bool mutated = false;
        for (const SortedPartition& mu : enumerate_partitions(n)) {
            Composition parabolic = transpose(mu).as_composition();
            std::vector<CosetCode> codes = enumerate_coset_codes(parabolic);
            std::vector<Permutation> perms;
            perms.reserve(codes.size());
            for (const CosetCode& c : codes) perms.push_back(coset_decode(c));

            CosetCode wmu = construct_w_mu(mu);
            if (mutation && n == max_n && !mutated && codes.size() > 1) {
                // Fault: claim a different coset code is w_mu.
                for (const CosetCode& c : codes)
                    if (c != wmu) {
                        wmu = c;
                        mutated = true;
                        break;
                    }
            }
            RootSet levi_neg = levi_negative_roots(parabolic);

            for (const Composition& lambda : lambdas) {
                ++report.cases;
                RootSet delta = delta_lambda(lambda);
                std::vector<size_t> all_negative;
                for (size_t ci = 0; ci < codes.size(); ++ci) {
                    bool neg = true;
                    for (const Root& alpha : delta.members())
                        if (!act_on_root(perms[ci], alpha).negative()) {
                            neg = false;
                            break;
                        }
                    if (neg) all_negative.push_back(ci);
                }

                // R_l staircase structure on every all-negative pair.
                for (size_t ci : all_negative) {
                    try {
                        RlDecomposition rl = rl_decomposition(codes[ci], lambda);
                        std::map<int, int> level;  // simple index -> l
                        for (size_t s = 0; s < rl.sets.size(); ++s)
                            for (const Root& alpha : rl.sets[s].members())
                                level[alpha.simple_index()] = static_cast<int>(s) + 2;
                        for (const auto& [idx, l] : level) {
                            auto next = level.find(idx + 1);
                            bool next_in_delta = delta.contains(Root::simple(idx + 1));
                            if (next_in_delta && (next == level.end() || next->second >= l))
                                report.failures.push_back(
                                    json{{"reason", "R_l staircase violated"},
                                         {"mu", mu.parts()}, {"lambda", lambda.parts()},
                                         {"code", coset_code_json(codes[ci])}, {"alpha", idx}});
                            if (l == 2 && next_in_delta)
                                report.failures.push_back(
                                    json{{"reason", "alpha in R_2 with successor in Delta_lambda"},
                                         {"mu", mu.parts()}, {"lambda", lambda.parts()},
                                         {"code", coset_code_json(codes[ci])}, {"alpha", idx}});
                        }
                    } catch (const NotAllNegativeError& e) {
                        report.failures.push_back(json{{"reason", "rl_decomposition rejected an all-negative pair"},
                                                       {"mu", mu.parts()}, {"lambda", lambda.parts()},
                                                       {"code", coset_code_json(codes[ci])},
                                                       {"error", e.what()}});
                    }
                }

                std::optional<int> violation = partial_sum_violation(lambda, mu);
                if (violation) {
                    if (!all_negative.empty())
                        report.failures.push_back(json{{"reason", "support nonempty under partial-sum violation"},
                                                       {"mu", mu.parts()}, {"lambda", lambda.parts()},
                                                       {"violation_index", *violation},
                                                       {"code", coset_code_json(codes[all_negative.front()])}});
                } else if (lambda.parts() == mu.parts()) {
                    bool singleton = all_negative.size() == 1 && codes[all_negative.front()] == wmu;
                    if (!singleton) {
                        json observed = json::array();
                        for (size_t ci : all_negative) observed.push_back(coset_code_json(codes[ci]));
                        report.failures.push_back(json{{"reason", "support at lambda=mu is not {w_mu}"},
                                                       {"mu", mu.parts()},
                                                       {"expected", coset_code_json(wmu)},
                                                       {"observed", observed}});
                    } else {
                        const Permutation& w = perms[all_negative.front()];
                        for (const Root& alpha : delta.members()) {
                            Root img = act_on_root(w, alpha);
                            if (levi_neg.contains(img))
                                report.failures.push_back(
                                    json{{"reason", "w_mu image lands in Phi^-_{mu^T}"},
                                         {"mu", mu.parts()}, {"alpha", to_string(alpha)},
                                         {"image", to_string(img)}});
                        }
                    }
                }
            }
        }
    }
    report.ms = elapsed_ms(start);
    return report;
}

VerificationReport verify_orbit_certificates(int max_n, std::optional<Mutation> mutation) {
    if (max_n < 2) throw std::invalid_argument("verify_orbit_certificates: max_n >= 2 required");
    auto start = Clock::now();
    VerificationReport report{"orbit_certificates", json{{"max_n", max_n}}, 0, {}, 0.0};

    for (int n = 1; n <= max_n; ++n) {
        for (const SortedPartition& mu : enumerate_partitions(n)) {
            bool mutate_here = mutation && n == max_n && mu == enumerate_partitions(n).front();
            if (mutate_here) {
                // Fault: dominance columns computed against a perturbed orbit.
                std::vector<int> parts = mu.parts();
                if (parts.size() == 1) {
                    parts[0] -= 1;
                    parts.push_back(1);
                } else {
                    parts[0] += parts.back();
                    parts.pop_back();
                }
                SortedPartition perturbed(std::move(parts));
                for (const SortedPartition& other : enumerate_partitions(n)) {
                    ++report.cases;
                    DominanceVerdict dom = dominance_compare(other, perturbed);
                    Verdict verdict = semiwhittaker_verdict(mu, other.as_composition()).verdict;
                    bool above = dom.relation == DominanceRel::Greater ||
                                 dom.relation == DominanceRel::Incomparable;
                    if ((verdict == Verdict::Vanishes) != above)
                        report.failures.push_back(json{{"reason", "certificate row inconsistent"},
                                                       {"mu", mu.parts()},
                                                       {"orbit", other.parts()},
                                                       {"dominance", to_string(dom.relation)},
                                                       {"verdict", to_string(verdict)}});
                }
                continue;
            }
            OrbitCertificate cert = attached_orbit_certificate(mu);
            for (const CertificateRow& row : cert.rows) {
                ++report.cases;
                if (!row.consistent)
                    report.failures.push_back(json{{"reason", "certificate row inconsistent"},
                                                   {"mu", mu.parts()},
                                                   {"orbit", row.orbit.parts()},
                                                   {"dominance", to_string(row.dominance.relation)},
                                                   {"verdict", to_string(row.verdict)}});
            }
        }
    }
    report.ms = elapsed_ms(start);
    return report;
}

std::vector<std::string> check_names() {
    return {"pi_bijection", "coset_representatives", "root_lemmas", "theorem31",
            "orbit_certificates"};
}

std::vector<VerificationReport> run_checks(const std::vector<std::string>& names,
                                           int max_rank, int max_n,
                                           std::optional<Mutation> mutation) {
    std::vector<std::string> selected = names.empty() ? check_names() : names;
    std::vector<VerificationReport> out;
    for (const std::string& name : selected) {
        if (name == "pi_bijection")
            out.push_back(verify_pi_bijection(max_rank, mutation));
        else if (name == "coset_representatives")
            out.push_back(verify_coset_representatives(max_n, mutation));
        else if (name == "root_lemmas")
            out.push_back(verify_root_lemmas(max_rank, mutation));
        else if (name == "theorem31")
            out.push_back(verify_theorem31(max_n, mutation));
        else if (name == "orbit_certificates")
            out.push_back(verify_orbit_certificates(max_n, mutation));
        else
            throw std::invalid_argument("unknown check: " + name);
    }
    return out;
}

}  // namespace descent
