#include "cli.hpp"

#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "descent/coset.hpp"
#include "descent/orbit.hpp"
#include "descent/partition.hpp"
#include "descent/serialize.hpp"
#include "descent/verify.hpp"
#include "descent/weyl.hpp"

namespace descent::cli {

namespace {

using nlohmann::json;

struct Request {
    std::string format = "text";
    bool json_output() const { return format == "json"; }
};

void emit(std::ostream& out, const Request& req, const json& j, const std::string& text) {
    if (req.json_output())
        out << j.dump() << "\n";
    else
        out << text << "\n";
}

SortedPartition sorted_arg(const std::string& text, const char* flag) {
    try {
        return SortedPartition(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    }
}

std::string render_root_list(const RootSet& roots) {
    std::string s = "{";
    for (size_t t = 0; t < roots.members().size(); ++t) {
        if (t > 0) s += ", ";
        s += to_string(roots.members()[t]);
    }
    return s + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Type-A Weyl group combinatorics: descending decompositions, "
                 "coset representatives, and unipotent-orbit certificates"};
    app.require_subcommand(1);

    Request req;
    int status = 0;
    std::string code_text, perm_text, word_text, parabolic_text, mu_text, lambda_text,
        orbit_text, root_text, expect_text, a_text, b_text;
    int rank = 0, level = 0, max_rank = 6, max_n = 8;
    std::vector<std::string> checks;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", req.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* decode_cmd = app.add_subcommand("decode", "Decode a descending code to a word");
    decode_cmd->add_option("--rank", rank, "Rank r of S_{r+1}")->required();
    decode_cmd->add_option("--code", code_text, "Code k_1,...,k_r")->required();
    add_format(decode_cmd);
    decode_cmd->callback([&] {
        DescendingCode code(rank, parse_int_list(code_text));
        DecodedElement dec = decode(code);
        json j{{"code", to_json(code)}, {"word", to_json(dec.word)},
               {"permutation", to_json(dec.permutation)}};
        emit(out, req, j, render_word_plain(dec.word));
    });

    auto* encode_cmd = app.add_subcommand("encode", "Encode a permutation as a descending code");
    encode_cmd->add_option("--perm", perm_text, "One-line images, e.g. \"3 1 2\"")->required();
    add_format(encode_cmd);
    encode_cmd->callback([&] {
        Permutation w = parse_permutation(perm_text);
        DescendingCode code = encode(w);
        emit(out, req, to_json(code), render_int_list(code.entries()));
    });

    auto* transpose_cmd = app.add_subcommand("transpose", "Conjugate partition");
    transpose_cmd->add_option("--lambda", lambda_text, "Partition, e.g. 3,2,2,1")->required();
    add_format(transpose_cmd);
    transpose_cmd->callback([&] {
        SortedPartition t = transpose(Composition(parse_int_list(lambda_text)));
        emit(out, req, json{{"transpose", t.parts()}}, render_int_list(t.parts()));
    });

    auto* dom_cmd = app.add_subcommand("dominance", "Dominance order comparison");
    dom_cmd->add_option("--lambda", a_text, "First sorted partition")->required();
    dom_cmd->add_option("--mu", b_text, "Second sorted partition")->required();
    add_format(dom_cmd);
    dom_cmd->callback([&] {
        DominanceVerdict v = dominance_compare(sorted_arg(a_text, "--lambda"), sorted_arg(b_text, "--mu"));
        std::string text = to_string(v.relation);
        if (v.greater_witness) text += " (greater at i=" + std::to_string(*v.greater_witness) + ")";
        if (v.less_witness) text += " (less at i=" + std::to_string(*v.less_witness) + ")";
        emit(out, req, to_json(v), text);
    });

    auto* cosets_cmd = app.add_subcommand("cosets", "Minimal coset representatives for W(P)\\W(G)");
    cosets_cmd->add_option("--parabolic", parabolic_text, "Composition r_1,...,r_a")->required();
    add_format(cosets_cmd);
    cosets_cmd->callback([&] {
        Composition parabolic(parse_int_list(parabolic_text));
        std::vector<CosetCode> codes = enumerate_coset_codes(parabolic);
        if (req.json_output()) {
            json j = json::array();
            for (const CosetCode& c : codes) j.push_back(to_json(c));
            out << j.dump() << "\n";
        } else {
            for (const CosetCode& c : codes) out << render_coset_word(c) << "\n";
        }
    });

    auto* minrep_cmd = app.add_subcommand("minrep", "Minimal representative of W(P)w");
    auto* minrep_perm = minrep_cmd->add_option("--perm", perm_text, "One-line images");
    auto* minrep_word = minrep_cmd->add_option("--word", word_text, "Word, e.g. \"s3 s4 s3\"");
    minrep_perm->excludes(minrep_word);
    minrep_cmd->add_option("--parabolic", parabolic_text, "Composition r_1,...,r_a")->required();
    add_format(minrep_cmd);
    minrep_cmd->callback([&] {
        Composition parabolic(parse_int_list(parabolic_text));
        Permutation w = Permutation::identity(parabolic.sum() - 1);
        if (!perm_text.empty()) {
            w = parse_permutation(perm_text);
        } else if (!word_text.empty()) {
            w = parse_word(word_text, parabolic.sum() - 1).evaluate();
        } else {
            throw std::invalid_argument("minrep requires --perm or --word");
        }
        CosetCode code = min_rep(w, parabolic);
        emit(out, req, to_json(code), render_coset_word(code));
    });

    auto* act_cmd = app.add_subcommand("act", "Apply a word to a root");
    act_cmd->add_option("--rank", rank, "Rank r")->required();
    act_cmd->add_option("--word", word_text, "Word, e.g. \"s4 s3 s2\" or \"4 3 2\"")->required();
    act_cmd->add_option("--root", root_text, "Root: \"ak\" or \"i,j\"")->required();
    add_format(act_cmd);
    act_cmd->callback([&] {
        ReducedWord word = parse_word(word_text, rank);
        Root img = act_on_root(word.evaluate(), parse_root(root_text));
        emit(out, req,
             json{{"from", img.from}, {"to", img.to}, {"text", to_string(img)}},
             to_string(img));
    });

    auto* wmu_cmd = app.add_subcommand("wmu", "The unique representative w_mu");
    wmu_cmd->add_option("--mu", mu_text, "Sorted partition")->required();
    add_format(wmu_cmd);
    wmu_cmd->callback([&] {
        CosetCode code = construct_w_mu(sorted_arg(mu_text, "--mu"));
        emit(out, req, to_json(code), render_coset_word(code));
    });

    auto* rl_cmd = app.add_subcommand("rl", "R_l decomposition of Delta_lambda under w_mu");
    rl_cmd->add_option("--mu", mu_text, "Sorted partition")->required();
    rl_cmd->add_option("--lambda", lambda_text, "Composition (defaults to mu)");
    add_format(rl_cmd);
    rl_cmd->callback([&] {
        SortedPartition mu = sorted_arg(mu_text, "--mu");
        Composition lambda =
            lambda_text.empty() ? mu.as_composition() : Composition(parse_int_list(lambda_text));
        RlDecomposition rl = rl_decomposition(construct_w_mu(mu), lambda);
        std::string text;
        for (size_t s = 0; s < rl.sets.size(); ++s) {
            if (s > 0) text += "\n";
            text += "R_" + std::to_string(s + 2) + " = " + render_root_list(rl.sets[s]);
        }
        emit(out, req, to_json(rl), text.empty() ? "(no columns)" : text);
    });

    auto* support_cmd = app.add_subcommand("support", "Semi-Whittaker support report");
    support_cmd->add_option("--mu", mu_text, "Sorted partition")->required();
    support_cmd->add_option("--lambda", lambda_text, "Composition")->required();
    support_cmd->add_option("--expect", expect_text, "Fail (exit 1) unless the verdict matches")
        ->check(CLI::IsMember({"vanishes", "nonvanishing"}));
    add_format(support_cmd);
    support_cmd->callback([&] {
        SupportReport report = semiwhittaker_verdict(sorted_arg(mu_text, "--mu"),
                                                     Composition(parse_int_list(lambda_text)));
        std::string text = to_string(report.verdict);
        if (report.violation_index)
            text += " (violation at l=" + std::to_string(*report.violation_index) + ")";
        text += "; support size " + std::to_string(report.support.size());
        for (const CosetCode& c : report.support) text += "\n  " + render_coset_word(c);
        emit(out, req, to_json(report), text);
        if (!expect_text.empty() && expect_text != to_string(report.verdict)) {
            err << "expected " << expect_text << ", got " << to_string(report.verdict) << "\n";
            status = 1;
        }
    });

    auto* orbit_cmd = app.add_subcommand("orbit", "Attached-orbit certificate");
    orbit_cmd->add_option("--mu", mu_text, "Sorted partition")->required();
    add_format(orbit_cmd);
    orbit_cmd->callback([&] {
        OrbitCertificate cert = attached_orbit_certificate(sorted_arg(mu_text, "--mu"));
        if (req.json_output()) {
            out << to_json(cert).dump() << "\n";
        } else {
            for (const CertificateRow& row : cert.rows)
                out << render_int_list(row.orbit.parts()) << ": "
                    << to_string(row.dominance.relation) << ", " << to_string(row.verdict)
                    << (row.consistent ? "" : "  [INCONSISTENT]") << "\n";
            out << (cert.consistent ? "certificate consistent" : "certificate INCONSISTENT")
                << "\n";
        }
        if (!cert.consistent) status = 1;
    });

    auto* ho_cmd = app.add_subcommand("ho", "Torus exponents h_O");
    ho_cmd->add_option("--orbit", orbit_text, "Sorted partition")->required();
    add_format(ho_cmd);
    ho_cmd->callback([&] {
        OrbitTorus torus = torus_exponents(sorted_arg(orbit_text, "--orbit"));
        emit(out, req, to_json(torus), render_int_list(torus.exponents));
    });

    auto* ulevel_cmd = app.add_subcommand("ulevel", "Root support of U_l(O)");
    ulevel_cmd->add_option("--orbit", orbit_text, "Sorted partition")->required();
    ulevel_cmd->add_option("--level", level, "Minimum conjugation weight l")->required();
    add_format(ulevel_cmd);
    ulevel_cmd->callback([&] {
        RootSet roots = u_level(sorted_arg(orbit_text, "--orbit"), level);
        emit(out, req, to_json(roots), render_root_list(roots));
    });

    auto* verify_cmd = app.add_subcommand("verify", "Run brute-force theorem sweeps");
    verify_cmd->add_option("checks", checks,
                           "Check names (default: all): pi_bijection, coset_representatives, "
                           "root_lemmas, theorem31, orbit_certificates");
    verify_cmd->add_option("--max-rank", max_rank, "Rank bound for code sweeps")
        ->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "Partition-size bound for coset/orbit sweeps")
        ->capture_default_str();
    std::optional<std::uint64_t> mutate_seed;
    verify_cmd->add_option("--mutate-seed", mutate_seed,
                           "Inject one seeded fault (non-vacuity probe; checks must then fail)");
    add_format(verify_cmd);
    verify_cmd->callback([&] {
        std::optional<Mutation> mutation;
        if (mutate_seed) mutation = Mutation{*mutate_seed};
        std::vector<VerificationReport> reports = run_checks(checks, max_rank, max_n, mutation);
        json all = json::array();
        bool ok = true;
        for (const VerificationReport& r : reports) {
            ok = ok && r.passed();
            if (req.json_output()) {
                all.push_back(r.to_json());
            } else {
                out << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " (cases "
                    << r.cases << ", failures " << r.failures.size() << ", "
                    << static_cast<long>(r.ms) << " ms)\n";
                for (size_t f = 0; f < r.failures.size() && f < 5; ++f)
                    out << "  counterexample: " << r.failures[f].dump() << "\n";
            }
        }
        if (req.json_output()) out << all.dump() << "\n";
        if (!ok) status = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAllNegativeError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace descent::cli
