#include "descent/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descent {

using nlohmann::json;

namespace {

int parse_int(const std::string& token) {
    size_t pos = 0;
    int value;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (pos != token.size()) throw std::invalid_argument("trailing characters in '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string render_cycle(const std::vector<int>& letters) {
    bool compact = std::all_of(letters.begin(), letters.end(), [](int l) { return l <= 9; });
    std::string s = "s";
    for (size_t t = 0; t < letters.size(); ++t) {
        if (!compact && t > 0) s += ",";
        s += std::to_string(letters[t]);
    }
    return s;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer list");
    std::vector<int> out;
    for (const std::string& token : split(text, ',')) out.push_back(parse_int(token));
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> images;
    std::string token;
    while (in >> token) images.push_back(parse_int(token));
    return Permutation(std::move(images));
}

ReducedWord parse_word(const std::string& text, int rank) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        if (!token.empty() && (token[0] == 's' || token[0] == 'S')) token = token.substr(1);
        letters.push_back(parse_int(token));
    }
    return ReducedWord(rank, std::move(letters));
}

Root parse_root(const std::string& text) {
    if (!text.empty() && (text[0] == 'a' || text[0] == 'A'))
        return Root::simple(parse_int(text.substr(1)));
    std::vector<int> pair = parse_int_list(text);
    if (pair.size() != 2) throw std::invalid_argument("root must be 'ak' or 'i,j'");
    return Root(pair[0], pair[1]);
}

std::string render_int_list(const std::vector<int>& values) {
    std::string s;
    for (size_t t = 0; t < values.size(); ++t) {
        if (t > 0) s += ",";
        s += std::to_string(values[t]);
    }
    return s;
}

std::string render_word_plain(const ReducedWord& word) {
    if (word.letters().empty()) return "e";
    std::string s;
    for (size_t t = 0; t < word.letters().size(); ++t) {
        if (t > 0) s += " ";
        s += "s" + std::to_string(word.letters()[static_cast<size_t>(t)]);
    }
    return s;
}

std::string render_coset_word(const CosetCode& code) {
    auto columns = coset_cycle_words(code);
    std::string s;
    bool any = false;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].empty()) continue;
        if (any) s += " | ";
        for (size_t t = 0; t < columns[c].size(); ++t) {
            if (t > 0) s += " ";
            s += render_cycle(columns[c][t]);
        }
        any = true;
    }
    return any ? s : "e";
}

json to_json(const DescendingCode& code) {
    return json{{"rank", code.rank()}, {"code", code.entries()}};
}

json to_json(const Permutation& w) { return json{{"images", w.images()}}; }

json to_json(const ReducedWord& word) {
    return json{{"rank", word.rank()}, {"letters", word.letters()}};
}

json to_json(const CosetCode& code) {
    return json{{"parabolic", code.parabolic().parts()}, {"columns", code.columns()}};
}

json to_json(const RootSet& roots) {
    json members = json::array();
    for (const Root& rho : roots.members())
        members.push_back(json{{"from", rho.from}, {"to", rho.to}, {"text", to_string(rho)}});
    return json{{"rank", roots.rank()}, {"members", members}};
}

json to_json(const OrbitTorus& torus) {
    return json{{"orbit", torus.orbit.parts()}, {"exponents", torus.exponents}};
}

json to_json(const DominanceVerdict& verdict) {
    json j{{"relation", to_string(verdict.relation)}};
    j["greater_witness"] = verdict.greater_witness ? json(*verdict.greater_witness) : json(nullptr);
    j["less_witness"] = verdict.less_witness ? json(*verdict.less_witness) : json(nullptr);
    return j;
}

json to_json(const SupportReport& report) {
    json support = json::array(), refined = json::array();
    for (const CosetCode& c : report.support) support.push_back(to_json(c));
    for (const CosetCode& c : report.refined_support) refined.push_back(to_json(c));
    return json{{"mu", report.mu.parts()},
                {"lambda", report.lambda.parts()},
                {"verdict", to_string(report.verdict)},
                {"violation_index",
                 report.violation_index ? json(*report.violation_index) : json(nullptr)},
                {"support", support},
                {"refined_support", refined}};
}

json to_json(const OrbitCertificate& cert) {
    json rows = json::array();
    for (const CertificateRow& row : cert.rows)
        rows.push_back(json{{"orbit", row.orbit.parts()},
                            {"dominance", to_string(row.dominance.relation)},
                            {"verdict", to_string(row.verdict)},
                            {"consistent", row.consistent}});
    return json{{"mu", cert.mu.parts()}, {"rows", rows}, {"consistent", cert.consistent}};
}

json to_json(const RlDecomposition& rl) {
    json sets = json::array();
    for (size_t s = 0; s < rl.sets.size(); ++s)
        sets.push_back(json{{"l", s + 2}, {"roots", to_json(rl.sets[s])["members"]}});
    return json{{"sets", sets}};
}

DescendingCode code_from_json(const json& j) {
    return DescendingCode(j.at("rank").get<int>(), j.at("code").get<std::vector<int>>());
}

Permutation permutation_from_json(const json& j) {
    return Permutation(j.at("images").get<std::vector<int>>());
}

CosetCode coset_code_from_json(const json& j) {
    return CosetCode(Composition(j.at("parabolic").get<std::vector<int>>()),
                     j.at("columns").get<std::vector<std::vector<int>>>());
}

}  // namespace descent
