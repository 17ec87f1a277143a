#ifndef DESCENT_SERIALIZE_HPP
#define DESCENT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "descent/coset.hpp"
#include "descent/orbit.hpp"
#include "descent/partition.hpp"
#include "descent/weyl.hpp"

namespace descent {

// Text grammar: integer lists are comma-separated ("4,2,2,1"),
// permutations are space-separated one-line images ("3 1 2"), words accept
// "s3 s2 s1" or "3 2 1", roots accept "a2" or "1,3".

std::vector<int> parse_int_list(const std::string& text);
Permutation parse_permutation(const std::string& text);
ReducedWord parse_word(const std::string& text, int rank);
Root parse_root(const std::string& text);

std::string render_int_list(const std::vector<int>& values);

// "s1 s2 s1", or "e" for the empty word.
std::string render_word_plain(const ReducedWord& word);

// Compressed descending cycles with column separators:
// "s321 s43 s5 | s654321 s7654 s87 | s987654321".
std::string render_coset_word(const CosetCode& code);

nlohmann::json to_json(const DescendingCode& code);
nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const ReducedWord& word);
nlohmann::json to_json(const CosetCode& code);
nlohmann::json to_json(const RootSet& roots);
nlohmann::json to_json(const OrbitTorus& torus);
nlohmann::json to_json(const DominanceVerdict& verdict);
nlohmann::json to_json(const SupportReport& report);
nlohmann::json to_json(const OrbitCertificate& cert);
nlohmann::json to_json(const RlDecomposition& rl);

DescendingCode code_from_json(const nlohmann::json& j);
Permutation permutation_from_json(const nlohmann::json& j);
CosetCode coset_code_from_json(const nlohmann::json& j);

}  // namespace descent

#endif
