#ifndef DESCENT_COSET_HPP
#define DESCENT_COSET_HPP

#include <stdexcept>
#include <vector>

#include "descent/partition.hpp"
#include "descent/weyl.hpp"

namespace descent {

// Column-grouped descending code of a minimal coset representative in
// W(P)\W(G).  The tableau for the parabolic (r_1,...,r_a) of r+1 is
// filled with k_0..k_r down columns, left to right; the first column is
// dropped.  columns()[j-2] holds the entries of column j (j = 2..a).
//
// Conditions: (a) 1 <= k_i <= i+1 at tableau index i, and (b) entries
// strictly increase down each column.
class CosetCode {
public:
    CosetCode(Composition parabolic, std::vector<std::vector<int>> columns);

    const Composition& parabolic() const { return parabolic_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    int degree() const { return parabolic_.sum(); }
    int rank() const { return degree() - 1; }

    // Tableau index of the first entry of column j (j >= 2).
    int column_start(int j) const;

    // Full descending code; first-column indices take the identity value i+1.
    DescendingCode full_code() const;

    bool operator==(const CosetCode& o) const {
        return parabolic_ == o.parabolic_ && columns_ == o.columns_;
    }
    bool operator!=(const CosetCode& o) const { return !(*this == o); }
    bool operator<(const CosetCode& o) const { return columns_ < o.columns_; }

private:
    Composition parabolic_;
    std::vector<std::vector<int>> columns_;
};

// Thrown by rl_decomposition when some image of Delta_lambda is positive.
class NotAllNegativeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Partition of Delta_lambda into the sets R_2,...,R_a: alpha lands in R_l
// for the minimal l with Pi_l...Pi_a(alpha) < 0 (and Pi_{l+1}...Pi_a(alpha)
// still simple).  sets[l-2] is R_l.
struct RlDecomposition {
    std::vector<RootSet> sets;
};

// All tableaux satisfying (a),(b) for the parabolic; these decode to one
// minimal representative per coset of W(P)\W(G).
std::vector<CosetCode> enumerate_coset_codes(const Composition& parabolic);

// Product Pi_2...Pi_a of the column cycles.
Permutation coset_decode(const CosetCode& code);

// Letters of the decoded word, grouped per column and per nonempty cycle:
// result[column][cycle] is one descending letter run.
std::vector<std::vector<std::vector<int>>> coset_cycle_words(const CosetCode& code);

// The element of W(P)w whose inverse is increasing on each Levi block;
// this is the unique minimal-length member of the coset.
Permutation block_sorted_representative(const Permutation& w, const Composition& parabolic);

// Minimal-length representative of W(P)w as a coset code.  Block-sorts w
// within the Levi blocks, then encodes and regroups.
CosetCode min_rep(const Permutation& w, const Composition& parabolic);

struct RewriteCheck {
    ReducedWord lhs;
    ReducedWord rhs;
    bool equal;
};

// The identity (s_i...s_j)(s_{i+1}...s_k) = s_{i+1}(s_i...s_k)(s_{i+1}...s_{j+1})
// for i >= j >= k; k = j gives the base form.  Needs i+1 <= rank.
RewriteCheck lemma25_rewrite(int rank, int i, int j, int k);

// The unique representative w_mu with w_mu(Delta_mu) inside
// Phi^- - Phi^-_{mu^T}, built column by column from the right.
CosetCode construct_w_mu(const SortedPartition& mu);

// Assigns each alpha in Delta_lambda to its R_l set.  Requires the decoded
// element to send all of Delta_lambda negative; otherwise throws
// NotAllNegativeError.
RlDecomposition rl_decomposition(const CosetCode& code, const Composition& lambda);

}  // namespace descent

#endif
