#ifndef DESCENT_WEYL_HPP
#define DESCENT_WEYL_HPP

#include <string>
#include <utility>
#include <vector>

namespace descent {

// Convention used throughout: words multiply left to right and act as
// functions with the rightmost factor applied first, (uv)(x) = u(v(x));
// s_i is the transposition of coordinates i, i+1.

// Element of S_{r+1} in one-line notation: images_[i-1] = w(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);
    static Permutation simple_reflection(int i, int degree);
    static Permutation longest_element(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int rank() const { return degree() - 1; }
    int operator()(int x) const { return images_[static_cast<size_t>(x - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a.compose(b))(x) = a(b(x))
    Permutation compose(const Permutation& other) const;

    // Right-multiplication by s_i in place: w <- w * s_i.
    void right_multiply_simple(int i);

    // Inversion count #{(i,j) : i<j, w(i)>w(j)}.
    int length() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
    std::vector<int> images_;
};

// The root e_i - e_j, i != j.  Positive iff i < j; the simple root
// alpha_k is e_k - e_{k+1}.
struct Root {
    int from;
    int to;

    Root(int i, int j);
    static Root simple(int k) { return Root(k, k + 1); }

    bool positive() const { return from < to; }
    bool negative() const { return from > to; }
    bool is_simple() const { return to == from + 1; }
    // Index k when this is the simple root alpha_k.
    int simple_index() const;
    Root negated() const { return Root(to, from); }

    // Coefficients (c_1,...,c_r) in alpha-coordinates for S_{r+1}.
    std::vector<int> simple_coordinates(int rank) const;

    bool operator==(const Root& o) const { return from == o.from && to == o.to; }
    bool operator<(const Root& o) const { return std::pair(from, to) < std::pair(o.from, o.to); }
};

// Rendering in alpha-coordinates, e.g. "a2+a3+a4", "-(a1+a2)".
std::string to_string(const Root& rho);

// A set of roots for a fixed rank; members kept sorted and unique.
class RootSet {
public:
    explicit RootSet(int rank) : rank_(rank) {}
    RootSet(int rank, std::vector<Root> members);

    int rank() const { return rank_; }
    const std::vector<Root>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(const Root& rho) const;
    void insert(const Root& rho);

    bool operator==(const RootSet& o) const { return rank_ == o.rank_ && members_ == o.members_; }

private:
    int rank_;
    std::vector<Root> members_;
};

// Word in the simple reflections s_1,...,s_r.
class ReducedWord {
public:
    ReducedWord(int rank, std::vector<int> letters);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    Permutation evaluate() const;
    bool is_reduced() const { return size() == evaluate().length(); }

    bool operator==(const ReducedWord& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }

private:
    int rank_;
    std::vector<int> letters_;
};

// The code (k_1,...,k_r) of a descending decomposition, 1 <= k_i <= i+1.
// Entry k_i = i+1 stands for the empty cycle.
class DescendingCode {
public:
    DescendingCode(int rank, std::vector<int> entries);
    static DescendingCode identity(int rank);

    int rank() const { return rank_; }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const { return entries_[static_cast<size_t>(i - 1)]; }  // 1-based

    // Sum of cycle lengths, i+1-k_i.
    int expected_length() const;

    bool operator==(const DescendingCode& o) const { return rank_ == o.rank_ && entries_ == o.entries_; }
    bool operator!=(const DescendingCode& o) const { return !(*this == o); }
    bool operator<(const DescendingCode& o) const { return entries_ < o.entries_; }

private:
    int rank_;
    std::vector<int> entries_;
};

// Letters of the cycle pi_{k} at position i: s_i s_{i-1} ... s_k
// (empty when k = i+1).
std::vector<int> cycle_letters(int i, int k);

// The cycle pi_k at position i as a permutation of the given degree.
Permutation cycle_permutation(int i, int k, int degree);

struct DecodedElement {
    ReducedWord word;
    Permutation permutation;
};

// Concatenates the cycles pi_{k_1}...pi_{k_r} and evaluates them.
DecodedElement decode(const DescendingCode& code);

// Inverse of decode: peels cycles from the top, k_i = w_i^{-1}(i+1).
DescendingCode encode(const Permutation& w);

// w(e_i - e_j) = e_{w(i)} - e_{w(j)}.
Root act_on_root(const Permutation& w, const Root& rho);

// Closed-form image s_j s_{j-1} ... s_i (alpha_k), per the five-case table.
// Requires 1 <= i <= j <= rank, 1 <= k <= rank.
Root cycle_action(int rank, int i, int j, int k);

// {alpha in delta_sub : w(alpha) < 0}; every member must be simple.
RootSet negative_simple_set(const Permutation& w, const RootSet& delta_sub);

// All simple roots alpha_1..alpha_r.
RootSet all_simple_roots(int rank);

// Enumerates all (r+1)!/... descending codes of the given rank.
std::vector<DescendingCode> enumerate_codes(int rank);

}  // namespace descent

#endif
