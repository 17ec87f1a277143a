#ifndef DESCENT_PARTITION_HPP
#define DESCENT_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace descent {

// An ordered tuple of positive integers (p_1,...,p_m).  Order is
// significant; no sortedness is assumed.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }  // 1-based
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }
    bool weakly_decreasing() const;

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int sum_;
};

// A weakly decreasing tuple of positive integers.
class SortedPartition {
public:
    explicit SortedPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }
    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }

    Composition as_composition() const { return Composition(parts_); }

    bool operator==(const SortedPartition& other) const { return parts_ == other.parts_; }
    bool operator!=(const SortedPartition& other) const { return parts_ != other.parts_; }
    bool operator<(const SortedPartition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
    int sum_;
};

enum class DominanceRel { Greater, Less, Equal, Incomparable };

struct DominanceVerdict {
    DominanceRel relation;
    // Smallest index where the strict partial-sum inequality holds in each
    // direction; absent when that direction never wins.
    std::optional<int> greater_witness;
    std::optional<int> less_witness;
};

std::string to_string(DominanceRel rel);

// Conjugate partition: q_i = #{j : p_j >= i}.  Works for compositions
// (general partitions); the result is always weakly decreasing.
SortedPartition transpose(const Composition& lambda);
SortedPartition transpose(const SortedPartition& lambda);

// Dominance partial order via prefix sums, the shorter partition padded
// with zeros.  Both arguments must be partitions of the same n.
DominanceVerdict dominance_compare(const SortedPartition& a, const SortedPartition& b);

// Smallest l with p_1+...+p_l > t_1+...+t_l, mu padded with zeros.
std::optional<int> partial_sum_violation(const Composition& lambda, const SortedPartition& mu);

struct Lemma32Bound {
    long lhs;  // p_1+...+p_l
    long rhs;  // l*k + q_{k+1}+...+q_n
    bool holds;
    bool equality;
};

// Evaluates the counting inequality p_1+...+p_l <= l*k + q_{k+1}+...+q_n
// where (q_i) = transpose(lambda).  Requires 1 <= l <= m, 1 <= k <= n.
Lemma32Bound lemma32_bound(const Composition& lambda, int l, int k);

std::vector<SortedPartition> enumerate_partitions(int n);
std::vector<Composition> enumerate_compositions(int n);

// Number of partitions of n (standard recurrence; used as a counting oracle).
long partition_count(int n);

}  // namespace descent

#endif
