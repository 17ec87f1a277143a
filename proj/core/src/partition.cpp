#include "descent/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace descent {

namespace {

int checked_sum(const std::vector<int>& parts, const char* what) {
    if (parts.empty())
        throw std::invalid_argument(std::string(what) + ": empty part list");
    int sum = 0;
    for (int p : parts) {
        if (p <= 0)
            throw std::invalid_argument(std::string(what) + ": parts must be positive");
        sum += p;
    }
    return sum;
}

long prefix(const std::vector<int>& parts, int l) {
    long s = 0;
    for (int i = 0; i < l && i < static_cast<int>(parts.size()); ++i) s += parts[static_cast<size_t>(i)];
    return s;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    sum_ = checked_sum(parts_, "Composition");
}

bool Composition::weakly_decreasing() const {
    return std::is_sorted(parts_.rbegin(), parts_.rend());
}

SortedPartition::SortedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    sum_ = checked_sum(parts_, "SortedPartition");
    if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
        throw std::invalid_argument("SortedPartition: parts must be weakly decreasing");
}

std::string to_string(DominanceRel rel) {
    switch (rel) {
        case DominanceRel::Greater: return "greater";
        case DominanceRel::Less: return "less";
        case DominanceRel::Equal: return "equal";
        case DominanceRel::Incomparable: return "incomparable";
    }
    return "?";
}

SortedPartition transpose(const Composition& lambda) {
    int n = *std::max_element(lambda.parts().begin(), lambda.parts().end());
    std::vector<int> q(static_cast<size_t>(n), 0);
    for (int p : lambda.parts())
        for (int i = 0; i < p; ++i) ++q[static_cast<size_t>(i)];
    return SortedPartition(std::move(q));
}

SortedPartition transpose(const SortedPartition& lambda) {
    return transpose(lambda.as_composition());
}

DominanceVerdict dominance_compare(const SortedPartition& a, const SortedPartition& b) {
    if (a.sum() != b.sum())
        throw std::invalid_argument("dominance_compare: partitions of different n");
    DominanceVerdict v{DominanceRel::Equal, std::nullopt, std::nullopt};
    int len = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    for (int i = 1; i <= len; ++i) {
        sa = prefix(a.parts(), i);
        sb = prefix(b.parts(), i);
        if (sa > sb && !v.greater_witness) v.greater_witness = i;
        if (sb > sa && !v.less_witness) v.less_witness = i;
    }
    if (v.greater_witness && v.less_witness)
        v.relation = DominanceRel::Incomparable;
    else if (v.greater_witness)
        v.relation = DominanceRel::Greater;
    else if (v.less_witness)
        v.relation = DominanceRel::Less;
    else
        v.relation = DominanceRel::Equal;
    return v;
}

std::optional<int> partial_sum_violation(const Composition& lambda, const SortedPartition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("partial_sum_violation: partitions of different n");
    for (int l = 1; l <= lambda.size(); ++l)
        if (prefix(lambda.parts(), l) > prefix(mu.parts(), l)) return l;
    return std::nullopt;
}

Lemma32Bound lemma32_bound(const Composition& lambda, int l, int k) {
    SortedPartition q = transpose(lambda);
    int m = lambda.size();
    int n = lambda.sum();
    if (l < 1 || l > m) throw std::invalid_argument("lemma32_bound: l out of range");
    if (k < 1 || k > n) throw std::invalid_argument("lemma32_bound: k out of range");
    long lhs = prefix(lambda.parts(), l);
    long rhs = static_cast<long>(l) * k;
    // q_i = 0 beyond the transpose's length.
    for (int i = k + 1; i <= q.size(); ++i) rhs += q.part(i);
    return Lemma32Bound{lhs, rhs, lhs <= rhs, lhs == rhs};
}

std::vector<SortedPartition> enumerate_partitions(int n) {
    if (n <= 0) throw std::invalid_argument("enumerate_partitions: n must be positive");
    std::vector<SortedPartition> out;
    std::vector<int> cur;
    // Parts in weakly decreasing order, bounded above by the previous part.
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Composition> enumerate_compositions(int n) {
    if (n <= 0) throw std::invalid_argument("enumerate_compositions: n must be positive");
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

long partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: n must be nonnegative");
    // p(n, k): partitions of n with parts <= k.
    std::vector<std::vector<long>> p(static_cast<size_t>(n + 1),
                                     std::vector<long>(static_cast<size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            long v = p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)];
            if (m >= k) v += p[static_cast<size_t>(m - k)][static_cast<size_t>(k)];
            p[static_cast<size_t>(m)][static_cast<size_t>(k)] = v;
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

}  // namespace descent
