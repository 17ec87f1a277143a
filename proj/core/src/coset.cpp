#include "descent/coset.hpp"

#include <algorithm>
#include <numeric>

namespace descent {

namespace {

// 0-based list of block boundary positions p_1, p_1+p_2, ... (total sum excluded).
std::vector<int> block_boundaries(const Composition& lambda) {
    std::vector<int> b;
    int acc = 0;
    for (int i = 1; i < lambda.size(); ++i) {
        acc += lambda.part(i);
        b.push_back(acc);
    }
    return b;
}

std::vector<Root> levi_simple_roots(const Composition& lambda) {
    std::vector<int> boundaries = block_boundaries(lambda);
    std::vector<Root> out;
    for (int i = 1; i <= lambda.sum() - 1; ++i)
        if (!std::binary_search(boundaries.begin(), boundaries.end(), i))
            out.push_back(Root::simple(i));
    return out;
}

}  // namespace

CosetCode::CosetCode(Composition parabolic, std::vector<std::vector<int>> columns)
    : parabolic_(std::move(parabolic)), columns_(std::move(columns)) {
    int a = parabolic_.size();
    if (static_cast<int>(columns_.size()) != a - 1)
        throw std::invalid_argument("CosetCode: expected one entry list per column 2..a");
    for (int j = 2; j <= a; ++j) {
        const auto& col = columns_[static_cast<size_t>(j - 2)];
        if (static_cast<int>(col.size()) != parabolic_.part(j))
            throw std::invalid_argument("CosetCode: column size mismatch");
        int idx = column_start(j);
        int prev = 0;
        for (int t = 0; t < static_cast<int>(col.size()); ++t, ++idx) {
            int k = col[static_cast<size_t>(t)];
            if (k < 1 || k > idx + 1)
                throw std::invalid_argument("CosetCode: entry out of range (condition a)");
            if (k <= prev)
                throw std::invalid_argument("CosetCode: column not strictly increasing (condition b)");
            prev = k;
        }
    }
}

int CosetCode::column_start(int j) const {
    if (j < 2 || j > parabolic_.size())
        throw std::invalid_argument("CosetCode::column_start: bad column");
    int idx = 0;
    for (int t = 1; t < j; ++t) idx += parabolic_.part(t);
    return idx;
}

DescendingCode CosetCode::full_code() const {
    int r = rank();
    std::vector<int> entries(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) entries[static_cast<size_t>(i - 1)] = i + 1;
    for (int j = 2; j <= parabolic_.size(); ++j) {
        int idx = column_start(j);
        for (int k : columns_[static_cast<size_t>(j - 2)]) entries[static_cast<size_t>(idx++) - 1] = k;
    }
    return DescendingCode(r, std::move(entries));
}

std::vector<CosetCode> enumerate_coset_codes(const Composition& parabolic) {
    int a = parabolic.size();
    std::vector<CosetCode> out;
    std::vector<std::vector<int>> cols(static_cast<size_t>(a - 1));
    auto fill_column = [&](auto&& self, int j) -> void {
        if (j > a) {
            out.emplace_back(parabolic, cols);
            return;
        }
        // Entries of column j: strictly increasing, k at tableau index idx
        // bounded by idx+1.
        int size = parabolic.part(j);
        int start = 0;
        for (int t = 1; t < j; ++t) start += parabolic.part(t);
        auto& col = cols[static_cast<size_t>(j - 2)];
        col.assign(static_cast<size_t>(size), 0);
        auto pick = [&](auto&& inner, int t, int lower) -> void {
            if (t == size) {
                self(self, j + 1);
                return;
            }
            int idx = start + t;
            for (int k = lower; k <= idx + 1; ++k) {
                col[static_cast<size_t>(t)] = k;
                inner(inner, t + 1, k + 1);
            }
        };
        pick(pick, 0, 1);
    };
    if (a == 1) {
        out.emplace_back(parabolic, std::vector<std::vector<int>>{});
        return out;
    }
    fill_column(fill_column, 2);
    return out;
}

Permutation coset_decode(const CosetCode& code) {
    return decode(code.full_code()).permutation;
}

std::vector<std::vector<std::vector<int>>> coset_cycle_words(const CosetCode& code) {
    std::vector<std::vector<std::vector<int>>> columns;
    for (int j = 2; j <= code.parabolic().size(); ++j) {
        std::vector<std::vector<int>> cycles;
        int idx = code.column_start(j);
        for (int k : code.columns()[static_cast<size_t>(j - 2)]) {
            if (k <= idx) cycles.push_back(cycle_letters(idx, k));
            ++idx;
        }
        columns.push_back(std::move(cycles));
    }
    return columns;
}

Permutation block_sorted_representative(const Permutation& w, const Composition& parabolic) {
    if (parabolic.sum() != w.degree())
        throw std::invalid_argument("block_sorted_representative: parabolic does not sum to the degree");
    // The minimal representative w' of W(P)w is the one whose inverse is
    // increasing on each Levi block of rows.
    Permutation winv = w.inverse();
    std::vector<int> sorted_inv(static_cast<size_t>(w.degree()));
    int lo = 1;
    for (int j = 1; j <= parabolic.size(); ++j) {
        int hi = lo + parabolic.part(j) - 1;
        std::vector<int> vals;
        for (int b = lo; b <= hi; ++b) vals.push_back(winv(b));
        std::sort(vals.begin(), vals.end());
        for (int b = lo; b <= hi; ++b) sorted_inv[static_cast<size_t>(b - 1)] = vals[static_cast<size_t>(b - lo)];
        lo = hi + 1;
    }
    return Permutation(std::move(sorted_inv)).inverse();
}

CosetCode min_rep(const Permutation& w, const Composition& parabolic) {
    Permutation wprime = block_sorted_representative(w, parabolic);
    DescendingCode dc = encode(wprime);
    int r1 = parabolic.part(1);
    for (int i = 1; i < r1; ++i)
        if (dc.entry(i) != i + 1)
            throw std::logic_error("min_rep: first tableau column not trivial");
    std::vector<std::vector<int>> cols;
    int idx = r1;
    for (int j = 2; j <= parabolic.size(); ++j) {
        std::vector<int> col;
        for (int t = 0; t < parabolic.part(j); ++t, ++idx) col.push_back(dc.entry(idx));
        cols.push_back(std::move(col));
    }
    return CosetCode(parabolic, std::move(cols));
}

RewriteCheck lemma25_rewrite(int rank, int i, int j, int k) {
    if (!(i >= j && j >= k && k >= 1))
        throw std::invalid_argument("lemma25_rewrite: need i >= j >= k >= 1");
    if (i + 1 > rank)
        throw std::invalid_argument("lemma25_rewrite: need i+1 <= rank");
    auto descending = [](int hi, int lo) {
        std::vector<int> v;
        for (int t = hi; t >= lo; --t) v.push_back(t);
        return v;
    };
    std::vector<int> lhs = descending(i, j);
    for (int t : descending(i + 1, k)) lhs.push_back(t);
    std::vector<int> rhs{i + 1};
    for (int t : descending(i, k)) rhs.push_back(t);
    for (int t : descending(i + 1, j + 1)) rhs.push_back(t);
    ReducedWord lw(rank, std::move(lhs)), rw(rank, std::move(rhs));
    bool equal = lw.evaluate() == rw.evaluate();
    return RewriteCheck{std::move(lw), std::move(rw), equal};
}

CosetCode construct_w_mu(const SortedPartition& mu) {
    Composition parabolic = transpose(mu).as_composition();
    int a = parabolic.size();
    std::vector<std::vector<int>> cols(static_cast<size_t>(std::max(a - 1, 0)));
    std::vector<int> cur = mu.parts();
    // Fill from the rightmost column; dropping a column caps parts at j-1.
    for (int j = a; j >= 2; --j) {
        int p1 = cur[0];
        int csize = static_cast<int>(std::count_if(cur.begin(), cur.end(), [&](int t) { return t >= j; }));
        std::vector<int> col(static_cast<size_t>(csize));
        for (int t = 1; t <= csize; ++t) col[static_cast<size_t>(t - 1)] = 1 + (t - 1) * p1;
        cols[static_cast<size_t>(j - 2)] = std::move(col);
        for (int& t : cur) t = std::min(t, j - 1);
    }
    return CosetCode(std::move(parabolic), std::move(cols));
}

RlDecomposition rl_decomposition(const CosetCode& code, const Composition& lambda) {
    if (lambda.sum() != code.degree())
        throw std::invalid_argument("rl_decomposition: lambda does not sum to the degree");
    int a = code.parabolic().size();
    int rank = code.rank();

    // Column products Pi_j as permutations.
    std::vector<Permutation> pi(static_cast<size_t>(a + 1), Permutation::identity(code.degree()));
    for (int j = 2; j <= a; ++j) {
        Permutation p = Permutation::identity(code.degree());
        int idx = code.column_start(j);
        for (int k : code.columns()[static_cast<size_t>(j - 2)]) {
            for (int t = idx; t >= k; --t) p.right_multiply_simple(t);
            ++idx;
        }
        pi[static_cast<size_t>(j)] = std::move(p);
    }

    RlDecomposition out;
    out.sets.assign(static_cast<size_t>(std::max(a - 1, 0)), RootSet(rank));
    for (const Root& alpha : levi_simple_roots(lambda)) {
        Root img = alpha;
        bool assigned = false;
        for (int l = a; l >= 2; --l) {
            Root next = act_on_root(pi[static_cast<size_t>(l)], img);
            if (next.negative()) {
                out.sets[static_cast<size_t>(l - 2)].insert(alpha);
                assigned = true;
                break;
            }
            if (!next.is_simple())
                throw NotAllNegativeError("rl_decomposition: " + to_string(alpha) +
                                          " has a positive non-simple partial image");
            img = next;
        }
        if (!assigned)
            throw NotAllNegativeError("rl_decomposition: " + to_string(alpha) +
                                      " stays positive under the full product");
    }
    return out;
}

}  // namespace descent
