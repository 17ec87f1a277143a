#include "descent/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace descent {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Permutation: empty image list");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw std::invalid_argument("Permutation: degree must be positive");
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::simple_reflection(int i, int degree) {
    if (i < 1 || i >= degree) throw std::invalid_argument("simple_reflection: index out of range");
    Permutation w = identity(degree);
    std::swap(w.images_[static_cast<size_t>(i - 1)], w.images_[static_cast<size_t>(i)]);
    return w;
}

Permutation Permutation::longest_element(int degree) {
    std::vector<int> img(static_cast<size_t>(degree));
    for (int x = 1; x <= degree; ++x) img[static_cast<size_t>(x - 1)] = degree + 1 - x;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x) img[static_cast<size_t>((*this)(x)-1)] = x;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    std::vector<int> img(images_.size());
    for (int x = 1; x <= degree(); ++x) img[static_cast<size_t>(x - 1)] = (*this)(other(x));
    return Permutation(std::move(img));
}

void Permutation::right_multiply_simple(int i) {
    if (i < 1 || i >= degree())
        throw std::invalid_argument("right_multiply_simple: index out of range");
    // (w * s_i)(i) = w(i+1), (w * s_i)(i+1) = w(i).
    std::swap(images_[static_cast<size_t>(i - 1)], images_[static_cast<size_t>(i)]);
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= degree(); ++i)
        for (int j = i + 1; j <= degree(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

Root::Root(int i, int j) : from(i), to(j) {
    if (i < 1 || j < 1 || i == j) throw std::invalid_argument("Root: indices must be distinct positives");
}

int Root::simple_index() const {
    if (!is_simple()) throw std::logic_error("Root::simple_index: not a simple root");
    return from;
}

std::vector<int> Root::simple_coordinates(int rank) const {
    if (from > rank + 1 || to > rank + 1)
        throw std::invalid_argument("Root::simple_coordinates: root outside rank");
    std::vector<int> c(static_cast<size_t>(rank), 0);
    int lo = std::min(from, to), hi = std::max(from, to);
    int sign = positive() ? 1 : -1;
    for (int k = lo; k < hi; ++k) c[static_cast<size_t>(k - 1)] = sign;
    return c;
}

std::string to_string(const Root& rho) {
    int lo = std::min(rho.from, rho.to), hi = std::max(rho.from, rho.to);
    std::string body;
    for (int k = lo; k < hi; ++k) {
        if (!body.empty()) body += "+";
        body += "a" + std::to_string(k);
    }
    if (rho.positive()) return body;
    if (hi - lo == 1) return "-" + body;
    return "-(" + body + ")";
}

RootSet::RootSet(int rank, std::vector<Root> members) : rank_(rank), members_(std::move(members)) {
    for (const Root& rho : members_)
        if (rho.from > rank_ + 1 || rho.to > rank_ + 1)
            throw std::invalid_argument("RootSet: member outside rank");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool RootSet::contains(const Root& rho) const {
    return std::binary_search(members_.begin(), members_.end(), rho);
}

void RootSet::insert(const Root& rho) {
    if (rho.from > rank_ + 1 || rho.to > rank_ + 1)
        throw std::invalid_argument("RootSet::insert: root outside rank");
    auto it = std::lower_bound(members_.begin(), members_.end(), rho);
    if (it == members_.end() || !(*it == rho)) members_.insert(it, rho);
}

ReducedWord::ReducedWord(int rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
    if (rank_ < 0) throw std::invalid_argument("ReducedWord: rank must be nonnegative");
    for (int l : letters_)
        if (l < 1 || l > rank_) throw std::invalid_argument("ReducedWord: letter out of range");
}

Permutation ReducedWord::evaluate() const {
    Permutation w = Permutation::identity(rank_ + 1);
    for (int l : letters_) w.right_multiply_simple(l);
    return w;
}

DescendingCode::DescendingCode(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
    if (rank_ < 0) throw std::invalid_argument("DescendingCode: rank must be nonnegative");
    if (static_cast<int>(entries_.size()) != rank_)
        throw std::invalid_argument("DescendingCode: expected one entry per index 1..rank");
    for (int i = 1; i <= rank_; ++i)
        if (entry(i) < 1 || entry(i) > i + 1)
            throw std::invalid_argument("DescendingCode: entry k_" + std::to_string(i) +
                                        " out of range [1," + std::to_string(i + 1) + "]");
}

DescendingCode DescendingCode::identity(int rank) {
    std::vector<int> e(static_cast<size_t>(rank));
    for (int i = 1; i <= rank; ++i) e[static_cast<size_t>(i - 1)] = i + 1;
    return DescendingCode(rank, std::move(e));
}

int DescendingCode::expected_length() const {
    int len = 0;
    for (int i = 1; i <= rank_; ++i) len += i + 1 - entry(i);
    return len;
}

std::vector<int> cycle_letters(int i, int k) {
    std::vector<int> letters;
    for (int t = i; t >= k; --t) letters.push_back(t);
    return letters;
}

Permutation cycle_permutation(int i, int k, int degree) {
    Permutation w = Permutation::identity(degree);
    for (int t = i; t >= k; --t) w.right_multiply_simple(t);
    return w;
}

DecodedElement decode(const DescendingCode& code) {
    std::vector<int> letters;
    Permutation w = Permutation::identity(code.rank() + 1);
    for (int i = 1; i <= code.rank(); ++i) {
        for (int t = i; t >= code.entry(i); --t) {
            letters.push_back(t);
            w.right_multiply_simple(t);
        }
    }
    return DecodedElement{ReducedWord(code.rank(), std::move(letters)), std::move(w)};
}

DescendingCode encode(const Permutation& w) {
    int r = w.rank();
    std::vector<int> entries(static_cast<size_t>(r));
    Permutation cur = w;
    for (int i = r; i >= 1; --i) {
        int k = cur.inverse()(i + 1);
        entries[static_cast<size_t>(i - 1)] = k;
        // Peel: cur <- cur * pi_{k_i}^{-1}.
        cur = cur.compose(cycle_permutation(i, k, r + 1).inverse());
    }
    return DescendingCode(r, std::move(entries));
}

Root act_on_root(const Permutation& w, const Root& rho) {
    if (rho.from > w.degree() || rho.to > w.degree())
        throw std::invalid_argument("act_on_root: root outside degree");
    return Root(w(rho.from), w(rho.to));
}

Root cycle_action(int rank, int i, int j, int k) {
    if (i < 1 || j < i || j > rank) throw std::invalid_argument("cycle_action: bad cycle bounds");
    if (k < 1 || k > rank) throw std::invalid_argument("cycle_action: k out of range");
    if (k <= i - 2 || k >= j + 2) return Root::simple(k);
    if (k == i - 1) return Root(i - 1, j + 1);        // alpha_{i-1}+...+alpha_j
    if (k == i) return Root(j + 1, i);                // -(alpha_i+...+alpha_j)
    if (k <= j) return Root::simple(k - 1);           // i+1 <= k <= j
    return Root(j, j + 2);                            // k == j+1: alpha_j+alpha_{j+1}
}

RootSet negative_simple_set(const Permutation& w, const RootSet& delta_sub) {
    RootSet out(delta_sub.rank());
    for (const Root& alpha : delta_sub.members()) {
        if (!alpha.is_simple())
            throw std::invalid_argument("negative_simple_set: non-simple member");
        if (act_on_root(w, alpha).negative()) out.insert(alpha);
    }
    return out;
}

RootSet all_simple_roots(int rank) {
    RootSet out(rank);
    for (int k = 1; k <= rank; ++k) out.insert(Root::simple(k));
    return out;
}

std::vector<DescendingCode> enumerate_codes(int rank) {
    std::vector<DescendingCode> out;
    std::vector<int> entries(static_cast<size_t>(rank), 1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > rank) {
            out.emplace_back(rank, entries);
            return;
        }
        for (int k = 1; k <= i + 1; ++k) {
            entries[static_cast<size_t>(i - 1)] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace descent
