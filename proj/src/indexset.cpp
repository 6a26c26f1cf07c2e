#include "qmprime/indexset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmprime/perm.hpp"

namespace qmprime {

IndexSet::IndexSet(std::vector<int> elems) : e_(std::move(elems)) {
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < 1) throw std::invalid_argument("IndexSet: entries must be >= 1");
        if (i > 0 && e_[i - 1] >= e_[i])
            throw std::invalid_argument("IndexSet: entries must be strictly increasing");
    }
}

IndexSet IndexSet::range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
}

bool IndexSet::contains(int v) const {
    return std::binary_search(e_.begin(), e_.end(), v);
}

IndexSet IndexSet::with(int v) const {
    if (contains(v)) throw std::invalid_argument("IndexSet::with: already present");
    std::vector<int> out = e_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return IndexSet(std::move(out));
}

IndexSet IndexSet::without(int v) const {
    if (!contains(v)) throw std::invalid_argument("IndexSet::without: not present");
    std::vector<int> out;
    out.reserve(e_.size() - 1);
    for (int x : e_)
        if (x != v) out.push_back(x);
    return IndexSet(std::move(out));
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
    os << "}";
    return os.str();
}

bool subset_leq(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw std::invalid_argument("subset_leq: size mismatch");
    for (int l = 0; l < I.size(); ++l)
        if (I[l] > J[l]) return false;
    return true;
}

std::pair<IndexSet, IndexSet> split(const IndexSet& I, int m, int n) {
    std::vector<int> p1, p2;
    for (int v : I.elems()) {
        if (v <= m)
            p1.push_back(v);
        else if (v <= m + n)
            p2.push_back(v);
        else
            throw std::invalid_argument("split: entry out of {1..m+n}");
    }
    return {IndexSet(std::move(p1)), IndexSet(std::move(p2))};
}

std::vector<IndexSet> all_k_subsets(int N, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > N) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(IndexSet(cur));
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == N - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    return out;
}

std::string MinorSpec::str() const { return rows.str() + "x" + cols.str(); }

namespace {

// w_m restricted to a subset of {1..m}: i -> m+1-i, re-sorted.
IndexSet reverse_in(int m, const IndexSet& s) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(s.size()));
    for (int i : s.elems()) v.push_back(m + 1 - i);
    std::sort(v.begin(), v.end());
    return IndexSet(std::move(v));
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    std::vector<int> v;
    for (int x : a.elems())
        if (!b.contains(x)) v.push_back(x);
    return IndexSet(std::move(v));
}

IndexSet shift_down(const IndexSet& a, int m) {
    std::vector<int> v;
    for (int x : a.elems()) v.push_back(x - m);
    return IndexSet(std::move(v));
}

// c^m({1..k}) inside S_{m+n}: {m+1..m+k} when k <= n, else
// {1..k-n} u {m+1..m+n}.
IndexSet cm_of_first(int m, int n, int k) {
    if (k <= n) return IndexSet::range(m + 1, m + k);
    std::vector<int> v;
    for (int i = 1; i <= k - n; ++i) v.push_back(i);
    for (int i = m + 1; i <= m + n; ++i) v.push_back(i);
    return IndexSet(std::move(v));
}

}  // namespace

MinorSpec minor_from_index(int m, int n, int k, const IndexSet& I) {
    if (k < 1 || k > m + n - 1) throw std::domain_error("minor_from_index: k out of range");
    if (I.size() != k) throw std::domain_error("minor_from_index: |I| != k");
    if (!subset_leq(I, cm_of_first(m, n, k)))
        throw std::domain_error("minor_from_index: I not <= c^m({1..k})");
    auto [p1, p2] = split(I, m, n);
    IndexSet rows, cols;
    if (k <= n) {
        rows = reverse_in(m, p1);
        cols = shift_down(set_minus(IndexSet::range(m + 1, m + k), p2), m);
    } else {
        rows = reverse_in(m, set_minus(p1, IndexSet::range(1, k - n)));
        cols = shift_down(set_minus(IndexSet::range(m + 1, m + n), p2), m);
    }
    if (rows.size() != cols.size()) throw std::logic_error("minor_from_index: non-square minor");
    return {rows, cols};
}

std::set<IndexSet> demazure_index_sets(const Perm& w, int k) {
    const int N = w.size();
    IndexSet top = apply_set(w, IndexSet::range(1, k));
    std::set<IndexSet> out;
    for (const auto& I : all_k_subsets(N, k))
        if (subset_leq(I, top)) out.insert(I);
    return out;
}

std::set<IndexSet> complement_index_sets(const Perm& w, const Perm& y, int k) {
    IndexSet bottom = apply_set(y, IndexSet::range(1, k));
    std::set<IndexSet> out;
    for (const auto& I : demazure_index_sets(w, k))
        if (!subset_leq(bottom, I)) out.insert(I);
    return out;
}

}  // namespace qmprime
