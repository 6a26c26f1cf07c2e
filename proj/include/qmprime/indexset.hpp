#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qmprime {

class Perm;

/// Sorted k-subset of {1..N}, the index sets of wedge-basis vectors and of
/// minor rows/columns.
class IndexSet {
public:
    IndexSet() = default;
    /// elems must be strictly increasing and positive.
    explicit IndexSet(std::vector<int> elems);
    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IndexSet range(int lo, int hi);

    int size() const { return static_cast<int>(e_.size()); }
    bool empty() const { return e_.empty(); }
    int operator[](int pos) const { return e_[static_cast<size_t>(pos)]; }
    const std::vector<int>& elems() const { return e_; }
    bool contains(int v) const;

    IndexSet with(int v) const;     // insert; v must not be present
    IndexSet without(int v) const;  // erase; v must be present

    bool operator==(const IndexSet& o) const { return e_ == o.e_; }
    bool operator!=(const IndexSet& o) const { return e_ != o.e_; }
    bool operator<(const IndexSet& o) const { return e_ < o.e_; }

    std::string str() const;  // "{1,3}"

private:
    std::vector<int> e_;
};

/// Componentwise order on equal-size index sets: I <= J iff i_l <= j_l for
/// every position l. Sizes must match.
bool subset_leq(const IndexSet& I, const IndexSet& J);

/// (I cap {1..m}, I cap {m+1..m+n}).
std::pair<IndexSet, IndexSet> split(const IndexSet& I, int m, int n);

/// All k-subsets of {1..N} in lexicographic order.
std::vector<IndexSet> all_k_subsets(int N, int k);

/// Rows and columns of one minor of the m x n coordinate matrix; always
/// square.
struct MinorSpec {
    IndexSet rows, cols;
    bool operator==(const MinorSpec& o) const { return rows == o.rows && cols == o.cols; }
    bool operator<(const MinorSpec& o) const {
        return rows != o.rows ? rows < o.rows : cols < o.cols;
    }
    std::string str() const;
};

/// The minor named by an admissible pair (k, I): for k <= n rows
/// w_m(p1(I)) and columns ({m+1..m+k} \ p2(I)) - m, for k > n rows
/// w_m(p1(I) \ {1..k-n}) and columns ({m+1..m+n} \ p2(I)) - m, where w_m
/// reverses {1..m}. Requires |I| = k and I <= c^m({1..k}).
MinorSpec minor_from_index(int m, int n, int k, const IndexSet& I);

/// { I : |I| = k, I <= w({1..k}) }.
std::set<IndexSet> demazure_index_sets(const Perm& w, int k);

/// { I : |I| = k, I <= w({1..k}), not I >= y({1..k}) }.
std::set<IndexSet> complement_index_sets(const Perm& w, const Perm& y, int k);

}  // namespace qmprime
