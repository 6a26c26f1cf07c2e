#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmprime/indexset.hpp"
#include "qmprime/parallel.hpp"

namespace qmprime {

/// Element of the symmetric group S_N in one-line notation: w_[i-1] = w(i).
class Perm {
public:
    Perm() = default;
    /// oneline must be a permutation of {1..N}.
    explicit Perm(std::vector<int> oneline);
    static Perm identity(int n);
    /// Adjacent transposition s_a = (a, a+1) inside S_n; 1 <= a <= n-1.
    static Perm simple(int n, int a);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& oneline() const { return w_; }

    Perm inverse() const;
    /// Number of inversions = length of any reduced word.
    int length() const;
    bool is_identity() const;

    bool operator==(const Perm& o) const { return w_ == o.w_; }
    bool operator!=(const Perm& o) const { return w_ != o.w_; }
    bool operator<(const Perm& o) const { return w_ < o.w_; }

    /// Compact one-line form, "3412". Falls back to comma-separated values
    /// when N > 9.
    std::string str() const;
    /// Parses the compact form; rejects anything that is not a permutation
    /// of {1..N} with N <= 9.
    static std::optional<Perm> parse(const std::string& s);

private:
    std::vector<int> w_;
};

/// Function composition: (u*v)(i) = u(v(i)).
Perm operator*(const Perm& u, const Perm& v);

Perm compose(const Perm& u, const Perm& v);

/// Sorted image u(I).
IndexSet apply_set(const Perm& u, const IndexSet& I);

/// The long cycle c = (1 2 ... N) and its m-th power.
Perm coxeter(int N);
Perm coxeter_power(int N, int m);

/// Longest element of S({1..k}) inside S_N, fixing the remaining letters.
Perm longest(int k, int N);
/// Longest element of S({N-k+1..N}) inside S_N.
Perm longest_rev(int k, int N);

/// Bruhat order via the dominance criterion on the counting matrices
/// #{a <= i : u(a) >= j}. The brute-force subword oracle lives in the test
/// suite and cross-validates this.
bool bruhat_leq(const Perm& u, const Perm& w);

/// One canonical reduced word (indices of simple reflections, 1-based),
/// obtained by repeatedly undoing the smallest right descent.
std::vector<int> reduced_word(const Perm& w);

/// All y <= w, in lexicographic one-line order.
std::vector<Perm> interval_below(const Perm& w, ExecMode mode = default_exec_mode());

/// Covering pairs (index_lower, index_upper) of the poset restricted to the
/// given elements, as positions into the input vector.
std::vector<std::pair<int, int>> hasse_edges(const std::vector<Perm>& interval);

}  // namespace qmprime
