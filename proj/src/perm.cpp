#include "qmprime/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmprime {

Perm::Perm(std::vector<int> oneline) : w_(std::move(oneline)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > size() || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Perm: not a permutation of {1..N}");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::simple(int n, int a) {
    if (a < 1 || a >= n) throw std::invalid_argument("Perm::simple: index out of range");
    Perm p = identity(n);
    std::swap(p.w_[static_cast<size_t>(a - 1)], p.w_[static_cast<size_t>(a)]);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> v(w_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<size_t>((*this)(i)-1)] = i;
    return Perm(std::move(v));
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (w_[static_cast<size_t>(i)] > w_[static_cast<size_t>(j)]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Perm::str() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : w_) os << v;
    } else {
        for (size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
    }
    return os.str();
}

std::optional<Perm> Perm::parse(const std::string& s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::vector<int> v;
    for (char c : s) {
        if (c < '1' || c > '9') return std::nullopt;
        v.push_back(c - '0');
    }
    try {
        return Perm(std::move(v));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

Perm operator*(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Perm: size mismatch");
    std::vector<int> w(static_cast<size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i) w[static_cast<size_t>(i - 1)] = u(v(i));
    return Perm(std::move(w));
}

Perm compose(const Perm& u, const Perm& v) { return u * v; }

IndexSet apply_set(const Perm& u, const IndexSet& I) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(I.size()));
    for (int x : I.elems()) {
        if (x < 1 || x > u.size()) throw std::invalid_argument("apply_set: index out of range");
        v.push_back(u(x));
    }
    std::sort(v.begin(), v.end());
    return IndexSet(std::move(v));
}

Perm coxeter(int N) { return coxeter_power(N, 1); }

Perm coxeter_power(int N, int m) {
    if (N < 1 || m < 0) throw std::invalid_argument("coxeter_power: bad arguments");
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 1; i <= N; ++i) v[static_cast<size_t>(i - 1)] = (i - 1 + m) % N + 1;
    return Perm(std::move(v));
}

Perm longest(int k, int N) {
    if (k < 1 || k > N) throw std::invalid_argument("longest: bad arguments");
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 1; i <= k; ++i) v[static_cast<size_t>(i - 1)] = k + 1 - i;
    for (int i = k + 1; i <= N; ++i) v[static_cast<size_t>(i - 1)] = i;
    return Perm(std::move(v));
}

Perm longest_rev(int k, int N) {
    if (k < 1 || k > N) throw std::invalid_argument("longest_rev: bad arguments");
    std::vector<int> v(static_cast<size_t>(N));
    for (int i = 1; i <= N - k; ++i) v[static_cast<size_t>(i - 1)] = i;
    for (int i = N - k + 1; i <= N; ++i) v[static_cast<size_t>(i - 1)] = 2 * N - k + 1 - i;
    return Perm(std::move(v));
}

bool bruhat_leq(const Perm& u, const Perm& w) {
    const int N = u.size();
    if (N != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    if (u == w) return true;
    // cu[i][j] = #{a <= i : u(a) >= j}; u <= w iff cu <= cw entrywise.
    for (int j = 1; j <= N; ++j) {
        int cu = 0, cw = 0;
        for (int i = 1; i <= N; ++i) {
            if (u(i) >= j) ++cu;
            if (w(i) >= j) ++cw;
            if (cu > cw) return false;
        }
    }
    return true;
}

std::vector<int> reduced_word(const Perm& w) {
    Perm cur = w;
    std::vector<int> word;
    while (!cur.is_identity()) {
        int a = 0;
        for (int i = 1; i < cur.size(); ++i)
            if (cur(i) > cur(i + 1)) {
                a = i;
                break;
            }
        std::vector<int> v = cur.oneline();
        std::swap(v[static_cast<size_t>(a - 1)], v[static_cast<size_t>(a)]);
        cur = Perm(std::move(v));
        word.push_back(a);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Perm> interval_below(const Perm& w, ExecMode mode) {
    std::vector<Perm> all;
    std::vector<int> v(static_cast<size_t>(w.size()));
    std::iota(v.begin(), v.end(), 1);
    do {
        all.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));

    std::vector<char> below(all.size(), 0);
    parallel_for(mode, all.size(), [&](std::size_t i) { below[i] = bruhat_leq(all[i], w); });

    std::vector<Perm> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (below[i]) out.push_back(all[i]);
    return out;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<Perm>& interval) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> len(interval.size());
    for (size_t i = 0; i < interval.size(); ++i) len[i] = interval[i].length();
    for (size_t a = 0; a < interval.size(); ++a)
        for (size_t b = 0; b < interval.size(); ++b) {
            if (len[b] != len[a] + 1) continue;
            // A comparable pair one length apart is a cover: any strictly
            // intermediate element would need an intermediate length.
            if (bruhat_leq(interval[a], interval[b]))
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return edges;
}

}  // namespace qmprime
