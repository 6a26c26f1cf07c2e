#include "qmprime/extalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qmprime {

ExtVec ExtVec::basis(int N, const IndexSet& I) {
    ExtVec v(N, I.size());
    v.add_term(I, LaurentPoly(1));
    return v;
}

void ExtVec::add_term(const IndexSet& I, const LaurentPoly& c) {
    if (I.size() != k_) throw std::invalid_argument("ExtVec::add_term: degree mismatch");
    if (!I.empty() && I[I.size() - 1] > N_)
        throw std::invalid_argument("ExtVec::add_term: index out of range");
    if (c.is_zero()) return;
    auto it = terms_.find(I);
    if (it == terms_.end()) {
        terms_.emplace(I, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ExtVec ExtVec::operator-() const {
    ExtVec out(N_, k_);
    for (const auto& [I, c] : terms_) out.terms_.emplace(I, -c);
    return out;
}

ExtVec& ExtVec::operator+=(const ExtVec& o) {
    if (N_ != o.N_ || k_ != o.k_) throw std::invalid_argument("ExtVec: shape mismatch");
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
}

ExtVec& ExtVec::operator-=(const ExtVec& o) { return *this += -o; }

ExtVec ExtVec::scaled(const LaurentPoly& c) const {
    ExtVec out(N_, k_);
    if (c.is_zero()) return out;
    for (const auto& [I, k] : terms_) out.terms_.emplace(I, k * c);
    return out;
}

bool ExtVec::operator==(const ExtVec& o) const {
    return N_ == o.N_ && k_ == o.k_ && terms_ == o.terms_;
}

std::string ExtVec::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*u" << I.str();
    }
    return os.str();
}

ExtMono ext_normalize(int N, const std::vector<int>& word) {
    for (int v : word)
        if (v < 1 || v > N) throw std::invalid_argument("ext_normalize: index out of range");
    std::vector<int> w = word;
    // Bubble sort; each swap of a descending adjacent pair contributes -q^-1.
    LaurentPoly coeff(1);
    const LaurentPoly swap_unit = -LaurentPoly::q_power(-1);
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] == w[p + 1]) return ExtMono{};  // v_i^2 = 0
            if (w[p] > w[p + 1]) {
                std::swap(w[p], w[p + 1]);
                coeff *= swap_unit;
                moved = true;
            }
        }
    }
    ExtMono out;
    out.zero = false;
    out.set = IndexSet(std::move(w));
    out.coeff = coeff;
    return out;
}

ExtVec raise_op(int i, int j, const ExtVec& v) {
    if (i < 1 || j <= i || j > v.ambient())
        throw std::invalid_argument("raise_op: require 1 <= i < j <= N");
    ExtVec out(v.ambient(), v.degree());
    for (const auto& [I, c] : v.terms()) {
        if (!I.contains(j) || I.contains(i)) continue;
        std::vector<int> rest = I.without(j).elems();
        // u_I = unit * u_{I\{j}} v_j, then Y_ij turns the trailing v_j into
        // v_i, and the result is sorted back.
        std::vector<int> with_j = rest, with_i = rest;
        with_j.push_back(j);
        with_i.push_back(i);
        ExtMono mj = ext_normalize(v.ambient(), with_j);
        ExtMono mi = ext_normalize(v.ambient(), with_i);
        out.add_term(mi.set, c * mi.coeff * mj.coeff.unit_inverse());
    }
    return out;
}

std::set<IndexSet> lower_support(int a, const std::set<IndexSet>& S) {
    std::set<IndexSet> out = S;
    for (const auto& I : S)
        if (I.contains(a) && !I.contains(a + 1)) out.insert(I.without(a).with(a + 1));
    return out;
}

std::set<IndexSet> uminus_span_indices(const Perm& y, int k) {
    const int N = y.size();
    IndexSet seed = apply_set(y, IndexSet::range(1, k));
    std::set<IndexSet> span{seed};
    std::vector<IndexSet> queue{seed};
    while (!queue.empty()) {
        IndexSet I = queue.back();
        queue.pop_back();
        for (int a = 1; a <= N - 1; ++a) {
            if (!I.contains(a) || I.contains(a + 1)) continue;
            IndexSet J = I.without(a).with(a + 1);
            if (span.insert(J).second) queue.push_back(J);
        }
    }
    std::set<IndexSet> expected;
    for (const auto& I : all_k_subsets(N, k))
        if (subset_leq(seed, I)) expected.insert(I);
    if (span != expected)
        throw std::logic_error("uminus_span_indices: closure differs from { I : I >= y({1..k}) }");
    return span;
}

std::set<IndexSet> ortho_complement_indices(const Perm& w, const Perm& y, int k) {
    if (!bruhat_leq(y, w)) throw std::domain_error("ortho_complement_indices: y not <= w");
    std::set<IndexSet> dem = demazure_index_sets(w, k);
    std::set<IndexSet> orbit = uminus_span_indices(y, k);
    std::set<IndexSet> out;
    for (const auto& I : dem)
        if (!orbit.count(I)) out.insert(I);
    if (out != complement_index_sets(w, y, k))
        throw std::logic_error(
            "ortho_complement_indices: representation and combinatorial routes disagree");
    return out;
}

namespace {

std::optional<RatFunc> proportionality(const QMPoly& p, const QMPoly& q) {
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    std::optional<RatFunc> s;
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (ip->first != iq->first) return std::nullopt;
        RatFunc r(ip->second, iq->second);
        if (!s)
            s = r;
        else if (*s != r)
            return std::nullopt;
    }
    return s;
}

}  // namespace

PairingResult rmatrix_pairing(int m, int n, int k, const IndexSet& I) {
    const int N = m + n;
    if (k < 1 || k > N - 1) throw std::domain_error("rmatrix_pairing: k out of range");
    if (I.size() != k) throw std::domain_error("rmatrix_pairing: |I| != k");
    const Perm cm = coxeter_power(N, m);
    const IndexSet top = apply_set(cm, IndexSet::range(1, k));
    if (!subset_leq(I, top)) throw std::domain_error("rmatrix_pairing: I not <= c^m({1..k})");
    const Perm wm = longest(m, N);

    // Mixed tensor in Lambda_q (x) R_q[M_{m,n}], degree k on the exterior
    // factor throughout.
    std::map<IndexSet, QMPoly> state;
    state.emplace(apply_set(wm, top), QMPoly::one(m, n));

    // Factors (1 + Y_{i,m+j} (x) x_ij) applied rightmost first: columns
    // m+1..m+n, rows 1..m within each column.
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= m; ++i) {
            const QMPoly xij = QMPoly::generator(m, n, i, j);
            std::vector<std::pair<IndexSet, QMPoly>> delta;
            for (const auto& [S, p] : state) {
                ExtVec img = raise_op(i, m + j, ExtVec::basis(N, S));
                if (img.is_zero()) continue;
                const auto& [Sp, unit] = *img.terms().begin();
                delta.emplace_back(Sp, (xij * p).scaled(unit));
            }
            for (auto& [Sp, dp] : delta) {
                auto it = state.find(Sp);
                if (it == state.end()) {
                    state.emplace(std::move(Sp), std::move(dp));
                } else {
                    it->second += dp;
                    if (it->second.is_zero()) state.erase(it);
                }
            }
        }
    }

    PairingResult out;
    out.k = k;
    out.I = I;
    out.minor = minor_from_index(m, n, k, I);

    auto it = state.find(apply_set(wm, I));
    if (it == state.end() || it->second.is_zero())
        throw std::logic_error("rmatrix_pairing: zero coefficient at u_{w_m(I)} for I=" + I.str());
    out.paired = it->second;

    auto s = proportionality(out.paired, qminor(m, n, out.minor));
    if (!s)
        throw std::logic_error("rmatrix_pairing: result for I=" + I.str() +
                               " is not proportional to the predicted minor " + out.minor.str());
    out.scalar = *s;
    return out;
}

std::vector<std::pair<int, IndexSet>> admissible_pairs(int m, int n) {
    const int N = m + n;
    const Perm cm = coxeter_power(N, m);
    std::vector<std::pair<int, IndexSet>> out;
    for (int k = 1; k <= N - 1; ++k) {
        IndexSet top = apply_set(cm, IndexSet::range(1, k));
        for (const auto& I : all_k_subsets(N, k))
            if (subset_leq(I, top)) out.emplace_back(k, I);
    }
    return out;
}

std::vector<PairingResult> pairing_sweep(int m, int n, ExecMode mode) {
    auto pairs = admissible_pairs(m, n);
    std::vector<PairingResult> results(pairs.size());
    parallel_for(mode, pairs.size(), [&](std::size_t t) {
        results[t] = rmatrix_pairing(m, n, pairs[t].first, pairs[t].second);
    });
    return results;
}

PairingReport verify_rmatrix(int m, int n, ExecMode mode) {
    PairingReport rep;
    rep.m = m;
    rep.n = n;
    auto pairs = admissible_pairs(m, n);
    std::vector<PairingResult> results(pairs.size());
    std::vector<std::string> errors(pairs.size());
    parallel_for(mode, pairs.size(), [&](std::size_t t) {
        try {
            results[t] = rmatrix_pairing(m, n, pairs[t].first, pairs[t].second);
        } catch (const std::exception& e) {
            errors[t] = e.what();
        }
    });
    rep.ok = true;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (!errors[t].empty()) {
            rep.ok = false;
            rep.failures.push_back(errors[t]);
        } else {
            rep.results.push_back(results[t]);
        }
    }
    return rep;
}

namespace {

// Y_ij as a linear map on the whole degree-k piece.
ExtVec apply_y(int N, int i, int j, const ExtVec& v) { return raise_op(i, j, v); }

bool check_rec1(int N, std::vector<std::string>* failures) {
    bool ok = true;
    for (int i = 1; i < N; ++i)
        for (int j = i + 2; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (const auto& I : all_k_subsets(N, k)) {
                    ExtVec u = ExtVec::basis(N, I);
                    ExtVec lhs = apply_y(N, i, j, u);
                    ExtVec rhs = apply_y(N, i, j - 1, apply_y(N, j - 1, j, u)) -
                                 apply_y(N, j - 1, j, apply_y(N, i, j - 1, u))
                                     .scaled(LaurentPoly::q_power(-1));
                    if (lhs != rhs) {
                        ok = false;
                        if (failures)
                            failures->push_back("rec1 fails at Y_{" + std::to_string(i) + "," +
                                                std::to_string(j) + "} on u_" + I.str());
                    }
                }
    return ok;
}

bool check_yid(int N, std::vector<std::string>* failures) {
    bool ok = true;
    for (int j = 2; j <= N; ++j)
        for (int i = 1; i < j; ++i) {
            // Subsets of {1..N}\{j}: Yid2 says Y_ij kills u_I; Yid1 says
            // Y_ij(u_I' v_j) = u_I' v_i.
            std::vector<int> letters;
            for (int a = 1; a <= N; ++a)
                if (a != j) letters.push_back(a);
            const size_t L = letters.size();
            for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
                std::vector<int> word;
                for (size_t b = 0; b < L; ++b)
                    if (mask & (size_t{1} << b)) word.push_back(letters[b]);

                ExtMono plain = ext_normalize(N, word);
                ExtVec u0 = ExtVec::basis(N, plain.set).scaled(plain.coeff);
                if (!raise_op(i, j, u0).is_zero()) {
                    ok = false;
                    if (failures) failures->push_back("Yid2 fails at u_" + plain.set.str());
                }

                std::vector<int> with_j = word, with_i = word;
                with_j.push_back(j);
                with_i.push_back(i);
                ExtMono mj = ext_normalize(N, with_j);
                ExtMono mi = ext_normalize(N, with_i);
                ExtVec lhs = raise_op(
                    i, j, ExtVec::basis(N, mj.set).scaled(mj.coeff));
                ExtVec rhs(N, static_cast<int>(word.size()) + 1);
                if (!mi.zero) rhs.add_term(mi.set, mi.coeff);
                if (lhs != rhs) {
                    ok = false;
                    if (failures)
                        failures->push_back("Yid1 fails at Y_{" + std::to_string(i) + "," +
                                            std::to_string(j) + "}, I'=" + plain.set.str());
                }
            }
        }
    return ok;
}

bool check_nilpotent(int N, std::vector<std::string>* failures) {
    bool ok = true;
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (const auto& I : all_k_subsets(N, k)) {
                    ExtVec twice = raise_op(i, j, raise_op(i, j, ExtVec::basis(N, I)));
                    if (!twice.is_zero()) {
                        ok = false;
                        if (failures)
                            failures->push_back("Y^2 != 0 at Y_{" + std::to_string(i) + "," +
                                                std::to_string(j) + "} on u_" + I.str());
                    }
                }
    return ok;
}

}  // namespace

DemazureReport verify_demazure(int m, int n) {
    DemazureReport rep;
    rep.m = m;
    rep.n = n;
    const int N = m + n;
    const Perm w = coxeter_power(N, m);
    rep.ok = true;

    for (const Perm& y : interval_below(w)) {
        for (int k = 1; k <= N - 1; ++k) {
            try {
                ortho_complement_indices(w, y, k);
            } catch (const std::exception& e) {
                rep.ok = false;
                rep.failures.push_back("y=" + y.str() + " k=" + std::to_string(k) + ": " +
                                       e.what());
            }
            ++rep.routes_checked;
        }
    }

    if (!check_rec1(N, &rep.failures)) rep.ok = false;
    if (!check_yid(N, &rep.failures)) rep.ok = false;
    if (!check_nilpotent(N, &rep.failures)) rep.ok = false;
    rep.operators_checked = N * (N - 1) / 2;
    return rep;
}

}  // namespace qmprime
