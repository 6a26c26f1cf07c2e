#include "qmprime/grobner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qmprime {

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return false;
    for (size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (size_t v = 0; v < a.size(); ++v) out[v] = std::max(a[v], b[v]);
    return out;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
    Monomial out(b.size());
    for (size_t v = 0; v < b.size(); ++v) {
        out[v] = b[v] - a[v];
        if (out[v] < 0) throw std::logic_error("mono_quotient: not divisible");
    }
    return out;
}

GBPoly GBPoly::from_quantum(const QMPoly& f) {
    GBPoly out(f.m(), f.n(), AlgebraMode::quantum);
    for (const auto& [mono, c] : f.terms()) out.terms_.emplace(mono, RatFunc(c));
    return out;
}

GBPoly GBPoly::from_commutative(const CPoly& f) {
    GBPoly out(f.m(), f.n(), AlgebraMode::commutative);
    for (const auto& [mono, c] : f.terms()) out.terms_.emplace(mono, RatFunc::from_rational(c));
    return out;
}

const Monomial& GBPoly::leading_monomial() const {
    if (is_zero()) throw std::domain_error("GBPoly::leading_monomial of zero");
    return terms_.begin()->first;
}

const RatFunc& GBPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("GBPoly::leading_coeff of zero");
    return terms_.begin()->second;
}

void GBPoly::add_term(const Monomial& mono, const RatFunc& c) {
    if (mono.size() != static_cast<size_t>(m_ * n_))
        throw std::invalid_argument("GBPoly::add_term: monomial size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GBPoly GBPoly::operator-() const {
    GBPoly out(m_, n_, mode_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

GBPoly& GBPoly::operator+=(const GBPoly& o) {
    if (m_ != o.m_ || n_ != o.n_ || mode_ != o.mode_)
        throw std::invalid_argument("GBPoly: shape mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

GBPoly& GBPoly::operator-=(const GBPoly& o) { return *this += -o; }

GBPoly GBPoly::scaled(const RatFunc& c) const {
    GBPoly out(m_, n_, mode_);
    if (c.is_zero()) return out;
    for (const auto& [mono, k] : terms_) out.terms_.emplace(mono, k * c);
    return out;
}

GBPoly GBPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

bool GBPoly::operator==(const GBPoly& o) const {
    return m_ == o.m_ && n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_;
}

bool GBPoly::is_homogeneous() const {
    std::optional<MultiDeg> deg;
    for (const auto& [mono, c] : terms_) {
        MultiDeg d = mono_multidegree(m_, n_, mono);
        if (!deg)
            deg = std::move(d);
        else if (*deg != d)
            return false;
    }
    return true;
}

std::string GBPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << mono_str(n_, mono);
    }
    return os.str();
}

namespace {

std::vector<int> mono_word(const Monomial& mono) {
    std::vector<int> word;
    for (size_t v = 0; v < mono.size(); ++v)
        for (int r = 0; r < mono[v]; ++r) word.push_back(static_cast<int>(v));
    return word;
}

GBPoly mul_mono(const GBPoly& f, const Monomial& d, bool mono_on_left) {
    GBPoly out(f.m(), f.n(), f.mode());
    if (f.mode() == AlgebraMode::commutative) {
        for (const auto& [mono, c] : f.terms()) {
            Monomial prod(mono.size());
            for (size_t v = 0; v < mono.size(); ++v) prod[v] = mono[v] + d[v];
            out.add_term(prod, c);
        }
        return out;
    }
    std::vector<int> dw = mono_word(d);
    for (const auto& [mono, c] : f.terms()) {
        std::vector<int> word;
        if (mono_on_left) {
            word = dw;
            std::vector<int> fw = mono_word(mono);
            word.insert(word.end(), fw.begin(), fw.end());
        } else {
            word = mono_word(mono);
            word.insert(word.end(), dw.begin(), dw.end());
        }
        QMPoly s = straighten_word(f.m(), f.n(), word, LaurentPoly(1));
        for (const auto& [mono2, c2] : s.terms()) out.add_term(mono2, c * RatFunc(c2));
    }
    return out;
}

// Full normal form against an explicit list; skip != nullptr excludes one
// element (used by inter-reduction).
GBPoly normal_form(GBPoly r, const std::vector<GBPoly>& basis, bool right_side,
                   const GBPoly* skip = nullptr) {
    GBPoly out(r.m(), r.n(), r.mode());
    while (!r.is_zero()) {
        const Monomial& mu = r.leading_monomial();
        const GBPoly* g = nullptr;
        for (const auto& cand : basis) {
            if (&cand == skip || cand.is_zero()) continue;
            if (mono_divides(cand.leading_monomial(), mu)) {
                g = &cand;
                break;
            }
        }
        if (!g) {
            RatFunc lc = r.leading_coeff();
            out.add_term(mu, lc);
            r.add_term(mu, -lc);
            continue;
        }
        Monomial d = mono_quotient(mu, g->leading_monomial());
        GBPoly h = right_side ? mul_mono(*g, d, false) : mul_mono(*g, d, true);
        if (h.leading_monomial() != mu)
            throw std::logic_error("normal_form: product leading monomial drifted");
        r -= h.scaled(r.leading_coeff() / h.leading_coeff());
    }
    return out;
}

// Buchberger completion on one side. Deterministic: the pending pair with
// the smallest lcm (then smallest indices) is processed first.
std::vector<GBPoly> buchberger(std::vector<GBPoly> basis, bool right_side,
                               const std::optional<long>& bound, bool* truncated) {
    std::vector<GBPoly> gens;
    for (auto& g : basis)
        if (!g.is_zero()) gens.push_back(g.monic());

    struct PairKey {
        Monomial lcm;
        size_t i, j;
        bool operator<(const PairKey& o) const {
            TermOrderGreater gt;
            if (lcm != o.lcm) return gt(o.lcm, lcm);  // smaller lcm first
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<PairKey> pending;
    auto queue_pairs_with = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pending.insert(
                {mono_lcm(gens[i].leading_monomial(), gens[j].leading_monomial()), i, j});
    };
    for (size_t j = 1; j < gens.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        if (bound && mono_degree(pk.lcm) > *bound) {
            if (truncated) *truncated = true;
            continue;
        }
        const GBPoly& gi = gens[pk.i];
        const GBPoly& gj = gens[pk.j];
        Monomial di = mono_quotient(pk.lcm, gi.leading_monomial());
        Monomial dj = mono_quotient(pk.lcm, gj.leading_monomial());
        GBPoly hi = mul_mono(gi, di, !right_side);
        GBPoly hj = mul_mono(gj, dj, !right_side);
        GBPoly s = hi.scaled(hi.leading_coeff().inverse()) -
                   hj.scaled(hj.leading_coeff().inverse());
        GBPoly r = normal_form(std::move(s), gens, right_side);
        if (!r.is_zero()) {
            gens.push_back(r.monic());
            queue_pairs_with(gens.size() - 1);
        }
    }
    return gens;
}

// Minimize and tail-reduce; output monic with leading monomials descending.
std::vector<GBPoly> interreduce(std::vector<GBPoly> basis, bool right_side) {
    std::vector<GBPoly> nonzero;
    for (auto& g : basis)
        if (!g.is_zero()) nonzero.push_back(g.monic());
    std::sort(nonzero.begin(), nonzero.end(), [](const GBPoly& a, const GBPoly& b) {
        TermOrderGreater gt;
        return gt(b.leading_monomial(), a.leading_monomial());  // ascending
    });
    std::vector<GBPoly> kept;
    for (const auto& g : nonzero) {
        bool redundant = false;
        for (const auto& h : kept)
            if (mono_divides(h.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    for (auto& g : kept) g = normal_form(g, kept, right_side, &g).monic();
    std::sort(kept.begin(), kept.end(), [](const GBPoly& a, const GBPoly& b) {
        TermOrderGreater gt;
        return gt(a.leading_monomial(), b.leading_monomial());  // descending
    });
    return kept;
}

bool right_sided(const GroebnerBasis& b) { return b.side == IdealSide::right; }

}  // namespace

GBPoly mul_mono_left(const Monomial& d, const GBPoly& f) { return mul_mono(f, d, true); }
GBPoly mul_mono_right(const GBPoly& f, const Monomial& d) { return mul_mono(f, d, false); }

GBPoly reduce(const GBPoly& f, const GroebnerBasis& basis) {
    if (basis.truncated)
        throw std::logic_error("reduce: basis was degree-truncated; raise the bound");
    if (f.m() != basis.m || f.n() != basis.n || f.mode() != basis.mode)
        throw std::invalid_argument("reduce: algebra mismatch");
    return normal_form(f, basis.gens, right_sided(basis));
}

GBPoly reduce(const QMPoly& f, const GroebnerBasis& basis) {
    return reduce(GBPoly::from_quantum(f), basis);
}

void assert_pbw_compatible(int m, int n) {
    const int nv = m * n;
    TermOrderGreater gt;
    for (int u = 0; u < nv; ++u)
        for (int v = 0; v < u; ++v) {
            QMPoly s = straighten_word(m, n, {u, v}, LaurentPoly(1));
            Monomial sorted(static_cast<size_t>(nv), 0);
            ++sorted[static_cast<size_t>(v)];
            ++sorted[static_cast<size_t>(u)];
            auto it = s.terms().find(sorted);
            if (it == s.terms().end() || !it->second.is_single_term())
                throw std::logic_error("assert_pbw_compatible: missing swapped leading term");
            for (const auto& [mono, c] : s.terms())
                if (mono != sorted && !gt(sorted, mono))
                    throw std::logic_error("assert_pbw_compatible: correction term not smaller");
        }
}

namespace {

GroebnerBasis finish_basis(std::vector<GBPoly> gens, AlgebraMode mode, IdealSide side, int m,
                           int n, std::optional<long> bound, bool truncated) {
    GroebnerBasis b;
    b.mode = mode;
    b.side = side;
    b.m = m;
    b.n = n;
    b.degree_bound = bound;
    b.truncated = truncated;
    b.gens = interreduce(std::move(gens), side == IdealSide::right);
    return b;
}

}  // namespace

GroebnerBasis two_sided_groebner(int m, int n, const std::vector<QMPoly>& gens,
                                 std::optional<long> bound) {
    if (gens.empty())
        return GroebnerBasis{AlgebraMode::quantum, IdealSide::two_sided, m, n, {}, bound, false};
    if (gens.front().m() != m || gens.front().n() != n)
        throw std::invalid_argument("two_sided_groebner: dimension mismatch");
    assert_pbw_compatible(m, n);
    bool truncated = false;
    std::vector<GBPoly> work;
    for (const auto& g : gens) work.push_back(GBPoly::from_quantum(g));
    work = buchberger(std::move(work), /*right_side=*/false, bound, &truncated);

    const int nv = m * n;
    while (true) {
        std::vector<GBPoly> added;
        for (const auto& g : work) {
            for (int v = 0; v < nv; ++v) {
                Monomial d(static_cast<size_t>(nv), 0);
                d[static_cast<size_t>(v)] = 1;
                GBPoly gv = mul_mono_right(g, d);
                if (bound && !gv.is_zero() && mono_degree(gv.leading_monomial()) > *bound) {
                    truncated = true;
                    continue;
                }
                GBPoly r = normal_form(gv, work, /*right_side=*/false);
                if (!r.is_zero()) added.push_back(r.monic());
            }
        }
        if (added.empty()) break;
        for (auto& r : added) work.push_back(std::move(r));
        work = buchberger(std::move(work), /*right_side=*/false, bound, &truncated);
    }
    return finish_basis(std::move(work), AlgebraMode::quantum, IdealSide::two_sided, m, n, bound,
                        truncated);
}

GroebnerBasis right_groebner(int m, int n, const std::vector<QMPoly>& gens,
                             std::optional<long> bound) {
    if (gens.empty())
        return GroebnerBasis{AlgebraMode::quantum, IdealSide::right, m, n, {}, bound, false};
    if (gens.front().m() != m || gens.front().n() != n)
        throw std::invalid_argument("right_groebner: dimension mismatch");
    assert_pbw_compatible(m, n);
    bool truncated = false;
    std::vector<GBPoly> work;
    for (const auto& g : gens) work.push_back(GBPoly::from_quantum(g));
    work = buchberger(std::move(work), /*right_side=*/true, bound, &truncated);
    return finish_basis(std::move(work), AlgebraMode::quantum, IdealSide::right, m, n, bound,
                        truncated);
}

GroebnerBasis commutative_groebner(int m, int n, const std::vector<CPoly>& gens,
                                   std::optional<long> bound) {
    if (gens.empty())
        return GroebnerBasis{AlgebraMode::commutative, IdealSide::two_sided, m, n, {}, bound,
                             false};
    if (gens.front().m() != m || gens.front().n() != n)
        throw std::invalid_argument("commutative_groebner: dimension mismatch");
    bool truncated = false;
    std::vector<GBPoly> work;
    for (const auto& g : gens) work.push_back(GBPoly::from_commutative(g));
    work = buchberger(std::move(work), /*right_side=*/false, bound, &truncated);
    return finish_basis(std::move(work), AlgebraMode::commutative, IdealSide::two_sided, m, n,
                        bound, truncated);
}

bool ideal_contains(const std::vector<GBPoly>& a_gens, const GroebnerBasis& b) {
    for (const auto& g : a_gens)
        if (!reduce(g, b).is_zero()) return false;
    return true;
}

bool ideal_contains(const std::vector<QMPoly>& a_gens, const GroebnerBasis& b) {
    for (const auto& g : a_gens)
        if (!reduce(g, b).is_zero()) return false;
    return true;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    return ideal_contains(a.gens, b) && ideal_contains(b.gens, a);
}

PosetReport verify_poset(int m, int n, ExecMode mode) {
    PosetReport rep;
    rep.m = m;
    rep.n = n;
    const int N = m + n;
    const Perm w = coxeter_power(N, m);
    const std::vector<Perm> ys = interval_below(w, mode);
    const size_t count = ys.size();

    struct PerIdeal {
        std::vector<MinorSpec> specs;
        std::vector<GBPoly> gens;
        GroebnerBasis right_basis, two_basis;
        bool homogeneous = true;
        bool right_eq = false;
    };
    std::vector<PerIdeal> data(count);

    parallel_for(mode, count, [&](std::size_t t) {
        PerIdeal& d = data[t];
        d.specs = aq_minor_specs(ys[t], m, n);
        std::vector<QMPoly> gens = aq_generators(ys[t], m, n);
        for (const auto& g : gens) d.gens.push_back(GBPoly::from_quantum(g));
        d.right_basis = right_groebner(m, n, gens);
        d.two_basis = two_sided_groebner(m, n, gens);
        for (const auto& g : d.right_basis.gens)
            if (!g.is_homogeneous()) d.homogeneous = false;
        for (const auto& g : d.two_basis.gens)
            if (!g.is_homogeneous()) d.homogeneous = false;
        d.right_eq = ideal_equal(d.right_basis, d.two_basis);
    });

    rep.inclusion.assign(count, std::vector<char>(count, 0));
    rep.bruhat.assign(count, std::vector<char>(count, 0));
    parallel_for(mode, count * count, [&](std::size_t idx) {
        const size_t a = idx / count, b = idx % count;
        rep.bruhat[a][b] = bruhat_leq(ys[a], ys[b]);
        rep.inclusion[a][b] = ideal_contains(data[a].gens, data[b].two_basis);
    });

    rep.ok = true;
    for (size_t t = 0; t < count; ++t) {
        PosetIdealInfo info;
        info.y = ys[t];
        info.generators = data[t].specs;
        info.right_basis_size = data[t].right_basis.gens.size();
        info.two_sided_basis_size = data[t].two_basis.gens.size();
        info.homogeneous = data[t].homogeneous;
        info.right_equals_two_sided = data[t].right_eq;
        if (!info.homogeneous) {
            rep.ok = false;
            rep.failures.push_back("inhomogeneous basis element for y=" + ys[t].str());
        }
        if (!info.right_eq) {
            rep.ok = false;
            rep.failures.push_back("right ideal != two-sided ideal for y=" + ys[t].str());
        }
        rep.ideals.push_back(std::move(info));
    }
    for (size_t a = 0; a < count; ++a)
        for (size_t b = 0; b < count; ++b) {
            if (rep.inclusion[a][b] != rep.bruhat[a][b]) {
                rep.ok = false;
                rep.failures.push_back("inclusion(" + ys[a].str() + " in " + ys[b].str() + ") = " +
                                       (rep.inclusion[a][b] ? "true" : "false") +
                                       " but Bruhat says " +
                                       (rep.bruhat[a][b] ? "true" : "false"));
            }
            if (a != b && rep.inclusion[a][b] && rep.inclusion[b][a]) {
                rep.ok = false;
                rep.failures.push_back("ideals of " + ys[a].str() + " and " + ys[b].str() +
                                       " coincide");
            }
        }
    return rep;
}

}  // namespace qmprime
