#include "qmprime/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmprime {

long mono_degree(const Monomial& mono) {
    long d = 0;
    for (int e : mono) d += e;
    return d;
}

MultiDeg mono_multidegree(int m, int n, const Monomial& mono) {
    MultiDeg deg(static_cast<size_t>(m + n), 0);
    for (size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        int i = var_row(n, static_cast<int>(v));
        int j = var_col(n, static_cast<int>(v));
        deg[static_cast<size_t>(i - 1)] += mono[v];
        deg[static_cast<size_t>(m + j - 1)] -= mono[v];
    }
    return deg;
}

std::string mono_str(int n, const Monomial& mono) {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << var_row(n, static_cast<int>(v)) << var_col(n, static_cast<int>(v));
        if (mono[v] > 1) os << "^" << mono[v];
    }
    if (first) os << "1";
    return os.str();
}

namespace {

// Degree-lexicographic with earlier variables heavier; used only for display
// here (the Groebner layer has its own copy as a map comparator).
bool deglex_greater(const Monomial& a, const Monomial& b) {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Monomial word_to_mono(int nvars, const std::vector<int>& word) {
    Monomial mono(static_cast<size_t>(nvars), 0);
    for (int v : word) ++mono[static_cast<size_t>(v)];
    return mono;
}

std::vector<int> mono_to_word(const Monomial& mono) {
    std::vector<int> word;
    for (size_t v = 0; v < mono.size(); ++v)
        for (int r = 0; r < mono[v]; ++r) word.push_back(static_cast<int>(v));
    return word;
}

}  // namespace

QMPoly QMPoly::one(int m, int n) {
    QMPoly p(m, n);
    p.add_term(Monomial(static_cast<size_t>(m * n), 0), LaurentPoly(1));
    return p;
}

QMPoly QMPoly::generator(int m, int n, int i, int j) {
    if (i < 1 || i > m || j < 1 || j > n)
        throw std::invalid_argument("QMPoly::generator: index out of range");
    Monomial mono(static_cast<size_t>(m * n), 0);
    mono[static_cast<size_t>(var_index(n, i, j))] = 1;
    return monomial_term(m, n, std::move(mono), LaurentPoly(1));
}

QMPoly QMPoly::monomial_term(int m, int n, Monomial mono, LaurentPoly coeff) {
    QMPoly p(m, n);
    p.add_term(mono, coeff);
    return p;
}

void QMPoly::add_term(const Monomial& mono, const LaurentPoly& coeff) {
    if (mono.size() != static_cast<size_t>(m_ * n_))
        throw std::invalid_argument("QMPoly::add_term: monomial size mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

QMPoly QMPoly::operator-() const {
    QMPoly out(m_, n_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

QMPoly& QMPoly::operator+=(const QMPoly& o) {
    if (m_ == 0 && n_ == 0) {
        m_ = o.m_;
        n_ = o.n_;
    }
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("QMPoly: dimension mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

QMPoly& QMPoly::operator-=(const QMPoly& o) { return *this += -o; }

QMPoly operator*(const QMPoly& a, const QMPoly& b) {
    if (a.m() != b.m() || a.n() != b.n()) throw std::invalid_argument("QMPoly: dimension mismatch");
    QMPoly out(a.m(), a.n());
    for (const auto& [ma, ca] : a.terms()) {
        std::vector<int> wa = mono_to_word(ma);
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> word = wa;
            std::vector<int> wb = mono_to_word(mb);
            word.insert(word.end(), wb.begin(), wb.end());
            out += straighten_word(a.m(), a.n(), word, ca * cb);
        }
    }
    return out;
}

QMPoly& QMPoly::operator*=(const QMPoly& o) {
    *this = *this * o;
    return *this;
}

QMPoly QMPoly::scaled(const LaurentPoly& c) const {
    QMPoly out(m_, n_);
    if (c.is_zero()) return out;
    for (const auto& [mono, k] : terms_) out.terms_.emplace(mono, k * c);
    return out;
}

bool QMPoly::operator==(const QMPoly& o) const {
    return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string QMPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return deglex_greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const LaurentPoly& c = t->second;
        std::string cs;
        bool neg = false;
        if (c.is_single_term()) {
            BigInt k = c.terms().begin()->second;
            long e = c.terms().begin()->first;
            if (k < 0) {
                neg = true;
                k = -k;
            }
            cs = LaurentPoly::term(k, e).str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string ms = mono_str(n_, t->first);
        if (cs == "1")
            os << ms;
        else if (ms == "1")
            os << cs;
        else
            os << cs << "*" << ms;
    }
    return os.str();
}

QMPoly straighten_word(int m, int n, const std::vector<int>& word, const LaurentPoly& coeff) {
    struct Item {
        LaurentPoly c;
        std::vector<int> w;
    };
    QMPoly out(m, n);
    if (coeff.is_zero()) return out;
    const LaurentPoly qinv = LaurentPoly::q_power(-1);
    const LaurentPoly qdiff = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);

    std::vector<Item> work;
    work.push_back({coeff, word});
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        size_t p = 0;
        bool sorted = true;
        for (; p + 1 < it.w.size(); ++p)
            if (it.w[p] > it.w[p + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            out.add_term(word_to_mono(m * n, it.w), it.c);
            continue;
        }
        const int va = it.w[p], vb = it.w[p + 1];
        const int a = var_row(n, va), b = var_col(n, va);
        const int c = var_row(n, vb), d = var_col(n, vb);
        if (a == c || b == d) {
            // same row or same column: x_ab x_cd = q^-1 x_cd x_ab
            std::swap(it.w[p], it.w[p + 1]);
            it.c *= qinv;
            work.push_back(std::move(it));
        } else if (b < d) {
            // a > c, b < d: the variables commute
            std::swap(it.w[p], it.w[p + 1]);
            work.push_back(std::move(it));
        } else {
            // a > c, b > d: x_ab x_cd = x_cd x_ab - (q - q^-1) x_cb x_ad
            Item lower = it;
            lower.c *= -qdiff;
            lower.w[p] = var_index(n, c, b);
            lower.w[p + 1] = var_index(n, a, d);
            std::swap(it.w[p], it.w[p + 1]);
            work.push_back(std::move(it));
            work.push_back(std::move(lower));
        }
    }
    return out;
}

QMPoly qminor(int m, int n, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("qminor: size mismatch");
    const int k = rows.size();
    if (k == 0) return QMPoly::one(m, n);
    for (int i : rows.elems())
        if (i > m) throw std::invalid_argument("qminor: row out of range");
    for (int j : cols.elems())
        if (j > n) throw std::invalid_argument("qminor: column out of range");
    QMPoly out(m, n);
    std::vector<int> sigma(static_cast<size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) ++inv;
        // Rows ascend, so the term is already normal-ordered.
        Monomial mono(static_cast<size_t>(m * n), 0);
        for (int i = 0; i < k; ++i)
            ++mono[static_cast<size_t>(var_index(n, rows[i], cols[sigma[static_cast<size_t>(i)]]))];
        BigInt sign = (inv % 2 == 0) ? 1 : -1;
        out.add_term(mono, LaurentPoly::term(sign, inv));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

QMPoly qminor(int m, int n, const MinorSpec& spec) { return qminor(m, n, spec.rows, spec.cols); }

QMPoly qminor_second(int m, int n, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("qminor_second: size mismatch");
    const int k = rows.size();
    if (k == 0) return QMPoly::one(m, n);
    QMPoly out(m, n);
    std::vector<int> sigma(static_cast<size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) ++inv;
        std::vector<int> word;
        for (int i = k - 1; i >= 0; --i)
            word.push_back(var_index(n, rows[i], cols[sigma[static_cast<size_t>(i)]]));
        BigInt sign = (inv % 2 == 0) ? 1 : -1;
        out += straighten_word(m, n, word, LaurentPoly::term(sign, -inv));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<AqEntry> aq_table(const Perm& y, int m, int n) {
    const int N = m + n;
    if (y.size() != N) throw std::domain_error("aq_table: y must lie in S_{m+n}");
    const Perm w = coxeter_power(N, m);
    if (!bruhat_leq(y, w)) throw std::domain_error("aq_table: y not <= c^m");
    std::vector<AqEntry> out;
    std::set<MinorSpec> seen;
    for (int k = 1; k <= N - 1; ++k) {
        for (const auto& I : complement_index_sets(w, y, k)) {
            AqEntry e;
            e.k = k;
            e.I = I;
            e.minor = minor_from_index(m, n, k, I);
            e.duplicate = !seen.insert(e.minor).second;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<MinorSpec> aq_minor_specs(const Perm& y, int m, int n) {
    std::vector<MinorSpec> out;
    for (const auto& e : aq_table(y, m, n))
        if (!e.duplicate) out.push_back(e.minor);
    return out;
}

std::vector<QMPoly> aq_generators(const Perm& y, int m, int n) {
    std::vector<QMPoly> out;
    for (const auto& spec : aq_minor_specs(y, m, n)) out.push_back(qminor(m, n, spec));
    return out;
}

std::optional<MultiDeg> multidegree(const QMPoly& f) {
    if (f.is_zero()) return std::nullopt;
    std::optional<MultiDeg> deg;
    for (const auto& [mono, c] : f.terms()) {
        MultiDeg d = mono_multidegree(f.m(), f.n(), mono);
        if (!deg)
            deg = std::move(d);
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

QMPoly scale_action(const std::vector<long>& ab, const QMPoly& f) {
    if (ab.size() != static_cast<size_t>(f.m() + f.n()))
        throw std::invalid_argument("scale_action: weight vector size mismatch");
    QMPoly out(f.m(), f.n());
    for (const auto& [mono, c] : f.terms()) {
        long e = 0;
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            int i = var_row(f.n(), static_cast<int>(v));
            int j = var_col(f.n(), static_cast<int>(v));
            e += mono[v] * (ab[static_cast<size_t>(i - 1)] - ab[static_cast<size_t>(f.m() + j - 1)]);
        }
        out.add_term(mono, c * LaurentPoly::q_power(e));
    }
    return out;
}

CPoly CPoly::one(int m, int n) {
    CPoly p(m, n);
    p.add_term(Monomial(static_cast<size_t>(m * n), 0), 1);
    return p;
}

CPoly CPoly::generator(int m, int n, int i, int j) {
    if (i < 1 || i > m || j < 1 || j > n)
        throw std::invalid_argument("CPoly::generator: index out of range");
    CPoly p(m, n);
    Monomial mono(static_cast<size_t>(m * n), 0);
    mono[static_cast<size_t>(var_index(n, i, j))] = 1;
    p.add_term(mono, 1);
    return p;
}

void CPoly::add_term(const Monomial& mono, const Rational& coeff) {
    if (mono.size() != static_cast<size_t>(m_ * n_))
        throw std::invalid_argument("CPoly::add_term: monomial size mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

CPoly CPoly::operator-() const {
    CPoly out(m_, n_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    if (m_ == 0 && n_ == 0) {
        m_ = o.m_;
        n_ = o.n_;
    }
    if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("CPoly: dimension mismatch");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) { return *this += -o; }

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.m() != b.m() || a.n() != b.n()) throw std::invalid_argument("CPoly: dimension mismatch");
    CPoly out(a.m(), a.n());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial mono(ma.size());
            for (size_t v = 0; v < ma.size(); ++v) mono[v] = ma[v] + mb[v];
            out.add_term(mono, ca * cb);
        }
    return out;
}

CPoly CPoly::scaled(const Rational& c) const {
    CPoly out(m_, n_);
    if (c == 0) return out;
    for (const auto& [mono, k] : terms_) out.terms_.emplace(mono, k * c);
    return out;
}

CPoly CPoly::derivative(int i, int j) const {
    CPoly out(m_, n_);
    const size_t v = static_cast<size_t>(var_index(n_, i, j));
    for (const auto& [mono, c] : terms_) {
        if (mono[v] == 0) continue;
        Monomial d = mono;
        --d[v];
        out.add_term(d, c * mono[v]);
    }
    return out;
}

bool CPoly::operator==(const CPoly& o) const {
    return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return deglex_greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string ms = mono_str(n_, t->first);
        if (c == 1 && ms != "1")
            os << ms;
        else if (ms == "1")
            os << c.get_str();
        else
            os << c.get_str() << "*" << ms;
    }
    return os.str();
}

CPoly specialize_q1(const QMPoly& f) {
    CPoly out(f.m(), f.n());
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, Rational(c.eval_one()));
    return out;
}

CPoly cminor(int m, int n, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("cminor: size mismatch");
    const int k = rows.size();
    if (k == 0) return CPoly::one(m, n);
    CPoly out(m, n);
    std::vector<int> sigma(static_cast<size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(j)]) ++inv;
        Monomial mono(static_cast<size_t>(m * n), 0);
        for (int i = 0; i < k; ++i)
            ++mono[static_cast<size_t>(var_index(n, rows[i], cols[sigma[static_cast<size_t>(i)]]))];
        out.add_term(mono, (inv % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

CPoly cminor(int m, int n, const MinorSpec& spec) { return cminor(m, n, spec.rows, spec.cols); }

}  // namespace qmprime
