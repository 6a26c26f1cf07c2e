#include <doctest.h>

#include <random>
#include <vector>

#include "qmprime/laurent.hpp"

using namespace qmprime;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
}

// Independent oracle for the balanced q-integer: the explicit sum
// q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly q_int_oracle(long n) {
    LaurentPoly p;
    for (long e = n - 1; e >= 1 - n; e -= 2) p.add_term(e, 1);
    return p;
}

// Independent oracle for the Gaussian binomial via the q-Pascal recurrence
// [n m] = q^{n-m} [n-1 m-1] + q^{-m} [n-1 m].
LaurentPoly q_binom_oracle(long n, long m) {
    if (m == 0 || m == n) return LaurentPoly(1);
    return LaurentPoly::q_power(n - m) * q_binom_oracle(n - 1, m - 1) +
           LaurentPoly::q_power(-m) * q_binom_oracle(n - 1, m);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    LaurentPoly p;
    int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        long e = static_cast<long>(rng() % 11) - 5;
        long c = static_cast<long>(rng() % 19) - 9;
        p.add_term(e, BigInt(c));
    }
    return p;
}

long binomial(long n, long m) {
    long r = 1;
    for (long i = 0; i < m; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("q_int values") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(2) == parse_terms({{1, 1}, {-1, 1}}));
    CHECK(q_int(3) == parse_terms({{2, 1}, {0, 1}, {-2, 1}}));
    for (long n = 0; n <= 12; ++n) CHECK(q_int(n) == q_int_oracle(n));
}

TEST_CASE("q_fact and q_binom values") {
    CHECK(q_fact(0) == LaurentPoly(1));
    CHECK(q_fact(1) == LaurentPoly(1));
    CHECK(q_binom(2, 1) == parse_terms({{1, 1}, {-1, 1}}));
    CHECK(q_binom(4, 2) == parse_terms({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    CHECK_THROWS_AS(q_binom(2, 3), std::domain_error);
}

TEST_CASE("q_binom symmetry, specialization, oracle") {
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m <= n; ++m) {
            LaurentPoly b = q_binom(n, m);
            CHECK(b == q_binom(n, n - m));
            CHECK(eval_q1(b) == BigInt(binomial(n, m)));
            CHECK(b == q_binom_oracle(n, m));
        }
}

TEST_CASE("eval_q1 and div_qminus1") {
    CHECK(eval_q1(parse_terms({{1, 1}, {-1, 1}})) == 2);
    CHECK(div_qminus1(parse_terms({{1, 1}, {-1, -1}})) == parse_terms({{0, 1}, {-1, 1}}));
    CHECK(div_qminus1(parse_terms({{2, 1}, {0, -1}})) == parse_terms({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(div_qminus1(LaurentPoly(1)), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division round trip") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        auto quot = divide_exact(a * b, b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
    CHECK_FALSE(divide_exact(LaurentPoly::q(), parse_terms({{1, 1}, {0, 1}})).has_value());
}

TEST_CASE("rendering") {
    LaurentPoly p = parse_terms({{2, 3}, {-1, -1}, {0, 7}});
    CHECK(p.str() == "3*q^2 + 7 - q^-1");
    CHECK(parse_terms({{1, 1}, {-1, -1}}).str() == "q - q^-1");
    CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("RatFunc normalization and equality") {
    LaurentPoly qm1 = LaurentPoly::q() - LaurentPoly(1);
    RatFunc a(q_int(2), qm1);
    RatFunc b(q_int(2) * qm1, qm1 * qm1);
    CHECK(a == b);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        LaurentPoly pa = random_poly(rng), pb = random_poly(rng);
        LaurentPoly pc = random_poly(rng), pd = random_poly(rng);
        if (pb.is_zero() || pd.is_zero()) continue;
        bool same = (pa * pd - pc * pb).is_zero();
        CHECK((RatFunc(pa, pb) == RatFunc(pc, pd)) == same);
    }
}

TEST_CASE("RatFunc field arithmetic") {
    RatFunc x(LaurentPoly::q());
    RatFunc one(1);
    CHECK(x / x == one);
    CHECK(x * x.inverse() == one);
    CHECK((x + one) - one == x);
    CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), std::domain_error);
    CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly pa = random_poly(rng), pb = random_poly(rng), u = random_poly(rng);
        if (pb.is_zero() || u.is_zero()) continue;
        CHECK(RatFunc(pa * u, pb * u) == RatFunc(pa, pb));
    }
}

TEST_CASE("unit inverse") {
    LaurentPoly u = LaurentPoly::term(-1, 3);
    CHECK(u * u.unit_inverse() == LaurentPoly(1));
    CHECK_THROWS_AS(q_int(2).unit_inverse(), std::domain_error);
}
