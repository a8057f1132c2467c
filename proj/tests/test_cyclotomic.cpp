#include <doctest.h>

#include <cmath>
#include <random>

#include "modcat/cyclotomic.hpp"
#include "modcat/numtheory.hpp"

using namespace modcat;

namespace {

CycNum zeta(long n, long k = 1) { return CycNum::root_of_unity(n, k); }

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> p(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

CycNum random_cyc(std::mt19937& rng, long n) {
    std::uniform_int_distribution<long> len(1, n);
    std::vector<Rational> raw(len(rng));
    for (auto& c : raw) c = random_rational(rng);
    return CycNum::from_coeffs(n, std::move(raw));
}

} // namespace

TEST_CASE("cyclotomic polynomials: frozen small cases") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1}); // x - 1
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});      // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});     // x^2 - x + 1
    CHECK(cyclotomic_polynomial(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(16).size() == 9);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), IndexOutOfRange);
}

TEST_CASE("cyclotomic polynomials: product over divisors is x^N - 1") {
    for (long n = 1; n <= 30; ++n) {
        std::vector<mpz_class> prod{1};
        for (long d : divisors(n)) prod = poly_mul_z(prod, cyclotomic_polynomial(d));
        std::vector<mpz_class> expect(n + 1, mpz_class(0));
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
        CHECK(cyclotomic_polynomial(n).size() == static_cast<size_t>(euler_phi(n)) + 1);
    }
}

TEST_CASE("canonicalize: reduction mod Phi_N") {
    // zeta4^2 = -1
    CHECK(CycNum::from_coeffs(4, {Rational(0), Rational(0), Rational(1)}) ==
          -CycNum::one(4));
    // 1 + zeta5 + ... + zeta5^4 = 0
    CHECK(CycNum::from_coeffs(5, {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)})
              .is_zero());
    // golden ratio -zeta5^2 - zeta5^3, checked against (1+sqrt 5)/2
    const CycNum phi = -(zeta(5, 2) + zeta(5, 3));
    const auto en = numeric_eval(phi);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(en.re - golden) <= en.radius + 1e-9);
    CHECK(std::abs(en.im) <= en.radius);
}

TEST_CASE("field ops: conjugation, multiplication, inversion") {
    CHECK(zeta(8).conj() == zeta(8, 7));
    const CycNum s = zeta(8) + zeta(8, 7); // sqrt(2)
    CHECK(s * s == CycNum::from_rational(2, 8));
    for (long n : {3L, 5L, 8L, 12L}) {
        CHECK(zeta(n).inverse() == zeta(n, n - 1));
        CHECK((zeta(n) * zeta(n).inverse()).is_one());
    }
    CHECK_THROWS_AS(CycNum::zero(5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(zeta(4) + zeta(8), ConductorMismatch);
}

TEST_CASE("embed: conductor promotion preserves values") {
    CHECK(embed(-CycNum::one(2), 4) == -CycNum::one(4));
    CHECK(embed(CycNum::zero(3), 12).is_zero());
    CHECK_THROWS_AS(embed(zeta(4), 6), ConductorMismatch);

    const CycNum z3_in_6 = embed(zeta(3), 6);
    const auto en = numeric_eval(z3_in_6, 64);
    CHECK(std::abs(en.re - std::cos(2 * M_PI / 3)) <= en.radius + 1e-12);
    CHECK(std::abs(en.im - std::sin(2 * M_PI / 3)) <= en.radius + 1e-12);
    // and it is literally zeta6 - 1 in the canonical basis
    CHECK(z3_in_6 == zeta(6) - CycNum::one(6));
}

TEST_CASE("numeric_eval: enclosures") {
    const auto one = numeric_eval(CycNum::one(7));
    CHECK(one.re == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(one.im == 0.0);
    CHECK(one.radius <= 1e-30);

    const auto i4 = numeric_eval(zeta(4));
    CHECK(std::abs(i4.re) <= i4.radius);
    CHECK(std::abs(i4.im - 1.0) <= i4.radius);
    CHECK(i4.radius <= std::pow(2.0, -40));

    CHECK_THROWS_AS(numeric_eval(zeta(4), 32), Error);
}

TEST_CASE("real_sign: exact zero, interval escalation, conjugation guard") {
    CHECK(real_sign(CycNum::zero(8)) == Sign::zero);
    const CycNum sqrt2 = zeta(8) + zeta(8, 7);
    const CycNum two = CycNum::from_rational(2, 8);
    CHECK(real_sign(two - sqrt2) == Sign::positive);
    CHECK(real_sign(sqrt2 - two) == Sign::negative);
    CHECK_THROWS_AS(real_sign(zeta(4)), NotSelfConjugate);
}

TEST_CASE("property: canonical arithmetic is a field, conj a ring automorphism") {
    std::mt19937 rng(20240517);
    for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L, 16L, 24L}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK(a.pow(3) == a * a * a);
            // canonicalization is idempotent
            CHECK(CycNum::from_coeffs(n, a.coeffs()) == a);
            // serialization round trip
            CHECK(CycNum::from_coeff_strings(n, a.coeff_strings()) == a);
        }
    }
}

TEST_CASE("property: numeric enclosure of products contains the product of enclosures") {
    std::mt19937 rng(987123);
    for (long n : {5L, 8L, 12L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CycNum a = random_cyc(rng, n), b = random_cyc(rng, n);
            const auto ea = numeric_eval(a), eb = numeric_eval(b), ep = numeric_eval(a * b);
            const double mre = ea.re * eb.re - ea.im * eb.im;
            const double mim = ea.re * eb.im + ea.im * eb.re;
            const double mag_a = std::hypot(ea.re, ea.im), mag_b = std::hypot(eb.re, eb.im);
            const double rad = mag_a * eb.radius + mag_b * ea.radius + ea.radius * eb.radius;
            const double dist = std::hypot(ep.re - mre, ep.im - mim);
            CHECK(dist <= rad + ep.radius + 1e-12);
        }
    }
}

TEST_CASE("property: embed preserves numeric value") {
    std::mt19937 rng(5551212);
    for (auto [n, m] : std::vector<std::pair<long, long>>{{2, 4}, {3, 6}, {4, 16}, {5, 80}, {6, 24}}) {
        for (int trial = 0; trial < 8; ++trial) {
            const CycNum a = random_cyc(rng, n);
            const CycNum e = embed(a, m);
            const auto ea = numeric_eval(a), ee = numeric_eval(e);
            CHECK(std::hypot(ea.re - ee.re, ea.im - ee.im) <= ea.radius + ee.radius + 1e-12);
        }
    }
}
