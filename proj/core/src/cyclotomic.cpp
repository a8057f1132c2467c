#include "modcat/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "modcat/numtheory.hpp"

namespace modcat {

namespace {

// Exact division of integer polynomials, divisor monic. Ascending coefficients.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
    const size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd, mpz_class(0));
    for (size_t k = num.size(); k-- > dd;) {
        if (num[k] == 0) continue;
        mpz_class c = num[k];
        quot[k - dd] = c;
        for (size_t j = 0; j <= dd; ++j) {
            if (den[j] != 0) num[k - dd + j] -= c * den[j];
        }
    }
    return quot;
}

std::mutex phi_mutex;
std::map<long, std::vector<mpz_class>> phi_cache;

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n < 1) throw IndexOutOfRange("cyclotomic_polynomial: N must be >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    // Divisors come back ascending, so every proper divisor of m is cached
    // before Phi_m itself is assembled.
    for (long m : divisors(n)) {
        if (phi_cache.count(m)) continue;
        std::vector<mpz_class> poly(m + 1, mpz_class(0));
        poly[0] = -1;
        poly[m] = 1;
        for (long d : divisors(m)) {
            if (d != m) poly = poly_divide_exact(std::move(poly), phi_cache.at(d));
        }
        phi_cache.emplace(m, std::move(poly));
    }
    return phi_cache.at(n);
}

namespace {

// Canonical reduction: fold exponents mod N (Phi_N divides x^N - 1), then take
// the remainder modulo the monic Phi_N.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> c, long n) {
    const auto& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    if (c.size() > static_cast<size_t>(n)) {
        std::vector<Rational> folded(n, Rational(0));
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] != 0) folded[k % n] += c[k];
        }
        c.swap(folded);
    }
    for (size_t k = c.size(); k-- > deg;) {
        if (c[k] == 0) continue;
        Rational q = c[k];
        c[k] = 0;
        for (size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) c[k - deg + j] -= q * phi[j];
        }
    }
    c.resize(deg, Rational(0));
    return c;
}

int count_nonzero(const std::vector<Rational>& c) {
    int k = 0;
    for (const auto& x : c)
        if (x != 0) ++k;
    return k;
}

} // namespace

CycNum::CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}

CycNum::CycNum(long conductor, std::vector<Rational> canonical)
    : conductor_(conductor), coeffs_(std::move(canonical)) {}

CycNum CycNum::zero(long conductor) {
    return CycNum(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
}

CycNum CycNum::one(long conductor) {
    auto c = std::vector<Rational>(euler_phi(conductor), Rational(0));
    c[0] = 1;
    return CycNum(conductor, std::move(c));
}

CycNum CycNum::from_rational(const Rational& value, long conductor) {
    auto c = std::vector<Rational>(euler_phi(conductor), Rational(0));
    c[0] = value;
    c[0].canonicalize();
    return CycNum(conductor, std::move(c));
}

CycNum CycNum::root_of_unity(long conductor, long power) {
    if (conductor < 1) throw IndexOutOfRange("root_of_unity: conductor must be >= 1");
    power %= conductor;
    if (power < 0) power += conductor;
    std::vector<Rational> raw(power + 1, Rational(0));
    raw[power] = 1;
    return from_coeffs(conductor, std::move(raw));
}

CycNum CycNum::from_coeffs(long conductor, std::vector<Rational> raw) {
    if (conductor < 1) throw IndexOutOfRange("CycNum: conductor must be >= 1");
    for (auto& x : raw) x.canonicalize();
    return CycNum(conductor, reduce_mod_phi(std::move(raw), conductor));
}

CycNum CycNum::from_coeff_strings(long conductor, const std::vector<std::string>& raw) {
    const size_t deg = euler_phi(conductor);
    if (raw.size() != deg)
        throw InvalidData("CycNum: expected " + std::to_string(deg) +
                          " coordinates for conductor " + std::to_string(conductor) +
                          ", got " + std::to_string(raw.size()));
    std::vector<Rational> c(deg);
    for (size_t i = 0; i < deg; ++i) {
        mpq_class v;
        if (raw[i].empty() || mpq_set_str(v.get_mpq_t(), raw[i].c_str(), 10) != 0)
            throw InvalidData("CycNum: malformed rational '" + raw[i] + "'");
        if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
            throw InvalidData("CycNum: zero denominator in '" + raw[i] + "'");
        v.canonicalize();
        c[i] = v;
    }
    return CycNum(conductor, reduce_mod_phi(std::move(c), conductor));
}

bool CycNum::is_zero() const {
    for (const auto& x : coeffs_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycNum CycNum::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CycNum(conductor_, std::move(c));
}

CycNum CycNum::conj() const {
    std::vector<Rational> raw(conductor_, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) raw[(conductor_ - k) % conductor_] += coeffs_[k];
    }
    return CycNum(conductor_, reduce_mod_phi(std::move(raw), conductor_));
}

namespace {

void check_conductor(const CycNum& a, const CycNum& b, const char* op) {
    if (a.conductor() != b.conductor())
        throw ConductorMismatch(std::string(op) + ": conductors " +
                                std::to_string(a.conductor()) + " and " +
                                std::to_string(b.conductor()) +
                                " differ; embed into Q(zeta_lcm) first");
}

// deg of a rational polynomial given as coefficient vector; -1 for zero
long poly_deg(const std::vector<Rational>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

// remainder and quotient of rational polynomials, divisor nonzero
void poly_divmod(const std::vector<Rational>& num, const std::vector<Rational>& den,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
    long dd = poly_deg(den);
    rem = num;
    long dn = poly_deg(rem);
    quot.assign(dn >= dd ? dn - dd + 1 : 1, Rational(0));
    while (dn >= dd) {
        Rational c = rem[dn] / den[dd];
        quot[dn - dd] = c;
        for (long j = 0; j <= dd; ++j) {
            if (den[j] != 0) rem[dn - dd + j] -= c * den[j];
        }
        rem[dn] = 0;
        dn = poly_deg(rem);
    }
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) p[i + j] += a[i] * b[j];
        }
    }
    return p;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

} // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("CycNum: inverse of zero");
    // Monomial fast path: (c * zeta^k)^(-1) = c^(-1) * zeta^(N-k).
    if (count_nonzero(coeffs_) == 1) {
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) {
                std::vector<Rational> raw((conductor_ - k) % conductor_ + 1, Rational(0));
                raw.back() = 1 / coeffs_[k];
                return from_coeffs(conductor_, std::move(raw));
            }
        }
    }
    // Extended Euclid against Phi_N (irreducible, so the gcd is a nonzero constant).
    const auto& phi_z = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
    std::vector<Rational> r1 = coeffs_;
    std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
    std::vector<Rational> quot, rem;
    while (poly_deg(r1) >= 0) {
        poly_divmod(r0, r1, quot, rem);
        r0.swap(r1);
        r1 = rem;
        auto t2 = poly_sub(t0, poly_mul(quot, t1));
        t0.swap(t1);
        t1.swap(t2);
    }
    // r0 = constant gcd; t0 * this == r0 (mod Phi_N)
    Rational g = r0[0];
    for (auto& c : t0) c /= g;
    return from_coeffs(conductor_, std::move(t0));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = CycNum::one(conductor_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_conductor(*this, o, "add");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_conductor(*this, o, "sub");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    check_conductor(a, b, "mul");
    const auto& ca = a.coeffs_;
    const auto& cb = b.coeffs_;
    std::vector<Rational> prod(ca.size() + cb.size() - 1, Rational(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] != 0) prod[i + j] += ca[i] * cb[j];
        }
    }
    return CycNum(a.conductor_, reduce_mod_phi(std::move(prod), a.conductor_));
}

CycNum operator*(const CycNum& a, const Rational& s) {
    std::vector<Rational> c(a.coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] * s;
    return CycNum(a.conductor_, std::move(c));
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    check_conductor(a, b, "compare");
    return a.coeffs_ == b.coeffs_;
}

std::vector<std::string> CycNum::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << ']';
    return os.str();
}

CycNum embed(const CycNum& a, long conductor) {
    if (conductor < 1 || conductor % a.conductor() != 0)
        throw ConductorMismatch("embed: " + std::to_string(a.conductor()) +
                                " does not divide " + std::to_string(conductor));
    const long scale = conductor / a.conductor();
    std::vector<Rational> raw(conductor, Rational(0));
    const auto& c = a.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) raw[k * scale] += c[k];
    }
    return CycNum::from_coeffs(conductor, std::move(raw));
}

namespace {

// RAII triple of mpfr values holding re/im midpoints and an error radius.
struct MpfrEnclosure {
    mpfr_t re, im, rad;
    explicit MpfrEnclosure(mpfr_prec_t prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_init2(rad, prec);
    }
    ~MpfrEnclosure() {
        mpfr_clear(re);
        mpfr_clear(im);
        mpfr_clear(rad);
    }
    MpfrEnclosure(const MpfrEnclosure&) = delete;
    MpfrEnclosure& operator=(const MpfrEnclosure&) = delete;
};

// Evaluates sum coeffs[k] e^{2 pi i k/N} at working precision `prec`. Each term
// costs a handful of correctly rounded operations, so the accumulated error is
// below sum|c_k| * (terms + 8) * 2^(4 - prec); that bound goes into `rad`.
void eval_mpfr(const CycNum& a, mpfr_prec_t prec, MpfrEnclosure& out) {
    const long n = a.conductor();
    mpfr_set_zero(out.re, 1);
    mpfr_set_zero(out.im, 1);
    mpfr_set_zero(out.rad, 1);
    if (a.is_rational()) {
        // zeta^0 term only; the ternary flag of mpfr_set_q reports whether the
        // single rounding was exact.
        const int inexact = mpfr_set_q(out.re, a.rational_part().get_mpq_t(), MPFR_RNDN);
        if (inexact != 0) {
            mpfr_abs(out.rad, out.re, MPFR_RNDU);
            mpfr_mul_2si(out.rad, out.rad, -static_cast<long>(prec) + 2, MPFR_RNDU);
        }
        return;
    }
    mpfr_t pi, angle, s, c, t, sumabs;
    mpfr_inits2(prec, pi, angle, s, c, t, sumabs, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(sumabs, 1);
    long terms = 0;
    const auto& coeffs = a.coeffs();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        ++terms;
        mpfr_mul_si(angle, pi, 2 * static_cast<long>(k), MPFR_RNDN);
        mpfr_div_si(angle, angle, n, MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_set_q(t, coeffs[k].get_mpq_t(), MPFR_RNDN);
        mpfr_fma(out.re, t, c, out.re, MPFR_RNDN);
        mpfr_fma(out.im, t, s, out.im, MPFR_RNDN);
        mpfr_abs(t, t, MPFR_RNDN);
        mpfr_add(sumabs, sumabs, t, MPFR_RNDU);
    }
    mpfr_mul_si(out.rad, sumabs, terms + 8, MPFR_RNDU);
    mpfr_mul_2si(out.rad, out.rad, 4 - static_cast<long>(prec), MPFR_RNDU);
    mpfr_clears(pi, angle, s, c, t, sumabs, static_cast<mpfr_ptr>(nullptr));
}

} // namespace

ComplexEnclosure numeric_eval(const CycNum& a, long precision_bits) {
    if (precision_bits < 53)
        throw Error("numeric_eval: precision must be at least 53 bits");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 64);
    MpfrEnclosure e(prec);
    eval_mpfr(a, prec, e);
    ComplexEnclosure out;
    out.re = mpfr_get_d(e.re, MPFR_RNDN);
    out.im = mpfr_get_d(e.im, MPFR_RNDN);
    // Fold the double-conversion rounding into the radius, but only when the
    // conversion was actually inexact.
    double conv = 0.0;
    mpfr_t back;
    mpfr_init2(back, prec);
    mpfr_set_d(back, out.re, MPFR_RNDN);
    if (!mpfr_equal_p(back, e.re)) conv += std::abs(out.re) * 2.3e-16 + 5e-324;
    mpfr_set_d(back, out.im, MPFR_RNDN);
    if (!mpfr_equal_p(back, e.im)) conv += std::abs(out.im) * 2.3e-16 + 5e-324;
    mpfr_clear(back);
    out.radius = mpfr_get_d(e.rad, MPFR_RNDU) + conv;
    return out;
}

Sign real_sign(const CycNum& a) {
    if (a.conj() != a)
        throw NotSelfConjugate("real_sign: conj(a) != a");
    if (a.is_zero()) return Sign::zero;
    // Nonzero canonical values are bounded away from 0, so escalation terminates.
    for (mpfr_prec_t prec = 64; prec <= (1 << 22); prec *= 2) {
        MpfrEnclosure e(prec);
        eval_mpfr(a, prec, e);
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_sub(lo, e.re, e.rad, MPFR_RNDD);
        mpfr_add(hi, e.re, e.rad, MPFR_RNDU);
        const bool pos = mpfr_sgn(lo) > 0;
        const bool neg = mpfr_sgn(hi) < 0;
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (pos) return Sign::positive;
        if (neg) return Sign::negative;
    }
    throw InternalInconsistency("real_sign: nonzero value not separated from 0 at maximal precision");
}

} // namespace modcat
