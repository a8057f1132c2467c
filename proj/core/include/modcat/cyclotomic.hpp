#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "modcat/errors.hpp"

namespace modcat {

using Rational = mpq_class;

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending by degree,
/// monic, degree phi(N). Computed by exact division of x^N - 1 by the product
/// of Phi_d over proper divisors d of N. Memoized behind a lock; safe to call
/// from any thread.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

enum class Sign { negative, zero, positive };

/// Midpoint/radius enclosure of a complex value. `radius` bounds the distance
/// from (re, im) to the true value; it is always reported, never hidden.
struct ComplexEnclosure {
    double re = 0.0;
    double im = 0.0;
    double radius = 0.0;
};

/// An exact element of the cyclotomic field Q(zeta_N), stored as its canonical
/// coordinate vector in the basis {zeta_N^0, ..., zeta_N^{phi(N)-1}} after
/// reduction modulo Phi_N. Two values over the same conductor are equal iff
/// their coefficient vectors are equal.
///
/// Arithmetic never changes the conductor: mixing conductors throws
/// ConductorMismatch, and callers embed into Q(zeta_lcm) explicitly via
/// embed(). Values are immutable after construction and freely shareable
/// between threads.
class CycNum {
public:
    /// Zero over conductor 1.
    CycNum();

    static CycNum zero(long conductor);
    static CycNum one(long conductor);
    static CycNum from_rational(const Rational& value, long conductor = 1);
    /// zeta_N^power (power taken mod N).
    static CycNum root_of_unity(long conductor, long power);
    /// Canonicalizes a raw coordinate vector (any length; exponents are folded
    /// mod N, then reduced mod Phi_N). Idempotent on canonical input.
    static CycNum from_coeffs(long conductor, std::vector<Rational> raw);
    /// Parses the serialized form: one base-10 "p" or "p/q" string per basis
    /// coordinate. Length must equal phi(conductor).
    static CycNum from_coeff_strings(long conductor, const std::vector<std::string>& raw);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True iff the value lies in Q (all coordinates above the constant one vanish).
    bool is_rational() const;
    /// The constant coordinate; equals the value when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CycNum operator-() const;
    CycNum conj() const;        ///< the automorphism zeta_N -> zeta_N^{N-1}
    CycNum inverse() const;     ///< throws DivisionByZero on 0
    CycNum pow(long e) const;   ///< negative e via inverse

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const Rational& s);
    friend CycNum operator*(const Rational& s, const CycNum& a) { return a * s; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Serialized coordinates: canonical "p" / "p/q" strings, lowest terms,
    /// positive denominator.
    std::vector<std::string> coeff_strings() const;
    /// Compact display form, e.g. "[2, 0, -1, -1]".
    std::string to_string() const;

private:
    CycNum(long conductor, std::vector<Rational> canonical);

    long conductor_;
    std::vector<Rational> coeffs_;
};

/// Image of `a` under zeta_N -> zeta_M^{M/N}; requires N | M. Value-preserving.
CycNum embed(const CycNum& a, long conductor);

/// Evaluates sum_k coeffs[k] * e^{2 pi i k / N} with a rigorous error radius.
/// `precision_bits` >= 53; internal work runs at higher precision so the
/// returned radius is dominated by the requested precision.
ComplexEnclosure numeric_eval(const CycNum& a, long precision_bits = 53);

/// Sign of a self-conjugate (hence real-valued) element. Zero is decided
/// exactly from the canonical form; a nonzero sign is decided by interval
/// evaluation at escalating precision until 0 is excluded. Throws
/// NotSelfConjugate if conj(a) != a.
Sign real_sign(const CycNum& a);

} // namespace modcat
