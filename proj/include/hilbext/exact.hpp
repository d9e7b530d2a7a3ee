#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbext {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a polynomial that must count dimensions fails to be integer-valued.
class NotIntegerValued : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Number of degree-d forms in n+1 variables: C(d+n, n) for d >= 0, zero for d < 0.
BigInt binom_eval(long d, long n);

/// Plain binomial coefficient C(top, k); zero when k < 0 or k > top (top >= 0).
BigInt binomial(long top, long k);

/// Polynomial in the ambient dimension n with exact rational coefficients.
///
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has an empty coefficient list and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Rational> coeffs);
    IntPoly(std::initializer_list<Rational> coeffs);

    static IntPoly constant(const Rational& c);
    /// The polynomial n.
    static IntPoly variable();

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rational coeff(int k) const;
    [[nodiscard]] Rational leading() const;

    [[nodiscard]] Rational operator()(const Rational& n) const;
    [[nodiscard]] Rational operator()(long n) const { return (*this)(Rational(n)); }
    /// Value at an integer point; throws NotIntegerValued if it is not an integer.
    [[nodiscard]] BigInt eval_integer(long n) const;

    /// p(n+1).
    [[nodiscard]] IntPoly shifted(long by = 1) const;

    /// Checks the forward-difference table on deg+1 consecutive integers.
    [[nodiscard]] bool is_integer_valued() const;
    /// Returns *this, or throws NotIntegerValued.
    const IntPoly& require_integer_valued() const;

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const Rational& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Rational& c) { return a *= c; }
    friend IntPoly operator*(const Rational& c, IntPoly a) { return a *= c; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// Human readable form such as "3n^2 + 9n - 6".
    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// The polynomial n -> binom_eval(d, n): (n+1)(n+2)...(n+d)/d! for d >= 0, zero otherwise.
IntPoly binom_poly(long d);

/// Exact "p/q" rendering (q >= 1 always printed).
std::string rational_to_string(const Rational& q);
/// Accepts "p/q" or a bare integer.
Rational rational_from_string(std::string_view text);

// --- positivity certificates -------------------------------------------------

/// p(n) = sum_k coefficients[k] * C(n - shift + k, k) with every coefficient >= 0.
struct NonnegBinomialBasis {
    long shift = 0;
    std::vector<Rational> coefficients;
    friend bool operator==(const NonnegBinomialBasis&, const NonnegBinomialBasis&) = default;
};

/// No real root has absolute value >= bound; every integer in [n0, bound] was
/// checked directly, and beyond it the sign is the leading sign (+1).
struct ExhaustiveToRootBound {
    long n0 = 0;
    long bound = 0;
    int leading_sign = 1;
    friend bool operator==(const ExhaustiveToRootBound&, const ExhaustiveToRootBound&) = default;
};

/// Least integer n* >= n0 with p(n*) < 0.
struct Counterexample {
    long witness = 0;
    Rational value;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

using PositivityProof = std::variant<NonnegBinomialBasis, ExhaustiveToRootBound, Counterexample>;

[[nodiscard]] inline bool is_counterexample(const PositivityProof& proof) noexcept {
    return std::holds_alternative<Counterexample>(proof);
}

/// Coefficients of p in the basis {C(n - shift + k, k)}_k.
std::vector<Rational> shifted_binomial_coefficients(const IntPoly& p, long shift);

/// Smallest integer B with every real root of p strictly below B in absolute value.
/// Requires degree >= 1.
long cauchy_root_bound(const IntPoly& p);

/// Proves p(n) >= 0 for every integer n >= n0, or returns the least witness n* >= n0 with p(n*) < 0.
PositivityProof certify_nonneg(const IntPoly& p, long n0);

/// Re-checks a proof object against p independently of how it was produced.
/// Returns a description of the first problem, or nullopt when the proof is valid.
std::optional<std::string> check_proof(const IntPoly& p, long n0, const PositivityProof& proof);

} // namespace hilbext
