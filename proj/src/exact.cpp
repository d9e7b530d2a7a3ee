#include "hilbext/exact.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hilbext {

BigInt binomial(long top, long k) {
    if (k < 0 || top < 0 || k > top) return 0;
    k = std::min(k, top - k);
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i;
    }
    return result;
}

BigInt binom_eval(long d, long n) {
    if (d < 0) return 0;
    return binomial(d + n, n);
}

// --- IntPoly -------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::constant(const Rational& c) { return IntPoly({c}); }

IntPoly IntPoly::variable() { return IntPoly({Rational(0), Rational(1)}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational IntPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational IntPoly::operator()(const Rational& n) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

BigInt IntPoly::eval_integer(long n) const {
    Rational v = (*this)(n);
    if (denominator(v) != 1) {
        throw NotIntegerValued("polynomial " + to_string() + " is not integral at n = " + std::to_string(n));
    }
    return numerator(v);
}

IntPoly IntPoly::shifted(long by) const {
    // Horner in the polynomial ring: p(n + by).
    IntPoly step({Rational(by), Rational(1)});
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * step;
        acc += IntPoly::constant(*it);
    }
    return acc;
}

bool IntPoly::is_integer_valued() const {
    if (is_zero()) return true;
    std::vector<Rational> table;
    for (int x = 0; x <= degree(); ++x) table.push_back((*this)(x));
    // Each leading entry of the difference table must be integral.
    for (std::size_t level = 0; level < table.size(); ++level) {
        if (denominator(table[0]) != 1) return false;
        for (std::size_t i = 0; i + 1 < table.size() - level; ++i) table[i] = table[i + 1] - table[i];
    }
    return true;
}

const IntPoly& IntPoly::require_integer_valued() const {
    if (!is_integer_valued()) throw NotIntegerValued("polynomial " + to_string() + " is not integer-valued");
    return *this;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (k == 0 || !unit) {
            if (denominator(mag) == 1) os << numerator(mag);
            else os << "(" << numerator(mag) << "/" << denominator(mag) << ")";
        }
        if (k >= 1) os << "n";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

IntPoly binom_poly(long d) {
    if (d < 0) return {};
    IntPoly acc = IntPoly::constant(1);
    for (long i = 1; i <= d; ++i) acc = acc * IntPoly({Rational(i, i), Rational(1, i)});
    return acc;
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

Rational rational_from_string(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size() ||
            !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

// --- positivity ------------------------------------------------------------------

std::vector<Rational> shifted_binomial_coefficients(const IntPoly& p, long shift) {
    // p(m) = sum_k c_k C(m + k, k) with m = n - shift, so c_k = (backward difference^k p)(shift - 1).
    std::vector<Rational> coeffs;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = 0;
        for (int j = 0; j <= k; ++j) {
            Rational term = Rational(binomial(k, j)) * p(shift - 1 - j);
            c += (j % 2 == 0) ? term : Rational(-term);
        }
        coeffs.push_back(c);
    }
    return coeffs;
}

namespace {

long ceil_to_long(const Rational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    BigInt fl = num / den;
    if (num % den != 0 && num > 0) fl += 1;
    return fl.convert_to<long>();
}

IntPoly shifted_binomial_basis(long k, long shift) { return binom_poly(k).shifted(-shift); }

} // namespace

long cauchy_root_bound(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("root bound needs a non-constant polynomial");
    Rational lead = abs(p.leading());
    Rational m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / lead));
    Rational bound = 1 + m;
    long b = ceil_to_long(bound);
    // |root| < 1 + m <= b, so sign(p(n)) is constant for n >= b.
    return b;
}

PositivityProof certify_nonneg(const IntPoly& p, long n0) {
    if (p.is_zero()) return NonnegBinomialBasis{n0, {}};

    auto coeffs = shifted_binomial_coefficients(p, n0);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c >= 0; }))
        return NonnegBinomialBasis{n0, std::move(coeffs)};

    if (p.degree() == 0) return Counterexample{n0, p.coeff(0)};

    long bound = cauchy_root_bound(p);
    long last = std::max(n0, bound);
    for (long n = n0; n <= last; ++n) {
        Rational v = p(n);
        if (v < 0) return Counterexample{n, v};
    }
    // Nothing negative up to the root bound, hence the leading coefficient is positive.
    return ExhaustiveToRootBound{n0, last, 1};
}

std::optional<std::string> check_proof(const IntPoly& p, long n0, const PositivityProof& proof) {
    if (const auto* basis = std::get_if<NonnegBinomialBasis>(&proof)) {
        if (basis->shift > n0) return "basis shift exceeds n0";
        IntPoly rebuilt;
        for (std::size_t k = 0; k < basis->coefficients.size(); ++k) {
            if (basis->coefficients[k] < 0) return "negative coefficient at index " + std::to_string(k);
            rebuilt += shifted_binomial_basis(static_cast<long>(k), basis->shift) * basis->coefficients[k];
        }
        if (!(rebuilt == p)) return "binomial expansion does not reproduce the polynomial";
        return std::nullopt;
    }
    if (const auto* ex = std::get_if<ExhaustiveToRootBound>(&proof)) {
        if (ex->n0 != n0) return "exhaustive range starts at the wrong n0";
        if (p.degree() < 1) return "exhaustive proof on a constant polynomial";
        if (ex->leading_sign != 1 || p.leading() <= 0) return "leading coefficient is not positive";
        if (ex->bound < cauchy_root_bound(p)) return "bound is below the Cauchy root bound";
        for (long n = n0; n <= ex->bound; ++n)
            if (p(n) < 0) return "negative value at n = " + std::to_string(n);
        return std::nullopt;
    }
    const auto& ce = std::get<Counterexample>(proof);
    if (ce.witness < n0) return "witness precedes n0";
    if (ce.value >= 0) return "recorded value is not negative";
    if (p(ce.witness) != ce.value) return "recorded value does not match p(witness)";
    for (long n = n0; n < ce.witness; ++n)
        if (p(n) < 0) return "witness is not the least: p(" + std::to_string(n) + ") < 0";
    return std::nullopt;
}

} // namespace hilbext
