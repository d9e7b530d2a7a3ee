#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbext/exact.hpp"
#include "oracles.hpp"

#include <random>

using namespace hilbext;

namespace {

IntPoly from_binomial_basis(const std::vector<long>& coeffs) {
    // sum c_k C(n, k), with C(n, k) = binom_poly(k) shifted by -k.
    IntPoly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p += binom_poly(static_cast<long>(k)).shifted(-static_cast<long>(k)) * Rational(coeffs[k]);
    return p;
}

} // namespace

TEST_CASE("binom_eval follows the section-count convention") {
    CHECK(binom_eval(1, 3) == 4);
    CHECK(binom_eval(-2, 7) == 0);
    CHECK(binom_eval(2, 4) == oracle::choose(6, 4));
    CHECK(binom_eval(2, 4) == 15);
    CHECK(binom_eval(0, 0) == 1);
    CHECK(binom_eval(5, 0) == 1);
}

TEST_CASE("binom_eval matches the factorial oracle on random large arguments") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist_d(-5, 60);
    std::uniform_int_distribution<long> dist_n(0, 80);
    for (int i = 0; i < 300; ++i) {
        long d = dist_d(rng);
        long n = dist_n(rng);
        CHECK(binom_eval(d, n) == oracle::forms(d, n));
    }
}

TEST_CASE("binom_poly") {
    CHECK(binom_poly(0) == IntPoly::constant(1));
    CHECK(binom_poly(-1).is_zero());
    CHECK(binom_poly(-1).degree() == -1);
    CHECK(binom_poly(2) == IntPoly({Rational(1), Rational(3, 2), Rational(1, 2)}));
    CHECK(binom_poly(2).is_integer_valued());
    CHECK(binom_poly(4).degree() == 4);

    for (long d = 0; d <= 8; ++d)
        for (long n = 0; n <= 30; ++n) CHECK(binom_poly(d).eval_integer(n) == binom_eval(d, n));
}

TEST_CASE("poly arithmetic") {
    const IntPoly half_pascal = binom_poly(2);
    CHECK(half_pascal.shifted() == IntPoly({Rational(3), Rational(5, 2), Rational(1, 2)}));  // (n+3)(n+2)/2
    CHECK((binom_poly(2) - binom_poly(2)).is_zero());
    CHECK((binom_poly(2) * Rational(2)) == IntPoly({Rational(2), Rational(3), Rational(1)}));
    CHECK((IntPoly::variable() + IntPoly::constant(2)).to_string() == "n + 2");
    CHECK(IntPoly({Rational(-6), Rational(9), Rational(3)}).to_string() == "3n^2 + 9n - 6");
    CHECK(IntPoly({Rational(0), Rational(1, 2)}).to_string() == "(1/2)n");

    const IntPoly diff = binom_poly(3).shifted() - binom_poly(3);
    for (long n = 0; n <= 20; ++n) CHECK(diff.eval_integer(n) == oracle::choose(3 + n, n + 1));
}

TEST_CASE("Pascal identity against the factorial oracle") {
    for (long d = 0; d <= 8; ++d)
        for (long n = 0; n <= 30; ++n) CHECK(binom_eval(d, n + 1) - binom_eval(d, n) == oracle::choose(d + n, n + 1));
}

TEST_CASE("integer-valuedness") {
    CHECK_FALSE(IntPoly({Rational(0), Rational(1, 2)}).is_integer_valued());
    CHECK(IntPoly({Rational(0), Rational(-1, 2), Rational(1, 2)}).is_integer_valued());
    CHECK_THROWS_AS((void)IntPoly({Rational(0), Rational(1, 2)}).require_integer_valued(), NotIntegerValued);
    CHECK_THROWS_AS((void)IntPoly({Rational(0), Rational(1, 2)}).eval_integer(1), NotIntegerValued);
    CHECK(IntPoly().is_integer_valued());
}

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(5)) == "5/1");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rational_from_string("-1/2") == Rational(-1, 2));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("certify_nonneg examples") {
    SUBCASE("all-positive linear polynomial gets a binomial-basis proof") {
        const IntPoly p({Rational(10), Rational(5)});
        const auto proof = certify_nonneg(p, 3);
        REQUIRE(std::holds_alternative<NonnegBinomialBasis>(proof));
        const auto& basis = std::get<NonnegBinomialBasis>(proof);
        CHECK(basis.shift == 3);
        CHECK(basis.coefficients == std::vector<Rational>{Rational(20), Rational(5)});
        CHECK_FALSE(check_proof(p, 3, proof).has_value());
    }
    SUBCASE("4 - n fails first at 5") {
        const IntPoly p({Rational(4), Rational(-1)});
        const auto proof = certify_nonneg(p, 3);
        REQUIRE(std::holds_alternative<Counterexample>(proof));
        CHECK(std::get<Counterexample>(proof).witness == 5);
        CHECK(std::get<Counterexample>(proof).value == -1);
        CHECK_FALSE(check_proof(p, 3, proof).has_value());
    }
    SUBCASE("n^2 - 10n + 26 needs the root-bound route") {
        const IntPoly p({Rational(26), Rational(-10), Rational(1)});
        for (long n = 0; n <= 20; ++n) CHECK(p(n) >= 1);
        CHECK(p(5) == 1);
        const auto proof = certify_nonneg(p, 0);
        REQUIRE(std::holds_alternative<ExhaustiveToRootBound>(proof));
        CHECK(std::get<ExhaustiveToRootBound>(proof).bound == 27);
        CHECK_FALSE(check_proof(p, 0, proof).has_value());
    }
    SUBCASE("zero and constants") {
        CHECK(std::holds_alternative<NonnegBinomialBasis>(certify_nonneg(IntPoly(), 4)));
        CHECK(std::holds_alternative<NonnegBinomialBasis>(certify_nonneg(IntPoly::constant(3), 4)));
        const auto neg = certify_nonneg(IntPoly::constant(-2), 4);
        REQUIRE(std::holds_alternative<Counterexample>(neg));
        CHECK(std::get<Counterexample>(neg).witness == 4);
    }
    SUBCASE("negative leading coefficient is refuted beyond the positive region") {
        const IntPoly p({Rational(100), Rational(0), Rational(-1)});  // 100 - n^2
        const auto proof = certify_nonneg(p, 0);
        REQUIRE(std::holds_alternative<Counterexample>(proof));
        CHECK(std::get<Counterexample>(proof).witness == 11);
        CHECK(std::get<Counterexample>(proof).value == -21);
    }
}

TEST_CASE("check_proof rejects tampered proofs") {
    const IntPoly p({Rational(4), Rational(-1)});
    CHECK(check_proof(p, 3, Counterexample{6, Rational(-2)}).has_value());   // not the least witness
    CHECK(check_proof(p, 3, Counterexample{5, Rational(-2)}).has_value());   // wrong value
    CHECK(check_proof(p, 3, NonnegBinomialBasis{3, {Rational(2)}}).has_value());
    CHECK(check_proof(p, 3, ExhaustiveToRootBound{3, 10, 1}).has_value());

    const IntPoly q({Rational(10), Rational(5)});
    CHECK(check_proof(q, 3, NonnegBinomialBasis{3, {Rational(20), Rational(-5)}}).has_value());
    CHECK(check_proof(q, 3, NonnegBinomialBasis{4, {Rational(25), Rational(5)}}).has_value());  // shift past n0
    CHECK_FALSE(check_proof(q, 3, NonnegBinomialBasis{0, {Rational(5), Rational(5)}}).has_value());
}

TEST_CASE("certify_nonneg soundness and least-witness property on random integer-valued polynomials") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(0, 5);
    std::uniform_int_distribution<long> start(0, 10);
    int proofs = 0;
    int refutations = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<long> c(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& x : c) x = coeff(rng);
        // Bias half the trials towards nonnegative polynomials.
        if (trial % 2 == 0) c.back() = std::abs(c.back()) + 1;
        const IntPoly p = from_binomial_basis(c);
        const long n0 = start(rng);
        for (long n = n0; n <= n0 + 5; ++n) REQUIRE(p.eval_integer(n) == oracle::eval_binomial_basis(c, n));

        const auto proof = certify_nonneg(p, n0);
        CHECK_FALSE(check_proof(p, n0, proof).has_value());
        if (const auto* ce = std::get_if<Counterexample>(&proof)) {
            ++refutations;
            CHECK(oracle::eval_binomial_basis(c, ce->witness) == numerator(ce->value));
            CHECK(ce->value < 0);
            for (long n = n0; n < ce->witness; ++n) CHECK(oracle::eval_binomial_basis(c, n) >= 0);
        } else {
            ++proofs;
            for (long n = n0; n <= n0 + 200; ++n) CHECK(oracle::eval_binomial_basis(c, n) >= 0);
        }
    }
    CHECK(proofs > 20);
    CHECK(refutations > 20);
}
