#include "hilbext/paper_checks.hpp"

#include "hilbext/certify.hpp"
#include "hilbext/search.hpp"

#include <functional>
#include <sstream>

namespace hilbext {

namespace {

BigInt factorial(long k) {
    BigInt f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

// C(a, b) straight from factorials, independent of the library's binomial routines.
BigInt choose(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    return factorial(a) / (factorial(b) * factorial(a - b));
}

Codim2Data family(int s, int c) {
    return {std::vector<int>(static_cast<std::size_t>(s), (s - 1) * c),
            std::vector<int>(static_cast<std::size_t>(s - 1), s * c)};
}

const Codim2Data degree_three{{2, 2, 2}, {3, 3}};
const Codim3GorData kmr{10, {4, 4, 4, 4, 4, 5, 5}, {6, 6, 6, 6, 6, 5, 5}};
const Codim3GorData net_of_quadrics{6, {2, 2, 2}, {4, 4, 4}};

struct Mismatch {
    std::string what;
};

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& where) {
    if (!(got == want)) {
        std::ostringstream os;
        os << where << ": got " << got << ", expected " << want;
        throw Mismatch{os.str()};
    }
}

void expect(bool ok, const std::string& where) {
    if (!ok) throw Mismatch{where};
}

ClaimResult run_claim(int criterion, std::string claim, const std::function<void()>& body) {
    ClaimResult r{criterion, std::move(claim), false, ""};
    try {
        body();
        r.passed = true;
    } catch (const Mismatch& m) {
        r.detail = m.what;
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    return r;
}

std::string n_label(long n) { return "n=" + std::to_string(n); }

} // namespace

std::vector<ClaimResult> run_paper_checks() {
    std::vector<ClaimResult> out;

    out.push_back(run_claim(1, "psi(gens (2,2,2), syz (3,3), n) = 6n - 6 for n = 3..20", [] {
        for (long n = 3; n <= 20; ++n) expect_eq(psi(degree_three, n), BigInt(6 * n - 6), n_label(n));
        expect(psi_poly(degree_three) == IntPoly({Rational(-6), Rational(6)}), "polynomial form is not 6n - 6");
    }));

    out.push_back(run_claim(2, "psi(family s,c) = 1 + s(s-1)C(c+n,n) - (s-1)^2 - s^2, s in 3..5, c in 2..3, n in 3..12", [] {
        for (int s = 3; s <= 5; ++s)
            for (int c = 2; c <= 3; ++c)
                for (long n = 3; n <= 12; ++n) {
                    BigInt want = 1 + BigInt(s * (s - 1)) * choose(c + n, n) - (s - 1) * (s - 1) - s * s;
                    expect_eq(psi(family(s, c), n), want,
                              "s=" + std::to_string(s) + " c=" + std::to_string(c) + " " + n_label(n));
                }
    }));

    out.push_back(run_claim(3, "psi(family, n+1) - psi(family, n) = s(s-1)C(c+n, n+1) on the same grid", [] {
        for (int s = 3; s <= 5; ++s)
            for (int c = 2; c <= 3; ++c)
                for (long n = 3; n <= 12; ++n) {
                    BigInt diff = psi(family(s, c), n + 1) - psi(family(s, c), n);
                    expect_eq(diff, BigInt(s * (s - 1)) * choose(c + n, n + 1),
                              "s=" + std::to_string(s) + " c=" + std::to_string(c) + " " + n_label(n));
                }
    }));

    out.push_back(run_claim(4, "phi(r=7 datum, n) = 10 C(n+2,2) - 26 for n = 4..15; inclusive convention is exactly 1 larger", [] {
        for (long n = 4; n <= 15; ++n) {
            BigInt want = 10 * choose(n + 2, 2) - 26;
            expect_eq(phi(kmr, n, ZeroTermConvention::exclude), want, "exclude " + n_label(n));
            expect_eq(phi(kmr, n, ZeroTermConvention::include), want + 1, "include " + n_label(n));
        }
        expect_eq(phi(kmr, 4), BigInt(124), "n=4");
        expect_eq(phi(kmr, 5), BigInt(184), "n=5");
    }));

    out.push_back(run_claim(5, "phi(r=7 datum, n+1) - phi(r=7 datum, n) = 10(n+2) for n = 4..15", [] {
        for (long n = 4; n <= 15; ++n) expect_eq(phi(kmr, n + 1) - phi(kmr, n), BigInt(10 * (n + 2)), n_label(n));
    }));

    out.push_back(run_claim(6, "verdicts: family(3,2) and r=7 datum infinitely extendable; degree-3 datum fails at n=5", [] {
        const auto fam = certify(family(3, 2), 3);
        expect(fam.infinitely_extendable(), "family(3,2) not certified");
        expect(fam.delta_poly == IntPoly({Rational(10), Rational(5)}), "family delta is " + fam.delta_poly.to_string());
        expect(std::holds_alternative<NonnegBinomialBasis>(fam.proof), "family proof is not a binomial-basis proof");
        expect(fam.non_ci, "family flagged as complete intersection");

        const auto gor = certify(kmr, 4);
        expect(gor.infinitely_extendable(), "r=7 datum not certified");
        expect(gor.delta_poly == IntPoly({Rational(18), Rational(9)}), "r=7 delta is " + gor.delta_poly.to_string());
        expect(gor.non_ci, "r=7 datum flagged as complete intersection");

        const auto cubic = certify(degree_three, 3);
        expect(cubic.verdict == Verdict::fails_at, "degree-3 datum certified");
        expect_eq(cubic.witness.value_or(-1), 5L, "degree-3 witness");
        expect(cubic.delta_poly == IntPoly({Rational(4), Rational(-1)}), "degree-3 delta is " + cubic.delta_poly.to_string());
        for (const auto* cert : {&fam, &gor, &cubic})
            if (auto problem = verify_certificate(*cert)) throw Mismatch{"certificate re-check: " + *problem};
    }));

    out.push_back(run_claim(7, "degree: 3 for the degree-3 datum, ab for CI (a,b), closed form = Hilbert polynomial on all codim-2 data with degrees <= 6", [] {
        expect_eq(degree_of(degree_three), 3L, "degree-3 datum");
        for (int a = 1; a <= 5; ++a)
            for (int b = a; b <= 5; ++b)
                expect_eq(degree_of(Codim2Data{{a, b}, {a + b}}), static_cast<long>(a * b),
                          "CI (" + std::to_string(a) + "," + std::to_string(b) + ")");
        SearchConfig config;
        config.kind = DataKind::codim2;
        config.max_generators = 7;
        config.max_degree = 6;
        const auto data = enumerate(config);
        expect(!data.empty(), "empty enumeration");
        for (const auto& d : data) {
            const auto& d2 = std::get<Codim2Data>(d);
            expect_eq(degree_from_hilbert(d, 3), hilbert_burch_degree(d2), describe(d));
        }
    }));

    out.push_back(run_claim(8, "Grassmannians: psi(lines in P^3) = 4; phi(nets of quadrics in P^4) = 3 * 12 = 36", [] {
        expect_eq(psi(Codim2Data{{1, 1}, {2}}, 3), BigInt(4), "lines in P^3");
        const BigInt quadrics = choose(4 + 2, 2);
        expect_eq(quadrics, BigInt(15), "quadrics in P^4");
        expect_eq(phi(net_of_quadrics, 4), BigInt(3) * (quadrics - 3), "nets of quadrics in P^4");
    }));

    return out;
}

} // namespace hilbext
