#include <doctest.h>

#include <random>
#include <vector>

#include "valspec/errors.hpp"
#include "valspec/oracle.hpp"
#include "valspec/padic.hpp"
#include "valspec/spectra.hpp"

#include "golden_data.hpp"
#include "test_support.hpp"

using valspec::CpkTable;
using valspec::Integer;
using valspec::IntPoly;
using valspec::PolyMatrix;
using valspec::Rational;
using valspec::SpectrumQuery;
using valspec::unsupported_query;

TEST_CASE("fine counts") {
    CHECK(valspec::fine_count(Integer(8), 2) == 2);
    CHECK(valspec::fine_count(Integer(0), 7) == 1);
    CHECK(valspec::fine_count(Integer(19), 5) == 20);

    SUBCASE("digit product equals the subword product") {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            for (long n = 0; n <= 3000; ++n) {
                Integer subword_form(1);
                for (unsigned long d = 0; d < p; ++d) {
                    const std::vector<unsigned long> w{d};
                    const std::size_t reps = valspec::subword_count(Integer(n), p, w);
                    for (std::size_t r = 0; r < reps; ++r) subword_form *= d + 1;
                }
                REQUIRE(valspec::fine_count(Integer(n), p) == subword_form);
            }
        }
    }
}

TEST_CASE("tuple-count table") {
    CHECK(valspec::cpk(5, 3, Integer(6)) == 19);
    CHECK(valspec::cpk(5, 3, Integer(-1)) == 0);
    CHECK(valspec::cpk(5, 4, Integer(8)) == 85);
    CHECK(valspec::cpk(5, 0, Integer(0)) == 1);
    CHECK(valspec::cpk(5, 0, Integer(1)) == 0);

    SUBCASE("base-5 triangle rows") {
        for (unsigned int k = 0; k <= 4; ++k) {
            const CpkTable table(5, k);
            REQUIRE(table.values().size() == golden::c5_triangle[k].size());
            for (std::size_t n = 0; n < table.values().size(); ++n) {
                REQUIRE(table.values()[n] == golden::c5_triangle[k][n]);
            }
        }
    }
    SUBCASE("symmetry and row sums") {
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            for (unsigned int k = 1; k <= 4; ++k) {
                const long top = static_cast<long>(p - 1) * k;
                Integer row_sum(0);
                for (long n = 0; n <= top; ++n) {
                    REQUIRE(valspec::cpk(p, k, Integer(n)) == valspec::cpk(p, k, Integer(top - n)));
                    row_sum += valspec::cpk(p, k, Integer(n));
                }
                Integer p_to_k(1);
                for (unsigned int i = 0; i < k; ++i) p_to_k *= p;
                REQUIRE(row_sum == p_to_k);
            }
        }
    }
    SUBCASE("matches the coefficient of x^n in (1 + x + ... + x^(p-1))^k") {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            std::vector<Integer> ones(p, Integer(1));
            const IntPoly window{std::vector<Integer>(ones)};
            for (unsigned int k = 0; k <= 4; ++k) {
                IntPoly power = IntPoly::one();
                for (unsigned int i = 0; i < k; ++i) power = power * window;
                const long top = static_cast<long>(p - 1) * k;
                for (long n = -2; n <= top + 2; ++n) {
                    const Integer expect = n < 0 ? Integer(0) : power.coeff(static_cast<std::size_t>(n));
                    REQUIRE(valspec::cpk(p, k, Integer(n)) == expect);
                }
            }
        }
    }
}

TEST_CASE("digit matrices") {
    SUBCASE("3x3 base-5 matrices match the known display") {
        for (unsigned long d = 0; d <= 4; ++d) {
            REQUIRE(valspec::transition_matrix(5, 3, d) == golden::m53_matrix(d));
        }
    }
    SUBCASE("k = 2 specializes to [[d+1, p-d-1], [dx, (p-d)x]]") {
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
            for (unsigned long d = 0; d < p; ++d) {
                PolyMatrix expect(2);
                expect.set(0, 0, IntPoly(Integer(d + 1)));
                expect.set(0, 1, IntPoly(Integer(p - d - 1)));
                expect.set(1, 0, IntPoly::monomial(Integer(d), 1));
                expect.set(1, 1, IntPoly::monomial(Integer(p - d), 1));
                REQUIRE(valspec::transition_matrix(p, 2, d) == expect);
            }
        }
    }
    SUBCASE("row action worked example") {
        const std::vector<IntPoly> v{IntPoly::one(), IntPoly(Integer(3)), IntPoly()};
        const auto out = valspec::row_vec_mat(v, valspec::transition_matrix(2, 3, 1));
        CHECK(out[0] == golden::poly_from({3, 3}));
        CHECK(out[1] == golden::poly_from({1, 9}));
        CHECK(out[2] == IntPoly());
    }
    SUBCASE("digit out of range") {
        CHECK_THROWS_AS(valspec::transition_matrix(5, 3, 5), std::invalid_argument);
    }
}

TEST_CASE("spectrum golden values") {
    for (long n = 0; n <= 15; ++n) {
        CHECK(valspec::spectrum(SpectrumQuery(2, 2, Integer(n))) ==
              golden::poly_from(golden::t2_table[static_cast<std::size_t>(n)]));
    }
    CHECK(valspec::spectrum(SpectrumQuery(7, 2, Integer(0))) == IntPoly::one());
    CHECK(valspec::spectrum(SpectrumQuery(2, 3, Integer(2))) == golden::poly_from({3, 3}));
    CHECK(valspec::spectrum(SpectrumQuery(3, 1, Integer(1000))) == IntPoly::one());
}

TEST_CASE("spectrum state") {
    SUBCASE("initial state") {
        const auto state = valspec::spectrum_state(SpectrumQuery(3, 4, Integer(0)));
        REQUIRE(state.size() == 4);
        CHECK(state[0] == IntPoly::one());
        for (std::size_t i = 1; i < 4; ++i) CHECK(state[i].is_zero());
    }
    SUBCASE("one digit") {
        const auto state = valspec::spectrum_state(SpectrumQuery(2, 2, Integer(1)));
        CHECK(state[0] == IntPoly(Integer(2)));
        CHECK(state[1] == IntPoly::monomial(Integer(1), 1));
    }
    SUBCASE("component 1 carries the shifted previous row") {
        const auto state = valspec::spectrum_state(SpectrumQuery(2, 2, Integer(4)));
        CHECK(state[0] == golden::poly_from({2, 1, 2}));
        CHECK(state[1] == IntPoly::monomial(Integer(4), 3)); // x^{nu(4)+1} T_2(3,x)
    }
    SUBCASE("components restate the shifted-spectrum definition") {
        for (unsigned long p : {2ul, 3ul}) {
            for (unsigned int k : {2u, 3u}) {
                for (long n = 0; n <= 60; ++n) {
                    const auto state = valspec::spectrum_state(SpectrumQuery(p, k, Integer(n)));
                    REQUIRE(state[0] == valspec::spectrum(SpectrumQuery(p, k, Integer(n))));
                    for (unsigned int i = 0; i < k; ++i) {
                        if (n < static_cast<long>(i)) {
                            REQUIRE(state[i].is_zero());
                        } else {
                            const Integer shift =
                                valspec::legendre(Integer(n), p) - valspec::legendre(Integer(n - i), p);
                            const IntPoly expect =
                                IntPoly::monomial(Integer(1), shift.get_ui() + i) *
                                valspec::spectrum(SpectrumQuery(p, k, Integer(n - i)));
                            REQUIRE(state[i] == expect);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("scalar recurrence path") {
    CHECK(valspec::spectrum_by_recurrence(SpectrumQuery(2, 2, Integer(9))) ==
          golden::poly_from({4, 2, 4}));
    CHECK(valspec::spectrum_by_recurrence(SpectrumQuery(2, 2, Integer(0))) == IntPoly::one());
    CHECK(valspec::spectrum_by_recurrence(SpectrumQuery(3, 2, Integer(10))) ==
          valspec::spectrum(SpectrumQuery(3, 2, Integer(10))));
    CHECK_THROWS_AS(valspec::spectrum_by_recurrence(SpectrumQuery(2, 3, Integer(5))),
                    unsupported_query);

    SUBCASE("agrees with the matrix path") {
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            for (long n = 0; n <= 600; ++n) {
                REQUIRE(valspec::spectrum_by_recurrence(SpectrumQuery(p, 2, Integer(n))) ==
                        valspec::spectrum(SpectrumQuery(p, 2, Integer(n))));
            }
        }
    }
}

TEST_CASE("normalized spectrum") {
    const auto normalized = valspec::spectrum_normalized(SpectrumQuery(2, 2, Integer(8)));
    CHECK(normalized.coeff(0) == 1);
    CHECK(normalized.coeff(1) == Rational(1, 2));
    CHECK(normalized.coeff(2) == 1);
    CHECK(normalized.coeff(3) == 2);
    CHECK(valspec::spectrum_normalized(SpectrumQuery(2, 2, Integer(3))) ==
          valspec::RatPoly(std::vector<Rational>{Rational(1)}));
    CHECK_THROWS_AS(valspec::spectrum_normalized(SpectrumQuery(2, 3, Integer(3))),
                    unsupported_query);

    SUBCASE("value at zero is one") {
        for (long n = 0; n <= 400; ++n) {
            REQUIRE(valspec::spectrum_normalized(SpectrumQuery(3, 2, Integer(n))).eval(Rational(0)) == 1);
        }
    }
}

TEST_CASE("multinomial fine count") {
    CHECK(valspec::multinomial_fine_count(Integer(8), 2, 2) == 2);
    CHECK(valspec::multinomial_fine_count(Integer(0), 3, 5) == 1);
    CHECK(valspec::multinomial_fine_count(Integer(2), 2, 3) == 3);

    SUBCASE("equals the constant term of the spectrum") {
        for (unsigned long p : {2ul, 3ul}) {
            for (unsigned int k : {2u, 3u, 4u}) {
                for (long n = 0; n <= 80; ++n) {
                    REQUIRE(valspec::multinomial_fine_count(Integer(n), p, k) ==
                            valspec::coefficient(valspec::spectrum(SpectrumQuery(p, k, Integer(n))), 0));
                }
            }
        }
    }
}

TEST_CASE("coefficient extraction") {
    const IntPoly t8 = valspec::spectrum(SpectrumQuery(2, 2, Integer(8)));
    CHECK(valspec::coefficient(t8, 3) == 4);
    CHECK(valspec::coefficient(t8, 9) == 0);
    CHECK(valspec::coefficient(valspec::spectrum(SpectrumQuery(2, 2, Integer(0))), 0) == 1);
    CHECK(valspec::coefficient(valspec::spectrum(SpectrumQuery(2, 2, Integer(12))), 1) == 2);
}

TEST_CASE("spectrum properties") {
    SUBCASE("mass: value at 1 counts all tuples") {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            for (long n = 0; n <= 500; ++n) {
                REQUIRE(valspec::spectrum(SpectrumQuery(p, 2, Integer(n))).eval(Integer(1)) == n + 1);
            }
        }
        for (unsigned int k : {1u, 3u, 4u}) {
            for (long n = 0; n <= 60; ++n) {
                Integer expect;
                mpz_bin_uiui(expect.get_mpz_t(), static_cast<unsigned long>(n) + k - 1, k - 1);
                REQUIRE(valspec::spectrum(SpectrumQuery(2, k, Integer(n))).eval(Integer(1)) == expect);
            }
        }
    }
    SUBCASE("carry-scaling recurrence as a black-box property of the matrix path") {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            for (long n = 1; n <= 150; ++n) {
                const IntPoly tn = valspec::spectrum(SpectrumQuery(p, 2, Integer(n)));
                const IntPoly tn_prev = valspec::spectrum(SpectrumQuery(p, 2, Integer(n - 1)));
                for (unsigned long d = 0; d < p; ++d) {
                    const IntPoly lhs =
                        valspec::spectrum(SpectrumQuery(p, 2, Integer(p) * n + Integer(d)));
                    IntPoly rhs = Integer(d + 1) * tn;
                    if (d + 1 < p) {
                        rhs += IntPoly::monomial(Integer(p - d - 1), valspec::nu(Integer(n), p) + 1) *
                               tn_prev;
                    }
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
    SUBCASE("random triples: non-negative coefficients, degree bound, zero padding") {
        std::mt19937_64 rng(42);
        const std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
        for (int trial = 0; trial < 500; ++trial) {
            const unsigned long p = primes[rng() % primes.size()];
            const unsigned int k = 1 + static_cast<unsigned int>(rng() % 4);
            const Integer n = support::random_integer(rng, 1 + static_cast<unsigned>(rng() % 48));
            const auto digits = valspec::to_digits(n, p).digits();
            const IntPoly t = valspec::spectrum(SpectrumQuery(p, k, n));

            for (const auto& c : t.coeffs()) REQUIRE(c >= 0);
            if (n >= 1) {
                // The valuation is the total carry mass of a k-fold base-p
                // addition: at most k-1 per digit position below the top one.
                REQUIRE(t.degree().value() <= (k - 1) * (digits.size() - 1));
                if (k == 2) REQUIRE(t.degree().value() <= digits.size() - 1);
            } else {
                REQUIRE(t.degree().value() == 0);
            }

            auto padded = digits;
            padded.insert(padded.end(), 1 + rng() % 3, 0ul);
            REQUIRE(valspec::spectrum_over_digits(p, k, padded) == t);
        }
    }
}

TEST_CASE("spectrum equals the enumeration oracle") {
    SUBCASE("binomial") {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            for (long n = 0; n <= 300; ++n) {
                REQUIRE(valspec::spectrum(SpectrumQuery(p, 2, Integer(n))) ==
                        valspec::oracle::oracle_spectrum(SpectrumQuery(p, 2, Integer(n))));
            }
        }
    }
    SUBCASE("multinomial") {
        for (unsigned long p : {2ul, 3ul}) {
            for (unsigned int k : {3u, 4u}) {
                for (long n = 0; n <= 40; ++n) {
                    REQUIRE(valspec::spectrum(SpectrumQuery(p, k, Integer(n))) ==
                            valspec::oracle::oracle_spectrum(SpectrumQuery(p, k, Integer(n))));
                }
            }
        }
    }
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(SpectrumQuery(6, 2, Integer(3)), valspec::invalid_modulus);
    CHECK_THROWS_AS(SpectrumQuery(2, 0, Integer(3)), std::invalid_argument);
    CHECK_THROWS_AS(SpectrumQuery(2, 2, Integer(-3)), std::invalid_argument);
}
