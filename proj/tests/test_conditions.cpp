#include <doctest.h>

#include <algorithm>

#include "kaluza/conditions.hpp"
#include "test_support.hpp"

using namespace kaluza;
using kaluza::testing::Rng;

namespace {

// c(m,n) = (m+n)!/((m+1)!(n+1)!), written out directly.
IndexTable lebesgue_square(unsigned n_max)
{
    IndexTable c(MultiIndexMonoid(2), n_max);
    for (const auto& alpha : c.elements()) {
        Rational v(factorial(alpha[0] + alpha[1]), factorial(alpha[0] + 1) * factorial(alpha[1] + 1));
        v.canonicalize();
        c.set(alpha, v);
    }
    return c;
}

// r(e1) = a, r(e2) = b, r = 1 elsewhere off the origin.
RatioTable two_parameter_ratios(const Rational& a, const Rational& b, unsigned n_max)
{
    IndexTable r(MultiIndexMonoid(2), n_max);
    for (std::size_t i = 1; i < r.size(); ++i) {
        r[i] = 1;
    }
    if (n_max >= 1) {
        r.set({1, 0}, a);
        r.set({0, 1}, b);
    }
    return RatioTable(std::move(r));
}

IndexTable geometric_1d(const Rational& s, unsigned n_max)
{
    IndexTable c(MultiIndexMonoid(1), n_max);
    c[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        c[n] = c[n - 1] * s;
    }
    return c;
}

bool has_violation(const CheckReport& report, const std::string& cond, const std::vector<std::vector<unsigned>>& at,
                   const Rational& lhs, const Rational& rhs)
{
    return std::any_of(report.violations.begin(), report.violations.end(), [&](const Violation& v) {
        return v.cond == cond && v.at == at && v.lhs == lhs && v.rhs == rhs;
    });
}

// Brute-force monotonicity over every comparable pair, plus the bound.
bool ratios_monotone_bounded(const RatioTable& r)
{
    const auto elements = r.table().elements();
    for (const auto& alpha : elements) {
        if (r.at(alpha) > 1) {
            return false;
        }
        for (const auto& beta : elements) {
            if (partial_leq(alpha, beta) && r.at(alpha) > r.at(beta)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("ratio_table")
{
    const auto r = ratio_table(lebesgue_square(4));
    CHECK(r.at({0, 2}) == Rational(2, 3));
    CHECK(r.at({1, 2}) == Rational(3, 5));
    CHECK(r.at({0, 0}) == 0);

    IndexTable bad = lebesgue_square(3);
    bad.set({1, 1}, 0);
    CHECK_THROWS_AS(ratio_table(bad), InputError);
    bad.set({1, 1}, -1);
    CHECK_THROWS_AS(ratio_table(bad), InputError);
    IndexTable not_unital = lebesgue_square(3);
    not_unital[0] = 2;
    CHECK_THROWS_AS(ratio_table(not_unital), InputError);
}

TEST_CASE("check_theorem1")
{
    for (unsigned n = 3; n <= 6; ++n) {
        CHECK(check_theorem1(c_from_r(two_parameter_ratios(Rational(1, 3), Rational(2, 3), n))).passed());
    }

    const auto report = check_theorem1(lebesgue_square(4));
    CHECK_FALSE(report.passed());
    CHECK(report.checked_degree == 4);
    CHECK(has_violation(report, "thm1.edge", {{0, 2}, {1, 2}}, Rational(2, 3), Rational(3, 5)));

    // Multinomial coefficients: r is identically 1 off the origin (Pascal).
    for (std::size_t d = 1; d <= 3; ++d) {
        for (unsigned n = 0; n <= 6; ++n) {
            const auto c = multinomial_table(d, n);
            const auto r = ratio_table(c);
            for (std::size_t i = 1; i < c.size(); ++i) {
                Integer pred_sum = 0;
                for (std::size_t k = 0; k < d; ++k) {
                    if (c.elements()[i][k] > 0) {
                        auto beta = c.elements()[i].components;
                        --beta[k];
                        pred_sum += multinomial(MultiIndex(beta));
                    }
                }
                CHECK(pred_sum == multinomial(c.elements()[i]));
                CHECK(r.table()[i] == 1);
            }
            CHECK(check_theorem1(c).passed());
        }
    }
}

TEST_CASE("check_theorem2")
{
    CHECK(check_theorem2(lebesgue_square(8)).passed());

    const auto c = c_from_r(two_parameter_ratios(Rational(1, 3), Rational(2, 3), 4));
    const auto report = check_theorem2(c);
    CHECK_FALSE(report.passed());
    CHECK(has_violation(report, "thm2.ratio.offdiag", {{1, 0}, {1, 0}, {0, 1}}, Rational(3, 4), Rational(2, 3)));

    // d = 1 geometric sequences: every ratio test is an equality.
    for (const Rational s : {Rational(1, 2), Rational(1, 3), Rational(9, 10), Rational(1)}) {
        for (unsigned n = 0; n <= 10; ++n) {
            const auto g = geometric_1d(s, n);
            for (unsigned k = 0; k + 2 <= n; ++k) {
                CHECK(g[k + 1] * g[k + 1] / (g[k] * g[k + 2]) == 1);
            }
            CHECK(check_theorem2(g).passed());
        }
    }

    // Bound violation: c(e1) = 2 > 1.
    IndexTable big = multinomial_table(2, 2);
    big.set({1, 0}, 2);
    const auto bound_report = check_theorem2(big);
    CHECK(has_violation(bound_report, "thm2.bound", {{1, 0}}, Rational(2), Rational(1)));
}

TEST_CASE("c_from_r")
{
    const auto c = c_from_r(two_parameter_ratios(Rational(1, 3), Rational(2, 3), 4));
    CHECK(c.at({1, 0}) == Rational(1, 3));
    CHECK(c.at({0, 1}) == Rational(2, 3));
    CHECK(c.at({2, 0}) == Rational(1, 3));
    CHECK(c.at({1, 1}) == 1);
    CHECK(c.at({2, 1}) == Rational(4, 3));

    for (std::size_t d = 1; d <= 3; ++d) {
        IndexTable ones(MultiIndexMonoid(d), 5);
        for (std::size_t i = 1; i < ones.size(); ++i) {
            ones[i] = 1;
        }
        CHECK(c_from_r(RatioTable(ones)) == multinomial_table(d, 5));
    }

    IndexTable rs(MultiIndexMonoid(1), 6);
    for (std::size_t i = 1; i < rs.size(); ++i) {
        rs[i] = Rational(2, 5);
    }
    CHECK(c_from_r(RatioTable(rs)) == geometric_1d(Rational(2, 5), 6));

    IndexTable nonzero_origin(MultiIndexMonoid(2), 2);
    nonzero_origin[0] = 1;
    CHECK_THROWS_AS(RatioTable{nonzero_origin}, InputError);
    IndexTable with_zero(MultiIndexMonoid(2), 2);
    with_zero.set({1, 0}, 1);
    CHECK_THROWS_AS(c_from_r(RatioTable(with_zero)), InputError);
}

TEST_CASE("b_from_c")
{
    const auto c = c_from_r(two_parameter_ratios(Rational(1, 3), Rational(2, 3), 5));
    const auto b = b_from_c(c);
    CHECK(b.at({1, 0}) == Rational(2, 3));
    CHECK(b.at({0, 1}) == Rational(1, 3));
    for (const auto& alpha : b.elements()) {
        if (alpha != MultiIndex{1, 0} && alpha != MultiIndex{0, 1}) {
            CHECK(b.at(alpha) == 0);
        }
    }

    CHECK(is_zero(b_from_c(multinomial_table(3, 4))));

    const Rational s(3, 7);
    const auto bg = b_from_c(geometric_1d(s, 6));
    CHECK(bg[0] == 0);
    CHECK(bg[1] == 1 - s);
    Rational s_pow = 1;
    for (unsigned n = 2; n <= 6; ++n) {
        s_pow *= s;
        CHECK(bg[n] == s_pow * (1 - s));
    }

    IndexTable bad = multinomial_table(2, 2);
    bad.set({1, 1}, 0);
    CHECK_THROWS_AS(b_from_c(bad), InputError);
}

TEST_CASE("c_from_b")
{
    IndexTable b(MultiIndexMonoid(2), 4);
    b.set({1, 0}, Rational(2, 3));
    b.set({0, 1}, Rational(1, 3));
    const auto c = c_from_b(b);
    CHECK(c.at({1, 0}) == Rational(1, 3));
    CHECK(c.at({0, 1}) == Rational(2, 3));

    CHECK(c_from_b(IndexTable(MultiIndexMonoid(3), 4)) == multinomial_table(3, 4));

    for (unsigned n = 0; n <= 5; ++n) {
        const auto c4 = c_from_r(two_parameter_ratios(Rational(1, 3), Rational(2, 3), n));
        CHECK(c_from_b(b_from_c(c4)) == c4);
    }

    IndexTable bad(MultiIndexMonoid(2), 2);
    bad[0] = Rational(1, 2);
    CHECK_THROWS_AS(c_from_b(bad), InputError);
}

TEST_CASE("check_word_condition")
{
    WordTable ones(WordMonoid(2), 4);
    for (std::size_t i = 0; i < ones.size(); ++i) {
        ones[i] = 1;
    }
    CHECK(check_word_condition(ones).passed());

    WordTable f = ones;
    f.set({1, 1}, 3);
    const auto report = check_word_condition(f);
    CHECK_FALSE(report.passed());
    // a = 1, v = "1", b = 2: f(11)/f(1) = 3 against f(112)/f(12) = 1.
    CHECK(has_violation(report, "word.ratio", {{1}, {1}, {2}}, Rational(3), Rational(1)));

    WordTable zero = ones;
    zero.set({2, 1}, 0);
    CHECK_THROWS_AS(check_word_condition(zero), InputError);
}

TEST_CASE("check_kaluza_1d")
{
    std::vector<Rational> harmonic;
    for (unsigned n = 0; n <= 10; ++n) {
        harmonic.emplace_back(1, n + 1);
    }
    CHECK(check_kaluza_1d(harmonic).passed());

    const std::vector<Rational> flat{1, Rational(1, 2), Rational(1, 2)};
    CHECK(check_kaluza_1d(flat).passed());

    const std::vector<Rational> dip{1, Rational(1, 2), Rational(1, 8), Rational(1, 16)};
    const auto report = check_kaluza_1d(dip);
    CHECK_FALSE(report.passed());
    CHECK(has_violation(report, "kaluza.monotone", {{1}, {2}}, Rational(1, 2), Rational(1, 4)));
    CHECK(report.violations.size() == 1);

    const std::vector<Rational> growing{1, Rational(3, 2)};
    CHECK(has_violation(check_kaluza_1d(growing), "kaluza.bound", {{1}}, Rational(3, 2), Rational(1)));

    CHECK_THROWS_AS(check_kaluza_1d(std::vector<Rational>{2}), InputError);
    CHECK_THROWS_AS(check_kaluza_1d(std::vector<Rational>{1, 0}), InputError);
    CHECK_THROWS_AS(check_kaluza_1d(std::vector<Rational>{}), InputError);
}

TEST_CASE("product_coeffs")
{
    std::vector<Rational> harmonic;
    for (unsigned n = 0; n <= 6; ++n) {
        harmonic.emplace_back(1, n + 1);
    }
    const std::vector<std::vector<Rational>> leb{harmonic, harmonic};
    CHECK(product_coeffs(leb, 6) == lebesgue_square(6));

    const std::vector<std::vector<Rational>> ones(3, std::vector<Rational>(5, Rational(1)));
    CHECK(product_coeffs(ones, 4) == multinomial_table(3, 4));

    const Rational t(2, 9);
    std::vector<Rational> powers{1};
    for (unsigned n = 1; n <= 5; ++n) {
        powers.push_back(powers.back() * t);
    }
    const std::vector<std::vector<Rational>> mixed{powers, std::vector<Rational>(6, Rational(1))};
    const auto c = product_coeffs(mixed, 5);
    for (const auto& alpha : c.elements()) {
        Rational expected(multinomial(alpha));
        for (unsigned k = 0; k < alpha[0]; ++k) {
            expected *= t;
        }
        CHECK(c.at(alpha) == expected);
    }

    CHECK_THROWS_AS(product_coeffs(leb, 7), InputError);
}

TEST_CASE("theorem 1 soundness on random monotone ratio tables")
{
    Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = trial % 3 + 1;
        const unsigned n = 2 + trial % 5;
        const auto r = testing::random_monotone_ratios(rng, d, n);
        const auto c = c_from_r(r);
        CHECK(ratio_table(c) == r);
        CHECK(check_theorem1(c).passed());
        const auto q = solve_renewal(c);
        CHECK(is_nonnegative(q));
        CHECK(is_nonnegative(b_from_c(c)));
    }
}

TEST_CASE("theorem 2 soundness on product measures and perturbations")
{
    Rng rng(202);
    std::uniform_int_distribution<int> pick_percent(90, 110);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = trial % 3 + 1;
        const unsigned n = 5;
        std::vector<MeasureSpec1D> axes;
        for (std::size_t i = 0; i < d; ++i) {
            axes.push_back(testing::random_atomic_measure(rng));
        }
        auto c = product_measure_coeffs(axes, n);
        REQUIRE(check_theorem2(c).passed());
        CHECK(is_nonnegative(solve_renewal(c)));

        // Random rescalings that keep the hypothesis.
        std::uniform_int_distribution<std::size_t> pick(1, c.size() - 1);
        for (int step = 0; step < 10; ++step) {
            auto trial_c = c;
            const std::size_t pos = pick(rng);
            trial_c[pos] *= Rational(pick_percent(rng), 100);
            if (check_theorem2(trial_c).passed()) {
                c = trial_c;
            }
        }
        CHECK(is_nonnegative(solve_renewal(c)));
    }
}

TEST_CASE("edge scan equals the full partial-order scan")
{
    Rng rng(303);
    int disagreements = 0;
    int passes = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = trial % 3 + 1;
        const unsigned n = 1 + trial % 5;
        IndexTable r(MultiIndexMonoid(d), n);
        if (trial % 2 == 0) {
            r = testing::random_monotone_ratios(rng, d, n, 6).table();
            // Occasionally break monotonicity or the bound in one place.
            if (trial % 4 == 0 && r.size() > 1) {
                std::uniform_int_distribution<std::size_t> pick(1, r.size() - 1);
                r[pick(rng)] = testing::random_fraction(rng, 1, 8, 6);
            }
        } else {
            for (std::size_t i = 1; i < r.size(); ++i) {
                r[i] = testing::random_fraction(rng, 1, 7, 6);
            }
        }
        const RatioTable ratios(r);
        const auto c = c_from_r(ratios);
        const bool edge = check_theorem1(c).passed();
        passes += edge ? 1 : 0;
        disagreements += edge != ratios_monotone_bounded(ratios) ? 1 : 0;
    }
    CHECK(disagreements == 0);
    CHECK(passes > 10);
}

TEST_CASE("round trips between c, r and b")
{
    Rng rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        const MultiIndexMonoid m(trial % 3 + 1);
        IndexTable c(m, 5);
        c[0] = 1;
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i] = testing::random_fraction(rng, 1, 9, 7);
        }
        CHECK(c_from_r(ratio_table(c)) == c);
        CHECK(c_from_b(b_from_c(c)) == c);

        // c * (1 - z_1 - ... - z_d) = delta - b as truncated series.
        IndexTable linear(m, 5);
        linear[0] = 1;
        for (std::size_t k = 1; k <= m.dim(); ++k) {
            linear.set(m.unit(k), -1);
        }
        const auto lhs = convolve(c, linear);
        const auto b = b_from_c(c);
        auto rhs = delta(m, 5);
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            rhs[i] -= b[i];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("one-variable conditions reduce to the classical hypothesis")
{
    // Every sequence with ratios from the grid below, N <= 4.
    const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(5, 4)};
    int total = 0;
    for (unsigned n = 0; n <= 4; ++n) {
        std::vector<std::size_t> digits(n, 0);
        for (;;) {
            std::vector<Rational> s{Rational(1)};
            for (unsigned k = 0; k < n; ++k) {
                s.push_back(s.back() * grid[digits[k]]);
            }
            const auto table = sequence_table(s);
            const bool kaluza = check_kaluza_1d(s).passed();
            const bool thm1 = check_theorem1(table).passed();
            const bool thm2 = check_theorem2(table).passed();
            const bool last_ratio_bounded = n == 0 || s[n] <= s[n - 1];
            CHECK(thm1 == kaluza);
            if (kaluza) {
                CHECK(thm2);
                CHECK(is_nonnegative(solve_renewal(table)));
            }
            if (thm2 && last_ratio_bounded) {
                CHECK(kaluza);
            }
            ++total;

            std::size_t i = 0;
            while (i < n && ++digits[i] == grid.size()) {
                digits[i++] = 0;
            }
            if (i == n) {
                break;
            }
        }
    }
    CHECK(total == 1 + 5 + 25 + 125 + 625);
}
