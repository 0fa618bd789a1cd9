#include "kaluza/conditions.hpp"

namespace kaluza {

namespace {

Rational predecessor_sum(const IndexTable& c, const MultiIndex& alpha)
{
    Rational sum;
    for (const auto& beta : c.monoid().predecessors(alpha)) {
        sum += c.at(beta);
    }
    return sum;
}

Violation make_violation(std::string cond, std::vector<std::vector<unsigned>> at, Rational lhs, Rational rhs)
{
    return Violation{std::move(cond), std::move(at), std::move(lhs), std::move(rhs)};
}

} // namespace

RatioTable::RatioTable(IndexTable values) : values_(std::move(values))
{
    if (sgn(values_[0]) != 0) {
        throw InputError("ratio table must vanish at the origin, got " + to_string(values_[0]));
    }
}

void require_positive_unital(const IndexTable& c, const char* what)
{
    if (!c.unital()) {
        throw InputError(std::string(what) + ": coefficient at the origin must be 1, got " + to_string(c[0]));
    }
    const auto elements = c.elements();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) <= 0) {
            throw InputError(std::string(what) + ": coefficients must be positive, c" + to_string(elements[i]) + " = "
                             + to_string(c[i]));
        }
    }
}

RatioTable ratio_table(const IndexTable& c)
{
    require_positive_unital(c, "ratio_table");
    IndexTable r(c.monoid(), c.max_degree());
    const auto elements = c.elements();
    for (std::size_t i = 1; i < c.size(); ++i) {
        r[i] = c[i] / predecessor_sum(c, elements[i]);
    }
    return RatioTable(std::move(r));
}

CheckReport check_theorem1(const IndexTable& c)
{
    const RatioTable ratios = ratio_table(c);
    const IndexTable& r = ratios.table();
    const auto& monoid = c.monoid();
    const unsigned n_max = c.max_degree();

    CheckReport report{n_max, {}};
    for (const auto& alpha : c.elements()) {
        const Rational& r_alpha = r.at(alpha);
        if (r_alpha > 1) {
            report.violations.push_back(make_violation("thm1.bound", {alpha.components}, r_alpha, Rational(1)));
        }
        if (alpha.degree() + 1 > n_max) {
            continue;
        }
        for (std::size_t k = 1; k <= monoid.dim(); ++k) {
            const MultiIndex next = monoid.compose(alpha, monoid.unit(k));
            const Rational& r_next = r.at(next);
            if (r_alpha > r_next) {
                report.violations.push_back(
                    make_violation("thm1.edge", {alpha.components, next.components}, r_alpha, r_next));
            }
        }
    }
    return report;
}

CheckReport check_theorem2(const IndexTable& c)
{
    require_positive_unital(c, "check_theorem2");
    const auto& monoid = c.monoid();
    const unsigned n_max = c.max_degree();

    CheckReport report{n_max, {}};
    for (const auto& alpha : c.elements()) {
        const Rational& c_alpha = c.at(alpha);
        const Rational bound(multinomial(alpha));
        if (c_alpha > bound) {
            report.violations.push_back(make_violation("thm2.bound", {alpha.components}, c_alpha, bound));
        }
        const unsigned deg = alpha.degree();
        if (deg + 2 > n_max) {
            continue;
        }
        for (std::size_t i = 1; i <= monoid.dim(); ++i) {
            const MultiIndex ei = monoid.unit(i);
            const MultiIndex alpha_i = monoid.compose(alpha, ei);
            for (std::size_t j = i; j <= monoid.dim(); ++j) {
                const MultiIndex ej = monoid.unit(j);
                const MultiIndex alpha_j = monoid.compose(alpha, ej);
                const MultiIndex alpha_ij = monoid.compose(alpha_i, ej);

                const Rational lhs = c.at(alpha_i) * c.at(alpha_j) / (c_alpha * c.at(alpha_ij));
                Rational rhs;
                if (i != j) {
                    rhs = Rational(deg + 1, deg + 2);
                } else {
                    const unsigned a = alpha[i - 1];
                    rhs = Rational(Integer(deg + 1) * (a + 2), Integer(deg + 2) * (a + 1));
                }
                rhs.canonicalize();
                if (lhs > rhs) {
                    report.violations.push_back(make_violation(i != j ? "thm2.ratio.offdiag" : "thm2.ratio.diag",
                                                               {alpha.components, ei.components, ej.components},
                                                               lhs, rhs));
                }
            }
        }
    }
    return report;
}

IndexTable c_from_r(const RatioTable& r)
{
    IndexTable c(r.table().monoid(), r.max_degree());
    c[0] = 1;
    const auto elements = c.elements();
    for (std::size_t i = 1; i < c.size(); ++i) {
        const Rational& ri = r.table()[i];
        if (sgn(ri) <= 0) {
            throw InputError("c_from_r: ratio must be positive off the origin, r" + to_string(elements[i]) + " = "
                             + to_string(ri));
        }
        c[i] = ri * predecessor_sum(c, elements[i]);
    }
    return c;
}

IndexTable b_from_c(const IndexTable& c)
{
    require_positive_unital(c, "b_from_c");
    IndexTable b(c.monoid(), c.max_degree());
    const auto elements = c.elements();
    for (std::size_t i = 1; i < c.size(); ++i) {
        // (1 - r) * P = P - c, where P is the predecessor sum.
        b[i] = predecessor_sum(c, elements[i]) - c[i];
    }
    return b;
}

IndexTable c_from_b(const IndexTable& b)
{
    if (sgn(b[0]) != 0) {
        throw InputError("c_from_b: b must vanish at the origin, got " + to_string(b[0]));
    }
    const IndexTable d = multinomial_table(b.dim(), b.max_degree());
    const auto& monoid = b.monoid();
    IndexTable c(monoid, b.max_degree());
    const auto elements = c.elements();
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational value = d[i];
        for (const auto& [beta, rest] : monoid.decompositions(elements[i])) {
            const Rational& b_beta = b.at(beta);
            if (sgn(b_beta) != 0) {
                value -= d.at(rest) * b_beta;
            }
        }
        c[i] = std::move(value);
    }
    return c;
}

CheckReport check_word_condition(const WordTable& f)
{
    if (!f.unital()) {
        throw InputError("check_word_condition: value at the empty word must be 1, got " + to_string(f[0]));
    }
    const auto elements = f.elements();
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (sgn(f[i]) <= 0) {
            throw InputError("check_word_condition: values must be positive, f" + to_string(elements[i]) + " = "
                             + to_string(f[i]));
        }
    }

    const auto& monoid = f.monoid();
    const unsigned n_max = f.max_degree();
    CheckReport report{n_max, {}};
    for (const auto& v : elements) {
        if (v.degree() + 2 > n_max) {
            break; // canonical order is by degree
        }
        const Rational& fv = f.at(v);
        for (unsigned a = 1; a <= monoid.dim(); ++a) {
            const Word av = monoid.compose(monoid.letter(a), v);
            const Rational lhs = f.at(av) / fv;
            for (unsigned b = 1; b <= monoid.dim(); ++b) {
                const Word bw = monoid.letter(b);
                const Rational rhs = f.at(monoid.compose(av, bw)) / f.at(monoid.compose(v, bw));
                if (lhs > rhs) {
                    report.violations.push_back(make_violation("word.ratio", {{a}, v.letters, {b}}, lhs, rhs));
                }
            }
        }
    }
    return report;
}

CheckReport check_kaluza_1d(std::span<const Rational> s)
{
    if (s.empty()) {
        throw InputError("check_kaluza_1d: empty sequence");
    }
    if (s[0] != 1) {
        throw InputError("check_kaluza_1d: s_0 must be 1, got " + to_string(s[0]));
    }
    for (std::size_t n = 1; n < s.size(); ++n) {
        if (sgn(s[n]) <= 0) {
            throw InputError("check_kaluza_1d: entries must be positive, s_" + std::to_string(n) + " = "
                             + to_string(s[n]));
        }
    }

    const auto n_max = static_cast<unsigned>(s.size() - 1);
    CheckReport report{n_max, {}};
    for (unsigned n = 1; n <= n_max; ++n) {
        const Rational ratio = s[n] / s[n - 1];
        if (ratio > 1) {
            report.violations.push_back(make_violation("kaluza.bound", {{n}}, ratio, Rational(1)));
        }
        if (n < n_max) {
            const Rational next = s[n + 1] / s[n];
            if (ratio > next) {
                report.violations.push_back(make_violation("kaluza.monotone", {{n}, {n + 1}}, ratio, next));
            }
        }
    }
    return report;
}

IndexTable product_coeffs(std::span<const std::vector<Rational>> sequences, unsigned max_degree)
{
    if (sequences.empty()) {
        throw InputError("product_coeffs: need at least one sequence");
    }
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        const auto& s = sequences[i];
        if (s.size() < static_cast<std::size_t>(max_degree) + 1) {
            throw InputError("product_coeffs: sequence " + std::to_string(i + 1) + " has " + std::to_string(s.size())
                             + " terms, degree " + std::to_string(max_degree) + " needs "
                             + std::to_string(max_degree + 1));
        }
        if (s[0] != 1) {
            throw InputError("product_coeffs: sequence " + std::to_string(i + 1) + " must start at 1");
        }
    }

    IndexTable c(MultiIndexMonoid(sequences.size()), max_degree);
    const auto elements = c.elements();
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
        Rational value(multinomial(elements[pos]));
        for (std::size_t i = 0; i < sequences.size(); ++i) {
            value *= sequences[i][elements[pos][i]];
        }
        c[pos] = std::move(value);
    }
    return c;
}

IndexTable sequence_table(std::span<const Rational> s)
{
    if (s.empty()) {
        throw InputError("sequence_table: empty sequence");
    }
    IndexTable t(MultiIndexMonoid(1), static_cast<unsigned>(s.size() - 1));
    for (std::size_t n = 0; n < s.size(); ++n) {
        t[n] = s[n];
    }
    return t;
}

} // namespace kaluza
