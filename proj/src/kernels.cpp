#include "kaluza/kernels.hpp"

namespace kaluza {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::cnp_certified_thm1:
        return "cnp_certified_thm1";
    case Verdict::cnp_certified_thm2:
        return "cnp_certified_thm2";
    case Verdict::cnp_certified_both:
        return "cnp_certified_both";
    case Verdict::cnp_witnessed:
        return "cnp_witnessed";
    case Verdict::not_cnp:
        return "not_cnp";
    }
    return "unknown";
}

IndexTable coeffs_from_norms(const IndexTable& norms_squared)
{
    if (norms_squared[0] != 1) {
        throw InputError("kernel must be normalized: ||1||^2 = " + to_string(norms_squared[0]));
    }
    IndexTable c(norms_squared.monoid(), norms_squared.max_degree());
    const auto elements = c.elements();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(norms_squared[i]) <= 0) {
            throw InputError("norm of z^" + to_string(elements[i]) + " must be positive, got "
                             + to_string(norms_squared[i]));
        }
        c[i] = 1 / norms_squared[i];
    }
    return c;
}

IndexTable besov_norms(unsigned max_degree)
{
    IndexTable norms(MultiIndexMonoid(2), max_degree);
    const auto elements = norms.elements();
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const unsigned m = elements[i][0];
        const unsigned n = elements[i][1];
        norms[i] = Rational(factorial(m + 1) * factorial(n + 1), factorial(m + n));
        norms[i].canonicalize();
    }
    return norms;
}

CertReport certify(const IndexTable& c, const SolveOptions& options)
{
    if (!c.unital()) {
        throw InputError("certify: coefficient at the origin must be 1, got " + to_string(c[0]));
    }

    CertReport report;
    report.checked_degree = c.max_degree();

    const auto elements = c.elements();
    std::optional<std::size_t> non_positive;
    for (std::size_t i = 1; i < c.size() && !non_positive; ++i) {
        if (sgn(c[i]) <= 0) {
            non_positive = i;
        }
    }
    if (non_positive) {
        const Violation v{"hypothesis.positive", {elements[*non_positive].components}, c[*non_positive], Rational(0)};
        report.thm1 = CheckReport{c.max_degree(), {v}};
        report.thm2 = CheckReport{c.max_degree(), {v}};
    } else {
        report.thm1 = check_theorem1(c);
        report.thm2 = check_theorem2(c);
    }

    const IndexTable q = solve_renewal(c, options);
    report.q_min = IndexedValue{elements[0], q[0]};
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (i == 1 || q[i] < report.q_min.value) {
            report.q_min = IndexedValue{elements[i], q[i]};
        }
        if (sgn(q[i]) < 0) {
            report.negatives.push_back(IndexedValue{elements[i], q[i]});
        }
    }
    if (!report.negatives.empty()) {
        report.witness = report.negatives.front();
    }

    if (report.thm1.passed()) {
        report.dbr_b = b_from_c(c);
    }

    if (report.witness) {
        report.verdict = Verdict::not_cnp;
    } else if (report.thm1.passed() && report.thm2.passed()) {
        report.verdict = Verdict::cnp_certified_both;
    } else if (report.thm1.passed()) {
        report.verdict = Verdict::cnp_certified_thm1;
    } else if (report.thm2.passed()) {
        report.verdict = Verdict::cnp_certified_thm2;
    } else {
        report.verdict = Verdict::cnp_witnessed;
    }
    return report;
}

} // namespace kaluza
