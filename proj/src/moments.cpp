#include "kaluza/moments.hpp"

#include "kaluza/conditions.hpp"

namespace kaluza {

namespace {

void require_probability(const std::vector<Rational>& weights, const char* what)
{
    if (weights.empty()) {
        throw InputError(std::string(what) + ": at least one atom is required");
    }
    Rational total;
    for (const auto& w : weights) {
        if (sgn(w) <= 0) {
            throw InputError(std::string(what) + ": atom weights must be positive, got " + to_string(w));
        }
        total += w;
    }
    if (total != 1) {
        throw InputError(std::string(what) + ": atom weights must sum to 1, got " + to_string(total));
    }
}

void require_unit_interval(const Rational& t, const char* what)
{
    if (sgn(t) < 0 || t > 1) {
        throw InputError(std::string(what) + ": atom location " + to_string(t) + " outside [0,1]");
    }
}

Rational power(const Rational& base, unsigned exponent)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;
}

} // namespace

MeasureSpec1D MeasureSpec1D::atomic(std::vector<Atom1D> atoms)
{
    std::vector<Rational> weights;
    for (const auto& atom : atoms) {
        require_unit_interval(atom.location, "atomic measure");
        weights.push_back(atom.weight);
    }
    require_probability(weights, "atomic measure");
    return MeasureSpec1D(Kind::atomic, std::move(atoms));
}

AtomicMeasureD::AtomicMeasureD(std::vector<AtomD> atoms) : atoms_(std::move(atoms))
{
    std::vector<Rational> weights;
    for (const auto& atom : atoms_) {
        if (atom.point.empty() || atom.point.size() != atoms_.front().point.size()) {
            throw InputError("atomic measure: atom points must share one positive dimension");
        }
        for (const auto& t : atom.point) {
            require_unit_interval(t, "atomic measure");
        }
        weights.push_back(atom.weight);
    }
    require_probability(weights, "atomic measure");
}

MomentSequence moments(const MeasureSpec1D& m, unsigned max_degree)
{
    MomentSequence s;
    s.values.reserve(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n) {
        if (m.kind() == MeasureSpec1D::Kind::lebesgue) {
            s.values.emplace_back(1, n + 1);
            continue;
        }
        Rational sum;
        for (const auto& atom : m.atoms()) {
            sum += atom.weight * power(atom.location, n);
        }
        s.values.push_back(std::move(sum));
    }
    return s;
}

IndexTable product_measure_coeffs(std::span<const MeasureSpec1D> axes, unsigned max_degree)
{
    if (axes.empty()) {
        throw InputError("product measure needs at least one axis");
    }
    std::vector<std::vector<Rational>> sequences;
    sequences.reserve(axes.size());
    for (const auto& axis : axes) {
        sequences.push_back(moments(axis, max_degree).values);
    }
    return product_coeffs(sequences, max_degree);
}

IndexTable atomic_coeffs(const AtomicMeasureD& m, unsigned max_degree)
{
    IndexTable c(MultiIndexMonoid(m.dim()), max_degree);
    const auto elements = c.elements();
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
        const auto& alpha = elements[pos];
        Rational moment;
        for (const auto& atom : m.atoms()) {
            Rational term = atom.weight;
            for (std::size_t j = 0; j < alpha.dim() && sgn(term) != 0; ++j) {
                term *= power(atom.point[j], alpha[j]);
            }
            moment += term;
        }
        c[pos] = Rational(multinomial(alpha)) * moment;
    }
    return c;
}

} // namespace kaluza
