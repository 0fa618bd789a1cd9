#include "kaluza/series.hpp"

#include <cmath>

namespace kaluza {

IndexTable multinomial_table(std::size_t dim, unsigned max_degree)
{
    IndexTable out(MultiIndexMonoid(dim), max_degree);
    const auto elements = out.elements();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = multinomial(elements[i]);
    }
    return out;
}

std::complex<double> evaluate(const IndexTable& f, std::span<const std::complex<double>> z)
{
    if (z.size() != f.dim()) {
        throw InputError("evaluation point has " + std::to_string(z.size()) + " coordinates, table dimension is "
                         + std::to_string(f.dim()));
    }
    double norm1 = 0.0;
    for (const auto& zj : z) {
        norm1 += std::abs(zj);
    }
    if (!(norm1 < 1.0)) {
        throw InputError("evaluation point lies outside the open l1 unit ball (||z||_1 = " + std::to_string(norm1)
                         + ")");
    }

    // Power tables per coordinate, then one monomial product per entry.
    std::vector<std::vector<std::complex<double>>> powers(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        powers[j].resize(f.max_degree() + 1);
        powers[j][0] = 1.0;
        for (unsigned k = 1; k <= f.max_degree(); ++k) {
            powers[j][k] = powers[j][k - 1] * z[j];
        }
    }

    std::complex<double> sum = 0.0;
    const auto elements = f.elements();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f[i]) == 0) {
            continue;
        }
        std::complex<double> term = f[i].get_d();
        for (std::size_t j = 0; j < z.size(); ++j) {
            term *= powers[j][elements[i][j]];
        }
        sum += term;
    }
    return sum;
}

} // namespace kaluza
