#include "kaluza/symmetrize.hpp"

namespace kaluza {

LiftedTable lift(const IndexTable& c, TableLimits limits)
{
    if (!c.unital()) {
        throw InputError("lift: coefficient at the origin must be 1, got " + to_string(c[0]));
    }
    WordTable f(WordMonoid(c.dim()), c.max_degree(), limits);

    std::vector<Rational> per_index(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        per_index[i] = c[i] / Rational(multinomial(c.elements()[i]));
    }
    const auto words = f.elements();
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = per_index[c.position(abelianize(words[i], c.dim()))];
    }
    return LiftedTable(std::move(f), c);
}

IndexTable symmetrize(const WordTable& g)
{
    IndexTable out(MultiIndexMonoid(g.dim()), g.max_degree());
    const auto indices = out.elements();
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational sum;
        for (const auto& w : fiber(indices[i])) {
            sum += g.at(w);
        }
        out[i] = std::move(sum);
    }
    return out;
}

IndexTable solve_via_words(const IndexTable& c, TableLimits limits, const SolveOptions& options)
{
    const LiftedTable f = lift(c, limits);
    return symmetrize(solve_renewal(f.words(), options));
}

} // namespace kaluza
