#include "kaluza/monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kaluza/error.hpp"

namespace kaluza {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw GuardError("binomial coefficient overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw GuardError("element count overflows 64 bits");
    }
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw GuardError("element count overflows 64 bits");
    }
    return out;
}

// Compositions of n into `parts` non-negative parts.
std::uint64_t compositions(unsigned n, std::size_t parts)
{
    if (parts == 0) {
        return n == 0 ? 1 : 0;
    }
    return binomial(n + parts - 1, parts - 1);
}

std::string join(const std::vector<unsigned>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

std::string to_string(MonoidKind kind)
{
    return kind == MonoidKind::multiindex ? "multiindex" : "word";
}

unsigned MultiIndex::degree() const noexcept
{
    return std::accumulate(components.begin(), components.end(), 0U);
}

std::string to_string(const MultiIndex& alpha)
{
    return "(" + join(alpha.components, ",") + ")";
}

std::string to_string(const Word& w)
{
    return w.letters.empty() ? std::string("<empty>") : "\"" + join(w.letters, "") + "\"";
}

// ---------------------------------------------------------------------------
// MultiIndexMonoid

MultiIndexMonoid::MultiIndexMonoid(std::size_t dim) : dim_(dim)
{
    if (dim == 0) {
        throw InputError("dimension must be positive");
    }
}

MultiIndex MultiIndexMonoid::unit(std::size_t k) const
{
    if (k < 1 || k > dim_) {
        throw InputError("unit index " + std::to_string(k) + " outside 1.." + std::to_string(dim_));
    }
    MultiIndex e = identity();
    e.components[k - 1] = 1;
    return e;
}

void MultiIndexMonoid::validate(const MultiIndex& alpha) const
{
    if (alpha.dim() != dim_) {
        throw InputError("multi-index " + to_string(alpha) + " has dimension " + std::to_string(alpha.dim())
                         + ", expected " + std::to_string(dim_));
    }
}

MultiIndex MultiIndexMonoid::compose(const MultiIndex& x, const MultiIndex& y) const
{
    validate(x);
    validate(y);
    MultiIndex out = x;
    for (std::size_t j = 0; j < dim_; ++j) {
        out.components[j] += y.components[j];
    }
    return out;
}

std::vector<std::pair<MultiIndex, MultiIndex>> MultiIndexMonoid::decompositions(const MultiIndex& alpha) const
{
    validate(alpha);
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    std::size_t total = 1;
    for (unsigned a : alpha.components) {
        total *= a + 1;
    }
    out.reserve(total);

    std::vector<MultiIndex> betas{identity()};
    betas.reserve(total);
    for (std::size_t j = 0; j < dim_; ++j) {
        const std::size_t existing = betas.size();
        for (unsigned v = 1; v <= alpha[j]; ++v) {
            for (std::size_t i = 0; i < existing; ++i) {
                MultiIndex beta = betas[i];
                beta.components[j] = v;
                betas.push_back(std::move(beta));
            }
        }
    }
    for (auto& beta : betas) {
        MultiIndex rest = subtract(alpha, beta);
        out.emplace_back(std::move(beta), std::move(rest));
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
    return out;
}

std::vector<MultiIndex> MultiIndexMonoid::predecessors(const MultiIndex& alpha) const
{
    validate(alpha);
    if (alpha.degree() == 0) {
        throw InputError("the identity has no immediate predecessors");
    }
    std::vector<MultiIndex> out;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (alpha.components[k] > 0) {
            MultiIndex beta = alpha;
            --beta.components[k];
            out.push_back(std::move(beta));
        }
    }
    return out;
}

std::vector<MultiIndex> MultiIndexMonoid::enumerate(unsigned n) const
{
    std::vector<MultiIndex> out;
    out.reserve(level_size(n));
    std::vector<unsigned> current(dim_, 0);

    // Fill position j onward with `remaining`, largest leading value first.
    auto fill = [&](auto&& self, std::size_t j, unsigned remaining) -> void {
        if (j + 1 == dim_) {
            current[j] = remaining;
            out.emplace_back(current);
            return;
        }
        for (unsigned v = remaining + 1; v-- > 0;) {
            current[j] = v;
            self(self, j + 1, remaining - v);
        }
    };
    fill(fill, 0, n);
    return out;
}

std::uint64_t MultiIndexMonoid::level_size(unsigned n) const
{
    return compositions(n, dim_);
}

std::uint64_t MultiIndexMonoid::count_up_to(unsigned n) const
{
    // Elements of degree <= n in d variables: C(n + d, d).
    return binomial(static_cast<std::uint64_t>(n) + dim_, dim_);
}

std::uint64_t MultiIndexMonoid::rank(const MultiIndex& alpha) const
{
    validate(alpha);
    const unsigned n = alpha.degree();
    std::uint64_t r = n == 0 ? 0 : count_up_to(n - 1);
    unsigned remaining = n;
    for (std::size_t j = 0; j + 1 < dim_; ++j) {
        // Every element with a larger value at position j (same prefix) comes first.
        for (unsigned v = remaining; v > alpha.components[j]; --v) {
            r += compositions(remaining - v, dim_ - j - 1);
        }
        remaining -= alpha.components[j];
    }
    return r;
}

// ---------------------------------------------------------------------------
// WordMonoid

WordMonoid::WordMonoid(std::size_t dim) : dim_(dim)
{
    if (dim == 0) {
        throw InputError("alphabet size must be positive");
    }
}

Word WordMonoid::letter(unsigned a) const
{
    Word w{a};
    validate(w);
    return w;
}

void WordMonoid::validate(const Word& w) const
{
    for (unsigned a : w.letters) {
        if (a < 1 || a > dim_) {
            throw InputError("letter " + std::to_string(a) + " outside 1.." + std::to_string(dim_));
        }
    }
}

Word WordMonoid::compose(const Word& x, const Word& y) const
{
    validate(x);
    validate(y);
    Word out = x;
    out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
    return out;
}

std::vector<std::pair<Word, Word>> WordMonoid::decompositions(const Word& w) const
{
    validate(w);
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.letters.size() + 1);
    for (std::size_t i = 0; i <= w.letters.size(); ++i) {
        out.emplace_back(Word({w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(i)}),
                         Word({w.letters.begin() + static_cast<std::ptrdiff_t>(i), w.letters.end()}));
    }
    return out;
}

std::vector<Word> WordMonoid::predecessors(const Word& w) const
{
    validate(w);
    if (w.letters.empty()) {
        throw InputError("the empty word has no immediate predecessors");
    }
    return {Word({w.letters.begin() + 1, w.letters.end()})};
}

std::vector<Word> WordMonoid::enumerate(unsigned n) const
{
    std::vector<Word> out;
    out.reserve(level_size(n));
    std::vector<unsigned> current(n, 1);
    for (;;) {
        out.emplace_back(current);
        std::size_t i = n;
        while (i > 0 && current[i - 1] == dim_) {
            current[i - 1] = 1;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++current[i - 1];
    }
    return out;
}

std::uint64_t WordMonoid::level_size(unsigned n) const
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r = checked_mul(r, dim_);
    }
    return r;
}

std::uint64_t WordMonoid::count_up_to(unsigned n) const
{
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        total = checked_add(total, level_size(k));
    }
    return total;
}

std::uint64_t WordMonoid::rank(const Word& w) const
{
    validate(w);
    const unsigned n = w.degree();
    std::uint64_t within = 0;
    for (unsigned a : w.letters) {
        within = within * dim_ + (a - 1);
    }
    return (n == 0 ? 0 : count_up_to(n - 1)) + within;
}

// ---------------------------------------------------------------------------

bool partial_leq(const MultiIndex& alpha, const MultiIndex& beta)
{
    if (alpha.dim() != beta.dim()) {
        throw InputError("dimension mismatch in partial order comparison");
    }
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        if (alpha[j] > beta[j]) {
            return false;
        }
    }
    return true;
}

MultiIndex subtract(const MultiIndex& alpha, const MultiIndex& beta)
{
    if (!partial_leq(beta, alpha)) {
        throw InputError("cannot subtract " + to_string(beta) + " from " + to_string(alpha));
    }
    MultiIndex out = alpha;
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        out.components[j] -= beta[j];
    }
    return out;
}

Integer multinomial(const MultiIndex& alpha)
{
    // Product of binomials C(a_1 + ... + a_j, a_j).
    Integer result = 1;
    unsigned long partial = 0;
    for (unsigned a : alpha.components) {
        partial += a;
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), partial, a);
        result *= b;
    }
    return result;
}

MultiIndex abelianize(const Word& w, std::size_t dim)
{
    MultiIndex alpha(std::vector<unsigned>(dim, 0));
    for (unsigned a : w.letters) {
        if (a < 1 || a > dim) {
            throw InputError("letter " + std::to_string(a) + " outside 1.." + std::to_string(dim));
        }
        ++alpha.components[a - 1];
    }
    return alpha;
}

std::vector<Word> fiber(const MultiIndex& alpha)
{
    std::vector<unsigned> letters;
    letters.reserve(alpha.degree());
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
        letters.insert(letters.end(), alpha[j], static_cast<unsigned>(j + 1));
    }
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

} // namespace kaluza
