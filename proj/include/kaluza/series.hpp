#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "kaluza/error.hpp"
#include "kaluza/monoid.hpp"
#include "kaluza/rational.hpp"

namespace kaluza {

// Word tables grow like d^N; every table refuses to allocate more entries than this.
inline constexpr std::uint64_t default_max_entries = 1'000'000;

struct TableLimits {
    std::uint64_t max_entries = default_max_entries;
};

/// Exact coefficients on every element of degree <= max_degree of a graded
/// monoid, stored in canonical order. The element layout is shared between
/// tables of the same shape.
template <GradedMonoid M>
class CoeffTable {
public:
    using monoid_type = M;
    using element_type = typename M::element_type;

    CoeffTable(M monoid, unsigned max_degree, TableLimits limits = {})
        : layout_(make_layout(std::move(monoid), max_degree, limits)), values_(layout_->elements.size())
    {
    }

    [[nodiscard]] const M& monoid() const noexcept { return layout_->monoid; }
    [[nodiscard]] unsigned max_degree() const noexcept { return layout_->max_degree; }
    [[nodiscard]] std::size_t dim() const noexcept { return layout_->monoid.dim(); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    [[nodiscard]] std::span<const element_type> elements() const noexcept { return layout_->elements; }
    [[nodiscard]] std::span<const Rational> values() const noexcept { return values_; }

    // Elements of exactly degree n, and the position of the first of them.
    [[nodiscard]] std::span<const element_type> level(unsigned n) const
    {
        check_degree(n);
        return std::span<const element_type>(layout_->elements)
            .subspan(layout_->level_begin[n], layout_->level_begin[n + 1] - layout_->level_begin[n]);
    }
    [[nodiscard]] std::size_t level_begin(unsigned n) const
    {
        check_degree(n);
        return layout_->level_begin[n];
    }

    [[nodiscard]] bool contains(const element_type& x) const { return M::degree(x) <= max_degree(); }

    [[nodiscard]] std::size_t position(const element_type& x) const
    {
        if (!contains(x)) {
            throw InputError("element " + to_string(x) + " exceeds table degree " + std::to_string(max_degree()));
        }
        return static_cast<std::size_t>(monoid().rank(x));
    }

    [[nodiscard]] const Rational& at(const element_type& x) const { return values_[position(x)]; }
    [[nodiscard]] const Rational& operator[](std::size_t pos) const { return values_[pos]; }
    [[nodiscard]] Rational& operator[](std::size_t pos) { return values_[pos]; }

    void set(const element_type& x, Rational value) { values_[position(x)] = std::move(value); }

    [[nodiscard]] bool unital() const { return values_.front() == 1; }

    [[nodiscard]] bool same_shape(const CoeffTable& other) const
    {
        return layout_ == other.layout_
               || (monoid() == other.monoid() && max_degree() == other.max_degree());
    }

    // Restriction to degrees <= n.
    [[nodiscard]] CoeffTable truncate(unsigned n) const
    {
        check_degree(n);
        CoeffTable out(monoid(), n);
        std::copy_n(values_.begin(), out.size(), out.values_.begin());
        return out;
    }

    friend bool operator==(const CoeffTable& a, const CoeffTable& b)
    {
        return a.same_shape(b) && a.values_ == b.values_;
    }

private:
    struct Layout {
        M monoid;
        unsigned max_degree;
        std::vector<element_type> elements;
        std::vector<std::size_t> level_begin;
    };

    static std::shared_ptr<const Layout> make_layout(M monoid, unsigned max_degree, TableLimits limits)
    {
        const std::uint64_t count = monoid.count_up_to(max_degree);
        if (count > limits.max_entries) {
            throw GuardError(to_string(M::kind) + " table of dimension " + std::to_string(monoid.dim())
                             + " and degree " + std::to_string(max_degree) + " needs " + std::to_string(count)
                             + " entries; limit is " + std::to_string(limits.max_entries));
        }
        auto layout = std::make_shared<Layout>(Layout{std::move(monoid), max_degree, {}, {}});
        layout->elements.reserve(count);
        for (unsigned n = 0; n <= max_degree; ++n) {
            layout->level_begin.push_back(layout->elements.size());
            auto level = layout->monoid.enumerate(n);
            std::move(level.begin(), level.end(), std::back_inserter(layout->elements));
        }
        layout->level_begin.push_back(layout->elements.size());
        return layout;
    }

    void check_degree(unsigned n) const
    {
        if (n > max_degree()) {
            throw InputError("degree " + std::to_string(n) + " exceeds table degree " + std::to_string(max_degree()));
        }
    }

    std::shared_ptr<const Layout> layout_;
    std::vector<Rational> values_;
};

using IndexTable = CoeffTable<MultiIndexMonoid>;
using WordTable = CoeffTable<WordMonoid>;

struct SolveOptions {
    // Worker threads per degree level; 0 or 1 runs serially. Output does not depend on it.
    unsigned threads = 1;
};

namespace detail {

template <class Fn>
void parallel_range(std::size_t begin, std::size_t end, unsigned threads, Fn&& fn)
{
    const std::size_t count = end - begin;
    if (threads <= 1 || count < 2 * static_cast<std::size_t>(threads)) {
        for (std::size_t i = begin; i < end; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = begin + t * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) {
            break;
        }
        workers.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) {
                fn(i);
            }
        });
    }
}

template <GradedMonoid M>
void require_same_shape(const CoeffTable<M>& f, const CoeffTable<M>& g, const char* op)
{
    if (!f.same_shape(g)) {
        throw InputError(std::string(op) + ": tables differ in dimension or degree");
    }
}

} // namespace detail

template <GradedMonoid M>
CoeffTable<M> delta(const M& monoid, unsigned max_degree)
{
    CoeffTable<M> out(monoid, max_degree);
    out[0] = 1;
    return out;
}

/// (f*g)(w) = sum over decompositions uv = w of f(u) g(v).
template <GradedMonoid M>
CoeffTable<M> convolve(const CoeffTable<M>& f, const CoeffTable<M>& g, const SolveOptions& options = {})
{
    detail::require_same_shape(f, g, "convolve");
    CoeffTable<M> out(f.monoid(), f.max_degree());
    const auto& monoid = f.monoid();
    const auto elements = f.elements();
    detail::parallel_range(0, f.size(), options.threads, [&](std::size_t pos) {
        Rational sum;
        for (const auto& [u, v] : monoid.decompositions(elements[pos])) {
            sum += f[monoid.rank(u)] * g[monoid.rank(v)];
        }
        out[pos] = std::move(sum);
    });
    return out;
}

/// Unique q with c = delta_e + c*q up to the table degree. Entries of one
/// degree only read entries of strictly lower degree, so each level is
/// computed as a batch.
template <GradedMonoid M>
CoeffTable<M> solve_renewal(const CoeffTable<M>& c, const SolveOptions& options = {})
{
    if (!c.unital()) {
        throw InputError("renewal equation needs c(e) = 1, got " + to_string(c[0]));
    }
    CoeffTable<M> q(c.monoid(), c.max_degree());
    const auto& monoid = c.monoid();
    const auto elements = c.elements();
    for (unsigned n = 1; n <= c.max_degree(); ++n) {
        const std::size_t lo = c.level_begin(n);
        const std::size_t hi = lo + c.level(n).size();
        detail::parallel_range(lo, hi, options.threads, [&](std::size_t pos) {
            Rational value = c[pos];
            for (const auto& [u, v] : monoid.decompositions(elements[pos])) {
                if (M::degree(u) == 0) {
                    continue; // the (e, w) term is q(w) itself
                }
                const Rational& qv = q[monoid.rank(v)];
                if (sgn(qv) != 0) {
                    value -= c[monoid.rank(u)] * qv;
                }
            }
            q[pos] = std::move(value);
        });
    }
    return q;
}

/// c - delta_e - c*q; identically zero exactly when q solves the renewal equation.
template <GradedMonoid M>
CoeffTable<M> residual(const CoeffTable<M>& c, const CoeffTable<M>& q)
{
    detail::require_same_shape(c, q, "residual");
    CoeffTable<M> out = convolve(c, q);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = c[i] - out[i];
    }
    out[0] -= 1;
    return out;
}

template <GradedMonoid M>
bool is_zero(const CoeffTable<M>& t)
{
    return std::all_of(t.values().begin(), t.values().end(), [](const Rational& v) { return sgn(v) == 0; });
}

template <GradedMonoid M>
bool is_nonnegative(const CoeffTable<M>& t)
{
    return std::all_of(t.values().begin(), t.values().end(), [](const Rational& v) { return sgn(v) >= 0; });
}

// |alpha|!/alpha! at every alpha: the coefficients of 1/(1 - z_1 - ... - z_d).
IndexTable multinomial_table(std::size_t dim, unsigned max_degree);

// Truncated sum of f(alpha) z^alpha in double precision. Requires ||z||_1 < 1.
std::complex<double> evaluate(const IndexTable& f, std::span<const std::complex<double>> z);

} // namespace kaluza
