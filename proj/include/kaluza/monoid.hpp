#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kaluza/rational.hpp"

namespace kaluza {

enum class MonoidKind { multiindex, word };

std::string to_string(MonoidKind kind);

/// Element of N_0^d. Addition is componentwise; the degree is the component sum.
struct MultiIndex {
    std::vector<unsigned> components;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> c) : components(std::move(c)) {}
    MultiIndex(std::initializer_list<unsigned> c) : components(c) {}

    [[nodiscard]] std::size_t dim() const noexcept { return components.size(); }
    [[nodiscard]] unsigned degree() const noexcept;
    unsigned operator[](std::size_t j) const { return components[j]; }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Element of the free monoid on letters 1..d. The empty word is the identity.
struct Word {
    std::vector<unsigned> letters;

    Word() = default;
    explicit Word(std::vector<unsigned> l) : letters(std::move(l)) {}
    Word(std::initializer_list<unsigned> l) : letters(l) {}

    [[nodiscard]] unsigned degree() const noexcept { return static_cast<unsigned>(letters.size()); }

    friend auto operator<=>(const Word&, const Word&) = default;
};

std::string to_string(const MultiIndex& alpha);
std::string to_string(const Word& w);

/// Strongly graded monoid with trivial-kernel length and right cancellation
/// by degree-one left factors. Elements of each degree are finite and are
/// listed in a fixed canonical order; rank() is the position of an element
/// in the concatenation of those lists over degrees 0, 1, 2, ...
template <class M>
concept GradedMonoid = requires(const M m, const typename M::element_type& x, unsigned n) {
    typename M::element_type;
    { M::kind } -> std::convertible_to<MonoidKind>;
    { m.dim() } -> std::convertible_to<std::size_t>;
    { m.identity() } -> std::same_as<typename M::element_type>;
    { m.compose(x, x) } -> std::same_as<typename M::element_type>;
    { M::degree(x) } -> std::convertible_to<unsigned>;
    { m.decompositions(x) } -> std::same_as<std::vector<std::pair<typename M::element_type, typename M::element_type>>>;
    { m.predecessors(x) } -> std::same_as<std::vector<typename M::element_type>>;
    { m.enumerate(n) } -> std::same_as<std::vector<typename M::element_type>>;
    { m.level_size(n) } -> std::same_as<std::uint64_t>;
    { m.count_up_to(n) } -> std::same_as<std::uint64_t>;
    { m.rank(x) } -> std::same_as<std::uint64_t>;
    m.validate(x);
};

/// N_0^d. Within a degree, elements are ordered lexicographically with the
/// first coordinate most significant and larger values first, so degree one
/// lists e_1, e_2, ..., e_d.
class MultiIndexMonoid {
public:
    using element_type = MultiIndex;
    static constexpr MonoidKind kind = MonoidKind::multiindex;

    explicit MultiIndexMonoid(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] MultiIndex identity() const { return MultiIndex(std::vector<unsigned>(dim_, 0)); }
    // e_k for k in 1..d.
    [[nodiscard]] MultiIndex unit(std::size_t k) const;

    [[nodiscard]] MultiIndex compose(const MultiIndex& x, const MultiIndex& y) const;
    static unsigned degree(const MultiIndex& x) noexcept { return x.degree(); }

    // All (beta, alpha - beta) with beta <= alpha, beta in canonical order.
    [[nodiscard]] std::vector<std::pair<MultiIndex, MultiIndex>> decompositions(const MultiIndex& alpha) const;
    // {alpha - e_k : alpha_k > 0}, k ascending.
    [[nodiscard]] std::vector<MultiIndex> predecessors(const MultiIndex& alpha) const;
    [[nodiscard]] std::vector<MultiIndex> enumerate(unsigned n) const;

    [[nodiscard]] std::uint64_t level_size(unsigned n) const;
    [[nodiscard]] std::uint64_t count_up_to(unsigned n) const;
    [[nodiscard]] std::uint64_t rank(const MultiIndex& alpha) const;

    void validate(const MultiIndex& alpha) const;

    friend bool operator==(const MultiIndexMonoid&, const MultiIndexMonoid&) = default;

private:
    std::size_t dim_;
};

/// The free monoid F_d. Within a degree, words are ordered lexicographically
/// by letter.
class WordMonoid {
public:
    using element_type = Word;
    static constexpr MonoidKind kind = MonoidKind::word;

    explicit WordMonoid(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Word identity() const { return {}; }
    [[nodiscard]] Word letter(unsigned a) const;

    [[nodiscard]] Word compose(const Word& x, const Word& y) const;
    static unsigned degree(const Word& x) noexcept { return x.degree(); }

    // Prefix/suffix splits, shortest prefix first.
    [[nodiscard]] std::vector<std::pair<Word, Word>> decompositions(const Word& w) const;
    // The single suffix left after dropping the first letter.
    [[nodiscard]] std::vector<Word> predecessors(const Word& w) const;
    [[nodiscard]] std::vector<Word> enumerate(unsigned n) const;

    [[nodiscard]] std::uint64_t level_size(unsigned n) const;
    [[nodiscard]] std::uint64_t count_up_to(unsigned n) const;
    [[nodiscard]] std::uint64_t rank(const Word& w) const;

    void validate(const Word& w) const;

    friend bool operator==(const WordMonoid&, const WordMonoid&) = default;

private:
    std::size_t dim_;
};

static_assert(GradedMonoid<MultiIndexMonoid>);
static_assert(GradedMonoid<WordMonoid>);

bool partial_leq(const MultiIndex& alpha, const MultiIndex& beta);

MultiIndex subtract(const MultiIndex& alpha, const MultiIndex& beta);

// |alpha|! / alpha!, the number of words with letter counts alpha.
Integer multinomial(const MultiIndex& alpha);

// Letter counts of w as a multi-index of dimension d.
MultiIndex abelianize(const Word& w, std::size_t dim);

// Distinct rearrangements of the word with letter counts alpha, in canonical word order.
std::vector<Word> fiber(const MultiIndex& alpha);

} // namespace kaluza
