#pragma once

#include "kaluza/series.hpp"

namespace kaluza {

/// Word table f(w) = c(phi(w)) / N(phi(w)) built from a multi-index table c,
/// where phi counts letters and N(alpha) = |alpha|!/alpha! is the fiber size.
class LiftedTable {
public:
    LiftedTable(WordTable words, IndexTable source) : words_(std::move(words)), source_(std::move(source)) {}

    [[nodiscard]] const WordTable& words() const noexcept { return words_; }
    [[nodiscard]] const IndexTable& source() const noexcept { return source_; }

private:
    WordTable words_;
    IndexTable source_;
};

LiftedTable lift(const IndexTable& c, TableLimits limits = {});

// Fiber sums: (Sg)(alpha) = sum of g(w) over words w with letter counts alpha.
IndexTable symmetrize(const WordTable& g);

// S(solve_renewal(lift(c))). Agrees with solve_renewal(c) exactly; meant as a
// cross-check, since the word table has sum_{n <= N} d^n entries.
IndexTable solve_via_words(const IndexTable& c, TableLimits limits = {}, const SolveOptions& options = {});

} // namespace kaluza
