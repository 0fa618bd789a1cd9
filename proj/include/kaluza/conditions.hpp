#pragma once

#include <span>
#include <string>
#include <vector>

#include "kaluza/rational.hpp"
#include "kaluza/series.hpp"

namespace kaluza {

/// r(0) = 0 and r(alpha) = c(alpha) / sum of c over the immediate predecessors of alpha.
class RatioTable {
public:
    // Throws InputError unless r(0) = 0.
    explicit RatioTable(IndexTable values);

    [[nodiscard]] const IndexTable& table() const noexcept { return values_; }
    [[nodiscard]] const Rational& at(const MultiIndex& alpha) const { return values_.at(alpha); }
    [[nodiscard]] unsigned max_degree() const noexcept { return values_.max_degree(); }
    [[nodiscard]] std::size_t dim() const noexcept { return values_.dim(); }

    friend bool operator==(const RatioTable&, const RatioTable&) = default;

private:
    IndexTable values_;
};

struct Violation {
    std::string cond;
    // Indices involved, as raw component or letter lists; meaning depends on cond.
    std::vector<std::vector<unsigned>> at;
    Rational lhs;
    Rational rhs;
};

struct CheckReport {
    unsigned checked_degree = 0;
    std::vector<Violation> violations;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

RatioTable ratio_table(const IndexTable& c);

// Bound r <= 1 and monotonicity along the edges alpha -> alpha + e_k (cond "thm1.bound", "thm1.edge").
CheckReport check_theorem1(const IndexTable& c);

// c <= |alpha|!/alpha! ("thm2.bound") and the two-step ratio inequalities for |alpha| <= N-2
// ("thm2.ratio.offdiag" for i < j, "thm2.ratio.diag" for i = j; at = [alpha, e_i, e_j]).
CheckReport check_theorem2(const IndexTable& c);

// c(0) = 1, c(alpha) = r(alpha) * sum of c over predecessors.
IndexTable c_from_r(const RatioTable& r);

// b(0) = 0, b(alpha) = (1 - r(alpha)) * sum of c over predecessors.
// Non-negative exactly when r <= 1; that is not enforced here.
IndexTable b_from_c(const IndexTable& c);

// c(alpha) = d(alpha) - sum_{beta <= alpha} d(alpha - beta) b(beta), with d the multinomial table.
IndexTable c_from_b(const IndexTable& b);

// f(av)/f(v) <= f(avb)/f(vb) for letters a, b and |avb| <= N ("word.ratio"; at = [a, v, b]).
CheckReport check_word_condition(const WordTable& f);

// Ratios s_n/s_{n-1} non-decreasing ("kaluza.monotone", at = [n, n+1]) and at most 1
// ("kaluza.bound", at = [n]).
CheckReport check_kaluza_1d(std::span<const Rational> s);

// (|alpha|!/alpha!) * prod_i s_i[alpha_i]. One sequence per axis, each of length >= N + 1.
IndexTable product_coeffs(std::span<const std::vector<Rational>> sequences, unsigned max_degree);

// The d = 1 table holding s_0..s_N.
IndexTable sequence_table(std::span<const Rational> s);

// Throws InputError naming the first offending entry unless c(0) = 1 and every entry is > 0.
void require_positive_unital(const IndexTable& c, const char* what);

} // namespace kaluza
