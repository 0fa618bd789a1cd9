#pragma once

#include <span>
#include <vector>

#include "kaluza/rational.hpp"
#include "kaluza/series.hpp"

namespace kaluza {

struct Atom1D {
    Rational location;
    Rational weight;
};

/// Probability measure on [0,1] with exactly computable moments: Lebesgue
/// measure, or finitely many rational point masses.
class MeasureSpec1D {
public:
    enum class Kind { lebesgue, atomic };

    static MeasureSpec1D lebesgue() { return MeasureSpec1D(Kind::lebesgue, {}); }
    // Throws InputError unless weights are positive and sum to 1 and locations lie in [0,1].
    static MeasureSpec1D atomic(std::vector<Atom1D> atoms);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Atom1D>& atoms() const noexcept { return atoms_; }

private:
    MeasureSpec1D(Kind kind, std::vector<Atom1D> atoms) : kind_(kind), atoms_(std::move(atoms)) {}

    Kind kind_;
    std::vector<Atom1D> atoms_;
};

struct AtomD {
    std::vector<Rational> point;
    Rational weight;
};

/// Finitely supported probability measure on [0,1]^d.
class AtomicMeasureD {
public:
    explicit AtomicMeasureD(std::vector<AtomD> atoms);

    [[nodiscard]] std::size_t dim() const noexcept { return atoms_.front().point.size(); }
    [[nodiscard]] const std::vector<AtomD>& atoms() const noexcept { return atoms_; }

private:
    std::vector<AtomD> atoms_;
};

/// s_n = integral of t^n, n = 0..N.
struct MomentSequence {
    std::vector<Rational> values;
};

MomentSequence moments(const MeasureSpec1D& m, unsigned max_degree);

// Coefficients of the integral of 1/(1 - sum t_j z_j) against the product of the given measures.
IndexTable product_measure_coeffs(std::span<const MeasureSpec1D> axes, unsigned max_degree);

// c(alpha) = (|alpha|!/alpha!) * sum_k w_k t_k^alpha.
IndexTable atomic_coeffs(const AtomicMeasureD& m, unsigned max_degree);

} // namespace kaluza
