#pragma once

#include <span>
#include <vector>

namespace sem
{

/// Bernoulli numbers B_0..B_n and the monomial coefficients of the
/// Bernoulli polynomials B_0(y)..B_n(y).
///
/// Rows are generated in exact rational arithmetic from
///   B_0(y) = 1,  B_l'(y) = l B_{l-1}(y),  int_0^1 B_l(y) dy = 0,
/// and rounded to double once at construction. The table is immutable
/// afterwards and safe to share between threads.
class BernoulliTable
{
public:
    explicit BernoulliTable(int max_degree);

    int max_degree() const noexcept { return max_degree_; }

    /// B_l = B_l(0). Note B_1 = -1/2.
    double number(int degree) const;

    /// Monomial coefficients of B_l, lowest power first (size l + 1).
    std::span<const double> coefficients(int degree) const;

    /// B_l(y) by Horner evaluation. Throws CapacityError if
    /// degree > max_degree().
    double polynomial(int degree, double y) const;

private:
    int max_degree_;
    std::vector<double> numbers_;
    std::vector<std::size_t> row_offset_;
    std::vector<double> coeffs_;
};

/// Process-wide table used by the default evaluators (degree 128).
const BernoulliTable& bernoulli_table();

/// B_l(y) from the shared table.
double bernoulli_polynomial(int degree, double y);

} // namespace sem
