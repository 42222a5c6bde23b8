#pragma once

#include "sem/bernoulli_a.hpp"
#include "sem/expr.hpp"
#include "sem/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sem
{

enum class SingularitySide
{
    left,  ///< x <= a < b
    right, ///< a < b < x
};

/// Symmetry of s under y -> -y; decides the sign picked up on reflection.
enum class Parity
{
    even, ///< s(-y) = s(y), e.g. |y|^-nu
    odd,  ///< s(-y) = -s(y), e.g. sgn(y)|y|^-nu
};

/// One singular lattice sum  sum_{n=a+1}^{b} s(n - x) g(n).
struct SemProblem
{
    PowerLawInteraction interaction;
    Parity parity = Parity::even;
    Expr g = 1.0;
    std::int64_t x = 0;
    std::int64_t a = 0;
    std::int64_t b = 1;
    double delta = 1.0;
    int order = 0;
    SingularitySide side = SingularitySide::left;
};

struct SemResult
{
    double total = 0.0;
    double integral_part = 0.0;
    /// Boundary operator at b + delta minus at a + delta.
    double boundary_part = 0.0;
    /// boundary_part split by derivative order k = 0..order.
    std::vector<double> boundary_by_order;
    std::optional<double> remainder_part;
    double quadrature_error_estimate = 0.0;
    std::vector<std::string> diagnostics;
};

struct SemOptions
{
    QuadratureConfig integral;  ///< for the integral of s(y - x) g(y)
    QuadratureConfig remainder; ///< per unit subinterval of the remainder
};

/// (D^(order)_{y-x} g)(y) = sum_k A_k(y - x) / k! (-1)^k g^(k)(y).
/// Requires y - x > 0.
double sem_operator_apply(int order, const BernoulliAEvaluator& a_functions, std::int64_t x,
                          const Expr& g, double y);
double sem_operator_apply(int order, const PowerLawInteraction& interaction, std::int64_t x,
                          const Expr& g, double y);

/// Singular Euler-Maclaurin evaluation of the sum:
///
///   integral_{a+delta}^{b+delta} s(y-x) g(y) dy - (D^(l) g)|_{a+delta}^{b+delta}
///     [+ (-1)^l / l! integral A_l(y-x) g^(l+1)(y) dy].
///
/// With the remainder the total equals the sum up to quadrature error.
/// Right-sided problems are reflected first. Empty ranges (b <= a)
/// yield 0 with a diagnostic.
SemResult sem_sum(const SemProblem& problem, bool with_remainder, const SemOptions& options = {});

/// Mirror a right-sided problem about x:
/// a' = 2x - (b+1), b' = 2x - (a+1), g'(y) = g(2x - y), and the
/// coefficient flips sign for odd s.
SemProblem reflect(const SemProblem& problem);

} // namespace sem
