#pragma once

#include "sem/expr.hpp"
#include "sem/quadrature.hpp"

#include <cstdint>
#include <optional>

namespace sem
{

/// Sum_{n=a+1}^{b} f(n) via the classical Euler-Maclaurin expansion on
/// [a + delta, b + delta].
struct EmProblem
{
    Expr f = 0.0;
    std::int64_t a = 0;
    std::int64_t b = 1;
    double delta = 1.0;
    int order = 0;
};

struct EmResult
{
    double approximation = 0.0;        ///< integral minus boundary terms
    double integral = 0.0;
    double boundary = 0.0;
    std::optional<double> remainder;   ///< set when requested
    double quadrature_error = 0.0;
};

/// With the remainder, approximation + *remainder reproduces the sum up
/// to quadrature tolerance. The remainder kernel is piecewise
/// polynomial, so its integral is taken over unit subintervals.
EmResult em_expand(const EmProblem& problem, bool with_remainder, const QuadratureConfig& cfg = {});

} // namespace sem
