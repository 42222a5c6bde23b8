#include "sem/em_classic.hpp"

#include "sem/bernoulli_a.hpp"
#include "sem/errors.hpp"

#include <cmath>

namespace sem
{

namespace
{

double factorial(int k)
{
    double f = 1.0;
    for (int j = 2; j <= k; ++j)
        f *= j;
    return f;
}

// sum_k (-1)^k / k! * P_{k+1}(y)/(k+1) * f^(k)(y) = sum_k (-1)^k P_{k+1}(y)/(k+1) c_k
double boundary_operator(const Expr& f, int order, double y)
{
    const TaylorJet jet = f.lift(y, order);
    double acc = 0.0;
    for (int k = 0; k <= order; ++k) {
        const double term = periodized_bernoulli(k, y) * jet[k];
        acc += (k % 2) ? -term : term;
    }
    return acc;
}

} // namespace

EmResult em_expand(const EmProblem& p, bool with_remainder, const QuadratureConfig& cfg)
{
    if (!(p.a < p.b))
        throw UsageError("em_expand: requires a < b");
    if (!(p.delta > 0.0 && p.delta <= 1.0))
        throw UsageError("em_expand: delta must lie in (0, 1]");
    if (p.order < 0)
        throw UsageError("em_expand: negative order");

    const double lo = static_cast<double>(p.a) + p.delta;
    const double hi = static_cast<double>(p.b) + p.delta;

    EmResult out;
    auto integral = integrate([&](double y) { return p.f(y); }, lo, hi, cfg);
    out.integral = integral.value;
    out.quadrature_error = integral.error;
    out.boundary = boundary_operator(p.f, p.order, hi) - boundary_operator(p.f, p.order, lo);
    out.approximation = out.integral - out.boundary;

    if (with_remainder) {
        const int l = p.order;
        auto kernel = [&](double y) {
            const TaylorJet jet = p.f.lift(y, l + 1);
            return periodized_bernoulli(l, y) * jet.derivative(l + 1);
        };
        double acc = 0.0;
        // Breakpoints at the integers inside [lo, hi].
        double left = lo;
        while (left < hi) {
            const double right = std::min(std::floor(left) + 1.0, hi);
            auto piece = integrate(kernel, left, right, cfg);
            acc += piece.value;
            out.quadrature_error += piece.error / factorial(l);
            left = right;
        }
        out.remainder = ((l % 2) ? -1.0 : 1.0) / factorial(l) * acc;
    }
    return out;
}

} // namespace sem
