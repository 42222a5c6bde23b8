#include "sem/sem.hpp"

#include "sem/errors.hpp"

#include <cmath>
#include <string>

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

// Terms A_k(y-x) (-1)^k c_k of the boundary operator, c_k = g^(k)(y)/k!.
std::vector<double> operator_terms(int order, const BernoulliAEvaluator& a_functions,
                                   std::int64_t x, const Expr& g, double y)
{
    const double xi = y - static_cast<double>(x);
    if (!(xi > 0.0))
        throw DomainError("sem operator: y - x must be positive, got " + std::to_string(xi));
    const TaylorJet jet = g.lift(y, order);
    const std::vector<double> a = a_functions.all(order, xi);
    std::vector<double> terms(order + 1);
    for (int k = 0; k <= order; ++k)
        terms[k] = ((k % 2) ? -1.0 : 1.0) * a[k] * jet[k];
    return terms;
}

void validate(const SemProblem& p)
{
    if (!(p.delta > 0.0 && p.delta <= 1.0))
        throw UsageError("sem_sum: delta must lie in (0, 1]");
    if (p.order < 0)
        throw UsageError("sem_sum: negative order");
}

} // namespace

double sem_operator_apply(int order, const BernoulliAEvaluator& a_functions, std::int64_t x,
                          const Expr& g, double y)
{
    double acc = 0.0;
    for (double t : operator_terms(order, a_functions, x, g, y))
        acc += t;
    return acc;
}

double sem_operator_apply(int order, const PowerLawInteraction& interaction, std::int64_t x,
                          const Expr& g, double y)
{
    return sem_operator_apply(order, BernoulliAEvaluator(interaction, order), x, g, y);
}

SemProblem reflect(const SemProblem& p)
{
    if (p.side != SingularitySide::right)
        throw UsageError("reflect: problem is not right-sided");
    SemProblem out = p;
    out.a = 2 * p.x - (p.b + 1);
    out.b = 2 * p.x - (p.a + 1);
    out.g = jet_reflect(p.g, p.x);
    if (p.parity == Parity::odd)
        out.interaction.coefficient = -p.interaction.coefficient;
    out.side = SingularitySide::left;
    return out;
}

SemResult sem_sum(const SemProblem& problem, bool with_remainder, const SemOptions& options)
{
    validate(problem);

    SemResult out;
    if (problem.b <= problem.a) {
        out.boundary_by_order.assign(problem.order + 1, 0.0);
        if (with_remainder)
            out.remainder_part = 0.0;
        out.diagnostics.push_back("empty summation range: a = " + std::to_string(problem.a) +
                                  ", b = " + std::to_string(problem.b));
        return out;
    }

    if (problem.side == SingularitySide::right) {
        if (problem.b >= problem.x)
            throw DomainError("sem_sum: right-sided problem needs a < b < x");
        return sem_sum(reflect(problem), with_remainder, options);
    }
    if (problem.x > problem.a)
        throw DomainError("sem_sum: singularity x = " + std::to_string(problem.x) +
                          " lies inside the summation range starting at a = " +
                          std::to_string(problem.a));

    const int l = problem.order;
    const auto& s = problem.interaction;
    const double x = static_cast<double>(problem.x);
    const double lo = static_cast<double>(problem.a) + problem.delta;
    const double hi = static_cast<double>(problem.b) + problem.delta;

    const BernoulliAEvaluator a_functions(s, l);
    out.diagnostics = a_functions.warnings();

    auto integrand = [&](double y) { return s(y - x) * problem.g(y); };
    const auto integral = integrate(integrand, lo, hi, options.integral);
    out.integral_part = integral.value;
    out.quadrature_error_estimate = integral.error;
    if (integral.roundoff_limited)
        out.diagnostics.push_back("integral tolerance limited by rounding");

    const auto upper = operator_terms(l, a_functions, problem.x, problem.g, hi);
    const auto lower = operator_terms(l, a_functions, problem.x, problem.g, lo);
    out.boundary_by_order.resize(l + 1);
    for (int k = 0; k <= l; ++k) {
        out.boundary_by_order[k] = upper[k] - lower[k];
        out.boundary_part += out.boundary_by_order[k];
    }
    out.total = out.integral_part - out.boundary_part;

    if (with_remainder) {
        // A_l(y - x) is only C^(l-1) across integers: integrate unit pieces.
        auto kernel = [&](double y) {
            const TaylorJet jet = problem.g.lift(y, l + 1);
            return a_functions(l, y - x) * jet.derivative(l + 1);
        };
        const double scale = ((l % 2) ? -1.0 : 1.0) / factorial(l);
        double acc = 0.0;
        double left = lo;
        while (left < hi) {
            const double right = std::min(std::floor(left) + 1.0, hi);
            const auto piece = integrate(kernel, left, right, options.remainder);
            acc += piece.value;
            out.quadrature_error_estimate += piece.error / factorial(l);
            left = right;
        }
        out.remainder_part = scale * acc;
        out.total += *out.remainder_part;
    }
    return out;
}

} // namespace sem
