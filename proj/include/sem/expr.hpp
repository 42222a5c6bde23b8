#pragma once

#include "sem/jet.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace sem
{

/// Immutable description of a smooth univariate function built from
/// constants, the identity, + - * /, real powers, exp, log, atan and
/// affine argument substitution. It can be evaluated pointwise or lifted
/// to a TaylorJet of any order at any point.
///
/// Copies share the underlying tree.
class Expr
{
public:
    Expr(double value); // NOLINT(google-explicit-constructor): constants read naturally
    static Expr identity();

    double operator()(double y) const;
    TaylorJet lift(double y0, int order) const;

    /// y -> (*this)(alpha * y + beta). Nested substitutions collapse.
    Expr substitute(double alpha, double beta) const;

    /// Same function, but evaluation closer than `radius` to `centre`
    /// raises DomainError.
    Expr excluding(double centre, double radius) const;

    /// True when the tree is a bare constant.
    bool is_constant() const noexcept;

    std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr pow(const Expr& base, double p);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);
    friend Expr atan(const Expr& a);

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Degree-L jet of `expr` at y0.
TaylorJet jet_lift(const Expr& expr, double y0, int order);

/// y -> g(2x - y).
Expr jet_reflect(const Expr& g, std::int64_t x);

} // namespace sem
