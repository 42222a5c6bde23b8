#include "sem/expr.hpp"

#include "sem/errors.hpp"

#include <cmath>
#include <sstream>

namespace sem
{

enum class Op
{
    constant,
    identity,
    add,
    sub,
    mul,
    div,
    neg,
    pow,
    exp,
    log,
    atan,
    substitute,
    excluding,
};

struct Expr::Node
{
    Op op;
    double a = 0.0; // constant value, exponent, alpha, centre
    double b = 0.0; // beta, radius
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace
{

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double a = 0.0, double b = 0.0)
{
    return std::make_shared<const Expr::Node>(Expr::Node{op, a, b, std::move(lhs), std::move(rhs)});
}

bool is_integer(double p) { return std::floor(p) == p; }

double eval(const Expr::Node& n, double y)
{
    switch (n.op) {
    case Op::constant:
        return n.a;
    case Op::identity:
        return y;
    case Op::add:
        return eval(*n.lhs, y) + eval(*n.rhs, y);
    case Op::sub:
        return eval(*n.lhs, y) - eval(*n.rhs, y);
    case Op::mul:
        return eval(*n.lhs, y) * eval(*n.rhs, y);
    case Op::div: {
        const double d = eval(*n.rhs, y);
        if (d == 0.0)
            throw SingularPointError("Expr: division by zero at y = " + std::to_string(y));
        return eval(*n.lhs, y) / d;
    }
    case Op::neg:
        return -eval(*n.lhs, y);
    case Op::pow: {
        const double u = eval(*n.lhs, y);
        if (!is_integer(n.a) && !(u > 0.0))
            throw DomainError("Expr: non-integer power of non-positive value");
        if (u == 0.0 && n.a < 0.0)
            throw DomainError("Expr: negative power of zero");
        return std::pow(u, n.a);
    }
    case Op::exp:
        return std::exp(eval(*n.lhs, y));
    case Op::log: {
        const double u = eval(*n.lhs, y);
        if (!(u > 0.0))
            throw DomainError("Expr: log of non-positive value");
        return std::log(u);
    }
    case Op::atan:
        return std::atan(eval(*n.lhs, y));
    case Op::substitute:
        return eval(*n.lhs, n.a * y + n.b);
    case Op::excluding:
        if (std::abs(y - n.a) < n.b)
            throw DomainError("Expr: evaluation at y = " + std::to_string(y) +
                              " inside the excluded neighbourhood of " + std::to_string(n.a));
        return eval(*n.lhs, y);
    }
    throw UsageError("Expr: corrupt node");
}

TaylorJet lift(const Expr::Node& n, double y0, int L)
{
    switch (n.op) {
    case Op::constant:
        return TaylorJet::constant(y0, n.a, L);
    case Op::identity:
        return TaylorJet::identity(y0, L);
    case Op::add:
        return lift(*n.lhs, y0, L) + lift(*n.rhs, y0, L);
    case Op::sub:
        return lift(*n.lhs, y0, L) - lift(*n.rhs, y0, L);
    case Op::mul:
        if (n.lhs->op == Op::constant)
            return n.lhs->a * lift(*n.rhs, y0, L);
        if (n.rhs->op == Op::constant)
            return lift(*n.lhs, y0, L) * n.rhs->a;
        return lift(*n.lhs, y0, L) * lift(*n.rhs, y0, L);
    case Op::div:
        return lift(*n.lhs, y0, L) / lift(*n.rhs, y0, L);
    case Op::neg:
        return -lift(*n.lhs, y0, L);
    case Op::pow:
        return pow(lift(*n.lhs, y0, L), n.a);
    case Op::exp:
        return exp(lift(*n.lhs, y0, L));
    case Op::log:
        return log(lift(*n.lhs, y0, L));
    case Op::atan:
        return atan(lift(*n.lhs, y0, L));
    case Op::substitute:
        return rescale(lift(*n.lhs, n.a * y0 + n.b, L), n.a, y0);
    case Op::excluding:
        if (std::abs(y0 - n.a) < n.b)
            throw DomainError("Expr: jet at y = " + std::to_string(y0) +
                              " inside the excluded neighbourhood of " + std::to_string(n.a));
        return lift(*n.lhs, y0, L);
    }
    throw UsageError("Expr: corrupt node");
}

void print(std::ostream& os, const Expr::Node& n)
{
    auto unary = [&](const char* name) {
        os << name << '(';
        print(os, *n.lhs);
        os << ')';
    };
    auto binary = [&](const char* sym) {
        os << '(';
        print(os, *n.lhs);
        os << ' ' << sym << ' ';
        print(os, *n.rhs);
        os << ')';
    };
    switch (n.op) {
    case Op::constant:
        os << n.a;
        return;
    case Op::identity:
        os << 'y';
        return;
    case Op::add:
        return binary("+");
    case Op::sub:
        return binary("-");
    case Op::mul:
        return binary("*");
    case Op::div:
        return binary("/");
    case Op::neg:
        return unary("-");
    case Op::pow:
        os << "pow(";
        print(os, *n.lhs);
        os << ", " << n.a << ')';
        return;
    case Op::exp:
        return unary("exp");
    case Op::log:
        return unary("log");
    case Op::atan:
        return unary("atan");
    case Op::substitute:
        print(os, *n.lhs);
        os << " @ (" << n.a << "*y + " << n.b << ')';
        return;
    case Op::excluding:
        print(os, *n.lhs);
        os << " for |y - " << n.a << "| >= " << n.b;
        return;
    }
}

} // namespace

Expr::Expr(double value) : node_(make(Op::constant, nullptr, nullptr, value)) {}

Expr Expr::identity()
{
    return Expr(make(Op::identity));
}

double Expr::operator()(double y) const
{
    return eval(*node_, y);
}

TaylorJet Expr::lift(double y0, int order) const
{
    if (order < 0)
        throw UsageError("Expr::lift: negative order");
    return sem::lift(*node_, y0, order);
}

Expr Expr::substitute(double alpha, double beta) const
{
    if (node_->op == Op::constant)
        return *this;
    if (node_->op == Op::substitute) {
        // f(a1 (a2 y + b2) + b1) = f(a1 a2 y + a1 b2 + b1)
        const double alpha2 = node_->a * alpha;
        const double beta2 = node_->a * beta + node_->b;
        if (alpha2 == 1.0 && beta2 == 0.0)
            return Expr(node_->lhs);
        return Expr(make(Op::substitute, node_->lhs, nullptr, alpha2, beta2));
    }
    if (alpha == 1.0 && beta == 0.0)
        return *this;
    return Expr(make(Op::substitute, node_, nullptr, alpha, beta));
}

Expr Expr::excluding(double centre, double radius) const
{
    return Expr(make(Op::excluding, node_, nullptr, centre, radius));
}

bool Expr::is_constant() const noexcept
{
    return node_->op == Op::constant;
}

std::string Expr::to_string() const
{
    std::ostringstream os;
    os.precision(17);
    print(os, *node_);
    return os.str();
}

Expr operator+(const Expr& a, const Expr& b)
{
    return Expr(make(Op::add, a.node_, b.node_));
}

Expr operator-(const Expr& a, const Expr& b)
{
    return Expr(make(Op::sub, a.node_, b.node_));
}

Expr operator*(const Expr& a, const Expr& b)
{
    return Expr(make(Op::mul, a.node_, b.node_));
}

Expr operator/(const Expr& a, const Expr& b)
{
    return Expr(make(Op::div, a.node_, b.node_));
}

Expr operator-(const Expr& a)
{
    return Expr(make(Op::neg, a.node_));
}

Expr pow(const Expr& base, double p)
{
    return Expr(make(Op::pow, base.node_, nullptr, p));
}

Expr exp(const Expr& a)
{
    return Expr(make(Op::exp, a.node_));
}

Expr log(const Expr& a)
{
    return Expr(make(Op::log, a.node_));
}

Expr atan(const Expr& a)
{
    return Expr(make(Op::atan, a.node_));
}

TaylorJet jet_lift(const Expr& expr, double y0, int order)
{
    return expr.lift(y0, order);
}

Expr jet_reflect(const Expr& g, std::int64_t x)
{
    return g.substitute(-1.0, 2.0 * static_cast<double>(x));
}

} // namespace sem
