#include "sem/jet.hpp"

#include "sem/errors.hpp"

#include <cmath>
#include <string>

namespace sem
{

namespace
{

void require_same_shape(const TaylorJet& a, const TaylorJet& b)
{
    if (a.order() != b.order() || a.anchor() != b.anchor())
        throw UsageError("TaylorJet: operands differ in order or anchor");
}

bool is_integer(double p) { return std::floor(p) == p; }

} // namespace

TaylorJet::TaylorJet(double anchor, std::vector<double> coeffs)
    : anchor_(anchor), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw UsageError("TaylorJet: at least one coefficient required");
}

TaylorJet TaylorJet::constant(double anchor, double value, int order)
{
    std::vector<double> c(order + 1, 0.0);
    c[0] = value;
    return {anchor, std::move(c)};
}

TaylorJet TaylorJet::identity(double anchor, int order)
{
    std::vector<double> c(order + 1, 0.0);
    c[0] = anchor;
    if (order >= 1)
        c[1] = 1.0;
    return {anchor, std::move(c)};
}

double TaylorJet::derivative(int k) const
{
    double f = 1.0;
    for (int j = 2; j <= k; ++j)
        f *= j;
    return f * coeffs_.at(k);
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& rhs)
{
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& rhs)
{
    require_same_shape(*this, rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TaylorJet& TaylorJet::operator*=(double s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

TaylorJet& TaylorJet::operator+=(double s)
{
    coeffs_[0] += s;
    return *this;
}

TaylorJet operator*(const TaylorJet& lhs, const TaylorJet& rhs)
{
    require_same_shape(lhs, rhs);
    const int L = lhs.order();
    std::vector<double> out(L + 1, 0.0);
    for (int k = 0; k <= L; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j)
            acc += lhs.coeffs_[j] * rhs.coeffs_[k - j];
        out[k] = acc;
    }
    return {lhs.anchor_, std::move(out)};
}

TaylorJet operator/(const TaylorJet& lhs, const TaylorJet& rhs)
{
    require_same_shape(lhs, rhs);
    const double d0 = rhs.coeffs_[0];
    if (d0 == 0.0)
        throw SingularPointError("TaylorJet: division by a jet vanishing at y = " +
                                 std::to_string(lhs.anchor_));
    const int L = lhs.order();
    std::vector<double> q(L + 1, 0.0);
    // lhs = q * rhs  =>  q_k = (lhs_k - sum_{j<k} q_j rhs_{k-j}) / rhs_0
    for (int k = 0; k <= L; ++k) {
        double acc = lhs.coeffs_[k];
        for (int j = 0; j < k; ++j)
            acc -= q[j] * rhs.coeffs_[k - j];
        q[k] = acc / d0;
    }
    return {lhs.anchor_, std::move(q)};
}

TaylorJet exp(const TaylorJet& u)
{
    const auto c = u.coeffs();
    const int L = u.order();
    std::vector<double> h(L + 1, 0.0);
    h[0] = std::exp(c[0]);
    // h' = u' h  =>  k h_k = sum_{j=1}^k j u_j h_{k-j}
    for (int k = 1; k <= L; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += j * c[j] * h[k - j];
        h[k] = acc / k;
    }
    return {u.anchor(), std::move(h)};
}

TaylorJet log(const TaylorJet& u)
{
    const auto c = u.coeffs();
    if (!(c[0] > 0.0))
        throw DomainError("TaylorJet: log of non-positive value " + std::to_string(c[0]));
    const int L = u.order();
    std::vector<double> h(L + 1, 0.0);
    h[0] = std::log(c[0]);
    // u h' = u'  =>  h_k = (u_k - (1/k) sum_{j=1}^{k-1} j h_j u_{k-j}) / u_0
    for (int k = 1; k <= L; ++k) {
        double acc = 0.0;
        for (int j = 1; j < k; ++j)
            acc += j * h[j] * c[k - j];
        h[k] = (c[k] - acc / k) / c[0];
    }
    return {u.anchor(), std::move(h)};
}

TaylorJet pow(const TaylorJet& u, double p)
{
    const auto c = u.coeffs();
    const int L = u.order();
    const bool integral = is_integer(p);

    if (c[0] == 0.0) {
        if (!integral || p < 0.0)
            throw DomainError("TaylorJet: power " + std::to_string(p) + " of a vanishing jet");
        TaylorJet result = TaylorJet::constant(u.anchor(), 1.0, L);
        TaylorJet base = u;
        for (auto n = static_cast<long long>(p); n > 0; n >>= 1) {
            if (n & 1)
                result = result * base;
            if (n > 1)
                base = base * base;
        }
        return result;
    }
    if (!integral && c[0] < 0.0)
        throw DomainError("TaylorJet: non-integer power of negative value " + std::to_string(c[0]));

    std::vector<double> h(L + 1, 0.0);
    h[0] = std::pow(c[0], p);
    // u h' = p u' h  =>  k u_0 h_k = sum_{j=1}^k (p j - (k - j)) u_j h_{k-j}
    for (int k = 1; k <= L; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += (p * j - (k - j)) * c[j] * h[k - j];
        h[k] = acc / (k * c[0]);
    }
    return {u.anchor(), std::move(h)};
}

TaylorJet atan(const TaylorJet& u)
{
    const int L = u.order();
    const auto c = u.coeffs();
    std::vector<double> h(L + 1, 0.0);
    h[0] = std::atan(c[0]);
    if (L == 0)
        return {u.anchor(), std::move(h)};

    // h' = u' / (1 + u^2), computed on jets one order shorter.
    std::vector<double> du(L, 0.0);
    std::vector<double> uu(L, 0.0);
    for (int k = 0; k < L; ++k)
        du[k] = (k + 1) * c[k + 1];
    for (int k = 0; k < L; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j)
            acc += c[j] * c[k - j];
        uu[k] = acc;
    }
    uu[0] += 1.0;
    TaylorJet d = TaylorJet(u.anchor(), std::move(du)) / TaylorJet(u.anchor(), std::move(uu));
    for (int k = 1; k <= L; ++k)
        h[k] = d[k - 1] / k;
    return {u.anchor(), std::move(h)};
}

TaylorJet rescale(const TaylorJet& inner, double alpha, double anchor)
{
    std::vector<double> c(inner.coeffs().begin(), inner.coeffs().end());
    double s = 1.0;
    for (auto& ck : c) {
        ck *= s;
        s *= alpha;
    }
    return {anchor, std::move(c)};
}

} // namespace sem
