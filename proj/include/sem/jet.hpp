#pragma once

#include <span>
#include <vector>

namespace sem
{

/// Truncated Taylor expansion of a function at an anchor y0:
/// coefficient c_k = f^(k)(y0) / k!, k = 0..order.
///
/// Arithmetic propagates the truncated series exactly, so derivatives
/// of compositions come out at machine precision.
class TaylorJet
{
public:
    TaylorJet(double anchor, std::vector<double> coeffs);

    static TaylorJet constant(double anchor, double value, int order);
    /// Jet of y -> y at anchor: (anchor, 1, 0, ...).
    static TaylorJet identity(double anchor, int order);

    double anchor() const noexcept { return anchor_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](int k) const { return coeffs_[k]; }
    double value() const noexcept { return coeffs_.front(); }

    /// f^(k)(anchor) = k! c_k.
    double derivative(int k) const;

    TaylorJet& operator+=(const TaylorJet& rhs);
    TaylorJet& operator-=(const TaylorJet& rhs);
    TaylorJet& operator*=(double s);
    TaylorJet& operator+=(double s);

    friend TaylorJet operator+(TaylorJet lhs, const TaylorJet& rhs) { return lhs += rhs; }
    friend TaylorJet operator-(TaylorJet lhs, const TaylorJet& rhs) { return lhs -= rhs; }
    friend TaylorJet operator*(const TaylorJet& lhs, const TaylorJet& rhs);
    /// Quotient by recursive coefficient solve; throws SingularPointError
    /// if rhs has a zero constant term.
    friend TaylorJet operator/(const TaylorJet& lhs, const TaylorJet& rhs);
    friend TaylorJet operator-(TaylorJet v) { return v *= -1.0; }

    friend TaylorJet operator*(TaylorJet lhs, double s) { return lhs *= s; }
    friend TaylorJet operator*(double s, TaylorJet rhs) { return rhs *= s; }
    friend TaylorJet operator+(TaylorJet lhs, double s) { return lhs += s; }
    friend TaylorJet operator+(double s, TaylorJet rhs) { return rhs += s; }

private:
    double anchor_;
    std::vector<double> coeffs_;
};

TaylorJet exp(const TaylorJet& u);
/// Throws DomainError unless the constant term is positive.
TaylorJet log(const TaylorJet& u);
/// u^p. Non-integer p needs a positive constant term (DomainError
/// otherwise); integer p accepts any base, negative p a nonzero one.
TaylorJet pow(const TaylorJet& u, double p);
TaylorJet atan(const TaylorJet& u);

/// Jet of y -> u(alpha*y + beta) given the jet of u at alpha*y0 + beta.
TaylorJet rescale(const TaylorJet& inner, double alpha, double anchor);

} // namespace sem
