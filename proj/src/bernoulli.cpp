#include "sem/bernoulli.hpp"

#include "sem/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sem
{

namespace
{
using Rational = boost::multiprecision::cpp_rational;

constexpr int kSharedDegree = 128;
} // namespace

BernoulliTable::BernoulliTable(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0)
        throw UsageError("BernoulliTable: negative degree");

    numbers_.reserve(max_degree + 1);
    row_offset_.reserve(max_degree + 2);
    coeffs_.reserve(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2);

    // Row l holds a_{l,0..l}. Integrating l*B_{l-1} gives a_{l,k} =
    // l a_{l-1,k-1} / k for k >= 1; the constant term zeroes the mean
    // on [0, 1].
    std::vector<Rational> prev{Rational(1)};
    std::vector<Rational> row;
    for (int l = 0; l <= max_degree; ++l) {
        if (l == 0) {
            row = prev;
        } else {
            row.assign(l + 1, Rational(0));
            Rational mean(0);
            for (int k = 1; k <= l; ++k) {
                row[k] = Rational(l) * prev[k - 1] / k;
                mean += row[k] / (k + 1);
            }
            row[0] = -mean;
        }
        row_offset_.push_back(coeffs_.size());
        for (const auto& c : row)
            coeffs_.push_back(static_cast<double>(c));
        numbers_.push_back(static_cast<double>(row[0]));
        prev = row;
    }
    row_offset_.push_back(coeffs_.size());
}

double BernoulliTable::number(int degree) const
{
    if (degree < 0 || degree > max_degree_)
        throw CapacityError("Bernoulli number of degree " + std::to_string(degree) +
                            " exceeds table degree " + std::to_string(max_degree_));
    return numbers_[degree];
}

std::span<const double> BernoulliTable::coefficients(int degree) const
{
    if (degree < 0 || degree > max_degree_)
        throw CapacityError("Bernoulli polynomial of degree " + std::to_string(degree) +
                            " exceeds table degree " + std::to_string(max_degree_));
    return {coeffs_.data() + row_offset_[degree], static_cast<std::size_t>(degree + 1)};
}

double BernoulliTable::polynomial(int degree, double y) const
{
    auto c = coefficients(degree);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

const BernoulliTable& bernoulli_table()
{
    static const BernoulliTable table(kSharedDegree);
    return table;
}

double bernoulli_polynomial(int degree, double y)
{
    return bernoulli_table().polynomial(degree, y);
}

} // namespace sem
