#include "sem/validation.hpp"

#include "sem/bernoulli.hpp"
#include "sem/bernoulli_a.hpp"
#include "sem/crystal.hpp"
#include "sem/errors.hpp"
#include "sem/oracle.hpp"
#include "sem/sem.hpp"
#include "sem/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace sem
{

namespace
{

std::string label(std::initializer_list<std::pair<const char*, double>> fields)
{
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (const auto& [key, value] : fields) {
        os << (first ? "" : " ") << key << '=' << value;
        first = false;
    }
    return os.str();
}

void record(SuiteReport& r, std::string name, double error, double tolerance)
{
    const bool ok = std::isfinite(error) && error <= tolerance;
    r.checks.push_back({std::move(name), error, tolerance, ok});
}

// Runs body, timing it and turning numerical exceptions into a failed check.
SuiteReport timed(const std::string& suite, const std::function<void(SuiteReport&)>& body)
{
    SuiteReport r;
    r.suite = suite;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.checks.push_back({std::string("exception: ") + e.what(), INFINITY, 0.0, false});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Addend of the full interaction, including the sign of odd s left of x.
std::function<double(double)> addend(const SemProblem& p)
{
    return [p](double n) {
        const double d = n - static_cast<double>(p.x);
        double s = p.interaction.coefficient * std::pow(std::abs(d), -p.interaction.exponent);
        if (p.parity == Parity::odd && d < 0.0)
            s = -s;
        return s * p.g(n);
    };
}

SemOptions tight_options()
{
    SemOptions o;
    o.integral.abs_tol = 1e-14;
    o.integral.rel_tol = 1e-14;
    o.remainder.abs_tol = 1e-14;
    o.remainder.rel_tol = 1e-12;
    return o;
}

} // namespace

Expr g_catalog(const std::string& name, std::int64_t x)
{
    const Expr y = Expr::identity();
    if (name == "const")
        return 1.0;
    if (name == "affine")
        return 1.0 + y / 300.0;
    if (name == "bump")
        return 1.0 / (1.0 + pow(y / 50.0, 2.0));
    if (name == "kink") {
        KinkCrystal c;
        c.lambda = 10.0;
        c.nu = 1.0;
        c.delta = 0.5;
        return g_factor(x, c);
    }
    throw UsageError("unknown g '" + name + "' (expected const, affine, bump or kink)");
}

const std::vector<std::string>& g_catalog_names()
{
    static const std::vector<std::string> names{"const", "affine", "bump", "kink"};
    return names;
}

bool SuiteReport::passed() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double SuiteReport::max_error() const
{
    double m = 0.0;
    for (const auto& c : checks)
        m = std::max(m, c.error);
    return m;
}

std::vector<const CheckResult*> SuiteReport::failures() const
{
    std::vector<const CheckResult*> out;
    for (const auto& c : checks)
        if (!c.passed)
            out.push_back(&c);
    return out;
}

SuiteReport identity_suite()
{
    return timed("identity", [](SuiteReport& r) {
        struct Interval
        {
            std::int64_t x, a, b;
        };
        const Interval intervals[] = {{0, 0, 150}, {-7, -2, 298}, {3, 5, 61}};
        const auto options = tight_options();
        int index = 0;
        for (double nu : {0.5, 1.0, 2.0, 3.0})
            for (int order = 0; order <= 4; ++order)
                for (double delta : {0.5, 1.0})
                    for (const auto& name : g_catalog_names()) {
                        const Interval iv = intervals[index++ % 3];
                        SemProblem p;
                        p.interaction = {nu, 1.0};
                        p.g = g_catalog(name, iv.x);
                        p.x = iv.x;
                        p.a = iv.a;
                        p.b = iv.b;
                        p.delta = delta;
                        p.order = order;
                        const double sem = sem_sum(p, true, options).total;
                        const double brute = brute_sum(addend(p), p.a, p.b);
                        record(r,
                               label({{"nu", nu}, {"order", order}, {"delta", delta},
                                      {"x", double(iv.x)}, {"a", double(iv.a)}, {"b", double(iv.b)}}) +
                                   " g=" + name,
                               std::abs(sem - brute), 1e-8);
                    }
    });
}

SuiteReport reduction_suite()
{
    return timed("reduction", [](SuiteReport& r) {
        const BernoulliAEvaluator a({0.0, 1.0}, 6);
        for (int order = 0; order <= 6; ++order) {
            double worst = 0.0;
            double where = 0.0;
            for (int i = 1; i <= 200; ++i) {
                // Mix of interior points and exact integers in (0, 10].
                const double y = (i % 20 == 0) ? i / 20.0 : 10.0 * i / 201.0;
                const double err = std::abs(a(order, y) - periodized_bernoulli(order, y));
                if (err > worst) {
                    worst = err;
                    where = y;
                }
            }
            record(r, label({{"order", order}, {"worst_y", where}}), worst, 1e-10);
        }
    });
}

SuiteReport jump_suite()
{
    return timed("jump", [](SuiteReport& r) {
        const double eps = 1e-6;
        for (double nu : {0.5, 1.0, 2.0, 3.0})
            for (double c : {1.0, -2.5}) {
                const BernoulliAEvaluator a({nu, c}, 0);
                for (double n : {1.0, 2.0, 5.0, 10.0}) {
                    const double jump = a(0, n - eps) - a(0, n + eps);
                    const double expected = c * std::pow(n, -nu);
                    record(r, label({{"nu", nu}, {"c", c}, {"n", n}}), std::abs(jump - expected),
                           1e-5 * std::abs(expected) + 1e-9);
                }
            }
    });
}

SuiteReport smoothness_suite()
{
    return timed("smoothness", [](SuiteReport& r) {
        const double eps = 1e-6;
        for (double nu : {0.5, 1.0, 2.0, 3.0}) {
            const BernoulliAEvaluator a({nu, 1.0}, 4);
            for (int order = 1; order <= 4; ++order)
                for (double n : {1.0, 2.0, 5.0, 10.0}) {
                    const double lo = a(order, n - eps);
                    const double hi = a(order, n + eps);
                    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
                    record(r, label({{"nu", nu}, {"order", order}, {"n", n}}), std::abs(lo - hi),
                           1e-4 * scale);
                }
        }
    });
}

SuiteReport ladder_suite()
{
    return timed("ladder", [](SuiteReport& r) {
        for (double nu : {0.5, 1.0, 2.0, 3.0}) {
            const BernoulliAEvaluator a({nu, 1.0}, 5);
            for (int order = 0; order <= 4; ++order)
                for (double y : {1.5, 2.5, 5.5, 10.5, 12.25}) {
                    const auto fd = fd_derivative([&](double t) { return a(order + 1, t); }, y, 1, 0.1);
                    const double expected = (order + 1) * a(order, y);
                    record(r, label({{"nu", nu}, {"order", order}, {"y", y}}),
                           std::abs(fd.value - expected), 1e-6 * std::max(1.0, std::abs(expected)));
                }
        }
    });
}

SuiteReport integer_nu_suite()
{
    return timed("integer_nu", [](SuiteReport& r) {
        for (double nu : {1.0, 2.0, 3.0}) {
            const BernoulliAEvaluator exact({nu, 1.0}, 3);
            for (double shift : {-1e-6, 1e-6}) {
                const BernoulliAEvaluator near({nu + shift, 1.0}, 3);
                for (int order = 0; order <= 3; ++order)
                    for (double y : {0.7, 1.5, 3.0, 7.3}) {
                        const double v = exact(order, y);
                        record(r, label({{"nu", nu}, {"shift", shift}, {"order", order}, {"y", y}}),
                               std::abs(near(order, y) - v), 1e-4 * std::abs(v) + 1e-12);
                    }
            }
        }
    });
}

SuiteReport reflection_suite()
{
    return timed("reflection", [](SuiteReport& r) {
        {
            SemProblem p;
            p.side = SingularitySide::right;
            p.x = 0;
            p.a = -101;
            p.b = -2;
            const auto q = reflect(p);
            record(r, "indices x=0 a=-101 b=-2", std::abs(q.a - 1.0) + std::abs(q.b - 100.0), 0.0);
            p.x = 5;
            p.a = 0;
            p.b = 4;
            const auto q2 = reflect(p);
            record(r, "indices x=5 a=0 b=4", std::abs(q2.a - 5.0) + std::abs(q2.b - 9.0), 0.0);
        }
        const auto options = tight_options();
        for (double nu : {1.0, 2.0, 3.0})
            for (Parity parity : {Parity::even, Parity::odd})
                for (const char* name : {"affine", "bump", "kink"})
                    for (int order : {0, 2}) {
                        SemProblem p;
                        p.interaction = {nu, 1.5};
                        p.parity = parity;
                        p.x = 10;
                        p.a = -150;
                        p.b = 7;
                        p.g = g_catalog(name, p.x);
                        p.order = order;
                        p.side = SingularitySide::right;
                        const auto q = reflect(p);
                        const std::string tag =
                            label({{"nu", nu}, {"order", order}}) + " g=" + name +
                            (parity == Parity::odd ? " odd" : " even");

                        const double brute = brute_sum(addend(p), p.a, p.b);
                        const double brute_q = brute_sum(addend(q), q.a, q.b);
                        record(r, "enumeration " + tag, std::abs(brute - brute_q),
                               1e-13 * std::max(1.0, std::abs(brute)));

                        const double direct = sem_sum(p, false, options).total;
                        const double mirrored = sem_sum(q, false, options).total;
                        record(r, "approximation " + tag, std::abs(direct - mirrored), 1e-10);

                        const double exact = sem_sum(p, true, options).total;
                        record(r, "identity " + tag, std::abs(exact - brute), 1e-8);
                    }
    });
}

SuiteReport antisymmetry_suite()
{
    return timed("antisymmetry", [](SuiteReport& r) {
        KinkCrystal small;
        small.N = 50;
        small.lambda = 5.0;
        double worst = 0.0;
        for (std::int64_t x = 0; x <= small.N; ++x)
            worst = std::max(worst, std::abs(force_brute(-x, small) + force_brute(x, small)));
        record(r, "force_brute N=50 lambda=5", worst, 1e-12);

        for (int order : {0, 1, 3}) {
            KinkCrystal c;
            c.N = 200;
            c.lambda = 10.0;
            c.order = order;
            double w = 0.0;
            for (std::int64_t x = 0; x <= c.N; ++x)
                w = std::max(w, std::abs(force_sem(-x, c) + force_sem(x, c)));
            record(r, label({{"force_sem N=200 lambda=10 order", order}}), w, 1e-11);
        }
    });
}

SuiteReport jets_fd_suite()
{
    return timed("jets_fd", [](SuiteReport& r) {
        auto compare = [&](const std::string& name, const Expr& f, double y, double tol) {
            const TaylorJet jet = f.lift(y, 2);
            for (int k = 1; k <= 2; ++k) {
                const auto fd = fd_derivative([&](double t) { return f(t); }, y, k);
                record(r, name + " " + label({{"y", y}, {"k", k}}),
                       std::abs(jet.derivative(k) - fd.value), tol);
            }
        };
        KinkCrystal c;
        c.lambda = 10.0;
        for (double y : {5.0, 12.0, 40.0})
            compare("g_factor x=0 lambda=10", g_factor(0, c), y, 1e-7);
        compare("g_factor x=-20 lambda=10", g_factor(-20, c), -3.0, 1e-7);
        for (const auto& name : g_catalog_names())
            for (double y : {3.0, 25.0, 80.0})
                compare("catalog " + name, g_catalog(name, 0), y, 1e-7);
        compare("atan", atan(Expr::identity()), 1.0, 1e-5);
        compare("exp", exp(Expr::identity()), 0.0, 1e-9);
        compare("log*pow", log(Expr::identity()) * pow(Expr::identity(), -1.5), 4.0, 1e-7);
    });
}

SuiteReport special_function_suite()
{
    return timed("special_functions", [](SuiteReport& r) {
        // Independent zeta oracle: a long direct sum and a three-term
        // tail correction past M terms.
        auto zeta_oracle = [](double z, double q) {
            const std::int64_t m = 200000;
            PairwiseAccumulator acc;
            for (std::int64_t n = m - 1; n >= 0; --n)
                acc.add(std::pow(n + q, -z));
            const double t = m + q;
            const double tail = std::pow(t, 1.0 - z) / (z - 1.0) + 0.5 * std::pow(t, -z) +
                                z / 12.0 * std::pow(t, -z - 1.0) -
                                z * (z + 1.0) * (z + 2.0) / 720.0 * std::pow(t, -z - 3.0);
            return acc.sum() + tail;
        };
        for (double z : {1.5, 2.0, 3.0, 4.5})
            for (double q : {1.0, 2.0, 10.0}) {
                const double v = hurwitz_zeta(z, q);
                const double o = zeta_oracle(z, q);
                record(r, "zeta " + label({{"z", z}, {"q", q}}), std::abs(v - o) / std::abs(o), 1e-12);
            }
        record(r, "zeta z=-1 q=1", std::abs(hurwitz_zeta(-1.0, 1.0) + 1.0 / 12.0), 1e-15);

        const auto& table = bernoulli_table();
        for (int l = 1; l <= 12; ++l) {
            double shift = 0.0, symmetry = 0.0, endpoint = 0.0;
            for (int i = 0; i <= 20; ++i) {
                const double y = i / 20.0;
                const double bl = table.polynomial(l, y);
                // B_l(y+1) - B_l(y) = l y^(l-1)
                shift = std::max(shift, std::abs(table.polynomial(l, y + 1.0) - bl -
                                                 l * std::pow(y, l - 1)));
                // B_l(1-y) = (-1)^l B_l(y)
                symmetry = std::max(symmetry,
                                    std::abs(table.polynomial(l, 1.0 - y) - ((l % 2) ? -bl : bl)));
            }
            if (l >= 2)
                endpoint = std::abs(table.polynomial(l, 1.0) - table.polynomial(l, 0.0));
            QuadratureConfig cfg;
            cfg.abs_tol = 1e-15;
            const double mean =
                integrate([&](double y) { return table.polynomial(l, y); }, 0.0, 1.0, cfg).value;
            record(r, label({{"bernoulli shift l", l}}), shift, 1e-12);
            record(r, label({{"bernoulli symmetry l", l}}), symmetry, 1e-12);
            record(r, label({{"bernoulli endpoints l", l}}), endpoint, 1e-12);
            record(r, label({{"bernoulli mean l", l}}), std::abs(mean), 1e-12);
        }
    });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "identity", "reduction",    "jump",    "smoothness",        "ladder",
        "integer_nu", "reflection", "antisymmetry", "jets_fd", "special_functions"};
    return names;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names)
{
    std::vector<std::string> wanted;
    for (const auto& n : names) {
        if (n == "all")
            wanted.insert(wanted.end(), suite_names().begin(), suite_names().end());
        else
            wanted.push_back(n);
    }
    std::vector<SuiteReport> out;
    for (const auto& n : wanted) {
        if (n == "identity")
            out.push_back(identity_suite());
        else if (n == "reduction")
            out.push_back(reduction_suite());
        else if (n == "jump")
            out.push_back(jump_suite());
        else if (n == "smoothness")
            out.push_back(smoothness_suite());
        else if (n == "ladder")
            out.push_back(ladder_suite());
        else if (n == "integer_nu")
            out.push_back(integer_nu_suite());
        else if (n == "reflection")
            out.push_back(reflection_suite());
        else if (n == "antisymmetry")
            out.push_back(antisymmetry_suite());
        else if (n == "jets_fd")
            out.push_back(jets_fd_suite());
        else if (n == "special_functions")
            out.push_back(special_function_suite());
        else
            throw UsageError("unknown validation suite '" + n + "'");
    }
    return out;
}

} // namespace sem
