// semsum: singular Euler-Maclaurin sums, crystal forces and validation runs.

#include "sem/crystal.hpp"
#include "sem/errors.hpp"
#include "sem/oracle.hpp"
#include "sem/sem.hpp"
#include "sem/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SEMSUM_VERSION
#define SEMSUM_VERSION "unknown"
#endif

using json = nlohmann::ordered_json;

namespace
{

json number(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        T v{};
        if (!(is >> v) || !(is >> std::ws).eof())
            throw sem::UsageError(std::string("bad ") + what + " list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw sem::UsageError(std::string("empty ") + what + " list");
    return out;
}

// "all", "lo:hi" or "x1,x2,...".
std::vector<std::int64_t> parse_particles(const std::string& spec, std::int64_t n)
{
    std::vector<std::int64_t> out;
    if (spec == "all") {
        for (std::int64_t x = -n; x <= n; ++x)
            out.push_back(x);
        return out;
    }
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        const auto lo = parse_list<std::int64_t>(spec.substr(0, colon), "particle");
        const auto hi = parse_list<std::int64_t>(spec.substr(colon + 1), "particle");
        if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
            throw sem::UsageError("bad particle range '" + spec + "'");
        for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
            out.push_back(x);
        return out;
    }
    return parse_list<std::int64_t>(spec, "particle");
}

struct Output
{
    std::string path;

    void write(const std::string& body) const
    {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw sem::UsageError("cannot open '" + path + "' for writing");
        f << body;
    }

    void manifest(const json& m) const
    {
        if (path.empty()) {
            std::cerr << m.dump(2) << '\n';
            return;
        }
        std::ofstream f(path + ".manifest.json", std::ios::binary);
        if (!f)
            throw sem::UsageError("cannot open '" + path + ".manifest.json' for writing");
        f << m.dump(2) << '\n';
    }
};

json tolerances(const sem::SemOptions& o)
{
    return {{"integral_abs_tol", o.integral.abs_tol},
            {"integral_rel_tol", o.integral.rel_tol},
            {"remainder_abs_tol", o.remainder.abs_tol},
            {"remainder_rel_tol", o.remainder.rel_tol}};
}

json manifest(const std::string& command, json parameters, json tol, double seconds,
              const std::vector<std::string>& warnings)
{
    json m;
    m["command"] = command;
    m["version"] = SEMSUM_VERSION;
    m["parameters"] = std::move(parameters);
    m["tolerances"] = std::move(tol);
    m["wall_time_s"] = seconds;
    m["warnings"] = warnings;
    return m;
}

double elapsed(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singular Euler-Maclaurin lattice sums"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SEMSUM_VERSION);
    std::string out_path;

    // sum
    auto* sum = app.add_subcommand("sum", "evaluate one singular lattice sum");
    double nu = 1.0, coeff = 1.0, delta = 1.0;
    std::string g_name = "const", parity = "even";
    std::int64_t x = 0, a = 0, b = 1;
    int order = 1;
    bool with_remainder = false, brute = false;
    sum->add_option("--nu", nu, "interaction exponent")->required();
    sum->add_option("--coeff", coeff, "interaction coefficient")->capture_default_str();
    sum->add_option("--g", g_name, "smooth factor")
        ->check(CLI::IsMember({"const", "affine", "bump", "kink"}))
        ->capture_default_str();
    sum->add_option("--parity", parity, "symmetry of s, used for right-sided sums")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    sum->add_option("--x", x, "singularity location")->required();
    sum->add_option("--a", a, "sum starts at a + 1")->required();
    sum->add_option("--b", b, "sum ends at b")->required();
    sum->add_option("--delta", delta, "integration offset in (0, 1]")->capture_default_str();
    sum->add_option("--order", order, "SEM order")->required()->check(CLI::NonNegativeNumber);
    sum->add_flag("--with-remainder", with_remainder, "add the remainder integral");
    sum->add_flag("--brute", brute, "add the directly summed value");
    sum->add_option("--out", out_path, "output file (default stdout)");

    // force
    auto* force = app.add_subcommand("force", "crystal forces");
    std::int64_t n_half = 1000;
    double lambda = 10.0;
    std::string particles = "all";
    double force_nu = 1.0;
    int force_order = 1;
    double force_delta = 1.0;
    bool force_brute_flag = false;
    bool flat = false;
    force->add_option("--N", n_half, "half chain size")->required();
    force->add_option("--lambda", lambda, "kink width")->capture_default_str();
    force->add_option("--nu", force_nu, "potential exponent")->capture_default_str();
    force->add_option("--order", force_order, "SEM order")->capture_default_str()->check(CLI::NonNegativeNumber);
    force->add_option("--delta", force_delta, "integration offset")->capture_default_str();
    force->add_option("--particles", particles, "all, lo:hi or a comma list")->capture_default_str();
    force->add_flag("--brute", force_brute_flag, "add direct sums and errors");
    force->add_flag("--flat", flat, "undisplaced chain");
    force->add_option("--out", out_path, "output file (default stdout)");

    // scan-lambda
    auto* scan = app.add_subcommand("scan-lambda", "error scaling against kink width");
    std::int64_t scan_n = 200;
    std::string orders_text = "0,1,3,5", lambdas_text = "10,15,20,25,35,50";
    scan->add_option("--N", scan_n, "half chain size")->capture_default_str();
    scan->add_option("--orders", orders_text, "comma list of SEM orders")->capture_default_str();
    scan->add_option("--lambdas", lambdas_text, "comma list of kink widths")->capture_default_str();
    scan->add_option("--out", out_path, "output file (default stdout)");

    // validate
    auto* validate = app.add_subcommand("validate", "run the property suites");
    std::string suites_text = "identity,reduction,jump,reflection";
    validate->add_option("--suites", suites_text, "comma list of suites or 'all'")->capture_default_str();
    validate->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Output output{out_path};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (sum->parsed()) {
            sem::SemProblem p;
            p.interaction = {nu, coeff};
            p.parity = parity == "odd" ? sem::Parity::odd : sem::Parity::even;
            p.g = sem::g_catalog(g_name, x);
            p.x = x;
            p.a = a;
            p.b = b;
            p.delta = delta;
            p.order = order;
            p.side = (b < x) ? sem::SingularitySide::right : sem::SingularitySide::left;
            const sem::SemOptions options;
            const auto r = sem::sem_sum(p, with_remainder, options);

            json j;
            j["total"] = number(r.total);
            j["integral_part"] = number(r.integral_part);
            j["boundary_part"] = number(r.boundary_part);
            j["remainder_part"] = r.remainder_part ? number(*r.remainder_part) : json(nullptr);
            j["quadrature_error_estimate"] = number(r.quadrature_error_estimate);
            json by_order = json::array();
            for (double v : r.boundary_by_order)
                by_order.push_back(number(v));
            j["boundary_by_order"] = by_order;
            if (brute) {
                const double value = sem::brute_sum(
                    [&](double n) {
                        const double d = n - static_cast<double>(x);
                        double s = coeff * std::pow(std::abs(d), -nu);
                        if (p.parity == sem::Parity::odd && d < 0.0)
                            s = -s;
                        return s * p.g(n);
                    },
                    a, b);
                j["brute"] = number(value);
                j["abs_diff"] = number(std::abs(value - r.total));
            }
            j["diagnostics"] = r.diagnostics;
            output.write(j.dump(2) + "\n");
            output.manifest(manifest("sum",
                                     {{"nu", nu}, {"coeff", coeff}, {"g", g_name}, {"parity", parity},
                                      {"x", x}, {"a", a}, {"b", b}, {"delta", delta}, {"order", order},
                                      {"with_remainder", with_remainder}, {"brute", brute}},
                                     tolerances(options), elapsed(t0), r.diagnostics));
            return 0;
        }

        if (force->parsed()) {
            sem::KinkCrystal c;
            c.N = n_half;
            c.lambda = lambda;
            c.nu = force_nu;
            c.order = force_order;
            c.delta = force_delta;
            c.profile = flat ? sem::Profile::flat : sem::Profile::kink;
            sem::validate(c);
            const auto xs = parse_particles(particles, c.N);
            const auto options = sem::crystal_sem_options();

            std::ostringstream csv;
            csv << (force_brute_flag ? "x,F_sem,F_brute,abs_err\n" : "x,F_sem\n");
            std::vector<std::string> warnings;
            double max_abs = 0.0, max_rel = 0.0;
            for (std::int64_t px : xs) {
                const double fs = sem::force_sem(px, c, options);
                csv << px << ',' << fmt17(fs);
                if (force_brute_flag) {
                    const double fb = sem::force_brute(px, c);
                    const double err = std::abs(fs - fb);
                    max_abs = std::max(max_abs, err);
                    if (fb != 0.0)
                        max_rel = std::max(max_rel, err / std::abs(fb));
                    csv << ',' << fmt17(fb) << ',' << fmt17(err);
                }
                csv << '\n';
            }
            output.write(csv.str());
            json params{{"N", c.N},          {"lambda", c.lambda}, {"nu", c.nu},
                        {"order", c.order},  {"delta", c.delta},   {"particles", particles},
                        {"profile", flat ? "flat" : "kink"}, {"brute", force_brute_flag}};
            json m = manifest("force", params, tolerances(options), elapsed(t0), warnings);
            if (force_brute_flag) {
                m["max_abs_err"] = max_abs;
                m["max_rel_err"] = max_rel;
            }
            output.manifest(m);
            return 0;
        }

        if (scan->parsed()) {
            sem::KinkCrystal c;
            c.N = scan_n;
            const auto orders = parse_list<int>(orders_text, "order");
            const auto lambdas = parse_list<double>(lambdas_text, "lambda");
            const auto result = sem::lambda_scan(c, lambdas, orders);

            std::ostringstream csv;
            csv << "lambda,order,max_abs_err\n";
            for (const auto& row : result.rows)
                csv << fmt17(row.lambda) << ',' << row.order << ',' << fmt17(row.max_abs_err) << '\n';
            output.write(csv.str());

            json slopes = json::array();
            for (const auto& s : result.slopes)
                slopes.push_back({{"order", s.order},
                                  {"slope", number(s.slope)},
                                  {"fitted_lambdas", s.fitted_lambdas}});
            json m = manifest("scan-lambda",
                              {{"N", scan_n}, {"orders", orders}, {"lambdas", lambdas}, {"nu", c.nu},
                               {"delta", c.delta}},
                              tolerances(sem::crystal_sem_options()), elapsed(t0), {});
            m["slopes"] = slopes;
            output.manifest(m);
            return 0;
        }

        if (validate->parsed()) {
            std::vector<std::string> names;
            std::stringstream ss(suites_text);
            for (std::string item; std::getline(ss, item, ',');)
                names.push_back(item);
            const auto reports = sem::run_suites(names);
            bool ok = true;
            json j;
            for (const auto& r : reports) {
                ok = ok && r.passed();
                j[r.suite + "_passed"] = r.passed();
                j[r.suite + "_cases"] = r.checks.size();
                j[r.suite + "_max_error"] = number(r.max_error());
                j[r.suite + "_seconds"] = r.seconds;
                std::vector<std::string> failed;
                for (const auto* f : r.failures())
                    failed.push_back(f->name);
                j[r.suite + "_failures"] = failed;
            }
            j["passed"] = ok;
            output.write(j.dump(2) + "\n");
            output.manifest(manifest("validate", {{"suites", names}}, json::object(), elapsed(t0), {}));
            return ok ? 0 : 1;
        }
    } catch (const sem::UsageError& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const sem::ConvergenceError& e) {
        std::cerr << json{{"error", "convergence"},
                          {"message", e.what()},
                          {"best_value", number(e.best_value())},
                          {"error_estimate", number(e.error_estimate())}}
                         .dump()
                  << '\n';
        return 1;
    } catch (const sem::Error& e) {
        std::cerr << json{{"error", "numerical"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
