#include "bisphere/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "tables.hpp"

namespace bisphere {
namespace {

using detail::ConstantSpec;
using detail::KernelSpec;

constexpr double kMSwitch = 0.12;  // Maclaurin branch below this
constexpr double kMMax = 40.0;     // kernels < 1e-25 beyond this

const ConstantSpec* find_constant(const std::string& label) {
    std::size_t n;
    const ConstantSpec* cs = detail::constants(&n);
    for (std::size_t i = 0; i < n; ++i)
        if (label == cs[i].label) return &cs[i];
    return nullptr;
}

double kernel_eval(const KernelSpec& k, double m) {
    if (m > 25.0) {
        // factored form: every exponent c + 4j - 4d is <= -2, so nothing
        // overflows no matter how large m gets
        double sum = 0.0;
        for (int i = 0; i < k.npolys; ++i) {
            const auto& p = k.polys[i];
            const double poly = p.a[0] + m * (p.a[1] + m * (p.a[2] + m * p.a[3]));
            sum += poly * std::exp((k.c + 4.0 * p.j - 4.0 * k.d) * m);
        }
        return sum / std::pow(-std::expm1(-4.0 * m), k.d);
    }
    double num = 0.0;
    for (int i = 0; i < k.npolys; ++i) {
        const auto& p = k.polys[i];
        const double poly = p.a[0] + m * (p.a[1] + m * (p.a[2] + m * p.a[3]));
        num += poly * std::exp(4.0 * p.j * m);
    }
    const double d = std::expm1(4.0 * m);
    return std::exp(k.c * m) * num / std::pow(d, k.d);
}

double subtracted_eval(const ConstantSpec& c, double m) {
    std::size_t nk;
    const KernelSpec* ks = detail::kernels(&nk);
    if (c.domain != detail::kDom1Inf && m < kMSwitch) {
        // cancellation-safe branch: frozen Maclaurin expansion through m^16
        double v = 0.0;
        for (int i = 16; i >= 0; --i) v = v * m + c.maclaurin[i];
        return v;
    }
    double v = kernel_eval(ks[c.kernel], m);
    for (int i = 0; i < c.ncts; ++i) v -= c.cts[i].coeff / std::pow(m, c.cts[i].power);
    return v;
}

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

template <typename F>
void gk15(const F& f, double a, double b, double* result, double* err) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double rk = 0.0, rg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgk[i];
        const double fv = i == 7 ? f(mid) : f(mid - dx) + f(mid + dx);
        rk += kWgk[i] * fv;
        if (i % 2 == 1) rg += kWg[i / 2] * fv;
    }
    *result = rk * h;
    *err = std::abs(rk - rg) * h;
}

// Globally adaptive bisection: split the worst panel until the summed error
// estimate meets abs_tol.
template <typename F>
double adaptive(const F& f, double a, double b, double abs_tol) {
    struct Panel {
        double a, b, val, err;
    };
    std::vector<Panel> panels;
    Panel p{a, b, 0, 0};
    gk15(f, a, b, &p.val, &p.err);
    panels.push_back(p);
    for (int iter = 0; iter < 4000; ++iter) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (total_err <= abs_tol) {
            double s = 0.0;
            for (const auto& q : panels) s += q.val;
            return s;
        }
        Panel w = panels[worst];
        const double mid = 0.5 * (w.a + w.b);
        Panel l{w.a, mid, 0, 0}, r{mid, w.b, 0, 0};
        gk15(f, l.a, l.b, &l.val, &l.err);
        gk15(f, r.a, r.b, &r.val, &r.err);
        panels[worst] = l;
        panels.push_back(r);
    }
    throw std::runtime_error("adaptive quadrature did not converge");
}

double counterterm_tail(const ConstantSpec& c, double from) {
    // integral of the subtracted counterterms over [from, inf)
    double tail = 0.0;
    for (int i = 0; i < c.ncts; ++i) {
        const int p = c.cts[i].power;
        if (p < 2) throw std::logic_error("non-integrable counterterm tail");
        tail -= c.cts[i].coeff * std::pow(from, 1.0 - p) / (p - 1.0);
    }
    return tail;
}

double eval_constant_spec(const ConstantSpec& c, double abs_tol) {
    auto f = [&](double m) { return subtracted_eval(c, m); };
    switch (c.domain) {
        case detail::kDom01:
            return adaptive(f, 0.0, 1.0, abs_tol);
        case detail::kDom1Inf:
            return adaptive(f, 1.0, kMMax, abs_tol) + counterterm_tail(c, kMMax);
        default:
            return adaptive(f, 0.0, 1.0, abs_tol / 2) + adaptive(f, 1.0, kMMax, abs_tol / 2) +
                   counterterm_tail(c, kMMax);
    }
}

std::optional<std::pair<long, long>> small_rational_near(double v) {
    for (long q = 1; q <= 48; ++q) {
        const double pq = v * q;
        const double p = std::round(pq);
        if (std::abs(pq - p) <= 5e-6 * q && std::abs(p) < 1e6)
            return std::make_pair(static_cast<long>(p), q);
    }
    return std::nullopt;
}

}  // namespace

const ConstantEntry& ConstantTable::at(const std::string& label) const {
    auto it = entries_.find(label);
    if (it == entries_.end()) throw std::out_of_range("unknown constant: " + label);
    return it->second;
}

double ConstantTable::resolve(const std::string& label) const {
    const ConstantEntry& e = at(label);
    return e.paper_value ? *e.paper_value : e.computed;
}

ConstantTable ConstantTable::paper_defaults() {
    ConstantTable t;
    std::size_t n;
    const ConstantSpec* cs = detail::constants(&n);
    for (std::size_t i = 0; i < n; ++i) {
        ConstantEntry e;
        e.label = cs[i].label;
        e.computed = std::nan("");
        e.paper_value = cs[i].paper_value;
        e.paper_tol = cs[i].paper_tol;
        e.known_anomalous = cs[i].known_anomalous;
        t.insert(std::move(e));
    }
    std::size_t na;
    const detail::AggregateSpec* as = detail::aggregates(&na);
    for (std::size_t i = 0; i < na; ++i) {
        ConstantEntry e;
        e.label = as[i].label;
        e.computed = std::nan("");
        e.paper_value = as[i].paper_value;
        e.paper_tol = as[i].paper_tol;
        e.known_anomalous = as[i].known_anomalous;
        e.aggregate = true;
        t.insert(std::move(e));
    }
    return t;
}

double eval_constant(const std::string& label, double abs_tol) {
    if (!(abs_tol >= 1e-12 && abs_tol <= 1e-6))
        throw std::invalid_argument("eval_constant: abs_tol must lie in [1e-12, 1e-6]");
    if (const ConstantSpec* c = find_constant(label)) {
        try {
            return eval_constant_spec(*c, abs_tol);
        } catch (const std::exception& ex) {
            throw std::runtime_error(label + ": " + ex.what());
        }
    }
    // aggregates evaluate as the sum of their parts
    std::size_t na;
    const detail::AggregateSpec* as = detail::aggregates(&na);
    for (std::size_t i = 0; i < na; ++i)
        if (label == as[i].label)
            return eval_constant(as[i].part1, abs_tol) + eval_constant(as[i].part2, abs_tol);
    throw std::out_of_range("unknown constant: " + label);
}

ConstantTable build_constant_table(double abs_tol) {
    if (!(abs_tol >= 1e-12 && abs_tol <= 1e-6))
        throw std::invalid_argument("build_constant_table: abs_tol must lie in [1e-12, 1e-6]");
    std::size_t n;
    const ConstantSpec* cs = detail::constants(&n);
    std::vector<double> vals(n);
    std::vector<std::string> failures(n);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = std::min<unsigned>(hw, 8);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nthreads) {
                try {
                    vals[i] = eval_constant_spec(cs[i], abs_tol);
                } catch (const std::exception& ex) {
                    failures[i] = ex.what();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < n; ++i)
        if (!failures[i].empty())
            throw std::runtime_error(std::string(cs[i].label) + ": " + failures[i]);

    ConstantTable table;
    for (std::size_t i = 0; i < n; ++i) {
        ConstantEntry e;
        e.label = cs[i].label;
        e.computed = vals[i];
        e.paper_value = cs[i].paper_value;
        e.paper_tol = cs[i].paper_tol;
        e.abs_err = std::abs(vals[i] - cs[i].paper_value);
        e.anomalous = e.abs_err > e.paper_tol;
        e.known_anomalous = cs[i].known_anomalous;
        e.rational_hint = small_rational_near(vals[i]);
        table.insert(std::move(e));
    }
    std::size_t na;
    const detail::AggregateSpec* as = detail::aggregates(&na);
    for (std::size_t i = 0; i < na; ++i) {
        ConstantEntry e;
        e.label = as[i].label;
        e.aggregate = true;
        e.computed = table.at(as[i].part1).computed + table.at(as[i].part2).computed;
        e.paper_value = as[i].paper_value;
        e.paper_tol = as[i].paper_tol;
        e.abs_err = std::abs(e.computed - as[i].paper_value);
        e.anomalous = e.abs_err > e.paper_tol;
        e.known_anomalous = as[i].known_anomalous;
        e.rational_hint = small_rational_near(e.computed);
        table.insert(std::move(e));
    }
    return table;
}

std::vector<std::string> registered_constant_labels() {
    std::size_t n;
    const ConstantSpec* cs = detail::constants(&n);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(cs[i].label);
    return out;
}

std::vector<std::string> registered_aggregate_labels() {
    std::size_t n;
    const detail::AggregateSpec* as = detail::aggregates(&n);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(as[i].label);
    return out;
}

std::vector<std::string> registered_kernel_names() {
    std::size_t n;
    const KernelSpec* ks = detail::kernels(&n);
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(ks[i].name);
    return out;
}

double kernel_value(const std::string& kernel_name, double m) {
    const int idx = detail::kernel_index(kernel_name.c_str());
    if (idx < 0) throw std::out_of_range("unknown kernel: " + kernel_name);
    std::size_t n;
    const KernelSpec* ks = detail::kernels(&n);
    return kernel_eval(ks[idx], m);
}

double subtracted_integrand(const std::string& label, double m) {
    const ConstantSpec* c = find_constant(label);
    if (!c) throw std::out_of_range("unknown constant: " + label);
    return subtracted_eval(*c, m);
}

double maclaurin_switch_point() { return kMSwitch; }

}  // namespace bisphere
