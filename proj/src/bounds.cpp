#include "modnet/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace modnet {

namespace {

double xlogx(double t) { return t <= 0.0 ? 0.0 : t * std::log(t); }

void check_d(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("bounds: d must be >= 1");
}

}  // namespace

double f_reg(double x, double y, std::uint32_t d) {
    check_d(d);
    const double dd = static_cast<double>(d);
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("f_reg: x must be in (0, 1)");
    if (!(y > 0.0 && y <= dd))
        throw std::invalid_argument("f_reg: y must be in (0, d]");
    double rest = dd - 2.0 * x * dd + x * y;  // half-edges left outside after wiring S
    if (rest < -1e-9 * dd)
        throw std::invalid_argument("f_reg: infeasible (x, y): d - 2xd + xy < 0");
    if (rest < 0.0) rest = 0.0;
    return x * (y / 2.0 - 1.0) * std::log(x) + (1.0 - x) * (dd - 1.0) * std::log(1.0 - x) +
           dd * std::log(dd) / 2.0 - x * y * std::log(y) / 2.0 - x * xlogx(dd - y) -
           0.5 * xlogx(rest);
}

double y_bar(double x, std::uint32_t d, double tol) {
    check_d(d);
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("y_bar: x must be in (0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("y_bar: tol must be > 0");

    const double dd = static_cast<double>(d);
    const double xd = x * dd;
    const double step = dd / 1000.0;

    double lo, hi;
    double y_prev = dd * (1.0 - 1e-6);
    if (f_reg(x, y_prev, d) >= 0.0) {
        // Root is pinched against d itself.
        lo = y_prev;
        hi = dd * (1.0 - 1e-15);
    } else {
        double y = y_prev - step;
        for (;;) {
            if (y <= xd) y = xd;
            if (f_reg(x, y, d) >= 0.0) {
                lo = y;
                hi = y_prev;
                break;
            }
            if (y == xd)  // cannot happen: f(x, xd, d) > 0 identically
                throw std::runtime_error("y_bar: no sign change found");
            y_prev = y;
            y -= step;
        }
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (f_reg(x, mid, d) >= 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double u3(std::uint32_t d, double x_tol) {
    check_d(d);
    const double dd = static_cast<double>(d);
    auto objective = [&](double x) { return y_bar(x, d, 1e-10) / dd - x; };

    // Coarse grid.
    double best = -1.0, best_x = 0.5;
    for (double x = 1e-4; x < 1.0 - 1e-4 + 1e-12; x += 1e-4) {
        double v = objective(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }

    // Golden-section refinement inside the winning cell.
    double a = std::max(1e-9, best_x - 1e-4);
    double b = std::min(1.0 - 1e-9, best_x + 1e-4);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = objective(c), fe = objective(e);
    while (b - a > x_tol) {
        if (fc > fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = objective(e);
        }
    }
    return std::max(best, std::max(fc, fe));
}

U4Result u4(std::uint32_t d, std::uint32_t k_max) {
    check_d(d);
    if (k_max < 2) throw std::invalid_argument("u4: k_max must be >= 2");
    const double dd = static_cast<double>(d);
    U4Result best{-2.0, 2};
    for (std::uint32_t k = 2; k <= k_max; ++k) {
        double x = 1.0 / static_cast<double>(k);
        double v = y_bar(x, d, 1e-10) / dd - x;
        if (v > best.value) best = {v, k};
    }
    return best;
}

double eta(std::uint32_t d) {
    check_d(d);
    const double target = 4.0 * std::log(2.0) / static_cast<double>(d);
    auto g = [](double h) { return xlogx(1.0 - h) + xlogx(1.0 + h); };
    double lo = 0.0, hi = 1.0;  // g(0) = 0, g(1) = 2 ln 2 >= target for d >= 2
    if (g(1.0) < target)
        throw std::invalid_argument("eta: no root in (0,1) for this d");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) < target) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double u1(std::uint32_t d) { return std::max(0.5 + eta(d) / 2.0, 0.75); }

double u2(std::uint32_t d) { return eta(d); }

double spectral_upper(double lambda, std::uint32_t d) {
    check_d(d);
    if (lambda < 0.0) throw std::invalid_argument("spectral_upper: lambda must be >= 0");
    return lambda / static_cast<double>(d);
}

double friedman_upper(std::uint32_t d) {
    check_d(d);
    return 2.0 / std::sqrt(static_cast<double>(d));
}

double trivial_upper(double rho, std::uint32_t d) {
    check_d(d);
    if (rho < 0.0) throw std::invalid_argument("trivial_upper: rho must be >= 0");
    return std::max(1.0 - rho / static_cast<double>(d), 0.75);
}

double restricted_upper(double rho, std::uint32_t d) {
    check_d(d);
    if (rho < 0.0) throw std::invalid_argument("restricted_upper: rho must be >= 0");
    return 1.0 - 2.0 * rho / static_cast<double>(d);
}

double pa_lower_l1(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("pa_lower_l1: m must be >= 1");
    return 1.0 / static_cast<double>(m);
}

double pa_lower_l2(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("pa_lower_l2: m must be >= 1");
    // E|Bin(m, 1/2) - m/2| / m via the parity-split exact sums:
    //   m even: 2^(1-m)/m * sum_{i=1}^{m/2}      i       * C(m, m/2 + i)
    //   m odd:  2^(1-m)/m * sum_{i=1}^{(m+1)/2} (i - 1/2) * C(m, (m-1)/2 + i)
    const bool even = (m % 2 == 0);
    const std::uint32_t terms = even ? m / 2 : (m + 1) / 2;
    const std::uint32_t base = even ? m / 2 : (m - 1) / 2;
    long double sum = 0.0L;
    const long double log2l = std::log(2.0L);
    for (std::uint32_t i = 1; i <= terms; ++i) {
        const std::uint32_t k = base + i;
        long double log_c = std::lgamma(static_cast<long double>(m) + 1) -
                            std::lgamma(static_cast<long double>(k) + 1) -
                            std::lgamma(static_cast<long double>(m - k) + 1);
        long double weight = even ? static_cast<long double>(i)
                                  : static_cast<long double>(i) - 0.5L;
        sum += weight * std::exp(log_c + (1.0L - m) * log2l);
    }
    return static_cast<double>(sum / m);
}

double pa_upper(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("pa_upper: m must be >= 2");
    return std::max(15.0 / 16.0, 0.75 + 3.0 / (8.0 * static_cast<double>(m)));
}

double mihail_expansion_lower(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("mihail_expansion_lower: m must be >= 2");
    return static_cast<double>(m) / 2.0 - 0.75;
}

double forest_lower(std::uint64_t n, std::uint64_t delta) {
    if (n < 1 || delta < 1)
        throw std::invalid_argument("forest_lower: need n >= 1 and delta >= 1");
    return 1.0 - 3.0 * std::sqrt(static_cast<double>(delta) / static_cast<double>(n));
}

double avg_degree_lower(std::uint64_t n, std::uint64_t delta, double dbar) {
    if (n < 1 || delta < 1 || dbar <= 0.0)
        throw std::invalid_argument("avg_degree_lower: need n >= 1, delta >= 1, dbar > 0");
    const double nd = static_cast<double>(n) * dbar;
    const double del = static_cast<double>(delta);
    return 2.0 / dbar - 3.0 * std::sqrt(del / nd) - del / nd;
}

double spa_rate(std::uint64_t n, std::uint32_t dim, double p_a1) {
    if (n < 2) throw std::invalid_argument("spa_rate: need n >= 2");
    if (dim < 1) throw std::invalid_argument("spa_rate: need dim >= 1");
    const double expo = std::max(-1.0 / static_cast<double>(dim), -1.0 + p_a1) / 2.0;
    const double ln_n = std::log(static_cast<double>(n));
    return std::pow(static_cast<double>(n), expo) * std::pow(ln_n, 4.5);
}

std::vector<BoundRow> bound_table(std::uint32_t d_lo, std::uint32_t d_hi,
                                  const std::vector<std::uint32_t>& ms) {
    if (d_lo > d_hi) throw std::invalid_argument("bound_table: d_lo > d_hi");
    std::vector<BoundRow> rows;
    for (std::uint32_t d = d_lo; d <= d_hi; ++d) {
        const std::string param = "d=" + std::to_string(d);
        rows.push_back({param, "u1", u1(d)});
        rows.push_back({param, "u2", u2(d)});
        rows.push_back({param, "u3", u3(d)});
        rows.push_back({param, "friedman", friedman_upper(d)});
    }
    for (std::uint32_t m : ms) {
        const std::string param = "m=" + std::to_string(m);
        rows.push_back({param, "l1", pa_lower_l1(m)});
        rows.push_back({param, "l2", pa_lower_l2(m)});
        if (m >= 2) {
            rows.push_back({param, "pa_upper", pa_upper(m)});
            rows.push_back({param, "mihail_rho", mihail_expansion_lower(m)});
        }
    }
    return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "param,name,value\n";
    out.precision(10);
    for (const BoundRow& r : rows)
        out << r.param << ',' << r.name << ',' << r.value << '\n';
    return out.str();
}

}  // namespace modnet
