#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modnet {

// Large-deviation rate function for the edge profile of a vertex subset in a
// random d-regular multigraph, with x the subset fraction and y its average
// internal degree:
//   f(x,y,d) = x(y/2 - 1) ln x + (1-x)(d-1) ln(1-x) + (d/2) ln d
//            - (xy/2) ln y - x(d-y) ln(d-y) - ((d-2xd+xy)/2) ln(d-2xd+xy)
// with the convention 0 ln 0 = 0. Requires x in (0,1), y in (0,d], and the
// feasibility constraint d - 2xd + xy >= 0; throws std::invalid_argument
// outside that domain.
double f_reg(double x, double y, std::uint32_t d);

// Largest root in (0, d) of y -> f_reg(x, y, d): scan downward from
// d(1 - 1e-6) in steps of d/1000 until the sign changes, then bisect to
// tol. The scan never descends past y = x d, where
// f(x, xd, d) = -x ln x + (x-1) ln(1-x) > 0 guarantees a bracket.
double y_bar(double x, std::uint32_t d, double tol = 1e-10);

// sup over x in (0,1) of  y_bar(x,d)/d - x,  via a 1e-4 grid followed by
// golden-section refinement of the best cell down to x_tol.
double u3(std::uint32_t d, double x_tol = 1e-6);

struct U4Result {
    double value;
    std::uint32_t k;  // maximizing part count
};

// max over integer k in [2, k_max] of  y_bar(1/k, d)/d - 1/k : the best
// bound achievable by k equal-size parts.
U4Result u4(std::uint32_t d, std::uint32_t k_max = 200);

// Root in (0,1) of (1-h)ln(1-h) + (1+h)ln(1+h) = (4/d) ln 2 (the LHS is
// increasing), found by bisection.
double eta(std::uint32_t d);

// First-moment bisection-width bounds for random d-regular graphs.
double u1(std::uint32_t d);  // max(1/2 + eta(d)/2, 3/4)
double u2(std::uint32_t d);  // eta(d)

// Eigenvalue bound q* <= lambda/d and its a.a.s. evaluation 2/sqrt(d).
double spectral_upper(double lambda, std::uint32_t d);
double friedman_upper(std::uint32_t d);

// Bounds driven by the isoperimetric number rho.
double trivial_upper(double rho, std::uint32_t d);     // max(1 - rho/d, 3/4)
double restricted_upper(double rho, std::uint32_t d);  // 1 - 2 rho/d

// Preferential-attachment modularity bounds by edge multiplicity m.
double pa_lower_l1(std::uint32_t m);  // 1/m
double pa_lower_l2(std::uint32_t m);  // E|Bin(m,1/2) - m/2| / m, exact sums
double pa_upper(std::uint32_t m);     // max(15/16, 3/4 + 3/(8m)), m >= 2
double mihail_expansion_lower(std::uint32_t m);  // rho >= m/2 - 3/4, m >= 2

// Deterministic lower bounds certified by the centroid decompositions.
double forest_lower(std::uint64_t n, std::uint64_t delta);
double avg_degree_lower(std::uint64_t n, std::uint64_t delta, double dbar);

// Convergence-rate scale n^(max{-1/dim, -1+p*a1}/2) * (ln n)^(9/2) for the
// spatial model's strip partition error terms.
double spa_rate(std::uint64_t n, std::uint32_t dim, double p_a1);

struct BoundRow {
    std::string param;  // "d=3" or "m=7"
    std::string name;   // bound identifier
    double value;
};

// All closed-form bound values for d in [d_lo, d_hi] and each listed m.
std::vector<BoundRow> bound_table(std::uint32_t d_lo, std::uint32_t d_hi,
                                  const std::vector<std::uint32_t>& ms);

// Serialize rows as "param,name,value" CSV (header included).
std::string bound_table_csv(const std::vector<BoundRow>& rows);

}  // namespace modnet
