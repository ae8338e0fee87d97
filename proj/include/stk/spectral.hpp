#pragma once

#include <cstdint>

#include "stk/extremal.hpp"
#include "stk/graph.hpp"

namespace stk {

// Power-iteration outcome.  `residual` is ||A v - rho v||_inf for the final
// unit vector v; `converged` is false only when the iteration cap ran out, in
// which case rho is the best estimate so far.
struct SpectralEstimate {
    double rho = 0.0;
    double residual = 0.0;
    std::uint64_t iterations = 0;
    bool converged = true;
};

// Adjacency spectral radius.  Deterministic: all-ones start vector, run per
// connected component, largest component value wins.
SpectralEstimate spectral_radius(const Graph& g, double tol = 1e-10,
                                 std::uint64_t max_iterations = 1'000'000);

// Largest eigenvalue of the 3x3 block quotient
//   [t-1  m  q]
//   [ t  m-1 0]     (m, q = clique / independent block sizes)
//   [ t   0  0]
// whose parts are the hub, clique, and independent blocks of the extremal
// family.  The blocks are degree-regular toward each other, so this equals
// the graph's spectral radius exactly; bisection + Newton to 1e-12.
double quotient_largest_root(int t, int m, int q);
double extremal_rho_quotient(const Params& p);

// rho <= (delta - 1 + sqrt((delta+1)^2 + 4(2e - n*delta))) / 2 for a graph
// with n vertices, e edges, minimum degree delta.
double hsf_nikiforov_bound(long long n, long long e, long long delta);

enum class RhoOrder { Less, Equal, Greater };

// three-way float comparison with an absolute tolerance band
RhoOrder rho_compare(double a, double b, double tol);

}  // namespace stk
