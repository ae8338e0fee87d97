#include "stk/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stk {

namespace {

// one connected component, vertices relabeled 0..c-1
SpectralEstimate component_rho(const Graph& g, double tol, std::uint64_t max_iterations) {
    const int n = g.order();
    SpectralEstimate est;
    if (n == 1 || g.edge_count() == 0) return est;  // single vertex: rho = 0, residual 0

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), av(n);
    // Iterate on A+I rather than A: bipartite components pair +rho with -rho
    // and plain iteration never settles; the shift leaves eigenvectors alone.
    for (std::uint64_t it = 1; it <= max_iterations; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            g.for_neighbors(i, [&](int j) { s += v[j]; });
            av[i] = s;
        }
        double rho = 0.0;  // Rayleigh quotient of the unit vector v
        for (int i = 0; i < n; ++i) rho += v[i] * av[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::fabs(av[i] - rho * v[i]));
        est.rho = rho;
        est.residual = res;
        est.iterations = it;
        if (res <= tol) return est;
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            av[i] += v[i];  // the +I shift
            norm += av[i] * av[i];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) v[i] = av[i] / norm;
    }
    est.converged = false;
    return est;
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, double tol, std::uint64_t max_iterations) {
    if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty graph");
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tolerance must be positive");
    int count = 0;
    std::vector<int> comp = g.component_ids(&count);
    SpectralEstimate best;
    std::uint64_t total_iterations = 0;
    bool all_converged = true;
    for (int c = 0; c < count; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (comp[v] == c) keep.push_back(v);
        SpectralEstimate e = component_rho(g.induced(keep), tol, max_iterations);
        total_iterations += e.iterations;
        all_converged = all_converged && e.converged;
        if (c == 0 || e.rho > best.rho) best = e;
    }
    best.iterations = total_iterations;
    best.converged = all_converged;
    return best;
}

double quotient_largest_root(int t, int m, int q) {
    if (t < 1 || m < 1 || q < 0) throw std::invalid_argument("quotient_largest_root: bad block sizes");
    const double a = t - 1, b = m - 1;
    const double mt = static_cast<double>(m) * t, qt = static_cast<double>(q) * t;
    auto poly = [&](double x) { return x * (x - a) * (x - b) - mt * x - qt * (x - b); };
    auto dpoly = [&](double x) {
        return (x - a) * (x - b) + x * (x - b) + x * (x - a) - mt - qt;
    };
    // the largest root lies in (t+m-1, t+m+q]; at q = 0 it is exactly t+m-1
    double lo = t + m - 1.0;
    if (poly(lo) >= 0.0) return lo;
    double hi = static_cast<double>(t) + m + q;
    while (poly(hi) < 0.0) hi += 1.0;  // safety; row-sum bound says this never fires
    for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (poly(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        double d = dpoly(x);
        if (d == 0.0) break;
        x -= poly(x) / d;
    }
    return x;
}

double extremal_rho_quotient(const Params& p) {
    p.validate();
    return quotient_largest_root(p.t, p.middle(), p.independent());
}

double hsf_nikiforov_bound(long long n, long long e, long long delta) {
    if (n < 1 || e < 0 || delta < 0) throw std::invalid_argument("hsf_nikiforov_bound: bad arguments");
    const double disc = static_cast<double>(delta + 1) * (delta + 1) + 4.0 * (2.0 * e - static_cast<double>(n) * delta);
    if (disc < 0)
        throw std::domain_error("hsf_nikiforov_bound: negative discriminant (inconsistent n, e, delta)");
    return (delta - 1 + std::sqrt(disc)) / 2.0;
}

RhoOrder rho_compare(double a, double b, double tol) {
    if (tol < 0) throw std::invalid_argument("rho_compare: negative tolerance");
    if (a < b - tol) return RhoOrder::Less;
    if (a > b + tol) return RhoOrder::Greater;
    return RhoOrder::Equal;
}

}  // namespace stk
