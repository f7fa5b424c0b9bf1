#include "twistor/length.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "twistor/error.hpp"
#include "twistor/hyperbolic.hpp"

namespace twistor {

namespace {

double speed_at(const ParamSurface& s, const ChartPath& path, double t) {
    const double ht = 1e-6;
    const double t0 = std::max(0.0, t - ht), t1 = std::min(1.0, t + ht);
    const Vec2 dp = (path(t1) - path(t0)) / (t1 - t0);
    const Vec2 p = path(t);
    if (!s.domain.contains(p[0], p[1]))
        throw DomainError("intrinsic_length: path leaves the chart domain");

    // First derivative of the immersion along dp, one Richardson step.
    const double h = 1e-5 * s.domain.scale();
    const auto dir_deriv = [&](double step) {
        return Vec5((s(p[0] + step * dp[0], p[1] + step * dp[1]) -
                     s(p[0] - step * dp[0], p[1] - step * dp[1])) /
                    (2 * step));
    };
    const Vec5 d = (4 * dir_deriv(h / 2) - dir_deriv(h)) / 3;

    double lam = 1.0;
    if (s.target == Target::Ball) lam = hyperbolic_conformal_factor(s(p[0], p[1]).head<4>());
    return lam * d.norm();
}

double simpson(const ParamSurface& s, const ChartPath& path, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = speed_at(s, path, 0.5 * (a + m));
    const double rm = speed_at(s, path, 0.5 * (m + b));
    const double left = (m - a) / 6 * (fa + 4 * lm + fm);
    const double right = (b - m) / 6 * (fm + 4 * rm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson(s, path, a, m, fa, lm, fm, left, tol / 2, depth - 1) +
           simpson(s, path, m, b, fm, rm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double intrinsic_length(const ParamSurface& s, const ChartPath& path, const DiffConfig&,
                        double tol) {
    const double fa = speed_at(s, path, 0.0);
    const double fm = speed_at(s, path, 0.5);
    const double fb = speed_at(s, path, 1.0);
    const double whole = (fa + 4 * fm + fb) / 6;
    return simpson(s, path, 0.0, 1.0, fa, fm, fb, whole, tol, 28);
}

double diameter_estimate(const ParamSurface& s, int n, const DiffConfig& cfg) {
    if (n < 2) throw PreconditionError("diameter_estimate: need at least a 2x2 grid");
    const double du = (s.domain.umax - s.domain.umin) / (n - 1);
    const double dv = (s.domain.vmax - s.domain.vmin) / (n - 1);
    std::vector<Vec5> pts(n * n);
    std::vector<double> lam(n * n, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double u = s.domain.umin + i * du, v = s.domain.vmin + j * dv;
            pts[i * n + j] = s(u, v);
            if (s.target == Target::Ball)
                lam[i * n + j] = hyperbolic_conformal_factor(pts[i * n + j].head<4>());
        }
    (void)cfg;

    // Edge lengths from the trapezoid of the conformal factor times the
    // ambient chord; for the sphere the chord underestimates arcs, keeping
    // the whole estimate a lower bound.
    const auto edge = [&](int a, int b) {
        return 0.5 * (lam[a] + lam[b]) * (pts[a] - pts[b]).norm();
    };
    const int total = n * n;
    const int off[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    double best = 0.0;
    std::vector<double> dist(total);
    using Item = std::pair<double, int>;
    for (int src = 0; src < total; ++src) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[src] = 0.0;
        pq.emplace(0.0, src);
        while (!pq.empty()) {
            const auto [d, at] = pq.top();
            pq.pop();
            if (d > dist[at]) continue;
            const int i = at / n, j = at % n;
            for (const auto& o : off) {
                const int ni = i + o[0], nj = j + o[1];
                if (ni < 0 || nj < 0 || ni >= n || nj >= n) continue;
                const int next = ni * n + nj;
                const double nd = d + edge(at, next);
                if (nd < dist[next]) {
                    dist[next] = nd;
                    pq.emplace(nd, next);
                }
            }
        }
        for (double d : dist) best = std::max(best, d);
    }
    return best;
}

}  // namespace twistor
