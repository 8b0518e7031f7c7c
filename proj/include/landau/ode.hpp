#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
};

// Dormand-Prince 5(4), stepping exactly onto every grid time.
// Throws BlowUp when the step collapses below 1e-12 of the span or `admissible` rejects a state.
template <std::size_t N, class Rhs, class Admissible>
std::vector<std::array<double, N>> integrate_on_grid(Rhs&& f, std::array<double, N> y, const std::vector<double>& grid,
                                                     const OdeOptions& opt, Admissible&& admissible)
{
    using State = std::array<double, N>;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    std::vector<State> out;
    out.reserve(grid.size());
    if (grid.empty()) return out;
    out.push_back(y);
    const double span = grid.back() - grid.front();
    if (grid.size() == 1) return out;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) fail(Errc::PreconditionViolation, "grid must be strictly increasing");

    auto axpy = [](const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) {
        State r = base;
        for (const auto& [c, k] : terms)
            for (std::size_t j = 0; j < N; ++j) r[j] += h * c * (*k)[j];
        return r;
    };

    double t = grid.front();
    double h = std::min(span / 64.0, grid[1] - grid[0]);
    State k1 = f(t, y);
    for (std::size_t g = 1; g < grid.size(); ++g) {
        const double target = grid[g];
        while (t < target) {
            bool last = false;
            double step = h;
            if (t + step >= target) {
                step = target - t;
                last = true;
            }
            if (step < 1e-12 * span && !last)
                fail(Errc::BlowUp, "step collapse at t=" + std::to_string(t));
            const State k2 = f(t + c2 * step, axpy(y, step, {{a21, &k1}}));
            const State k3 = f(t + c3 * step, axpy(y, step, {{a31, &k1}, {a32, &k2}}));
            const State k4 = f(t + c4 * step, axpy(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
            const State k5 = f(t + c5 * step, axpy(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
            const State k6 =
                f(t + step, axpy(y, step, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
            const State ynew = axpy(y, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
            const State k7 = f(t + step, ynew);

            double err = 0.0;
            bool finite = true;
            for (std::size_t j = 0; j < N; ++j) {
                const double ej =
                    step * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] + e7 * k7[j]);
                const double sc = opt.atol + opt.rtol * std::max(std::abs(y[j]), std::abs(ynew[j]));
                err += (ej / sc) * (ej / sc);
                finite = finite && std::isfinite(ynew[j]);
            }
            err = std::sqrt(err / N);
            if (!finite || !std::isfinite(err) || !admissible(ynew)) {
                h = 0.25 * step;
                if (h < 1e-12 * span) fail(Errc::BlowUp, "inadmissible state near t=" + std::to_string(t));
                continue;
            }
            const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
            if (err <= 1.0) {
                t = last ? target : t + step;
                y = ynew;
                k1 = k7;
                if (!last) h = step * factor;
            } else {
                h = step * factor;
                if (h < 1e-12 * span) fail(Errc::BlowUp, "step collapse at t=" + std::to_string(t));
            }
        }
        out.push_back(y);
    }
    return out;
}

} // namespace landau
