#include "catsl2/homvanish.hpp"

#include <stdexcept>

namespace catsl2 {

namespace {

GapReport degree_gap(int cond, int lambda, int s, int k, int j) {
    if (lambda < 0 || s < 0) {
        throw std::invalid_argument("degree_gap: lambda and s must be nonnegative");
    }
    if (k < (cond == 1 ? 2 : 3)) {
        throw std::invalid_argument("degree_gap: k below the condition's threshold");
    }
    const long long a = static_cast<long long>(lambda) + s - k;
    const long long b = static_cast<long long>(lambda) + s;
    if (j < 0 || j > a) throw std::invalid_argument("degree_gap: j outside 0..a");

    // The two reachable-degree bounds; on the second condition the extra unit
    // sits on the lower bound so that the margin matches gap_quadratic.
    const long long d_max = (a - j) * (k - 2 * b + j);
    const long long d_min = b * (k - j) + static_cast<long long>(j) * j - (cond == 1 ? 1 : 2);
    return GapReport{cond, lambda, s, k, j, a, b, d_max, d_min, d_max < d_min};
}

}  // namespace

GapReport degree_gap_cond1(int lambda, int s, int k, int j) {
    return degree_gap(1, lambda, s, k, j);
}

GapReport degree_gap_cond2(int lambda, int s, int k, int j) {
    return degree_gap(2, lambda, s, k, j);
}

long long gap_quadratic(int cond, long long a, long long b, long long k, long long j) {
    if (cond != 1 && cond != 2) throw std::invalid_argument("gap_quadratic: cond must be 1 or 2");
    return 2 * j * j + 2 * j * (-2 * b + k) + k * k + 2 * a * b - cond;
}

std::pair<long long, long long> discriminants(int k) {
    if (k < 0) throw std::invalid_argument("discriminants: negative k");
    const long long kk = static_cast<long long>(k) * k;
    return {-4 * kk + 8, -4 * kk + 16};
}

ConvolutionReport check_convolution_conditions(int N, int lambda) {
    if (N < 0 || lambda < 0 || lambda > N || (N - lambda) % 2 != 0) {
        throw std::invalid_argument("check_convolution_conditions: need 0 <= lambda <= N, same parity");
    }
    ConvolutionReport report{N, lambda, {}, true};
    const int smax = (N - lambda) / 2;
    for (int s = 0; s <= smax; ++s) {
        for (int cond = 1; cond <= 2; ++cond) {
            for (int k = cond + 1; k <= s; ++k) {
                const int a = lambda + s - k;
                for (int j = 0; j <= a; ++j) {
                    report.rows.push_back(degree_gap(cond, lambda, s, k, j));
                    report.pass = report.pass && report.rows.back().gap_ok;
                }
            }
        }
    }
    return report;
}

NoFPartBounds no_f_part_bounds(int lambda, int r, int a) {
    if (a < 1) throw std::invalid_argument("no_f_part_bounds: a must be positive");
    const long long bound = static_cast<long long>(a) * (static_cast<long long>(lambda) + r + a);
    return NoFPartBounds{-bound, bound, -bound < bound};
}

}  // namespace catsl2
