#pragma once

#include <utility>
#include <vector>

namespace catsl2 {

// One row of the degree-gap table for the convolution-uniqueness conditions
// at (lambda, s, k, j), with a = lambda+s-k and b = lambda+s. The morphism
// space vanishes when every degree reachable from one side stays below every
// degree reachable from the other, i.e. when d_max < d_min.
struct GapReport {
    int cond;  // 1 or 2
    int lambda;
    int s;
    int k;
    int j;
    long long a;
    long long b;
    long long d_max;
    long long d_min;
    bool gap_ok;  // d_max < d_min
};

// First condition, k >= 2: d_max = (a-j)(k-2b+j), d_min = b(k-j)+j^2-1.
[[nodiscard]] GapReport degree_gap_cond1(int lambda, int s, int k, int j);

// Second condition, k >= 3. Only the margin d_min - d_max is pinned for this
// condition; the split into two bounds mirrors the first one.
[[nodiscard]] GapReport degree_gap_cond2(int lambda, int s, int k, int j);

// Closed-form margin 2j^2 + 2j(-2b+k) + k^2 + 2ab - cond; equals
// d_min - d_max of the matching report.
[[nodiscard]] long long gap_quadratic(int cond, long long a, long long b, long long k,
                                      long long j);

// Discriminants of the two margin quadratics in j: (-4k^2+8, -4k^2+16).
// Negative first entry for k >= 2 and negative second for k >= 3 make the
// margins positive at every integer j.
[[nodiscard]] std::pair<long long, long long> discriminants(int k);

struct ConvolutionReport {
    int N;
    int lambda;
    std::vector<GapReport> rows;
    bool pass;  // every row has gap_ok
};

// Sweeps both conditions over all admissible (s, k, j) for the theta complex
// at the given weight: s = 0..(N-lambda)/2, k up to s, j = 0..lambda+s-k.
[[nodiscard]] ConvolutionReport check_convolution_conditions(int N, int lambda);

// Two-sided bounds on the shift k of a would-be identity-summand inclusion:
// one adjunction side forces k <= -a(lambda+r+a), the other k >= a(lambda+r+a).
// With a >= 1 the bounds contradict each other iff lambda + r + a > 0.
struct NoFPartBounds {
    long long upper;
    long long lower;
    bool contradiction;  // upper < lower
};
[[nodiscard]] NoFPartBounds no_f_part_bounds(int lambda, int r, int a);

}  // namespace catsl2
