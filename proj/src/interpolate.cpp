#include "pattern_lab/interpolate.hpp"

namespace pattern_lab::poly_lab {

InterpolationWindow interpolation_window(const std::vector<Permutation>& patterns,
                                         const Partition& lambda) {
    int ksum = 0;
    for (const auto& s : patterns) ksum += s.size();
    InterpolationWindow w;
    w.degree = ksum - lambda.sum();
    w.n0 = ksum + lambda.sum();
    return w;
}

RationalPolynomial interpolate_a(const std::vector<Permutation>& patterns,
                                 const Partition& lambda,
                                 const EnumerationOptions& opts) {
    const auto [n0, degree] = interpolation_window(patterns, lambda);
    if (degree < 0)
        throw domain_error("interpolate_a: |lambda| exceeds total pattern size");
    if (n0 + degree + 1 > opts.cap)
        throw resource_error("interpolate_a: needs S_" + std::to_string(n0 + degree + 1) +
                             ", beyond cap " + std::to_string(opts.cap));
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.reserve(degree + 1);
    for (int n = n0; n <= n0 + degree; ++n)
        nodes.emplace_back(Rational(n), moments::coefficient_alpha(patterns, lambda, n, opts));
    const RationalPolynomial p = lagrange_interpolate(nodes);
    const int check_n = n0 + degree + 1;
    const Rational expected = moments::coefficient_alpha(patterns, lambda, check_n, opts);
    if (p.evaluate(Rational(check_n)) != expected)
        throw consistency_error("interpolate_a: polynomiality violation at n=" +
                                std::to_string(check_n));
    return p;
}

}  // namespace pattern_lab::poly_lab
