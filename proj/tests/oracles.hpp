// Test-side oracles: independent brute-force evaluations of the defining
// sums, written against the raw table lookups only. They deliberately avoid
// the library's cached index lists, Gram builders and eigen machinery so
// that agreement is evidence, not tautology.
#pragma once

#include <complex>
#include <vector>

#include "invsemi/function.hpp"
#include "invsemi/semigroup.hpp"

namespace oracles {

using invsemi::Complex;
using invsemi::InverseSemigroup;
using invsemi::SFunction;

/// (f*g)(x) = sum over all pairs (s,t) with st = x.
inline Eigen::VectorXcd convolve(const InverseSemigroup& s, const Eigen::VectorXcd& f,
                                 const Eigen::VectorXcd& g) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b) out(s.product(a, b)) += f(a) * g(b);
    return out;
}

/// (f•g)(x) = sum over y with x*x = yy* of f(xy) g(y*), the condition
/// evaluated from scratch per pair.
inline Eigen::VectorXcd restricted_convolve(const InverseSemigroup& s, const Eigen::VectorXcd& f,
                                            const Eigen::VectorXcd& g) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (s.product(s.star(x), x) == s.product(y, s.star(y)))
                out(x) += f(s.product(x, y)) * g(s.star(y));
    return out;
}

/// Definitional quadratic form of plain positive definiteness:
/// sum_{i,j} conj(c_i) c_j u(x_i* x_j) over an explicit tuple.
inline Complex tuple_form_pd(const InverseSemigroup& s, const Eigen::VectorXcd& u,
                             const std::vector<int>& xs, const std::vector<Complex>& c) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            acc += std::conj(c[i]) * c[j] * u(s.product(s.star(xs[i]), xs[j]));
    return acc;
}

/// Restricted variant: terms survive only when x_i x_i* = x_j x_j*.
inline Complex tuple_form_rpd(const InverseSemigroup& s, const Eigen::VectorXcd& u,
                              const std::vector<int>& xs, const std::vector<Complex>& c) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (s.product(xs[i], s.star(xs[i])) == s.product(xs[j], s.star(xs[j])))
                acc += std::conj(c[i]) * c[j] * u(s.product(s.star(xs[i]), xs[j]));
    return acc;
}

/// Left side of the extendibility inequality: |sum c_i u(x_i)|^2.
inline double tuple_extendibility_lhs(const Eigen::VectorXcd& u, const std::vector<int>& xs,
                                      const std::vector<Complex>& c) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) acc += c[i] * u(xs[i]);
    return std::norm(acc);
}

/// Support of the defining sum f•g~ evaluated directly.
inline std::vector<int> support_of_restricted_product(const InverseSemigroup& s,
                                                      const Eigen::VectorXcd& f,
                                                      const Eigen::VectorXcd& g) {
    Eigen::VectorXcd gt(s.size());
    for (int x = 0; x < s.size(); ++x) gt(x) = std::conj(g(s.star(x)));
    Eigen::VectorXcd h = restricted_convolve(s, f, gt);
    std::vector<int> out;
    for (int x = 0; x < s.size(); ++x)
        if (h(x) != 0.0) out.push_back(x);
    return out;
}

} // namespace oracles
