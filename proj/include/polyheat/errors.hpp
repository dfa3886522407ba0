#ifndef POLYHEAT_ERRORS_HPP
#define POLYHEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyheat {

// Violation of a stated hypothesis (e.g. lambda*p*K^2 > 1 in the exp-moment
// bound). Distinct from domain errors on raw arguments.
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested (m, N, d, p) combination lies outside the admissible regime.
struct regime_error : std::runtime_error {
    explicit regime_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Pointwise overflow in the exponential nonlinearity; carries the offending
// node and, when raised inside a solve, the time-step context.
struct overflow_error : std::runtime_error {
    overflow_error(const std::string& msg, std::size_t node, double value)
        : std::runtime_error(msg), node(node), value(value) {}
    std::size_t node;
    double value;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    quadrature_error(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

// No (K, mu) pair in the search box satisfies the majorant bound.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace polyheat

#endif
