#ifndef EFFCOND_ERRORS_HPP
#define EFFCOND_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace effcond {

/// A tolerance could not be met within the configured cutoffs.
/// Carries the best estimate reached and the accuracy achieved.
class convergence_error : public std::runtime_error {
public:
    convergence_error(std::string what, std::complex<double> best, double achieved)
        : std::runtime_error(std::move(what)), best_estimate(best), achieved_accuracy(achieved) {}

    std::complex<double> best_estimate;
    double achieved_accuracy;
};

/// The realified truncated system is singular at the given parameters.
class singular_system_error : public std::runtime_error {
public:
    singular_system_error(double rho, double f, int order)
        : std::runtime_error("singular truncated system at rho=" + std::to_string(rho) +
                             ", f=" + std::to_string(f) + ", L=" + std::to_string(order)),
          rho(rho), f(f), order(order) {}

    double rho;
    double f;
    int order;
};

} // namespace effcond

#endif
