// Outcome record of a single numerical certification: signed margin to
// the threshold, the grid point achieving it, and the grid metadata.

#ifndef HARMCONV_REPORT_HPP
#define HARMCONV_REPORT_HPP

#include <complex>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "grid.hpp"
#include "io.hpp"

namespace harmconv {

template <std::floating_point T = double>
struct check_report {
    std::string criterion;
    bool passed;
    T min_margin;
    std::complex<T> witness;
    disk_grid<T> grid;
    // Named sub-margins and diagnostics (e.g. hypothesis vs conclusion
    // margins, winding numbers). Not part of the line format.
    std::vector<std::pair<std::string, T>> details;

    /// Line format: criterion=<id> passed=<bool> margin=<float>
    /// witness=<re>,<im> rmax=<float>
    std::string to_line() const
    {
        return "criterion=" + criterion + " passed=" + (passed ? "true" : "false") +
               " margin=" + format_g17(min_margin) + " witness=" +
               format_g17(witness.real()) + "," + format_g17(witness.imag()) +
               " rmax=" + format_g17(grid.r_max());
    }
};

/// passed is derived from the margin, keeping passed <=> min_margin > 0.
template <std::floating_point T>
check_report<T> make_report(std::string criterion, T margin, std::complex<T> witness,
                            disk_grid<T> grid,
                            std::vector<std::pair<std::string, T>> details = {})
{
    return check_report<T>{std::move(criterion), margin > T(0), margin, witness,
                           std::move(grid), std::move(details)};
}

template <std::floating_point T>
bool all_passed(const std::vector<check_report<T>>& reports)
{
    for (const auto& r : reports)
        if (!r.passed)
            return false;
    return true;
}

} // namespace harmconv

#endif
