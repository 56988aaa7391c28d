#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sumrules::detail {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brent's method.  Requires f(a) f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b,
             double xtol = 1e-13, int max_iter = 200);

// Scan [a, b] with n uniform steps and return all sign-change brackets in
// order of increasing abscissa.
std::vector<std::pair<double, double>>
scan_brackets(const std::function<double(double)>& f, double a, double b, int n);

} // namespace sumrules::detail
