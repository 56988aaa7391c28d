#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

// The potential catalog: class tags, parameters, closed-form V(r) and V'(r),
// and the inverse-square strength that controls the origin exponent.  All
// other modules read potentials only through this interface.

namespace sumrules {

// Unit constants kept explicit so every transcribed formula carries its
// hbar/m/e factors; the defaults are the natural units hbar = m = e = 1.
struct Units {
    double hbar = 1.0;
    double m = 1.0;
    double e = 1.0;
};

enum class PotentialId {
    coulomb,
    oscillator,
    linear,
    power_law,
    quarkonium,
    exponential,
    hulthen,
    morse,
    woods_saxon,
    inv_square_plus_power,
    valence_electron,
    singular_oscillator,
};

enum class PotentialClass { regular, soft_singular };

// Raised when (l+1/2)^2 < 2 m V0 / hbar^2: falling-to-center, out of scope.
struct HardSingularError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PotentialSpec {
    PotentialId id{};
    PotentialClass cls = PotentialClass::regular;
    std::map<std::string, double> params;
    double v0_inverse_square = 0.0; // coefficient of -1/r^2
    Units units;
    // true when no closed-form spectrum exists and states come from shooting
    bool numeric_only = false;

    double param(const std::string& key) const;
};

std::string to_string(PotentialId id);
PotentialId potential_id_from_string(const std::string& name);

// Build a catalog entry with defaults, applying parameter overrides.
// Throws ConfigError on unknown keys or out-of-range values.
PotentialSpec make_potential(PotentialId id,
                             const std::map<std::string, double>& overrides = {},
                             Units units = {});
PotentialSpec make_potential(const std::string& name,
                             const std::map<std::string, double>& overrides = {},
                             Units units = {});

// Parse "key = value" text naming a catalog id plus overrides, e.g.
//   potential = hulthen
//   v0 = 6.0
// Errors are reported with 1-based line numbers.
PotentialSpec parse_potential_config(std::istream& in);

double v(const PotentialSpec& spec, double r);
double v_prime(const PotentialSpec& spec, double r);

// Split V = -V0/r^2 + W(r).  W carries everything less singular than 1/r^2;
// the exact cancellation of the V0 pieces in the theorem combinations is
// done symbolically through these accessors.
double v_tail(const PotentialSpec& spec, double r);
double v_prime_tail(const PotentialSpec& spec, double r);

// Origin exponent P = sqrt((l+1/2)^2 - 2 m V0 / hbar^2); exactly l + 1/2 for
// regular potentials.  Throws HardSingularError when the radicand is negative.
double origin_exponent(const PotentialSpec& spec, int l);

// Leading behavior near r = 0, used by moment-convergence guards and the
// power-series start of the shooting integrator.
struct OriginExpansion {
    double coulomb_strength = 0.0; // zeta in W = -zeta/r + O(1)
    double tail_power = 0.0;       // leading power of W
    double tail_prime_power = 0.0; // leading power of W'
    double tail_const = 0.0;       // lim_{r->0} (W + zeta/r), where it exists
    double tail_prime_const = 0.0; // lim_{r->0} d/dr (W + zeta/r), where finite
};
OriginExpansion origin_expansion(const PotentialSpec& spec);

// Characteristic length used to scale grids, fit radii and tail cutoffs.
double length_scale(const PotentialSpec& spec);

// Numeric check of the class tag: r^2 V at r = 1e-3, 1e-4, 1e-5 must tend to
// 0 (regular) or to -V0 (soft-singular) with decreasing deviation.
bool classify_consistent(const PotentialSpec& spec);

} // namespace sumrules
