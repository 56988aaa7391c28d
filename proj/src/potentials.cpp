#include "sumrules/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <vector>

namespace sumrules {

namespace {

struct CatalogEntry {
    PotentialClass cls;
    std::map<std::string, double> defaults;
    bool numeric_only;
};

const std::map<PotentialId, CatalogEntry>& catalog() {
    static const std::map<PotentialId, CatalogEntry> table = {
        {PotentialId::coulomb, {PotentialClass::regular, {{"e2", 1.0}}, false}},
        {PotentialId::oscillator, {PotentialClass::regular, {{"v0", 0.5}}, false}},
        {PotentialId::linear, {PotentialClass::regular, {{"v0", 1.0}}, false}},
        {PotentialId::power_law, {PotentialClass::regular, {{"v0", 1.0}, {"k", 1.5}}, true}},
        {PotentialId::quarkonium,
         {PotentialClass::regular, {{"alpha", 0.5}, {"v0", 1.0}}, true}},
        {PotentialId::exponential, {PotentialClass::regular, {{"v0", 4.0}, {"a", 1.0}}, false}},
        {PotentialId::hulthen, {PotentialClass::regular, {{"v0", 2.0}, {"a", 1.0}}, false}},
        {PotentialId::morse,
         {PotentialClass::regular, {{"d", 5.0}, {"alpha", 1.0}, {"r0", 1.5}}, false}},
        {PotentialId::woods_saxon,
         {PotentialClass::regular, {{"v0", 5.0}, {"R", 6.0}, {"a", 0.6}}, false}},
        {PotentialId::inv_square_plus_power,
         {PotentialClass::soft_singular, {{"v0", 1.0}, {"g", 1.0}, {"beta", 1.0}}, true}},
        {PotentialId::valence_electron,
         {PotentialClass::soft_singular, {{"v0", 1.0}, {"alpha", 1.0}}, false}},
        {PotentialId::singular_oscillator,
         {PotentialClass::soft_singular, {{"v0", 1.0}, {"g", 0.5}}, false}},
    };
    return table;
}

const std::vector<std::pair<PotentialId, const char*>>& names() {
    static const std::vector<std::pair<PotentialId, const char*>> v = {
        {PotentialId::coulomb, "coulomb"},
        {PotentialId::oscillator, "oscillator"},
        {PotentialId::linear, "linear"},
        {PotentialId::power_law, "power_law"},
        {PotentialId::quarkonium, "quarkonium"},
        {PotentialId::exponential, "exponential"},
        {PotentialId::hulthen, "hulthen"},
        {PotentialId::morse, "morse"},
        {PotentialId::woods_saxon, "woods_saxon"},
        {PotentialId::inv_square_plus_power, "inv_square_plus_power"},
        {PotentialId::valence_electron, "valence_electron"},
        {PotentialId::singular_oscillator, "singular_oscillator"},
    };
    return v;
}

void validate(const PotentialSpec& spec) {
    auto positive = [&](const char* key) {
        if (spec.param(key) <= 0.0)
            throw ConfigError(std::string("potential parameter '") + key +
                              "' must be positive for " + to_string(spec.id));
    };
    switch (spec.id) {
    case PotentialId::coulomb: positive("e2"); break;
    case PotentialId::oscillator: positive("v0"); break;
    case PotentialId::linear: positive("v0"); break;
    case PotentialId::power_law:
        positive("v0");
        if (spec.param("k") <= -2.0)
            throw ConfigError("power_law exponent must satisfy k > -2");
        break;
    case PotentialId::quarkonium: positive("alpha"); positive("v0"); break;
    case PotentialId::exponential: positive("v0"); positive("a"); break;
    case PotentialId::hulthen: positive("v0"); positive("a"); break;
    case PotentialId::morse: positive("d"); positive("alpha"); positive("r0"); break;
    case PotentialId::woods_saxon:
        positive("v0"); positive("R"); positive("a");
        if (spec.param("a") > spec.param("R") / 3.0)
            throw ConfigError("woods_saxon requires a << R (at most R/3)");
        break;
    case PotentialId::inv_square_plus_power:
        positive("v0");
        if (spec.param("beta") <= -2.0)
            throw ConfigError("inv_square_plus_power exponent must satisfy beta > -2");
        if (spec.param("g") == 0.0)
            throw ConfigError("inv_square_plus_power requires g != 0");
        break;
    case PotentialId::valence_electron: positive("v0"); positive("alpha"); break;
    case PotentialId::singular_oscillator: positive("v0"); positive("g"); break;
    }
}

} // namespace

double PotentialSpec::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw ConfigError("missing parameter '" + key + "' for " + to_string(id));
    return it->second;
}

std::string to_string(PotentialId id) {
    for (const auto& [pid, name] : names())
        if (pid == id) return name;
    return "?";
}

PotentialId potential_id_from_string(const std::string& name) {
    for (const auto& [pid, n] : names())
        if (name == n) return pid;
    throw ConfigError("unknown potential id '" + name + "'");
}

PotentialSpec make_potential(PotentialId id,
                             const std::map<std::string, double>& overrides,
                             Units units) {
    const CatalogEntry& entry = catalog().at(id);
    PotentialSpec spec;
    spec.id = id;
    spec.cls = entry.cls;
    spec.params = entry.defaults;
    spec.numeric_only = entry.numeric_only;
    spec.units = units;
    if (id == PotentialId::coulomb) spec.params["e2"] = units.e * units.e;
    for (const auto& [key, val] : overrides) {
        if (spec.params.find(key) == spec.params.end())
            throw ConfigError("unknown parameter '" + key + "' for potential " +
                              to_string(id));
        spec.params[key] = val;
    }
    if (entry.cls == PotentialClass::soft_singular)
        spec.v0_inverse_square = spec.param("v0");
    validate(spec);
    return spec;
}

PotentialSpec make_potential(const std::string& name,
                             const std::map<std::string, double>& overrides,
                             Units units) {
    return make_potential(potential_id_from_string(name), overrides, units);
}

PotentialSpec parse_potential_config(std::istream& in) {
    std::string line, name;
    std::map<std::string, double> overrides;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trimmed.substr(0, eq);
        const std::string val = trimmed.substr(eq + 1);
        if (key == "potential") {
            name = val;
            continue;
        }
        try {
            size_t used = 0;
            overrides[key] = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": bad numeric value '" + val + "'");
        }
    }
    if (name.empty()) throw ConfigError("config: missing 'potential = <id>' line");
    try {
        return make_potential(name, overrides);
    } catch (const ConfigError& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double v_tail(const PotentialSpec& spec, double r) {
    if (r <= 0.0) throw std::domain_error("potential evaluated at r <= 0");
    switch (spec.id) {
    case PotentialId::coulomb: return -spec.param("e2") / r;
    case PotentialId::oscillator: return spec.param("v0") * r * r;
    case PotentialId::linear: return spec.param("v0") * r;
    case PotentialId::power_law: return spec.param("v0") * std::pow(r, spec.param("k"));
    case PotentialId::quarkonium:
        return -spec.param("alpha") / r + spec.param("v0") * r;
    case PotentialId::exponential:
        return -spec.param("v0") * std::exp(-r / spec.param("a"));
    case PotentialId::hulthen:
        return -spec.param("v0") / std::expm1(r / spec.param("a"));
    case PotentialId::morse: {
        const double x = (r - spec.param("r0")) / spec.param("r0");
        const double alpha = spec.param("alpha");
        const double e1 = std::exp(-alpha * x);
        return spec.param("d") * (e1 * e1 - 2.0 * e1);
    }
    case PotentialId::woods_saxon: {
        const double t = (r - spec.param("R")) / spec.param("a");
        return -spec.param("v0") / (1.0 + std::exp(t));
    }
    case PotentialId::inv_square_plus_power:
        return spec.param("g") * std::pow(r, spec.param("beta"));
    case PotentialId::valence_electron: return -spec.param("alpha") / r;
    case PotentialId::singular_oscillator: return spec.param("g") * r * r;
    }
    throw std::logic_error("unreachable");
}

double v_prime_tail(const PotentialSpec& spec, double r) {
    if (r <= 0.0) throw std::domain_error("potential evaluated at r <= 0");
    switch (spec.id) {
    case PotentialId::coulomb: return spec.param("e2") / (r * r);
    case PotentialId::oscillator: return 2.0 * spec.param("v0") * r;
    case PotentialId::linear: return spec.param("v0");
    case PotentialId::power_law: {
        const double k = spec.param("k");
        return spec.param("v0") * k * std::pow(r, k - 1.0);
    }
    case PotentialId::quarkonium:
        return spec.param("alpha") / (r * r) + spec.param("v0");
    case PotentialId::exponential: {
        const double a = spec.param("a");
        return (spec.param("v0") / a) * std::exp(-r / a);
    }
    case PotentialId::hulthen: {
        const double a = spec.param("a");
        const double em = std::expm1(r / a);
        return spec.param("v0") * (1.0 + em) / (a * em * em);
    }
    case PotentialId::morse: {
        const double r0 = spec.param("r0");
        const double alpha = spec.param("alpha");
        const double x = (r - r0) / r0;
        const double e1 = std::exp(-alpha * x);
        return spec.param("d") * (-2.0 * alpha / r0) * (e1 * e1 - e1);
    }
    case PotentialId::woods_saxon: {
        const double a = spec.param("a");
        const double t = (r - spec.param("R")) / a;
        const double y = 1.0 / (1.0 + std::exp(t));
        return (spec.param("v0") / a) * y * (1.0 - y);
    }
    case PotentialId::inv_square_plus_power: {
        const double beta = spec.param("beta");
        return spec.param("g") * beta * std::pow(r, beta - 1.0);
    }
    case PotentialId::valence_electron: return spec.param("alpha") / (r * r);
    case PotentialId::singular_oscillator: return 2.0 * spec.param("g") * r;
    }
    throw std::logic_error("unreachable");
}

double v(const PotentialSpec& spec, double r) {
    double out = v_tail(spec, r);
    if (spec.v0_inverse_square != 0.0) out -= spec.v0_inverse_square / (r * r);
    return out;
}

double v_prime(const PotentialSpec& spec, double r) {
    double out = v_prime_tail(spec, r);
    if (spec.v0_inverse_square != 0.0)
        out += 2.0 * spec.v0_inverse_square / (r * r * r);
    return out;
}

double origin_exponent(const PotentialSpec& spec, int l) {
    if (l < 0) throw std::domain_error("origin_exponent: l must be >= 0");
    if (spec.cls == PotentialClass::regular) return l + 0.5;
    const Units& u = spec.units;
    const double half = l + 0.5;
    const double rad = half * half - 2.0 * u.m * spec.v0_inverse_square / (u.hbar * u.hbar);
    if (rad < 0.0)
        throw HardSingularError("origin_exponent: (l+1/2)^2 < 2 m V0 / hbar^2 at l = " +
                                std::to_string(l) + " (falling to the center)");
    return std::sqrt(rad);
}

OriginExpansion origin_expansion(const PotentialSpec& spec) {
    OriginExpansion out;
    switch (spec.id) {
    case PotentialId::coulomb:
        out = {spec.param("e2"), -1.0, -2.0, 0.0, 0.0}; break;
    case PotentialId::oscillator:
        out = {0.0, 2.0, 1.0, 0.0, 0.0}; break;
    case PotentialId::linear:
        out = {0.0, 1.0, 0.0, 0.0, spec.param("v0")}; break;
    case PotentialId::power_law: {
        const double k = spec.param("k");
        out = {k == -1.0 ? -spec.param("v0") : 0.0, k, k - 1.0, 0.0,
               k == 1.0 ? spec.param("v0") : 0.0};
        break;
    }
    case PotentialId::quarkonium:
        out = {spec.param("alpha"), -1.0, -2.0, 0.0, spec.param("v0")}; break;
    case PotentialId::exponential:
        out = {0.0, 0.0, 0.0, -spec.param("v0"),
               spec.param("v0") / spec.param("a")};
        break;
    case PotentialId::hulthen:
        // -V0/(e^{r/a}-1) = -V0 a/r + V0/2 - V0 r/(12 a) + ...
        out = {spec.param("v0") * spec.param("a"), -1.0, -2.0,
               0.5 * spec.param("v0"),
               -spec.param("v0") / (12.0 * spec.param("a"))};
        break;
    case PotentialId::morse: {
        const double alpha = spec.param("alpha");
        const double e1 = std::exp(alpha); // x(0) = -1
        out = {0.0, 0.0, 0.0, spec.param("d") * (e1 * e1 - 2.0 * e1),
               spec.param("d") * (-2.0 * alpha / spec.param("r0")) *
                   (e1 * e1 - e1)};
        break;
    }
    case PotentialId::woods_saxon: {
        const double y0 = 1.0 / (1.0 + std::exp(-spec.param("R") / spec.param("a")));
        out = {0.0, 0.0, 0.0, -spec.param("v0") * y0,
               (spec.param("v0") / spec.param("a")) * y0 * (1.0 - y0)};
        break;
    }
    case PotentialId::inv_square_plus_power: {
        const double beta = spec.param("beta");
        out = {beta == -1.0 ? -spec.param("g") : 0.0, beta, beta - 1.0, 0.0,
               beta == 1.0 ? spec.param("g") : 0.0};
        break;
    }
    case PotentialId::valence_electron:
        out = {spec.param("alpha"), -1.0, -2.0, 0.0, 0.0}; break;
    case PotentialId::singular_oscillator:
        out = {0.0, 2.0, 1.0, 0.0, 0.0}; break;
    }
    return out;
}

double length_scale(const PotentialSpec& spec) {
    const Units& u = spec.units;
    const double h2m = u.hbar * u.hbar / u.m;
    switch (spec.id) {
    case PotentialId::coulomb: return h2m / spec.param("e2");
    case PotentialId::oscillator:
        return std::sqrt(u.hbar / std::sqrt(2.0 * spec.param("v0") * u.m));
    case PotentialId::linear:
        return std::cbrt(0.5 * h2m / spec.param("v0"));
    case PotentialId::power_law:
        return std::pow(0.5 * h2m / spec.param("v0"), 1.0 / (spec.param("k") + 2.0));
    case PotentialId::quarkonium:
        return std::min(h2m / spec.param("alpha"),
                        std::cbrt(0.5 * h2m / spec.param("v0")));
    case PotentialId::exponential: return spec.param("a");
    case PotentialId::hulthen: return spec.param("a");
    case PotentialId::morse: return spec.param("r0") / spec.param("alpha");
    case PotentialId::woods_saxon: return spec.param("a");
    case PotentialId::inv_square_plus_power:
        return std::pow(0.5 * h2m / std::abs(spec.param("g")),
                        1.0 / (spec.param("beta") + 2.0));
    case PotentialId::valence_electron: return h2m / spec.param("alpha");
    case PotentialId::singular_oscillator:
        return std::sqrt(u.hbar / std::sqrt(2.0 * spec.param("g") * u.m));
    }
    throw std::logic_error("unreachable");
}

bool classify_consistent(const PotentialSpec& spec) {
    const double scale = length_scale(spec);
    double prev = std::numeric_limits<double>::max();
    for (double r : {1e-3, 1e-4, 1e-5}) {
        const double rr = r * scale;
        const double limit_dev = (spec.cls == PotentialClass::regular)
            ? std::abs(rr * rr * v(spec, rr))
            : std::abs(rr * rr * v(spec, rr) + spec.v0_inverse_square);
        if (limit_dev > prev + 1e-15) return false;
        prev = limit_dev;
    }
    return true;
}

} // namespace sumrules
