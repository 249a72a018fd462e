#pragma once

#include <cmath>
#include <optional>

#include "gphase/correlators.hpp"
#include "gphase/errors.hpp"
#include "gphase/model.hpp"
#include "gphase/numerics/bisection.hpp"

namespace gphase {

// Kossakowski dissipator coefficients, A = (mu^2/4)[G(+w0)+G(-w0)] and
// B = (mu^2/4)[G(+w0)-G(-w0)], in units of omega0. gamma0 and the boundary
// distance are kept alongside so phase routines can build the matched
// inertial baseline without re-deriving the context.
struct KossakowskiPair {
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    double gamma0 = 0.0;              // gamma0/omega0 used to assemble the pair
    std::optional<double> boundary{}; // z*omega0 context, if any

    double r() const { return b_coeff / a_coeff; }
    double q(double theta) const { return r() + std::cos(theta); }
};

inline KossakowskiPair kossakowski(const AtomConfig& atom, const Scenario& sc) {
    atom.validate();
    sc.validate();
    const ResponsePair g = response_pair(sc);
    const double pref = kPi * atom.gamma0_hat() / 2.0; // mu^2/4 = pi gamma0 / (2 omega0)
    KossakowskiPair k{pref * (g.g_plus + g.g_minus), pref * (g.g_plus - g.g_minus),
                      atom.gamma0_hat(), sc.boundary};
    if (!(k.a_coeff > 0.0))
        throw suppression_error("kossakowski: A <= 0 (atom decoupled at a boundary-factor zero)");
    return k;
}

// Relative spontaneous-transition rate Gamma = G(-w0)/G(+w0): the
// excitation-to-emission ratio, zero for an inertial atom in free space.
inline double relative_rate(const Scenario& sc) {
    const ResponsePair g = response_pair(sc);
    if (!(g.g_plus > 0.0))
        throw suppression_error("relative_rate: G(+omega0) must be positive");
    return g.g_minus / g.g_plus;
}

// Acceleration at which the linear and circular free-space transition rates
// coincide. Pre-scans [0.5, 20] in steps of 0.01 to confirm a single sign
// change, then bisects it down to machine width.
inline double rate_crossing() {
    auto diff = [](double a) {
        return relative_rate(Scenario::linear(a)) - relative_rate(Scenario::circular(a));
    };
    const auto brackets = numerics::sign_change_brackets(diff, 0.5, 20.0, 1950);
    if (brackets.size() != 1)
        throw bracket_error("rate_crossing: expected exactly one sign change on [0.5, 20]");
    const double a = numerics::bisect(diff, brackets[0].first, brackets[0].second, 1e-15, 300);
    if (std::abs(diff(a)) > 1e-10)
        throw convergence_error("rate_crossing: residual above 1e-10");
    return a;
}

} // namespace gphase
