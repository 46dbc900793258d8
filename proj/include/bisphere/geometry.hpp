#pragma once

#include <cmath>
#include <stdexcept>

namespace bisphere {

// How eta1 was produced from the nondimensional separation xi.
enum class EtaMap { SqrtApprox, ExactArccosh };

// eta1 from xi for equal spheres.  SqrtApprox is the near-contact relation
// eta1 = sqrt(xi) used throughout the tabulated results; ExactArccosh uses
// cosh(eta1) = 1 + xi/2 and is provided for sensitivity studies.
inline double eta_from_xi(double xi, EtaMap policy = EtaMap::SqrtApprox) {
    if (!(xi > 0.0) || !std::isfinite(xi))
        throw std::invalid_argument("eta_from_xi: xi must be positive and finite");
    if (policy == EtaMap::SqrtApprox) return std::sqrt(xi);
    return std::acosh(1.0 + xi / 2.0);
}

// Equal-sphere near-contact geometry (kappa = 1).
struct NearContactGeometry {
    double xi;
    double eta1;
    EtaMap eta_map;

    static NearContactGeometry from_xi(double xi, EtaMap policy = EtaMap::SqrtApprox) {
        return NearContactGeometry{xi, eta_from_xi(xi, policy), policy};
    }
};

// Nondimensional drive: charge ratio alpha = q1/q2, field-strength ratio
// beta = E0*eps*r2^2/q2, field angle theta (radians, [0, pi]).
struct FieldConfig {
    double alpha = 1.0;
    double beta = 1.0;
    double theta = 0.0;

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(beta))
            throw std::invalid_argument("FieldConfig: alpha and beta must be finite");
        // [-pi, pi] so the odd/even trig structure of the force components
        // can be exercised directly; the physical range is [0, pi].
        if (!(theta >= -M_PI && theta <= M_PI))
            throw std::invalid_argument("FieldConfig: theta must lie in [-pi, pi]");
    }
};

}  // namespace bisphere
