#ifndef QPS_GEOMETRY_HPP
#define QPS_GEOMETRY_HPP

#include "qps/types.hpp"

namespace qps {

// A point of the ray space, stored through a normalized representative.
// Every exported quantity is invariant under rephasing the representative.
struct RayPoint {
    StateVector representative;

    explicit RayPoint(StateVector s) : representative(std::move(s)) {
        if (!representative.is_normalized())
            throw std::invalid_argument("RayPoint: representative must be normalized");
    }
};

struct GeodesicTriangle {
    RayPoint a0, a1, b;
};

// ds^2 = <dpsi|dpsi> - <dpsi|psi><psi|dpsi>
double fubini_study_step(const StateVector& psi, const Vector& dpsi);

// arg <a0|a1> in (-pi, pi]; throws when the overlap modulus is below 1e-12.
double pancharatnam_phase(const RayPoint& a0, const RayPoint& a1);

// arg(<a1|b><b|a0><a0|a1>) in (-pi, pi]; rephasing-invariant.
double bargmann_invariant(const GeodesicTriangle& tri);

// Bloch vector of a qubit state.
Eigen::Vector3d bloch_vector(const StateVector& psi);

// Oriented solid angle of the Bloch triangle (a0, a1, b); qubit only.
// Result in (-2*pi, 2*pi]; degenerate triangles give 0.
double solid_angle(const GeodesicTriangle& tri);

// Chart coordinate xi^i = z^i / z^0; fails on z^0 = 0.
Complex projective_coordinate(const StateVector& psi, int i);

struct ReferenceProbability {
    double formula;  // 1/2 + (1/2) |<a0|a1>| sin(theta) cos(phi - eta)
    double trace;    // tr(rho_M |pi/2,0><pi/2,0|) from the entangled state
    double eta;      // -arg <a0|a1>
};

// Probability of finding the qubit pointer in the reference state |pi/2,0>
// after the pre-measurement correlates (a0, a1) with the pointer momentum
// basis; pointer prepared in |theta,phi>.
ReferenceProbability reference_probability(const RayPoint& a0, const RayPoint& a1,
                                           double theta, double phi);

// The closed formula alone, for scanning phi at a prescribed eta.
double reference_probability_formula(double overlap_mod, double theta, double phi, double eta);

struct SpeedCheck {
    double lhs;  // finite-difference projective speed
    double rhs;  // energy uncertainty of psi0
};

SpeedCheck speed_equals_uncertainty(const OperatorMatrix& h, const StateVector& psi0,
                                    double dt = 1e-5);

}  // namespace qps

#endif
