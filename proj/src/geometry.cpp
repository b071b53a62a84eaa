#include "qps/geometry.hpp"

#include <cmath>
#include <numbers>

#include "qps/kinematics.hpp"

namespace qps {

namespace {

void require_qubit(const StateVector& s, const char* where) {
    if (s.dim() != 2)
        throw std::invalid_argument(std::string(where) + ": requires a two-level space");
}

}  // namespace

double fubini_study_step(const StateVector& psi, const Vector& dpsi) {
    if (!psi.is_normalized())
        throw std::invalid_argument("fubini_study_step: psi must be normalized");
    if (dpsi.size() != psi.dim())
        throw DimensionMismatch("fubini_study_step: dpsi length mismatch");
    const Complex overlap = dpsi.dot(psi.amplitudes());  // <dpsi|psi>
    const double ds2 = dpsi.squaredNorm() - std::norm(overlap);
    if (ds2 < -1e-14)
        throw std::runtime_error("fubini_study_step: negative ds^2 beyond tolerance");
    return std::max(0.0, ds2);
}

double pancharatnam_phase(const RayPoint& a0, const RayPoint& a1) {
    const Complex ov = inner(a0.representative, a1.representative);
    if (std::abs(ov) <= 1e-12)
        throw std::invalid_argument("pancharatnam_phase: orthogonal pair, phase undefined");
    return std::arg(ov);
}

double bargmann_invariant(const GeodesicTriangle& tri) {
    const Complex p = inner(tri.a1.representative, tri.b.representative) *
                      inner(tri.b.representative, tri.a0.representative) *
                      inner(tri.a0.representative, tri.a1.representative);
    if (std::abs(p) <= 1e-24)
        throw std::invalid_argument("bargmann_invariant: degenerate triangle");
    return std::arg(p);
}

Eigen::Vector3d bloch_vector(const StateVector& psi) {
    require_qubit(psi, "bloch_vector");
    const Complex a = psi[0], b = psi[1];
    return {2.0 * (std::conj(a) * b).real(), 2.0 * (std::conj(a) * b).imag(),
            std::norm(a) - std::norm(b)};
}

double solid_angle(const GeodesicTriangle& tri) {
    const Eigen::Vector3d n0 = bloch_vector(tri.a0.representative);
    const Eigen::Vector3d n1 = bloch_vector(tri.a1.representative);
    const Eigen::Vector3d n2 = bloch_vector(tri.b.representative);
    // Van Oosterom-Strackee signed solid angle, oriented by the traversal
    // a1 -> a0 -> b so that bargmann_invariant(tri) = -solid_angle(tri)/2.
    const double num = n1.dot(n0.cross(n2));
    const double den = 1.0 + n0.dot(n1) + n1.dot(n2) + n2.dot(n0);
    return 2.0 * std::atan2(num, den);
}

Complex projective_coordinate(const StateVector& psi, int i) {
    if (i < 1 || i >= psi.dim())
        throw std::invalid_argument("projective_coordinate: index must be in [1, dim)");
    if (std::abs(psi[0]) < 1e-14)
        throw std::invalid_argument("projective_coordinate: chart undefined, z^0 = 0");
    return psi[i] / psi[0];
}

double reference_probability_formula(double overlap_mod, double theta, double phi, double eta) {
    return 0.5 + 0.5 * overlap_mod * std::sin(theta) * std::cos(phi - eta);
}

ReferenceProbability reference_probability(const RayPoint& a0, const RayPoint& a1,
                                           double theta, double phi) {
    const Complex ov = inner(a0.representative, a1.representative);  // <a0|a1> = c e^{-i eta}
    const double c = std::abs(ov);
    const double eta = c > 0 ? -std::arg(ov) : 0.0;

    // pointer qubit rho from |Psi> = sum_s |A_s> (x) |v_s> phi^s
    const Complex amp[2] = {std::cos(0.5 * theta),
                            std::polar(std::sin(0.5 * theta), phi)};
    const StateVector* states[2] = {&a0.representative, &a1.representative};
    Eigen::Matrix2cd rho;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            rho(s, t) = amp[s] * std::conj(amp[t]) * inner(*states[t], *states[s]);
    const Eigen::Vector2cd ref(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const double trace = (ref.dot(rho * ref)).real();

    return {reference_probability_formula(c, theta, phi, eta), trace, eta};
}

SpeedCheck speed_equals_uncertainty(const OperatorMatrix& h, const StateVector& psi0, double dt) {
    if (!psi0.is_normalized())
        throw std::invalid_argument("speed_equals_uncertainty: psi0 must be normalized");
    require_same_space(h.space(), psi0.space(), "speed_equals_uncertainty");
    const Vector psi_t = unitary_exp(h.entries(), -dt) * psi0.amplitudes();
    const Vector dpsi = psi_t - psi0.amplitudes();
    const double lhs = std::sqrt(fubini_study_step(psi0, dpsi)) / dt;
    const double rhs = expectation_and_uncertainty(h, psi0).delta;
    return {lhs, rhs};
}

}  // namespace qps
