#ifndef QPS_MEASUREMENT_HPP
#define QPS_MEASUREMENT_HPP

#include <vector>

#include "qps/oscillator.hpp"
#include "qps/types.hpp"

namespace qps {

struct PrePostPair {
    StateVector alpha;        // pre-selected
    StateVector beta;         // post-selected
    OperatorMatrix observable;

    PrePostPair(StateVector pre, StateVector post, OperatorMatrix obs);
};

// <beta|O|alpha> / <beta|alpha>; throws OrthogonalPostSelection when the
// overlap modulus is at or below the floor (the weak value diverges there).
Complex weak_value(const PrePostPair& pair, double overlap_floor = 1e-10);

struct PointerModel {
    StateVector initial;
    OperatorMatrix coupling_generator;  // Hermitian R
    double strength;                    // epsilon (weak) or lambda (strong)

    PointerModel(StateVector init, OperatorMatrix generator, double s);
};

// exp(-i strength O (x) R) applied to system (x) pointer.initial.
// Joint index layout: s * dim_pointer + m.
StateVector von_neumann_couple(const StateVector& system, const OperatorMatrix& observable,
                               const PointerModel& pointer);

struct PostSelection {
    StateVector pointer;  // unnormalized
    double success_probability;
};

// Contracts the system index of the joint state with <beta|.
PostSelection post_select(const StateVector& joint, const StateVector& beta);

// Max-norm distance between the post-selected pointer and the first-order
// form <beta|alpha> (I - i eps O_w R) |phi_I>; O(eps^2) in the weak regime.
double post_select_first_order_residual(const PrePostPair& pair, const PointerModel& pointer);

struct ShiftReport {
    Complex predicted;
    Complex simulated;
    double epsilon;
    double order_residual;  // |predicted - simulated|
    bool weak_regime;       // strength <= 0.1, where the O(eps^2) claim applies
};

// First-order pointer shift of <M>:
//   eps [ Im(O_w)(<{M,R}> - 2<R><M>) - i Re(O_w) <[M,R]> ]
// evaluated on pointer.initial; valid for any M, Hermitian or not.
Complex jozsa_prediction(const OperatorMatrix& m, const PointerModel& pointer, Complex weak_val);

// Predicted vs simulated shift through the couple -> post-select pipeline.
ShiftReport jozsa_shift(const OperatorMatrix& m, const PointerModel& pointer,
                        const PrePostPair& system);
// Same, with the weak value realized on a qubit through sigma_1.
ShiftReport jozsa_shift(const OperatorMatrix& m, const PointerModel& pointer, Complex weak_val);

// Qubit realization: alpha = |u0>, beta on the Bloch sphere, O = sigma_1;
// gives O_w exactly but second weak moment (O^2)_w = 1.
PrePostPair realize_weak_value(Complex weak_val);

// Three-level realization matching both O_w and (O^2)_w = O_w^2, so the
// post-selected evolution agrees with exp(-i eps O_w R) through second
// order; keeps the shift residual at the few-eps^2 level.
PrePostPair realize_weak_value_matched(Complex weak_val);

struct CoherentShiftReport {
    ShiftReport a_shift;  // complex <a> shift; predicted -i eps O_w z
    ShiftReport q_shift;  // predicted eps sqrt(2) [Im(O_w) Re z + Re(O_w) Im z]
    ShiftReport p_shift;  // predicted eps sqrt(2) [Im(O_w) Im z - Re(O_w) Re z]
};

// Coherent pointer |z> coupled through the number operator; at
// arg z = pi/2 the q/p predictions reduce to the symmetric pair
// eps sqrt(2) |z| Re(O_w) and eps sqrt(2) |z| Im(O_w).
CoherentShiftReport coherent_pointer_shift(const CoherentAmplitude& z, Complex weak_val,
                                           double epsilon, FockSpace space,
                                           bool matched_realization = true);

struct EnsembleShift {
    double traced;     // tr(rho_M Q) of the partial-traced mixed pointer
    double predicted;  // <Q>_phi + lambda <O>_alpha
};

// Strong von Neumann pre-measurement with generator P on a Fock pointer;
// no weakness assumption.
EnsembleShift ensemble_position_shift(const StateVector& system, const OperatorMatrix& observable,
                                      const StateVector& pointer_initial, double lambda);

struct DsoCuoParts {
    OperatorMatrix deterministic;  // Pi C Pi + Pi_perp C Pi_perp
    OperatorMatrix uncertain;      // Pi_perp C Pi + Pi C Pi_perp
};

DsoCuoParts dso_cuo_decompose(const OperatorMatrix& c, const StateVector& psi);

struct FluctuationReport {
    double mean;
    double delta;
    double residual;  // |A psi - <A> psi - delta A psi_perp|
};

FluctuationReport fluctuation_theorem_check(const OperatorMatrix& a, const StateVector& psi);

struct OperatorSpaceDims {
    int dso;  // (n-1)^2 + 1
    int cuo;  // 2(n-1)
};

// Real dimensions of the deterministic / completely-uncertain operator
// subspaces for psi, by rank computation over a Hermitian operator basis.
OperatorSpaceDims measure_operator_space_dims(const StateVector& psi, double rank_tol = 1e-8);

// d/dt(delta^2 Q) on a Fock pointer state via the Ehrenfest commutator for
// H = P^2/(2 mass) + V(Q), V given by polynomial coefficients in Q
// (c[0] + c[1] q + c[2] q^2 + ...). Diagnostic for the position-shift term
// that vanishes on a stationary symmetric Gaussian.
double position_variance_rate(const StateVector& pointer, double mass,
                              const std::vector<double>& potential_coeffs);

}  // namespace qps

#endif
