#ifndef QPS_OSCILLATOR_HPP
#define QPS_OSCILLATOR_HPP

#include <vector>

#include "qps/types.hpp"

namespace qps {

struct FockSpace {
    int cutoff;  // basis |0> ... |cutoff-1>

    // cutoffs below 8 cannot honour any of the stated truncation tolerances
    explicit FockSpace(int d) : cutoff(d) {
        if (d < 8 || d > kMaxDim)
            throw std::invalid_argument("FockSpace: cutoff out of range [8, 4096]");
    }
    FiniteSpace space() const { return FiniteSpace(cutoff); }
};

struct CoherentAmplitude {
    Complex z;

    static CoherentAmplitude from_qp(double q, double p) {
        return {Complex(q, p) / std::sqrt(2.0)};
    }
    double q() const { return std::sqrt(2.0) * z.real(); }
    double p() const { return std::sqrt(2.0) * z.imag(); }
    double mag() const { return std::abs(z); }
};

// Poisson-tail heuristic: |z|^2 + 3|z| + 1 < cutoff
bool truncation_faithful(const CoherentAmplitude& z, FockSpace space);
void require_faithful(const CoherentAmplitude& z, FockSpace space, const char* where);

struct LadderOps {
    OperatorMatrix a;
    OperatorMatrix a_dagger;
    OperatorMatrix n_op;
};

LadderOps ladder_ops(FockSpace space);

OperatorMatrix position_op(FockSpace space);  // (a + a')/sqrt(2)
OperatorMatrix momentum_op(FockSpace space);  // -i (a - a')/sqrt(2)

// e^{i theta N}, diagonal; theta = pi/2 is the Fourier operator on Fock space.
OperatorMatrix fractional_fourier(FockSpace space, double theta);

// exp(z a' - conj(z) a); throws when the amplitude violates the faithful
// truncation bound.
OperatorMatrix displacement(FockSpace space, const CoherentAmplitude& z);

// Truncated coherent vector with the analytic amplitudes
// e^{-|z|^2/2} z^n / sqrt(n!).
StateVector coherent_state(FockSpace space, const CoherentAmplitude& z);

// Closed form e^{-[(p-p')^2+(q-q')^2]/4} e^{i(p'q - p q')/2}; no truncation.
Complex coherent_overlap(const CoherentAmplitude& z1, const CoherentAmplitude& z2);

// 1 - |<e^{i theta} z | F_theta z>|^2 computed against the analytic target.
double coherent_rotation_infidelity(FockSpace space, const CoherentAmplitude& z, double theta);

enum class Sl2Kind { H0, G, K };

struct Sl2Generator {
    Sl2Kind kind;
    OperatorMatrix matrix;
};

struct Sl2Set {
    Sl2Generator h0;  // N + I/2, rotations
    Sl2Generator g;   // (i/2)(a'^2 - a^2), scale/squeeze
    Sl2Generator k;   // (a'^2 + a^2)/2, hyperbolic rotations
};

Sl2Set sl2_generators(FockSpace space);

// <q(x)|n> by the stable three-term recurrence.
double hermite_position_amplitude(int n, double x);
// All of psi_0(x) .. psi_{nmax-1}(x) in one sweep.
std::vector<double> hermite_position_amplitudes(int nmax, double x);

// Position-basis wavefunction sum_n psi_n(x) <x|n> of a Fock-space state.
Complex fock_wavefunction(const StateVector& state, double x);

// S_xi = exp(i g ln xi); squeezes the position quadrature by 1/xi.
OperatorMatrix scale_operator(FockSpace space, double xi);

// Weyl-ordered quadratic c_qq q^2 + c_pp p^2 + c_qp (qp+pq)/2 + c_q q + c_p p + c_0.
struct QuadraticObservable {
    double c_qq = 0, c_pp = 0, c_qp = 0, c_q = 0, c_p = 0, c_0 = 0;
};

OperatorMatrix quadratic_operator(FockSpace space, const QuadraticObservable& f);
double evaluate_quadratic(const QuadraticObservable& f, double q, double p);

}  // namespace qps

#endif
