#ifndef QPS_KINEMATICS_HPP
#define QPS_KINEMATICS_HPP

#include "qps/types.hpp"

namespace qps {

// Cyclic shift V with V|u_k> = |u_{k-1}> (indices mod N); unitary, V^N = I.
OperatorMatrix position_translation_op(FiniteSpace space);

// Clock operator U = diag(e^{2*pi*i*k/N}); unitary, U^N = I, U|v_k> = |v_{k+1}>.
OperatorMatrix momentum_phase_op(FiniteSpace space);

// Discrete Fourier operator, entries <u_j|F|u_k> = e^{+2*pi*i*jk/N}/sqrt(N).
// Satisfies F' V F = U, F' U F = V', F^4 = I; F^2 is the index inversion.
OperatorMatrix finite_fourier(FiniteSpace space);

// e^{2*pi*i*jk/N}, the phase in V^j U^k = e^{2*pi*i*jk/N} U^k V^j.
Complex weyl_phase(FiniteSpace space, long j, long k);

// Max-norm of V^j U^k - weyl_phase * U^k V^j; < 1e-12 for all j, k.
double weyl_relation_residual(FiniteSpace space, long j, long k);

OperatorMatrix matrix_power(const OperatorMatrix& a, long n);

struct OpAlgebra {
    OperatorMatrix commutator;
    OperatorMatrix anticommutator;
    Complex hilbert_schmidt;  // tr(A' B)
};

OpAlgebra op_algebra(const OperatorMatrix& a, const OperatorMatrix& b);

struct Moments {
    Complex mean;
    double delta;  // sqrt(<A^2> - <A>^2), valid for Hermitian A
};

// Requires normalized psi; flags non-Hermitian A through a negative or
// complex variance.
Moments expectation_and_uncertainty(const OperatorMatrix& a, const StateVector& psi);

}  // namespace qps

#endif
