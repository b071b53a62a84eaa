#include "qps/oscillator.hpp"

#include <cmath>
#include <numbers>

namespace qps {

bool truncation_faithful(const CoherentAmplitude& z, FockSpace space) {
    const double m = z.mag();
    return m * m + 3.0 * m + 1.0 < double(space.cutoff);
}

void require_faithful(const CoherentAmplitude& z, FockSpace space, const char* where) {
    if (!truncation_faithful(z, space))
        throw std::invalid_argument(std::string(where) +
                                    ": amplitude too large for cutoff (|z|^2 + 3|z| + 1 >= D)");
}

LadderOps ladder_ops(FockSpace space) {
    const int d = space.cutoff;
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n)
        a(n - 1, n) = std::sqrt(double(n));
    Matrix n_op = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n)
        n_op(n, n) = double(n);
    Matrix ad = a.adjoint();
    return {OperatorMatrix(space.space(), std::move(a)),
            OperatorMatrix(space.space(), std::move(ad)),
            OperatorMatrix(space.space(), std::move(n_op))};
}

OperatorMatrix position_op(FockSpace space) {
    const LadderOps l = ladder_ops(space);
    return {space.space(), ((l.a.entries() + l.a_dagger.entries()) / std::sqrt(2.0)).eval()};
}

OperatorMatrix momentum_op(FockSpace space) {
    const LadderOps l = ladder_ops(space);
    return {space.space(),
            (Complex(0, -1) * (l.a.entries() - l.a_dagger.entries()) / std::sqrt(2.0)).eval()};
}

OperatorMatrix fractional_fourier(FockSpace space, double theta) {
    const int d = space.cutoff;
    Matrix f = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n)
        f(n, n) = std::polar(1.0, theta * n);
    return {space.space(), std::move(f)};
}

OperatorMatrix displacement(FockSpace space, const CoherentAmplitude& z) {
    require_faithful(z, space, "displacement");
    const LadderOps l = ladder_ops(space);
    const Matrix gen = z.z * l.a_dagger.entries() - std::conj(z.z) * l.a.entries();
    return {space.space(), expm(gen)};
}

StateVector coherent_state(FockSpace space, const CoherentAmplitude& z) {
    const int d = space.cutoff;
    Vector v = Vector::Zero(d);
    v(0) = std::exp(-0.5 * std::norm(z.z));
    for (int n = 1; n < d; ++n)
        v(n) = v(n - 1) * z.z / std::sqrt(double(n));
    return {space.space(), std::move(v), false};
}

Complex coherent_overlap(const CoherentAmplitude& z1, const CoherentAmplitude& z2) {
    const double dq = z1.q() - z2.q();
    const double dp = z1.p() - z2.p();
    const double phase = 0.5 * (z2.p() * z1.q() - z1.p() * z2.q());
    return std::exp(-0.25 * (dq * dq + dp * dp)) * std::polar(1.0, phase);
}

double coherent_rotation_infidelity(FockSpace space, const CoherentAmplitude& z, double theta) {
    require_faithful(z, space, "coherent_rotation_infidelity");
    const StateVector rotated{space.space(),
                              (fractional_fourier(space, theta).entries() *
                               coherent_state(space, z).amplitudes())
                                  .eval(),
                              false};
    const StateVector target = coherent_state(space, {std::polar(1.0, theta) * z.z});
    const Complex ov = target.amplitudes().dot(rotated.amplitudes());
    return 1.0 - std::norm(ov);
}

Sl2Set sl2_generators(FockSpace space) {
    const LadderOps l = ladder_ops(space);
    const Matrix a2 = l.a.entries() * l.a.entries();
    const Matrix ad2 = l.a_dagger.entries() * l.a_dagger.entries();
    const int d = space.cutoff;
    Matrix h0 = l.n_op.entries() + 0.5 * Matrix::Identity(d, d);
    Matrix g = Complex(0, 0.5) * (ad2 - a2);
    Matrix k = 0.5 * (ad2 + a2);
    return {{Sl2Kind::H0, OperatorMatrix(space.space(), std::move(h0))},
            {Sl2Kind::G, OperatorMatrix(space.space(), std::move(g))},
            {Sl2Kind::K, OperatorMatrix(space.space(), std::move(k))}};
}

double hermite_position_amplitude(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_position_amplitude: n < 0");
    return hermite_position_amplitudes(n + 1, x).back();
}

std::vector<double> hermite_position_amplitudes(int nmax, double x) {
    std::vector<double> psi(nmax);
    psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (nmax > 1) psi[1] = std::sqrt(2.0) * x * psi[0];
    for (int n = 1; n + 1 < nmax; ++n)
        psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(double(n) / (n + 1)) * psi[n - 1];
    return psi;
}

Complex fock_wavefunction(const StateVector& state, double x) {
    const std::vector<double> psi = hermite_position_amplitudes(state.dim(), x);
    Complex acc = 0;
    for (int n = 0; n < state.dim(); ++n)
        acc += psi[n] * state[n];
    return acc;
}

OperatorMatrix scale_operator(FockSpace space, double xi) {
    if (!(xi > 0.0))
        throw std::invalid_argument("scale_operator: xi must be positive");
    const Sl2Set s = sl2_generators(space);
    return {space.space(), unitary_exp(s.g.matrix.entries(), std::log(xi))};
}

OperatorMatrix quadratic_operator(FockSpace space, const QuadraticObservable& f) {
    for (double c : {f.c_qq, f.c_pp, f.c_qp, f.c_q, f.c_p, f.c_0})
        if (!std::isfinite(c))
            throw std::invalid_argument("quadratic_operator: non-finite coefficient");
    const Matrix q = position_op(space).entries();
    const Matrix p = momentum_op(space).entries();
    const int d = space.cutoff;
    Matrix m = f.c_qq * q * q + f.c_pp * p * p + 0.5 * f.c_qp * (q * p + p * q) +
               f.c_q * q + f.c_p * p + f.c_0 * Matrix::Identity(d, d);
    return {space.space(), std::move(m)};
}

double evaluate_quadratic(const QuadraticObservable& f, double q, double p) {
    return f.c_qq * q * q + f.c_pp * p * p + f.c_qp * q * p + f.c_q * q + f.c_p * p + f.c_0;
}

}  // namespace qps
