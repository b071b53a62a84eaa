#include "qps/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace qps {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

long mod_n(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}
}  // namespace

OperatorMatrix position_translation_op(FiniteSpace space) {
    const int n = space.dim;
    Matrix v = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        v((k - 1 + n) % n, k) = 1.0;
    return {space, std::move(v)};
}

OperatorMatrix momentum_phase_op(FiniteSpace space) {
    const int n = space.dim;
    Matrix u = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k)
        u(k, k) = std::polar(1.0, kTwoPi * k / n);
    return {space, std::move(u)};
}

OperatorMatrix finite_fourier(FiniteSpace space) {
    const int n = space.dim;
    const double scale = 1.0 / std::sqrt(double(n));
    Matrix f(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            f(j, k) = scale * std::polar(1.0, kTwoPi * ((long(j) * k) % n) / n);
    return {space, std::move(f)};
}

Complex weyl_phase(FiniteSpace space, long j, long k) {
    const long n = space.dim;
    return std::polar(1.0, kTwoPi * double(mod_n(j * k, n)) / double(n));
}

double weyl_relation_residual(FiniteSpace space, long j, long k) {
    const OperatorMatrix v = matrix_power(position_translation_op(space), j);
    const OperatorMatrix u = matrix_power(momentum_phase_op(space), k);
    const Complex phase = weyl_phase(space, j, k);
    return max_abs(Matrix(v.entries() * u.entries() - phase * u.entries() * v.entries()));
}

OperatorMatrix matrix_power(const OperatorMatrix& a, long n) {
    Matrix base = a.entries();
    if (n < 0) {
        base = base.adjoint();  // callers use this with unitaries only
        n = -n;
    }
    Matrix acc = Matrix::Identity(a.dim(), a.dim());
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return {a.space(), std::move(acc)};
}

OpAlgebra op_algebra(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space(), b.space(), "op_algebra");
    const Matrix ab = a.entries() * b.entries();
    const Matrix ba = b.entries() * a.entries();
    return {OperatorMatrix(a.space(), ab - ba),
            OperatorMatrix(a.space(), ab + ba),
            (a.entries().adjoint() * b.entries()).trace()};
}

Moments expectation_and_uncertainty(const OperatorMatrix& a, const StateVector& psi) {
    require_same_space(a.space(), psi.space(), "expectation_and_uncertainty");
    if (!psi.is_normalized())
        throw std::invalid_argument("expectation_and_uncertainty: psi must be normalized");
    const Vector apsi = a.entries() * psi.amplitudes();
    const Complex mean = psi.amplitudes().dot(apsi);
    const Complex second = psi.amplitudes().dot(a.entries() * apsi);
    const Complex var = second - mean * mean;
    if (std::abs(var.imag()) > 1e-10 || var.real() < -1e-10)
        throw std::invalid_argument(
            "expectation_and_uncertainty: variance is not a nonnegative real; input is not Hermitian");
    return {mean, std::sqrt(std::max(0.0, var.real()))};
}

}  // namespace qps
