#include "qps/types.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace qps {

StateVector::StateVector(FiniteSpace space, Vector amplitudes, bool normalized)
    : space_(space), amps_(std::move(amplitudes)), normalized_(normalized) {
    if (amps_.size() != space_.dim)
        throw DimensionMismatch("StateVector: amplitude length does not match space dim");
    if (normalized_ && std::abs(amps_.squaredNorm() - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: normalized flag set but |psi|^2 != 1");
}

StateVector StateVector::basis_state(FiniteSpace space, int k) {
    if (k < 0 || k >= space.dim)
        throw std::invalid_argument("StateVector::basis_state: index out of range");
    Vector v = Vector::Zero(space.dim);
    v(k) = 1.0;
    return {space, std::move(v), true};
}

StateVector StateVector::normalized(FiniteSpace space, Vector amplitudes) {
    const double n = amplitudes.norm();
    if (n < 1e-300)
        throw std::invalid_argument("StateVector::normalized: null vector");
    return {space, amplitudes / n, true};
}

OperatorMatrix::OperatorMatrix(FiniteSpace space, Matrix entries)
    : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dim || m_.cols() != space_.dim)
        throw DimensionMismatch("OperatorMatrix: entries are not dim x dim");
}

OperatorMatrix OperatorMatrix::identity(FiniteSpace space) {
    return {space, Matrix::Identity(space.dim, space.dim)};
}

bool OperatorMatrix::is_hermitian(double tol) const {
    return max_abs(Matrix(m_ - m_.adjoint())) <= tol;
}

bool OperatorMatrix::is_unitary(double tol) const {
    return max_abs(Matrix(m_.adjoint() * m_ - Matrix::Identity(dim(), dim()))) <= tol;
}

StateVector OperatorMatrix::apply(const StateVector& psi) const {
    require_same_space(space_, psi.space(), "OperatorMatrix::apply");
    return {space_, m_ * psi.amplitudes(), false};
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator*");
    return {a.space_, a.m_ * b.m_};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator+");
    return {a.space_, a.m_ + b.m_};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator-");
    return {a.space_, a.m_ - b.m_};
}

OperatorMatrix operator*(Complex c, const OperatorMatrix& a) {
    return {a.space_, c * a.m_};
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_space(a.space(), b.space(), "inner");
    return a.amplitudes().dot(b.amplitudes());
}

Matrix expm(const Matrix& m) {
    return m.exp();
}

Matrix unitary_exp(const Matrix& hermitian, double t) {
    return expm(Complex(0.0, t) * hermitian);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Vector kron(const Vector& a, const Vector& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

void require_same_space(const FiniteSpace& a, const FiniteSpace& b, const char* where) {
    if (a != b)
        throw DimensionMismatch(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.dim) + " vs " + std::to_string(b.dim) + ")");
}

}  // namespace qps
