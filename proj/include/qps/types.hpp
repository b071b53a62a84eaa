#ifndef QPS_TYPES_HPP
#define QPS_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qps {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance policy: algebraic identities at 1e-12 absolute max-norm,
// spectral assertions at 1e-10.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;
inline constexpr int kMaxDim = 4096;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OrthogonalPostSelection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FiniteSpace {
    int dim;

    explicit FiniteSpace(int n) : dim(n) {
        if (n < 2 || n > kMaxDim)
            throw std::invalid_argument("FiniteSpace: dim must be in [2, " +
                                        std::to_string(kMaxDim) + "], got " + std::to_string(n));
    }
    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) { return a.dim == b.dim; }
    friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) { return a.dim != b.dim; }
};

class StateVector {
  public:
    StateVector(FiniteSpace space, Vector amplitudes, bool normalized = false);

    static StateVector basis_state(FiniteSpace space, int k);
    // Rescales to unit norm; throws on a null vector.
    static StateVector normalized(FiniteSpace space, Vector amplitudes);

    const FiniteSpace& space() const { return space_; }
    const Vector& amplitudes() const { return amps_; }
    bool is_normalized() const { return normalized_; }
    int dim() const { return space_.dim; }
    double norm() const { return amps_.norm(); }
    Complex operator[](int k) const { return amps_(k); }

  private:
    FiniteSpace space_;
    Vector amps_;
    bool normalized_;
};

class OperatorMatrix {
  public:
    OperatorMatrix(FiniteSpace space, Matrix entries);

    static OperatorMatrix identity(FiniteSpace space);

    const FiniteSpace& space() const { return space_; }
    const Matrix& entries() const { return m_; }
    int dim() const { return space_.dim; }

    OperatorMatrix adjoint() const { return {space_, m_.adjoint()}; }
    Complex trace() const { return m_.trace(); }
    bool is_hermitian(double tol = kAlgebraTol) const;
    bool is_unitary(double tol = kAlgebraTol) const;

    StateVector apply(const StateVector& psi) const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex c, const OperatorMatrix& a);

  private:
    FiniteSpace space_;
    Matrix m_;
};

// max |entry| over a matrix or vector
double max_abs(const Matrix& m);
double max_abs(const Vector& v);

// <a|b>
Complex inner(const StateVector& a, const StateVector& b);

// exp(M) by scaling-and-squaring with Pade approximation; backward error
// contract <= 1e-12 relative.
Matrix expm(const Matrix& m);

// exp(i t H) for Hermitian H
Matrix unitary_exp(const Matrix& hermitian, double t);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

void require_same_space(const FiniteSpace& a, const FiniteSpace& b, const char* where);

}  // namespace qps

#endif
