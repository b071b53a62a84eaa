#include "qps/modular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <ostream>

#include "qps/kinematics.hpp"

namespace qps {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RingSpace::RingSpace(int n, double l) : sites(n), half_circumference(l) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument(
            "RingSpace: site count must be a positive multiple of 4 so that +-L/2 land on sites");
    if (!(l > 0))
        throw std::invalid_argument("RingSpace: half circumference must be positive");
}

OperatorMatrix ring_translation(const RingSpace& ring, int site_shift) {
    const int n = ring.sites;
    Matrix v = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
        v(((j - site_shift) % n + n) % n, j) = 1.0;
    return {ring.space(), std::move(v)};
}

OperatorMatrix ring_phase(const RingSpace& ring, double eta) {
    const int n = ring.sites;
    Matrix u = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
        u(j, j) = std::polar(1.0, eta * ring.position(j));
    return {ring.space(), std::move(u)};
}

ModularSpinOps modular_spin_ops(const RingSpace& ring) {
    const double l = ring.half_circumference;
    const Matrix u = ring_phase(ring, std::numbers::pi / l).entries();
    const Matrix v = ring_translation(ring, ring.sites / 2).entries();  // shift by L
    const Matrix vd = v.adjoint();
    const Matrix s3 = (u - u.adjoint()) / Complex(0, 2);
    const Matrix s1 = 0.5 * (v + vd) - 0.5 * (v - vd) * s3;
    const Matrix s2 = Complex(0, -0.5) * (v - vd) + Complex(0, 0.5) * (v + vd) * s3;
    return {OperatorMatrix(ring.space(), s1), OperatorMatrix(ring.space(), s2),
            OperatorMatrix(ring.space(), s3)};
}

Eigen::Matrix2cd restrict_to_slits(const OperatorMatrix& op, const RingSpace& ring) {
    require_same_space(op.space(), ring.space(), "restrict_to_slits");
    const int idx[2] = {ring.index_of_plus_slit(), ring.index_of_minus_slit()};
    Eigen::Matrix2cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = op.entries()(idx[i], idx[j]);
    return out;
}

EomReport nonlocal_eom_identity(const RingSpace& ring, const std::vector<double>& phi_sites) {
    const int n = ring.sites;
    if (int(phi_sites.size()) != n)
        throw std::invalid_argument("nonlocal_eom_identity: potential must give one value per site");
    Matrix phi = Matrix::Zero(n, n);
    Matrix phi_shifted = Matrix::Zero(n, n);  // phi(Q + L)
    for (int j = 0; j < n; ++j) {
        phi(j, j) = phi_sites[j];
        phi_shifted(j, j) = phi_sites[(j + n / 2) % n];
    }
    const Matrix v = ring_translation(ring, n / 2).entries();
    const Matrix comm = phi * v - v * phi;
    const Matrix rhs = (phi - phi_shifted) * v;
    return {max_abs(Matrix(comm - rhs)), max_abs(comm)};
}

SlitLattice::SlitLattice(int periods, double l, std::map<int, Complex> coeffs)
    : n_periods(periods), period(l), coefficients(std::move(coeffs)) {
    if (periods < 1) throw std::invalid_argument("SlitLattice: need at least one period");
    if (!(l > 0)) throw std::invalid_argument("SlitLattice: period must be positive");
    double total = 0;
    for (const auto& [n, c] : coefficients) total += std::norm(c);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("SlitLattice: coefficients must satisfy sum |c_n|^2 = 1");
}

NslitResult nslit_diffraction(const SlitLattice& lattice, int ring_momentum_dim) {
    const int n = ring_momentum_dim;
    const int step = lattice.n_periods;
    if (n % step != 0)
        throw std::invalid_argument("nslit_diffraction: ring size must be divisible by the period count");
    std::vector<int> teeth;
    for (const auto& [harm, c] : lattice.coefficients) {
        const int idx = ((harm * step) % n + n) % n;
        if (std::find(teeth.begin(), teeth.end(), idx) != teeth.end())
            throw std::invalid_argument(
                "nslit_diffraction: the momentum grid does not resolve harmonic " +
                std::to_string(harm) + " (it collides with another tooth mod N)");
        teeth.push_back(idx);
    }

    const FiniteSpace space(n);
    const Matrix f = finite_fourier(space).entries();
    Vector psi = Vector::Zero(n);
    {
        size_t i = 0;
        for (const auto& [harm, c] : lattice.coefficients)
            psi += c * f.col(teeth[i++]);
    }
    StateVector state{space, psi, true};

    const Matrix v_l = matrix_power(position_translation_op(space), n / step).entries();
    const Complex v_eig = psi.dot(v_l * psi);
    const double v_res = (v_l * psi - v_eig * psi).norm();

    const Vector momentum_amps = f.adjoint() * psi;
    double support_err = 0;
    for (int k = 0; k < n; ++k)
        if (k % step != 0) support_err = std::max(support_err, std::abs(momentum_amps(k)));

    const Matrix u_mod = matrix_power(momentum_phase_op(space), step).entries();
    const Complex u_eig = psi.dot(u_mod * psi);
    const double u_res = (u_mod * psi - u_eig * psi).norm();

    bool az = int(lattice.coefficients.size()) == n / step;
    if (az) {
        const double first = std::abs(lattice.coefficients.begin()->second);
        for (const auto& [harm, c] : lattice.coefficients)
            if (std::abs(std::abs(c) - first) > 1e-12) az = false;
    }
    return {std::move(state), v_res, v_eig, support_err, u_res, az};
}

namespace {

std::map<int, Complex> profile_coefficients(const std::function<double(double)>& profile,
                                            int max_harmonic, int quadrature_points) {
    if (quadrature_points < 2 * max_harmonic + 2)
        throw std::invalid_argument("profile_coefficients: quadrature too coarse for the harmonics");
    std::map<int, Complex> coeffs;
    const double h = 1.0 / quadrature_points;
    for (int n = -max_harmonic; n <= max_harmonic; ++n) {
        Complex acc = 0;
        for (int m = 0; m < quadrature_points; ++m) {
            const double x = (m + 0.5) * h;  // midpoint rule on one period
            acc += profile(x) * std::polar(1.0, -kTwoPi * n * x) * h;
        }
        coeffs[n] = acc;
    }
    double total = 0;
    for (const auto& [n, c] : coeffs) total += std::norm(c);
    for (auto& [n, c] : coeffs) c /= std::sqrt(total);
    return coeffs;
}

}  // namespace

std::map<int, Complex> slit_coefficients_gaussian(double width_over_period, int max_harmonic,
                                                  int quadrature_points) {
    if (!(width_over_period > 0))
        throw std::invalid_argument("slit_coefficients_gaussian: width must be positive");
    const double w = width_over_period;
    return profile_coefficients(
        [w](double x) { return std::exp(-0.5 * (x - 0.5) * (x - 0.5) / (w * w)); },
        max_harmonic, quadrature_points);
}

std::map<int, Complex> slit_coefficients_box(double open_fraction, int max_harmonic,
                                             int quadrature_points) {
    if (!(open_fraction > 0) || open_fraction > 1)
        throw std::invalid_argument("slit_coefficients_box: open fraction must be in (0, 1]");
    const double f = open_fraction;
    return profile_coefficients(
        [f](double x) { return std::abs(x - 0.5) <= 0.5 * f ? 1.0 : 0.0; },
        max_harmonic, quadrature_points);
}

CrtFactorization::CrtFactorization(int a, int b) : n_a(a), n_b(b) {
    if (a < 2 || b < 2)
        throw std::invalid_argument("CrtFactorization: factors must be at least 2");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("CrtFactorization: factors must be coprime");
    if (a * b > kMaxDim)
        throw std::invalid_argument("CrtFactorization: product dimension exceeds the cap");
}

CrtReport crt_relabel_check(int n_a, int n_b) {
    if (n_a < 2 || n_b < 2)
        throw std::invalid_argument("crt_relabel_check: factors must be at least 2");
    const int total = n_a * n_b;

    // orbit of (0,0) under the simultaneous decrement (action of V (x) V)
    int orbit = 0;
    {
        int x = 0, y = 0;
        do {
            x = (x + n_a - 1) % n_a;
            y = (y + n_b - 1) % n_b;
            ++orbit;
        } while (x != 0 || y != 0);
    }

    std::optional<double> residual;
    if (std::gcd(n_a, n_b) == 1) {
        const FiniteSpace big(total);
        Matrix perm = Matrix::Zero(total, total);
        for (int j = 0; j < total; ++j)
            perm((j % n_a) * n_b + (j % n_b), j) = 1.0;
        const Matrix lhs =
            perm * position_translation_op(big).entries() * perm.adjoint();
        const Matrix rhs = kron(position_translation_op(FiniteSpace(n_a)).entries(),
                                position_translation_op(FiniteSpace(n_b)).entries());
        residual = max_abs(Matrix(lhs - rhs));
    }
    return {residual, orbit, orbit == total};
}

StateVector az_state(const CrtFactorization& fact, int j, int sigma) {
    if (j < 0 || j >= fact.n_a || sigma < 0 || sigma >= fact.n_b)
        throw std::invalid_argument("az_state: index out of range");
    const Vector v_j = finite_fourier(FiniteSpace(fact.n_a)).entries().col(j);
    Vector u_sigma = Vector::Zero(fact.n_b);
    u_sigma(sigma) = 1.0;
    return {FiniteSpace(fact.total()), kron(v_j, u_sigma), true};
}

AzResiduals az_state_residuals(const CrtFactorization& fact, int j, int sigma) {
    const Vector psi = az_state(fact, j, sigma).amplitudes();
    const Matrix va = kron(position_translation_op(FiniteSpace(fact.n_a)).entries(),
                           Matrix::Identity(fact.n_b, fact.n_b));
    const Matrix ub = kron(Matrix::Identity(fact.n_a, fact.n_a),
                           momentum_phase_op(FiniteSpace(fact.n_b)).entries());
    const Complex v_eig = std::polar(1.0, kTwoPi * j / fact.n_a);
    const Complex u_eig = std::polar(1.0, kTwoPi * sigma / fact.n_b);
    return {(va * psi - v_eig * psi).norm(), (ub * psi - u_eig * psi).norm(), v_eig, u_eig};
}

StateVector slit_projective_measurement(int n_a, int n_b) {
    const Vector v0 = finite_fourier(FiniteSpace(n_a)).entries().col(0);
    Vector u0 = Vector::Zero(n_b);
    u0(0) = 1.0;
    return {FiniteSpace(n_a * n_b), kron(v0, u0), true};
}

Eigen::MatrixXd az_cell_weights(const CrtFactorization& fact, const StateVector& state) {
    if (state.dim() != fact.total())
        throw DimensionMismatch("az_cell_weights: state dim does not match the factorization");
    const Matrix fa = finite_fourier(FiniteSpace(fact.n_a)).entries();
    Eigen::MatrixXd weights(fact.n_b, fact.n_a);  // rows x_mod, cols p_mod
    for (int sigma = 0; sigma < fact.n_b; ++sigma)
        for (int j = 0; j < fact.n_a; ++j) {
            Vector u_sigma = Vector::Zero(fact.n_b);
            u_sigma(sigma) = 1.0;
            const Vector cell = kron(Vector(fa.col(j)), u_sigma);
            weights(sigma, j) = std::norm(cell.dot(state.amplitudes()));
        }
    return weights;
}

void write_cell_csv(const Eigen::MatrixXd& weights, std::ostream& os) {
    os << "x_mod,p_mod,weight\n";
    for (int x = 0; x < weights.rows(); ++x)
        for (int p = 0; p < weights.cols(); ++p)
            os << x << ',' << p << ',' << weights(x, p) << '\n';
}

}  // namespace qps
