#include "qps/weyl_wigner.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qps/kinematics.hpp"

namespace qps {

namespace {

Matrix point_operator_matrix(FiniteSpace space, int j, int k) {
    // Delta(j,k)|u_m> = 2 e^{4 pi i j (k - m)/N} |u_{2k - m mod N}>
    const int n = space.dim;
    Matrix d = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        const int row = ((2 * k - m) % n + n) % n;
        const long ph = ((long(j) % n) * ((k - m) % n + n)) % n;
        d(row, m) = 2.0 * std::polar(1.0, 4.0 * std::numbers::pi * double(ph) / n);
    }
    return d;
}

void require_density_matrix(const OperatorMatrix& rho) {
    if (!rho.is_hermitian(1e-10))
        throw std::invalid_argument("wigner_negativity: rho is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-10)
        throw std::invalid_argument("wigner_negativity: rho does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("wigner_negativity: rho is not positive semidefinite");
}

}  // namespace

WWBasis::WWBasis(FiniteSpace space) : space_(space) {
    if (space.dim % 2 == 0)
        throw std::invalid_argument(
            "WWBasis: even dimension rejected; the index doubling 2j is only a bijection mod N "
            "for odd N, so the phase-point operators do not form a basis");
    const int n = space.dim;
    ops_.reserve(size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            ops_.push_back(point_operator_matrix(space, j, k));
}

const Matrix& WWBasis::at(int j, int k) const {
    const int n = space_.dim;
    const int jj = (j % n + n) % n;
    const int kk = (k % n + n) % n;
    return ops_[size_t(jj) * n + kk];
}

OperatorMatrix ww_point_operator(FiniteSpace space, int j, int k) {
    if (space.dim % 2 == 0)
        throw std::invalid_argument(
            "ww_point_operator: even dimension rejected (2j is not invertible mod N)");
    return {space, point_operator_matrix(space, j, k)};
}

void WignerMap::write_csv(std::ostream& os) const {
    os << "j,k,re,im\n";
    for (int j = 0; j < space.dim; ++j)
        for (int k = 0; k < space.dim; ++k) {
            const Complex v = values(j, k);
            os << j << ',' << k << ',' << v.real() << ',' << v.imag() << '\n';
        }
}

WignerMap ww_transform(const OperatorMatrix& a, const WWBasis& basis) {
    require_same_space(a.space(), basis.space(), "ww_transform");
    const int n = basis.space().dim;
    Matrix values(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            values(j, k) = (basis.at(j, k).adjoint() * a.entries()).trace();
    return {basis.space(), std::move(values), a.is_hermitian()};
}

OperatorMatrix ww_inverse(const WignerMap& map, const WWBasis& basis) {
    require_same_space(map.space, basis.space(), "ww_inverse");
    const int n = basis.space().dim;
    Matrix acc = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            acc += map.values(j, k) * basis.at(j, k);
    return {basis.space(), (acc / basis.orthogonality_constant()).eval()};
}

double wigner_negativity(const OperatorMatrix& rho, const WWBasis& basis) {
    require_density_matrix(rho);
    const WignerMap map = ww_transform(rho, basis);
    double total = 0.0;
    for (int j = 0; j < map.space.dim; ++j)
        for (int k = 0; k < map.space.dim; ++k)
            total += std::max(0.0, -map.values(j, k).real());
    return total;
}

QuadraticObservable poisson_bracket(const QuadraticObservable& f, const QuadraticObservable& g) {
    // df/dq = 2 c_qq q + c_qp p + c_q as the linear form (a1, a2, a3) on (q, p, 1)
    const double fq[3] = {2 * f.c_qq, f.c_qp, f.c_q};
    const double fp[3] = {f.c_qp, 2 * f.c_pp, f.c_p};
    const double gq[3] = {2 * g.c_qq, g.c_qp, g.c_q};
    const double gp[3] = {g.c_qp, 2 * g.c_pp, g.c_p};
    auto mul = [](const double x[3], const double y[3]) {
        return QuadraticObservable{x[0] * y[0], x[1] * y[1], x[0] * y[1] + x[1] * y[0],
                                   x[0] * y[2] + x[2] * y[0], x[1] * y[2] + x[2] * y[1],
                                   x[2] * y[2]};
    };
    const QuadraticObservable a = mul(fq, gp);
    const QuadraticObservable b = mul(fp, gq);
    return {a.c_qq - b.c_qq, a.c_pp - b.c_pp, a.c_qp - b.c_qp,
            a.c_q - b.c_q, a.c_p - b.c_p, a.c_0 - b.c_0};
}

double quadratic_weyl_symbol(const OperatorMatrix& op, double q, double p, double step) {
    const FockSpace space(op.dim());
    auto husimi = [&](double qq, double pp) {
        const Vector v = coherent_state(space, CoherentAmplitude::from_qp(qq, pp)).amplitudes();
        return (v.dot(op.entries() * v)).real();
    };
    const double h0 = husimi(q, p);
    const double lap = (husimi(q + step, p) + husimi(q - step, p) + husimi(q, p + step) +
                        husimi(q, p - step) - 4.0 * h0) /
                       (step * step);
    // Gaussian smoothing with variance 1/2 per quadrature relates the
    // coherent expectation to the Weyl symbol; on quadratics the correction
    // is exactly a quarter Laplacian.
    return h0 - 0.25 * lap;
}

ClassicalLimitReport classical_limit_check(const QuadraticObservable& f,
                                           const QuadraticObservable& g,
                                           const PhaseGrid& grid, int cutoff) {
    const FockSpace space(cutoff);
    const Matrix fm = quadratic_operator(space, f).entries();
    const Matrix gm = quadratic_operator(space, g).entries();
    const OperatorMatrix comm{space.space(),
                              (Complex(0, -1) * (fm * gm - gm * fm)).eval()};
    const QuadraticObservable pb = poisson_bracket(f, g);

    const int n = grid.points;
    Eigen::MatrixXd moyal(n, n), poisson(n, n);
    double max_diff = 0.0;
    for (int i = 0; i < n; ++i) {
        const double q = n == 1 ? 0.0 : -grid.half_width + 2.0 * grid.half_width * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double p = n == 1 ? 0.0 : -grid.half_width + 2.0 * grid.half_width * j / (n - 1);
            require_faithful(CoherentAmplitude::from_qp(q, p), space, "classical_limit_check");
            moyal(i, j) = quadratic_weyl_symbol(comm, q, p);
            poisson(i, j) = evaluate_quadratic(pb, q, p);
            max_diff = std::max(max_diff, std::abs(moyal(i, j) - poisson(i, j)));
        }
    }
    return {std::move(moyal), std::move(poisson), max_diff};
}

}  // namespace qps
