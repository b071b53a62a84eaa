#ifndef QPS_WEYL_WIGNER_HPP
#define QPS_WEYL_WIGNER_HPP

#include <iosfwd>
#include <vector>

#include "qps/oscillator.hpp"
#include "qps/types.hpp"

namespace qps {

// Phase-point operators Delta(j,k) = 2 V^{-k} U^{2j} V^{-k} F^2 on an odd-N
// space. Each one is Hermitian with Delta^2 = 4I and trace 2; together they
// form an orthogonal operator basis with tr(Delta'(a) Delta(b)) = 4N delta_ab.
class WWBasis {
  public:
    explicit WWBasis(FiniteSpace space);  // rejects even N

    const FiniteSpace& space() const { return space_; }
    const Matrix& at(int j, int k) const;

    // tr(Delta'(a) Delta(a)), the same constant for every phase point; 4N.
    double orthogonality_constant() const { return 4.0 * space_.dim; }

  private:
    FiniteSpace space_;
    std::vector<Matrix> ops_;  // row-major in j
};

OperatorMatrix ww_point_operator(FiniteSpace space, int j, int k);

struct WignerMap {
    FiniteSpace space;
    Matrix values;            // values(j,k) = tr(Delta'(j,k) A)
    bool source_hermitian;

    // CSV: header j,k,re,im; one row per point, row-major in j.
    void write_csv(std::ostream& os) const;
};

WignerMap ww_transform(const OperatorMatrix& a, const WWBasis& basis);

// A = (1/c_N) sum_{j,k} values(j,k) Delta(j,k)
OperatorMatrix ww_inverse(const WignerMap& map, const WWBasis& basis);

// sum over the grid of max(0, -Re value); requires a density matrix.
double wigner_negativity(const OperatorMatrix& rho, const WWBasis& basis);

// ---- classical limit on quadratic symbols ----

struct PhaseGrid {
    double half_width = 3.0;  // |q|,|p| <= half_width
    int points = 7;           // per axis
};

struct ClassicalLimitReport {
    Eigen::MatrixXd moyal;    // symbol of -i[F,G] on the grid
    Eigen::MatrixXd poisson;  // {f,g} on the same grid
    double max_diff;
};

// Poisson bracket {f,g} = df/dq dg/dp - df/dp dg/dq of two quadratics,
// closed under the bracket; computed symbolically from the coefficients.
QuadraticObservable poisson_bracket(const QuadraticObservable& f, const QuadraticObservable& g);

// Builds F, G on a truncated Fock space, forms -i[F,G], and evaluates its
// phase-space symbol on the grid. On quadratics the star-product series
// terminates at first order, so the symbol must equal the Poisson bracket
// inside the truncation-faithful window.
ClassicalLimitReport classical_limit_check(const QuadraticObservable& f,
                                           const QuadraticObservable& g,
                                           const PhaseGrid& grid = {},
                                           int cutoff = 64);

// Weyl symbol of a Fock-space operator at phase point (q,p), exact for
// operators that are quadratic in q and p: coherent expectation minus a
// quarter of its phase-space Laplacian (finite differences are exact on
// quadratics for any step).
double quadratic_weyl_symbol(const OperatorMatrix& op, double q, double p, double step = 0.05);

}  // namespace qps

#endif
