#ifndef QPS_MODULAR_HPP
#define QPS_MODULAR_HPP

#include <map>
#include <optional>
#include <vector>

#include "qps/types.hpp"

namespace qps {

// Cyclic ring of circumference 2L with sites x_j = (2L/N) j,
// j = -N/2 .. N/2-1 (stored at index j + N/2). N divisible by 4 puts the
// two slits x = +-L/2 exactly on sites, and the L-shift V_L is an
// involution, so the modular spin algebra closes exactly on the slit span.
struct RingSpace {
    int sites;                // N = 2M, divisible by 4
    double half_circumference;  // L

    RingSpace(int n, double l);

    FiniteSpace space() const { return FiniteSpace(sites); }
    double site_spacing() const { return 2.0 * half_circumference / sites; }
    double position(int storage_index) const {
        return site_spacing() * (storage_index - sites / 2);
    }
    int index_of_plus_slit() const { return sites / 2 + sites / 4; }   // x = +L/2
    int index_of_minus_slit() const { return sites / 2 - sites / 4; }  // x = -L/2
};

// V_xi on the ring: shift by an integer number of sites, |q(x)> -> |q(x-xi)>.
OperatorMatrix ring_translation(const RingSpace& ring, int site_shift);
// U_eta = diag(e^{i eta x_j}).
OperatorMatrix ring_phase(const RingSpace& ring, double eta);

struct ModularSpinOps {
    OperatorMatrix sigma1;
    OperatorMatrix sigma2;
    OperatorMatrix sigma3;
};

// sigma_3 = (U_{pi/L} - U'_{pi/L}) / 2i, sigma_1 and sigma_2 assembled from
// V_L; restricted to the slit span they are exactly the Pauli matrices.
ModularSpinOps modular_spin_ops(const RingSpace& ring);

// 2x2 compression onto span{|q(+L/2)>, |q(-L/2)>} (an invariant subspace of
// all three spin operators).
Eigen::Matrix2cd restrict_to_slits(const OperatorMatrix& op, const RingSpace& ring);

// Max-norm of [phi(Q), V_L] - (phi(Q) - phi(Q+L)) V_L; an exact operator
// identity on the ring for any site-sampled potential.
struct EomReport {
    double identity_residual;
    double commutator_norm;  // zero iff phi is L-periodic on the sites
};
EomReport nonlocal_eom_identity(const RingSpace& ring, const std::vector<double>& phi_sites);

struct SlitLattice {
    int n_periods;                     // potential periods around the ring
    double period;                     // L
    std::map<int, Complex> coefficients;  // harmonic n -> c_n, sum |c_n|^2 = 1

    SlitLattice(int periods, double l, std::map<int, Complex> coeffs);
};

struct NslitResult {
    StateVector state;            // sum_n c_n |v_{n * n_periods}>
    double v_l_residual;          // eigenvector residual for V_L
    Complex v_l_eigenvalue;       // 1: zero modular momentum is conserved
    double comb_support_error;    // amplitude off the 2 pi/L momentum comb
    double u_modular_residual;    // eigenvector residual for U_{2 pi/L};
                                  // zero only for full equal-modulus combs
    bool az_comb;                 // support covers every tooth with equal moduli
};

// Fast-interaction diffraction sum_n c_n U_{2 pi n / L} |p(0)> on a ring
// with the given number of momentum sites.
NslitResult nslit_diffraction(const SlitLattice& lattice, int ring_momentum_dim);

// Quadrature Fourier coefficients of one period of a slit transmission
// profile, normalized to sum |c_n|^2 = 1. Gaussian profile of the given
// width, or a hard-edged slit open on the fraction `open_fraction`.
std::map<int, Complex> slit_coefficients_gaussian(double width_over_period, int max_harmonic,
                                                  int quadrature_points);
std::map<int, Complex> slit_coefficients_box(double open_fraction, int max_harmonic,
                                             int quadrature_points);

struct CrtFactorization {
    int n_a, n_b;

    CrtFactorization(int a, int b);
    int total() const { return n_a * n_b; }
    std::pair<int, int> relabel(int j) const { return {j % n_a, j % n_b}; }
};

struct CrtReport {
    std::optional<double> conjugation_residual;  // set when gcd = 1
    int orbit_length;                            // orbit of (0,0) under V (x) V
    bool single_line_cover;                      // orbit_length == n_a * n_b
};

// P V^(N) P^{-1} vs V^(Na) (x) V^(Nb) under the CRT relabeling; for
// non-coprime pairs reports the degraded orbit instead of erroring.
CrtReport crt_relabel_check(int n_a, int n_b);

// |v_j^(Na)> (x) |u_sigma^(Nb)>: joint eigenvector of V (x) I and I (x) U.
StateVector az_state(const CrtFactorization& fact, int j, int sigma);

struct AzResiduals {
    double v_residual;
    double u_residual;
    Complex v_eigenvalue;  // e^{2 pi i j / Na}
    Complex u_eigenvalue;  // e^{2 pi i sigma / Nb}
};
AzResiduals az_state_residuals(const CrtFactorization& fact, int j, int sigma);

// Ideal projective slit measurement |v0> (x) |v0|  =>  |v0> (x) |u0>.
StateVector slit_projective_measurement(int n_a, int n_b);

// Phase-space cell weights of a product-space state: rows are modular
// position (mod Nb), columns modular momentum (mod Na).
Eigen::MatrixXd az_cell_weights(const CrtFactorization& fact, const StateVector& state);
void write_cell_csv(const Eigen::MatrixXd& weights, std::ostream& os);

}  // namespace qps

#endif
