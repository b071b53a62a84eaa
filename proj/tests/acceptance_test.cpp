// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>

#include "qps/experiments.hpp"
#include "qps/geometry.hpp"
#include "qps/kinematics.hpp"
#include "qps/measurement.hpp"
#include "qps/modular.hpp"
#include "qps/oscillator.hpp"
#include "qps/weyl_wigner.hpp"

using namespace qps;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int number, const char* label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, label,
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

Matrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (m + Matrix(m.adjoint()));
}

StateVector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return StateVector::normalized(FiniteSpace(n), v);
}

// 1. cat-state detector probabilities at D = 256, under 10 s
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const DetectorArray detectors = default_detector_array();
    const ExperimentResult even = cat_interference(CatConfig(10.0, 0.0, 256), kPi / 2, detectors);
    const ExperimentResult odd = cat_interference(CatConfig(10.0, kPi, 256), kPi / 2, detectors);
    const double p_even = even.outputs["click_probability"]["value"].get<double>();
    const double p_odd = odd.outputs["click_probability"]["value"].get<double>();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = std::abs(p_even - 0.93) <= 0.02 && std::abs(p_odd - 0.35) <= 0.02 &&
                      seconds < 10.0;
    report(1, "cat-state detector probabilities 0.93/0.35 +- 0.02", pass,
           fmt("p+ = %.4f, p- = %.4f, %.2f s", p_even, p_odd, seconds));
}

// 2. branch overlap, analytic and truncated
void criterion_2() {
    const double analytic = cat_branch_overlap_sq(10.0);
    const FockSpace space(256);
    const Vector minus = coherent_state(space, CoherentAmplitude::from_qp(-5, 0)).amplitudes();
    const Vector plus = coherent_state(space, CoherentAmplitude::from_qp(5, 0)).amplitudes();
    const double truncated = std::norm(minus.dot(plus));
    const bool pass = std::abs(analytic - 1.93e-22) / 1.93e-22 <= 0.01 && truncated < 1e-20;
    report(2, "branch overlap e^{-50} within 1% and < 1e-20 truncated", pass,
           fmt("analytic %.4e, truncated %.4e", analytic, truncated));
}

// 3. qubit weak value over a 20 x 20 grid
void criterion_3() {
    const FiniteSpace two(2);
    Matrix sx(2, 2);
    sx << 0, 1, 1, 0;
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const double theta = 0.1 + (kPi - 0.3) * i / 19.0;
        for (int j = 0; j < 20; ++j) {
            const double phi = -kPi + 2.0 * kPi * j / 20.0;
            Vector beta(2);
            // bra convention: <beta| carries e^{+i phi} on <u1|
            beta << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), -phi);
            const PrePostPair pair{StateVector::basis_state(two, 0), StateVector(two, beta, true),
                                   OperatorMatrix(two, sx)};
            const Complex expected = std::polar(std::tan(0.5 * theta), phi);
            worst = std::max(worst, std::abs(weak_value(pair) - expected));
        }
    }
    report(3, "weak value tan(theta/2) e^{i phi} exact on the grid", worst < 1e-12,
           fmt("max |O_w - formula| = %.2e", worst));
}

// 4. coherent-pointer shift pair within 5 eps^2
void criterion_4() {
    const FockSpace space(64);
    double worst_ratio = 0;
    for (const Complex ow : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(0.7, 0.3)}) {
        for (const double eps : {1e-2, 1e-3, 1e-4}) {
            const CoherentShiftReport rep =
                coherent_pointer_shift({Complex(0.0, 2.0)}, ow, eps, space);
            worst_ratio = std::max(worst_ratio, rep.q_shift.order_residual / (eps * eps));
            worst_ratio = std::max(worst_ratio, rep.p_shift.order_residual / (eps * eps));
        }
    }
    report(4, "coherent-pointer dQ/dP shifts within 5 eps^2", worst_ratio <= 5.0,
           fmt("max residual / eps^2 = %.3f", worst_ratio));
}

// 5. Jozsa general shift is O(eps^2) for random configurations
void criterion_5() {
    std::mt19937_64 rng(424242);
    const int dim = 8;
    const FiniteSpace space(dim);
    bool pass = true;
    double worst = 0;
    for (int config = 0; config < 10; ++config) {
        const OperatorMatrix m{space, random_hermitian(dim, rng)};
        const OperatorMatrix r{space, random_hermitian(dim, rng)};
        const StateVector phi = random_state(dim, rng);
        const PrePostPair system = realize_weak_value(Complex(0.4, -0.3));
        double ratio[3];
        int i = 0;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const PointerModel pointer{phi, r, eps};
            ratio[i++] = jozsa_shift(m, pointer, system).order_residual / (eps * eps);
        }
        const double floor = 1e-5;
        if (ratio[1] > 4.0 * ratio[0] + floor || ratio[2] > 4.0 * ratio[0] + floor) pass = false;
        worst = std::max({worst, ratio[0], ratio[1], ratio[2]});
    }
    report(5, "Jozsa shift residual stays O(eps^2) across three decades", pass,
           fmt("max residual / eps^2 = %.3f over 10 configs", worst));
}

// 6. exact finite kinematics up to N = 32
void criterion_6() {
    std::mt19937_64 rng(99);
    double worst = 0;
    for (int n = 2; n <= 32; ++n) {
        const FiniteSpace space(n);
        const OperatorMatrix v = position_translation_op(space);
        const OperatorMatrix u = momentum_phase_op(space);
        const OperatorMatrix f = finite_fourier(space);
        const Matrix id = Matrix::Identity(n, n);
        worst = std::max(worst, max_abs(Matrix(matrix_power(v, n).entries() - id)));
        worst = std::max(worst, max_abs(Matrix(matrix_power(u, n).entries() - id)));
        worst = std::max(worst, max_abs(Matrix(matrix_power(f, 4).entries() - id)));
        for (int s = 0; s < 50; ++s)
            worst = std::max(worst, weyl_relation_residual(space, long(rng() % std::uint64_t(n)),
                                                           long(rng() % std::uint64_t(n))));
    }
    report(6, "V^N = U^N = I, F^4 = I, Weyl relation exact for N <= 32", worst < 1e-12,
           fmt("max residual %.2e", worst));
}

// 7. WW identities and the measured orthogonality constant
void criterion_7() {
    double worst = 0, spread = 0;
    for (int n : {3, 5, 7}) {
        const FiniteSpace space(n);
        const WWBasis basis(space);
        const Matrix f2 = matrix_power(finite_fourier(space), 2).entries();
        const Matrix id4 = 4.0 * Matrix::Identity(n, n);
        double reference = -1;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Matrix& d = basis.at(j, k);
                worst = std::max(worst, max_abs(Matrix(d - d.adjoint())));
                worst = std::max(worst, max_abs(Matrix(d * d - id4)));
                worst = std::max(worst, max_abs(Matrix(f2 * d * f2 - basis.at(-j, -k))));
                const double self = (d.adjoint() * d).trace().real();
                if (reference < 0) reference = self;
                spread = std::max(spread, std::abs(self - reference));
            }
        worst = std::max(worst, max_abs(Matrix(basis.at(0, 0) - 2.0 * f2)));
    }
    const bool pass = worst < 1e-12 && spread < 1e-12;
    report(7, "WW identity suite at N in {3,5,7} with a uniform constant", pass,
           fmt("max identity residual %.2e, c_N spread %.2e", worst, spread));
}

// 8. classical limit on the three quadratic generator pairs
void criterion_8() {
    const QuadraticObservable q{0, 0, 0, 1, 0, 0};
    const QuadraticObservable p{0, 0, 0, 0, 1, 0};
    const QuadraticObservable h0{0.5, 0.5, 0, 0, 0, 0};
    const QuadraticObservable qp{0, 0, 1, 0, 0, 0};
    const QuadraticObservable q2{1, 0, 0, 0, 0, 0};
    const double d1 = classical_limit_check(q, p).max_diff;
    const double d2 = classical_limit_check(h0, q).max_diff;
    const double d3 = classical_limit_check(qp, q2).max_diff;
    const double worst = std::max({d1, d2, d3});
    report(8, "Moyal equals Poisson on quadratics within 1e-5", worst < 1e-5,
           fmt("max |moyal - poisson| = %.2e", worst));
}

// 9. geometric phase against the oriented solid angle
void criterion_9() {
    std::mt19937_64 rng(20260809);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const GeodesicTriangle tri{RayPoint{random_state(2, rng)}, RayPoint{random_state(2, rng)},
                                   RayPoint{random_state(2, rng)}};
        const double residual =
            std::remainder(bargmann_invariant(tri) + 0.5 * solid_angle(tri), 2.0 * kPi);
        worst = std::max(worst, std::abs(residual));
    }
    report(9, "Theta = -Omega/2 (mod 2 pi) for 200 random triangles", worst < 1e-9,
           fmt("max residual %.2e", worst));
}

// 10. DSO / CUO dimensions by rank computation
void criterion_10() {
    std::mt19937_64 rng(31337);
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 6; ++n) {
        const OperatorSpaceDims dims = measure_operator_space_dims(random_state(n, rng));
        if (dims.dso != (n - 1) * (n - 1) + 1 || dims.cuo != 2 * (n - 1)) pass = false;
        detail += fmt("n=%d:(%d,%d) ", n, dims.dso, dims.cuo);
    }
    report(10, "DSO dim (n-1)^2+1 and CUO dim 2(n-1) for n = 2..6", pass, detail);
}

// 11. modular qubit Pauli algebra on the slit span
void criterion_11() {
    double worst = 0;
    for (int n : {8, 16, 32, 64}) {
        const RingSpace ring(n, 1.0);
        const ModularSpinOps spin = modular_spin_ops(ring);
        const Eigen::Matrix2cd s[3] = {restrict_to_slits(spin.sigma1, ring),
                                       restrict_to_slits(spin.sigma2, ring),
                                       restrict_to_slits(spin.sigma3, ring)};
        const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const Eigen::Matrix2cd comm = s[j] * s[k] - s[k] * s[j];
                const Eigen::Matrix2cd anti = s[j] * s[k] + s[k] * s[j];
                Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
                if (j != k) {
                    const int l = 3 - j - k;
                    const double sign = (k - j + 3) % 3 == 1 ? 1.0 : -1.0;
                    expected = Complex(0, 2.0 * sign) * s[l];
                }
                worst = std::max(worst, (comm - expected).cwiseAbs().maxCoeff());
                const Eigen::Matrix2cd anti_expected =
                    j == k ? Eigen::Matrix2cd(2.0 * id) : Eigen::Matrix2cd::Zero().eval();
                worst = std::max(worst, (anti - anti_expected).cwiseAbs().maxCoeff());
            }
    }
    report(11, "Pauli algebra exact on the slit span, N in {8,16,32,64}", worst < 1e-12,
           fmt("max residual %.2e", worst));
}

// 12. CRT single-line cover plus the non-coprime counterexample
void criterion_12() {
    std::mt19937_64 rng(2718);
    bool pass = true;
    double worst = 0;
    int tested = 0;
    while (tested < 20) {
        const int a = 2 + int(rng() % 30);
        const int b = 2 + int(rng() % 30);
        if (std::gcd(a, b) != 1 || a * b > 1000) continue;
        const CrtReport rep = crt_relabel_check(a, b);
        if (rep.orbit_length != a * b || !rep.single_line_cover || !rep.conjugation_residual)
            pass = false;
        if (rep.conjugation_residual) worst = std::max(worst, *rep.conjugation_residual);
        ++tested;
    }
    const CrtReport counter = crt_relabel_check(2, 2);
    if (counter.orbit_length != 2 || counter.single_line_cover) pass = false;
    pass = pass && worst < 1e-12;
    report(12, "CRT single-line cover for 20 coprime pairs; (2,2) splits", pass,
           fmt("max conjugation residual %.2e, (2,2) orbit %d", worst, counter.orbit_length));
}

// 13. projective speed equals the energy uncertainty; the residual at least
// halves when dt is halved (it actually quarters: the odd dt terms cancel
// for Hermitian generators, so the finite difference is second order)
void criterion_13() {
    std::mt19937_64 rng(1618);
    bool pass = true;
    double worst_ratio = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const FiniteSpace four(4);
        const OperatorMatrix h{four, random_hermitian(4, rng)};
        const StateVector psi = random_state(4, rng);
        const double dt = 1e-4;
        const SpeedCheck coarse = speed_equals_uncertainty(h, psi, dt);
        const SpeedCheck fine = speed_equals_uncertainty(h, psi, dt / 2);
        const double rc = std::abs(coarse.lhs - coarse.rhs);
        const double rf = std::abs(fine.lhs - fine.rhs);
        if (rc > 1e-2 * std::max(1.0, coarse.rhs)) pass = false;  // already close at dt
        const double ratio = rf / rc;
        worst_ratio = std::max(worst_ratio, ratio);
        if (ratio > 0.6) pass = false;  // halving dt at least halves the residual
    }
    report(13, "projective speed = energy uncertainty, residual halves with dt", pass,
           fmt("max halving ratio = %.3f (0.25 expected)", worst_ratio));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures;
}
