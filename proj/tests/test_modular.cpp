#include <doctest.h>

#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qps/kinematics.hpp"
#include "qps/modular.hpp"

using namespace qps;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd pauli2(int i) {
    Eigen::Matrix2cd m;
    if (i == 1)
        m << 0, 1, 1, 0;
    else if (i == 2)
        m << 0, Complex(0, -1), Complex(0, 1), 0;
    else
        m << 1, 0, 0, -1;
    return m;
}

}  // namespace

TEST_CASE("ring geometry") {
    const RingSpace ring(8, 1.0);
    CHECK(ring.site_spacing() == doctest::Approx(0.25));
    CHECK(ring.position(ring.index_of_plus_slit()) == doctest::Approx(0.5));
    CHECK(ring.position(ring.index_of_minus_slit()) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(RingSpace(6, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RingSpace(8, -1.0), std::invalid_argument);
}

TEST_CASE("modular spin operators") {
    SUBCASE("sigma_3 has the slit kets as +-1 eigenvectors") {
        const RingSpace ring(16, 2.0);
        const ModularSpinOps spin = modular_spin_ops(ring);
        const Matrix& s3 = spin.sigma3.entries();
        CHECK(std::abs(s3(ring.index_of_plus_slit(), ring.index_of_plus_slit()) - Complex(1)) <
              1e-14);
        CHECK(std::abs(s3(ring.index_of_minus_slit(), ring.index_of_minus_slit()) + Complex(1)) <
              1e-14);
    }
    SUBCASE("all three are Hermitian on the full ring") {
        const RingSpace ring(8, 1.0);
        const ModularSpinOps spin = modular_spin_ops(ring);
        CHECK(spin.sigma1.is_hermitian());
        CHECK(spin.sigma2.is_hermitian());
        CHECK(spin.sigma3.is_hermitian());
    }
    SUBCASE("compressed blocks are the Pauli matrices") {
        const RingSpace ring(8, 1.0);
        const ModularSpinOps spin = modular_spin_ops(ring);
        CHECK((restrict_to_slits(spin.sigma1, ring) - pauli2(1)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((restrict_to_slits(spin.sigma2, ring) - pauli2(2)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((restrict_to_slits(spin.sigma3, ring) - pauli2(3)).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("exact Pauli algebra on the slit span for N up to 64") {
        for (int n : {8, 16, 32, 64}) {
            const RingSpace ring(n, 1.5);
            const ModularSpinOps spin = modular_spin_ops(ring);
            const Eigen::Matrix2cd s[3] = {restrict_to_slits(spin.sigma1, ring),
                                           restrict_to_slits(spin.sigma2, ring),
                                           restrict_to_slits(spin.sigma3, ring)};
            const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const Eigen::Matrix2cd comm = s[j] * s[k] - s[k] * s[j];
                    const Eigen::Matrix2cd anti = s[j] * s[k] + s[k] * s[j];
                    Eigen::Matrix2cd expected_comm = Eigen::Matrix2cd::Zero();
                    const int l = 3 - j - k;  // the remaining index when j != k
                    if (j != k) {
                        const double sign = (k - j + 3) % 3 == 1 ? 1.0 : -1.0;
                        expected_comm = Complex(0, 2.0 * sign) * s[l];
                    }
                    CHECK((comm - expected_comm).cwiseAbs().maxCoeff() < 1e-12);
                    const Eigen::Matrix2cd expected_anti =
                        j == k ? Eigen::Matrix2cd(2.0 * id) : Eigen::Matrix2cd::Zero().eval();
                    CHECK((anti - expected_anti).cwiseAbs().maxCoeff() < 1e-12);
                }
            CHECK((s[0] * s[0] - id).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("the slit span is invariant under all three operators") {
        const RingSpace ring(16, 1.0);
        const ModularSpinOps spin = modular_spin_ops(ring);
        const int p = ring.index_of_plus_slit(), m = ring.index_of_minus_slit();
        for (const OperatorMatrix* op : {&spin.sigma1, &spin.sigma2, &spin.sigma3})
            for (int col : {p, m})
                for (int row = 0; row < 16; ++row)
                    if (row != p && row != m)
                        CHECK(std::abs(op->entries()(row, col)) < 1e-14);
    }
}

TEST_CASE("modular translation pair") {
    const RingSpace ring(16, 1.0);
    const double l = ring.half_circumference;
    const Matrix v_l = ring_translation(ring, ring.sites / 2).entries();
    SUBCASE("full-period pair commutes exactly") {
        const Matrix u_full = ring_phase(ring, 2.0 * kPi / l).entries();
        CHECK(max_abs(Matrix(u_full * v_l - v_l * u_full)) < 1e-12);
    }
    SUBCASE("half-period pair picks up the Weyl phase e^{i pi}") {
        const Matrix u_half = ring_phase(ring, kPi / l).entries();
        CHECK(max_abs(Matrix(u_half * v_l + v_l * u_half)) < 1e-12);
    }
}

TEST_CASE("non-local equation of motion on the ring") {
    const RingSpace ring(16, 1.0);
    const double l = ring.half_circumference;
    auto sample = [&](const std::function<double(double)>& f) {
        std::vector<double> out(ring.sites);
        for (int j = 0; j < ring.sites; ++j) out[j] = f(ring.position(j));
        return out;
    };
    SUBCASE("constant potential: both sides vanish") {
        const EomReport rep = nonlocal_eom_identity(ring, std::vector<double>(16, 3.7));
        CHECK(rep.identity_residual < 1e-12);
        CHECK(rep.commutator_norm < 1e-12);
    }
    SUBCASE("L-periodic potential conserves modular momentum") {
        const EomReport rep =
            nonlocal_eom_identity(ring, sample([&](double x) { return std::cos(2 * kPi * x / l); }));
        CHECK(rep.identity_residual < 1e-12);
        CHECK(rep.commutator_norm < 1e-12);
    }
    SUBCASE("2L-periodic potential does not conserve it, identity still exact") {
        const EomReport rep =
            nonlocal_eom_identity(ring, sample([&](double x) { return std::cos(kPi * x / l); }));
        CHECK(rep.identity_residual < 1e-12);
        CHECK(rep.commutator_norm > 0.1);
    }
    SUBCASE("length mismatch rejected") {
        CHECK_THROWS_AS(nonlocal_eom_identity(ring, std::vector<double>(7, 0.0)),
                        std::invalid_argument);
    }
}

TEST_CASE("n-slit diffraction") {
    SUBCASE("trivial lattice leaves |p(0)> unchanged") {
        const SlitLattice lattice(3, 1.0, {{0, Complex(1.0)}});
        const NslitResult res = nslit_diffraction(lattice, 24);
        const Vector p0 = finite_fourier(FiniteSpace(24)).entries().col(0);
        CHECK(max_abs(Vector(res.state.amplitudes() - p0)) < 1e-13);
        CHECK(res.v_l_residual < 1e-12);
        // a single tooth is shifted to an orthogonal tooth by U_{2 pi/L}
        CHECK(res.u_modular_residual > 0.9);
    }
    SUBCASE("two-tooth comb at N = 24 with 3 periods") {
        const double inv = 1.0 / std::sqrt(2.0);
        const SlitLattice lattice(3, 1.0, {{1, Complex(inv)}, {-1, Complex(inv)}});
        const NslitResult res = nslit_diffraction(lattice, 24);
        CHECK(res.comb_support_error < 1e-12);
        CHECK(res.v_l_residual < 1e-12);
        CHECK(std::abs(res.v_l_eigenvalue - Complex(1)) < 1e-12);
        // a partial comb is not a modular-position eigenstate
        CHECK(res.u_modular_residual > 0.1);
        CHECK_FALSE(res.az_comb);
    }
    SUBCASE("full equal-weight comb is a joint eigenstate") {
        // N = 48, 6 periods: the 8 teeth cover every momentum residue mod 6
        std::map<int, Complex> coeffs;
        for (int n = 0; n < 8; ++n) coeffs[n] = Complex(1.0 / std::sqrt(8.0));
        const SlitLattice lattice(6, 1.0, std::move(coeffs));
        const NslitResult res = nslit_diffraction(lattice, 48);
        CHECK(res.comb_support_error < 1e-12);
        CHECK(res.v_l_residual < 1e-12);
        CHECK(res.az_comb);
        CHECK(res.u_modular_residual < 1e-12);
    }
    SUBCASE("harmonics that collide on the grid are rejected") {
        const double inv = 1.0 / std::sqrt(2.0);
        const SlitLattice lattice(3, 1.0, {{0, Complex(inv)}, {8, Complex(inv)}});
        CHECK_THROWS_AS(nslit_diffraction(lattice, 24), std::invalid_argument);
    }
    SUBCASE("unnormalized coefficients rejected") {
        CHECK_THROWS_AS(SlitLattice(3, 1.0, {{0, Complex(0.5)}}), std::invalid_argument);
    }
}

TEST_CASE("slit profile coefficients") {
    SUBCASE("gaussian profile is normalized and even") {
        const auto coeffs = slit_coefficients_gaussian(0.05, 6, 4096);
        double total = 0;
        for (const auto& [n, c] : coeffs) total += std::norm(c);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(coeffs.at(2)) == doctest::Approx(std::abs(coeffs.at(-2))).epsilon(1e-10));
    }
    SUBCASE("box profile converges to the sinc coefficients at first order in 1/N") {
        // continuum target: c_n proportional to (-1)^n sinc(pi n f)
        const double f = 0.37;
        const int harmonics = 5;
        auto target = [&] {
            std::map<int, Complex> t;
            double total = 0;
            for (int n = -harmonics; n <= harmonics; ++n) {
                const double s =
                    n == 0 ? f : std::sin(kPi * n * f) / (kPi * n);
                const double v = (n % 2 == 0 ? 1.0 : -1.0) * s;
                t[n] = v;
                total += v * v;
            }
            for (auto& [n, c] : t) c /= std::sqrt(total);
            return t;
        }();
        auto max_err = [&](int quadrature) {
            const auto got = slit_coefficients_box(f, harmonics, quadrature);
            double err = 0;
            for (const auto& [n, c] : target) err = std::max(err, std::abs(c - got.at(n)));
            return err;
        };
        // the midpoint error on the hard edges oscillates with the grid
        // offset, so check the first-order envelope across a 16x refinement
        const double coarse = max_err(256);
        const double fine = max_err(4096);
        CHECK(fine <= 0.25 * coarse);
        CHECK(fine < 1e-3);
    }
}

TEST_CASE("CRT relabeling") {
    SUBCASE("(2,3): single line covers all six points") {
        const CrtReport rep = crt_relabel_check(2, 3);
        CHECK(rep.orbit_length == 6);
        CHECK(rep.single_line_cover);
        REQUIRE(rep.conjugation_residual.has_value());
        CHECK(*rep.conjugation_residual < 1e-12);
    }
    SUBCASE("(2,2): two parallel lines") {
        const CrtReport rep = crt_relabel_check(2, 2);
        CHECK(rep.orbit_length == 2);
        CHECK_FALSE(rep.single_line_cover);
        CHECK_FALSE(rep.conjugation_residual.has_value());
    }
    SUBCASE("(3,5): conjugation residual") {
        const CrtReport rep = crt_relabel_check(3, 5);
        REQUIRE(rep.conjugation_residual.has_value());
        CHECK(*rep.conjugation_residual < 1e-12);
    }
    SUBCASE("20 coprime pairs with product up to 1000") {
        std::mt19937_64 rng(61);
        int tested = 0;
        while (tested < 20) {
            const int a = 2 + int(rng() % 30);
            const int b = 2 + int(rng() % 30);
            if (std::gcd(a, b) != 1 || a * b > 1000) continue;
            const CrtReport rep = crt_relabel_check(a, b);
            CHECK(rep.orbit_length == a * b);
            CHECK(rep.single_line_cover);
            REQUIRE(rep.conjugation_residual.has_value());
            CHECK(*rep.conjugation_residual < 1e-12);
            ++tested;
        }
    }
    SUBCASE("factorization type enforces coprimality") {
        CHECK_THROWS_AS(CrtFactorization(4, 6), std::invalid_argument);
        CHECK_NOTHROW(CrtFactorization(4, 9));
    }
}

TEST_CASE("Aharonov-Zak states") {
    SUBCASE("the (2,3) state of the cell figure") {
        const CrtFactorization fact(2, 3);
        const AzResiduals res = az_state_residuals(fact, 1, 2);
        CHECK(res.v_residual < 1e-12);
        CHECK(res.u_residual < 1e-12);
        CHECK(std::abs(res.v_eigenvalue - std::polar(1.0, kPi)) < 1e-12);
        CHECK(std::abs(res.u_eigenvalue - std::polar(1.0, 4 * kPi / 3)) < 1e-12);
    }
    SUBCASE("(0,0) is uniform in the first factor") {
        const CrtFactorization fact(2, 3);
        const StateVector s = az_state(fact, 0, 0);
        const double inv = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(s[0] - Complex(inv)) < 1e-14);
        CHECK(std::abs(s[3] - Complex(inv)) < 1e-14);
        CHECK(std::abs(s[1]) < 1e-14);
    }
    SUBCASE("random indices at (3,5)") {
        const CrtFactorization fact(3, 5);
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 5; ++trial) {
            const int j = int(rng() % 3), sigma = int(rng() % 5);
            const AzResiduals res = az_state_residuals(fact, j, sigma);
            CHECK(res.v_residual < 1e-12);
            CHECK(res.u_residual < 1e-12);
        }
    }
    SUBCASE("out-of-range indices rejected") {
        CHECK_THROWS_AS(az_state(CrtFactorization(2, 3), 2, 0), std::invalid_argument);
    }
    SUBCASE("cell weights concentrate at (sigma, j)") {
        const CrtFactorization fact(2, 3);
        const Eigen::MatrixXd w = az_cell_weights(fact, az_state(fact, 1, 2));
        CHECK(w(2, 1) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("cell CSV schema") {
        const CrtFactorization fact(2, 3);
        std::ostringstream os;
        write_cell_csv(az_cell_weights(fact, az_state(fact, 0, 0)), os);
        const std::string csv = os.str();
        CHECK(csv.rfind("x_mod,p_mod,weight\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    }
}

TEST_CASE("slit projective measurement") {
    SUBCASE("(2,3): uniform three-term momentum expansion in the second factor") {
        const StateVector s = slit_projective_measurement(2, 3);
        // expansion (1/sqrt(3)) sum_sigma |v0> (x) |v_sigma>
        const Matrix fb = finite_fourier(FiniteSpace(3)).entries();
        const Vector v0a = finite_fourier(FiniteSpace(2)).entries().col(0);
        Vector expansion = Vector::Zero(6);
        for (int sigma = 0; sigma < 3; ++sigma)
            expansion += kron(v0a, Vector(fb.col(sigma))) / std::sqrt(3.0);
        CHECK(max_abs(Vector(s.amplitudes() - expansion)) < 1e-12);
    }
    SUBCASE("non-coprime factors are fine for the measurement itself") {
        CHECK_NOTHROW(slit_projective_measurement(2, 2));
    }
    SUBCASE("unit norm") {
        CHECK(slit_projective_measurement(3, 5).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}
