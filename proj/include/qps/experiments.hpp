#ifndef QPS_EXPERIMENTS_HPP
#define QPS_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qps/oscillator.hpp"
#include "qps/types.hpp"

namespace qps {

using Json = nlohmann::ordered_json;

struct ExperimentResult {
    std::string name;
    Json inputs;
    Json outputs;  // scalar -> {value, tolerance}
    std::vector<std::pair<std::string, std::vector<std::array<double, 2>>>> series;

    void set_output(const std::string& key, double value, double tolerance);
    Json to_json() const;  // includes a timestamp field
};

struct CatConfig {
    double separation;      // L
    double relative_phase;  // alpha
    int fock_cutoff;        // D

    CatConfig(double l, double alpha, int cutoff);
};

// (|0,-L/2> + e^{i alpha} |0,+L/2>)/norm in the Fock representation.
StateVector cat_state(const CatConfig& config);

// Analytic branch overlap modulus squared, e^{-L^2/2}.
double cat_branch_overlap_sq(double separation);

// e^{-i t (N + 1/2)}: dispersion-free rotation of phase space.
StateVector rotate_cat(const StateVector& state, double t);

// |<q(x)|state>|^2 via the Hermite ladder; grid limited to the
// truncation-faithful window |x| <= L/2 + 4.
std::vector<std::array<double, 2>> position_density(const StateVector& state, double x_min,
                                                    double x_max, double step,
                                                    double faithful_half_width);
double position_density_at(const StateVector& state, double x);

struct DetectorArray {
    std::vector<double> centers;
    double half_width;

    DetectorArray(std::vector<double> centers, double half_width);  // windows must be disjoint
};

// x_n = n pi / 5 for n = 0, +-1, +-2, +-3 with half width 0.2.
DetectorArray default_detector_array();

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-8);

// Integral of the density over the union of detector windows.
double detector_click_probability(const std::function<double(double)>& density,
                                  const DetectorArray& detectors);

// Analytic rotated-cat densities at t = pi/2:
//   plus:  (2/sqrt(pi)) cos^2[(Lx - alpha)/2] e^{-x^2} / norm
//   minus: same with sin^2
double analytic_cat_density_plus(double separation, double alpha, double x);
double analytic_cat_density_minus(double separation, double alpha, double x);

// Single-qubit phase game: sigma_1 statistics identify alpha in {0, pi}
// deterministically; generic alpha is estimated from the shot average, with
// a sigma_2-direction round resolving the sign of sin(alpha).
ExperimentResult qubit_phase_game(const std::vector<double>& alpha_choices, long shots,
                                  std::uint64_t seed);

// Full cat interference run: build, rotate to t, reconstruct the density
// from the Fock state, and integrate over the detector array.
ExperimentResult cat_interference(const CatConfig& config, double t,
                                  const DetectorArray& detectors);

// Click sampling of an x = 0 detector under the alpha-rotated density;
// inverts the click frequency to an estimate of cos(alpha).
ExperimentResult cat_phase_estimation(double alpha, long shots, std::uint64_t seed,
                                      double separation = 10.0, double detector_half_width = 0.2);

// Uniform double in [0, 1) from the top 53 bits, identical across platforms.
double uniform01(std::mt19937_64& rng);

// Seeded inverse-CDF sampler over a tabulated density (1e-4 resolution grid).
class DensitySampler {
  public:
    DensitySampler(const std::function<double(double)>& density, double x_min, double x_max,
                   double resolution = 1e-4);
    double sample(std::mt19937_64& rng) const;
    double total_mass() const { return total_; }

  private:
    double x_min_, resolution_;
    std::vector<double> cdf_;
    double total_;
};

}  // namespace qps

#endif
