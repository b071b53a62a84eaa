#include "qps/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>

namespace qps {

namespace {

constexpr double kRootPi = 1.7724538509055160273;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    const std::time_t secs = ms / 1000;
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&secs));
    return std::string(buf) + "." + std::to_string(ms % 1000) + "Z";
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

void ExperimentResult::set_output(const std::string& key, double value, double tolerance) {
    outputs[key] = Json{{"value", value}, {"tolerance", tolerance}};
}

Json ExperimentResult::to_json() const {
    Json j;
    j["experiment"] = name;
    j["timestamp"] = iso_timestamp();
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    if (!series.empty()) {
        Json s;
        for (const auto& [key, data] : series) {
            Json rows = Json::array();
            for (const auto& row : data)
                rows.push_back(Json::array({row[0], row[1]}));
            s[key] = rows;
        }
        j["series"] = s;
    }
    return j;
}

CatConfig::CatConfig(double l, double alpha, int cutoff)
    : separation(l), relative_phase(alpha), fock_cutoff(cutoff) {
    if (!(l > 0)) throw std::invalid_argument("CatConfig: separation must be positive");
    if (double(cutoff) <= l * l / 4.0 + 1.5 * l + 16.0)
        throw std::invalid_argument(
            "CatConfig: cutoff too small for faithful truncation at |z| = L/2");
}

StateVector cat_state(const CatConfig& config) {
    const FockSpace space(config.fock_cutoff);
    const double l = config.separation;
    const Vector minus = coherent_state(space, CoherentAmplitude::from_qp(-l / 2, 0)).amplitudes();
    const Vector plus = coherent_state(space, CoherentAmplitude::from_qp(l / 2, 0)).amplitudes();
    return StateVector::normalized(space.space(),
                                   minus + std::polar(1.0, config.relative_phase) * plus);
}

double cat_branch_overlap_sq(double separation) {
    return std::exp(-0.5 * separation * separation);
}

StateVector rotate_cat(const StateVector& state, double t) {
    Vector v = state.amplitudes();
    for (int n = 0; n < v.size(); ++n)
        v(n) *= std::polar(1.0, -t * (n + 0.5));
    return {state.space(), std::move(v), state.is_normalized()};
}

double position_density_at(const StateVector& state, double x) {
    return std::norm(fock_wavefunction(state, x));
}

std::vector<std::array<double, 2>> position_density(const StateVector& state, double x_min,
                                                    double x_max, double step,
                                                    double faithful_half_width) {
    if (std::max(std::abs(x_min), std::abs(x_max)) > faithful_half_width)
        throw std::invalid_argument("position_density: grid leaves the truncation-faithful window");
    std::vector<std::array<double, 2>> out;
    for (double x = x_min; x <= x_max + 0.5 * step; x += step)
        out.push_back({x, position_density_at(state, x)});
    return out;
}

DetectorArray::DetectorArray(std::vector<double> c, double hw)
    : centers(std::move(c)), half_width(hw) {
    if (!(hw > 0)) throw std::invalid_argument("DetectorArray: half width must be positive");
    std::vector<double> sorted = centers;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] < 2 * hw - 1e-12)  // touching windows are fine
            throw std::invalid_argument("DetectorArray: windows overlap");
}

DetectorArray default_detector_array() {
    std::vector<double> centers;
    for (int n = -3; n <= 3; ++n)
        centers.push_back(n * std::numbers::pi / 5.0);
    return {std::move(centers), 0.2};
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double detector_click_probability(const std::function<double(double)>& density,
                                  const DetectorArray& detectors) {
    double total = 0;
    for (double c : detectors.centers)
        total += adaptive_simpson(density, c - detectors.half_width, c + detectors.half_width,
                                  1e-8 / double(detectors.centers.size()));
    return total;
}

double analytic_cat_density_plus(double separation, double alpha, double x) {
    const double l = separation;
    const double c = std::cos(0.5 * (l * x - alpha));
    const double norm = 1.0 + std::cos(alpha) * std::exp(-l * l / 4.0);
    return 2.0 / kRootPi * c * c * std::exp(-x * x) / norm;
}

double analytic_cat_density_minus(double separation, double alpha, double x) {
    const double l = separation;
    const double s = std::sin(0.5 * (l * x - alpha));
    const double norm = 1.0 - std::cos(alpha) * std::exp(-l * l / 4.0);
    return 2.0 / kRootPi * s * s * std::exp(-x * x) / norm;
}

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

DensitySampler::DensitySampler(const std::function<double(double)>& density, double x_min,
                               double x_max, double resolution)
    : x_min_(x_min), resolution_(resolution) {
    const auto n = size_t((x_max - x_min) / resolution) + 1;
    cdf_.resize(n);
    double acc = 0;
    double prev = density(x_min);
    cdf_[0] = 0;
    for (size_t i = 1; i < n; ++i) {
        const double x = x_min + i * resolution;
        const double cur = density(x);
        acc += 0.5 * (prev + cur) * resolution;
        cdf_[i] = acc;
        prev = cur;
    }
    total_ = acc;
}

double DensitySampler::sample(std::mt19937_64& rng) const {
    const double target = uniform01(rng) * total_;
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), target);
    const size_t hi = std::min(size_t(it - cdf_.begin()), cdf_.size() - 1);
    if (hi == 0) return x_min_;
    const double c0 = cdf_[hi - 1], c1 = cdf_[hi];
    const double frac = c1 > c0 ? (target - c0) / (c1 - c0) : 0.5;
    return x_min_ + (double(hi - 1) + frac) * resolution_;
}

ExperimentResult qubit_phase_game(const std::vector<double>& alpha_choices, long shots,
                                  std::uint64_t seed) {
    if (alpha_choices.empty())
        throw std::invalid_argument("qubit_phase_game: empty choice set");
    if (shots < 1) throw std::invalid_argument("qubit_phase_game: shots must be >= 1");

    ExperimentResult result;
    result.name = "qubit_phase_game";
    result.inputs = Json{{"shots", shots}, {"seed", seed}, {"alpha_choices", alpha_choices}};

    std::mt19937_64 rng(seed);
    Json per_alpha = Json::array();
    for (double alpha : alpha_choices) {
        // P(sigma_1 = +1) on (|u0> + e^{i alpha} |u1>)/sqrt(2)
        const double p_plus = 0.5 * (1.0 + std::cos(alpha));
        long plus = 0;
        for (long s = 0; s < shots; ++s)
            if (uniform01(rng) < p_plus) ++plus;
        const double mean = (2.0 * plus - shots) / double(shots);
        const double stderr_mean =
            std::sqrt(std::max(0.0, 1.0 - mean * mean) / double(shots));

        // disambiguation round along sigma_2: <sigma_2> = sin(alpha)
        const double p2 = 0.5 * (1.0 + std::sin(alpha));
        long plus2 = 0;
        for (long s = 0; s < shots; ++s)
            if (uniform01(rng) < p2) ++plus2;
        const double mean2 = (2.0 * plus2 - shots) / double(shots);

        const bool deterministic =
            std::abs(std::sin(alpha)) < 1e-12;  // alpha in {0, pi}: single-shot certainty
        per_alpha.push_back(Json{{"alpha", alpha},
                                 {"sigma1_mean", mean},
                                 {"sigma1_stderr", stderr_mean},
                                 {"cos_alpha", std::cos(alpha)},
                                 {"sigma2_mean", mean2},
                                 {"sin_alpha_sign", mean2 >= 0 ? 1 : -1},
                                 {"deterministic", deterministic}});
    }
    result.outputs["runs"] = per_alpha;
    return result;
}

ExperimentResult cat_interference(const CatConfig& config, double t,
                                  const DetectorArray& detectors) {
    ExperimentResult result;
    result.name = "cat_interference";
    result.inputs = Json{{"L", config.separation},
                         {"alpha", config.relative_phase},
                         {"t", t},
                         {"cutoff", config.fock_cutoff},
                         {"detector_half_width", detectors.half_width},
                         {"detector_centers", detectors.centers}};

    const StateVector rotated = rotate_cat(cat_state(config), t);
    const double click = detector_click_probability(
        [&](double x) { return position_density_at(rotated, x); }, detectors);
    result.set_output("click_probability", click, 0.02);
    result.set_output("branch_overlap_sq", cat_branch_overlap_sq(config.separation), 1e-20);

    std::vector<std::array<double, 2>> dens;
    for (double x = -4.0; x <= 4.0 + 1e-9; x += 0.01)
        dens.push_back({x, position_density_at(rotated, x)});
    result.series.emplace_back("x,density", std::move(dens));
    return result;
}

ExperimentResult cat_phase_estimation(double alpha, long shots, std::uint64_t seed,
                                      double separation, double detector_half_width) {
    if (shots < 1) throw std::invalid_argument("cat_phase_estimation: shots must be >= 1");
    ExperimentResult result;
    result.name = "cat_phase_estimation";
    result.inputs = Json{{"alpha", alpha},
                         {"shots", shots},
                         {"seed", seed},
                         {"L", separation},
                         {"detector_half_width", detector_half_width}};

    const double l = separation;
    auto density = [&](double x) { return analytic_cat_density_plus(l, alpha, x); };
    DensitySampler sampler(density, -6.0, 6.0);
    std::mt19937_64 rng(seed);
    long clicks = 0;
    for (long s = 0; s < shots; ++s)
        if (std::abs(sampler.sample(rng)) <= detector_half_width) ++clicks;
    const double freq = double(clicks) / double(shots);

    // q(alpha) = (m0 + mc cos(alpha)) / (2 Z): invert the window mass for cos(alpha)
    const double norm = 1.0 + std::cos(alpha) * std::exp(-l * l / 4.0);
    auto envelope = [](double x) { return 2.0 / kRootPi * std::exp(-x * x); };
    const double m0 =
        adaptive_simpson(envelope, -detector_half_width, detector_half_width, 1e-10);
    const double mc = adaptive_simpson(
        [&](double x) { return envelope(x) * std::cos(l * x); }, -detector_half_width,
        detector_half_width, 1e-10);
    const double cos_est = (2.0 * freq * norm - m0) / mc;
    const double freq_stderr = std::sqrt(std::max(freq * (1.0 - freq), 1e-12) / double(shots));
    const double cos_stderr = 2.0 * norm * freq_stderr / std::abs(mc);

    result.set_output("click_frequency", freq, freq_stderr);
    result.set_output("cos_alpha_estimate", cos_est, 3.0 * cos_stderr);
    result.set_output("cos_alpha_true", std::cos(alpha), 0.0);
    return result;
}

}  // namespace qps
