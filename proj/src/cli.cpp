#include "qps/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "qps/experiments.hpp"
#include "qps/geometry.hpp"
#include "qps/kinematics.hpp"
#include "qps/measurement.hpp"
#include "qps/modular.hpp"
#include "qps/oscillator.hpp"
#include "qps/weyl_wigner.hpp"

namespace qps::cli {

namespace {

namespace fs = std::filesystem;

std::string file_stamp() {
    const auto now = std::chrono::system_clock::now();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    const std::time_t secs = ms / 1000;
    char buf[24];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%S", std::gmtime(&secs));
    char out[32];
    std::snprintf(out, sizeof out, "%s%03d", buf, int(ms % 1000));
    return out;
}

std::string iso_stamp() {
    const auto now = std::chrono::system_clock::now();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    const std::time_t secs = ms / 1000;
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&secs));
    return std::string(buf) + "." + std::to_string(ms % 1000) + "Z";
}

void reject_unknown_keys(const Json& params, const std::set<std::string>& allowed,
                         const std::string& command) {
    for (const auto& [key, value] : params.items())
        if (!allowed.count(key))
            throw std::invalid_argument("unknown parameter '" + key + "' for command '" + command +
                                        "'");
}

double get_num(const Json& params, const std::string& key, double fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number())
        throw std::invalid_argument("parameter '" + key + "' must be a number");
    return params[key].get<double>();
}

long get_int(const Json& params, const std::string& key, long fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer())
        throw std::invalid_argument("parameter '" + key + "' must be an integer");
    return params[key].get<long>();
}

std::string get_str(const Json& params, const std::string& key, const std::string& fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_string())
        throw std::invalid_argument("parameter '" + key + "' must be a string");
    return params[key].get<std::string>();
}

Json shift_json(const ShiftReport& r) {
    return Json{{"predicted_re", r.predicted.real()},   {"predicted_im", r.predicted.imag()},
                {"simulated_re", r.simulated.real()},   {"simulated_im", r.simulated.imag()},
                {"epsilon", r.epsilon},                 {"order_residual", r.order_residual}};
}

struct Emitter {
    fs::path dir;
    std::string stamp;
    bool gnuplot;

    fs::path write_json(const std::string& command, const Json& doc) const {
        fs::create_directories(dir);
        const fs::path path = dir / (command + "_" + stamp + ".json");
        std::ofstream os(path);
        os << doc.dump(2) << '\n';
        return path;
    }

    fs::path write_csv(const std::string& base, const std::string& content) const {
        fs::create_directories(dir);
        const fs::path path = dir / (base + "_" + stamp + ".csv");
        std::ofstream os(path);
        os << content;
        if (gnuplot) {
            std::ofstream gp(dir / (base + "_" + stamp + ".gp"));
            gp << "set datafile separator ','\n"
               << "set key autotitle columnhead\n"
               << "plot '" << path.filename().string() << "' using 1:2 with lines\n";
        }
        return path;
    }
};

// ---- command handlers ----

int run_kinematics(const Json& params, std::uint64_t seed, Json& out) {
    reject_unknown_keys(params, {"dim", "check", "samples"}, "kinematics");
    const int dim = int(get_int(params, "dim", 5));
    const std::string check = get_str(params, "check", "all");
    const long samples = get_int(params, "samples", 50);
    if (check != "weyl" && check != "fourier" && check != "completeness" && check != "all")
        throw std::invalid_argument("kinematics: check must be weyl|fourier|completeness|all");

    const FiniteSpace space(dim);
    const OperatorMatrix v = position_translation_op(space);
    const OperatorMatrix u = momentum_phase_op(space);
    const OperatorMatrix f = finite_fourier(space);
    const Matrix id = Matrix::Identity(dim, dim);

    double algebra_residual = 0;
    std::mt19937_64 rng(seed);
    if (check == "weyl" || check == "all") {
        double worst = 0;
        for (long s = 0; s < samples; ++s) {
            const long j = long(rng() % std::uint64_t(dim));
            const long k = long(rng() % std::uint64_t(dim));
            worst = std::max(worst, weyl_relation_residual(space, j, k));
        }
        out["weyl_residual"] = worst;
        algebra_residual = std::max(algebra_residual, worst);
    }
    if (check == "fourier" || check == "all") {
        const double r1 = max_abs(Matrix(f.adjoint().entries() * v.entries() * f.entries() - u.entries()));
        const double r2 = max_abs(Matrix(f.adjoint().entries() * u.entries() * f.entries() -
                                         v.adjoint().entries()));
        const double r3 = max_abs(Matrix(matrix_power(f, 4).entries() - id));
        out["fvf_residual"] = r1;
        out["fuf_residual"] = r2;
        out["f4_residual"] = r3;
        algebra_residual = std::max({algebra_residual, r1, r2, r3});
    }
    if (check == "completeness" || check == "all") {
        const double rv = max_abs(Matrix(matrix_power(v, dim).entries() - id));
        const double ru = max_abs(Matrix(matrix_power(u, dim).entries() - id));
        const double unit = std::max(
            max_abs(Matrix(v.entries().adjoint() * v.entries() - id)),
            std::max(max_abs(Matrix(u.entries().adjoint() * u.entries() - id)),
                     max_abs(Matrix(f.entries().adjoint() * f.entries() - id))));
        out["vn_residual"] = rv;
        out["un_residual"] = ru;
        out["unitarity_residual"] = unit;
        algebra_residual = std::max({algebra_residual, rv, ru, unit});
    }
    out["max_residual"] = algebra_residual;
    out["tolerance"] = kAlgebraTol;
    return algebra_residual <= kAlgebraTol ? kOk : kToleranceFailure;
}

int run_wigner(const Json& params, std::uint64_t seed, const Emitter& emit, Json& out) {
    reject_unknown_keys(params, {"dim", "state"}, "wigner");
    const int dim = int(get_int(params, "dim", 3));
    const std::string which = get_str(params, "state", "u0");
    if (dim % 2 == 0) throw std::invalid_argument("wigner: dim must be odd");

    const FiniteSpace space(dim);
    Matrix rho;
    if (which == "u0") {
        rho = Matrix::Zero(dim, dim);
        rho(0, 0) = 1.0;
    } else if (which == "v0") {
        const Vector v0 = finite_fourier(space).entries().col(0);
        rho = v0 * v0.adjoint();
    } else if (which == "maxmixed") {
        rho = Matrix::Identity(dim, dim) / double(dim);
    } else if (which == "random") {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss;
        Vector psi(dim);
        for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        psi.normalize();
        rho = psi * psi.adjoint();
    } else {
        throw std::invalid_argument("wigner: state must be u0|v0|maxmixed|random");
    }

    const WWBasis basis(space);
    const OperatorMatrix op(space, rho);
    const WignerMap map = ww_transform(op, basis);
    const double negativity = wigner_negativity(op, basis);
    const double roundtrip = max_abs(Matrix(ww_inverse(map, basis).entries() - rho));

    std::ostringstream csv;
    map.write_csv(csv);
    const auto csv_path = emit.write_csv("wigner", csv.str());

    out["negativity"] = negativity;
    out["roundtrip_residual"] = roundtrip;
    out["orthogonality_constant"] = basis.orthogonality_constant();
    out["csv"] = csv_path.filename().string();
    return roundtrip <= kSpectralTol ? kOk : kToleranceFailure;
}

int run_weak(const Json& params, Json& out) {
    reject_unknown_keys(params, {"theta", "phi", "epsilon", "z_mag", "cutoff"}, "weak");
    const double theta = get_num(params, "theta", std::numbers::pi / 2);
    const double phi = get_num(params, "phi", 0.0);
    const double eps = get_num(params, "epsilon", 1e-3);
    const double z_mag = get_num(params, "z_mag", 2.0);
    const int cutoff = int(get_int(params, "cutoff", 64));

    const Complex ow = std::polar(std::tan(0.5 * theta), phi);
    const PrePostPair pair = realize_weak_value(ow);
    const Complex computed = weak_value(pair);
    out["weak_value_re"] = computed.real();
    out["weak_value_im"] = computed.imag();
    out["weak_value_formula_residual"] = std::abs(computed - ow);

    const FockSpace space(cutoff);
    const CoherentAmplitude z{Complex(0, z_mag)};  // theta_z = pi/2
    const CoherentShiftReport rep = coherent_pointer_shift(z, ow, eps, space);
    out["a_shift"] = shift_json(rep.a_shift);
    out["q_shift"] = shift_json(rep.q_shift);
    out["p_shift"] = shift_json(rep.p_shift);

    const double bound = 5.0 * eps * eps;
    const bool ok = rep.q_shift.order_residual <= bound && rep.p_shift.order_residual <= bound;
    out["residual_bound"] = bound;
    return ok ? kOk : kToleranceFailure;
}

int run_geometry(const Json& params, std::uint64_t seed, Json& out) {
    reject_unknown_keys(params, {"triangles", "dt"}, "geometry");
    const long triangles = get_int(params, "triangles", 200);
    const double dt = get_num(params, "dt", 1e-5);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const FiniteSpace qubit(2);
    auto random_ray = [&] {
        Vector v(2);
        v << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
        return RayPoint(StateVector::normalized(qubit, v));
    };

    double worst = 0;
    for (long i = 0; i < triangles; ++i) {
        const GeodesicTriangle tri{random_ray(), random_ray(), random_ray()};
        const double theta = bargmann_invariant(tri);
        const double omega = solid_angle(tri);
        double diff = std::remainder(theta + 0.5 * omega, 2.0 * std::numbers::pi);
        worst = std::max(worst, std::abs(diff));
    }
    out["triangles"] = triangles;
    out["max_bargmann_solid_angle_residual"] = worst;

    const FiniteSpace four(4);
    Matrix h(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
    h = (h + h.adjoint()).eval();
    Vector psi(4);
    for (int i = 0; i < 4; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    const SpeedCheck sc = speed_equals_uncertainty(OperatorMatrix(four, h),
                                                   StateVector::normalized(four, psi), dt);
    out["speed_lhs"] = sc.lhs;
    out["speed_rhs"] = sc.rhs;
    out["speed_residual"] = std::abs(sc.lhs - sc.rhs);

    return worst <= 1e-9 ? kOk : kToleranceFailure;
}

int run_modular(const Json& params, const Emitter& emit, Json& out) {
    reject_unknown_keys(params, {"crt", "ring", "L", "az"}, "modular");
    int code = kOk;

    if (params.contains("crt")) {
        const auto& crt = params["crt"];
        if (!crt.is_array() || crt.size() != 2)
            throw std::invalid_argument("modular: crt must be a pair [Na, Nb]");
        const int a = crt[0].get<int>(), b = crt[1].get<int>();
        const CrtReport rep = crt_relabel_check(a, b);
        Json j{{"n_a", a},
               {"n_b", b},
               {"orbit_length", rep.orbit_length},
               {"single_line_cover", rep.single_line_cover}};
        if (rep.conjugation_residual) {
            j["conjugation_residual"] = *rep.conjugation_residual;
            if (*rep.conjugation_residual > kAlgebraTol) code = kToleranceFailure;
        }
        out["crt"] = j;

        if (params.contains("az")) {
            const auto& az = params["az"];
            if (!az.is_array() || az.size() != 2)
                throw std::invalid_argument("modular: az must be a pair [j, sigma]");
            const CrtFactorization fact(a, b);
            const int jj = az[0].get<int>(), sigma = az[1].get<int>();
            const AzResiduals res = az_state_residuals(fact, jj, sigma);
            out["az"] = Json{{"j", jj},
                             {"sigma", sigma},
                             {"v_residual", res.v_residual},
                             {"u_residual", res.u_residual}};
            std::ostringstream csv;
            write_cell_csv(az_cell_weights(fact, az_state(fact, jj, sigma)), csv);
            out["az"]["csv"] = emit.write_csv("az_cells", csv.str()).filename().string();
            if (std::max(res.v_residual, res.u_residual) > kAlgebraTol) code = kToleranceFailure;
        }
    } else if (params.contains("az")) {
        throw std::invalid_argument("modular: az requires crt");
    }

    if (params.contains("ring")) {
        const int n = params["ring"].get<int>();
        const double l = get_num(params, "L", 1.0);
        const RingSpace ring(n, l);
        const ModularSpinOps spin = modular_spin_ops(ring);
        const Eigen::Matrix2cd s1 = restrict_to_slits(spin.sigma1, ring);
        const Eigen::Matrix2cd s2 = restrict_to_slits(spin.sigma2, ring);
        const Eigen::Matrix2cd s3 = restrict_to_slits(spin.sigma3, ring);
        const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
        double worst = 0;
        const Eigen::Matrix2cd mats[3] = {s1, s2, s3};
        for (int i = 0; i < 3; ++i) {
            worst = std::max(worst, (mats[i] * mats[i] - id).cwiseAbs().maxCoeff());
            const int jn = (i + 1) % 3, kn = (i + 2) % 3;
            worst = std::max(worst, (mats[i] * mats[jn] - mats[jn] * mats[i] -
                                     Complex(0, 2) * mats[kn])
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        out["ring"] = Json{{"sites", n}, {"L", l}, {"pauli_residual", worst}};
        if (worst > kAlgebraTol) code = kToleranceFailure;
    }

    if (!params.contains("crt") && !params.contains("ring"))
        throw std::invalid_argument("modular: provide crt and/or ring");
    return code;
}

int run_cat(const Json& params, const Emitter& emit, Json& out) {
    reject_unknown_keys(params, {"L", "alpha", "t", "cutoff", "detectors", "density_csv"}, "cat");
    const double l = get_num(params, "L", 10.0);
    const double alpha = get_num(params, "alpha", 0.0);
    const double t = get_num(params, "t", std::numbers::pi / 2);
    const int cutoff = int(get_int(params, "cutoff", 256));
    const std::string det = get_str(params, "detectors", "default");
    if (det != "default")
        throw std::invalid_argument("cat: only the default detector array is available");

    const ExperimentResult res =
        cat_interference(CatConfig(l, alpha, cutoff), t, default_detector_array());
    out = res.to_json();
    if (params.contains("density_csv") && params["density_csv"].get<bool>()) {
        std::ostringstream csv;
        csv << "x,density\n";
        for (const auto& row : res.series.front().second)
            csv << row[0] << ',' << row[1] << '\n';
        out["density_csv"] = emit.write_csv("cat_density", csv.str()).filename().string();
    }
    return kOk;
}

int run_game(const Json& params, std::uint64_t seed, Json& out) {
    reject_unknown_keys(params, {"alpha", "shots"}, "game");
    const double alpha = get_num(params, "alpha", 0.0);
    const long shots = get_int(params, "shots", 100000);
    const ExperimentResult res = qubit_phase_game({alpha}, shots, seed);
    out = res.to_json();
    return kOk;
}

}  // namespace

int dispatch(const RunConfig& config, std::ostream& err, std::string* json_out) {
    Json doc;
    doc["command"] = config.command;
    doc["timestamp"] = iso_stamp();
    doc["seed"] = config.seed;
    doc["parameters"] = config.parameters;

    const Emitter emit{fs::path(config.output_dir), file_stamp(), config.gnuplot_script};
    int code;
    try {
        Json out;
        if (config.command == "kinematics")
            code = run_kinematics(config.parameters, config.seed, out);
        else if (config.command == "wigner")
            code = run_wigner(config.parameters, config.seed, emit, out);
        else if (config.command == "weak")
            code = run_weak(config.parameters, out);
        else if (config.command == "geometry")
            code = run_geometry(config.parameters, config.seed, out);
        else if (config.command == "modular")
            code = run_modular(config.parameters, emit, out);
        else if (config.command == "cat")
            code = run_cat(config.parameters, emit, out);
        else if (config.command == "game")
            code = run_game(config.parameters, config.seed, out);
        else
            throw std::invalid_argument("unknown command '" + config.command + "'");
        if (config.command == "cat" || config.command == "game")
            doc = out;  // experiment documents carry their own envelope
        else
            doc["results"] = out;
    } catch (const std::invalid_argument& e) {
        err << "qps: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::exception& e) {
        err << "qps: " << e.what() << '\n';
        return kValidationError;
    }

    const auto path = emit.write_json(config.command, doc);
    err << "qps: wrote " << path.string() << '\n';
    if (json_out) *json_out = doc.dump(2);
    if (code == kToleranceFailure) err << "qps: tolerance failure\n";
    return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite quantum phase-space toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON run configuration (wins over flags)")
        ->expected(1);

    struct FlagSet {
        CLI::App* sub;
        Json params;
        std::string out_dir = ".";
        std::uint64_t seed = 0;
        bool seed_set = false;
        bool gnuplot = false;
    };
    std::vector<std::unique_ptr<FlagSet>> sets;

    auto add_common = [&](CLI::App* sub, FlagSet* fs) {
        sub->add_option_function<std::string>(
               "--out", [fs](const std::string& v) { fs->out_dir = v; }, "output directory");
        sub->add_option_function<std::uint64_t>(
               "--seed",
               [fs](std::uint64_t v) {
                   fs->seed = v;
                   fs->seed_set = true;
               },
               "RNG seed (falls back to QPS_SEED)");
        sub->add_flag_function(
            "--gnuplot-script", [fs](std::int64_t) { fs->gnuplot = true; },
            "also write a gnuplot script next to each CSV");
    };
    auto num_opt = [&](FlagSet* fs, const char* flag, const char* key, const char* help) {
        fs->sub->add_option_function<double>(
            flag, [fs, key](double v) { fs->params[key] = v; }, help);
    };
    auto int_opt = [&](FlagSet* fs, const char* flag, const char* key, const char* help) {
        fs->sub->add_option_function<long>(
            flag, [fs, key](long v) { fs->params[key] = v; }, help);
    };
    auto str_opt = [&](FlagSet* fs, const char* flag, const char* key, const char* help) {
        fs->sub->add_option_function<std::string>(
            flag, [fs, key](const std::string& v) { fs->params[key] = v; }, help);
    };

    auto make = [&](const char* name, const char* help) {
        auto fs = std::make_unique<FlagSet>();
        fs->sub = app.add_subcommand(name, help);
        fs->sub->fallthrough();  // let --config reach the parent parser
        add_common(fs->sub, fs.get());
        sets.push_back(std::move(fs));
        return sets.back().get();
    };

    {
        auto* fs = make("kinematics", "exact Schwinger identity suite");
        int_opt(fs, "--dim", "dim", "space dimension");
        str_opt(fs, "--check", "check", "weyl|fourier|completeness|all");
        int_opt(fs, "--samples", "samples", "random (j,k) pairs for the Weyl check");
    }
    {
        auto* fs = make("wigner", "discrete Weyl-Wigner transform of a state");
        int_opt(fs, "--dim", "dim", "odd space dimension");
        str_opt(fs, "--state", "state", "u0|v0|maxmixed|random");
    }
    {
        auto* fs = make("weak", "qubit weak value and coherent-pointer shifts");
        num_opt(fs, "--theta", "theta", "post-selection polar angle");
        num_opt(fs, "--phi", "phi", "post-selection azimuth");
        num_opt(fs, "--epsilon", "epsilon", "coupling strength");
        num_opt(fs, "--z-mag", "z_mag", "coherent pointer amplitude |z|");
        int_opt(fs, "--cutoff", "cutoff", "Fock cutoff");
    }
    {
        auto* fs = make("geometry", "geometric-phase and projective-speed checks");
        int_opt(fs, "--triangles", "triangles", "random Bloch triangles");
        num_opt(fs, "--dt", "dt", "finite-difference step");
    }
    {
        auto* fs = make("modular", "modular-variable constructions");
        fs->sub
            ->add_option_function<std::vector<int>>(
                "--crt", [fs](const std::vector<int>& v) { fs->params["crt"] = v; },
                "coprime pair Na,Nb")
            ->delimiter(',');
        int_opt(fs, "--ring", "ring", "ring sites (multiple of 4)");
        num_opt(fs, "--L", "L", "half circumference");
        fs->sub
            ->add_option_function<std::vector<int>>(
                "--az", [fs](const std::vector<int>& v) { fs->params["az"] = v; },
                "AZ state indices j,sigma (with --crt)")
            ->delimiter(',');
    }
    {
        auto* fs = make("cat", "two-slit cat interference with detectors");
        num_opt(fs, "--L", "L", "branch separation");
        num_opt(fs, "--alpha", "alpha", "relative phase");
        num_opt(fs, "--t", "t", "rotation time");
        int_opt(fs, "--cutoff", "cutoff", "Fock cutoff");
        str_opt(fs, "--detectors", "detectors", "detector array (default)");
        fs->sub->add_flag_function(
            "--density-csv", [fs](std::int64_t) { fs->params["density_csv"] = true; },
            "emit the x,density series as CSV");
    }
    {
        auto* fs = make("game", "single-qubit phase game");
        num_opt(fs, "--alpha", "alpha", "Alice's phase");
        int_opt(fs, "--shots", "shots", "measurement repetitions");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "qps: " << e.get_name() << ": " << e.what() << '\n';
        return kValidationError;
    }

    FlagSet* active = nullptr;
    for (auto& fs : sets)
        if (fs->sub->parsed()) active = fs.get();
    if (!active) {
        err << "qps: no command given\n";
        return kValidationError;
    }

    RunConfig config;
    config.command = active->sub->get_name();
    config.parameters = active->params;
    config.output_dir = active->out_dir;
    config.gnuplot_script = active->gnuplot;

    if (active->seed_set) {
        config.seed = active->seed;
    } else if (const char* env = std::getenv("QPS_SEED")) {
        config.seed = std::strtoull(env, nullptr, 10);
    }

    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            err << "qps: cannot open config file " << config_path << '\n';
            return kValidationError;
        }
        Json file;
        try {
            is >> file;
        } catch (const std::exception& e) {
            err << "qps: config parse error: " << e.what() << '\n';
            return kValidationError;
        }
        for (const auto& [key, value] : file.items()) {
            if (key != "command" && key != "parameters" && key != "output_dir" && key != "seed") {
                err << "qps: unknown config key '" << key << "'\n";
                return kValidationError;
            }
        }
        if (file.contains("command") && file["command"].get<std::string>() != config.command) {
            err << "qps: config command '" << file["command"].get<std::string>()
                << "' does not match subcommand '" << config.command << "'\n";
            return kValidationError;
        }
        if (file.contains("parameters")) {
            if (!active->params.empty())
                err << "qps: note: --config parameters take precedence over command-line flags\n";
            config.parameters = file["parameters"];
        }
        if (file.contains("output_dir")) config.output_dir = file["output_dir"].get<std::string>();
        if (file.contains("seed")) {
            if (active->seed_set)
                err << "qps: note: --config seed takes precedence over --seed\n";
            config.seed = file["seed"].get<std::uint64_t>();
        }
    }

    std::string json;
    const int code = dispatch(config, err, &json);
    if (code == kOk) out << json << '\n';
    return code;
}

}  // namespace qps::cli
