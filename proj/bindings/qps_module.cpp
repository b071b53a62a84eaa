#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qps/experiments.hpp"
#include "qps/geometry.hpp"
#include "qps/kinematics.hpp"
#include "qps/measurement.hpp"
#include "qps/modular.hpp"
#include "qps/oscillator.hpp"
#include "qps/weyl_wigner.hpp"

namespace py = pybind11;
using namespace qps;

namespace {

StateVector make_state(const Vector& amps, bool normalize) {
    const FiniteSpace space(int(amps.size()));
    return normalize ? StateVector::normalized(space, amps) : StateVector(space, amps, false);
}

OperatorMatrix make_op(const Matrix& m) {
    return {FiniteSpace(int(m.rows())), m};
}

}  // namespace

PYBIND11_MODULE(_qps, m) {
    m.doc() = "finite quantum phase-space toolkit";

    // ---- kinematics ----
    m.def("position_translation_op",
          [](int n) { return position_translation_op(FiniteSpace(n)).entries(); },
          py::arg("dim"), "cyclic shift V with V|u_k> = |u_{k-1}>");
    m.def("momentum_phase_op",
          [](int n) { return momentum_phase_op(FiniteSpace(n)).entries(); }, py::arg("dim"),
          "clock operator diag(e^{2 pi i k/N})");
    m.def("finite_fourier", [](int n) { return finite_fourier(FiniteSpace(n)).entries(); },
          py::arg("dim"), "discrete Fourier operator, +i convention");
    m.def("weyl_phase", [](int n, long j, long k) { return weyl_phase(FiniteSpace(n), j, k); },
          py::arg("dim"), py::arg("j"), py::arg("k"));
    m.def("weyl_relation_residual",
          [](int n, long j, long k) { return weyl_relation_residual(FiniteSpace(n), j, k); },
          py::arg("dim"), py::arg("j"), py::arg("k"));
    m.def("expectation_and_uncertainty",
          [](const Matrix& a, const Vector& psi) {
              const Moments mo = expectation_and_uncertainty(make_op(a), make_state(psi, true));
              return py::make_tuple(mo.mean, mo.delta);
          },
          py::arg("op"), py::arg("psi"));

    // ---- Weyl-Wigner ----
    m.def("ww_point_operator",
          [](int n, int j, int k) { return ww_point_operator(FiniteSpace(n), j, k).entries(); },
          py::arg("dim"), py::arg("j"), py::arg("k"));
    m.def("ww_transform",
          [](const Matrix& a) {
              const WWBasis basis(FiniteSpace(int(a.rows())));
              return ww_transform(make_op(a), basis).values;
          },
          py::arg("op"), "grid of tr(Delta'(j,k) A), row-major in j");
    m.def("ww_inverse",
          [](const Matrix& values) {
              const FiniteSpace space(int(values.rows()));
              const WWBasis basis(space);
              return ww_inverse({space, values, false}, basis).entries();
          },
          py::arg("values"));
    m.def("wigner_negativity",
          [](const Matrix& rho) {
              return wigner_negativity(make_op(rho), WWBasis(FiniteSpace(int(rho.rows()))));
          },
          py::arg("rho"));
    m.def("classical_limit_check",
          [](const std::array<double, 6>& f, const std::array<double, 6>& g, double half_width,
             int points, int cutoff) {
              const QuadraticObservable fo{f[0], f[1], f[2], f[3], f[4], f[5]};
              const QuadraticObservable go{g[0], g[1], g[2], g[3], g[4], g[5]};
              const ClassicalLimitReport rep =
                  classical_limit_check(fo, go, {half_width, points}, cutoff);
              return py::make_tuple(rep.moyal, rep.poisson, rep.max_diff);
          },
          py::arg("f"), py::arg("g"), py::arg("half_width") = 3.0, py::arg("points") = 7,
          py::arg("cutoff") = 64,
          "coefficients ordered (c_qq, c_pp, c_qp, c_q, c_p, c_0)");

    // ---- oscillator ----
    m.def("ladder_ops",
          [](int cutoff) {
              const LadderOps l = ladder_ops(FockSpace(cutoff));
              return py::make_tuple(l.a.entries(), l.a_dagger.entries(), l.n_op.entries());
          },
          py::arg("cutoff"));
    m.def("fractional_fourier",
          [](int cutoff, double theta) {
              return fractional_fourier(FockSpace(cutoff), theta).entries();
          },
          py::arg("cutoff"), py::arg("theta"));
    m.def("displacement",
          [](int cutoff, Complex z) {
              return displacement(FockSpace(cutoff), CoherentAmplitude{z}).entries();
          },
          py::arg("cutoff"), py::arg("z"));
    m.def("coherent_state",
          [](int cutoff, Complex z) {
              return coherent_state(FockSpace(cutoff), CoherentAmplitude{z}).amplitudes();
          },
          py::arg("cutoff"), py::arg("z"));
    m.def("coherent_overlap",
          [](Complex z1, Complex z2) {
              return coherent_overlap(CoherentAmplitude{z1}, CoherentAmplitude{z2});
          },
          py::arg("z1"), py::arg("z2"));
    m.def("hermite_position_amplitude", &hermite_position_amplitude, py::arg("n"), py::arg("x"));
    m.def("scale_operator",
          [](int cutoff, double xi) { return scale_operator(FockSpace(cutoff), xi).entries(); },
          py::arg("cutoff"), py::arg("xi"));
    m.def("sl2_generators",
          [](int cutoff) {
              const Sl2Set s = sl2_generators(FockSpace(cutoff));
              return py::make_tuple(s.h0.matrix.entries(), s.g.matrix.entries(),
                                    s.k.matrix.entries());
          },
          py::arg("cutoff"));

    // ---- measurement ----
    m.def("weak_value",
          [](const Vector& alpha, const Vector& beta, const Matrix& obs, double floor) {
              return weak_value(
                  {make_state(alpha, true), make_state(beta, true), make_op(obs)}, floor);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("observable"),
          py::arg("overlap_floor") = 1e-10);
    m.def("von_neumann_couple",
          [](const Vector& system, const Matrix& obs, const Vector& pointer, const Matrix& gen,
             double strength) {
              return von_neumann_couple(
                         make_state(system, true), make_op(obs),
                         {make_state(pointer, true), make_op(gen), strength})
                  .amplitudes();
          },
          py::arg("system"), py::arg("observable"), py::arg("pointer"), py::arg("generator"),
          py::arg("strength"));
    m.def("post_select",
          [](const Vector& joint, const Vector& beta) {
              const PostSelection s = post_select(make_state(joint, false), make_state(beta, true));
              return py::make_tuple(s.pointer.amplitudes(), s.success_probability);
          },
          py::arg("joint"), py::arg("beta"));
    m.def("coherent_pointer_shift",
          [](Complex z, Complex ow, double eps, int cutoff, bool matched) {
              const CoherentShiftReport r =
                  coherent_pointer_shift(CoherentAmplitude{z}, ow, eps, FockSpace(cutoff), matched);
              py::dict d;
              auto pack = [](const ShiftReport& s) {
                  py::dict e;
                  e["predicted"] = s.predicted;
                  e["simulated"] = s.simulated;
                  e["order_residual"] = s.order_residual;
                  return e;
              };
              d["a"] = pack(r.a_shift);
              d["q"] = pack(r.q_shift);
              d["p"] = pack(r.p_shift);
              return d;
          },
          py::arg("z"), py::arg("weak_value"), py::arg("epsilon"), py::arg("cutoff") = 64,
          py::arg("matched_realization") = true);
    m.def("dso_cuo_decompose",
          [](const Matrix& c, const Vector& psi) {
              const DsoCuoParts p = dso_cuo_decompose(make_op(c), make_state(psi, true));
              return py::make_tuple(p.deterministic.entries(), p.uncertain.entries());
          },
          py::arg("c"), py::arg("psi"));
    m.def("operator_space_dims",
          [](const Vector& psi) {
              const OperatorSpaceDims d = measure_operator_space_dims(make_state(psi, true));
              return py::make_tuple(d.dso, d.cuo);
          },
          py::arg("psi"));

    // ---- geometry ----
    m.def("fubini_study_step",
          [](const Vector& psi, const Vector& dpsi) {
              return fubini_study_step(make_state(psi, true), dpsi);
          },
          py::arg("psi"), py::arg("dpsi"));
    m.def("pancharatnam_phase",
          [](const Vector& a, const Vector& b) {
              return pancharatnam_phase(RayPoint(make_state(a, true)),
                                        RayPoint(make_state(b, true)));
          },
          py::arg("a0"), py::arg("a1"));
    m.def("bargmann_invariant",
          [](const Vector& a0, const Vector& a1, const Vector& b) {
              return bargmann_invariant({RayPoint(make_state(a0, true)),
                                         RayPoint(make_state(a1, true)),
                                         RayPoint(make_state(b, true))});
          },
          py::arg("a0"), py::arg("a1"), py::arg("b"));
    m.def("solid_angle",
          [](const Vector& a0, const Vector& a1, const Vector& b) {
              return solid_angle({RayPoint(make_state(a0, true)), RayPoint(make_state(a1, true)),
                                  RayPoint(make_state(b, true))});
          },
          py::arg("a0"), py::arg("a1"), py::arg("b"));
    m.def("speed_equals_uncertainty",
          [](const Matrix& h, const Vector& psi, double dt) {
              const SpeedCheck s = speed_equals_uncertainty(make_op(h), make_state(psi, true), dt);
              return py::make_tuple(s.lhs, s.rhs);
          },
          py::arg("h"), py::arg("psi"), py::arg("dt") = 1e-5);

    // ---- modular ----
    m.def("crt_relabel_check",
          [](int a, int b) {
              const CrtReport r = crt_relabel_check(a, b);
              py::dict d;
              d["orbit_length"] = r.orbit_length;
              d["single_line_cover"] = r.single_line_cover;
              d["conjugation_residual"] =
                  r.conjugation_residual ? py::object(py::float_(*r.conjugation_residual))
                                         : py::object(py::none());
              return d;
          },
          py::arg("n_a"), py::arg("n_b"));
    m.def("az_state",
          [](int a, int b, int j, int sigma) {
              return az_state(CrtFactorization(a, b), j, sigma).amplitudes();
          },
          py::arg("n_a"), py::arg("n_b"), py::arg("j"), py::arg("sigma"));
    m.def("modular_spin_ops",
          [](int sites, double l) {
              const RingSpace ring(sites, l);
              const ModularSpinOps s = modular_spin_ops(ring);
              return py::make_tuple(s.sigma1.entries(), s.sigma2.entries(), s.sigma3.entries());
          },
          py::arg("sites"), py::arg("half_circumference"));
    m.def("restrict_to_slits",
          [](const Matrix& op, int sites, double l) {
              const RingSpace ring(sites, l);
              return Matrix(restrict_to_slits(make_op(op), ring));
          },
          py::arg("op"), py::arg("sites"), py::arg("half_circumference"));

    // ---- experiments ----
    m.def("cat_state",
          [](double l, double alpha, int cutoff) {
              return cat_state(CatConfig(l, alpha, cutoff)).amplitudes();
          },
          py::arg("separation"), py::arg("relative_phase"), py::arg("cutoff") = 256);
    m.def("rotate_cat",
          [](const Vector& state, double t) {
              return rotate_cat(make_state(state, false), t).amplitudes();
          },
          py::arg("state"), py::arg("t"));
    m.def("position_density_at",
          [](const Vector& state, double x) {
              return position_density_at(make_state(state, false), x);
          },
          py::arg("state"), py::arg("x"));
    m.def("cat_click_probability",
          [](double l, double alpha, double t, int cutoff) {
              const ExperimentResult r =
                  cat_interference(CatConfig(l, alpha, cutoff), t, default_detector_array());
              return r.outputs["click_probability"]["value"].get<double>();
          },
          py::arg("separation"), py::arg("relative_phase"), py::arg("t"),
          py::arg("cutoff") = 256);
    m.def("qubit_phase_game",
          [](double alpha, long shots, std::uint64_t seed) {
              const ExperimentResult r = qubit_phase_game({alpha}, shots, seed);
              const auto& run = r.outputs["runs"][0];
              return py::make_tuple(run["sigma1_mean"].get<double>(),
                                    run["sigma1_stderr"].get<double>());
          },
          py::arg("alpha"), py::arg("shots"), py::arg("seed") = 0);
}
