#include "qps/measurement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "qps/kinematics.hpp"

namespace qps {

namespace {

Complex expect(const Matrix& op, const Vector& psi) {
    return psi.dot(op * psi);
}

}  // namespace

PrePostPair::PrePostPair(StateVector pre, StateVector post, OperatorMatrix obs)
    : alpha(std::move(pre)), beta(std::move(post)), observable(std::move(obs)) {
    require_same_space(alpha.space(), beta.space(), "PrePostPair");
    require_same_space(alpha.space(), observable.space(), "PrePostPair");
    if (!alpha.is_normalized() || !beta.is_normalized())
        throw std::invalid_argument("PrePostPair: states must be normalized");
    if (!observable.is_hermitian())
        throw std::invalid_argument("PrePostPair: observable must be Hermitian");
}

Complex weak_value(const PrePostPair& pair, double overlap_floor) {
    const Complex denom = inner(pair.beta, pair.alpha);
    if (std::abs(denom) <= overlap_floor)
        throw OrthogonalPostSelection("weak_value: |<beta|alpha>| below floor, weak value diverges");
    const Complex num = pair.beta.amplitudes().dot(pair.observable.entries() * pair.alpha.amplitudes());
    return num / denom;
}

PointerModel::PointerModel(StateVector init, OperatorMatrix generator, double s)
    : initial(std::move(init)), coupling_generator(std::move(generator)), strength(s) {
    require_same_space(initial.space(), coupling_generator.space(), "PointerModel");
    if (!initial.is_normalized())
        throw std::invalid_argument("PointerModel: initial state must be normalized");
    if (!coupling_generator.is_hermitian(1e-10))
        throw std::invalid_argument("PointerModel: coupling generator must be Hermitian");
    if (!std::isfinite(s))
        throw std::invalid_argument("PointerModel: strength must be finite");
}

StateVector von_neumann_couple(const StateVector& system, const OperatorMatrix& observable,
                               const PointerModel& pointer) {
    require_same_space(system.space(), observable.space(), "von_neumann_couple");
    const Matrix coupling = kron(observable.entries(), pointer.coupling_generator.entries());
    const Matrix u = unitary_exp(coupling, -pointer.strength);
    const Vector joint = u * kron(system.amplitudes(), pointer.initial.amplitudes());
    return {FiniteSpace(system.dim() * pointer.initial.dim()), joint,
            system.is_normalized() && pointer.initial.is_normalized()};
}

PostSelection post_select(const StateVector& joint, const StateVector& beta) {
    const int ns = beta.dim();
    if (joint.dim() % ns != 0)
        throw DimensionMismatch("post_select: joint dim is not a multiple of system dim");
    const int nm = joint.dim() / ns;
    Vector pointer = Vector::Zero(nm);
    for (int s = 0; s < ns; ++s)
        pointer += std::conj(beta[s]) * joint.amplitudes().segment(s * nm, nm);
    const double prob = pointer.squaredNorm();
    return {StateVector(FiniteSpace(nm), std::move(pointer), false), prob};
}

double post_select_first_order_residual(const PrePostPair& pair, const PointerModel& pointer) {
    const StateVector joint = von_neumann_couple(pair.alpha, pair.observable, pointer);
    const PostSelection sel = post_select(joint, pair.beta);
    const Complex ba = inner(pair.beta, pair.alpha);
    const Complex ow = weak_value(pair);
    const Vector first_order =
        ba * (pointer.initial.amplitudes() -
              Complex(0, 1) * pointer.strength * ow *
                  (pointer.coupling_generator.entries() * pointer.initial.amplitudes()));
    return (sel.pointer.amplitudes() - first_order).norm();
}

Complex jozsa_prediction(const OperatorMatrix& m, const PointerModel& pointer, Complex weak_val) {
    require_same_space(m.space(), pointer.initial.space(), "jozsa_prediction");
    const Vector& phi = pointer.initial.amplitudes();
    const Matrix& r = pointer.coupling_generator.entries();
    const Matrix& mm = m.entries();
    const Complex anti = expect(mm * r + r * mm, phi);
    const Complex comm = expect(mm * r - r * mm, phi);
    const Complex mr2 = 2.0 * expect(r, phi) * expect(mm, phi);
    return pointer.strength *
           (weak_val.imag() * (anti - mr2) - Complex(0, 1) * weak_val.real() * comm);
}

ShiftReport jozsa_shift(const OperatorMatrix& m, const PointerModel& pointer,
                        const PrePostPair& system) {
    const Complex ow = weak_value(system);
    const Complex predicted = jozsa_prediction(m, pointer, ow);

    const StateVector joint = von_neumann_couple(system.alpha, system.observable, pointer);
    const PostSelection sel = post_select(joint, system.beta);
    if (sel.success_probability <= 0)
        throw OrthogonalPostSelection("jozsa_shift: post-selection annihilated the state");
    const Vector final_pointer = sel.pointer.amplitudes() / std::sqrt(sel.success_probability);
    const Complex simulated =
        expect(m.entries(), final_pointer) - expect(m.entries(), pointer.initial.amplitudes());

    return {predicted, simulated, pointer.strength, std::abs(predicted - simulated),
            std::abs(pointer.strength) <= 0.1};
}

ShiftReport jozsa_shift(const OperatorMatrix& m, const PointerModel& pointer, Complex weak_val) {
    return jozsa_shift(m, pointer, realize_weak_value(weak_val));
}

PrePostPair realize_weak_value(Complex weak_val) {
    const double theta = 2.0 * std::atan(std::abs(weak_val));
    const double phi = std::arg(weak_val);
    const FiniteSpace qubit(2);
    Vector beta(2);
    // bra <beta| carries e^{+i phi} on <u1|, so O_w = tan(theta/2) e^{i phi}
    beta << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), -phi);
    Matrix sx(2, 2);
    sx << 0, 1, 1, 0;
    return {StateVector::basis_state(qubit, 0), StateVector(qubit, beta, true),
            OperatorMatrix(qubit, sx)};
}

PrePostPair realize_weak_value_matched(Complex weak_val) {
    const Eigen::Vector3d spectrum(1.0, -1.0, 2.0);
    Eigen::Matrix3cd vander;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            vander(r, c) = std::pow(spectrum(c), r);
    const Eigen::Vector3cd moments(1.0, weak_val, weak_val * weak_val);
    const Eigen::Vector3cd t = vander.colPivHouseholderQr().solve(moments);

    const FiniteSpace space(3);
    Vector alpha = Vector::Constant(3, 1.0 / std::sqrt(3.0));
    Vector beta(3);
    for (int i = 0; i < 3; ++i)
        beta(i) = std::conj(t(i) / alpha(i));
    Matrix obs = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
        obs(i, i) = spectrum(i);
    return {StateVector(space, alpha, true), StateVector::normalized(space, beta),
            OperatorMatrix(space, obs)};
}

CoherentShiftReport coherent_pointer_shift(const CoherentAmplitude& z, Complex weak_val,
                                           double epsilon, FockSpace space,
                                           bool matched_realization) {
    require_faithful(z, space, "coherent_pointer_shift");
    const LadderOps l = ladder_ops(space);
    const PointerModel pointer{
        StateVector::normalized(space.space(), coherent_state(space, z).amplitudes()),
        l.n_op, epsilon};
    const PrePostPair system =
        matched_realization ? realize_weak_value_matched(weak_val) : realize_weak_value(weak_val);

    const StateVector joint = von_neumann_couple(system.alpha, system.observable, pointer);
    const PostSelection sel = post_select(joint, system.beta);
    if (sel.success_probability <= 0)
        throw OrthogonalPostSelection("coherent_pointer_shift: post-selection annihilated the state");
    const Vector final_pointer = sel.pointer.amplitudes() / std::sqrt(sel.success_probability);
    const Vector& phi = pointer.initial.amplitudes();

    const Matrix q = position_op(space).entries();
    const Matrix p = momentum_op(space).entries();

    const Complex da_pred = Complex(0, -1) * epsilon * weak_val * z.z;
    const double root2 = std::sqrt(2.0);
    const Complex dq_pred =
        epsilon * root2 * (weak_val.imag() * z.z.real() + weak_val.real() * z.z.imag());
    const Complex dp_pred =
        epsilon * root2 * (weak_val.imag() * z.z.imag() - weak_val.real() * z.z.real());

    const Complex da_sim = expect(l.a.entries(), final_pointer) - expect(l.a.entries(), phi);
    const Complex dq_sim = expect(q, final_pointer) - expect(q, phi);
    const Complex dp_sim = expect(p, final_pointer) - expect(p, phi);

    const bool weak = std::abs(epsilon) <= 0.1;
    return {{da_pred, da_sim, epsilon, std::abs(da_pred - da_sim), weak},
            {dq_pred, dq_sim, epsilon, std::abs(dq_pred - dq_sim), weak},
            {dp_pred, dp_sim, epsilon, std::abs(dp_pred - dp_sim), weak}};
}

EnsembleShift ensemble_position_shift(const StateVector& system, const OperatorMatrix& observable,
                                      const StateVector& pointer_initial, double lambda) {
    require_same_space(system.space(), observable.space(), "ensemble_position_shift");
    if (!observable.is_hermitian(1e-10))
        throw std::invalid_argument("ensemble_position_shift: observable must be Hermitian");
    const FockSpace pspace(pointer_initial.dim());
    const Matrix q = position_op(pspace).entries();
    const Matrix p = momentum_op(pspace).entries();

    Eigen::SelfAdjointEigenSolver<Matrix> es(observable.entries());
    double traced = 0.0;
    double mean_o = 0.0;
    for (int j = 0; j < observable.dim(); ++j) {
        const double oj = es.eigenvalues()(j);
        const double weight = std::norm(es.eigenvectors().col(j).dot(system.amplitudes()));
        const Vector branch = unitary_exp(p, -lambda * oj) * pointer_initial.amplitudes();
        traced += weight * expect(q, branch).real();
        mean_o += weight * oj;
    }
    const double predicted = expect(q, pointer_initial.amplitudes()).real() + lambda * mean_o;
    return {traced, predicted};
}

DsoCuoParts dso_cuo_decompose(const OperatorMatrix& c, const StateVector& psi) {
    require_same_space(c.space(), psi.space(), "dso_cuo_decompose");
    if (!c.is_hermitian(1e-10))
        throw std::invalid_argument("dso_cuo_decompose: operator must be Hermitian");
    if (!psi.is_normalized())
        throw std::invalid_argument("dso_cuo_decompose: psi must be normalized");
    const int n = c.dim();
    const Matrix proj = psi.amplitudes() * psi.amplitudes().adjoint();
    const Matrix perp = Matrix::Identity(n, n) - proj;
    const Matrix& m = c.entries();
    return {OperatorMatrix(c.space(), proj * m * proj + perp * m * perp),
            OperatorMatrix(c.space(), perp * m * proj + proj * m * perp)};
}

FluctuationReport fluctuation_theorem_check(const OperatorMatrix& a, const StateVector& psi) {
    const Moments mom = expectation_and_uncertainty(a, psi);
    const Vector apsi = a.entries() * psi.amplitudes();
    const Vector residual_vec = apsi - mom.mean * psi.amplitudes();
    double residual;
    if (mom.delta < 1e-14) {
        // psi_perp undefined; two-term form A psi = <A> psi
        residual = residual_vec.norm();
    } else {
        const Vector perp = residual_vec / residual_vec.norm();
        residual = (apsi - mom.mean * psi.amplitudes() - Complex(mom.delta) * perp).norm();
    }
    return {mom.mean.real(), mom.delta, residual};
}

OperatorSpaceDims measure_operator_space_dims(const StateVector& psi, double rank_tol) {
    const int n = psi.dim();
    std::vector<Matrix> basis;
    basis.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        Matrix e = Matrix::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix s = Matrix::Zero(n, n);
            s(i, j) = s(j, i) = 1.0 / std::sqrt(2.0);
            basis.push_back(s);
            Matrix t = Matrix::Zero(n, n);
            t(i, j) = Complex(0, 1) / std::sqrt(2.0);
            t(j, i) = Complex(0, -1) / std::sqrt(2.0);
            basis.push_back(t);
        }

    auto rank_of = [&](bool deterministic_part) {
        Eigen::MatrixXd stacked(2 * n * n, int(basis.size()));
        for (size_t b = 0; b < basis.size(); ++b) {
            const DsoCuoParts parts = dso_cuo_decompose({psi.space(), basis[b]}, psi);
            const Matrix& part =
                deterministic_part ? parts.deterministic.entries() : parts.uncertain.entries();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    stacked(2 * (i * n + j), int(b)) = part(i, j).real();
                    stacked(2 * (i * n + j) + 1, int(b)) = part(i, j).imag();
                }
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > rank_tol * sv(0)) ++rank;
        return rank;
    };
    return {rank_of(true), rank_of(false)};
}

double position_variance_rate(const StateVector& pointer, double mass,
                              const std::vector<double>& potential_coeffs) {
    if (!(mass > 0)) throw std::invalid_argument("position_variance_rate: mass must be positive");
    const FockSpace space(pointer.dim());
    const Matrix q = position_op(space).entries();
    const Matrix p = momentum_op(space).entries();
    const int d = pointer.dim();
    Matrix h = p * p / (2.0 * mass);
    Matrix qpow = Matrix::Identity(d, d);
    for (double c : potential_coeffs) {
        h += c * qpow;
        qpow = qpow * q;
    }
    const Vector& phi = pointer.amplitudes();
    auto ehrenfest = [&](const Matrix& op) {
        return (Complex(0, -1) * expect(op * h - h * op, phi)).real();
    };
    const double d_q2 = ehrenfest(q * q);
    const double d_q = ehrenfest(q);
    return d_q2 - 2.0 * expect(q, phi).real() * d_q;
}

}  // namespace qps
