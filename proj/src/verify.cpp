#include "biframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "biframe/fixtures.hpp"
#include "biframe/multiplier.hpp"
#include "biframe/tensor.hpp"
#include "biframe/version.hpp"

namespace biframe {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Scalar random_scalar(Rng& rng, Field field) {
    const double re = uniform(rng, -1.0, 1.0);
    return field == Field::Real ? Scalar(re, 0.0) : Scalar(re, uniform(rng, -1.0, 1.0));
}

Matrix random_matrix(Rng& rng, int rows, int cols, Field field) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = random_scalar(rng, field);
    return m;
}

Op random_operator(Rng& rng, int dim, Field field) {
    const Space s{dim, field};
    return Op(s, s, random_matrix(rng, dim, dim, field));
}

// I + R/(2||R||): invertible with condition number at most 3.
Op random_well_conditioned(Rng& rng, int dim, Field field) {
    Op r = random_operator(rng, dim, field);
    const double scale = op_norm(r);
    Matrix m = Matrix::Identity(dim, dim);
    if (scale > 0.0) m += r.entries / (2.0 * scale);
    const Space s{dim, field};
    return Op(s, s, std::move(m));
}

VectorFamily random_family(Rng& rng, const std::shared_ptr<const AtomSpace>& mu, int dim,
                           Field field) {
    const Space s{dim, field};
    return VectorFamily(mu, s, random_matrix(rng, dim, static_cast<int>(mu->size()), field));
}

std::shared_ptr<const AtomSpace> random_atom_space(Rng& rng, int count) {
    std::vector<Atom> atoms;
    for (int k = 0; k < count; ++k) atoms.push_back({std::to_string(k), uniform(rng, 0.5, 2.0)});
    return std::make_shared<const AtomSpace>(std::move(atoms));
}

// F = G built from the whole basis plus random extra atoms: S is Hermitian
// and strictly positive.
BiframePair random_positive_pair(Rng& rng, int dim, Field field) {
    const int extra = 2 + static_cast<int>(rng() % 3);
    auto mu = random_atom_space(rng, dim + extra);
    const Space s{dim, field};
    Matrix cols = random_matrix(rng, dim, dim + extra, field);
    cols.leftCols(dim) = Matrix::Identity(dim, dim);
    VectorFamily fam(mu, s, std::move(cols));
    return BiframePair(fam, fam);
}

SymbolFunction random_symbol(Rng& rng, const std::shared_ptr<const AtomSpace>& mu, Field field) {
    std::vector<Scalar> values;
    values.reserve(mu->size());
    for (std::size_t k = 0; k < mu->size(); ++k) values.push_back(random_scalar(rng, field));
    return SymbolFunction(mu, std::move(values));
}

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

CheckResult make_result(std::string id, std::string name, double measured, double threshold) {
    CheckResult r;
    r.id = std::move(id);
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.pass = measured <= threshold;
    return r;
}

CheckResult check_partitioned_basis() {
    const BiframePair pair = fixtures::partitioned_basis_pair();
    const BiframeOperator s = assemble(pair);
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = 2.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = 1.0;
    double dev = max_abs(s.S.entries - expected);
    dev = std::max(dev, std::abs(s.lower - 1.0));
    dev = std::max(dev, std::abs(s.upper - 2.0));
    const auto fb = single_frame_bounds(pair.F);
    const auto gb = single_frame_bounds(pair.G);
    dev = std::max({dev, std::abs(fb.first - 1.0), std::abs(fb.second - 4.0),
                    std::abs(gb.first - 0.25), std::abs(gb.second - 4.0)});
    return make_result("1", "partitioned basis pair: operator and bounds", dev, 1e-13);
}

CheckResult check_repeated_basis() {
    const BiframePair pair = fixtures::repeated_basis_pair(8);
    const BiframeReport rep = classify(pair);
    const auto fb = single_frame_bounds(pair.F);
    const double dev = std::max({std::abs(rep.lower - 1.0), std::abs(rep.upper - 2.0),
                                 std::abs(fb.first - 1.0), std::abs(fb.second - 3.0)});
    return make_result("2", "repeated basis pair at dim 8: bounds", dev, 1e-12);
}

CheckResult check_quadrature_identity() {
    const AtomSpace mu =
        build_quadrature({QuadratureKind::GaussLegendre, 2, 0.0, 1.0});
    std::vector<double> samples(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const double w = (*mu.nodes())[k];
        samples[k] = 6.0 * w * (1.0 - w * w);
    }
    const double value = integrate(mu, samples);
    return make_result("3", "two-node Gauss-Legendre tight-bound integral", std::abs(value - 1.5),
                       1e-14);
}

void check_skew_pair(std::vector<CheckResult>& out) {
    const BiframePair pair = fixtures::skew_pair();
    const BiframeOperator s = assemble(pair);
    double dev = max_abs(s.S.entries - fixtures::skew_pair_matrix());
    dev = std::max({dev, std::abs(s.lower - 2.0), std::abs(s.upper - 4.0)});
    out.push_back(make_result("4a", "skew pair: operator entries and bounds", dev, 1e-13));

    const Op sinv = invert(s.S);
    out.push_back(make_result("4b", "skew pair: inverse matrix",
                              max_abs(sinv.entries - fixtures::skew_pair_inverse()), 1e-12));

    const Space h = pair.F.space();
    double recon_dev = 0.0;
    for (int i = 0; i < 3; ++i) {
        Vector e = Vector::Zero(3);
        e(i) = 1.0;
        const Vec basis(h, e);
        const auto [left, right] = reconstruct(pair, basis);
        recon_dev = std::max(recon_dev, (left.entries - e).norm());
        recon_dev = std::max(recon_dev, (right.entries - e).norm());
    }
    out.push_back(
        make_result("4c", "skew pair: reconstruction on the basis", recon_dev, 1e-12));

    out.push_back(make_result("4d", "skew pair: right canonical dual residual",
                              duality_residual(canonical_dual(pair, DualSide::Right)), 1e-12));
}

void check_tensor_product(std::vector<CheckResult>& out) {
    const BiframePair p1 = fixtures::repeated_basis_pair(8);
    const BiframePair p2 = fixtures::shifted_parseval_pair(4);
    const BiframeReport rep = classify(tensor_pair(p1, p2).pair);
    const double dev = std::max(std::abs(rep.lower - 2.0), std::abs(rep.upper - 6.0));
    out.push_back(make_result("5a", "tensor product pair: bounds", dev, 1e-10));
    out.push_back(make_result("5b", "tensor product pair: factorization residual",
                              tensor_operator_check(p1, p2), 1e-12));
}

CheckResult check_swap_exact(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 2 + static_cast<int>(rng() % 4);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        auto mu = random_atom_space(rng, dim + 1 + static_cast<int>(rng() % 4));
        BiframePair pair(random_family(rng, mu, dim, field), random_family(rng, mu, dim, field));
        const BiframeReport a = classify(pair);
        const BiframeReport b = classify(swapped(pair));
        dev = std::max({dev, std::abs(a.lower - b.lower), std::abs(a.upper - b.upper)});
    }
    return make_result("6a", "swap preserves bounds exactly", dev, 0.0);
}

CheckResult check_transport_sandwich(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        const BiframePair pair = random_positive_pair(rng, dim, field);
        const BiframeReport before = classify(pair);
        const Op t = random_well_conditioned(rng, dim, field);
        const BiframeReport after = classify(transport(t, pair));
        const double tnorm = op_norm(t);
        const double tinv_norm = op_norm(invert(t));
        dev = std::max(dev, before.lower / (tinv_norm * tinv_norm) - after.lower);
        dev = std::max(dev, after.upper - before.upper * tnorm * tnorm);
    }
    return make_result("6b", "transport bound sandwich", dev, 1e-9);
}

CheckResult check_multiplier_norm_bound(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        auto mu = random_atom_space(rng, dim + static_cast<int>(rng() % 4));
        const VectorFamily f = random_family(rng, mu, dim, field);
        const VectorFamily g = random_family(rng, mu, dim, field);
        const MultiplierOperator m = build_multiplier(random_symbol(rng, mu, field), f, g);
        dev = std::max(dev, m.actual_norm - m.norm_bound);
    }
    // Constructed equality case: diagonal symbol on the standard basis.
    const BiframePair basis = fixtures::parseval_pair(3);
    SymbolFunction m_eq(basis.F.atom_space(), {Scalar(2, 0), Scalar(3, 0), Scalar(4, 0)});
    const MultiplierOperator diag = build_multiplier(m_eq, basis.F, basis.G);
    dev = std::max(dev, std::abs(diag.actual_norm - diag.norm_bound));
    return make_result("6c", "multiplier norm bound with equality case", dev, 1e-9);
}

CheckResult check_adjoint_crosscheck(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        auto mu = random_atom_space(rng, dim + static_cast<int>(rng() % 4));
        const VectorFamily f = random_family(rng, mu, dim, field);
        const VectorFamily g = random_family(rng, mu, dim, field);
        const SymbolFunction m = random_symbol(rng, mu, field);
        const MultiplierOperator mult = build_multiplier(m, f, g);
        const Op adj = multiplier_adjoint(mult, f, g);
        const MultiplierOperator cross = build_multiplier(m.conjugated(), g, f);
        dev = std::max(dev, max_abs(adj.entries - cross.M.entries));
    }
    return make_result("6d", "multiplier adjoint equals conjugate-symbol swap", dev, 1e-13);
}

CheckResult check_certificate_soundness(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 2 + static_cast<int>(rng() % 3);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        auto mu = random_atom_space(rng, dim + static_cast<int>(rng() % 4));
        const VectorFamily f = random_family(rng, mu, dim, field);
        const VectorFamily g = random_family(rng, mu, dim, field);
        const MultiplierOperator mult = build_multiplier(random_symbol(rng, mu, field), f, g);
        const LowerBoundCertificate cert = lower_bound_certificate(mult, f, g);
        dev = std::max(dev, cert.implied_lower - cert.actual_lower);

        // Near-Parseval instance so the perturbation hypothesis stays satisfiable:
        // basis columns plus one damped extra atom keep ||I - M|| well below 1.
        auto mu2 = random_atom_space(rng, dim + 1);
        Matrix cols = random_matrix(rng, dim, dim + 1, field);
        cols.rightCols(1) *= 0.2;
        for (int i = 0; i < dim; ++i)
            for (int r = 0; r < dim; ++r)
                cols(r, i) = Scalar(r == i ? 1.0 / std::sqrt(mu2->weight(static_cast<std::size_t>(i)))
                                           : 0.0,
                                    0.0);
        const VectorFamily nf(mu2, Space{dim, field}, cols);
        std::vector<Scalar> ones(mu2->size(), Scalar(1, 0));
        const MultiplierOperator near = build_multiplier(SymbolFunction(mu2, std::move(ones)), nf, nf);
        const double lam1 = op_norm(subtract(identity(near.M.domain), near.M)) + 0.01;
        if (lam1 < 1.0) {
            const PerturbationCertificate pc = perturbation_certificate(near, nf, nf, lam1, 0.0);
            if (pc.hypothesis_ok) {
                dev = std::max(dev, pc.implied_lower_ff - pc.actual_lower_ff);
                if (pc.implied_lower_gg)
                    dev = std::max(dev, *pc.implied_lower_gg - pc.actual_lower_gg);
            }
        }
    }
    return make_result("6e", "certificate soundness (implied <= actual)", dev, 1e-9);
}

CheckResult check_kronecker_algebra(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        const int d1 = 2 + static_cast<int>(rng() % 3);
        const int d2 = 2 + static_cast<int>(rng() % 3);
        const Op q = random_well_conditioned(rng, d1, field);
        const Op t = random_well_conditioned(rng, d2, field);
        const Op q2 = random_operator(rng, d1, field);
        const Op t2 = random_operator(rng, d2, field);

        dev = std::max(dev, max_abs(compose(kron(q, t), kron(q2, t2)).entries -
                                    kron(compose(q, q2), compose(t, t2)).entries));
        dev = std::max(dev, max_abs(invert(kron(q, t)).entries -
                                    kron(invert(q), invert(t)).entries));
        dev = std::max(dev, max_abs(adjoint(kron(q, t)).entries -
                                    kron(adjoint(q), adjoint(t)).entries));
        const double norm_dev = std::abs(op_norm(kron(q2, t2)) - op_norm(q2) * op_norm(t2));
        dev = std::max(dev, norm_dev);
    }
    return make_result("6f", "Kronecker algebra identities", dev, 1e-10);
}

CheckResult check_assemble_oracle(Rng& rng, int instances) {
    double dev = 0.0;
    for (int it = 0; it < instances; ++it) {
        const int dim = 1 + static_cast<int>(rng() % 4);
        const int atoms = 1 + static_cast<int>(rng() % 8);
        const Field field = it % 2 == 0 ? Field::Real : Field::Complex;
        auto mu = random_atom_space(rng, atoms);
        const VectorFamily f = random_family(rng, mu, dim, field);
        const VectorFamily g = random_family(rng, mu, dim, field);
        const BiframeOperator s = assemble(BiframePair(f, g));

        // Independent double loop over matrix entries.
        Matrix naive = Matrix::Zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Scalar acc(0, 0);
                for (int k = 0; k < atoms; ++k)
                    acc += mu->weight(static_cast<std::size_t>(k)) * g.columns()(i, k) *
                           std::conj(f.columns()(j, k));
                naive(i, j) = acc;
            }
        dev = std::max(dev, max_abs(s.S.entries - naive));
    }
    return make_result("6g", "assembly agrees with brute-force double loop", dev, 1e-13);
}

} // namespace

std::vector<CheckResult> verify_corpus(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    out.push_back(check_partitioned_basis());
    out.push_back(check_repeated_basis());
    out.push_back(check_quadrature_identity());
    check_skew_pair(out);
    check_tensor_product(out);

    Rng rng(options.seed);
    out.push_back(check_swap_exact(rng, options.instances));
    out.push_back(check_transport_sandwich(rng, options.instances));
    out.push_back(check_multiplier_norm_bound(rng, options.instances));
    out.push_back(check_adjoint_crosscheck(rng, options.instances));
    out.push_back(check_certificate_soundness(rng, options.instances));
    out.push_back(check_kronecker_algebra(rng, options.instances));
    out.push_back(check_assemble_oracle(rng, options.instances));
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

nlohmann::json verify_report_json(const std::vector<CheckResult>& results,
                                  const VerifyOptions& options) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& r : results)
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"measured", r.measured},
                          {"threshold", r.threshold},
                          {"pass", r.pass}});
    return {{"tool", "biframe"},
            {"version", BIFRAME_VERSION},
            {"settings",
             {{"tol", options.tol}, {"seed", options.seed}, {"instances", options.instances}}},
            {"all_pass", all_pass(results)},
            {"checks", std::move(checks)}};
}

} // namespace biframe
