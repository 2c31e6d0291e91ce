#include "biframe/multiplier.hpp"

#include <cmath>

#include "biframe/errors.hpp"

namespace biframe {

SymbolFunction::SymbolFunction(std::shared_ptr<const AtomSpace> atom_space,
                               std::vector<Scalar> values)
    : atom_space_(std::move(atom_space)), values_(std::move(values)) {
    if (!atom_space_) throw InvalidArgument("SymbolFunction: null atom space");
    if (values_.size() != atom_space_->size())
        throw ShapeError("SymbolFunction: value count does not match atom count");
    for (const Scalar& v : values_) sup_norm_ = std::max(sup_norm_, std::abs(v));
}

SymbolFunction SymbolFunction::conjugated() const {
    std::vector<Scalar> vals(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) vals[k] = std::conj(values_[k]);
    return SymbolFunction(atom_space_, std::move(vals));
}

namespace {

void require_aligned(const SymbolFunction& m, const VectorFamily& F, const VectorFamily& G) {
    if (!(F.space() == G.space()))
        throw ShapeError("multiplier: families live in different spaces");
    if (!(*F.atom_space() == *G.atom_space()) || !(*m.atom_space() == *F.atom_space()))
        throw ShapeError("multiplier: symbol and families use different atom spaces");
}

// Same fixed-order rank-one accumulation as the biframe assembly, with the
// symbol folded into the weight.
Matrix weighted_sum(const SymbolFunction& m, const VectorFamily& F, const VectorFamily& G) {
    const AtomSpace& mu = *F.atom_space();
    const int dim = F.space().dim;
    Matrix out = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const Scalar wm = mu.weight(k) * m.value(k);
        const auto g = G.columns().col(static_cast<Eigen::Index>(k));
        const auto f = F.columns().col(static_cast<Eigen::Index>(k));
        for (int j = 0; j < dim; ++j) {
            const Scalar fj = std::conj(f(j));
            for (int i = 0; i < dim; ++i) out(i, j) += wm * (g(i) * fj);
        }
    }
    return out;
}

} // namespace

MultiplierOperator build_multiplier(const SymbolFunction& m, const VectorFamily& F,
                                    const VectorFamily& G,
                                    std::optional<double> bessel_f_override,
                                    std::optional<double> bessel_g_override) {
    require_aligned(m, F, G);
    Space space = F.space();
    if (space.field == Field::Real)
        for (const Scalar& v : m.values())
            if (v.imag() != 0.0)
                throw ShapeError("multiplier: complex symbol over a real space");

    MultiplierOperator out{Op(space, space, weighted_sum(m, F, G)), m, 0.0, 0.0, 0.0, 0.0};
    out.bessel_f = bessel_f_override ? *bessel_f_override : single_frame_bounds(F).second;
    out.bessel_g = bessel_g_override ? *bessel_g_override : single_frame_bounds(G).second;
    out.norm_bound = m.sup_norm() * std::sqrt(out.bessel_f * out.bessel_g);
    out.actual_norm = op_norm(out.M);
    if (out.actual_norm > out.norm_bound + 1e-9 * out.norm_bound)
        throw Error("multiplier: computed norm exceeds its Bessel bound");
    return out;
}

Op multiplier_adjoint(const MultiplierOperator& mult, const VectorFamily& F,
                      const VectorFamily& G) {
    const Op adj = adjoint(mult.M);
    const int dim = adj.domain.dim;

    // <M e_j, e_i> must equal <e_j, M* e_i> on the whole basis.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Scalar lhs = mult.M.entries(i, j);
            const Scalar rhs = std::conj(adj.entries(j, i));
            if (std::abs(lhs - rhs) > 1e-13)
                throw Error("multiplier_adjoint: basis pairing check failed");
        }

    // M* is the multiplier with conjugated symbol and swapped families.
    const Matrix cross = weighted_sum(mult.symbol.conjugated(), G, F);
    if ((adj.entries - cross).cwiseAbs().maxCoeff() > 1e-13)
        throw Error("multiplier_adjoint: conjugate-symbol cross-check failed");
    return adj;
}

LowerBoundCertificate lower_bound_certificate(const MultiplierOperator& mult,
                                              const VectorFamily& F, const VectorFamily& G) {
    LowerBoundCertificate cert;
    cert.injectivity = sigma_min(mult.M);
    const double m2 = mult.symbol.sup_norm() * mult.symbol.sup_norm();
    const double denom = m2 * mult.bessel_g;
    cert.implied_lower =
        cert.injectivity > 0.0 && denom > 0.0 ? cert.injectivity * cert.injectivity / denom : 0.0;
    cert.actual_lower = single_frame_bounds(F).first;
    cert.holds = cert.actual_lower >= cert.implied_lower - 1e-9;
    return cert;
}

PerturbationCertificate perturbation_certificate(const MultiplierOperator& mult,
                                                 const VectorFamily& F, const VectorFamily& G,
                                                 double lambda1, double lambda2) {
    if (!(lambda1 < 1.0)) throw InvalidArgument("perturbation_certificate: lambda1 must be < 1");
    if (!(lambda2 > -1.0)) throw InvalidArgument("perturbation_certificate: lambda2 must be > -1");

    PerturbationCertificate cert;
    const double resid = op_norm(subtract(identity(mult.M.domain), mult.M));
    // Sufficient condition for ||f - Mf|| <= lambda1||f|| + lambda2||Mf||:
    // the lambda2 term is worst-cased by sigma_min(M) when lambda2 >= 0 and by
    // ||M|| when lambda2 < 0.
    const double lam2_scale = lambda2 >= 0.0 ? sigma_min(mult.M) : op_norm(mult.M);
    const double budget = lambda1 + lambda2 * lam2_scale;
    cert.hypothesis_gap = budget - resid;
    cert.hypothesis_ok = resid <= budget + 1e-12 * std::max(1.0, budget);

    const double m2 = mult.symbol.sup_norm() * mult.symbol.sup_norm();
    const double one_minus = 1.0 - lambda1;
    const double one_plus = 1.0 + lambda2;
    const double denom_ff = m2 * mult.bessel_g * one_plus * one_plus;
    cert.implied_lower_ff = denom_ff > 0.0 ? one_minus * one_minus / denom_ff : 0.0;
    cert.actual_lower_ff = single_frame_bounds(F).first;

    bool gg_ok = true;
    if (lambda2 == 0.0 && lambda1 >= 0.0) {
        const double denom_gg = m2 * mult.bessel_f;
        cert.implied_lower_gg = denom_gg > 0.0 ? one_minus * one_minus / denom_gg : 0.0;
        cert.actual_lower_gg = single_frame_bounds(G).first;
        gg_ok = cert.actual_lower_gg >= *cert.implied_lower_gg - 1e-9;
    }
    cert.holds = cert.hypothesis_ok &&
                 cert.actual_lower_ff >= cert.implied_lower_ff - 1e-9 && gg_ok;
    return cert;
}

BiframePair multiplier_dual(const MultiplierOperator& mult, const SymbolFunction& m,
                            const VectorFamily& F, const VectorFamily& G, double tol) {
    require_aligned(m, F, G);
    const Op minv_adj = adjoint(invert(mult.M, tol));
    Matrix cols(F.space().dim, static_cast<Eigen::Index>(F.size()));
    for (std::size_t k = 0; k < F.size(); ++k)
        cols.col(static_cast<Eigen::Index>(k)) =
            minv_adj.entries * (std::conj(m.value(k)) * F.columns().col(static_cast<Eigen::Index>(k)));
    return BiframePair(VectorFamily(F.atom_space(), F.space(), std::move(cols)), G);
}

} // namespace biframe
