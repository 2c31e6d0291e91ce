#include "biframe/biframe.hpp"

#include <cmath>

#include "biframe/errors.hpp"

namespace biframe {

VectorFamily::VectorFamily(std::shared_ptr<const AtomSpace> atom_space, Space space,
                           const std::vector<Vec>& vectors)
    : atom_space_(std::move(atom_space)), space_(space) {
    if (!atom_space_) throw InvalidArgument("VectorFamily: null atom space");
    if (vectors.size() != atom_space_->size())
        throw ShapeError("VectorFamily: vector count does not match atom count");
    columns_.resize(space_.dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (!(vectors[k].space == space_))
            throw ShapeError("VectorFamily: vector at atom " + std::to_string(k) +
                             " lives in a different space");
        columns_.col(static_cast<Eigen::Index>(k)) = vectors[k].entries;
    }
}

VectorFamily::VectorFamily(std::shared_ptr<const AtomSpace> atom_space, Space space,
                           Matrix columns)
    : atom_space_(std::move(atom_space)), space_(space), columns_(std::move(columns)) {
    if (!atom_space_) throw InvalidArgument("VectorFamily: null atom space");
    if (space_.dim < 1) throw InvalidArgument("VectorFamily: space dim must be >= 1");
    if (columns_.rows() != space_.dim ||
        columns_.cols() != static_cast<Eigen::Index>(atom_space_->size()))
        throw ShapeError("VectorFamily: column grid does not match space/atom counts");
    if (space_.field == Field::Real)
        for (Eigen::Index j = 0; j < columns_.cols(); ++j)
            for (Eigen::Index i = 0; i < columns_.rows(); ++i)
                if (columns_(i, j).imag() != 0.0)
                    throw ShapeError("VectorFamily: nonzero imaginary entry in a real space");
}

BiframePair::BiframePair(VectorFamily f, VectorFamily g) : F(std::move(f)), G(std::move(g)) {
    if (!(F.space() == G.space()))
        throw ShapeError("BiframePair: families live in different spaces");
    if (!(*F.atom_space() == *G.atom_space()))
        throw ShapeError("BiframePair: families use different atom spaces");
}

BiframeOperator assemble(const BiframePair& pair) {
    const AtomSpace& mu = *pair.F.atom_space();
    const Space& space = pair.F.space();
    // Fixed atom-order accumulation of rank-one terms w_k G(k) F(k)^*, so the
    // swapped assembly is the exact conjugate transpose entry for entry.
    Matrix s = Matrix::Zero(space.dim, space.dim);
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const double w = mu.weight(k);
        const auto g = pair.G.columns().col(static_cast<Eigen::Index>(k));
        const auto f = pair.F.columns().col(static_cast<Eigen::Index>(k));
        for (int j = 0; j < space.dim; ++j) {
            const Scalar fj = std::conj(f(j));
            for (int i = 0; i < space.dim; ++i) s(i, j) += w * (g(i) * fj);
        }
    }
    BiframeOperator out{Op(space, space, std::move(s)), 0.0, 0.0, 0.0};
    const double scale = op_norm(out.S);
    out.hermitian_residual =
        scale > 0.0 ? op_norm(subtract(out.S, adjoint(out.S))) / scale : 0.0;
    const Op h = hermitian_part(out.S);
    std::vector<double> eigs = hermitian_eigs(h);
    out.lower = eigs.front();
    out.upper = eigs.back();
    return out;
}

Scalar quadratic_form(const BiframePair& pair, const Vec& f) {
    if (!(f.space == pair.F.space())) throw ShapeError("quadratic_form: vector space mismatch");
    const AtomSpace& mu = *pair.F.atom_space();
    Scalar acc(0.0, 0.0);
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const Scalar a = inner(f, pair.F.vec(k)); // <f, F(k)>
        const Scalar b = inner(pair.G.vec(k), f); // <G(k), f>
        acc += mu.weight(k) * (a * b);
    }
    return acc;
}

BiframeReport classify(const BiframePair& pair, std::optional<double> tol) {
    const BiframeOperator s = assemble(pair);
    BiframeReport rep;
    rep.lower = s.lower;
    rep.upper = s.upper;
    rep.hermitian_residual = s.hermitian_residual;
    rep.tightness_gap = s.upper - s.lower;
    rep.is_bessel = std::isfinite(s.upper);
    const double threshold = tol ? *tol : 1e-10 * s.upper;
    rep.is_biframe = s.lower > threshold;
    rep.truncation_note = pair.F.atom_space()->note();
    return rep;
}

std::pair<double, double> single_frame_bounds(const VectorFamily& family) {
    BiframeReport rep = classify(BiframePair(family, family));
    return {rep.lower, rep.upper};
}

namespace {

VectorFamily apply_to_family(const Op& t, const VectorFamily& fam) {
    return VectorFamily(fam.atom_space(), t.codomain, t.entries * fam.columns());
}

Vec synthesize(const VectorFamily& analysis, const VectorFamily& synthesis, const Vec& f) {
    // sum_k w_k <f, analysis(k)> synthesis(k)
    const AtomSpace& mu = *analysis.atom_space();
    Vector acc = Vector::Zero(f.space.dim);
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const Scalar c = inner(f, analysis.vec(k));
        acc += (mu.weight(k) * c) * synthesis.columns().col(static_cast<Eigen::Index>(k));
    }
    return Vec(f.space, std::move(acc));
}

} // namespace

std::pair<Vec, Vec> reconstruct(const BiframePair& pair, const Vec& f, double tol) {
    const BiframeOperator s = assemble(pair);
    const Op sinv = invert(s.S, tol);
    const VectorFamily left_analysis = apply_to_family(adjoint(sinv), pair.F);
    const VectorFamily right_synthesis = apply_to_family(sinv, pair.G);
    Vec left = synthesize(left_analysis, pair.G, f);
    Vec right = synthesize(pair.F, right_synthesis, f);
    return {std::move(left), std::move(right)};
}

BiframePair swapped(const BiframePair& pair) { return BiframePair(pair.G, pair.F); }

BiframePair transport(const Op& t, const BiframePair& pair, double tol) {
    if (!(t.domain == pair.F.space()))
        throw ShapeError("transport: operator domain does not match family space");
    const double cond = condition_number(t);
    if (!(cond <= 1.0 / tol))
        throw SingularOperator("transport: operator condition number " + std::to_string(cond) +
                               " exceeds 1/tol");
    return BiframePair(apply_to_family(t, pair.F), apply_to_family(t, pair.G));
}

double duality_residual(const BiframePair& pair) {
    const BiframeOperator s = assemble(pair);
    return op_norm(subtract(s.S, identity(pair.F.space())));
}

BiframePair canonical_dual(const BiframePair& pair, DualSide side, double tol) {
    const BiframeOperator s = assemble(pair);
    const Op sinv = invert(s.S, tol);
    switch (side) {
    case DualSide::Left:
        return BiframePair(apply_to_family(adjoint(sinv), pair.F), pair.G);
    case DualSide::Right:
        return BiframePair(pair.F, apply_to_family(sinv, pair.G));
    }
    throw InvalidArgument("canonical_dual: unknown side");
}

} // namespace biframe
