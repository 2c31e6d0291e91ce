#include "biframe/tensor.hpp"

#include "biframe/errors.hpp"

namespace biframe {

ProductAtomSpace::ProductAtomSpace(std::shared_ptr<const AtomSpace> left,
                                   std::shared_ptr<const AtomSpace> right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw InvalidArgument("ProductAtomSpace: null factor");
    std::vector<Atom> atoms;
    atoms.reserve(left_->size() * right_->size());
    for (std::size_t i = 0; i < left_->size(); ++i)
        for (std::size_t j = 0; j < right_->size(); ++j)
            atoms.push_back({"(" + left_->label(i) + "," + right_->label(j) + ")",
                             left_->weight(i) * right_->weight(j)});
    std::optional<std::string> note;
    if (left_->note() || right_->note()) {
        note = std::string();
        if (left_->note()) *note += "left: " + *left_->note();
        if (left_->note() && right_->note()) *note += "; ";
        if (right_->note()) *note += "right: " + *right_->note();
    }
    product_ = std::make_shared<AtomSpace>(std::move(atoms), std::nullopt, std::move(note));
}

namespace {

VectorFamily tensor_family(const ProductAtomSpace& px, const VectorFamily& a,
                           const VectorFamily& b) {
    const Space space{a.space().dim * b.space().dim, a.space().field};
    Matrix cols(space.dim, static_cast<Eigen::Index>(px.product()->size()));
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            cols.col(col++) = kron_vec(a.vec(i), b.vec(j)).entries;
    return VectorFamily(px.product(), space, std::move(cols));
}

TensorBiframePair make_tensor_pair(const BiframePair& p1, const BiframePair& p2) {
    if (p1.F.space().field != p2.F.space().field)
        throw ShapeError("tensor_pair: factors over different fields");
    ProductAtomSpace px(p1.F.atom_space(), p2.F.atom_space());
    BiframePair product(tensor_family(px, p1.F, p2.F), tensor_family(px, p1.G, p2.G));
    return TensorBiframePair{std::move(product), std::make_pair(p1, p2)};
}

} // namespace

TensorBiframePair tensor_pair(const BiframePair& p1, const BiframePair& p2) {
    return make_tensor_pair(p1, p2);
}

double tensor_operator_check(const BiframePair& p1, const BiframePair& p2) {
    const Op s_product = assemble(tensor_pair(p1, p2).pair).S;
    const Op s_kron = kron(assemble(p1).S, assemble(p2).S);
    const double scale = op_norm(s_kron);
    const double resid = op_norm(subtract(s_product, s_kron));
    return scale > 0.0 ? resid / scale : resid;
}

SandwichVerdict tensor_sandwich_check(const BiframePair& p1, const BiframePair& p2, double tol) {
    SandwichVerdict v;
    const BiframeOperator s1 = assemble(p1);
    const BiframeOperator s2 = assemble(p2);
    v.product_lower = s1.lower * s2.lower;
    v.product_upper = s1.upper * s2.upper;
    v.hypothesis_met = s1.hermitian_residual <= tol && s2.hermitian_residual <= tol &&
                       s1.lower > 0.0 && s2.lower > 0.0;

    const BiframeOperator sp = assemble(tensor_pair(p1, p2).pair);
    v.lambda_min = sp.lower;
    v.lambda_max = sp.upper;
    if (v.hypothesis_met)
        v.holds = v.product_lower - 1e-9 <= v.lambda_min && v.lambda_max <= v.product_upper + 1e-9;
    return v;
}

TensorBiframePair tensor_transport(const Op& t1, const Op& t2, const BiframePair& p1,
                                   const BiframePair& p2) {
    auto map = [](const Op& t, const VectorFamily& fam) {
        if (!(t.domain == fam.space()))
            throw ShapeError("tensor_transport: operator domain does not match family space");
        return VectorFamily(fam.atom_space(), t.codomain, t.entries * fam.columns());
    };
    BiframePair q1(map(t1, p1.F), map(t1, p1.G));
    BiframePair q2(map(t2, p2.F), map(t2, p2.G));
    return make_tensor_pair(q1, q2);
}

MultiplierOperator tensor_multiplier(const SymbolFunction& m1, const SymbolFunction& m2,
                                     const VectorFamily& f1, const VectorFamily& f2,
                                     const VectorFamily& g1, const VectorFamily& g2) {
    if (!(*m1.atom_space() == *f1.atom_space()) || !(*m2.atom_space() == *f2.atom_space()))
        throw ShapeError("tensor_multiplier: symbol atom spaces do not match the factor families");
    ProductAtomSpace px(f1.atom_space(), f2.atom_space());
    std::vector<Scalar> values;
    values.reserve(px.product()->size());
    for (std::size_t i = 0; i < m1.size(); ++i)
        for (std::size_t j = 0; j < m2.size(); ++j) values.push_back(m1.value(i) * m2.value(j));
    SymbolFunction m(px.product(), std::move(values));
    return build_multiplier(m, tensor_family(px, f1, f2), tensor_family(px, g1, g2));
}

} // namespace biframe
