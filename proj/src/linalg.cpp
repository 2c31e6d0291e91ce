#include "biframe/linalg.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "biframe/errors.hpp"

namespace biframe {

namespace {

void require_real_entries(const Space& s, const Matrix& m, const char* what) {
    if (s.field != Field::Real) return;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j).imag() != 0.0)
                throw ShapeError(std::string(what) + ": nonzero imaginary entry in a real space");
}

Eigen::VectorXd singular_values(const Matrix& m) {
    if (m.size() == 0) return Eigen::VectorXd();
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

} // namespace

Space make_space(int dim, Field field) {
    if (dim < 1) throw InvalidArgument("Space: dim must be >= 1");
    return Space{dim, field};
}

Vec::Vec(Space s, Vector e) : space(s), entries(std::move(e)) {
    if (space.dim < 1) throw InvalidArgument("Vec: space dim must be >= 1");
    if (entries.size() != space.dim)
        throw ShapeError("Vec: entry count does not match space dim");
    require_real_entries(space, entries, "Vec");
}

Op::Op(Space dom, Space cod, Matrix e) : domain(dom), codomain(cod), entries(std::move(e)) {
    if (domain.dim < 1 || codomain.dim < 1) throw InvalidArgument("Op: space dims must be >= 1");
    if (domain.field != codomain.field)
        throw ShapeError("Op: domain and codomain fields differ");
    if (entries.rows() != codomain.dim || entries.cols() != domain.dim)
        throw ShapeError("Op: grid shape does not match spaces");
    require_real_entries(domain, entries, "Op");
}

Vec make_vec(const Space& s, std::vector<Scalar> entries) {
    Vector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
    return Vec(s, std::move(v));
}

Op make_op(const Space& dom, const Space& cod, Matrix entries) {
    return Op(dom, cod, std::move(entries));
}

Op identity(const Space& s) {
    return Op(s, s, Matrix::Identity(s.dim, s.dim));
}

Op zero_op(const Space& s) {
    return Op(s, s, Matrix::Zero(s.dim, s.dim));
}

Scalar inner(const Vec& x, const Vec& y) {
    if (!(x.space == y.space)) throw ShapeError("inner: vectors live in different spaces");
    // Eigen's dot conjugates its first argument, so <x,y> = y.dot(x).
    return y.entries.dot(x.entries);
}

double norm(const Vec& x) { return x.entries.norm(); }

Vec apply(const Op& t, const Vec& x) {
    if (!(t.domain == x.space)) throw ShapeError("apply: vector not in operator domain");
    return Vec(t.codomain, t.entries * x.entries);
}

Op compose(const Op& a, const Op& b) {
    if (!(a.domain == b.codomain)) throw ShapeError("compose: inner spaces differ");
    return Op(b.domain, a.codomain, a.entries * b.entries);
}

Op scale(Scalar c, const Op& t) {
    if (t.domain.field == Field::Real && c.imag() != 0.0)
        throw ShapeError("scale: complex factor on a real-space operator");
    return Op(t.domain, t.codomain, c * t.entries);
}

Op add(const Op& a, const Op& b) {
    if (!(a.domain == b.domain) || !(a.codomain == b.codomain))
        throw ShapeError("add: operator shapes differ");
    return Op(a.domain, a.codomain, a.entries + b.entries);
}

Op subtract(const Op& a, const Op& b) {
    if (!(a.domain == b.domain) || !(a.codomain == b.codomain))
        throw ShapeError("subtract: operator shapes differ");
    return Op(a.domain, a.codomain, a.entries - b.entries);
}

Op adjoint(const Op& t) {
    return Op(t.codomain, t.domain, t.entries.adjoint());
}

Op hermitian_part(const Op& t) {
    if (!(t.domain == t.codomain)) throw ShapeError("hermitian_part: operator not square");
    Matrix h = 0.5 * (t.entries + t.entries.adjoint());
    // Adding +0.0 collapses -0.0 so that S_{F,G} and S_{G,F} assemblies yield
    // one bit-identical Hermitian part.
    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            h(i, j) = Scalar(h(i, j).real() + 0.0, h(i, j).imag() + 0.0);
    return Op(t.domain, t.codomain, std::move(h));
}

double op_norm(const Op& t) {
    Eigen::VectorXd sv = singular_values(t.entries);
    return sv.size() ? sv(0) : 0.0;
}

double sigma_min(const Op& t) {
    Eigen::VectorXd sv = singular_values(t.entries);
    return sv.size() ? sv(sv.size() - 1) : 0.0;
}

double condition_number(const Op& t) {
    Eigen::VectorXd sv = singular_values(t.entries);
    if (sv.size() == 0) return std::numeric_limits<double>::infinity();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

Op invert(const Op& t, double tol) {
    if (!(t.domain == t.codomain)) throw ShapeError("invert: operator not square");
    if (!(tol > 0.0)) throw InvalidArgument("invert: tol must be positive");
    const double cond = condition_number(t);
    if (!(cond <= 1.0 / tol))
        throw SingularOperator("invert: condition number " + std::to_string(cond) +
                               " exceeds 1/tol");
    Matrix inv = Eigen::FullPivLU<Matrix>(t.entries).inverse();
    return Op(t.codomain, t.domain, std::move(inv));
}

std::vector<double> hermitian_eigs(const Op& t, double tol) {
    if (!(t.domain == t.codomain)) throw ShapeError("hermitian_eigs: operator not square");
    const double scale = op_norm(t);
    const double asym = op_norm(subtract(t, adjoint(t)));
    if (asym > tol * scale)
        throw NotHermitian("hermitian_eigs: ||T - T*|| = " + std::to_string(asym) +
                           " exceeds tol*||T||");
    const Op h = hermitian_part(t);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries);
    if (es.info() != Eigen::Success)
        throw Error("hermitian_eigs: eigensolver did not converge");
    Matrix recon = es.eigenvectors() *
                   es.eigenvalues().cast<Scalar>().asDiagonal() *
                   es.eigenvectors().adjoint();
    const double resid = op_norm(Op(t.domain, t.codomain, t.entries - recon));
    if (scale > 0.0 && resid > tol * scale)
        throw Error("hermitian_eigs: reconstruction residual exceeds tol*||T||");
    std::vector<double> out(static_cast<std::size_t>(es.eigenvalues().size()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

Op kron(const Op& q, const Op& t) {
    if (q.domain.field != t.domain.field)
        throw ShapeError("kron: factors over different fields");
    const int dr = q.codomain.dim * t.codomain.dim;
    const int dc = q.domain.dim * t.domain.dim;
    Matrix out(dr, dc);
    for (int i = 0; i < q.codomain.dim; ++i)
        for (int j = 0; j < q.domain.dim; ++j)
            out.block(i * t.codomain.dim, j * t.domain.dim, t.codomain.dim, t.domain.dim) =
                q.entries(i, j) * t.entries;
    return Op(Space{dc, q.domain.field}, Space{dr, q.codomain.field}, std::move(out));
}

Vec kron_vec(const Vec& f, const Vec& g) {
    if (f.space.field != g.space.field)
        throw ShapeError("kron_vec: factors over different fields");
    const int d = f.space.dim * g.space.dim;
    Vector out(d);
    for (int i = 0; i < f.space.dim; ++i)
        out.segment(i * g.space.dim, g.space.dim) = f.entries(i) * g.entries;
    return Vec(Space{d, f.space.field}, std::move(out));
}

} // namespace biframe
