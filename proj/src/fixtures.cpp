#include "biframe/fixtures.hpp"

#include <cmath>

#include "biframe/errors.hpp"

namespace biframe::fixtures {

std::shared_ptr<const AtomSpace> shared_space(AtomSpace space) {
    return std::make_shared<const AtomSpace>(std::move(space));
}

namespace {

Matrix basis_column(int dim, int index, double scale = 1.0) {
    Matrix col = Matrix::Zero(dim, 1);
    col(index, 0) = Scalar(scale, 0.0);
    return col;
}

} // namespace

BiframePair partitioned_basis_pair(double w1, double w2, double w3) {
    const double ws[3] = {w1, w2, w3};
    auto mu = shared_space(partition_space(ws));
    const Space h{3, Field::Real};
    Matrix f(3, 3), g(3, 3);
    f.setZero();
    g.setZero();
    for (int i = 0; i < 3; ++i) {
        const double r = 1.0 / std::sqrt(ws[i]);
        f(i, i) = r;
        g(i, i) = r;
    }
    f(2, 2) *= 2.0; // F's third vector is 2 e3 / sqrt(w3)
    g(0, 0) *= 2.0; // G's first vector is 2 e1 / sqrt(w1)
    g(2, 2) *= 0.5; // G's third vector is e3 / (2 sqrt(w3))
    return BiframePair(VectorFamily(mu, h, std::move(f)), VectorFamily(mu, h, std::move(g)));
}

BiframePair repeated_basis_pair(int dim) {
    if (dim < 2) throw InvalidArgument("repeated_basis_pair: dim must be >= 2");
    const int atoms = dim + 2;
    std::vector<double> weights(static_cast<std::size_t>(atoms));
    for (int k = 0; k < atoms; ++k) weights[static_cast<std::size_t>(k)] = 1.0 + 0.5 * (k % 3);
    auto mu = shared_space(AtomSpace(
        [&] {
            std::vector<Atom> a;
            for (int k = 0; k < atoms; ++k)
                a.push_back({std::to_string(k), weights[static_cast<std::size_t>(k)]});
            return a;
        }(),
        std::nullopt, "sigma-finite family truncated to dim " + std::to_string(dim)));

    const Space h{dim, Field::Real};
    Matrix f = Matrix::Zero(dim, atoms);
    Matrix g = Matrix::Zero(dim, atoms);
    for (int k = 0; k < atoms; ++k) {
        const double r = 1.0 / std::sqrt(weights[static_cast<std::size_t>(k)]);
        // F sequence: e1, e1, e1, e2, e3, ...; G sequence: 0, e1, e1, e2, e3, ...
        const int f_idx = k < 3 ? 0 : k - 2;
        f(f_idx, k) = r;
        if (k >= 1) {
            const int g_idx = k < 3 ? 0 : k - 2;
            g(g_idx, k) = r;
        }
    }
    return BiframePair(VectorFamily(mu, h, std::move(f)), VectorFamily(mu, h, std::move(g)));
}

BiframePair skew_pair() {
    auto mu = shared_space(counting_space(3));
    const Space h{3, Field::Real};
    Matrix f(3, 3);
    f << Scalar(2, 0), Scalar(-1, 0), Scalar(-1, 0),
         Scalar(1, 0), Scalar(3, 0),  Scalar(1, 0),
         Scalar(1, 0), Scalar(-1, 0), Scalar(4, 0);
    Matrix g = Matrix::Identity(3, 3);
    return BiframePair(VectorFamily(mu, h, std::move(f)), VectorFamily(mu, h, std::move(g)));
}

Matrix skew_pair_matrix() {
    Matrix s(3, 3);
    s << Scalar(2, 0),  Scalar(1, 0), Scalar(1, 0),
         Scalar(-1, 0), Scalar(3, 0), Scalar(-1, 0),
         Scalar(-1, 0), Scalar(1, 0), Scalar(4, 0);
    return s;
}

Matrix skew_pair_inverse() {
    Matrix inv(3, 3);
    inv << Scalar(13, 0), Scalar(-3, 0), Scalar(-4, 0),
           Scalar(5, 0),  Scalar(9, 0),  Scalar(1, 0),
           Scalar(2, 0),  Scalar(-3, 0), Scalar(7, 0);
    return inv / Scalar(33.0, 0.0);
}

BiframePair shifted_parseval_pair(int dim) {
    if (dim < 1) throw InvalidArgument("shifted_parseval_pair: dim must be >= 1");
    const int atoms = dim + 1;
    auto mu = shared_space(counting_space(atoms));
    const Space h{dim, Field::Real};
    Matrix f = Matrix::Zero(dim, atoms);
    Matrix g = Matrix::Zero(dim, atoms);
    // Atom 0 contributes |<f,e1>|^2; atoms 1..dim contribute 2||f||^2.
    f(0, 0) = 1.0;
    g(0, 0) = 1.0;
    for (int i = 0; i < dim; ++i) {
        f(i, i + 1) = 1.0;
        g(i, i + 1) = 2.0;
    }
    return BiframePair(VectorFamily(mu, h, std::move(f)), VectorFamily(mu, h, std::move(g)));
}

BiframePair parseval_pair(int dim, Field field) {
    auto mu = shared_space(counting_space(dim));
    const Space h{dim, field};
    Matrix id = Matrix::Identity(dim, dim);
    return BiframePair(VectorFamily(mu, h, id), VectorFamily(mu, h, id));
}

} // namespace biframe::fixtures
