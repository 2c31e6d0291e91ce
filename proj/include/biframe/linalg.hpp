#ifndef BIFRAME_LINALG_HPP
#define BIFRAME_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace biframe {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Field { Real, Complex };

// A finite-dimensional inner-product space. The field tag governs validation
// (real spaces reject entries with nonzero imaginary part) and serialization.
struct Space {
    int dim = 0;
    Field field = Field::Real;

    bool operator==(const Space&) const = default;
};

Space make_space(int dim, Field field);

/// Vector in a Space. Entries are stored as complex doubles for both fields;
/// a real space keeps imaginary parts exactly zero (enforced on construction,
/// preserved by every operation here).
struct Vec {
    Space space;
    Vector entries;

    Vec(Space s, Vector e);
};

/// Dense linear map domain -> codomain, stored as a codomain.dim x domain.dim grid.
struct Op {
    Space domain;
    Space codomain;
    Matrix entries;

    Op(Space dom, Space cod, Matrix e);
};

Vec make_vec(const Space& s, std::vector<Scalar> entries);
Op make_op(const Space& dom, const Space& cod, Matrix entries);
Op identity(const Space& s);
Op zero_op(const Space& s);

/// <x,y> = sum_i x_i conj(y_i): linear in the first slot, conjugating the second.
Scalar inner(const Vec& x, const Vec& y);
double norm(const Vec& x);

Vec apply(const Op& t, const Vec& x);
Op compose(const Op& a, const Op& b); // a after b
Op scale(Scalar c, const Op& t);
Op add(const Op& a, const Op& b);
Op subtract(const Op& a, const Op& b);

Op adjoint(const Op& t);

/// Hermitian part (T + T*)/2 with signed zeros normalized, so algebraically
/// identical assemblies hash to bit-identical matrices.
Op hermitian_part(const Op& t);

/// Largest / smallest singular value.
double op_norm(const Op& t);
double sigma_min(const Op& t);

/// sigma_max/sigma_min; +inf when singular.
double condition_number(const Op& t);

/// Inverse of a square operator. Throws SingularOperator when the condition
/// number exceeds 1/tol.
Op invert(const Op& t, double tol = 1e-10);

/// Ascending eigenvalues of a (near-)Hermitian operator. Input must satisfy
/// ||T - T*|| <= tol*||T||; the decomposition residual is checked against the
/// same bound.
std::vector<double> hermitian_eigs(const Op& t, double tol = 1e-10);

/// Kronecker product, left-factor-major: (Q kron T)[(i*p+k),(j*q+l)] = Q(i,j)T(k,l).
Op kron(const Op& q, const Op& t);
Vec kron_vec(const Vec& f, const Vec& g);

} // namespace biframe

#endif
