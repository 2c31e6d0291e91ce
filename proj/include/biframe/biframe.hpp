#ifndef BIFRAME_BIFRAME_HPP
#define BIFRAME_BIFRAME_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biframe/linalg.hpp"
#include "biframe/measure.hpp"

namespace biframe {

/// One vector per atom of a measure space, all living in a single Space.
/// Columns of the internal matrix follow the atom order.
class VectorFamily {
public:
    VectorFamily(std::shared_ptr<const AtomSpace> atom_space, Space space,
                 const std::vector<Vec>& vectors);
    VectorFamily(std::shared_ptr<const AtomSpace> atom_space, Space space, Matrix columns);

    const Space& space() const { return space_; }
    const std::shared_ptr<const AtomSpace>& atom_space() const { return atom_space_; }
    std::size_t size() const { return static_cast<std::size_t>(columns_.cols()); }
    Vec vec(std::size_t k) const { return Vec(space_, columns_.col(static_cast<Eigen::Index>(k))); }
    const Matrix& columns() const { return columns_; }

private:
    std::shared_ptr<const AtomSpace> atom_space_;
    Space space_;
    Matrix columns_;
};

/// The pair (F, G): two families over one space and one measure space.
struct BiframePair {
    VectorFamily F;
    VectorFamily G;

    BiframePair(VectorFamily f, VectorFamily g);
};

/// S f = sum_k w_k <f, F(k)> G(k), with spectral metadata of the Hermitian
/// part. lower/upper are the optimal constants of the real quadratic form.
struct BiframeOperator {
    Op S;
    double hermitian_residual = 0.0; // ||S - S*|| / ||S||, 0 for zero S
    double lower = 0.0;              // lambda_min of (S+S*)/2
    double upper = 0.0;              // lambda_max of (S+S*)/2
};

struct BiframeReport {
    bool is_bessel = false;
    bool is_biframe = false;
    double lower = 0.0;
    double upper = 0.0;
    double hermitian_residual = 0.0;
    double tightness_gap = 0.0;
    std::optional<std::string> truncation_note;
};

enum class DualSide { Left, Right };

BiframeOperator assemble(const BiframePair& pair);

/// sum_k w_k <f,F(k)> <G(k),f>, summed directly (not through S).
Scalar quadratic_form(const BiframePair& pair, const Vec& f);

/// Verdict with optimal bounds. When tol is not given it defaults to the
/// scale-relative threshold 1e-10 * upper.
BiframeReport classify(const BiframePair& pair, std::optional<double> tol = std::nullopt);

/// Frame bounds of a single family, i.e. classify bounds of (F, F).
std::pair<double, double> single_frame_bounds(const VectorFamily& family);

/// Both reconstruction representations of f:
///   left:  sum_k w_k <f, (S^-1)* F(k)> G(k)
///   right: sum_k w_k <f, F(k)> S^-1 G(k)
std::pair<Vec, Vec> reconstruct(const BiframePair& pair, const Vec& f, double tol = 1e-10);

BiframePair swapped(const BiframePair& pair);

/// Applies an invertible operator to both families.
BiframePair transport(const Op& t, const BiframePair& pair, double tol = 1e-10);

/// ||S - I|| in operator norm; zero exactly for a dual pair.
double duality_residual(const BiframePair& pair);

/// Left: ((S^-1)* F, G).  Right: (F, S^-1 G).  The adjoint on the left side
/// matters whenever S is not self-adjoint; for self-adjoint S both agree with
/// applying S^-1 directly.
BiframePair canonical_dual(const BiframePair& pair, DualSide side, double tol = 1e-10);

} // namespace biframe

#endif
