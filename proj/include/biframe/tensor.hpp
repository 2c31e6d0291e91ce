#ifndef BIFRAME_TENSOR_HPP
#define BIFRAME_TENSOR_HPP

#include <memory>
#include <optional>
#include <utility>

#include "biframe/biframe.hpp"
#include "biframe/multiplier.hpp"

namespace biframe {

/// Product measure space. Atoms are lexicographic pairs (k1, k2), left factor
/// major, with weight w1(k1) * w2(k2); this ordering matches the Kronecker
/// layout of kron/kron_vec.
class ProductAtomSpace {
public:
    ProductAtomSpace(std::shared_ptr<const AtomSpace> left,
                     std::shared_ptr<const AtomSpace> right);

    const std::shared_ptr<const AtomSpace>& left() const { return left_; }
    const std::shared_ptr<const AtomSpace>& right() const { return right_; }
    const std::shared_ptr<const AtomSpace>& product() const { return product_; }

private:
    std::shared_ptr<const AtomSpace> left_;
    std::shared_ptr<const AtomSpace> right_;
    std::shared_ptr<const AtomSpace> product_;
};

/// A biframe pair over a product space, with optional factor provenance.
struct TensorBiframePair {
    BiframePair pair;
    std::optional<std::pair<BiframePair, BiframePair>> factors;
};

struct SandwichVerdict {
    bool hypothesis_met = false; // both factor operators Hermitian within tol and positive
    double product_lower = 0.0;  // A*C
    double product_upper = 0.0;  // B*D
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool holds = false;
};

/// (F1 kron F2, G1 kron G2) over the product measure space.
TensorBiframePair tensor_pair(const BiframePair& p1, const BiframePair& p2);

/// Relative factorization residual ||S_tensor - kron(S1, S2)|| / ||kron(S1, S2)||.
double tensor_operator_check(const BiframePair& p1, const BiframePair& p2);

/// Checks A*C <= lambda_min and lambda_max <= B*D for the product operator;
/// reports hypothesis_met = false (not an error) when a factor operator is
/// non-Hermitian beyond tol or not positive.
SandwichVerdict tensor_sandwich_check(const BiframePair& p1, const BiframePair& p2,
                                      double tol = 1e-10);

/// ((T1 kron T2) applied to both product families). Singular factors are
/// allowed; the result then classifies as not-a-biframe.
TensorBiframePair tensor_transport(const Op& t1, const Op& t2, const BiframePair& p1,
                                   const BiframePair& p2);

/// Product-space multiplier with symbol m(k1,k2) = m1(k1) * m2(k2); equals
/// kron(M1, M2) entrywise.
MultiplierOperator tensor_multiplier(const SymbolFunction& m1, const SymbolFunction& m2,
                                     const VectorFamily& f1, const VectorFamily& f2,
                                     const VectorFamily& g1, const VectorFamily& g2);

} // namespace biframe

#endif
