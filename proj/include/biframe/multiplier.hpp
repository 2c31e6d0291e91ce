#ifndef BIFRAME_MULTIPLIER_HPP
#define BIFRAME_MULTIPLIER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "biframe/biframe.hpp"
#include "biframe/linalg.hpp"
#include "biframe/measure.hpp"

namespace biframe {

/// A scalar symbol sampled per atom, with its sup-norm cached.
class SymbolFunction {
public:
    SymbolFunction(std::shared_ptr<const AtomSpace> atom_space, std::vector<Scalar> values);

    const std::shared_ptr<const AtomSpace>& atom_space() const { return atom_space_; }
    const std::vector<Scalar>& values() const { return values_; }
    Scalar value(std::size_t k) const { return values_[k]; }
    double sup_norm() const { return sup_norm_; }
    std::size_t size() const { return values_.size(); }

    SymbolFunction conjugated() const;

private:
    std::shared_ptr<const AtomSpace> atom_space_;
    std::vector<Scalar> values_;
    double sup_norm_ = 0.0;
};

/// M f = sum_k w_k m(k) <f, F(k)> G(k), plus the norm bound
/// ||m||_inf sqrt(B1 B2) it is guaranteed to satisfy (B1, B2 the optimal
/// Bessel bounds of (F,F) and (G,G)).
struct MultiplierOperator {
    Op M;
    SymbolFunction symbol;
    double bessel_f = 0.0; // B1
    double bessel_g = 0.0; // B2
    double norm_bound = 0.0;
    double actual_norm = 0.0;
};

struct LowerBoundCertificate {
    double injectivity = 0.0;   // D: smallest singular value of M
    double implied_lower = 0.0; // D^2 / (||m||_inf^2 B2)
    double actual_lower = 0.0;  // optimal lower bound of (F,F)
    bool holds = false;
};

/// Verdict for the norm-perturbation hypothesis
/// ||f - Mf|| <= lambda1 ||f|| + lambda2 ||Mf||, certified through the
/// sufficient operator-norm condition (see perturbation_certificate).
struct PerturbationCertificate {
    bool hypothesis_ok = false;
    double hypothesis_gap = 0.0; // lambda1 + lambda2*s - ||I - M||, >= 0 when ok
    double implied_lower_ff = 0.0;
    double actual_lower_ff = 0.0;
    std::optional<double> implied_lower_gg; // emitted for lambda2 = 0, lambda1 in [0,1)
    double actual_lower_gg = 0.0;
    bool holds = false;
};

/// Optional user-supplied Bessel bounds override the computed optimal ones
/// when reproducing looser textbook inequalities.
MultiplierOperator build_multiplier(const SymbolFunction& m, const VectorFamily& F,
                                    const VectorFamily& G,
                                    std::optional<double> bessel_f_override = std::nullopt,
                                    std::optional<double> bessel_g_override = std::nullopt);

/// Adjoint of M. Checks <Mf,g> = <f,M*g> on the standard basis and the
/// entrywise identity M* = multiplier(conj(m), G, F); both must hold to 1e-13.
Op multiplier_adjoint(const MultiplierOperator& mult, const VectorFamily& F,
                      const VectorFamily& G);

LowerBoundCertificate lower_bound_certificate(const MultiplierOperator& mult,
                                              const VectorFamily& F, const VectorFamily& G);

PerturbationCertificate perturbation_certificate(const MultiplierOperator& mult,
                                                 const VectorFamily& F, const VectorFamily& G,
                                                 double lambda1, double lambda2);

/// The dual pair (F', G) with F'(k) = (M^-1)* (conj(m(k)) F(k)).
BiframePair multiplier_dual(const MultiplierOperator& mult, const SymbolFunction& m,
                            const VectorFamily& F, const VectorFamily& G, double tol = 1e-10);

} // namespace biframe

#endif
