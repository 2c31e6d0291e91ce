#ifndef BIFRAME_MEASURE_HPP
#define BIFRAME_MEASURE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace biframe {

// One point of a discretized measure space: an opaque label plus its mass.
struct Atom {
    std::string label;
    double weight = 0.0;
};

/// A finite measure space: atoms with positive weights. Immutable after
/// construction, so concurrent readers need no synchronization. Labels are
/// opaque (indices for counting/partition measures, node coordinates for
/// quadrature rules); the library never evaluates symbolic functions, callers
/// sample per-atom instead.
class AtomSpace {
public:
    AtomSpace(std::vector<Atom> atoms,
              std::optional<std::vector<double>> nodes = std::nullopt,
              std::optional<std::string> note = std::nullopt);

    std::size_t size() const { return atoms_.size(); }
    const std::vector<Atom>& atoms() const { return atoms_; }
    double weight(std::size_t k) const { return atoms_[k].weight; }
    const std::string& label(std::size_t k) const { return atoms_[k].label; }
    double total_weight() const { return total_weight_; }

    // Node coordinates, present only for quadrature-built spaces.
    const std::optional<std::vector<double>>& nodes() const { return nodes_; }

    // Free-form provenance (e.g. truncation level); carried into reports.
    const std::optional<std::string>& note() const { return note_; }

    bool operator==(const AtomSpace& other) const;

private:
    std::vector<Atom> atoms_;
    double total_weight_ = 0.0;
    std::optional<std::vector<double>> nodes_;
    std::optional<std::string> note_;
};

enum class QuadratureKind { MidpointComposite, GaussLegendre };

// Quadrature rule on a real interval; GaussLegendre with n nodes is exact for
// polynomials of degree <= 2n-1.
struct QuadratureRule {
    QuadratureKind kind = QuadratureKind::MidpointComposite;
    int node_count = 0;
    double lo = 0.0;
    double hi = 1.0;
};

/// n atoms of unit weight, labels "0".."n-1".
AtomSpace counting_space(int n);

/// One atom per partition cell with the cell's measure as weight.
AtomSpace partition_space(std::span<const double> weights);

/// Nodes and weights of the rule, node coordinates attached as labels and
/// retrievable via nodes().
AtomSpace build_quadrature(const QuadratureRule& rule);

/// Weighted sum of per-atom samples: sum_k w_k * values[k].
double integrate(const AtomSpace& space, std::span<const double> values);

} // namespace biframe

#endif
