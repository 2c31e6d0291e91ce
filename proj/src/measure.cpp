#include "biframe/measure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include "biframe/errors.hpp"

namespace biframe {

AtomSpace::AtomSpace(std::vector<Atom> atoms,
                     std::optional<std::vector<double>> nodes,
                     std::optional<std::string> note)
    : atoms_(std::move(atoms)), nodes_(std::move(nodes)), note_(std::move(note)) {
    if (atoms_.empty())
        throw InvalidArgument("AtomSpace: needs at least one atom");
    std::unordered_set<std::string> seen;
    seen.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw InvalidArgument("AtomSpace: atom '" + a.label + "' has non-positive weight");
        if (!seen.insert(a.label).second)
            throw InvalidArgument("AtomSpace: duplicate atom label '" + a.label + "'");
    }
    if (nodes_ && nodes_->size() != atoms_.size())
        throw InvalidArgument("AtomSpace: node list length does not match atom count");
    double sum = 0.0;
    for (const Atom& a : atoms_) sum += a.weight;
    total_weight_ = sum;
}

bool AtomSpace::operator==(const AtomSpace& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    for (std::size_t k = 0; k < atoms_.size(); ++k)
        if (atoms_[k].label != other.atoms_[k].label || atoms_[k].weight != other.atoms_[k].weight)
            return false;
    return true;
}

AtomSpace counting_space(int n) {
    if (n < 1) throw InvalidArgument("counting_space: n must be >= 1");
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) atoms.push_back({std::to_string(i), 1.0});
    return AtomSpace(std::move(atoms));
}

AtomSpace partition_space(std::span<const double> weights) {
    if (weights.empty()) throw InvalidArgument("partition_space: empty weight list");
    std::vector<Atom> atoms;
    atoms.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw InvalidArgument("partition_space: weight at index " + std::to_string(i) +
                                  " is not positive");
        atoms.push_back({std::to_string(i), weights[i]});
    }
    return AtomSpace(std::move(atoms));
}

namespace {

std::string node_label(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 17);
    return std::string(buf, ptr);
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
// Standard initial guess cos(pi*(i-1/4)/(n+1/2)) converges in a handful of
// steps for the node counts used here (n <= a few hundred).
void gauss_legendre_reference(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(z) via the three-term recurrence, plus its derivative.
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p2) / (j + 1.0);
            }
            pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
    if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
}

} // namespace

AtomSpace build_quadrature(const QuadratureRule& rule) {
    if (rule.node_count < 1) throw InvalidArgument("build_quadrature: node_count must be >= 1");
    if (!(rule.lo < rule.hi)) throw InvalidArgument("build_quadrature: interval requires lo < hi");
    const int n = rule.node_count;
    const double length = rule.hi - rule.lo;

    std::vector<double> nodes(static_cast<std::size_t>(n));
    std::vector<double> weights(static_cast<std::size_t>(n));
    switch (rule.kind) {
    case QuadratureKind::MidpointComposite: {
        const double h = length / n;
        for (int i = 0; i < n; ++i) {
            nodes[static_cast<std::size_t>(i)] = rule.lo + (static_cast<double>(i) + 0.5) * h;
            weights[static_cast<std::size_t>(i)] = h;
        }
        break;
    }
    case QuadratureKind::GaussLegendre: {
        std::vector<double> xr, wr;
        gauss_legendre_reference(n, xr, wr);
        const double mid = 0.5 * (rule.lo + rule.hi);
        const double half = 0.5 * length;
        for (int i = 0; i < n; ++i) {
            nodes[static_cast<std::size_t>(i)] = mid + half * xr[static_cast<std::size_t>(i)];
            weights[static_cast<std::size_t>(i)] = half * wr[static_cast<std::size_t>(i)];
        }
        break;
    }
    }

    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        atoms.push_back({node_label(nodes[static_cast<std::size_t>(i)]),
                         weights[static_cast<std::size_t>(i)]});
    return AtomSpace(std::move(atoms), std::move(nodes));
}

double integrate(const AtomSpace& space, std::span<const double> values) {
    if (values.size() != space.size())
        throw ShapeError("integrate: sample count does not match atom count");
    double acc = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) acc += space.weight(k) * values[k];
    return acc;
}

} // namespace biframe
