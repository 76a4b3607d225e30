#include "orthoq/divdiff.hpp"

#include <stdexcept>

#include "orthoq/error.hpp"

namespace orthoq {

OperatorContext::OperatorContext(Lattice lattice, std::size_t cached_sites)
    : lattice_(std::move(lattice)), cache_(lattice_.grid(cached_sites)) {}

std::vector<HalfInteger> OperatorContext::sites(std::size_t count) const {
    if (count <= cache_.size()) return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(count)};
    return lattice_.grid(count);
}

namespace {

enum class HalfStep { Difference, Mean };

/// Samples the half-step operator at `fit + 1` sites, interpolates over the
/// first `fit` and checks the last.
Polynomial sample_and_fit(const OperatorContext& ctx, const Polynomial& p, std::size_t fit, HalfStep op) {
    const Lattice& lat = ctx.lattice();
    const auto sites = ctx.sites(fit + 1);
    std::vector<InterpolationNode> nodes;
    nodes.reserve(sites.size());
    for (const auto s : sites) {
        const LatticePoint pt = lat.point(s);
        const Rational x_plus = lat.x(lat.shift(pt, kHalf));
        const Rational x_minus = lat.x(lat.shift(pt, HalfInteger() - kHalf));
        Rational value = op == HalfStep::Difference ? Rational((p(x_plus) - p(x_minus)) / (x_plus - x_minus))
                                                    : Rational((p(x_plus) + p(x_minus)) / 2);
        nodes.push_back({lat.x(pt), std::move(value)});
    }
    Polynomial out = interpolate(std::span<const InterpolationNode>(nodes).first(fit));
    if (out(nodes.back().x) != nodes.back().y) {
        throw std::logic_error("operator grid consistency check failed");
    }
    return out;
}

}  // namespace

Polynomial apply_D(const OperatorContext& ctx, const Polynomial& p) {
    if (p.degree() <= 0) return {};
    return sample_and_fit(ctx, p, static_cast<std::size_t>(p.degree()), HalfStep::Difference);
}

Polynomial apply_S(const OperatorContext& ctx, const Polynomial& p) {
    if (p.is_zero()) return {};
    return sample_and_fit(ctx, p, static_cast<std::size_t>(p.degree()) + 1, HalfStep::Mean);
}

Polynomial apply_D_pow(const OperatorContext& ctx, const Polynomial& p, long k) {
    if (k < 0) throw DomainError("operator power must be non-negative");
    Polynomial out = p;
    for (long i = 0; i < k && !out.is_zero(); ++i) out = apply_D(ctx, out);
    return out;
}

Polynomial apply_M(const OperatorContext& ctx, const Polynomial& p) { return apply_S(ctx, p); }

}  // namespace orthoq
