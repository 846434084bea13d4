#include "pomdplite/belief.hpp"

namespace pomdplite {

Belief Belief::exact(std::vector<double> weights, std::vector<Theta> values) {
    if (weights.empty() || weights.size() != values.size())
        throw ArgumentError("Belief::exact: weights/values size mismatch");
    Belief b;
    b.kind_ = Kind::Exact;
    b.weights_ = std::move(weights);
    b.values_ = std::move(values);
    return b;
}

Belief Belief::particles(std::vector<Theta> values, std::vector<double> weights) {
    if (values.empty())
        throw ArgumentError("Belief::particles: at least one particle required");
    if (weights.empty())
        weights.assign(values.size(), 1.0 / static_cast<double>(values.size()));
    if (weights.size() != values.size())
        throw ArgumentError("Belief::particles: weights/values size mismatch");
    Belief b;
    b.kind_ = Kind::Particle;
    b.weights_ = std::move(weights);
    b.values_ = std::move(values);
    return b;
}

Belief Belief::exact_prior(const Model& model) {
    const std::int64_t n = model.num_hidden_values();
    if (n < 1)
        throw UnsupportedError(model.name() + ": exact prior needs an enumerable hidden space");
    std::vector<double> w;
    model.prior_weights(w);
    std::vector<Theta> values;
    values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) values.push_back(model.hidden_value(i));
    return exact(std::move(w), std::move(values));
}

Belief Belief::particle_prior(const Model& model, int count, Rng& rng) {
    if (count < 1) throw ArgumentError("particle_prior: count must be >= 1");
    std::vector<Theta> values;
    values.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) values.push_back(model.sample_hidden_prior(rng));
    return particles(std::move(values), {});
}

double Belief::total_weight() const {
    double t = 0.0;
    for (double w : weights_) t += w;
    return t;
}

bool Belief::is_normalized(double tol) const {
    for (double w : weights_)
        if (w < 0.0) return false;
    return std::abs(total_weight() - 1.0) <= tol;
}

double Belief::effective_sample_size() const {
    double s2 = 0.0;
    for (double w : weights_) s2 += w * w;
    return s2 > 0.0 ? 1.0 / s2 : 0.0;
}

double Belief::max_weight() const {
    double m = 0.0;
    for (double w : weights_) m = std::max(m, w);
    return m;
}

double Belief::entropy() const {
    double h = 0.0;
    for (double w : weights_)
        if (w > 0.0) h -= w * std::log(w);
    return h;
}

bool Belief::is_degenerate() const {
    const Theta* seen = nullptr;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] <= 0.0) continue;
        if (!seen)
            seen = &values_[i];
        else if (!(*seen == values_[i]))
            return false;
    }
    return true;
}

Belief Belief::with_weights(std::vector<double> w, std::vector<Theta> values) const {
    Belief b;
    b.kind_ = kind_;
    b.weights_ = std::move(w);
    b.values_ = std::move(values);
    return b;
}

Belief make_prior_belief(const Model& model, int particle_count, Rng& rng,
                         std::int64_t exact_threshold) {
    const std::int64_t n = model.num_hidden_values();
    if (n >= 1 && n <= exact_threshold) return Belief::exact_prior(model);
    return Belief::particle_prior(model, particle_count, rng);
}

}  // namespace pomdplite
