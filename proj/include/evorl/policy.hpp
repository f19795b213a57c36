#ifndef EVORL_POLICY_HPP
#define EVORL_POLICY_HPP

#include <random>
#include <span>

#include <evorl/core.hpp>

namespace evorl {

/// Shape of the policy network: observation -> one tanh hidden layer ->
/// action logits. The flat parameter vector is laid out as
/// [W1 (hidden x obs), b1, W2 (actions x hidden), b2].
struct PolicyLayout {
    std::size_t obs_width = 0;
    std::size_t action_count = 0;
    std::size_t hidden = 32;

    std::size_t param_count() const {
        return hidden * obs_width + hidden + action_count * hidden + action_count;
    }
};

using PolicyParams = std::vector<double>;

inline PolicyParams init_params(const PolicyLayout& layout, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-0.1, 0.1);
    PolicyParams p(layout.param_count());
    for (auto& x : p) x = dist(rng);
    return p;
}

inline bool params_finite(const PolicyParams& p) {
    for (double x : p)
        if (!std::isfinite(x)) return false;
    return true;
}

namespace detail {

/// Hidden activations and logits for one observation.
struct ForwardPass {
    std::vector<double> hidden;  // tanh activations
    std::vector<double> logits;
};

inline ForwardPass forward_pass(const PolicyParams& p, const PolicyLayout& l,
                                std::span<const double> obs) {
    if (obs.size() != l.obs_width)
        throw structural_error("observation width " + std::to_string(obs.size()) +
                               " does not match network width " + std::to_string(l.obs_width));
    if (p.size() != l.param_count())
        throw structural_error("parameter vector length does not match layout");
    for (double x : obs)
        if (!std::isfinite(x)) throw structural_error("non-finite observation feature");

    ForwardPass f;
    f.hidden.resize(l.hidden);
    f.logits.resize(l.action_count);

    const double* w1 = p.data();
    const double* b1 = w1 + l.hidden * l.obs_width;
    const double* w2 = b1 + l.hidden;
    const double* b2 = w2 + l.action_count * l.hidden;

    for (std::size_t h = 0; h < l.hidden; ++h) {
        double z = b1[h];
        const double* row = w1 + h * l.obs_width;
        for (std::size_t i = 0; i < l.obs_width; ++i) z += row[i] * obs[i];
        f.hidden[h] = std::tanh(z);
    }
    for (std::size_t a = 0; a < l.action_count; ++a) {
        double z = b2[a];
        const double* row = w2 + a * l.hidden;
        for (std::size_t h = 0; h < l.hidden; ++h) z += row[h] * f.hidden[h];
        f.logits[a] = z;
    }
    return f;
}

inline std::vector<double> softmax(std::span<const double> logits) {
    double zmax = logits[0];
    for (double z : logits) zmax = std::max(zmax, z);
    std::vector<double> probs(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - zmax);
        sum += probs[i];
    }
    for (auto& q : probs) q /= sum;
    return probs;
}

}  // namespace detail

/// Action distribution of the policy at one observation.
inline std::vector<double> policy_forward(const PolicyParams& p, const PolicyLayout& l,
                                          std::span<const double> obs) {
    return detail::softmax(detail::forward_pass(p, l, obs).logits);
}

/// Greedy action: argmax probability, lowest index on ties.
inline std::size_t argmax_action(std::span<const double> probs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs.size(); ++i)
        if (probs[i] > probs[best]) best = i;
    return best;
}

/// Inverse-CDF sample from a discrete distribution.
inline std::size_t sample_action(std::span<const double> probs, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double u = dist(rng);
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) return i;
    }
    return probs.size() - 1;
}

}  // namespace evorl

#endif  // EVORL_POLICY_HPP
