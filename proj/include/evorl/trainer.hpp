#ifndef EVORL_TRAINER_HPP
#define EVORL_TRAINER_HPP

#include <evorl/policy.hpp>
#include <evorl/reward.hpp>

namespace evorl {

/// Budget for one training call. `episodes` policy-gradient updates are
/// applied, one per episode.
struct TrainBudget {
    std::size_t episodes = 200;
    double discount = 0.95;
    double learning_rate = 0.05;
    double entropy_coeff = 0.01;

    void validate() const {
        if (episodes < 1) throw structural_error("train budget needs episodes >= 1");
        if (!(discount > 0.0 && discount <= 1.0))
            throw structural_error("discount must lie in (0, 1]");
        if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
            throw structural_error("learning rate must be finite and >= 0");
        if (!(entropy_coeff >= 0.0))
            throw structural_error("entropy coefficient must be >= 0");
    }
};

/// What an environment hands back from one step.
struct StepOutcome {
    std::vector<double> obs;
    RewardSample reward;
    bool done = false;
};

/// One step of a frozen episode, as seen by the surrogate objective.
struct SurrogateStep {
    std::vector<double> obs;
    std::size_t action = 0;
    double advantage = 0.0;
};

/// REINFORCE surrogate for a frozen episode:
///   J(theta) = sum_t [ A_t * log pi(a_t | s_t) + beta * H(pi(. | s_t)) ].
/// Advantages are constants here; only the policy depends on theta.
inline double surrogate_loss(const PolicyParams& p, const PolicyLayout& l,
                             const std::vector<SurrogateStep>& steps, double beta) {
    double j = 0.0;
    for (const auto& step : steps) {
        const auto probs = policy_forward(p, l, step.obs);
        j += step.advantage * std::log(probs[step.action]);
        double entropy = 0.0;
        for (double q : probs)
            if (q > 0.0) entropy -= q * std::log(q);
        j += beta * entropy;
    }
    return j;
}

/// Analytic gradient of surrogate_loss with respect to the parameters.
///
/// Per step, at the logits z:
///   d/dz_k [A log pi(a)] = A (1{k==a} - pi_k)
///   d/dz_k H             = -pi_k (log pi_k + H)
/// and the rest is plain backprop through the tanh layer.
inline PolicyParams policy_gradient(const PolicyParams& p, const PolicyLayout& l,
                                    const std::vector<SurrogateStep>& steps, double beta) {
    PolicyParams grad(l.param_count(), 0.0);
    double* g_w1 = grad.data();
    double* g_b1 = g_w1 + l.hidden * l.obs_width;
    double* g_w2 = g_b1 + l.hidden;
    double* g_b2 = g_w2 + l.action_count * l.hidden;

    const double* w2 = p.data() + l.hidden * l.obs_width + l.hidden;

    std::vector<double> dz(l.action_count);
    std::vector<double> dh(l.hidden);

    for (const auto& step : steps) {
        const auto f = detail::forward_pass(p, l, step.obs);
        const auto probs = detail::softmax(f.logits);

        double entropy = 0.0;
        for (double q : probs)
            if (q > 0.0) entropy -= q * std::log(q);

        for (std::size_t k = 0; k < l.action_count; ++k) {
            const double indicator = (k == step.action) ? 1.0 : 0.0;
            dz[k] = step.advantage * (indicator - probs[k]);
            if (beta != 0.0 && probs[k] > 0.0)
                dz[k] -= beta * probs[k] * (std::log(probs[k]) + entropy);
        }

        for (std::size_t a = 0; a < l.action_count; ++a) {
            double* row = g_w2 + a * l.hidden;
            for (std::size_t h = 0; h < l.hidden; ++h) row[h] += dz[a] * f.hidden[h];
            g_b2[a] += dz[a];
        }
        for (std::size_t h = 0; h < l.hidden; ++h) {
            double acc = 0.0;
            for (std::size_t a = 0; a < l.action_count; ++a)
                acc += dz[a] * w2[a * l.hidden + h];
            dh[h] = acc * (1.0 - f.hidden[h] * f.hidden[h]);
        }
        for (std::size_t h = 0; h < l.hidden; ++h) {
            double* row = g_w1 + h * l.obs_width;
            for (std::size_t i = 0; i < l.obs_width; ++i) row[i] += dh[h] * step.obs[i];
            g_b1[h] += dh[h];
        }
    }
    return grad;
}

/// Optional per-episode instrumentation.
struct TrainStats {
    std::vector<double> episode_shaped_returns;  // undiscounted sums
    std::vector<double> episode_perf_returns;
};

/// Episodic REINFORCE over the shaped reward, with a running episode-mean
/// baseline and an entropy bonus. One gradient-ascent step per episode.
/// Deterministic given (params, weights, budget, env config, rng seed).
///
/// The baseline tracks the mean episode return across episodes (moving
/// average); a within-episode mean would zero out every one-step episode
/// and make bandit-style tasks unlearnable.
template <typename Env>
PolicyParams train(PolicyParams params, Env& env, const ShapingWeights& weights,
                   const TrainBudget& budget, std::mt19937_64& rng,
                   TrainStats* stats = nullptr) {
    budget.validate();
    const PolicyLayout layout{env.obs_width(), env.action_count()};
    if (params.size() != layout.param_count())
        throw structural_error("parameter vector does not match environment layout");

    double baseline = 0.0;
    bool baseline_ready = false;
    constexpr double kBaselineRate = 0.1;

    std::vector<SurrogateStep> steps;
    std::vector<double> rewards;

    for (std::size_t e = 0; e < budget.episodes; ++e) {
        steps.clear();
        rewards.clear();

        std::vector<double> obs = env.reset(rng);
        bool done = false;
        double shaped_sum = 0.0;
        double perf_sum = 0.0;
        while (!done) {
            const auto probs = policy_forward(params, layout, obs);
            const std::size_t action = sample_action(probs, rng);
            StepOutcome out = env.step(action, rng);
            const double r = shaped_reward(out.reward, weights);
            shaped_sum += r;
            perf_sum += out.reward.r_perf;
            steps.push_back({std::move(obs), action, 0.0});
            rewards.push_back(r);
            obs = std::move(out.obs);
            done = out.done;
        }
        if (stats) {
            stats->episode_shaped_returns.push_back(shaped_sum);
            stats->episode_perf_returns.push_back(perf_sum);
        }
        if (steps.empty()) continue;

        // Discounted return per step, computed backward.
        double g = 0.0;
        double g_mean = 0.0;
        for (std::size_t t = steps.size(); t-- > 0;) {
            g = rewards[t] + budget.discount * g;
            steps[t].advantage = g;
            g_mean += g;
        }
        g_mean /= static_cast<double>(steps.size());

        const double b = baseline_ready ? baseline : 0.0;
        for (auto& s : steps) s.advantage -= b;

        const PolicyParams grad = policy_gradient(params, layout, steps, budget.entropy_coeff);
        for (std::size_t i = 0; i < params.size(); ++i)
            params[i] += budget.learning_rate * grad[i];

        if (!params_finite(params))
            throw divergence_error("policy parameters diverged during training");

        baseline = baseline_ready ? baseline + kBaselineRate * (g_mean - baseline) : g_mean;
        baseline_ready = true;
    }
    return params;
}

}  // namespace evorl

#endif  // EVORL_TRAINER_HPP
