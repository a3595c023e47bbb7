#include "astra/simulate.hpp"

#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace astra {

SimulationResult simulate(const Ats& ats, const ReactivePlan& plan, const SimulationOptions& opts,
                          const SolvedProduct* adversary) {
    if (opts.policy == DisturbancePolicy::Adversarial && !adversary) {
        throw Error("the adversarial policy needs the solved product game");
    }
    std::mt19937_64 rng(opts.seed);
    SimulationResult out;

    State q = plan.at(1).world;
    auto [ctrl, action] = controller_step(Controller(plan), q);
    ProductState ps = adversary ? adversary->product.initial() : 0;
    std::set<std::tuple<Controller::Phase, PlanId, State>> visited;

    for (std::size_t step = 1; step <= opts.steps; ++step) {
        if (ctrl.phase() == Controller::Phase::Detached) out.detached = true;
        if (!visited.emplace(ctrl.phase(), ctrl.cursor().value_or(0), q).second && !out.detached) {
            out.lasso_detected = true;
        }

        Disturbance b = 0;
        State next = q;
        switch (opts.policy) {
            case DisturbancePolicy::Random: {
                b = std::uniform_int_distribution<Disturbance>(0, ats.num_disturbances() - 1)(rng);
                auto post = ats.post(q, action, b);
                next = post[std::uniform_int_distribution<std::size_t>(0, post.size() - 1)(rng)];
                break;
            }
            case DisturbancePolicy::Scripted: {
                if (step > opts.script.size()) return out;
                b = opts.script[step - 1];
                next = ats.post(q, action, b).front();
                break;
            }
            case DisturbancePolicy::Adversarial: {
                // Successor with the largest attractor rank in the product game.
                const auto& p = adversary->product;
                const auto& rank = adversary->solution.rank;
                std::optional<std::size_t> best_rank;
                for (Disturbance cand = 0; cand < ats.num_disturbances(); ++cand) {
                    for (auto t : p.post(ps, action, cand)) {
                        if (!best_rank || rank[t] > *best_rank) {
                            best_rank = rank[t];
                            b = cand;
                            next = p.world(t);
                        }
                    }
                }
                break;
            }
        }
        out.steps.push_back({step, q, action, b, next});
        if (adversary) {
            for (auto t : adversary->product.post(ps, action, b)) {
                if (adversary->product.world(t) == next) ps = t;
            }
        }
        q = next;
        std::tie(ctrl, action) = controller_step(ctrl, q);
    }
    if (ctrl.phase() == Controller::Phase::Detached) out.detached = true;
    return out;
}

std::string format_trace(const SimulationResult& r, const Ats& ats) {
    std::ostringstream out;
    for (const auto& s : r.steps) {
        out << s.step << ' ' << ats.states().name(s.state) << ' ' << ats.controls().name(s.action)
            << ' ' << ats.disturbances().name(s.disturbance) << ' ' << ats.states().name(s.next)
            << '\n';
    }
    return out.str();
}

}  // namespace astra
