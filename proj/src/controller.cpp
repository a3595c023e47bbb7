#include <algorithm>
#include <map>
#include <tuple>

#include "astra/plan.hpp"
#include "lassos.hpp"

namespace astra {

Controller::Controller(std::shared_ptr<const ReactivePlan> plan) : plan_(std::move(plan)) {
    if (!plan_) throw Error("controller needs a plan");
    check_uniqueness(*plan_);
}

std::optional<PlanId> Controller::cursor() const {
    if (phase_ != Phase::Tracking) return std::nullopt;
    return cursor_;
}

std::pair<Controller, Control> controller_step(const Controller& c, State observed) {
    Controller next = c;
    const ReactivePlan& rp = *c.plan_;
    switch (c.phase_) {
        case Controller::Phase::Start:
            if (rp.at(1).world == observed) {
                next.phase_ = Controller::Phase::Tracking;
                next.cursor_ = 1;
            } else {
                next.phase_ = Controller::Phase::Detached;
            }
            break;
        case Controller::Phase::Tracking: {
            const auto& n = rp.at(c.cursor_).successors;
            auto it = std::find_if(n.begin(), n.end(),
                                   [&](PlanId j) { return rp.at(j).world == observed; });
            if (it == n.end()) {
                next.phase_ = Controller::Phase::Detached;
                next.cursor_ = 0;
            } else {
                next.cursor_ = *it;
            }
            break;
        }
        case Controller::Phase::Detached:
            break;
    }
    const Control action = next.phase_ == Controller::Phase::Tracking ? rp.at(next.cursor_).action
                                                                      : c.default_action();
    return {std::move(next), action};
}

std::set<StateSequence> outcomes_prefixes(const Ats& ats, State q, const Controller& ctrl,
                                          std::size_t n, std::size_t cap) {
    if (n < 1) throw Error("outcome prefixes need length at least 1");
    struct Item {
        std::vector<State> seq;
        Controller ctrl;
        Control action;
    };
    auto [c0, a0] = controller_step(ctrl, q);
    std::vector<Item> layer{{{q}, c0, a0}};
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<Item> next;
        for (const auto& item : layer) {
            for (auto q2 : ats.successors(item.seq.back(), item.action)) {
                auto [c, a] = controller_step(item.ctrl, q2);
                auto seq = item.seq;
                seq.push_back(q2);
                next.push_back({std::move(seq), std::move(c), a});
                if (next.size() > cap) throw ExplosionGuard(cap);
            }
        }
        layer = std::move(next);
    }
    std::set<StateSequence> out;
    for (auto& item : layer) out.insert(StateSequence(std::move(item.seq)));
    return out;
}

std::set<Lasso<State>> outcome_lassos(const Ats& ats, State q, const Controller& ctrl,
                                      std::size_t bound, std::size_t cap) {
    // Closed-loop graph: node = (controller after observing q, q).
    using Key = std::tuple<Controller::Phase, PlanId, State>;
    std::map<Key, std::size_t> ids;
    std::vector<std::pair<Controller, State>> nodes;
    std::vector<Control> actions;
    RootedGraph g;
    auto intern = [&](const Controller& c, Control a, State w) {
        Key key{c.phase(), c.cursor().value_or(0), w};
        auto [it, fresh] = ids.emplace(key, nodes.size());
        if (fresh) {
            nodes.emplace_back(c, w);
            actions.push_back(a);
            g.adj.emplace_back();
        }
        return it->second;
    };
    auto [c0, a0] = controller_step(ctrl, q);
    g.roots.push_back(intern(c0, a0, q));
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const auto [c, w] = nodes[v];
        for (auto q2 : ats.successors(w, actions[v])) {
            auto [c2, a2] = controller_step(c, q2);
            const std::size_t to = intern(c2, a2, q2);
            g.adj[v].push_back(to);
        }
    }
    return detail::enumerate_lassos(g, bound, cap, [&](std::size_t v) { return nodes[v].second; });
}

}  // namespace astra
