#include "astra/completeness.hpp"

#include <map>
#include <set>

namespace astra {

std::optional<std::size_t> ren(const std::vector<ProductState>& seq,
                               const std::vector<bool>& accepting) {
    std::set<ProductState> seen;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        if (accepting.at(seq[n]) && seen.count(seq[n])) return n + 1;
        seen.insert(seq[n]);
    }
    return std::nullopt;
}

std::size_t tfin_cap(const ProductAutomaton& p) {
    return p.full_size() * (p.full_accepting() + 1) + 1;
}

AcceptingTransitionSystem build_tfin(const ProductAutomaton& p, const Controller& ctrl) {
    const std::size_t cap = tfin_cap(p);
    AcceptingTransitionSystem tf;
    std::vector<Controller> memory;
    std::map<std::vector<ProductState>, std::size_t> index;

    auto add_node = [&](std::vector<ProductState> seq, const Controller& c, Control a) {
        if (seq.size() > cap) throw CapExceeded(cap);
        index.emplace(seq, tf.nodes.size());
        tf.nodes.push_back(std::move(seq));
        tf.actions.push_back(a);
        tf.edges.emplace_back();
        memory.push_back(c);
        return tf.nodes.size() - 1;
    };

    {
        auto [c, a] = controller_step(ctrl, p.world(p.initial()));
        add_node({p.initial()}, c, a);
    }
    for (std::size_t i = 0; i < tf.nodes.size(); ++i) {
        const auto seq = tf.nodes[i];
        const Control a = tf.actions[i];
        for (auto t : p.successors(seq.back(), a)) {
            auto ext = seq;
            ext.push_back(t);
            std::size_t target;
            if (!ren(ext, p.accepting())) {
                auto [c, a2] = controller_step(memory[i], p.world(t));
                target = add_node(std::move(ext), c, a2);
            } else {
                // Fold back to the proper prefix ending at t.
                std::optional<std::size_t> fold;
                for (std::size_t k = 1; k < ext.size(); ++k) {
                    if (ext[k - 1] != t) continue;
                    if (fold) throw Error("fold-back target of a T_fin edge is not unique");
                    fold = index.at(std::vector<ProductState>(ext.begin(), ext.begin() + k));
                }
                target = *fold;
            }
            tf.edges[i].push_back(target);
        }
    }
    return tf;
}

ReactivePlan plan_from_tfin(const AcceptingTransitionSystem& tf, const ProductAutomaton& p) {
    std::vector<Scr> scrs;
    for (std::size_t i = 0; i < tf.size(); ++i) {
        Scr scr{i + 1, p.world(tf.label(i)), tf.actions[i], {}};
        for (auto j : tf.edges[i]) scr.successors.push_back(j + 1);
        scrs.push_back(std::move(scr));
    }
    return ReactivePlan(std::move(scrs));
}

}  // namespace astra
