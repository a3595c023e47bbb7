#pragma once

#include <optional>
#include <vector>

#include "astra/buchi.hpp"
#include "astra/plan.hpp"

namespace astra {

/// Smallest 1-based n such that seq[n] is accepting and occurs at some i < n;
/// nullopt stands for infinity.
std::optional<std::size_t> ren(const std::vector<ProductState>& seq,
                               const std::vector<bool>& accepting);

/// Outcome prefixes without accepting recurrence, with fold-back edges.
struct AcceptingTransitionSystem {
    std::vector<std::vector<ProductState>> nodes;  // node 0 is (q0, x0)
    std::vector<Control> actions;                  // f_T at each node
    std::vector<std::vector<std::size_t>> edges;

    std::size_t size() const { return nodes.size(); }
    ProductState label(std::size_t i) const { return nodes.at(i).back(); }
};

/// Length bound |S_T| * (|F_T| + 1) + 1 over the full product.
std::size_t tfin_cap(const ProductAutomaton& p);

/// Builds T_fin for the product strategy f_T = f o Upsilon_T given by `ctrl`.
/// Throws CapExceeded if some prefix outgrows tfin_cap(p).
AcceptingTransitionSystem build_tfin(const ProductAutomaton& p, const Controller& ctrl);

/// RP(T_fin): one SCR per node, plan state i + 1 for node i.
ReactivePlan plan_from_tfin(const AcceptingTransitionSystem& tf, const ProductAutomaton& p);

}  // namespace astra
