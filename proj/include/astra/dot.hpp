#pragma once

#include <string>

#include "astra/buchi.hpp"
#include "astra/completeness.hpp"
#include "astra/core.hpp"
#include "astra/plan.hpp"

namespace astra {

// Graphviz renderings. Node and edge order follow the model's own order, so
// equal inputs produce identical bytes.

std::string system_to_dot(const Ats& ats, const Valuation& val);
std::string plan_to_dot(const ReactivePlan& rp, const Ats& ats, const std::string& name = "plan");
std::string automaton_to_dot(const BuchiAutomaton& a);
std::string product_to_dot(const ProductAutomaton& p, const Ats& ats, const BuchiAutomaton& a);
std::string tfin_to_dot(const AcceptingTransitionSystem& tf, const ProductAutomaton& p,
                        const Ats& ats, const BuchiAutomaton& a);

}  // namespace astra
