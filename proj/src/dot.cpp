#include "astra/dot.hpp"

#include <map>
#include <sstream>

namespace astra {
namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string product_name(const ProductAutomaton& p, ProductState s, const Ats& ats,
                         const BuchiAutomaton& a) {
    return "(" + ats.states().name(p.world(s)) + "," + a.state_name(p.automaton_state(s)) + ")";
}

}  // namespace

std::string system_to_dot(const Ats& ats, const Valuation& val) {
    std::ostringstream out;
    out << "digraph system {\n  rankdir=LR;\n";
    for (State q = 0; q < ats.num_states(); ++q) {
        out << "  " << quote(ats.states().name(q)) << " [label="
            << quote(ats.states().name(q) + "\n" + letter_to_string(val(q), val.props())) << "];\n";
    }
    // One edge per (from, to) listing its (a, b) labels.
    std::map<std::pair<State, State>, std::vector<std::string>> labels;
    for (const auto& t : ats.transitions()) {
        labels[{t.from, t.to}].push_back(ats.controls().name(t.control) + "," +
                                         ats.disturbances().name(t.disturbance));
    }
    for (const auto& [ends, ls] : labels) {
        out << "  " << quote(ats.states().name(ends.first)) << " -> "
            << quote(ats.states().name(ends.second)) << " [label=" << quote(join(ls, " ")) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string plan_to_dot(const ReactivePlan& rp, const Ats& ats, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=LR;\n  init [shape=point];\n";
    for (const auto& s : rp.scrs()) {
        out << "  n" << s.id << " [label="
            << quote(std::to_string(s.id) + ": " + ats.states().name(s.world) + "\n" +
                     ats.controls().name(s.action))
            << "];\n";
    }
    out << "  init -> n1;\n";
    for (const auto& s : rp.scrs()) {
        for (auto j : s.successors) out << "  n" << s.id << " -> n" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string automaton_to_dot(const BuchiAutomaton& a) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    for (AutState x = 0; x < a.num_states(); ++x) {
        out << "  a" << x << " [label=" << quote(a.state_name(x))
            << (a.is_accepting(x) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
    }
    for (std::size_t i = 0; i < a.initial().size(); ++i) {
        out << "  init" << i << " [shape=point];\n  init" << i << " -> a" << a.initial()[i] << ";\n";
    }
    for (const auto& e : a.edges()) {
        out << "  a" << e.from << " -> a" << e.to << " [label=" << quote(e.guard.to_string(a.props()))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string product_to_dot(const ProductAutomaton& p, const Ats& ats, const BuchiAutomaton& a) {
    std::ostringstream out;
    out << "digraph product {\n  rankdir=LR;\n  init [shape=point];\n";
    for (ProductState s = 0; s < p.size(); ++s) {
        out << "  p" << s << " [label=" << quote(product_name(p, s, ats, a))
            << (p.is_accepting(s) ? ", peripheries=2" : "") << "];\n";
    }
    out << "  init -> p" << p.initial() << ";\n";
    for (ProductState s = 0; s < p.size(); ++s) {
        std::map<ProductState, std::vector<std::string>> labels;
        for (Control c = 0; c < p.num_controls(); ++c) {
            for (Disturbance b = 0; b < p.num_disturbances(); ++b) {
                for (auto t : p.post(s, c, b)) {
                    labels[t].push_back(ats.controls().name(c) + "," + ats.disturbances().name(b));
                }
            }
        }
        for (const auto& [t, ls] : labels) {
            out << "  p" << s << " -> p" << t << " [label=" << quote(join(ls, " ")) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string tfin_to_dot(const AcceptingTransitionSystem& tf, const ProductAutomaton& p,
                        const Ats& ats, const BuchiAutomaton& a) {
    std::ostringstream out;
    out << "digraph tfin {\n  rankdir=LR;\n  init [shape=point];\n";
    for (std::size_t i = 0; i < tf.size(); ++i) {
        std::vector<std::string> seq;
        for (auto s : tf.nodes[i]) seq.push_back(product_name(p, s, ats, a));
        out << "  t" << i << " [label="
            << quote(join(seq, "") + "\n" + ats.controls().name(tf.actions[i]))
            << (p.is_accepting(tf.label(i)) ? ", style=bold" : "") << "];\n";
    }
    out << "  init -> t0;\n";
    for (std::size_t i = 0; i < tf.size(); ++i) {
        for (auto j : tf.edges[i]) {
            out << "  t" << i << " -> t" << j << " [label=" << quote(ats.controls().name(tf.actions[i]))
                << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace astra
