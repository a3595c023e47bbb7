#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace astra::testing {

namespace {

std::vector<bool> unrolled(const std::vector<Letter>& w, const Formula& f) {
    const std::size_t h = w.size();
    std::vector<bool> t(h);
    switch (f.kind()) {
        case FormulaKind::True:
            t.assign(h, true);
            break;
        case FormulaKind::Atom:
            for (std::size_t i = 0; i < h; ++i) t[i] = (w[i] >> f.prop() & 1u) != 0;
            break;
        case FormulaKind::Not: {
            auto a = unrolled(w, f.lhs());
            for (std::size_t i = 0; i < h; ++i) t[i] = !a[i];
            break;
        }
        case FormulaKind::And: {
            auto a = unrolled(w, f.lhs());
            auto b = unrolled(w, f.rhs());
            for (std::size_t i = 0; i < h; ++i) t[i] = a[i] && b[i];
            break;
        }
        case FormulaKind::Until: {
            auto a = unrolled(w, f.lhs());
            auto b = unrolled(w, f.rhs());
            bool next = false;
            for (std::size_t i = h; i-- > 0;) {
                t[i] = b[i] || (a[i] && next);
                next = t[i];
            }
            break;
        }
    }
    return t;
}

// Nodes of `g` from which some path reaches a cycle of non-accepting nodes.
// choice[v] restricts Control node v to one edge; kUnranked marks a Control
// node with no choice, which counts as losing.
std::vector<bool> losing_nodes(const GameArena& g, const std::vector<std::size_t>& choice) {
    const std::size_t n = g.size();
    auto succ = [&](std::size_t v) {
        std::vector<std::size_t> out;
        if (g.owner[v] == Player::Control) {
            if (choice[v] != kUnranked) out.push_back(g.edges[v][choice[v]].to);
        } else {
            for (const auto& e : g.edges[v]) out.push_back(e.to);
        }
        return out;
    };
    std::vector<bool> bad(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        if (g.owner[u] == Player::Control && choice[u] == kUnranked) {
            bad[u] = true;
            continue;
        }
        if (g.accepting[u]) continue;
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{u};
        while (!stack.empty() && !bad[u]) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : succ(v)) {
                if (w == u) bad[u] = true;
                if (g.accepting[w] || seen[w]) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<bool> lose(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{v};
        seen[v] = true;
        while (!stack.empty() && !lose[v]) {
            auto x = stack.back();
            stack.pop_back();
            if (bad[x]) lose[v] = true;
            for (auto w : succ(x)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return lose;
}

bool has_cycle(const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<int> color(adj.size(), 0);
    std::function<bool(std::size_t)> visit = [&](std::size_t v) {
        color[v] = 1;
        for (auto w : adj[v]) {
            if (color[w] == 1) return true;
            if (color[w] == 0 && visit(w)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (color[v] == 0 && visit(v)) return true;
    }
    return false;
}

}  // namespace

bool oracle_eval(const Lasso<Letter>& word, const Formula& f) {
    const std::size_t h = word.span() * (f.size() + 2);
    std::vector<Letter> w;
    for (std::size_t i = 1; i <= h; ++i) w.push_back(word.at(i));
    return unrolled(w, f)[0];
}

std::set<Lasso<State>> oracle_plan_lassos(const ReactivePlan& rp, std::size_t bound) {
    std::set<Lasso<State>> out;
    std::vector<PlanId> path{1};
    std::function<void()> extend = [&] {
        const auto& last = rp.at(path.back());
        for (std::size_t j = 0; j < path.size(); ++j) {
            if (std::find(last.successors.begin(), last.successors.end(), path[j]) == last.successors.end()) {
                continue;
            }
            Lasso<State> l;
            for (std::size_t i = 0; i < path.size(); ++i) {
                (i < j ? l.prefix : l.cycle).push_back(rp.at(path[i]).world);
            }
            out.insert(l.canonical());
        }
        if (path.size() == bound) return;
        for (auto m : last.successors) {
            path.push_back(m);
            extend();
            path.pop_back();
        }
    };
    if (bound > 0) extend();
    return out;
}

bool oracle_replayable(const ReactivePlan& rp, const Lasso<State>& w) {
    if (rp.at(1).world != w.at(1)) return false;
    const std::size_t span = w.span();
    const std::size_t k = rp.size();
    auto id = [&](std::size_t pos, PlanId n) { return (pos - 1) * k + (n - 1); };
    std::vector<std::vector<std::size_t>> adj(span * k);
    for (std::size_t pos = 1; pos <= span; ++pos) {
        const std::size_t next = w.next(pos);
        for (PlanId n = 1; n <= k; ++n) {
            for (auto m : rp.at(n).successors) {
                if (rp.at(m).world == w.at(next)) adj[id(pos, n)].push_back(id(next, m));
            }
        }
    }
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{id(1, 1)};
    seen[id(1, 1)] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto x : adj[v]) {
            if (!seen[x]) {
                seen[x] = true;
                stack.push_back(x);
            }
        }
    }
    std::vector<std::vector<std::size_t>> sub(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (seen[v]) sub[v] = adj[v];
    }
    return has_cycle(sub);
}

std::vector<bool> oracle_buchi_winning(const GameArena& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> controls;
    for (std::size_t v = 0; v < n; ++v) {
        if (g.owner[v] == Player::Control) controls.push_back(v);
    }
    std::vector<std::size_t> choice(n, 0);
    std::vector<bool> win(n, false);
    while (true) {
        auto lose = losing_nodes(g, choice);
        for (std::size_t v = 0; v < n; ++v) win[v] = win[v] || !lose[v];
        std::size_t i = 0;
        for (; i < controls.size(); ++i) {
            auto v = controls[i];
            if (++choice[v] < g.edges[v].size()) break;
            choice[v] = 0;
        }
        if (i == controls.size()) break;
    }
    return win;
}

bool oracle_strategy_wins(const GameArena& g, const std::vector<std::optional<std::size_t>>& strategy,
                          std::size_t from) {
    std::vector<std::size_t> choice(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.owner[v] == Player::Control) choice[v] = strategy[v] ? *strategy[v] : kUnranked;
    }
    return !losing_nodes(g, choice)[from];
}

bool oracle_product_winnable(const ProductAutomaton& p) {
    const std::size_t n = p.size();
    const std::size_t na = p.num_controls();
    std::vector<std::size_t> assign(n, kUnranked);
    std::function<bool()> search = [&] {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> queue{p.initial()};
        seen[p.initial()] = true;
        std::optional<std::size_t> open;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            auto s = queue[h];
            if (assign[s] == kUnranked) {
                if (!open) open = s;
                continue;
            }
            for (auto t : p.successors(s, assign[s])) {
                if (!seen[t]) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto s : queue) {
            if (assign[s] == kUnranked || p.is_accepting(s)) continue;
            for (auto t : p.successors(s, assign[s])) {
                if (assign[t] != kUnranked && !p.is_accepting(t)) adj[s].push_back(t);
            }
        }
        if (has_cycle(adj)) return false;
        if (!open) return true;
        for (std::size_t a = 0; a < na; ++a) {
            assign[*open] = a;
            if (search()) return true;
        }
        assign[*open] = kUnranked;
        return false;
    };
    return search();
}

namespace {

struct Token {
    enum Kind { Id, Punct, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (c == '"') {
            std::string text;
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) text += s[i++];
                text += s[i++];
            }
            if (i == s.size()) throw std::runtime_error("unterminated string");
            ++i;
            out.push_back({Token::Id, text});
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
            out.push_back({Token::Id, s.substr(i, j - i)});
            i = j;
        } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '-')) {
            out.push_back({Token::Punct, s.substr(i, 2)});
            i += 2;
        } else if (std::string("{}[]=;,").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c)});
            ++i;
        } else {
            throw std::runtime_error(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

class DotParser {
public:
    explicit DotParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    DotGraph run() {
        DotGraph g;
        if (peek_id("strict")) ++pos_;
        if (peek_id("digraph")) g.directed = true;
        else if (!peek_id("graph")) fail("expected graph or digraph");
        ++pos_;
        if (cur().kind == Token::Id) g.name = toks_[pos_++].text;
        expect("{");
        while (!peek("}")) {
            statement(g);
            if (peek(";")) ++pos_;
        }
        expect("}");
        if (cur().kind != Token::End) fail("trailing input");
        g.ok = true;
        return g;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool peek(const std::string& p) const { return cur().kind == Token::Punct && cur().text == p; }
    bool peek_id(const std::string& w) const { return cur().kind == Token::Id && cur().text == w; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(msg + " at token '" + cur().text + "'");
    }
    void expect(const std::string& p) {
        if (!peek(p)) fail("expected '" + p + "'");
        ++pos_;
    }
    std::string id() {
        if (cur().kind != Token::Id) fail("expected identifier");
        return toks_[pos_++].text;
    }

    void attributes() {
        while (peek("[")) {
            ++pos_;
            while (!peek("]")) {
                id();
                expect("=");
                id();
                if (peek(",") || peek(";")) ++pos_;
            }
            expect("]");
        }
    }

    void statement(DotGraph& g) {
        if (peek_id("graph") || peek_id("node") || peek_id("edge")) {
            ++pos_;
            if (!peek("[")) fail("expected attribute list");
            attributes();
            return;
        }
        std::string lhs = id();
        if (peek("=")) {
            ++pos_;
            id();
            return;
        }
        if (!peek("->") && !peek("--")) {
            g.nodes.push_back(lhs);
            attributes();
            return;
        }
        while (peek("->") || peek("--")) {
            if ((cur().text == "->") != g.directed) fail("edge operator does not match graph kind");
            ++pos_;
            std::string rhs = id();
            g.edges.emplace_back(lhs, rhs);
            lhs = rhs;
        }
        attributes();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

DotGraph parse_dot(const std::string& text) {
    try {
        return DotParser(tokenize(text)).run();
    } catch (const std::exception& e) {
        DotGraph g;
        g.error = e.what();
        return g;
    }
}

}  // namespace astra::testing
