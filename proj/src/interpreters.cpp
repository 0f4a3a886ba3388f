#include "mugames/interpreters.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "mugames/semantics.hpp"

namespace mugames {

using Ref = FormulaBuilder::Ref;

namespace {

std::string e(unsigned i) { return "E_" + std::to_string(i); }
std::string o(unsigned i) { return "O_" + std::to_string(i); }

}  // namespace

Formula parity_formula(const Interval& I) {
    if (I.lo > I.hi || I.lo > 1) throw Error("parity formula needs an interval starting at 0 or 1");
    FormulaBuilder b;
    auto x = [](unsigned i) { return "X_" + std::to_string(i); };
    std::vector<Ref> clauses;
    for (unsigned i = I.lo; i <= I.hi; ++i) {
        clauses.push_back(b.conj(b.prop(e(i)), b.diamond(b.var(x(i)))));
        clauses.push_back(b.conj(b.prop(o(i)), b.box(b.var(x(i)))));
    }
    Ref body = b.disj_all(clauses);
    for (unsigned i = I.lo; i <= I.hi; ++i) body = b.binder(i % 2 ? Kind::Mu : Kind::Nu, x(i), body);
    return b.build(body);
}

Formula bounded_formula(unsigned p, unsigned m, const Interval& I) {
    FormulaBuilder b;
    std::map<std::pair<unsigned, unsigned>, Ref> memo;
    std::function<Ref(unsigned, unsigned)> rec = [&](unsigned a, unsigned c) -> Ref {
        if (auto it = memo.find({a, c}); it != memo.end()) return it->second;
        Ref r;
        if (a == 0) {
            r = b.bottom();
        } else {
            std::vector<Ref> clauses;
            for (unsigned i = I.lo; i <= I.hi; ++i) {
                auto clause = [&](const std::string& owner, bool marked, Ref tail) {
                    Ref lit = b.prop("M", marked);
                    clauses.push_back(b.conj(b.prop(owner), b.conj(lit, tail)));
                };
                clause(e(i), false, b.diamond(rec(a - 1, c)));
                clause(e(i), true, c == 0 ? b.bottom() : b.diamond(rec(p, c - 1)));
                clause(o(i), false, b.box(rec(a - 1, c)));
                clause(o(i), true, c == 0 ? b.top() : b.box(rec(p, c - 1)));
            }
            r = b.disj_all(clauses);
        }
        memo[{a, c}] = r;
        return r;
    };
    return b.build(rec(p, m));
}

unsigned segment_bound(const Formula& f) {
    if (!f.is_guarded()) throw Error("segment bound requires a guarded formula");
    // longest[n]: positions on the longest segment starting at n
    std::vector<unsigned> longest(f.size(), 0);
    std::vector<char> state(f.size(), 0);
    std::function<unsigned(NodeId)> walk = [&](NodeId n) -> unsigned {
        if (state[n] == 2) return longest[n];
        if (state[n] == 1) throw Error("modality-free cycle");
        state[n] = 1;
        unsigned best = 1;
        if (!is_modal(f.node(n).kind))
            for (NodeId c : f.successors(n)) best = std::max(best, 1 + walk(c));
        state[n] = 2;
        longest[n] = best;
        return best;
    };
    unsigned p = walk(f.root());
    for (NodeId n = 0; n < f.size(); ++n)
        if (is_modal(f.node(n).kind)) p = std::max(p, walk(f.node(n).left));
    return p;
}

Arena bounded_game(const Arena& a, unsigned n) {
    a.validate();
    // Every cycle must meet M: the unmarked part reachable from the start is acyclic.
    {
        std::vector<char> color(a.size(), 0);
        std::function<void(PosId)> dfs = [&](PosId v) {
            color[v] = 1;
            for (PosId w : a.position(v).successors) {
                if (a.position(w).modal) continue;
                if (color[w] == 1) throw Error("bounded game: a cycle avoids the marked positions");
                if (color[w] == 0) dfs(w);
            }
            color[v] = 2;
        };
        for (PosId v = 0; v < a.size(); ++v)
            if (!a.position(v).modal && color[v] == 0) dfs(v);
    }

    Arena out;
    std::unordered_map<std::uint64_t, PosId> index;
    std::deque<std::pair<PosId, unsigned>> queue;
    auto intern = [&](PosId v, unsigned c) {
        const std::uint64_t key = static_cast<std::uint64_t>(v) * (n + 1) + c;
        auto [it, fresh] = index.try_emplace(key, static_cast<PosId>(out.size()));
        if (fresh) {
            const Position& p = a.position(v);
            PosId id = out.add_position(p.owner, p.priority, p.label + "#" + std::to_string(c));
            Position& q = out.position(id);
            q.modal = p.modal;
            q.variable = p.variable;
            q.state = p.state;
            q.subformula = p.subformula;
            queue.emplace_back(v, c);
        }
        return it->second;
    };
    out.set_initial(intern(a.initial(), n));
    while (!queue.empty()) {
        auto [v, c] = queue.front();
        queue.pop_front();
        const PosId id = index.at(static_cast<std::uint64_t>(v) * (n + 1) + c);
        const Position& p = a.position(v);
        if (p.modal && c == 0) continue;  // exhausted: owner is stuck
        const unsigned next = p.modal ? c - 1 : c;
        for (PosId w : p.successors) out.add_edge(id, intern(w, next));
    }
    return out;
}

Verdicts search_verdicts(const Formula& f, const std::vector<Structure>& corpus) {
    Verdicts out;
    for (NodeId n = 0; n < f.size(); ++n) {
        const Node& node = f.node(n);
        if (node.kind != Kind::Mu) continue;
        const Formula sentence = closure(f, n);
        bool found = false;
        for (const auto& t : corpus)
            if (holds(t, sentence)) {
                found = true;
                break;
            }
        out[node.name] = found;
    }
    return out;
}

Formula pi1_interpreter(const Formula& f, const Verdicts& verdicts, bool provenance) {
    if (!is_disjunctive(f)) throw Error("the Pi1 template needs a disjunctive formula");
    const PriorityAssignment omega = assign_priorities(f);
    const Interval I = omega.index().value_or(Interval{omega.minimal(), omega.minimal()});

    std::vector<std::string> killed;  // unsatisfiable μ-variables
    for (NodeId n = 0; n < f.size(); ++n) {
        const Node& node = f.node(n);
        if (node.kind != Kind::Mu) continue;
        auto it = verdicts.find(node.name);
        if (it == verdicts.end()) throw Error("missing satisfiability verdict for '" + node.name + "'");
        if (!it->second) killed.push_back(node.name);
    }

    std::vector<unsigned> dead;  // priorities whose E clause becomes ff (no provenance)
    if (!provenance) {
        for (const auto& x : killed) {
            const unsigned i = omega.at(x);
            bool all = i != I.lo;
            for (const auto& [y, j] : omega.priority)
                if (j == i && std::find(killed.begin(), killed.end(), y) == killed.end()) all = false;
            if (!all)
                throw Error("replacing the clause of '" + x + "' requires provenance labels (E_" + x + ")");
            if (std::find(dead.begin(), dead.end(), i) == dead.end()) dead.push_back(i);
        }
    }
    auto is_dead = [&](unsigned i) { return std::find(dead.begin(), dead.end(), i) != dead.end(); };

    FormulaBuilder b;
    const std::string y = "Y";
    auto group = [&](const char* owner, unsigned parity, bool skip_dead) {
        std::vector<Ref> props;
        for (unsigned i = I.lo; i <= I.hi; ++i)
            if (i % 2 == parity && !(skip_dead && is_dead(i)))
                props.push_back(b.prop(owner + std::to_string(i)));
        return props;
    };

    std::vector<Ref> clauses;
    for (unsigned parity : {0u, 1u}) {
        auto props = group("E_", parity, true);
        if (props.empty()) continue;
        std::vector<Ref> parts{b.disj_all(props)};
        if (provenance)
            for (const auto& x : killed) parts.push_back(b.prop("E_" + x, false));
        parts.push_back(b.diamond(b.var(y)));
        clauses.push_back(b.conj_all(parts));
    }
    for (unsigned parity : {0u, 1u}) {
        auto props = group("O_", parity, false);
        if (props.empty()) continue;
        clauses.push_back(b.conj(b.disj_all(props), b.box(b.var(y))));
    }
    if (provenance) {
        for (const auto& x : killed) clauses.push_back(b.conj(b.prop("E_" + x), b.bottom()));
    } else {
        for (unsigned i : dead) clauses.push_back(b.conj(b.prop(e(i)), b.bottom()));
    }
    return b.build(b.nu(y, b.disj_all(clauses)));
}

}  // namespace mugames
