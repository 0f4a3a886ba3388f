#include "mugames/semantics.hpp"

#include <functional>
#include <map>
#include <set>

#include "mugames/solver.hpp"

namespace mugames {

namespace {

using StateSet = std::vector<bool>;

class Evaluator {
public:
    Evaluator(const Structure& t, const Formula& f) : t_(t), f_(f) {}

    StateSet eval(NodeId id) {
        const Node& n = f_.node(id);
        const std::size_t size = t_.size();
        switch (n.kind) {
        case Kind::Top:
            return StateSet(size, true);
        case Kind::Bottom:
            return StateSet(size, false);
        case Kind::Prop:
        case Kind::NegProp: {
            StateSet out(size);
            for (StateId s = 0; s < size; ++s) out[s] = t_.holds(s, n.name) == (n.kind == Kind::Prop);
            return out;
        }
        case Kind::Var:
            return env_.at(n.name);
        case Kind::And:
        case Kind::Or: {
            StateSet l = eval(n.left), r = eval(n.right);
            for (std::size_t s = 0; s < size; ++s) l[s] = n.kind == Kind::And ? (l[s] && r[s]) : (l[s] || r[s]);
            return l;
        }
        case Kind::Diamond:
        case Kind::Box: {
            StateSet body = eval(n.left);
            StateSet out(size);
            for (StateId s = 0; s < size; ++s) {
                const auto& succ = t_.state(s).successors;
                if (n.kind == Kind::Diamond) {
                    out[s] = false;
                    for (StateId w : succ) out[s] = out[s] || body[w];
                } else {
                    out[s] = true;
                    for (StateId w : succ) out[s] = out[s] && body[w];
                }
            }
            return out;
        }
        case Kind::Mu:
        case Kind::Nu: {
            StateSet x(size, n.kind == Kind::Nu);
            while (true) {
                env_[n.name] = x;
                StateSet next = eval(n.left);
                if (next == x) break;
                x = std::move(next);
            }
            env_.erase(n.name);
            return x;
        }
        }
        return {};
    }

private:
    const Structure& t_;
    const Formula& f_;
    std::map<std::string, StateSet> env_;
};

}  // namespace

std::vector<bool> evaluate(const Structure& t, const Formula& f) {
    t.validate();
    return Evaluator(t, f).eval(f.root());
}

bool satisfies(const Structure& t, const Formula& f) { return evaluate(t, f)[t.root()]; }

GameChecker::GameChecker(const Formula& f)
    : formula_(f.is_guarded() ? f : guard(f)), omega_(assign_priorities(formula_)) {}

Arena GameChecker::game(const Structure& t) const { return mc_game(t, formula_, omega_); }

bool GameChecker::operator()(const Structure& t) const { return initial_winner(game(t)) == Player::Even; }

bool holds(const Structure& t, const Formula& f) { return GameChecker(f)(t); }

bool holds_on_game(const Structure& t, const Formula& psi, const Formula& phi, bool provenance) {
    return GameChecker(phi)(encode(GameChecker(psi).game(t), provenance));
}

namespace {

template <typename Verdict>
CheckReport run_check(const std::vector<Structure>& corpus, Verdict verdict) {
    CheckReport r;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto [expected, actual] = verdict(corpus[i]);
        ++r.checked;
        if (expected != actual) {
            r.counterexample = Counterexample{i, corpus[i], expected, actual};
            break;
        }
    }
    return r;
}

}  // namespace

CheckReport check_equivalent(const Formula& a, const Formula& b, const std::vector<Structure>& corpus) {
    const GameChecker ca(a), cb(b);
    return run_check(corpus, [&](const Structure& t) { return std::pair{ca(t), cb(t)}; });
}

CheckReport check_interprets(const Formula& psi, const Formula& phi, const std::vector<Structure>& corpus,
                             bool provenance) {
    const GameChecker cpsi(psi), cphi(phi);
    return run_check(corpus, [&](const Structure& t) {
        const Arena a = cpsi.game(t);
        return std::pair{initial_winner(a) == Player::Even, cphi(encode(a, provenance))};
    });
}

std::vector<Agreement> interpretation_table(const Formula& psi, const Formula& phi,
                                            const std::vector<Structure>& corpus, bool provenance) {
    const GameChecker cpsi(psi), cphi(phi);
    std::vector<Agreement> rows;
    rows.reserve(corpus.size());
    for (const Structure& t : corpus) {
        const Arena a = cpsi.game(t);
        rows.push_back({initial_winner(a) == Player::Even, cphi(encode(a, provenance))});
    }
    return rows;
}

Formula closure(const Formula& f, NodeId id) {
    FormulaBuilder b;
    std::function<FormulaBuilder::Ref(NodeId, std::set<std::string>&)> copy =
        [&](NodeId n, std::set<std::string>& bound) -> FormulaBuilder::Ref {
        const Node& node = f.node(n);
        switch (node.kind) {
        case Kind::Var:
            if (bound.count(node.name)) return b.var(node.name);
            return copy(node.binder, bound);
        case Kind::Mu:
        case Kind::Nu: {
            const bool fresh = bound.insert(node.name).second;
            auto body = copy(node.left, bound);
            if (fresh) bound.erase(node.name);
            return b.binder(node.kind, node.name, body);
        }
        case Kind::And: {
            auto l = copy(node.left, bound);
            return b.conj(l, copy(node.right, bound));
        }
        case Kind::Or: {
            auto l = copy(node.left, bound);
            return b.disj(l, copy(node.right, bound));
        }
        case Kind::Diamond:
            return b.diamond(copy(node.left, bound));
        case Kind::Box:
            return b.box(copy(node.left, bound));
        default:
            return b.import(f, n);
        }
    };
    std::set<std::string> bound;
    return b.build(copy(id, bound));
}

}  // namespace mugames
