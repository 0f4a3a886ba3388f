#include "mugames/product.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

namespace mugames {

namespace {

using Ref = FormulaBuilder::Ref;

struct Label {
    enum class Kind { Even, Odd, Marked, Provenance } kind;
    unsigned priority = 0;
    std::string variable;
};

Label parse_label(const std::string& name) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (name == "M") return {Label::Kind::Marked, 0, {}};
    if (name.size() > 2 && name[1] == '_' && (name[0] == 'E' || name[0] == 'O')) {
        std::string_view rest(name);
        rest.remove_prefix(2);
        if (digits(rest))
            return {name[0] == 'E' ? Label::Kind::Even : Label::Kind::Odd, static_cast<unsigned>(std::stoul(std::string(rest))), {}};
        if (name[0] == 'E') return {Label::Kind::Provenance, 0, std::string(rest)};
    }
    throw Error("Win proposition '" + name + "' is not a position label (E_i, O_i, M or E_X)");
}

class Product {
public:
    Product(const Formula& psi, const PriorityAssignment& omega_psi, const Formula& win,
            const PriorityAssignment& omega_win, std::size_t budget)
        : psi_(psi), omega_psi_(omega_psi), win_(win), omega_win_(omega_win), budget_(budget) {
        used_ = psi.propositions();
        for (const auto& v : psi.variables()) used_.insert(v);
        base_ = omega_psi.minimal();
    }

    ProductResult run() {
        Ref root = prod(psi_.root(), win_.root());
        ProductResult r;
        r.formula = b_.build(root);
        r.steps = steps_;
        for (const auto& v : r.formula.variables()) r.omega.priority[v] = omega_.at(v);
        if (!is_order_preserving(r.formula, r.omega))
            throw Error("internal: inherited priority assignment is not order-preserving");
        return r;
    }

private:
    struct Entry {
        NodeId phi;
        std::string x;
        std::string w;
        unsigned priority;
    };

    // Truth of a Win label at positions (s, phi): tt, ff or a Ψ literal.
    Ref label(NodeId phi, const std::string& name, bool positive) {
        const Label l = parse_label(name);
        const Node& n = psi_.node(phi);
        if (is_literal(n.kind)) {
            const bool at_base = l.priority == base_ && (l.kind == Label::Kind::Even || l.kind == Label::Kind::Odd);
            if (!at_base) return positive ? b_.bottom() : b_.top();
            // (s, C) belongs to Odd iff s satisfies C.
            const bool as_is = (l.kind == Label::Kind::Odd) == positive;
            const bool literal_positive = n.kind == Kind::Prop;
            return b_.prop(n.name, as_is == literal_positive);
        }
        const bool odd = n.kind == Kind::And || n.kind == Kind::Box || n.kind == Kind::Top;
        const unsigned prio = n.kind == Kind::Var ? omega_psi_.at(n.name) : base_;
        bool value = false;
        switch (l.kind) {
        case Label::Kind::Even:
            value = !odd && prio == l.priority;
            break;
        case Label::Kind::Odd:
            value = odd && prio == l.priority;
            break;
        case Label::Kind::Marked:
            value = is_modal(n.kind);
            break;
        case Label::Kind::Provenance:
            value = n.kind == Kind::Var && n.name == l.variable;
            break;
        }
        return value == positive ? b_.top() : b_.bottom();
    }

    std::string fresh(NodeId phi, const std::string& x) {
        std::string base = "W" + std::to_string(phi) + "_" + x;
        std::string name = base;
        for (unsigned k = 2; used_.count(name); ++k) name = base + "_" + std::to_string(k);
        used_.insert(name);
        return name;
    }

    Ref bind(NodeId phi, NodeId win_binder) {
        const Node& wb = win_.node(win_binder);
        const std::string w = fresh(phi, wb.name);
        const unsigned prio = omega_win_.at(wb.name);
        omega_[w] = prio;
        stack_.push_back({phi, wb.name, w, prio});
        Ref body = prod(phi, wb.left);
        stack_.pop_back();
        return b_.binder(wb.kind, w, body);
    }

    Ref prod(NodeId phi, NodeId psi) {
        if (++steps_ > budget_) throw Error("product step budget exceeded");
        const Node& wn = win_.node(psi);
        const Node& pn = psi_.node(phi);
        switch (wn.kind) {
        case Kind::Top:
            return b_.top();
        case Kind::Bottom:
            return b_.bottom();
        case Kind::Prop:
        case Kind::NegProp:
            return label(phi, wn.name, wn.kind == Kind::Prop);
        case Kind::And: {
            Ref l = prod(phi, wn.left);
            if (b_.term(l).kind == Kind::Bottom) return l;
            return b_.conj_folded(l, prod(phi, wn.right));
        }
        case Kind::Or: {
            Ref l = prod(phi, wn.left);
            if (b_.term(l).kind == Kind::Top) return l;
            return b_.disj_folded(l, prod(phi, wn.right));
        }
        case Kind::Box:
        case Kind::Diamond: {
            const bool box = wn.kind == Kind::Box;
            if (is_modal(pn.kind)) {
                Ref body = prod(pn.left, wn.left);
                const Kind bk = b_.term(body).kind;
                if (box && bk == Kind::Top) return body;
                if (!box && bk == Kind::Bottom) return body;
                return box ? b_.box(body) : b_.diamond(body);
            }
            Ref acc = box ? b_.top() : b_.bottom();
            for (NodeId child : psi_.successors(phi)) {
                Ref r = prod(child, wn.left);
                acc = box ? b_.conj_folded(acc, r) : b_.disj_folded(acc, r);
                if (b_.term(acc).kind == (box ? Kind::Bottom : Kind::Top)) break;
            }
            return acc;
        }
        case Kind::Mu:
        case Kind::Nu:
            return bind(phi, psi);
        case Kind::Var: {
            const unsigned px = omega_win_.at(wn.name);
            bool blocked = false;
            for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
                if (it->phi == phi && it->x == wn.name) {
                    if (!blocked) return b_.var(it->w);
                    break;
                }
                if (it->priority > px) blocked = true;
            }
            return bind(phi, wn.binder);
        }
        }
        return b_.top();
    }

    const Formula& psi_;
    const PriorityAssignment& omega_psi_;
    const Formula& win_;
    const PriorityAssignment& omega_win_;
    std::size_t budget_;
    std::size_t steps_ = 0;
    unsigned base_ = 0;
    FormulaBuilder b_;
    std::vector<Entry> stack_;
    std::set<std::string> used_;
    std::map<std::string, unsigned> omega_;
};

}  // namespace

ProductResult product(const Formula& psi, const PriorityAssignment& omega_psi, const Formula& win,
                      const PriorityAssignment& omega_win, std::size_t budget) {
    if (!psi.is_guarded()) throw Error("the product needs a guarded formula");
    if (!is_order_preserving(win, omega_win)) throw Error("Win's priority assignment is not order-preserving");
    const auto psi_vars = psi.variables();
    for (const auto& p : win.propositions()) {
        const Label l = parse_label(p);
        if (l.kind == Label::Kind::Provenance && std::find(psi_vars.begin(), psi_vars.end(), l.variable) == psi_vars.end())
            throw Error("Win proposition '" + p + "' names no variable of the input formula");
    }
    if (budget == 0) {
        const double vars = static_cast<double>(win.variables().size());
        const double b = static_cast<double>(psi.size()) * static_cast<double>(win.size()) * std::pow(2.0, vars) * 64;
        budget = b > 5e7 ? 50'000'000 : static_cast<std::size_t>(b);
    }
    return Product(psi, omega_psi, win, omega_win, budget).run();
}

ProductResult product(const Formula& psi, const Formula& win) {
    const Formula g = psi.is_guarded() ? psi : guard(psi);
    return product(g, assign_priorities(g), win, assign_priorities(win));
}

Formula cleanup(const Formula& f) { return fold_constants(f); }

std::string SimplifyReport::to_string() const {
    std::string out = "mugames-simplify 1\n";
    out += "input: " + input.to_string() + "\n";
    out += "output: " + output.to_string() + "\n";
    out += "input-index: " + old_index.to_string() + "\n";
    out += "output-index: " + new_index.to_string() + "\n";
    out += "win-index: " + (win_index ? win_index->to_string() : std::string("{}")) + "\n";
    out += "corpus: " + std::to_string(corpus_size) + "\n";
    out += "checked: " + std::to_string(check.checked) + "\n";
    if (check.passed()) {
        out += "verdict: no counterexample up to bound\n";
    } else {
        const auto& c = *check.counterexample;
        out += "verdict: counterexample\n";
        out += std::string("input-holds: ") + (c.expected ? "yes" : "no") + "\n";
        out += std::string("output-holds: ") + (c.actual ? "yes" : "no") + "\n";
        out += "witness:\n" + store_structure(c.structure);
    }
    return out;
}

SimplifyReport simplify(const Formula& psi, const Formula& win, const std::vector<Structure>& corpus) {
    SimplifyReport r;
    r.input = psi;
    r.output = cleanup(product(psi, win).formula);
    r.old_index = index_class(psi.is_guarded() ? psi : guard(psi));
    r.new_index = index_class(r.output);
    r.win_index = assign_priorities(win).index();
    r.corpus_size = corpus.size();
    r.check = check_equivalent(psi, r.output, corpus);
    return r;
}

}  // namespace mugames
