#include "mugames/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace mugames {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
      column_(column) {}

bool is_binder(Kind k) { return k == Kind::Mu || k == Kind::Nu; }
bool is_modal(Kind k) { return k == Kind::Diamond || k == Kind::Box; }
bool is_literal(Kind k) { return k == Kind::Prop || k == Kind::NegProp; }

// ---------------------------------------------------------------------------
// Formula

Formula::Formula() { nodes_.push_back(Node{Kind::Top, {}, kNoNode, kNoNode, kNoNode}); }

std::vector<NodeId> Formula::successors(NodeId id) const {
    const Node& n = node(id);
    switch (n.kind) {
    case Kind::And:
    case Kind::Or:
        return {n.left, n.right};
    case Kind::Diamond:
    case Kind::Box:
    case Kind::Mu:
    case Kind::Nu:
        return {n.left};
    case Kind::Var:
        return {node(n.binder).left};
    default:
        return {};
    }
}

NodeId Formula::binder_of(std::string_view variable) const {
    for (NodeId i = 0; i < nodes_.size(); ++i)
        if (is_binder(nodes_[i].kind) && nodes_[i].name == variable) return i;
    throw Error("no binder for variable '" + std::string(variable) + "'");
}

NodeId Formula::binding_formula(std::string_view variable) const {
    return node(binder_of(variable)).left;
}

std::vector<std::string> Formula::variables() const {
    std::vector<std::string> out;
    for (const Node& n : nodes_)
        if (is_binder(n.kind)) out.push_back(n.name);
    return out;
}

std::set<std::string> Formula::propositions() const {
    std::set<std::string> out;
    for (const Node& n : nodes_)
        if (is_literal(n.kind)) out.insert(n.name);
    return out;
}

std::set<std::string> Formula::free_variables(NodeId id) const {
    std::set<std::string> out;
    std::set<std::string> bound;
    std::function<void(NodeId)> walk = [&](NodeId i) {
        const Node& n = node(i);
        switch (n.kind) {
        case Kind::Var:
            if (!bound.count(n.name)) out.insert(n.name);
            break;
        case Kind::Mu:
        case Kind::Nu:
            bound.insert(n.name);
            walk(n.left);
            bound.erase(n.name);
            break;
        case Kind::And:
        case Kind::Or:
            walk(n.left);
            walk(n.right);
            break;
        case Kind::Diamond:
        case Kind::Box:
            walk(n.left);
            break;
        default:
            break;
        }
    };
    walk(id);
    return out;
}

bool Formula::has_fixpoints() const {
    return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return is_binder(n.kind); });
}

bool Formula::is_guarded() const {
    // modal[n]: modalities passed on the way from the root to n
    std::vector<std::uint32_t> modal(nodes_.size(), 0);
    for (NodeId i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.kind == Kind::Var && modal[i] == modal[n.binder]) return false;
        if (n.kind == Kind::Var) continue;
        const std::uint32_t below = modal[i] + (is_modal(n.kind) ? 1 : 0);
        if (n.left != kNoNode) modal[n.left] = below;
        if (n.right != kNoNode) modal[n.right] = below;
    }
    return true;
}

std::size_t Formula::modal_depth() const {
    std::function<std::size_t(NodeId)> depth = [&](NodeId i) -> std::size_t {
        const Node& n = node(i);
        std::size_t d = 0;
        if (n.kind == Kind::Var) return 0;
        if (n.left != kNoNode) d = depth(n.left);
        if (n.right != kNoNode) d = std::max(d, depth(n.right));
        return is_modal(n.kind) ? d + 1 : d;
    };
    return depth(root_);
}

namespace {

void print_node(const Formula& f, NodeId id, int prec, bool trailing, std::string& out) {
    const Node& n = f.node(id);
    switch (n.kind) {
    case Kind::Top:
        out += "tt";
        return;
    case Kind::Bottom:
        out += "ff";
        return;
    case Kind::Prop:
    case Kind::Var:
        out += n.name;
        return;
    case Kind::NegProp:
        out += "~" + n.name;
        return;
    case Kind::Or:
    case Kind::And: {
        const int own = n.kind == Kind::Or ? 1 : 2;
        const bool paren = prec > own;
        if (paren) out += '(';
        print_node(f, n.left, own, true, out);
        out += n.kind == Kind::Or ? " | " : " & ";
        print_node(f, n.right, own + 1, paren ? false : trailing, out);
        if (paren) out += ')';
        return;
    }
    case Kind::Diamond:
    case Kind::Box:
        out += n.kind == Kind::Diamond ? "<>" : "[]";
        print_node(f, n.left, 3, trailing, out);
        return;
    case Kind::Mu:
    case Kind::Nu:
        if (trailing) out += '(';
        out += n.kind == Kind::Mu ? "mu " : "nu ";
        out += n.name + ". ";
        print_node(f, n.left, 0, false, out);
        if (trailing) out += ')';
        return;
    }
}

}  // namespace

std::string Formula::to_string() const { return to_string(root_); }

std::string Formula::to_string(NodeId id) const {
    std::string out;
    print_node(*this, id, 0, false, out);
    return out;
}

// ---------------------------------------------------------------------------
// FormulaBuilder

FormulaBuilder::Ref FormulaBuilder::push(Node n) {
    terms_.push_back(std::move(n));
    return static_cast<Ref>(terms_.size() - 1);
}

FormulaBuilder::Ref FormulaBuilder::top() { return push({Kind::Top, {}, kNoNode, kNoNode, kNoNode}); }
FormulaBuilder::Ref FormulaBuilder::bottom() { return push({Kind::Bottom, {}, kNoNode, kNoNode, kNoNode}); }

FormulaBuilder::Ref FormulaBuilder::prop(std::string name, bool positive) {
    return push({positive ? Kind::Prop : Kind::NegProp, std::move(name), kNoNode, kNoNode, kNoNode});
}

FormulaBuilder::Ref FormulaBuilder::var(std::string name) {
    return push({Kind::Var, std::move(name), kNoNode, kNoNode, kNoNode});
}

FormulaBuilder::Ref FormulaBuilder::conj(Ref a, Ref b) { return push({Kind::And, {}, a, b, kNoNode}); }
FormulaBuilder::Ref FormulaBuilder::disj(Ref a, Ref b) { return push({Kind::Or, {}, a, b, kNoNode}); }
FormulaBuilder::Ref FormulaBuilder::diamond(Ref a) { return push({Kind::Diamond, {}, a, kNoNode, kNoNode}); }
FormulaBuilder::Ref FormulaBuilder::box(Ref a) { return push({Kind::Box, {}, a, kNoNode, kNoNode}); }
FormulaBuilder::Ref FormulaBuilder::mu(std::string v, Ref body) { return binder(Kind::Mu, std::move(v), body); }
FormulaBuilder::Ref FormulaBuilder::nu(std::string v, Ref body) { return binder(Kind::Nu, std::move(v), body); }

FormulaBuilder::Ref FormulaBuilder::binder(Kind kind, std::string variable, Ref body) {
    if (!is_binder(kind)) throw Error("binder kind must be mu or nu");
    return push({kind, std::move(variable), body, kNoNode, kNoNode});
}

FormulaBuilder::Ref FormulaBuilder::conj_all(std::span<const Ref> terms) {
    if (terms.empty()) return top();
    Ref acc = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) acc = conj(terms[i], acc);
    return acc;
}

FormulaBuilder::Ref FormulaBuilder::disj_all(std::span<const Ref> terms) {
    if (terms.empty()) return bottom();
    Ref acc = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) acc = disj(terms[i], acc);
    return acc;
}

FormulaBuilder::Ref FormulaBuilder::conj_folded(Ref a, Ref b) {
    const Kind ka = terms_.at(a).kind, kb = terms_.at(b).kind;
    if (ka == Kind::Bottom) return a;
    if (kb == Kind::Bottom) return b;
    if (ka == Kind::Top) return b;
    if (kb == Kind::Top) return a;
    return conj(a, b);
}

FormulaBuilder::Ref FormulaBuilder::disj_folded(Ref a, Ref b) {
    const Kind ka = terms_.at(a).kind, kb = terms_.at(b).kind;
    if (ka == Kind::Top) return a;
    if (kb == Kind::Top) return b;
    if (ka == Kind::Bottom) return b;
    if (kb == Kind::Bottom) return a;
    return disj(a, b);
}

FormulaBuilder::Ref FormulaBuilder::import(const Formula& f, NodeId id) {
    const Node& n = f.node(id);
    switch (n.kind) {
    case Kind::Top:
        return top();
    case Kind::Bottom:
        return bottom();
    case Kind::Prop:
        return prop(n.name);
    case Kind::NegProp:
        return prop(n.name, false);
    case Kind::Var:
        return var(n.name);
    case Kind::And: {
        Ref l = import(f, n.left);
        return conj(l, import(f, n.right));
    }
    case Kind::Or: {
        Ref l = import(f, n.left);
        return disj(l, import(f, n.right));
    }
    case Kind::Diamond:
        return diamond(import(f, n.left));
    case Kind::Box:
        return box(import(f, n.left));
    case Kind::Mu:
    case Kind::Nu:
        return binder(n.kind, n.name, import(f, n.left));
    }
    return top();
}

Formula FormulaBuilder::build(Ref root) const {
    std::set<std::string> used;
    {
        std::vector<Ref> stack{root};
        std::vector<char> seen(terms_.size(), 0);
        while (!stack.empty()) {
            Ref r = stack.back();
            stack.pop_back();
            if (seen[r]) continue;
            seen[r] = 1;
            const Node& t = terms_[r];
            if (is_literal(t.kind)) used.insert(t.name);
            if (t.left != kNoNode) stack.push_back(t.left);
            if (t.right != kNoNode) stack.push_back(t.right);
        }
    }

    Formula f;
    f.nodes_.clear();
    std::unordered_map<std::string, std::vector<std::pair<std::string, NodeId>>> scope;

    std::function<NodeId(Ref)> copy = [&](Ref r) -> NodeId {
        const Node& t = terms_.at(r);
        const auto id = static_cast<NodeId>(f.nodes_.size());
        f.nodes_.push_back(Node{t.kind, t.name, kNoNode, kNoNode, kNoNode});
        switch (t.kind) {
        case Kind::Var: {
            auto it = scope.find(t.name);
            if (it == scope.end() || it->second.empty())
                throw Error("unbound fixpoint variable '" + t.name + "'");
            f.nodes_[id].name = it->second.back().first;
            f.nodes_[id].binder = it->second.back().second;
            break;
        }
        case Kind::And:
        case Kind::Or: {
            NodeId l = copy(t.left);
            f.nodes_[id].left = l;
            NodeId rr = copy(t.right);
            f.nodes_[id].right = rr;
            break;
        }
        case Kind::Diamond:
        case Kind::Box: {
            NodeId l = copy(t.left);
            f.nodes_[id].left = l;
            break;
        }
        case Kind::Mu:
        case Kind::Nu: {
            std::string name = t.name;
            while (used.count(name)) name += '\'';
            used.insert(name);
            f.nodes_[id].name = name;
            scope[t.name].emplace_back(name, id);
            NodeId body = copy(t.left);
            scope[t.name].pop_back();
            f.nodes_[id].left = body;
            break;
        }
        default:
            break;
        }
        return id;
    };
    f.root_ = copy(root);
    return f;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula run() {
        Ref r = parse_disj();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return builder_.build(r);
    }

private:
    using Ref = FormulaBuilder::Ref;

    [[noreturn]] void fail(const std::string& message) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(message, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    std::optional<std::string> peek_ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
        std::size_t end = pos_;
        while (end < text_.size() && ident_char(text_[end])) ++end;
        return std::string(text_.substr(pos_, end - pos_));
    }

    std::string expect_ident(const char* what) {
        auto id = peek_ident();
        if (!id || is_keyword(*id)) fail(std::string("expected ") + what);
        pos_ += id->size();
        return *id;
    }

    static bool is_keyword(const std::string& s) {
        return s == "tt" || s == "ff" || s == "mu" || s == "nu";
    }

    bool bound(const std::string& name) const {
        return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
    }

    Ref parse_disj() {
        Ref acc = parse_conj();
        while (accept("|")) acc = builder_.disj(acc, parse_conj());
        return acc;
    }

    Ref parse_conj() {
        Ref acc = parse_unary();
        while (accept("&")) acc = builder_.conj(acc, parse_unary());
        return acc;
    }

    Ref parse_unary() {
        skip_ws();
        if (accept("~")) {
            std::string name = expect_ident("proposition after '~'");
            if (bound(name)) fail("negation can only be applied to propositions, '" + name + "' is a variable");
            return builder_.prop(name, false);
        }
        if (accept("<>")) return builder_.diamond(parse_unary());
        if (accept("[]")) return builder_.box(parse_unary());
        if (accept("(")) {
            Ref r = parse_disj();
            if (!accept(")")) fail("expected ')'");
            return r;
        }
        auto id = peek_ident();
        if (!id) {
            if (pos_ >= text_.size()) fail("unexpected end of input");
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        pos_ += id->size();
        if (*id == "tt") return builder_.top();
        if (*id == "ff") return builder_.bottom();
        if (*id == "mu" || *id == "nu") {
            std::string v = expect_ident("variable after binder");
            if (!accept(".")) fail("expected '.' after binder variable");
            scope_.push_back(v);
            Ref body = parse_disj();
            scope_.pop_back();
            return *id == "mu" ? builder_.mu(v, body) : builder_.nu(v, body);
        }
        return bound(*id) ? builder_.var(*id) : builder_.prop(*id);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
    FormulaBuilder builder_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Transformations

bool alpha_equal(const Formula& a, const Formula& b) {
    if (a.size() != b.size() || a.root() != b.root()) return false;
    for (NodeId i = 0; i < a.size(); ++i) {
        const Node& x = a.node(i);
        const Node& y = b.node(i);
        if (x.kind != y.kind || x.left != y.left || x.right != y.right || x.binder != y.binder)
            return false;
        if (is_literal(x.kind) && x.name != y.name) return false;
    }
    return true;
}

Formula dual(const Formula& f) {
    FormulaBuilder b;
    std::function<FormulaBuilder::Ref(NodeId)> go = [&](NodeId id) -> FormulaBuilder::Ref {
        const Node& n = f.node(id);
        switch (n.kind) {
        case Kind::Top:
            return b.bottom();
        case Kind::Bottom:
            return b.top();
        case Kind::Prop:
            return b.prop(n.name, false);
        case Kind::NegProp:
            return b.prop(n.name, true);
        case Kind::Var:
            return b.var(n.name);
        case Kind::And: {
            auto l = go(n.left);
            return b.disj(l, go(n.right));
        }
        case Kind::Or: {
            auto l = go(n.left);
            return b.conj(l, go(n.right));
        }
        case Kind::Diamond:
            return b.box(go(n.left));
        case Kind::Box:
            return b.diamond(go(n.left));
        case Kind::Mu:
            return b.nu(n.name, go(n.left));
        case Kind::Nu:
            return b.mu(n.name, go(n.left));
        }
        return b.top();
    };
    return b.build(go(f.root()));
}

namespace {

bool occurs(const FormulaBuilder& b, FormulaBuilder::Ref r, const std::string& name) {
    const Node& t = b.term(r);
    if (t.kind == Kind::Var) return t.name == name;
    if (t.left != kNoNode && occurs(b, t.left, name)) return true;
    return t.right != kNoNode && occurs(b, t.right, name);
}

FormulaBuilder::Ref fold(FormulaBuilder& b, const Formula& f, NodeId id) {
    const Node& n = f.node(id);
    switch (n.kind) {
    case Kind::And: {
        auto l = fold(b, f, n.left);
        if (b.term(l).kind == Kind::Bottom) return l;
        return b.conj_folded(l, fold(b, f, n.right));
    }
    case Kind::Or: {
        auto l = fold(b, f, n.left);
        if (b.term(l).kind == Kind::Top) return l;
        return b.disj_folded(l, fold(b, f, n.right));
    }
    case Kind::Diamond: {
        auto c = fold(b, f, n.left);
        return b.term(c).kind == Kind::Bottom ? c : b.diamond(c);
    }
    case Kind::Box: {
        auto c = fold(b, f, n.left);
        return b.term(c).kind == Kind::Top ? c : b.box(c);
    }
    case Kind::Mu:
    case Kind::Nu: {
        auto body = fold(b, f, n.left);
        if (!occurs(b, body, n.name)) return body;
        return b.binder(n.kind, n.name, body);
    }
    default:
        return b.import(f, id);
    }
}

// Replaces occurrences of `name` that are not below a modality.
FormulaBuilder::Ref replace_unguarded(FormulaBuilder& b, FormulaBuilder::Ref r, const std::string& name,
                                      Kind replacement) {
    const Node t = b.term(r);
    switch (t.kind) {
    case Kind::Var:
        if (t.name != name) return r;
        return replacement == Kind::Top ? b.top() : b.bottom();
    case Kind::And: {
        auto l = replace_unguarded(b, t.left, name, replacement);
        return b.conj(l, replace_unguarded(b, t.right, name, replacement));
    }
    case Kind::Or: {
        auto l = replace_unguarded(b, t.left, name, replacement);
        return b.disj(l, replace_unguarded(b, t.right, name, replacement));
    }
    case Kind::Mu:
    case Kind::Nu:
        return b.binder(t.kind, t.name, replace_unguarded(b, t.left, name, replacement));
    default:
        return r;
    }
}

}  // namespace

Formula fold_constants(const Formula& f) {
    FormulaBuilder b;
    return b.build(fold(b, f, f.root()));
}

Formula guard(const Formula& f) {
    FormulaBuilder b;
    // Innermost binders first: once a binder's own variable is guarded, an
    // outer variable reaching through it unguarded is found syntactically.
    std::function<FormulaBuilder::Ref(NodeId)> go = [&](NodeId id) -> FormulaBuilder::Ref {
        const Node& n = f.node(id);
        switch (n.kind) {
        case Kind::And: {
            auto l = go(n.left);
            return b.conj(l, go(n.right));
        }
        case Kind::Or: {
            auto l = go(n.left);
            return b.disj(l, go(n.right));
        }
        case Kind::Diamond:
            return b.diamond(go(n.left));
        case Kind::Box:
            return b.box(go(n.left));
        case Kind::Mu:
        case Kind::Nu: {
            auto body = go(n.left);
            body = replace_unguarded(b, body, n.name, n.kind == Kind::Mu ? Kind::Bottom : Kind::Top);
            return b.binder(n.kind, n.name, body);
        }
        default:
            return b.import(f, id);
        }
    };
    return fold_constants(b.build(go(f.root())));
}

// ---------------------------------------------------------------------------
// Disjunctive form recognizer

namespace {

void flatten(const Formula& f, NodeId id, Kind op, std::vector<NodeId>& out) {
    const Node& n = f.node(id);
    if (n.kind == op) {
        flatten(f, n.left, op, out);
        flatten(f, n.right, op, out);
    } else {
        out.push_back(id);
    }
}

bool disjunctive_at(const Formula& f, NodeId id) {
    const Node& n = f.node(id);
    switch (n.kind) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Prop:
    case Kind::NegProp:
    case Kind::Var:
        return true;
    case Kind::Or:
        return disjunctive_at(f, n.left) && disjunctive_at(f, n.right);
    case Kind::Mu:
    case Kind::Nu:
    case Kind::Diamond:
    case Kind::Box:
        return disjunctive_at(f, n.left);
    case Kind::And:
        break;
    }

    std::vector<NodeId> conjuncts;
    flatten(f, id, Kind::And, conjuncts);
    std::vector<NodeId> diamonds, boxes;
    for (NodeId c : conjuncts) {
        const Kind k = f.node(c).kind;
        if (is_literal(k) || k == Kind::Top || k == Kind::Bottom) continue;
        if (k == Kind::Diamond) {
            diamonds.push_back(f.node(c).left);
        } else if (k == Kind::Box) {
            boxes.push_back(f.node(c).left);
        } else {
            return false;
        }
    }
    if (boxes.size() > 1) return false;
    if (boxes.empty()) return diamonds.size() <= 1 && (diamonds.empty() || disjunctive_at(f, diamonds[0]));
    if (diamonds.empty()) return disjunctive_at(f, boxes[0]);

    std::vector<NodeId> covered;
    flatten(f, boxes[0], Kind::Or, covered);
    std::set<std::string> lhs, rhs;
    for (NodeId d : diamonds) lhs.insert(f.to_string(d));
    for (NodeId c : covered) rhs.insert(f.to_string(c));
    if (lhs != rhs) return false;
    return std::all_of(diamonds.begin(), diamonds.end(), [&](NodeId d) { return disjunctive_at(f, d); });
}

}  // namespace

bool is_disjunctive(const Formula& f) { return disjunctive_at(f, f.root()); }

}  // namespace mugames
