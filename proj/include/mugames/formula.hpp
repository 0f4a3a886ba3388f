#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mugames {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, structure, arena or script text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class Kind : std::uint8_t { Top, Bottom, Prop, NegProp, Var, And, Or, Diamond, Box, Mu, Nu };

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Node {
    Kind kind = Kind::Top;
    std::string name;        // proposition or variable name
    NodeId left = kNoNode;   // first child, body of modalities and binders
    NodeId right = kNoNode;  // second child of & and |
    NodeId binder = kNoNode; // Var: the binding Mu/Nu node

    friend bool operator==(const Node&, const Node&) = default;
};

bool is_binder(Kind k);
bool is_modal(Kind k);
bool is_literal(Kind k);

/// An immutable μ-calculus sentence stored as a parse tree.
///
/// Node ids are preorder indices, so they double as stable subformula
/// identities: two syntactically equal occurrences get distinct ids.
/// Every binder name is unique within the formula and differs from all
/// proposition names (binders are renamed apart on construction).
class Formula {
public:
    /// The formula `tt`.
    Formula();

    NodeId root() const { return root_; }
    std::size_t size() const { return nodes_.size(); }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    std::span<const Node> nodes() const { return nodes_; }

    /// Immediate subformulas in the game sense: a variable's only successor is
    /// the body of its binder.
    std::vector<NodeId> successors(NodeId id) const;

    /// Binder node for a variable name.
    NodeId binder_of(std::string_view variable) const;
    /// Body of the binder that binds `variable`.
    NodeId binding_formula(std::string_view variable) const;

    /// Binder names in preorder.
    std::vector<std::string> variables() const;
    std::set<std::string> propositions() const;
    /// Free fixpoint variables of the subformula rooted at `id`.
    std::set<std::string> free_variables(NodeId id) const;
    bool has_fixpoints() const;

    /// True iff every variable occurrence is under a modality within its binding formula.
    bool is_guarded() const;
    /// Maximal nesting of modalities.
    std::size_t modal_depth() const;

    std::string to_string() const;
    std::string to_string(NodeId id) const;

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    friend class FormulaBuilder;
    std::vector<Node> nodes_;
    NodeId root_ = 0;
};

/// Scratch space for assembling formulas bottom-up.
///
/// Terms may be shared; `build` unfolds sharing into a tree, resolves variable
/// references to their innermost binder and renames binders apart.
class FormulaBuilder {
public:
    using Ref = std::uint32_t;

    Ref top();
    Ref bottom();
    Ref prop(std::string name, bool positive = true);
    Ref var(std::string name);
    Ref conj(Ref a, Ref b);
    Ref disj(Ref a, Ref b);
    Ref diamond(Ref a);
    Ref box(Ref a);
    Ref mu(std::string variable, Ref body);
    Ref nu(std::string variable, Ref body);
    Ref binder(Kind kind, std::string variable, Ref body);

    /// Right-nested conjunction; `tt` when empty.
    Ref conj_all(std::span<const Ref> terms);
    /// Right-nested disjunction; `ff` when empty.
    Ref disj_all(std::span<const Ref> terms);

    /// Conjunction/disjunction that folds `tt`/`ff` operands.
    Ref conj_folded(Ref a, Ref b);
    Ref disj_folded(Ref a, Ref b);

    /// Copies the subtree of `f` at `id`. Variables keep their names.
    Ref import(const Formula& f, NodeId id);
    Ref import(const Formula& f) { return import(f, f.root()); }

    const Node& term(Ref r) const { return terms_.at(r); }
    std::size_t term_count() const { return terms_.size(); }

    /// Throws Error when a variable occurrence is not bound.
    Formula build(Ref root) const;

private:
    Ref push(Node n);
    std::vector<Node> terms_;
};

/// Parses the ASCII grammar: tt ff P ~P & | <> [] `mu X.` `nu X.` and parentheses.
/// Identifiers bound by an enclosing binder are variables, all others propositions.
Formula parse(std::string_view text);

/// Structural equality up to the names of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

/// Negation pushed to the literals (De Morgan and fixpoint duality).
Formula dual(const Formula& f);

/// Equivalent guarded formula. Unguarded occurrences of a μ-variable become ff,
/// of a ν-variable tt; constants are then folded and vacuous binders dropped.
Formula guard(const Formula& f);

/// Folds tt/ff through &, |, and drops binders that bind nothing.
Formula fold_constants(const Formula& f);

/// Recognizer for the disjunctive normal form adopted here: literals, tt, ff,
/// variables, disjunctions, binders, single modalities `<>a` or `[]a`, and
/// conjunctions of literals with at most one modal component, where a modal
/// component is `<>a`, `[]a` or a cover `<>a1 & ... & <>ak & [](a1 | ... | ak)`.
bool is_disjunctive(const Formula& f);

}  // namespace mugames
