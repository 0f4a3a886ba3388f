#pragma once

#include <map>
#include <optional>
#include <string>

#include "mugames/formula.hpp"

namespace mugames {

/// Contiguous priority interval {lo..hi}.
struct Interval {
    unsigned lo = 0;
    unsigned hi = 0;

    bool contains(unsigned p) const { return lo <= p && p <= hi; }
    unsigned size() const { return hi - lo + 1; }
    std::string to_string() const;  // "{0,1,2}"
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Parses "lo..hi", "{0,1}", "0,1,2" or a single number.
Interval parse_interval(std::string_view text);

/// Variable name -> priority, μ odd and ν even.
struct PriorityAssignment {
    std::map<std::string, unsigned> priority;

    unsigned at(const std::string& variable) const;
    /// Co-domain; empty for fixpoint-free formulas.
    std::optional<Interval> index() const;
    /// Priority given to non-variable positions of a model-checking game.
    unsigned minimal() const;
};

enum class Base { Auto, Even, Odd };

/// Pointwise-least order-preserving assignment with the requested base
/// (0 for Even, 1 for Odd). `Auto` returns the narrower of the two, preferring
/// base 0 on ties. Results are normalised so the co-domain starts at 0 or 1.
PriorityAssignment assign_priorities(const Formula& f, Base base = Base::Auto);

/// Checks the parity constraint and the order-preservation constraint.
bool is_order_preserving(const Formula& f, const PriorityAssignment& omega);

/// True iff `f` has an order-preserving assignment with co-domain inside `target`.
bool fits_index(const Formula& f, const Interval& target);

enum class Hierarchy { ML, Sigma, Pi };

struct IndexClass {
    Hierarchy kind = Hierarchy::ML;
    unsigned level = 0;
    std::optional<Interval> interval;

    std::string name() const;       // "ML", "Σ2", "Π1"
    std::string to_string() const;  // "{0,1} Σ2"
};

IndexClass classify(const std::optional<Interval>& interval);
IndexClass index_class(const Formula& f);

}  // namespace mugames
