#include "mugames/priority.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace mugames {

std::string Interval::to_string() const {
    std::string out = "{";
    for (unsigned p = lo; p <= hi; ++p) {
        if (p != lo) out += ',';
        out += std::to_string(p);
    }
    return out + "}";
}

namespace {

unsigned parse_number(std::string_view s) {
    unsigned v = 0;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error("invalid priority '" + std::string(s) + "'");
    return v;
}

}  // namespace

Interval parse_interval(std::string_view text) {
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    Interval iv;
    if (auto dots = text.find(".."); dots != std::string_view::npos) {
        iv.lo = parse_number(text.substr(0, dots));
        iv.hi = parse_number(text.substr(dots + 2));
    } else {
        std::vector<unsigned> values;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            if (comma == std::string_view::npos) comma = text.size();
            values.push_back(parse_number(text.substr(start, comma - start)));
            start = comma + 1;
        }
        iv.lo = *std::min_element(values.begin(), values.end());
        iv.hi = *std::max_element(values.begin(), values.end());
        if (iv.hi - iv.lo + 1 != values.size()) throw Error("priorities must form a contiguous interval");
    }
    if (iv.lo > iv.hi) throw Error("empty priority interval");
    if (iv.lo > 1) throw Error("priority interval must start at 0 or 1");
    return iv;
}

unsigned PriorityAssignment::at(const std::string& variable) const {
    auto it = priority.find(variable);
    if (it == priority.end()) throw Error("no priority for variable '" + variable + "'");
    return it->second;
}

std::optional<Interval> PriorityAssignment::index() const {
    if (priority.empty()) return std::nullopt;
    Interval iv{~0u, 0};
    for (const auto& [_, p] : priority) {
        iv.lo = std::min(iv.lo, p);
        iv.hi = std::max(iv.hi, p);
    }
    return iv;
}

unsigned PriorityAssignment::minimal() const {
    auto iv = index();
    return iv ? iv->lo : 0;
}

namespace {

// For each binder Y, the binders X with X free in the binding formula of Y.
std::map<std::string, std::set<std::string>> dependencies(const Formula& f) {
    std::map<std::string, std::set<std::string>> deps;
    for (NodeId i = 0; i < f.size(); ++i) {
        const Node& n = f.node(i);
        if (!is_binder(n.kind)) continue;
        auto free = f.free_variables(n.left);
        free.erase(n.name);
        deps[n.name] = std::move(free);
    }
    return deps;
}

PriorityAssignment greedy(const Formula& f, unsigned base) {
    const auto deps = dependencies(f);
    // Y's priority must not exceed that of any X free in φ_Y, so X is computed
    // after every binder it constrains.
    std::map<std::string, std::vector<std::string>> below;  // X -> {Y : X free in φ_Y}
    for (const auto& [y, xs] : deps)
        for (const auto& x : xs) below[x].push_back(y);

    PriorityAssignment omega;
    std::function<unsigned(const std::string&)> compute = [&](const std::string& x) -> unsigned {
        if (auto it = omega.priority.find(x); it != omega.priority.end()) return it->second;
        const bool odd = f.node(f.binder_of(x)).kind == Kind::Mu;
        unsigned lower = base;
        for (const auto& y : below[x]) lower = std::max(lower, compute(y));
        unsigned p = lower;
        if ((p % 2 == 1) != odd) ++p;
        omega.priority[x] = p;
        return p;
    };
    for (const auto& [x, _] : deps) compute(x);
    return omega;
}

PriorityAssignment normalised(PriorityAssignment omega) {
    auto iv = omega.index();
    if (iv && iv->lo >= 2) {
        const unsigned shift = iv->lo - iv->lo % 2;
        for (auto& [_, p] : omega.priority) p -= shift;
    }
    return omega;
}

}  // namespace

PriorityAssignment assign_priorities(const Formula& f, Base base) {
    if (base == Base::Even) return normalised(greedy(f, 0));
    if (base == Base::Odd) return normalised(greedy(f, 1));
    auto even = normalised(greedy(f, 0));
    auto odd = normalised(greedy(f, 1));
    auto ie = even.index();
    auto io = odd.index();
    if (!ie) return even;
    if (io->size() < ie->size()) return odd;
    return even;
}

bool is_order_preserving(const Formula& f, const PriorityAssignment& omega) {
    for (NodeId i = 0; i < f.size(); ++i) {
        const Node& n = f.node(i);
        if (!is_binder(n.kind)) continue;
        auto it = omega.priority.find(n.name);
        if (it == omega.priority.end()) return false;
        if ((it->second % 2 == 1) != (n.kind == Kind::Mu)) return false;
    }
    for (const auto& [y, xs] : dependencies(f))
        for (const auto& x : xs)
            if (omega.at(x) < omega.at(y)) return false;
    return true;
}

bool fits_index(const Formula& f, const Interval& target) {
    auto omega = greedy(f, target.lo);
    auto iv = omega.index();
    return !iv || iv->hi <= target.hi;
}

std::string IndexClass::name() const {
    switch (kind) {
    case Hierarchy::ML:
        return "ML";
    case Hierarchy::Sigma:
        return "Σ" + std::to_string(level);
    case Hierarchy::Pi:
        return "Π" + std::to_string(level);
    }
    return "ML";
}

std::string IndexClass::to_string() const {
    return (interval ? interval->to_string() : std::string("{}")) + " " + name();
}

IndexClass classify(const std::optional<Interval>& interval) {
    IndexClass c;
    c.interval = interval;
    if (!interval) return c;
    // {1..i}: Π_i for even i, Σ_i for odd i. {0..i-1}: Σ_i for even i, Π_i for odd i.
    if (interval->lo == 1) {
        c.level = interval->hi;
        c.kind = c.level % 2 == 0 ? Hierarchy::Pi : Hierarchy::Sigma;
    } else {
        c.level = interval->hi + 1;
        c.kind = c.level % 2 == 0 ? Hierarchy::Sigma : Hierarchy::Pi;
    }
    return c;
}

IndexClass index_class(const Formula& f) { return classify(assign_priorities(f).index()); }

}  // namespace mugames
