#include "mugames/structure.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <tuple>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace mugames {

StateId Structure::add_state(std::string name, std::set<std::string> labels) {
    states_.push_back(State{std::move(name), std::move(labels), {}});
    return static_cast<StateId>(states_.size() - 1);
}

void Structure::add_edge(StateId from, StateId to) {
    if (from >= states_.size() || to >= states_.size()) throw Error("edge endpoint out of range");
    auto& succ = states_[from].successors;
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
}

bool Structure::holds(StateId s, const std::string& proposition) const {
    return states_.at(s).labels.count(proposition) > 0;
}

void Structure::validate() const {
    if (states_.empty()) throw Error("structure has no states");
    if (root_ >= states_.size()) throw Error("structure root is missing");
    std::vector<char> seen(states_.size(), 0);
    std::vector<StateId> stack{root_};
    seen[root_] = 1;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        for (StateId t : states_[s].successors)
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
    }
    for (StateId s = 0; s < states_.size(); ++s)
        if (!seen[s]) throw Error("state '" + states_[s].name + "' is not reachable from the root");
}

bool Structure::is_acyclic() const {
    std::vector<int> colour(states_.size(), 0);
    bool cyclic = false;
    auto visit = [&](auto&& self, StateId s) -> void {
        colour[s] = 1;
        for (StateId t : states_[s].successors) {
            if (colour[t] == 1) cyclic = true;
            if (colour[t] == 0) self(self, t);
        }
        colour[s] = 2;
    };
    for (StateId s = 0; s < states_.size(); ++s)
        if (colour[s] == 0) visit(visit, s);
    return !cyclic;
}

std::size_t Structure::depth() const {
    std::vector<std::size_t> memo(states_.size(), 0);
    std::vector<char> done(states_.size(), 0);
    auto go = [&](auto&& self, StateId s) -> std::size_t {
        if (done[s]) return memo[s];
        std::size_t d = 0;
        for (StateId t : states_[s].successors) d = std::max(d, self(self, t) + 1);
        done[s] = 1;
        return memo[s] = d;
    };
    return go(go, root_);
}

Structure Structure::canonicalized() const {
    std::vector<StateId> order;
    std::vector<StateId> renumber(states_.size(), ~0u);
    std::deque<StateId> queue{root_};
    renumber[root_] = 0;
    order.push_back(root_);
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        std::vector<StateId> succ = states_[s].successors;
        std::stable_sort(succ.begin(), succ.end(),
                         [&](StateId a, StateId b) { return states_[a].labels < states_[b].labels; });
        for (StateId t : succ) {
            if (renumber[t] != ~0u) continue;
            renumber[t] = static_cast<StateId>(order.size());
            order.push_back(t);
            queue.push_back(t);
        }
    }
    Structure out;
    for (StateId s : order) out.add_state(states_[s].name, states_[s].labels);
    for (StateId s : order)
        for (StateId t : states_[s].successors)
            if (renumber[t] != ~0u) out.add_edge(renumber[s], renumber[t]);
    out.set_root(0);
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_id(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
}

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

}  // namespace

Structure load_structure(std::string_view text) {
    Structure out;
    std::map<std::string, StateId> ids;
    std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
    std::optional<std::pair<std::string, std::size_t>> root;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        const std::string& kw = toks[0];
        if (kw == "node") {
            if (toks.size() < 2 || !valid_id(toks[1])) throw ParseError("expected 'node <id> [labels]'", line_no, 1);
            if (ids.count(toks[1])) throw ParseError("duplicate node '" + toks[1] + "'", line_no, 1);
            std::set<std::string> labels;
            auto open = line.find('[');
            if (open != std::string::npos) {
                auto close = line.find(']', open);
                if (close == std::string::npos) throw ParseError("missing ']'", line_no, open + 1);
                if (!trim(line.substr(close + 1)).empty())
                    throw ParseError("trailing text after label list", line_no, close + 2);
                std::string inner = line.substr(open + 1, close - open - 1);
                std::istringstream parts(inner);
                std::string label;
                while (std::getline(parts, label, ',')) {
                    label = trim(label);
                    if (label.empty()) continue;
                    if (!valid_id(label) && label.find('\'') == std::string::npos)
                        throw ParseError("invalid label '" + label + "'", line_no, open + 2);
                    labels.insert(label);
                }
            } else if (toks.size() > 2) {
                throw ParseError("labels must be written as [l1,l2,...]", line_no, 1);
            }
            ids[toks[1]] = out.add_state(toks[1], std::move(labels));
        } else if (kw == "edge") {
            if (toks.size() != 3) throw ParseError("expected 'edge <src> <dst>'", line_no, 1);
            edges.emplace_back(toks[1], toks[2], line_no);
        } else if (kw == "root") {
            if (toks.size() != 2) throw ParseError("expected 'root <id>'", line_no, 1);
            if (root) throw ParseError("duplicate root declaration", line_no, 1);
            root.emplace(toks[1], line_no);
        } else {
            throw ParseError("unknown directive '" + kw + "'", line_no, 1);
        }
    }
    for (const auto& [src, dst, line] : edges) {
        auto a = ids.find(src);
        auto b = ids.find(dst);
        if (a == ids.end()) throw ParseError("unknown node '" + src + "'", line, 1);
        if (b == ids.end()) throw ParseError("unknown node '" + dst + "'", line, 1);
        out.add_edge(a->second, b->second);
    }
    if (!root) throw ParseError("missing 'root' declaration", line_no == 0 ? 1 : line_no, 1);
    auto r = ids.find(root->first);
    if (r == ids.end()) throw ParseError("unknown root '" + root->first + "'", root->second, 1);
    out.set_root(r->second);
    out.validate();
    return out;
}

std::string store_structure(const Structure& s) {
    std::string out;
    for (const auto& st : s.states()) {
        out += "node " + st.name + " [";
        bool first = true;
        for (const auto& l : st.labels) {
            if (!first) out += ',';
            out += l;
            first = false;
        }
        out += "]\n";
    }
    for (const auto& st : s.states())
        for (StateId t : st.successors) out += "edge " + st.name + " " + s.state(t).name + "\n";
    out += "root " + s.state(s.root()).name + "\n";
    return out;
}

// ---------------------------------------------------------------------------

Structure truncate(const Structure& t, std::size_t depth) {
    Structure out;
    struct Item {
        StateId original;
        StateId copy;
        std::size_t level;
    };
    std::deque<Item> queue;
    StateId r = out.add_state("u0", t.state(t.root()).labels);
    out.set_root(r);
    queue.push_back({t.root(), r, 0});
    while (!queue.empty()) {
        Item it = queue.front();
        queue.pop_front();
        if (it.level == depth) continue;
        for (StateId succ : t.state(it.original).successors) {
            StateId c = out.add_state("u" + std::to_string(out.size()), t.state(succ).labels);
            out.add_edge(it.copy, c);
            queue.push_back({succ, c, it.level + 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Raw {
    std::size_t n;
    std::vector<std::uint32_t> labels;  // bitmask over the alphabet
    std::vector<std::uint32_t> adj;     // bitmask of successors
};

std::vector<std::uint32_t> code_under(const Raw& g, const std::vector<std::size_t>& perm) {
    // perm[new] = old
    std::vector<std::size_t> inv(g.n);
    for (std::size_t k = 0; k < g.n; ++k) inv[perm[k]] = k;
    std::vector<std::uint32_t> code;
    code.reserve(2 * g.n);
    for (std::size_t k = 0; k < g.n; ++k) code.push_back(g.labels[perm[k]]);
    for (std::size_t k = 0; k < g.n; ++k) {
        std::uint32_t row = 0;
        for (std::size_t j = 0; j < g.n; ++j)
            if (g.adj[perm[k]] >> j & 1u) row |= 1u << inv[j];
        code.push_back(row);
    }
    return code;
}

std::vector<std::uint32_t> canonical_code(const Raw& g) {
    std::vector<std::size_t> perm(g.n);
    for (std::size_t i = 0; i < g.n; ++i) perm[i] = i;
    auto best = code_under(g, perm);
    if (g.n > 2) {
        while (std::next_permutation(perm.begin() + 1, perm.end())) {
            auto c = code_under(g, perm);
            if (c < best) best = std::move(c);
        }
    }
    return best;
}

bool reachable_all(std::size_t n, const std::vector<std::uint32_t>& adj) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (frontier >> i & 1u) next |= adj[i];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

Structure from_code(std::size_t n, const std::vector<std::uint32_t>& code, const std::vector<std::string>& alphabet) {
    Structure s;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::string> labels;
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            if (code[i] >> a & 1u) labels.insert(alphabet[a]);
        s.add_state("s" + std::to_string(i), std::move(labels));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (code[n + i] >> j & 1u) s.add_edge(static_cast<StateId>(i), static_cast<StateId>(j));
    s.set_root(0);
    return s;
}

}  // namespace

std::vector<Structure> enumerate_structures(std::size_t max_nodes, const std::vector<std::string>& alphabet) {
    if (max_nodes > 5) throw Error("exhaustive enumeration is limited to 5 states");
    if (alphabet.size() > 8) throw Error("exhaustive enumeration is limited to 8 propositions");
    std::vector<Structure> out;
    const std::uint32_t label_values = 1u << alphabet.size();
    for (std::size_t n = 1; n <= max_nodes; ++n) {
        std::set<std::vector<std::uint32_t>> codes;
        const std::uint64_t edge_sets = std::uint64_t{1} << (n * n);
        Raw g{n, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
        for (std::uint64_t e = 0; e < edge_sets; ++e) {
            for (std::size_t i = 0; i < n; ++i)
                g.adj[i] = static_cast<std::uint32_t>(e >> (i * n)) & ((1u << n) - 1);
            if (!reachable_all(n, g.adj)) continue;
            std::uint64_t label_sets = 1;
            for (std::size_t i = 0; i < n; ++i) label_sets *= label_values;
            for (std::uint64_t l = 0; l < label_sets; ++l) {
                std::uint64_t rest = l;
                for (std::size_t i = 0; i < n; ++i) {
                    g.labels[i] = static_cast<std::uint32_t>(rest % label_values);
                    rest /= label_values;
                }
                codes.insert(canonical_code(g));
            }
        }
        for (const auto& code : codes) out.push_back(from_code(n, code, alphabet));
    }
    return out;
}

std::vector<Structure> sample_structures(std::size_t max_nodes, const std::vector<std::string>& alphabet,
                                         std::uint64_t seed, std::size_t count) {
    std::vector<Structure> out;
    if (max_nodes == 0) return out;
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t bound) { return rng() % bound; };
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + draw(max_nodes);
        Structure s;
        for (std::size_t i = 0; i < n; ++i) {
            std::set<std::string> labels;
            for (const auto& a : alphabet)
                if (draw(2)) labels.insert(a);
            s.add_state("s" + std::to_string(i), std::move(labels));
        }
        for (std::size_t i = 1; i < n; ++i) s.add_edge(static_cast<StateId>(draw(i)), static_cast<StateId>(i));
        for (std::size_t i = 0; i < n; ++i) {
            const auto extra = draw(3);
            for (std::uint64_t e = 0; e < extra; ++e) s.add_edge(static_cast<StateId>(i), static_cast<StateId>(draw(n)));
        }
        s.set_root(0);
        Structure c = s.canonicalized();
        Structure named;
        for (const auto& st : c.states()) named.add_state("s" + std::to_string(named.size()), st.labels);
        for (StateId i = 0; i < c.size(); ++i)
            for (StateId t : c.state(i).successors) named.add_edge(i, t);
        named.set_root(0);
        out.push_back(std::move(named));
    }
    return out;
}

std::vector<Structure> build_corpus(const std::vector<std::string>& alphabet, const CorpusSpec& spec) {
    auto out = enumerate_structures(spec.max_nodes, alphabet);
    auto extra = sample_structures(spec.sample_max_nodes, alphabet, spec.seed, spec.samples);
    out.insert(out.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    return out;
}

std::vector<std::string> alphabet_of(const Formula& f) {
    auto props = f.propositions();
    return {props.begin(), props.end()};
}

}  // namespace mugames
