#include "mugames/arena.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace mugames {

const char* to_string(Player p) { return p == Player::Even ? "Even" : "Odd"; }

PosId Arena::add_position(Player owner, unsigned priority, std::string label) {
    Position p;
    p.owner = owner;
    p.priority = priority;
    p.label = std::move(label);
    positions_.push_back(std::move(p));
    return static_cast<PosId>(positions_.size() - 1);
}

void Arena::add_edge(PosId from, PosId to) {
    if (from >= positions_.size() || to >= positions_.size()) throw Error("arena edge out of range");
    auto& succ = positions_[from].successors;
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
}

Interval Arena::index() const {
    Interval iv{~0u, 0};
    for (const auto& p : positions_) {
        iv.lo = std::min(iv.lo, p.priority);
        iv.hi = std::max(iv.hi, p.priority);
    }
    if (positions_.empty()) return {0, 0};
    iv.lo = iv.lo % 2;
    return iv;
}

void Arena::validate() const {
    if (initial_ >= positions_.size()) throw Error("arena has no initial position");
    for (const auto& p : positions_)
        for (PosId s : p.successors)
            if (s >= positions_.size()) throw Error("arena edge to unknown position");
}

Arena mc_game(const Structure& t, const Formula& f, const PriorityAssignment& omega) {
    if (!f.is_guarded()) throw Error("model-checking games require a guarded formula");
    const unsigned base = omega.minimal();
    Arena a;
    const std::uint64_t cells = static_cast<std::uint64_t>(t.size()) * f.size();
    const bool dense = cells <= (1u << 24);
    std::vector<PosId> table(dense ? cells : 0, kNoPos);
    std::unordered_map<std::uint64_t, PosId> sparse;
    std::vector<std::pair<StateId, NodeId>> queue;

    auto key = [&](StateId s, NodeId n) { return static_cast<std::uint64_t>(s) * f.size() + n; };
    auto slot = [&](std::uint64_t k) -> PosId& { return dense ? table[k] : sparse.try_emplace(k, kNoPos).first->second; };
    auto intern = [&](StateId s, NodeId n) -> PosId {
        PosId& id = slot(key(s, n));
        if (id != kNoPos) return id;
        const Node& node = f.node(n);
        Player owner = Player::Even;
        switch (node.kind) {
        case Kind::And:
        case Kind::Box:
        case Kind::Top:
            owner = Player::Odd;
            break;
        case Kind::Prop:
            owner = t.holds(s, node.name) ? Player::Odd : Player::Even;
            break;
        case Kind::NegProp:
            owner = t.holds(s, node.name) ? Player::Even : Player::Odd;
            break;
        default:
            break;
        }
        const unsigned prio = node.kind == Kind::Var ? omega.at(node.name) : base;
        const PosId v = a.add_position(owner, prio, t.state(s).name + ":" + std::to_string(n));
        id = v;
        Position& p = a.position(v);
        p.modal = is_modal(node.kind);
        p.state = s;
        p.subformula = n;
        if (node.kind == Kind::Var) p.variable = node.name;
        queue.emplace_back(s, n);
        return v;
    };

    a.set_initial(intern(t.root(), f.root()));
    // Successor lists are duplicate-free by construction, so edges are appended directly.
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [s, n] = queue[head];
        const PosId v = slot(key(s, n));
        const Node& node = f.node(n);
        std::vector<PosId> succ;
        if (is_modal(node.kind)) {
            for (StateId w : t.state(s).successors) succ.push_back(intern(w, node.left));
        } else {
            switch (node.kind) {
            case Kind::And:
            case Kind::Or:
                succ.push_back(intern(s, node.left));
                succ.push_back(intern(s, node.right));
                break;
            case Kind::Mu:
            case Kind::Nu:
                succ.push_back(intern(s, node.left));
                break;
            case Kind::Var:
                succ.push_back(intern(s, f.node(node.binder).left));
                break;
            default:
                break;
            }
        }
        a.position(v).successors = std::move(succ);
    }
    return a;
}

Arena mc_game(const Structure& t, const Formula& f) { return mc_game(t, f, assign_priorities(f)); }

Structure encode(const Arena& a, bool with_provenance) {
    Structure s;
    for (PosId v = 0; v < a.size(); ++v) {
        const Position& p = a.position(v);
        std::set<std::string> labels;
        labels.insert((p.owner == Player::Even ? "E_" : "O_") + std::to_string(p.priority));
        if (p.modal) labels.insert("M");
        if (with_provenance && !p.variable.empty()) labels.insert("E_" + p.variable);
        s.add_state("v" + std::to_string(v), std::move(labels));
    }
    for (PosId v = 0; v < a.size(); ++v)
        for (PosId w : a.position(v).successors) s.add_edge(v, w);
    s.set_root(a.initial());
    return s;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

unsigned to_unsigned(std::string_view s, std::size_t line, const char* what) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", line, 1);
    return v;
}

}  // namespace

Arena load_arena(std::string_view text) {
    struct Row {
        std::string id;
        unsigned priority;
        Player owner;
        std::vector<std::string> succ;
        std::string label;
        bool modal;
        std::string variable;
        std::size_t line;
    };
    std::vector<Row> rows;
    std::optional<std::string> init;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // a '#' inside a quoted label is kept
        std::string line;
        bool quoted = false;
        for (char c : raw) {
            if (c == '"') quoted = !quoted;
            if (c == '#' && !quoted) break;
            line += c;
        }
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "init") {
            std::string id;
            if (!(ls >> id)) throw ParseError("expected 'init <id>'", line_no, 1);
            if (init) throw ParseError("duplicate init line", line_no, 1);
            init = id;
            continue;
        }
        Row r{first, 0, Player::Even, {}, {}, false, {}, line_no};
        std::string prio, owner;
        if (!(ls >> prio >> owner)) throw ParseError("expected '<id> <priority> <owner> ...'", line_no, 1);
        r.priority = to_unsigned(prio, line_no, "priority");
        if (owner == "0") {
            r.owner = Player::Even;
        } else if (owner == "1") {
            r.owner = Player::Odd;
        } else {
            throw ParseError("owner must be 0 (Even) or 1 (Odd)", line_no, 1);
        }
        ls >> std::ws;
        if (ls.peek() != '"' && ls.peek() != EOF) {
            std::string succ;
            ls >> succ;
            if (succ != "-") {
                std::istringstream parts(succ);
                std::string s;
                while (std::getline(parts, s, ','))
                    if (!s.empty()) r.succ.push_back(s);
            }
            ls >> std::ws;
        }
        if (ls.peek() == '"') {
            ls.get();
            std::getline(ls, r.label, '"');
        }
        for (std::string tail; ls >> tail;) {
            if (tail == "M") {
                r.modal = true;
            } else if (tail.rfind("var=", 0) == 0 && tail.size() > 4) {
                r.variable = tail.substr(4);
            } else {
                throw ParseError("unexpected '" + tail + "'", line_no, 1);
            }
        }
        rows.push_back(std::move(r));
    }
    Arena a;
    std::map<std::string, PosId> ids;
    for (const auto& r : rows) {
        if (ids.count(r.id)) throw ParseError("duplicate position '" + r.id + "'", r.line, 1);
        ids[r.id] = a.add_position(r.owner, r.priority, r.label);
        a.position(ids[r.id]).modal = r.modal;
        a.position(ids[r.id]).variable = r.variable;
    }
    for (const auto& r : rows)
        for (const auto& s : r.succ) {
            auto it = ids.find(s);
            if (it == ids.end()) throw ParseError("unknown successor '" + s + "'", r.line, 1);
            a.add_edge(ids[r.id], it->second);
        }
    if (!init) throw ParseError("missing 'init' line", 1, 1);
    auto it = ids.find(*init);
    if (it == ids.end()) throw ParseError("unknown initial position '" + *init + "'", 1, 1);
    a.set_initial(it->second);
    return a;
}

std::string store_arena(const Arena& a) {
    std::string out = "init " + std::to_string(a.initial()) + "\n";
    for (PosId v = 0; v < a.size(); ++v) {
        const Position& p = a.position(v);
        out += std::to_string(v) + " " + std::to_string(p.priority) + " " + (p.owner == Player::Even ? "0" : "1") + " ";
        if (p.successors.empty()) {
            out += "-";
        } else {
            for (std::size_t i = 0; i < p.successors.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(p.successors[i]);
            }
        }
        std::string label = p.label;
        std::replace(label.begin(), label.end(), '"', '\'');
        out += " \"" + label + "\"";
        if (p.modal) out += " M";
        if (!p.variable.empty()) out += " var=" + p.variable;
        out += "\n";
    }
    return out;
}

}  // namespace mugames
