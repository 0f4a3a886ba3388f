#include "mugames/challenge.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace mugames {

// ---------------------------------------------------------------------------
// Configuration

ChallengeConfig::ChallengeConfig(std::vector<unsigned> rows, std::vector<unsigned> columns, unsigned n)
    : rows_(std::move(rows)),
      columns_(std::move(columns)),
      open_(rows_.size() * columns_.size(), 0),
      counter_(rows_.size() * columns_.size(), n),
      n_(n) {}

ChallengeConfig ChallengeConfig::sigma2(const Interval& J, unsigned n) {
    const unsigned top = J.hi % 2 == 0 ? J.hi : J.hi + 1;
    std::vector<unsigned> columns;
    for (unsigned i = 0; i <= top; i += 2) columns.push_back(i);
    return ChallengeConfig({0}, std::move(columns), n);
}

ChallengeConfig ChallengeConfig::general(const Interval& J, const Interval& I, unsigned n) {
    std::vector<unsigned> rows, columns;
    for (unsigned i = I.lo; i <= I.hi; ++i)
        if (i % 2) rows.push_back(i);
    for (unsigned j = J.lo; j <= J.hi; ++j)
        if (j % 2) columns.push_back(j);
    return ChallengeConfig(std::move(rows), std::move(columns), n);
}

bool ChallengeConfig::has(unsigned row, unsigned column) const {
    return std::find(rows_.begin(), rows_.end(), row) != rows_.end() &&
           std::find(columns_.begin(), columns_.end(), column) != columns_.end();
}

std::size_t ChallengeConfig::slot(unsigned row, unsigned column) const {
    auto r = std::find(rows_.begin(), rows_.end(), row);
    auto c = std::find(columns_.begin(), columns_.end(), column);
    if (r == rows_.end() || c == columns_.end())
        throw Error("no challenge (" + std::to_string(row) + ", " + std::to_string(column) + ")");
    return static_cast<std::size_t>(r - rows_.begin()) * columns_.size() +
           static_cast<std::size_t>(c - columns_.begin());
}

bool ChallengeConfig::is_open(unsigned row, unsigned column) const { return open_[slot(row, column)]; }
unsigned ChallengeConfig::counter(unsigned row, unsigned column) const { return counter_[slot(row, column)]; }

void ChallengeConfig::set(unsigned row, unsigned column, bool open, unsigned counter) {
    const std::size_t s = slot(row, column);
    open_[s] = open;
    counter_[s] = counter;
}

bool ChallengeConfig::valid() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        bool seen_open = false;
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            const std::size_t s = r * columns_.size() + c;
            if (counter_[s] > n_) return false;
            if (seen_open && !open_[s]) return false;
            seen_open = seen_open || open_[s];
        }
    }
    return true;
}

std::optional<unsigned> ChallengeConfig::priority() const {
    std::optional<unsigned> best;
    for (unsigned r : rows_)
        for (unsigned c : columns_)
            if (is_open(r, c) && (!best || c < *best)) best = c;
    return best;
}

std::optional<unsigned> ChallengeConfig::level() const {
    std::optional<unsigned> best;
    for (unsigned r : rows_)
        for (unsigned c : columns_)
            if (is_open(r, c) && (!best || r > *best)) best = r;
    return best;
}

std::string ChallengeConfig::to_string() const {
    std::string out;
    for (unsigned r : rows_) {
        out += std::to_string(r) + ":";
        for (unsigned c : columns_)
            out += " " + std::to_string(c) + "=" + (is_open(r, c) ? "open" : "met") + "/" +
                   std::to_string(counter(r, c));
        out += "\n";
    }
    return out;
}

std::string ChallengeAction::to_string(ChallengeVariant v) const {
    if (kind == Kind::Reset) return "reset " + std::to_string(level);
    if (v == ChallengeVariant::Sigma2) return "open " + std::to_string(priority);
    return "open " + std::to_string(level) + " " + std::to_string(priority);
}

// ---------------------------------------------------------------------------
// Σ2 rules

ChallengeConfig sigma2_open(const ChallengeConfig& cfg, unsigned i) {
    if (!cfg.has(0, i)) throw Error("no " + std::to_string(i) + "-challenge");
    if (cfg.is_open(0, i)) throw Error("the " + std::to_string(i) + "-challenge is already open");
    if (cfg.counter(0, i) == 0) throw Error("the " + std::to_string(i) + "-challenge has counter 0");
    for (unsigned j : cfg.columns())
        if (j > i && !cfg.is_open(0, j))
            throw Error("the " + std::to_string(i) + "-challenge needs the " + std::to_string(j) +
                        "-challenge open first");
    ChallengeConfig out = cfg;
    out.set(0, i, true, cfg.counter(0, i) - 1);
    if (!out.valid()) throw Error("internal: invalid configuration after opening");
    return out;
}

ChallengeConfig sigma2_arrive(const ChallengeConfig& cfg, unsigned j) {
    if (!cfg.has(0, j) || !cfg.is_open(0, j)) return cfg;
    ChallengeConfig out = cfg;
    out.set(0, j, false, cfg.counter(0, j));
    for (unsigned i : cfg.columns())
        if (i < j) out.set(0, i, false, cfg.bound());
    if (!out.valid()) throw Error("internal: invalid configuration after a meet");
    return out;
}

ChallengeConfig challenge_step_sigma2(const ChallengeConfig& cfg, const std::vector<unsigned>& openings,
                                      unsigned arriving) {
    ChallengeConfig c = cfg;
    for (unsigned i : openings) c = sigma2_open(c, i);
    return sigma2_arrive(c, arriving);
}

// ---------------------------------------------------------------------------
// General rules

ChallengeConfig general_action(const ChallengeConfig& cfg, const ChallengeAction& a) {
    const auto& rows = cfg.rows();
    ChallengeConfig out = cfg;
    if (a.kind == ChallengeAction::Kind::Reset) {
        if (std::find(rows.begin(), rows.end(), a.level) == rows.end())
            throw Error("reset level " + std::to_string(a.level) + " is not an odd target priority");
        for (unsigned i : rows)
            if (i <= a.level)
                for (unsigned j : cfg.columns()) out.set(i, j, false, cfg.bound());
    } else {
        if (std::find(rows.begin(), rows.end(), a.level) == rows.end())
            throw Error("open level " + std::to_string(a.level) + " is not an odd target priority");
        for (unsigned j : cfg.columns()) {
            if (j < a.priority || cfg.is_open(a.level, j)) continue;
            const unsigned c = cfg.counter(a.level, j);
            if (c == 0)
                throw Error("challenge (" + std::to_string(a.level) + ", " + std::to_string(j) + ") has counter 0");
            out.set(a.level, j, true, c - 1);
        }
    }
    if (!out.valid()) throw Error("internal: invalid configuration after an action");
    return out;
}

GeneralStep general_arrive(const ChallengeConfig& cfg, unsigned p) {
    GeneralStep step{cfg, false};
    for (unsigned i : cfg.rows())
        for (unsigned j : cfg.columns()) {
            if (j <= p) step.config.set(i, j, false, j < p ? cfg.bound() : cfg.counter(i, j));
        }
    for (unsigned i : cfg.rows())
        if (step.config.has(i, p) && step.config.counter(i, p) == 0) step.odd_wins = true;
    if (!step.config.valid()) throw Error("internal: invalid configuration after arrival");
    return step;
}

GeneralStep challenge_step_general(const ChallengeConfig& cfg, const std::vector<ChallengeAction>& actions,
                                   unsigned arriving) {
    ChallengeConfig c = cfg;
    for (const auto& a : actions) c = general_action(c, a);
    return general_arrive(c, arriving);
}

// ---------------------------------------------------------------------------
// Scripts

namespace {

unsigned script_number(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("expected a number, got '" + tok + "'", line, 1);
    return static_cast<unsigned>(std::stoul(tok));
}

}  // namespace

std::vector<ScriptStep> parse_challenge_script(std::string_view text) {
    std::vector<ScriptStep> steps;
    ScriptStep current;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "reset" && tok.size() == 2) {
            current.actions.push_back({ChallengeAction::Kind::Reset, script_number(tok[1], line), 0});
        } else if (tok[0] == "open" && tok.size() == 2) {
            current.actions.push_back({ChallengeAction::Kind::Open, 0, script_number(tok[1], line)});
        } else if (tok[0] == "open" && tok.size() == 3) {
            current.actions.push_back(
                {ChallengeAction::Kind::Open, script_number(tok[1], line), script_number(tok[2], line)});
        } else if (tok[0] == "move" && tok.size() == 2) {
            current.move = script_number(tok[1], line);
            current.line = line;
            steps.push_back(std::move(current));
            current = ScriptStep{};
        } else {
            throw ParseError("expected 'reset k', 'open i [p]' or 'move <position>'", line, 1);
        }
    }
    if (!current.actions.empty()) throw ParseError("actions after the last move", line, 1);
    return steps;
}

// ---------------------------------------------------------------------------
// Adjudication

namespace {

ChallengeConfig initial_config(const Arena& a, ChallengeVariant v, unsigned n, const Interval& target) {
    return v == ChallengeVariant::Sigma2 ? ChallengeConfig::sigma2(a.index(), n)
                                         : ChallengeConfig::general(a.index(), target, n);
}

ChallengeConfig apply(const ChallengeConfig& cfg, const ChallengeAction& act, ChallengeVariant v) {
    if (v == ChallengeVariant::Sigma2) {
        if (act.kind != ChallengeAction::Kind::Open || act.level != 0)
            throw Error("the Sigma2 game only has 'open i' actions");
        return sigma2_open(cfg, act.priority);
    }
    return general_action(cfg, act);
}

// Winner of an infinite play whose cycle visits `positions` and `configs`.
Player cycle_winner(const Arena& a, const std::vector<PosId>& positions, const std::vector<ChallengeConfig>& configs,
                    ChallengeVariant v, unsigned& d) {
    d = 0;
    for (PosId p : positions) d = std::max(d, a.position(p).priority);
    auto open_throughout = [&](unsigned row, unsigned column) {
        return std::all_of(configs.begin(), configs.end(), [&](const ChallengeConfig& c) {
            return c.has(row, column) && c.is_open(row, column);
        });
    };
    if (v == ChallengeVariant::Sigma2) {
        if (d % 2 == 0) return Player::Even;
        return open_throughout(0, d + 1) ? Player::Odd : Player::Even;
    }
    if (d % 2 == 1) return Player::Odd;
    for (unsigned i : configs.front().rows())
        if (open_throughout(i, d + 1)) return Player::Even;
    return Player::Odd;
}

}  // namespace

std::string ChallengeReport::to_string() const {
    std::string out = "winner: " + std::string(mugames::to_string(winner)) + "\n";
    out += "dominant: " + (dominant ? std::to_string(*dominant) : std::string("none")) + "\n";
    out += "ending: " + std::string(immediate ? "zero counter" : terminal ? "terminal position" : "cycle") + "\n";
    if (!immediate && !terminal) out += "cycle-start: " + std::to_string(cycle_start) + "\n";
    for (const auto& t : trace) out += t;
    return out;
}

ChallengeReport adjudicate_challenge(const Arena& a, const std::vector<ScriptStep>& steps, ChallengeVariant v,
                                     unsigned n, const Interval& target) {
    a.validate();
    ChallengeReport r;
    struct GameConfig {
        PosId pos;
        ChallengeConfig cfg;
    };
    std::vector<GameConfig> games{{a.initial(), initial_config(a, v, n, target)}};
    std::vector<ChallengeConfig> between;  // configuration after the first round of each step
    r.trace.push_back("step 0: at " + std::to_string(a.initial()) + "\n" + games[0].cfg.to_string());

    for (std::size_t k = 0; k < steps.size(); ++k) {
        const ScriptStep& s = steps[k];
        const GameConfig& g = games.back();
        const Position& here = a.position(g.pos);
        if (r.immediate || here.successors.empty())
            throw ParseError("the play has already ended", s.line, 1);
        ChallengeConfig c = g.cfg;
        std::string acts;
        for (const auto& act : s.actions) {
            try {
                c = apply(c, act, v);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), s.line, 1);
            }
            acts += " " + act.to_string(v) + ";";
        }
        if (std::find(here.successors.begin(), here.successors.end(), s.move) == here.successors.end())
            throw ParseError("no edge " + std::to_string(g.pos) + " -> " + std::to_string(s.move), s.line, 1);
        between.push_back(c);
        const unsigned p = a.position(s.move).priority;
        ChallengeConfig next;
        if (v == ChallengeVariant::Sigma2) {
            next = sigma2_arrive(c, p);
        } else {
            auto step = general_arrive(c, p);
            next = step.config;
            r.immediate = step.odd_wins;
        }
        games.push_back({s.move, next});
        r.trace.push_back("step " + std::to_string(k + 1) + ":" + acts + " move " + std::to_string(s.move) +
                          " (priority " + std::to_string(p) + ")" + (r.immediate ? " zero counter" : "") + "\n" +
                          next.to_string());
    }

    if (r.immediate) {
        r.winner = Player::Odd;
        return r;
    }
    const GameConfig& last = games.back();
    if (a.position(last.pos).successors.empty()) {
        r.terminal = true;
        r.winner = opponent(a.position(last.pos).owner);
        return r;
    }
    std::optional<std::size_t> start;
    for (std::size_t k = games.size() - 1; k-- > 0;)
        if (games[k].pos == last.pos && games[k].cfg == last.cfg) {
            start = k;
            break;
        }
    if (!start) throw Error("the play neither ends nor closes a cycle");
    r.cycle_start = *start;
    std::vector<PosId> positions;
    std::vector<ChallengeConfig> configs;
    for (std::size_t k = *start + 1; k < games.size(); ++k) {
        positions.push_back(games[k].pos);
        configs.push_back(games[k].cfg);
        configs.push_back(between[k - 1]);
    }
    unsigned d = 0;
    r.winner = cycle_winner(a, positions, configs, v, d);
    r.dominant = d;
    return r;
}

// ---------------------------------------------------------------------------
// Bounded solver

std::optional<Player> solve_challenge_bounded(const Arena& a, ChallengeVariant v, unsigned n,
                                              const Interval& target, std::size_t budget) {
    a.validate();
    const Player challenger = v == ChallengeVariant::Sigma2 ? Player::Odd : Player::Even;
    struct Node {
        PosId pos;
        ChallengeConfig cfg;
        bool second;  // second round: the arena owner moves
        bool sink;    // immediate win for Odd
        Player owner;
        std::vector<std::size_t> succ;
    };
    std::vector<Node> nodes;
    std::map<std::tuple<bool, PosId, ChallengeConfig>, std::size_t> index;
    std::deque<std::size_t> queue;
    auto intern = [&](bool second, PosId pos, const ChallengeConfig& cfg) {
        auto [it, fresh] = index.try_emplace({second, pos, cfg}, nodes.size());
        if (fresh) {
            const Position& p = a.position(pos);
            Player owner = second || p.successors.empty() ? p.owner : challenger;
            nodes.push_back({pos, cfg, second, false, owner, {}});
            queue.push_back(it->second);
        }
        return it->second;
    };
    std::optional<std::size_t> sink;
    auto odd_sink = [&]() {
        if (!sink) {
            sink = nodes.size();
            nodes.push_back({kNoPos, {}, true, true, Player::Even, {}});
        }
        return *sink;
    };

    const std::size_t start = intern(false, a.initial(), initial_config(a, v, n, target));
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const PosId pos = nodes[id].pos;
        const ChallengeConfig cfg = nodes[id].cfg;
        const Position& p = a.position(pos);
        if (p.successors.empty()) continue;
        std::vector<std::size_t> succ;
        if (!nodes[id].second) {
            std::vector<ChallengeConfig> options{cfg};
            std::vector<ChallengeAction> actions;
            if (v == ChallengeVariant::Sigma2) {
                for (unsigned i : cfg.columns()) actions.push_back({ChallengeAction::Kind::Open, 0, i});
            } else {
                for (unsigned k : cfg.rows()) {
                    actions.push_back({ChallengeAction::Kind::Reset, k, 0});
                    for (unsigned j : cfg.columns()) actions.push_back({ChallengeAction::Kind::Open, k, j});
                }
            }
            for (const auto& act : actions) {
                try {
                    ChallengeConfig c = apply(cfg, act, v);
                    if (std::find(options.begin(), options.end(), c) == options.end()) options.push_back(c);
                } catch (const Error&) {
                }
            }
            for (const auto& c : options) succ.push_back(intern(true, pos, c));
        } else {
            for (PosId w : p.successors) {
                const unsigned prio = a.position(w).priority;
                if (v == ChallengeVariant::Sigma2) {
                    succ.push_back(intern(false, w, sigma2_arrive(cfg, prio)));
                } else {
                    auto step = general_arrive(cfg, prio);
                    succ.push_back(step.odd_wins ? odd_sink() : intern(false, w, step.config));
                }
            }
        }
        nodes[id].succ = std::move(succ);
    }

    // Choice points and the size of each player's strategy space.
    std::vector<std::size_t> even_nodes, odd_nodes;
    double even_space = 1, odd_space = 1;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        if (nodes[id].succ.size() < 2) continue;
        (nodes[id].owner == Player::Even ? even_nodes : odd_nodes).push_back(id);
        (nodes[id].owner == Player::Even ? even_space : odd_space) *= static_cast<double>(nodes[id].succ.size());
    }
    if (even_space * odd_space > static_cast<double>(budget)) return std::nullopt;

    std::vector<std::size_t> choice(nodes.size(), 0);
    auto winner_of_play = [&]() {
        std::map<std::size_t, std::size_t> seen;
        std::vector<std::size_t> trace;
        std::size_t cur = start;
        while (!seen.count(cur)) {
            seen[cur] = trace.size();
            trace.push_back(cur);
            if (nodes[cur].succ.empty()) return opponent(nodes[cur].owner);
            cur = nodes[cur].succ[choice[cur]];
        }
        std::vector<PosId> positions;
        std::vector<ChallengeConfig> configs;
        for (std::size_t k = seen[cur]; k < trace.size(); ++k) {
            positions.push_back(nodes[trace[k]].pos);
            configs.push_back(nodes[trace[k]].cfg);
        }
        unsigned d = 0;
        return cycle_winner(a, positions, configs, v, d);
    };
    auto advance = [&](const std::vector<std::size_t>& ids) {
        for (std::size_t id : ids) {
            if (++choice[id] < nodes[id].succ.size()) return true;
            choice[id] = 0;
        }
        return false;
    };

    do {
        bool refuted = false;
        for (std::size_t id : odd_nodes) choice[id] = 0;
        do {
            if (winner_of_play() == Player::Odd) {
                refuted = true;
                break;
            }
        } while (advance(odd_nodes));
        if (!refuted) return Player::Even;
    } while (advance(even_nodes));
    return Player::Odd;
}

}  // namespace mugames
