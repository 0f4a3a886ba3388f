#include "mugames/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace mugames {

namespace {

class Zielonka {
public:
    explicit Zielonka(const Arena& a)
        : a_(a),
          pred_(a.size()),
          win_(a.size(), Player::Even),
          strat_(a.size(), kNoPos),
          level_(a.size(), 0),
          mark_(a.size(), 0),
          count_(a.size(), 0),
          seen_(a.size(), 0) {
        for (PosId v = 0; v < a.size(); ++v)
            for (PosId w : a.position(v).successors) pred_[w].push_back(v);
    }

    Solution run() {
        const std::size_t n = a_.size();
        std::vector<PosId> all(n);
        for (PosId v = 0; v < n; ++v) all[v] = v;
        std::fill(level_.begin(), level_.end(), 1);

        // Dead ends first: a stuck player loses, and what remains has none.
        std::vector<PosId> stuck_odd, stuck_even;
        for (PosId v = 0; v < n; ++v) {
            if (!a_.position(v).successors.empty()) continue;
            (a_.position(v).owner == Player::Odd ? stuck_odd : stuck_even).push_back(v);
        }
        for (PosId v : attractor(Player::Even, stuck_odd, 1)) {
            win_[v] = Player::Even;
            level_[v] = 0;
        }
        std::vector<PosId> stuck_even_rest;
        for (PosId v : stuck_even)
            if (level_[v] >= 1) stuck_even_rest.push_back(v);
        for (PosId v : attractor(Player::Odd, stuck_even_rest, 1)) {
            win_[v] = Player::Odd;
            level_[v] = 0;
        }
        std::vector<PosId> rest;
        for (PosId v : all)
            if (level_[v] >= 1) rest.push_back(v);
        solve(rest, 1);

        Solution s;
        s.winner = win_;
        s.even.player = Player::Even;
        s.odd.player = Player::Odd;
        s.even.choice.assign(n, kNoPos);
        s.odd.choice.assign(n, kNoPos);
        for (PosId v = 0; v < n; ++v) {
            const Position& p = a_.position(v);
            if (p.successors.empty() || p.owner != win_[v]) continue;
            (p.owner == Player::Even ? s.even : s.odd).choice[v] = strat_[v];
        }
        return s;
    }

private:
    bool inside(PosId v, unsigned k) const { return level_[v] >= k; }

    // Attractor of `player` to `target` inside the subgame at depth k; records
    // the attracting edge. Members are marked with the current stamp.
    std::vector<PosId> attractor(Player player, const std::vector<PosId>& target, unsigned k) {
        const std::uint32_t stamp = ++stamp_;
        std::vector<PosId> attr;
        for (PosId t : target) {
            if (mark_[t] != stamp) {
                mark_[t] = stamp;
                attr.push_back(t);
            }
        }
        for (std::size_t head = 0; head < attr.size(); ++head) {
            const PosId v = attr[head];
            for (PosId u : pred_[v]) {
                if (!inside(u, k) || mark_[u] == stamp) continue;
                if (a_.position(u).owner == player) {
                    mark_[u] = stamp;
                    strat_[u] = v;
                    attr.push_back(u);
                    continue;
                }
                if (seen_[u] != stamp) {
                    seen_[u] = stamp;
                    count_[u] = 0;
                    for (PosId w : a_.position(u).successors)
                        if (inside(w, k)) ++count_[u];
                }
                if (--count_[u] == 0) {
                    mark_[u] = stamp;
                    attr.push_back(u);
                }
            }
        }
        return attr;
    }

    // Solves the subgame formed by `in`, whose members have level k.
    void solve(const std::vector<PosId>& in, unsigned k) {
        if (in.empty()) return;
        unsigned d = 0;
        for (PosId v : in) d = std::max(d, a_.position(v).priority);
        const Player alpha = parity_winner(d);

        std::vector<PosId> top;
        for (PosId v : in)
            if (a_.position(v).priority == d) top.push_back(v);
        attractor(alpha, top, k);
        const std::uint32_t attr_stamp = stamp_;
        for (PosId u : top) {
            if (a_.position(u).owner != alpha) continue;
            for (PosId w : a_.position(u).successors)
                if (inside(w, k)) {
                    strat_[u] = w;
                    break;
                }
        }

        std::vector<PosId> sub;
        for (PosId v : in)
            if (mark_[v] != attr_stamp) sub.push_back(v);
        for (PosId v : sub) level_[v] = k + 1;
        solve(sub, k + 1);
        for (PosId v : sub) level_[v] = k;

        std::vector<PosId> lost;  // opponent's region in the subgame
        for (PosId v : sub)
            if (win_[v] != alpha) lost.push_back(v);
        if (lost.empty()) {
            for (PosId v : in) win_[v] = alpha;
            return;
        }
        attractor(opponent(alpha), lost, k);
        const std::uint32_t back_stamp = stamp_;
        std::vector<PosId> remainder;
        for (PosId v : in) {
            if (mark_[v] == back_stamp) {
                win_[v] = opponent(alpha);
            } else {
                remainder.push_back(v);
            }
        }
        for (PosId v : remainder) level_[v] = k + 1;
        solve(remainder, k + 1);
        for (PosId v : remainder) level_[v] = k;
    }

    const Arena& a_;
    std::vector<std::vector<PosId>> pred_;
    std::vector<Player> win_;
    std::vector<PosId> strat_;
    std::vector<unsigned> level_;
    std::vector<std::uint32_t> mark_;
    std::vector<int> count_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
};

}  // namespace

Solution solve(const Arena& a) {
    a.validate();
    return Zielonka(a).run();
}

Player initial_winner(const Arena& a) { return solve(a).winner_at(a.initial()); }

bool arena_eq_winner(const Arena& a, const Arena& b) { return initial_winner(a) == initial_winner(b); }

std::optional<unsigned> dominant(const Lasso& l, const Arena& a) {
    if (l.cycle.empty()) return std::nullopt;
    unsigned d = 0;
    for (PosId v : l.cycle) d = std::max(d, a.position(v).priority);
    return d;
}

Player lasso_winner(const Lasso& l, const Arena& a) {
    if (l.finite()) {
        const PosId last = l.prefix.empty() ? a.initial() : l.prefix.back();
        return opponent(a.position(last).owner);
    }
    return parity_winner(*dominant(l, a));
}

Lasso play(const Arena& a, const Strategy& even, const Strategy& odd, PosId start) {
    PosId v = start == kNoPos ? a.initial() : start;
    std::unordered_map<PosId, std::size_t> seen;
    std::vector<PosId> trace;
    while (true) {
        if (auto it = seen.find(v); it != seen.end()) {
            Lasso l;
            l.prefix.assign(trace.begin(), trace.begin() + static_cast<std::ptrdiff_t>(it->second));
            l.cycle.assign(trace.begin() + static_cast<std::ptrdiff_t>(it->second), trace.end());
            return l;
        }
        seen[v] = trace.size();
        trace.push_back(v);
        const Position& p = a.position(v);
        if (p.successors.empty()) return Lasso{trace, {}};
        const PosId next = (p.owner == Player::Even ? even : odd).at(v);
        if (next == kNoPos) throw Error("strategy undefined at position " + std::to_string(v));
        if (std::find(p.successors.begin(), p.successors.end(), next) == p.successors.end())
            throw Error("strategy move " + std::to_string(v) + " -> " + std::to_string(next) + " is not an edge");
        v = next;
    }
}

std::string store_strategy(const Strategy& s) {
    std::string out;
    for (PosId v = 0; v < s.choice.size(); ++v)
        if (s.choice[v] != kNoPos) out += std::to_string(v) + " -> " + std::to_string(s.choice[v]) + "\n";
    return out;
}

}  // namespace mugames
