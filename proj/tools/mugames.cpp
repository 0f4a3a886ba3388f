#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "mugames/arena.hpp"
#include "mugames/challenge.hpp"
#include "mugames/formula.hpp"
#include "mugames/interpreters.hpp"
#include "mugames/priority.hpp"
#include "mugames/product.hpp"
#include "mugames/semantics.hpp"
#include "mugames/solver.hpp"
#include "mugames/structure.hpp"

using namespace mugames;

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::size_t max_nodes = 3;
    std::size_t samples = 200;
    std::size_t sample_max_nodes = 8;
    std::uint64_t seed = 0;
    std::string alphabet;
    bool provenance = false;
    bool inline_text = false;
    std::string out;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

Formula read_formula(const RunConfig& cfg, const std::string& arg) {
    return parse(cfg.inline_text ? arg : read_input(arg));
}

std::vector<std::string> split_alphabet(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Structure> corpus_for(const RunConfig& cfg, const Formula& f) {
    const auto alphabet = cfg.alphabet.empty() ? alphabet_of(f) : split_alphabet(cfg.alphabet);
    CorpusSpec spec;
    spec.max_nodes = cfg.max_nodes;
    spec.samples = cfg.samples;
    spec.sample_max_nodes = cfg.sample_max_nodes;
    spec.seed = cfg.seed;
    return build_corpus(alphabet, spec);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw Error("cannot write '" + cfg.out + "'");
    out << text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string header(const std::string& command) { return "mugames-" + command + " 1\n"; }

std::string describe_strategy(const Arena& a, const Strategy& s, const std::vector<Player>& winner) {
    std::string out;
    for (PosId v = 0; v < a.size(); ++v) {
        const PosId w = s.at(v);
        if (w == kNoPos || winner[v] != s.player) continue;
        out += "  " + std::to_string(v) + " -> " + std::to_string(w) + "  " + a.position(v).label + " -> " +
               a.position(w).label + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modal mu-calculus games: model checking, interpretation and index tools"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto corpus_flags = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", cfg.max_nodes, "Exhaustive enumeration bound")->check(CLI::PositiveNumber);
        sub->add_option("--samples", cfg.samples, "Number of sampled structures");
        sub->add_option("--sample-max-nodes", cfg.sample_max_nodes, "Size bound of sampled structures")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Sampling seed");
        sub->add_option("--alphabet", cfg.alphabet, "Comma-separated propositions (default: those of the formula)");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write the output to a file");
        sub->add_flag("-e,--inline", cfg.inline_text, "Formula arguments are formula text, not files");
    };

    std::string structure_path, formula_arg, arena_path, second_arg, script_path, interval_text;
    unsigned p = 0, m = 0, bound = 1;
    std::string variant = "sigma2", target_text = "0..1";
    bool raw = false, solve_bounded = false;

    auto* mc = app.add_subcommand("mc", "Decide T |= formula by solving the model-checking game");
    mc->add_option("structure", structure_path)->required();
    mc->add_option("formula", formula_arg)->required();
    common(mc);

    auto* solve_cmd = app.add_subcommand("solve", "Solve a parity game");
    solve_cmd->add_option("arena", arena_path)->required();
    common(solve_cmd);

    auto* arena_cmd = app.add_subcommand("arena", "Print the model-checking game of a structure and formula");
    arena_cmd->add_option("structure", structure_path)->required();
    arena_cmd->add_option("formula", formula_arg)->required();
    common(arena_cmd);

    auto* encode_cmd = app.add_subcommand("encode", "Encode a parity game as a labelled structure");
    encode_cmd->add_option("arena", arena_path)->required();
    encode_cmd->add_flag("--provenance", cfg.provenance, "Add E_X labels on variable positions");
    common(encode_cmd);

    auto* index_cmd = app.add_subcommand("index", "Print the index and hierarchy class of a formula");
    index_cmd->add_option("formula", formula_arg)->required();
    common(index_cmd);

    auto* parity_cmd = app.add_subcommand("parity-formula", "Print the parity formula for an index");
    parity_cmd->add_option("index", interval_text, "lo..hi or {lo,...,hi}")->required();
    common(parity_cmd);

    auto* bounded_cmd = app.add_subcommand("bounded-formula", "Print the bounded formula for p, m and an index");
    bounded_cmd->add_option("p", p)->required();
    bounded_cmd->add_option("m", m)->required();
    bounded_cmd->add_option("index", interval_text)->required();
    common(bounded_cmd);

    auto* product_cmd = app.add_subcommand("product", "Compose a formula with a winning-condition formula");
    product_cmd->add_option("psi", formula_arg)->required();
    product_cmd->add_option("win", second_arg)->required();
    product_cmd->add_flag("--raw", raw, "Skip constant folding");
    common(product_cmd);

    auto* simplify_cmd = app.add_subcommand("simplify", "Product plus cleanup, checked against the input on a corpus");
    simplify_cmd->add_option("psi", formula_arg)->required();
    simplify_cmd->add_option("win", second_arg)->required();
    corpus_flags(simplify_cmd);
    common(simplify_cmd);

    auto* interpret_cmd = app.add_subcommand("interpret-check", "Check that phi interprets psi on a corpus");
    interpret_cmd->add_option("psi", formula_arg)->required();
    interpret_cmd->add_option("phi", second_arg)->required();
    interpret_cmd->add_flag("--provenance", cfg.provenance, "Encode games with E_X labels");
    corpus_flags(interpret_cmd);
    common(interpret_cmd);

    auto* challenge_cmd = app.add_subcommand("challenge", "Adjudicate a scripted challenge-game play");
    challenge_cmd->add_option("arena", arena_path)->required();
    challenge_cmd->add_option("script", script_path)->required();
    challenge_cmd->add_option("--variant", variant, "sigma2 or general")
        ->check(CLI::IsMember({"sigma2", "general"}));
    challenge_cmd->add_option("-n,--bound", bound, "Counter bound")->check(CLI::PositiveNumber);
    challenge_cmd->add_option("--target", target_text, "Target index of the general variant");
    challenge_cmd->add_flag("--solve", solve_bounded, "Also solve the game under one action per round");
    common(challenge_cmd);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Print the structure corpus");
    corpus_flags(enumerate_cmd);
    common(enumerate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*mc) {
            const Structure t = load_structure(read_input(structure_path));
            const Formula f = read_formula(cfg, formula_arg);
            const Formula g = f.is_guarded() ? f : guard(f);
            const Arena a = mc_game(t, g);
            const Solution s = solve(a);
            const Player w = s.winner_at(a.initial());
            std::string out = header("mc");
            out += "formula: " + f.to_string() + "\n";
            out += "states: " + std::to_string(t.size()) + "\n";
            out += "positions: " + std::to_string(a.size()) + "\n";
            out += std::string("verdict: ") + (w == Player::Even ? "holds" : "fails") + "\n";
            out += std::string("winner: ") + to_string(w) + "\n";
            out += "strategy:\n" + describe_strategy(a, s.strategy(w), s.winner);
            emit(cfg, out);
        } else if (*solve_cmd) {
            const Arena a = load_arena(read_input(arena_path));
            const Solution s = solve(a);
            std::string out = header("solve");
            out += "positions: " + std::to_string(a.size()) + "\n";
            out += std::string("initial-winner: ") + to_string(s.winner_at(a.initial())) + "\n";
            out += "winners:\n";
            for (PosId v = 0; v < a.size(); ++v)
                out += "  " + std::to_string(v) + " " + to_string(s.winner[v]) + "\n";
            out += "even-strategy:\n" + describe_strategy(a, s.even, s.winner);
            out += "odd-strategy:\n" + describe_strategy(a, s.odd, s.winner);
            emit(cfg, out);
        } else if (*arena_cmd) {
            const Structure t = load_structure(read_input(structure_path));
            const Formula f = read_formula(cfg, formula_arg);
            emit(cfg, store_arena(mc_game(t, f.is_guarded() ? f : guard(f))));
        } else if (*encode_cmd) {
            emit(cfg, store_structure(encode(load_arena(read_input(arena_path)), cfg.provenance)));
        } else if (*index_cmd) {
            emit(cfg, index_class(read_formula(cfg, formula_arg)).to_string() + "\n");
        } else if (*parity_cmd) {
            emit(cfg, parity_formula(parse_interval(interval_text)).to_string() + "\n");
        } else if (*bounded_cmd) {
            emit(cfg, bounded_formula(p, m, parse_interval(interval_text)).to_string() + "\n");
        } else if (*product_cmd) {
            const Formula psi = read_formula(cfg, formula_arg);
            const Formula win = read_formula(cfg, second_arg);
            const ProductResult r = product(psi, win);
            const Formula f = raw ? r.formula : cleanup(r.formula);
            std::string out = header("product");
            out += "formula: " + f.to_string() + "\n";
            out += "index: " + index_class(f).to_string() + "\n";
            out += "size: " + std::to_string(f.size()) + "\n";
            out += "steps: " + std::to_string(r.steps) + "\n";
            emit(cfg, out);
        } else if (*simplify_cmd) {
            const Formula psi = read_formula(cfg, formula_arg);
            const Formula win = read_formula(cfg, second_arg);
            const SimplifyReport r = simplify(psi, win, corpus_for(cfg, psi));
            emit(cfg, r.to_string());
            return r.equivalent() ? kPass : kCounterexample;
        } else if (*interpret_cmd) {
            const Formula psi = read_formula(cfg, formula_arg);
            const Formula phi = read_formula(cfg, second_arg);
            const auto corpus = corpus_for(cfg, psi);
            const auto rows = interpretation_table(psi, phi, corpus, cfg.provenance);
            std::string out = header("interpret-check");
            out += "psi: " + psi.to_string() + "\n";
            out += "phi: " + phi.to_string() + "\n";
            out += std::string("provenance: ") + yes_no(cfg.provenance) + "\n";
            out += "corpus: " + std::to_string(corpus.size()) + "\n";
            out += "table: index psi-holds game-holds agree\n";
            std::size_t bad = 0, first = corpus.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const bool agree = rows[i].expected == rows[i].actual;
                if (!agree && bad++ == 0) first = i;
                out += "  " + std::to_string(i) + " " + yes_no(rows[i].expected) + " " + yes_no(rows[i].actual) +
                       " " + yes_no(agree) + "\n";
            }
            out += "disagreements: " + std::to_string(bad) + "\n";
            if (bad == 0) {
                out += "verdict: no counterexample up to bound\n";
            } else {
                out += "verdict: counterexample\n";
                out += "witness-index: " + std::to_string(first) + "\n";
                out += "witness:\n" + store_structure(corpus[first]);
            }
            emit(cfg, out);
            return bad == 0 ? kPass : kCounterexample;
        } else if (*challenge_cmd) {
            const Arena a = load_arena(read_input(arena_path));
            const auto steps = parse_challenge_script(read_input(script_path));
            const ChallengeVariant v = variant == "sigma2" ? ChallengeVariant::Sigma2 : ChallengeVariant::General;
            const Interval target = parse_interval(target_text);
            const ChallengeReport r = adjudicate_challenge(a, steps, v, bound, target);
            std::string out = header("challenge");
            out += "variant: " + variant + "\n";
            out += "bound: " + std::to_string(bound) + "\n";
            out += r.to_string();
            if (solve_bounded) {
                const auto w = solve_challenge_bounded(a, v, bound, target);
                out += std::string("solved-winner: ") + (w ? to_string(*w) : "budget exceeded") + "\n";
            }
            emit(cfg, out);
        } else if (*enumerate_cmd) {
            if (cfg.alphabet.empty()) cfg.alphabet = "P,Q";
            CorpusSpec spec;
            spec.max_nodes = cfg.max_nodes;
            spec.samples = cfg.samples;
            spec.sample_max_nodes = cfg.sample_max_nodes;
            spec.seed = cfg.seed;
            const auto corpus = build_corpus(split_alphabet(cfg.alphabet), spec);
            std::string out = header("enumerate");
            out += "alphabet: " + cfg.alphabet + "\n";
            out += "count: " + std::to_string(corpus.size()) + "\n";
            for (std::size_t i = 0; i < corpus.size(); ++i)
                out += "# structure " + std::to_string(i) + "\n" + store_structure(corpus[i]);
            emit(cfg, out);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kPass;
}
