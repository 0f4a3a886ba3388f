#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mugames/arena.hpp"
#include "mugames/challenge.hpp"
#include "mugames/interpreters.hpp"
#include "mugames/product.hpp"
#include "mugames/semantics.hpp"
#include "mugames/solver.hpp"

namespace py = pybind11;
using namespace mugames;

namespace {

std::string winner_name(Player p) { return p == Player::Even ? "Even" : "Odd"; }

Interval interval(std::pair<unsigned, unsigned> lo_hi) { return {lo_hi.first, lo_hi.second}; }

std::optional<std::pair<unsigned, unsigned>> as_pair(const std::optional<Interval>& i) {
    if (!i) return std::nullopt;
    return std::make_pair(i->lo, i->hi);
}

py::dict report(const CheckReport& r) {
    py::dict d;
    d["passed"] = r.passed();
    d["checked"] = r.checked;
    if (r.counterexample) {
        d["index"] = r.counterexample->index;
        d["structure"] = store_structure(r.counterexample->structure);
        d["expected"] = r.counterexample->expected;
        d["actual"] = r.counterexample->actual;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Modal mu-calculus games";

    // later registrations are tried first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Formula>(m, "Formula")
        .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
        .def("__str__", [](const Formula& f) { return f.to_string(); })
        .def("__repr__", [](const Formula& f) { return "Formula('" + f.to_string() + "')"; })
        .def("__len__", &Formula::size)
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def_property_readonly("is_guarded", &Formula::is_guarded)
        .def_property_readonly("modal_depth", &Formula::modal_depth)
        .def("guard", [](const Formula& f) { return guard(f); })
        .def("priorities", [](const Formula& f) { return assign_priorities(f).priority; })
        .def("index", [](const Formula& f) { return as_pair(assign_priorities(f).index()); })
        .def("index_class", [](const Formula& f) { return index_class(f).to_string(); });

    py::class_<Structure>(m, "Structure")
        .def(py::init([](const std::string& text) { return load_structure(text); }), py::arg("text"))
        .def("__str__", [](const Structure& s) { return store_structure(s); })
        .def("__len__", &Structure::size)
        .def("truncate", [](const Structure& s, std::size_t depth) { return truncate(s, depth); });

    py::class_<Arena>(m, "Arena")
        .def(py::init([](const std::string& text) { return load_arena(text); }), py::arg("text"))
        .def("__str__", [](const Arena& a) { return store_arena(a); })
        .def("__len__", &Arena::size)
        .def("index", [](const Arena& a) { return as_pair(std::optional<Interval>(a.index())); })
        .def("encode", [](const Arena& a, bool provenance) { return encode(a, provenance); }, py::arg("provenance") = false)
        .def("solve", [](const Arena& a) {
            std::vector<std::string> w;
            for (Player p : solve(a).winner) w.push_back(winner_name(p));
            return w;
        })
        .def("winner", [](const Arena& a) { return winner_name(initial_winner(a)); });

    m.def("parse", [](const std::string& text) { return parse(text); });
    m.def("holds", &holds, "Game-based verdict", py::arg("structure"), py::arg("formula"));
    m.def("satisfies", &satisfies, "Fixpoint-evaluation verdict", py::arg("structure"), py::arg("formula"));
    m.def("mc_game", [](const Structure& t, const Formula& f) { return mc_game(t, f); }, py::arg("structure"), py::arg("formula"));
    m.def("parity_formula", [](std::pair<unsigned, unsigned> I) { return parity_formula(interval(I)); });
    m.def("bounded_formula",
          [](unsigned p, unsigned n, std::pair<unsigned, unsigned> I) { return bounded_formula(p, n, interval(I)); });
    m.def("enumerate_structures", &enumerate_structures, py::arg("max_nodes"), py::arg("alphabet"));
    m.def(
        "corpus",
        [](const std::vector<std::string>& alphabet, std::size_t max_nodes, std::size_t samples, std::uint64_t seed) {
            return build_corpus(alphabet, {max_nodes, samples, 8, seed});
        },
        py::arg("alphabet"), py::arg("max_nodes") = 3, py::arg("samples") = 200, py::arg("seed") = 0);
    m.def(
        "check_equivalent", [](const Formula& a, const Formula& b, const std::vector<Structure>& c) {
            return report(check_equivalent(a, b, c));
        });
    m.def(
        "check_interprets",
        [](const Formula& psi, const Formula& phi, const std::vector<Structure>& c, bool provenance) {
            return report(check_interprets(psi, phi, c, provenance));
        },
        py::arg("psi"), py::arg("phi"), py::arg("corpus"), py::arg("provenance") = false);
    m.def("product", [](const Formula& psi, const Formula& win) { return product(psi, win).formula; });
    m.def("cleanup", &cleanup);
    m.def("simplify", [](const Formula& psi, const Formula& win, const std::vector<Structure>& c) {
        return simplify(psi, win, c).to_string();
    });
    m.def(
        "challenge",
        [](const Arena& a, const std::string& script, const std::string& variant, unsigned n,
           std::pair<unsigned, unsigned> target) {
            if (variant != "sigma2" && variant != "general") throw Error("variant must be sigma2 or general");
            const auto v = variant == "sigma2" ? ChallengeVariant::Sigma2 : ChallengeVariant::General;
            const ChallengeReport r = adjudicate_challenge(a, parse_challenge_script(script), v, n, interval(target));
            py::dict d;
            d["winner"] = winner_name(r.winner);
            d["dominant"] = r.dominant;
            d["terminal"] = r.terminal;
            d["immediate"] = r.immediate;
            d["cycle_start"] = r.cycle_start;
            d["text"] = r.to_string();
            return d;
        },
        py::arg("arena"), py::arg("script"), py::arg("variant") = "sigma2", py::arg("n") = 1,
        py::arg("target") = std::make_pair(0u, 1u));
}
