// zariski: command-line front end for the arrangement library.
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include "zariski/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

using namespace zariski;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct Globals {
    int precision = 64;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

int cmd_combi_validate(const std::string& src, bool json)
{
    Combinatorics c = load_combinatorics(src);
    auto r = validate_combinatorics(c);
    if (json)
        print_json({{"valid", r.ok}, {"message", r.message}});
    else if (r.ok)
        std::cout << "valid: " << c.n_lines << " lines, " << c.points.size() << " points\n";
    else
        std::cout << "invalid: " << r.message << "\n";
    return r.ok ? kOk : kDomain;
}

int cmd_combi_aut(const std::string& src, bool json)
{
    AutGroup g = automorphism_group(load_combinatorics(src));
    if (json) {
        print_json(to_json(g));
        return kOk;
    }
    std::cout << "order: " << g.order() << "\n";
    std::cout << "generators:";
    if (g.generators.empty())
        std::cout << " ()";
    for (const auto& p : g.generators)
        std::cout << " " << p.cycles();
    std::cout << "\n";
    return kOk;
}

int cmd_combi_orbits(const std::string& src, bool json)
{
    Combinatorics c = load_combinatorics(src);
    Orbits o = orbits(c, automorphism_group(c));
    if (json) {
        print_json(to_json(o));
        return kOk;
    }
    std::cout << "line orbits:";
    for (const auto& orb : o.lines) {
        std::cout << " {";
        for (size_t i = 0; i < orb.size(); ++i)
            std::cout << (i ? "," : "") << orb[i];
        std::cout << "}";
    }
    std::cout << "\npoint orbits: " << o.points.size() << "\n";
    for (const auto& orb : o.points) {
        std::cout << " ";
        for (const auto& p : orb) {
            std::cout << " {";
            for (size_t i = 0; i < p.size(); ++i)
                std::cout << (i ? "," : "") << p[i];
            std::cout << "}";
        }
        std::cout << "\n";
    }
    return kOk;
}

std::string default_combinatorics_for(const Arrangement& a)
{
    return a.size() == 12 ? "builtin:K12" : "builtin:K";
}

int cmd_arr_check(const std::string& src, std::string against, bool json)
{
    Arrangement a = load_arrangement(src);
    if (against.empty())
        against = default_combinatorics_for(a);
    Combinatorics want = load_combinatorics(against);
    Combinatorics got = intersection_lattice(a);
    std::set<std::vector<int>> w(want.points.begin(), want.points.end()), g(got.points.begin(), got.points.end());
    std::vector<std::vector<int>> missing, extra;
    for (const auto& p : w)
        if (!g.count(p))
            missing.push_back(p);
    for (const auto& p : g)
        if (!w.count(p))
            extra.push_back(p);
    bool ok = is_ordered_realization(a, want);
    if (json) {
        print_json({{"realizes", ok}, {"against", against}, {"missing", missing}, {"extra", extra}});
    } else {
        std::cout << (ok ? "realizes " : "does not realize ") << against << " (" << got.points.size() << " points)\n";
        auto show = [](const char* what, const std::vector<std::vector<int>>& ps) {
            for (const auto& p : ps) {
                std::cout << what << " {";
                for (size_t i = 0; i < p.size(); ++i)
                    std::cout << (i ? "," : "") << p[i];
                std::cout << "}\n";
            }
        };
        show("  missing", missing);
        show("  extra", extra);
    }
    return ok ? kOk : kDomain;
}

int cmd_char_check(const std::string& comb, const std::string& chr, const std::string& cyc, bool json)
{
    Combinatorics c = load_combinatorics(comb);
    Character xi = load_character(chr, c.n_lines);
    TriangleCycle g = load_cycle(cyc);
    auto v = validate_character(c, xi);
    if (!v.ok)
        throw Error("invalid character: " + v.message);
    check_cycle(c, g);
    auto r = inner_cyclic_report(c, xi, g);
    if (json) {
        print_json(to_json(r));
    } else {
        auto mark = [](bool b) { return b ? "ok" : "FAILED"; };
        std::cout << "cycle lines trivial: " << mark(r.lines_trivial) << "\n";
        std::cout << "lines through cycle points trivial: " << mark(r.points_trivial) << "\n";
        std::cout << "point sums on cycle lines vanish: " << mark(r.sums_vanish) << "\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f << "\n";
        std::cout << (r.ok() ? "inner-cyclic" : "not inner-cyclic") << "\n";
    }
    return r.ok() ? kOk : kDomain;
}

struct WiringArgs {
    std::string src;
    int infinity = 5;
    std::string chart = "paper";
    std::optional<std::string> perturb;
    std::string svg, events;
};

int cmd_wiring(const WiringArgs& w, const Globals& gl)
{
    Arrangement a = load_arrangement(w.src);
    Chart chart = w.chart == "standard" ? Chart::Standard : Chart::Lambda;
    AffineArrangement aff = to_affine(a, w.infinity, chart);
    std::vector<CycNum> values;
    mpq_class eps;
    if (w.perturb) {
        if (w.perturb->empty() || *w.perturb == "default") {
            aff = perturb_default(aff, &eps);
        } else {
            eps = mpq_class(*w.perturb);
            eps.canonicalize();
            aff = perturb_to_generic(aff, CycNum(aff.field_order(), eps));
        }
        for (const auto& s : singular_values(aff))
            values.push_back(s.x);
    } else {
        values = fiber_values(aff);
    }
    PathOptions po;
    po.precision = gl.precision;
    auto sorted = order_values(values, aff.embedding, po.omega, gl.precision);
    WiringDiagram d = compute_wiring(aff, sorted, po);
    check_consistency(d);
    Json j = to_json(d);
    if (!w.svg.empty())
        write_file(w.svg, render_svg(d));
    if (!w.events.empty())
        write_file(w.events, j.dump(2) + "\n");
    if (w.events.empty() && w.svg.empty()) {
        print_json(j);
    } else {
        int nodes = 0, crosses = 0, verticals = 0;
        for (const auto& ev : d.events) {
            nodes += std::holds_alternative<NodeEvent>(ev);
            crosses += std::holds_alternative<CrossEvent>(ev);
            verticals += std::holds_alternative<VerticalEvent>(ev);
        }
        std::cout << d.initial_order.size() << " wires, " << nodes << " nodes, " << crosses << " crossings, "
                  << verticals << " vertical lines";
        if (w.perturb)
            std::cout << ", epsilon " << eps.get_str();
        std::cout << "\n";
    }
    return kOk;
}

int cmd_invariant(const std::string& src, const std::string& chr, const std::string& cyc, int paths,
                  const Globals& gl)
{
    Arrangement a = load_arrangement(src);
    Character xi = load_character(chr, a.size());
    if (static_cast<int>(xi.exponents.size()) < a.size() && chr == "builtin:xi")
        xi.exponents.resize(a.size(), 0);
    TriangleCycle g = load_cycle(cyc);
    InvariantOptions o;
    o.paths = paths;
    o.precision = gl.precision;
    print_json(to_json(invariant(a, xi, g, o), g));
    return kOk;
}

int cmd_reproduce(int paths, bool json, const Globals& gl)
{
    Character xi = builtin_character();
    TriangleCycle g{5, 6, 11};
    InvariantOptions o;
    o.paths = paths;
    o.precision = gl.precision;
    auto base = separation_report({"N+", "N-", "M+", "M-"}, xi, g, o);
    auto ext = separation_report({"FN+", "FN-", "FM+", "FM-"}, xi, g, o);
    if (json) {
        auto entries = [](const SeparationReport& r) {
            Json e = Json::array();
            for (const auto& x : r.entries)
                e.push_back({{"name", x.name}, {"value_exponent", x.value.exponent}, {"order", x.value.order},
                             {"value", format_root(x.value)}});
            return e;
        };
        print_json({{"character", to_json(xi)},
                    {"cycle", {g.r, g.s, g.t}},
                    {"paths_checked", paths},
                    {"arrangements", entries(base)},
                    {"derived_twelve_line", entries(ext)},
                    {"all_distinct", base.all_distinct},
                    {"conclusions", base.conclusions},
                    {"derived_conclusions", ext.conclusions}});
        return kOk;
    }
    std::cout << "character xi: order " << xi.order << ", exponents (";
    for (size_t i = 0; i < xi.exponents.size(); ++i)
        std::cout << (i ? "," : "") << xi.exponents[i];
    std::cout << "), cycle (" << g.r << "," << g.s << "," << g.t << "), " << paths << " path(s) each\n\n";
    std::cout << "arrangement  value\n";
    for (const auto& e : base.entries)
        std::cout << "  " << e.name << std::string(11 - e.name.size(), ' ') << format_root(e.value) << "\n";
    std::cout << "\n";
    for (const auto& c : base.conclusions)
        std::cout << c << "\n";
    std::cout << "\nDERIVED (12 lines, e12 = 0)\n";
    for (const auto& e : ext.entries)
        std::cout << "  " << e.name << std::string(11 - e.name.size(), ' ') << format_root(e.value) << "\n";
    std::cout << "\n";
    for (const auto& c : ext.conclusions)
        std::cout << c << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations on complex line arrangements and their wiring diagrams", "zariski"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--precision", gl.precision, "Starting precision in bits for certified comparisons")
        ->check(CLI::Range(16, 1 << 20));

    bool json = false;
    std::string src;
    std::function<int()> action;

    auto* combi = app.add_subcommand("combi", "Abstract combinatorics")->require_subcommand(1);
    for (auto [name, help] : {std::pair{"validate", "Check the combinatorics axioms"},
                              std::pair{"aut", "Automorphism group"},
                              std::pair{"orbits", "Orbits of lines and points"}}) {
        auto* sc = combi->add_subcommand(name, help);
        sc->add_option("source", src, "JSON file or builtin:K, builtin:K12")->required();
        sc->add_flag("--json", json, "JSON output");
        std::string n = name;
        sc->callback([&, n] {
            action = [&, n] {
                if (n == "validate")
                    return cmd_combi_validate(src, json);
                if (n == "aut")
                    return cmd_combi_aut(src, json);
                return cmd_combi_orbits(src, json);
            };
        });
    }

    auto* arr = app.add_subcommand("arr", "Arrangements over cyclotomic fields")->require_subcommand(1);
    std::string against;
    auto* lat = arr->add_subcommand("lattice", "Intersection lattice as combinatorics JSON");
    lat->add_option("source", src, "JSON file or builtin:NAME")->required();
    lat->callback([&] { action = [&] { return print_json(to_json(intersection_lattice(load_arrangement(src)))), kOk; }; });
    auto* chk = arr->add_subcommand("check", "Is the arrangement an ordered realization");
    chk->add_option("source", src, "JSON file or builtin:NAME")->required();
    chk->add_option("--against", against, "Combinatorics (default builtin:K, or builtin:K12 for 12 lines)");
    chk->add_flag("--json", json, "JSON output");
    chk->callback([&] { action = [&] { return cmd_arr_check(src, against, json); }; });
    auto* conj = arr->add_subcommand("conjugate", "Complex conjugate arrangement");
    conj->add_option("source", src, "JSON file or builtin:NAME")->required();
    conj->callback([&] { action = [&] { return print_json(to_json(conjugate(load_arrangement(src)))), kOk; }; });

    auto* chr = app.add_subcommand("char", "Characters and triangle cycles")->require_subcommand(1);
    std::string comb, chfile, cyc;
    auto* ic = chr->add_subcommand("check-inner-cyclic", "Check the three inner-cyclic conditions");
    ic->add_option("combinatorics", comb, "JSON file or builtin:K")->required();
    ic->add_option("character", chfile, "JSON file or builtin:xi")->required();
    ic->add_option("cycle", cyc, "r,s,t or a JSON file")->required();
    ic->add_flag("--json", json, "JSON output");
    ic->callback([&] { action = [&] { return cmd_char_check(comb, chfile, cyc, json); }; });

    WiringArgs wa;
    auto* wir = app.add_subcommand("wiring", "Braided wiring diagram");
    wir->add_option("arrangement", wa.src, "JSON file or builtin:NAME")->required();
    wir->add_option("--infinity", wa.infinity, "Line sent to infinity")->capture_default_str();
    wir->add_option("--chart", wa.chart, "paper (lambda chart) or standard")
        ->check(CLI::IsMember({"paper", "standard"}))
        ->capture_default_str();
    wir->add_option("--perturb", wa.perturb, "Make the projection generic; optional rational epsilon")
        ->expected(0, 1);
    wir->add_option("--svg", wa.svg, "Write SVG here");
    wir->add_option("--events", wa.events, "Write events JSON here");
    wir->callback([&] { action = [&] { return cmd_wiring(wa, gl); }; });

    int paths = 3;
    std::string ichar = "builtin:xi", icyc;
    auto* inv = app.add_subcommand("invariant", "Invariant of an inner-cyclic triple");
    inv->add_option("arrangement", src, "JSON file or builtin:NAME")->required();
    inv->add_option("--char", ichar, "Character JSON file or builtin:xi")->capture_default_str();
    inv->add_option("--cycle", icyc, "r,s,t or a JSON file")->required();
    inv->add_option("--paths", paths, "Number of independent path configurations")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    inv->callback([&] { action = [&] { return cmd_invariant(src, ichar, icyc, paths, gl); }; });

    auto* rep = app.add_subcommand("reproduce-paper", "Invariants of the built-in arrangements and conclusions");
    rep->add_option("--paths", paths, "Path configurations per arrangement")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    rep->add_flag("--json", json, "JSON output");
    rep->callback([&] { action = [&] { return cmd_reproduce(paths, json, gl); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }
    try {
        return action();
    } catch (const DegeneratePath& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad value: " << e.what() << "\n";
        return kDomain;
    }
}
