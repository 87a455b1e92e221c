#include "zariski/invariant.hpp"

#include <algorithm>
#include <set>

namespace zariski {

std::vector<int> Braid::final_order() const
{
    std::vector<int> c = initial_order;
    for (const auto& l : word)
        std::swap(c[l.pos - 1], c[l.pos]);
    return c;
}

Braid braid_for_cycle(const WiringDiagram& w, int s, int t)
{
    Braid b;
    b.n_strands = static_cast<int>(w.initial_order.size());
    b.initial_order = w.initial_order;
    std::vector<int> c = w.initial_order;
    for (const auto& ev : w.events) {
        if (std::holds_alternative<VerticalEvent>(ev))
            throw Error("non-generic diagram: perturb the projection first");
        if (auto* cr = std::get_if<CrossEvent>(&ev)) {
            b.word.push_back({cr->pos + 1, cr->sign, cr->over, cr->under});
            std::swap(c[cr->pos], c[cr->pos + 1]);
            continue;
        }
        const auto& nd = std::get<NodeEvent>(ev);
        bool has_s = std::count(nd.wires.begin(), nd.wires.end(), s) > 0;
        bool has_t = std::count(nd.wires.begin(), nd.wires.end(), t) > 0;
        if (has_s && has_t)
            return b;
        // positive half-twist: the top strand passes down over the others, repeatedly
        int k = static_cast<int>(nd.wires.size());
        for (int i = 0; i + 1 < k; ++i)
            for (int q = nd.pos; q < nd.pos + k - 1 - i; ++q) {
                b.word.push_back({q + 1, 1, c[q], c[q + 1]});
                std::swap(c[q], c[q + 1]);
            }
    }
    throw Error("no node holds both L" + std::to_string(s) + " and L" + std::to_string(t));
}

int CrossingMatrix::operator()(int i, int j) const
{
    auto it = signs.find({i, j});
    if (it == signs.end())
        return 0;
    int sum = 0;
    for (int v : it->second)
        sum += v;
    return sum;
}

std::map<int, int> CrossingMatrix::column(int j) const
{
    std::map<int, int> col;
    for (const auto& [key, v] : signs)
        if (key.second == j)
            col[key.first] = (*this)(key.first, j);
    return col;
}

CrossingMatrix crossing_counts(const Braid& b)
{
    CrossingMatrix m;
    for (const auto& l : b.word)
        m.signs[{l.over, l.under}].push_back(l.sign);
    return m;
}

InvariantValue invariant_from_braid(const Braid& b, const Character& xi, int s, int t)
{
    CrossingMatrix m = crossing_counts(b);
    long total = 0;
    for (const auto& [key, v] : m.signs) {
        int i = key.first;
        if (key.second != s && key.second != t)
            continue;
        long e = xi.exponent(i);
        long net = m(i, key.second);
        total += key.second == s ? net * e : -net * e;
    }
    int d = xi.order;
    InvariantValue r;
    r.order = d;
    r.exponent = static_cast<int>(((total % d) + d) % d);
    return r;
}

PathConfig reference_config()
{
    PathConfig c;
    c.chart = Chart::Lambda;
    c.path.final_direction = Gaussian{mpq_class(3, 4), mpq_class(1, 4)};
    c.name = "lambda chart, straight passage";
    return c;
}

std::vector<PathConfig> path_configs(int k)
{
    std::vector<PathConfig> all;
    all.push_back(reference_config());

    PathConfig below;
    below.chart = Chart::Lambda;
    below.epsilon = mpq_class(-1, 128);
    below.path.passage = Passage::Below;
    below.name = "lambda chart, eps -1/128, detours below";
    all.push_back(below);

    PathConfig above;
    above.chart = Chart::Standard;
    above.epsilon = mpq_class(1, 512);
    above.path.passage = Passage::Above;
    above.path.omega = Gaussian{mpq_class(4, 5), mpq_class(3, 5)};
    above.name = "generic chart, eps 1/512, detours above, direction (4+3i)/5";
    all.push_back(above);

    PathConfig tilted;
    tilted.chart = Chart::Lambda;
    tilted.epsilon = mpq_class(-1, 2048);
    tilted.path.omega = Gaussian{mpq_class(12, 13), mpq_class(-5, 13)};
    tilted.name = "lambda chart, eps -1/2048, direction (12-5i)/13";
    all.push_back(tilted);

    PathConfig standard;
    standard.chart = Chart::Standard;
    standard.path.passage = Passage::Below;
    standard.path.omega = Gaussian{mpq_class(3, 5), mpq_class(-4, 5)};
    standard.name = "generic chart, detours below, direction (3-4i)/5";
    all.push_back(standard);

    if (k < 1 || k > static_cast<int>(all.size()))
        throw Error("number of paths must be between 1 and " + std::to_string(all.size()));
    all.resize(k);
    return all;
}

InvariantRun run_invariant(const Arrangement& a, const Character& xi, const TriangleCycle& g, const PathConfig& cfg,
                           int precision)
{
    InvariantRun run;
    run.config = cfg;
    AffineArrangement aff;
    run.chart_used = cfg.chart;
    if (cfg.chart == Chart::Lambda) {
        try {
            aff = to_affine(a, g.r, Chart::Lambda);
        } catch (const Error&) {
            run.chart_used = Chart::Standard;
        }
    }
    if (run.chart_used == Chart::Standard)
        aff = to_affine(a, g.r, Chart::Standard);
    const int n = aff.field_order();
    if (cfg.epsilon) {
        run.epsilon = *cfg.epsilon;
        aff = perturb_to_generic(aff, CycNum(n, *cfg.epsilon));
    } else {
        aff = perturb_default(aff, &run.epsilon);
    }
    auto sv = singular_values(aff);
    std::vector<CycNum> xs;
    for (const auto& p : sv)
        xs.push_back(p.x);
    auto sorted = order_values(xs, aff.embedding, cfg.path.omega, precision);
    int last = -1;
    for (const auto& p : sv)
        if (std::count(p.wires.begin(), p.wires.end(), g.s) && std::count(p.wires.begin(), p.wires.end(), g.t))
            last = static_cast<int>(std::find(sorted.begin(), sorted.end(), p.x) - sorted.begin());
    if (last < 0)
        throw Error("L" + std::to_string(g.s) + " and L" + std::to_string(g.t) + " do not meet in the affine chart");
    PathOptions po = cfg.path;
    po.last = last;
    po.precision = precision;
    run.diagram = compute_wiring(aff, sorted, po);
    run.braid = braid_for_cycle(run.diagram, g.s, g.t);
    run.counts = crossing_counts(run.braid);
    for (const auto& [key, v] : run.counts.signs)
        if (key.first == g.r || key.second == g.r)
            throw std::logic_error("the line at infinity appears in the braid");
    run.value = invariant_from_braid(run.braid, xi, g.s, g.t);
    return run;
}

InvariantResult invariant(const Arrangement& a, const Character& xi, const TriangleCycle& g,
                          const InvariantOptions& opts)
{
    Combinatorics c = intersection_lattice(a);
    auto rep = inner_cyclic_report(c, xi, g);
    if (!rep.ok()) {
        std::string msg = "not inner-cyclic";
        for (const auto& f : rep.failures)
            msg += "; " + f;
        throw Error(msg);
    }
    auto configs = opts.configs.empty() ? path_configs(opts.paths) : opts.configs;
    InvariantResult res;
    for (const auto& cfg : configs)
        res.runs.push_back(run_invariant(a, xi, g, cfg, opts.precision));
    res.value = res.runs.front().value;
    for (const auto& r : res.runs)
        if (!(r.value == res.value)) {
            std::string msg = "path independence violated:";
            for (const auto& x : res.runs)
                msg += " [" + x.config.name + "] " + std::to_string(x.value.exponent);
            throw Error(msg);
        }
    return res;
}

std::string format_root(const InvariantValue& v)
{
    if (v.exponent == 0)
        return "1";
    if (v.exponent == 1)
        return "zeta";
    return "zeta^" + std::to_string(v.exponent);
}

SeparationReport separation_report(const std::vector<std::string>& names, const Character& xi,
                                   const TriangleCycle& g, const InvariantOptions& opts)
{
    SeparationReport rep;
    for (const auto& name : names) {
        Arrangement a = builtin_arrangement(name);
        Character x = xi;
        if (static_cast<int>(x.exponents.size()) < a.size())
            x.exponents.resize(a.size(), 0);
        rep.entries.push_back({name, invariant(a, x, g, opts).value});
    }
    std::set<int> seen;
    for (const auto& e : rep.entries)
        seen.insert(e.value.exponent);
    rep.all_distinct = rep.entries.size() > 1 && seen.size() == rep.entries.size();
    const size_t k = rep.entries.size();
    if (k < 2) {
        rep.conclusions.push_back("A single arrangement: nothing to compare.");
        return rep;
    }
    std::set<std::string> combi;
    for (const auto& e : rep.entries)
        combi.insert(builtin_arrangement(e.name).size() == 11 ? "K" : "K12");
    if (!rep.all_distinct) {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (rep.entries[i].value == rep.entries[j].value)
                    rep.conclusions.push_back(rep.entries[i].name + " and " + rep.entries[j].name +
                                              " have the same value; the invariant does not separate them.");
        return rep;
    }
    rep.conclusions.push_back("The values are pairwise distinct.");
    rep.conclusions.push_back(
        "The invariant is preserved by homeomorphisms of the plane that respect orientation and the order of the "
        "lines, so no two of these arrangements have the same oriented and ordered topological type.");
    if (combi.size() == 1)
        rep.conclusions.push_back("They share the combinatorics " + *combi.begin() +
                                  ", hence form an oriented and ordered Zariski " + std::to_string(k) + "-tuple.");
    if (combi.size() == 1 && *combi.begin() == "K12")
        rep.conclusions.push_back(
            "The automorphism group of K12 is trivial, so every homeomorphism between two of them would respect the "
            "order of the lines; the values therefore separate them up to orientation-preserving homeomorphism.");
    for (const auto& [p, q] : std::vector<std::pair<std::string, std::string>>{{"N+", "N-"}, {"M+", "M-"},
                                                                              {"FN+", "FN-"}, {"FM+", "FM-"}}) {
        auto find = [&](const std::string& n) {
            return std::find_if(rep.entries.begin(), rep.entries.end(), [&](const auto& e) { return e.name == n; });
        };
        auto a = find(p), b = find(q);
        if (a != rep.entries.end() && b != rep.entries.end() &&
            (a->value.exponent + b->value.exponent) % a->value.order == 0)
            rep.conclusions.push_back(p + " and " + q + " are complex conjugate and their values are inverse, as "
                                                        "complex conjugation inverts the invariant.");
    }
    return rep;
}

}  // namespace zariski
