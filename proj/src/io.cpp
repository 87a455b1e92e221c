#include "zariski/io.hpp"

#include <fstream>
#include <sstream>

namespace zariski {

namespace {

const std::string kBuiltin = "builtin:";

bool is_builtin(const std::string& src, std::string& name)
{
    if (src.rfind(kBuiltin, 0) != 0)
        return false;
    name = src.substr(kBuiltin.size());
    return true;
}

template <class F>
auto guarded(const std::string& what, F f)
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error("malformed " + what + " JSON: " + e.what());
    }
}

}  // namespace

Json to_json(const Combinatorics& c)
{
    Combinatorics cc = c;
    cc.canonicalize();
    return Json{{"lines", cc.n_lines}, {"points", cc.points}};
}

Combinatorics combinatorics_from_json(const Json& j)
{
    return guarded("combinatorics", [&] {
        Combinatorics c;
        c.n_lines = j.at("lines").get<int>();
        c.points = j.at("points").get<std::vector<std::vector<int>>>();
        c.canonicalize();
        return c;
    });
}

Json to_json(const Arrangement& a)
{
    Json lines = Json::array();
    for (const auto& l : a.lines)
        lines.push_back({l[0].str(), l[1].str(), l[2].str()});
    Json j{{"field", {{"cyclotomic", a.embedding.field_order}, {"root_index", a.embedding.root_index}}},
           {"lines", lines}};
    if (a.beta)
        j["beta"] = a.beta->get_str();
    return j;
}

Arrangement arrangement_from_json(const Json& j)
{
    return guarded("arrangement", [&] {
        Arrangement a;
        a.embedding.field_order = j.at("field").at("cyclotomic").get<int>();
        a.embedding.root_index = j.at("field").at("root_index").get<int>();
        check_embedding(a.embedding);
        int n = a.embedding.field_order;
        for (const auto& l : j.at("lines")) {
            if (!l.is_array() || l.size() != 3)
                throw Error("each line needs three coefficients");
            ProjLine line;
            for (int i = 0; i < 3; ++i)
                line[i] = l[i].is_number_integer() ? CycNum(n, l[i].get<long>()) : parse_cyc(l[i].get<std::string>(), n);
            if (line[0].is_zero() && line[1].is_zero() && line[2].is_zero())
                throw Error("zero line vector");
            a.lines.push_back(line);
        }
        if (j.contains("beta"))
            a.beta = mpq_class(j.at("beta").get<std::string>());
        return a;
    });
}

Json to_json(const Character& xi)
{
    return Json{{"order", xi.order}, {"exponents", xi.exponents}};
}

Character character_from_json(const Json& j)
{
    return guarded("character", [&] {
        Character xi;
        xi.order = j.at("order").get<int>();
        xi.exponents = j.at("exponents").get<std::vector<int>>();
        return xi;
    });
}

Json to_json(const TriangleCycle& g)
{
    return Json{{"cycle", {g.r, g.s, g.t}}};
}

TriangleCycle cycle_from_json(const Json& j)
{
    return guarded("cycle", [&] {
        auto v = j.at("cycle").get<std::vector<int>>();
        if (v.size() != 3)
            throw Error("a cycle lists exactly three lines");
        return TriangleCycle{v[0], v[1], v[2]};
    });
}

Json to_json(const AutGroup& g)
{
    Json gens = Json::array(), elems = Json::array();
    for (const auto& p : g.generators)
        gens.push_back(p.cycles());
    for (const auto& p : g.elements)
        elems.push_back(p.cycles());
    return Json{{"order", g.order()}, {"generators", gens}, {"elements", elems}};
}

Json to_json(const Orbits& o)
{
    return Json{{"line_orbits", o.lines}, {"point_orbits", o.points}};
}

Json to_json(const InnerCyclicReport& r)
{
    return Json{{"inner_cyclic", r.ok()},
                {"conditions", {{"lines", r.lines_trivial}, {"points", r.points_trivial}, {"sums", r.sums_vanish}}},
                {"failures", r.failures}};
}

Json to_json(const WiringDiagram& w)
{
    Json events = Json::array();
    for (const auto& ev : w.events) {
        if (auto* nd = std::get_if<NodeEvent>(&ev))
            events.push_back({{"node", {{"at", nd->pos + 1}, {"wires", nd->wires}}}});
        else if (auto* cr = std::get_if<CrossEvent>(&ev))
            events.push_back(
                {{"cross", {{"at", cr->pos + 1}, {"sign", cr->sign}, {"over", cr->over}, {"under", cr->under}}}});
        else
            events.push_back({{"vertical", {{"line", std::get<VerticalEvent>(ev).label}}}});
    }
    return Json{{"initial_order", w.initial_order}, {"events", events}};
}

Json to_json(const InvariantResult& r, const TriangleCycle& g)
{
    const auto& ref = r.runs.front();
    Json cols = Json::object(), raw = Json::object();
    for (int j : {g.s, g.t}) {
        Json c = Json::object(), s = Json::object();
        for (const auto& [i, v] : ref.counts.column(j)) {
            c[std::to_string(i)] = v;
            s[std::to_string(i)] = ref.counts.signs.at({i, j});
        }
        cols[std::to_string(j)] = c;
        raw[std::to_string(j)] = s;
    }
    Json runs = Json::array();
    for (const auto& x : r.runs)
        runs.push_back({{"config", x.config.name},
                        {"chart", x.chart_used == Chart::Lambda ? "lambda" : "standard"},
                        {"epsilon", x.epsilon.get_str()},
                        {"value_exponent", x.value.exponent}});
    return Json{{"value_exponent", r.value.exponent},
                {"order", r.value.order},
                {"value", format_root(r.value)},
                {"paths_checked", r.runs.size()},
                {"crossing_columns", cols},
                {"crossing_signs", raw},
                {"runs", runs}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

Combinatorics load_combinatorics(const std::string& src)
{
    std::string name;
    if (is_builtin(src, name))
        return builtin_combinatorics(name);
    return combinatorics_from_json(read_json_file(src));
}

Arrangement load_arrangement(const std::string& src)
{
    std::string name;
    if (is_builtin(src, name))
        return builtin_arrangement(name);
    return arrangement_from_json(read_json_file(src));
}

Character load_character(const std::string& src, int n_lines)
{
    std::string name;
    if (is_builtin(src, name)) {
        if (name != "xi")
            throw Error("unknown built-in character '" + name + "'");
        return builtin_character(n_lines);
    }
    return character_from_json(read_json_file(src));
}

TriangleCycle load_cycle(const std::string& src)
{
    if (src.find('{') == std::string::npos && src.find('.') == std::string::npos) {
        std::vector<int> v;
        std::stringstream in(src);
        std::string tok;
        while (std::getline(in, tok, ','))
            try {
                v.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw Error("bad cycle '" + src + "'");
            }
        if (v.size() != 3)
            throw Error("a cycle lists exactly three lines");
        return {v[0], v[1], v[2]};
    }
    return cycle_from_json(read_json_file(src));
}

}  // namespace zariski
