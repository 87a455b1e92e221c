#include "zariski/combinatorics.hpp"

#include "zariski/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace zariski {

void Combinatorics::canonicalize()
{
    for (auto& p : points)
        std::sort(p.begin(), p.end());
    std::sort(points.begin(), points.end());
}

bool Combinatorics::operator==(const Combinatorics& o) const
{
    Combinatorics a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.n_lines == b.n_lines && a.points == b.points;
}

ValidationReport validate_combinatorics(const Combinatorics& c)
{
    auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
    if (c.n_lines < 1)
        return fail("no lines");
    std::map<std::pair<int, int>, int> owner;
    for (size_t k = 0; k < c.points.size(); ++k) {
        auto p = c.points[k];
        std::sort(p.begin(), p.end());
        if (p.size() < 2)
            return fail("point #" + std::to_string(k + 1) + " has fewer than 2 lines");
        if (std::adjacent_find(p.begin(), p.end()) != p.end())
            return fail("point #" + std::to_string(k + 1) + " repeats a line");
        for (int l : p)
            if (l < 1 || l > c.n_lines)
                return fail("point #" + std::to_string(k + 1) + " uses unknown line " + std::to_string(l));
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) {
                auto key = std::make_pair(p[i], p[j]);
                auto [it, fresh] = owner.emplace(key, static_cast<int>(k));
                if (!fresh)
                    return fail("pair (" + std::to_string(p[i]) + "," + std::to_string(p[j]) +
                                ") lies in points #" + std::to_string(it->second + 1) + " and #" +
                                std::to_string(k + 1));
            }
    }
    for (int i = 1; i <= c.n_lines; ++i)
        for (int j = i + 1; j <= c.n_lines; ++j)
            if (!owner.count({i, j}))
                return fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") lies in no point");
    return {};
}

void require_valid(const Combinatorics& c)
{
    auto r = validate_combinatorics(c);
    if (!r.ok)
        throw Error("invalid combinatorics: " + r.message);
}

IncidenceGraph incidence_graph(const Combinatorics& c)
{
    require_valid(c);
    IncidenceGraph g;
    g.n_lines = c.n_lines;
    g.n_points = static_cast<int>(c.points.size());
    for (size_t k = 0; k < c.points.size(); ++k)
        for (int l : c.points[k])
            g.edges.emplace_back(l, static_cast<int>(k));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Permutation Permutation::identity(int n)
{
    Permutation p;
    for (int i = 1; i <= n; ++i)
        p.images.push_back(i);
    return p;
}

Permutation Permutation::parse_cycles(int n, const std::string& text)
{
    Permutation p = identity(n);
    std::vector<bool> seen(n + 1, false);
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') {
            if (text[i] == ' ') {
                ++i;
                continue;
            }
            throw Error("bad cycle notation: " + text);
        }
        size_t j = text.find(')', i);
        if (j == std::string::npos)
            throw Error("bad cycle notation: " + text);
        std::istringstream in(text.substr(i + 1, j - i - 1));
        std::vector<int> cyc;
        for (int v; in >> v;) {
            if (v < 1 || v > n || seen[v])
                throw Error("bad cycle notation: " + text);
            seen[v] = true;
            cyc.push_back(v);
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            p.images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        i = j + 1;
    }
    return p;
}

Permutation Permutation::operator*(const Permutation& b) const
{
    Permutation r;
    for (int x : b.images)
        r.images.push_back((*this)(x));
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    r.images.resize(images.size());
    for (int i = 1; i <= size(); ++i)
        r.images[(*this)(i) - 1] = i;
    return r;
}

bool Permutation::is_identity() const
{
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

std::string Permutation::cycles() const
{
    std::string out;
    std::vector<bool> seen(size() + 1, false);
    for (int i = 1; i <= size(); ++i) {
        if (seen[i] || (*this)(i) == i)
            continue;
        out += "(";
        for (int x = i; !seen[x]; x = (*this)(x)) {
            seen[x] = true;
            if (x != i)
                out += " ";
            out += std::to_string(x);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Combinatorics relabel(const Combinatorics& c, const Permutation& phi)
{
    Combinatorics r;
    r.n_lines = c.n_lines;
    for (const auto& p : c.points) {
        std::vector<int> q;
        for (int l : p)
            q.push_back(phi(l));
        r.points.push_back(q);
    }
    r.canonicalize();
    return r;
}

bool is_automorphism(const Combinatorics& c, const Permutation& p)
{
    if (p.size() != c.n_lines)
        return false;
    return relabel(c, p) == c;
}

std::vector<std::vector<int>> line_profiles(const Combinatorics& c)
{
    size_t maxm = 0;
    for (const auto& p : c.points)
        maxm = std::max(maxm, p.size());
    std::vector<std::vector<int>> prof(c.n_lines + 1, std::vector<int>(maxm + 1, 0));
    for (const auto& p : c.points)
        for (int l : p)
            prof[l][p.size()]++;
    return prof;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, int n)
{
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> todo{Permutation::identity(n)};
    while (!todo.empty()) {
        Permutation x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Permutation y = g * x;
            if (seen.insert(y).second)
                todo.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

constexpr size_t kMaxGroupOrder = 200000;

std::vector<Permutation> pick_generators(const std::vector<Permutation>& elems, int n)
{
    std::vector<Permutation> nontrivial;
    for (const auto& e : elems)
        if (!e.is_identity())
            nontrivial.push_back(e);
    if (nontrivial.empty())
        return {};
    size_t order = elems.size();
    // smallest generating set, lexicographically first, for small groups
    if (order <= 2000) {
        for (const auto& a : nontrivial)
            if (generate_group({a}, n).size() == order)
                return {a};
        for (size_t i = 0; i < nontrivial.size(); ++i)
            for (size_t j = i + 1; j < nontrivial.size(); ++j)
                if (generate_group({nontrivial[i], nontrivial[j]}, n).size() == order)
                    return {nontrivial[i], nontrivial[j]};
    }
    std::vector<Permutation> gens;
    std::set<Permutation> span{Permutation::identity(n)};
    for (const auto& e : nontrivial) {
        if (span.count(e))
            continue;
        gens.push_back(e);
        auto g = generate_group(gens, n);
        span = {g.begin(), g.end()};
        if (span.size() == order)
            break;
    }
    return gens;
}

}  // namespace

AutGroup automorphism_group(const Combinatorics& c)
{
    require_valid(c);
    int n = c.n_lines;
    if (n > kAutSearchBound)
        throw Error("automorphism search limited to " + std::to_string(kAutSearchBound) + " lines");
    std::vector<std::vector<int>> pt(n + 1, std::vector<int>(n + 1, -1));
    for (size_t k = 0; k < c.points.size(); ++k)
        for (int u : c.points[k])
            for (int v : c.points[k])
                if (u != v)
                    pt[u][v] = static_cast<int>(k);
    std::vector<std::set<int>> members;
    for (const auto& p : c.points)
        members.emplace_back(p.begin(), p.end());
    auto prof = line_profiles(c);

    std::vector<int> img(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    std::vector<Permutation> found;

    std::function<void(int)> rec = [&](int j) {
        if (j > n) {
            Permutation p;
            p.images.assign(img.begin() + 1, img.end());
            if (is_automorphism(c, p))
                found.push_back(p);
            if (found.size() > kMaxGroupOrder)
                throw Error("automorphism group too large to list");
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[x] || prof[x] != prof[j])
                continue;
            bool ok = true;
            for (int u = 1; u < j && ok; ++u) {
                const auto& P = members[pt[u][j]];
                const auto& Q = members[pt[img[u]][x]];
                if (P.size() != Q.size()) {
                    ok = false;
                    break;
                }
                for (int w = 1; w < j; ++w)
                    if (P.count(w) != Q.count(img[w])) {
                        ok = false;
                        break;
                    }
            }
            if (!ok)
                continue;
            img[j] = x;
            used[x] = true;
            rec(j + 1);
            used[x] = false;
        }
    };
    rec(1);
    std::sort(found.begin(), found.end());
    AutGroup g;
    g.elements = found;
    g.generators = pick_generators(found, n);
    return g;
}

Orbits orbits(const Combinatorics& c, const AutGroup& g)
{
    for (const auto& x : g.generators)
        if (!is_automorphism(c, x))
            throw Error("generator " + x.cycles() + " is not an automorphism");
    auto elems = g.elements.empty() ? generate_group(g.generators, c.n_lines) : g.elements;
    for (const auto& x : elems)
        if (!is_automorphism(c, x))
            throw Error("element " + x.cycles() + " is not an automorphism");
    Orbits o;
    std::vector<bool> done(c.n_lines + 1, false);
    for (int l = 1; l <= c.n_lines; ++l) {
        if (done[l])
            continue;
        std::set<int> orb;
        for (const auto& x : elems)
            orb.insert(x(l));
        for (int m : orb)
            done[m] = true;
        o.lines.emplace_back(orb.begin(), orb.end());
    }
    Combinatorics cc = c;
    cc.canonicalize();
    std::set<std::vector<int>> seen;
    for (const auto& p : cc.points) {
        if (seen.count(p))
            continue;
        std::set<std::vector<int>> orb;
        for (const auto& x : elems) {
            std::vector<int> q;
            for (int l : p)
                q.push_back(x(l));
            std::sort(q.begin(), q.end());
            orb.insert(q);
        }
        seen.insert(orb.begin(), orb.end());
        o.points.emplace_back(orb.begin(), orb.end());
    }
    return o;
}

std::optional<Combinatorics> builtin_combinatorics_opt(const std::string& name)
{
    static const std::vector<std::vector<int>> k_points = {
        {1, 2},       {1, 3, 5, 7}, {1, 4, 6, 8}, {1, 9},     {1, 10, 11}, {2, 3, 6, 9}, {2, 4, 5, 10}, {2, 7, 11},
        {2, 8},       {3, 4},       {3, 8, 11},   {3, 10},    {4, 7},      {4, 9, 11},   {5, 6},        {5, 8, 9},
        {5, 11},      {6, 7, 10},   {6, 11},      {7, 8},     {7, 9},      {8, 10},      {9, 10}};
    if (name == "K") {
        Combinatorics c{11, k_points};
        c.canonicalize();
        return c;
    }
    if (name == "K12") {
        Combinatorics c{12, {}};
        for (auto p : k_points) {
            if (p == std::vector<int>{1, 3, 5, 7})
                p.push_back(12);
            c.points.push_back(p);
        }
        for (int l : {2, 4, 6, 8, 9, 10, 11})
            c.points.push_back({l, 12});
        c.canonicalize();
        return c;
    }
    return std::nullopt;
}

Combinatorics builtin_combinatorics(const std::string& name)
{
    auto c = builtin_combinatorics_opt(name);
    if (!c)
        throw Error("unknown built-in combinatorics '" + name + "'");
    return *c;
}

}  // namespace zariski
