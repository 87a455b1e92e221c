#include "zariski/character.hpp"

#include "zariski/cyclotomic.hpp"

#include <algorithm>

namespace zariski {

namespace {

int mod(long v, int d)
{
    long r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

std::string point_str(const std::vector<int>& p)
{
    std::string s = "{";
    for (size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + "}";
}

const std::vector<int>& point_of(const Combinatorics& c, int u, int v)
{
    for (const auto& p : c.points)
        if (std::count(p.begin(), p.end(), u) && std::count(p.begin(), p.end(), v))
            return p;
    throw Error("lines " + std::to_string(u) + " and " + std::to_string(v) + " share no point");
}

}  // namespace

ValidationReport validate_character(const Combinatorics& c, const Character& xi)
{
    if (xi.order < 1)
        return {false, "character order must be positive"};
    if (static_cast<int>(xi.exponents.size()) != c.n_lines)
        return {false, "character has " + std::to_string(xi.exponents.size()) + " exponents for " +
                           std::to_string(c.n_lines) + " lines"};
    long sum = 0;
    for (int e : xi.exponents)
        sum += e;
    if (mod(sum, xi.order) != 0)
        return {false, "exponent sum " + std::to_string(sum) + " is not 0 mod " + std::to_string(xi.order)};
    return {};
}

void check_cycle(const Combinatorics& c, const TriangleCycle& g)
{
    for (int l : {g.r, g.s, g.t})
        if (l < 1 || l > c.n_lines)
            throw Error("cycle uses unknown line " + std::to_string(l));
    if (g.r == g.s || g.s == g.t || g.r == g.t)
        throw Error("cycle lines must be distinct");
    const auto& p = point_of(c, g.r, g.s);
    if (std::count(p.begin(), p.end(), g.t))
        throw Error("lines " + std::to_string(g.r) + ", " + std::to_string(g.s) + ", " + std::to_string(g.t) +
                    " are concurrent at " + point_str(p) + ": not a triangle");
}

InnerCyclicReport inner_cyclic_report(const Combinatorics& c, const Character& xi, const TriangleCycle& g)
{
    require_valid(c);
    check_cycle(c, g);
    auto v = validate_character(c, xi);
    if (!v.ok)
        throw Error("invalid character: " + v.message);
    InnerCyclicReport rep;
    const int d = xi.order;
    const int cyc[3] = {g.r, g.s, g.t};
    for (int l : cyc)
        if (mod(xi.exponent(l), d) != 0) {
            rep.lines_trivial = false;
            rep.failures.push_back("condition 1: line " + std::to_string(l) + " has exponent " +
                                   std::to_string(mod(xi.exponent(l), d)));
        }
    for (int i = 0; i < 3; ++i) {
        const auto& p = point_of(c, cyc[i], cyc[(i + 1) % 3]);
        for (int l : p)
            if (mod(xi.exponent(l), d) != 0) {
                rep.points_trivial = false;
                rep.failures.push_back("condition 2: line " + std::to_string(l) + " through cycle point " +
                                       point_str(p) + " has exponent " + std::to_string(mod(xi.exponent(l), d)));
            }
    }
    for (const auto& p : c.points) {
        bool on_cycle = std::any_of(std::begin(cyc), std::end(cyc),
                                    [&](int l) { return std::count(p.begin(), p.end(), l) > 0; });
        if (!on_cycle)
            continue;
        long sum = 0;
        for (int l : p)
            sum += xi.exponent(l);
        if (mod(sum, d) != 0) {
            rep.sums_vanish = false;
            rep.failures.push_back("condition 3: point " + point_str(p) + " has exponent sum " +
                                   std::to_string(mod(sum, d)));
        }
    }
    return rep;
}

bool is_inner_cyclic(const Combinatorics& c, const Character& xi, const TriangleCycle& g)
{
    return inner_cyclic_report(c, xi, g).ok();
}

Character character_pushforward(const Character& xi, const Permutation& phi)
{
    if (phi.size() != static_cast<int>(xi.exponents.size()))
        throw Error("permutation size does not match character");
    Character r = xi;
    for (int i = 1; i <= phi.size(); ++i)
        r.exponents[phi(i) - 1] = xi.exponent(i);
    return r;
}

TriangleCycle cycle_pushforward(const TriangleCycle& g, const Permutation& phi)
{
    return {phi(g.r), phi(g.s), phi(g.t)};
}

Character builtin_character(int n_lines)
{
    Character xi{5, {1, 4, 3, 2, 0, 0, 1, 2, 3, 4, 0}};
    if (n_lines < 11)
        throw Error("built-in character needs at least 11 lines");
    xi.exponents.resize(n_lines, 0);
    return xi;
}

}  // namespace zariski
