#include "zariski/invariant.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace zariski;

namespace {

const TriangleCycle kGamma{5, 6, 11};
const Permutation kSigma = Permutation::parse_cycles(11, "(1 3 2 4)(5 6)(7 9 10 8)");

int neg(int e, int d)
{
    return (d - e) % d;
}

// Exponent recomputed from the letters alone: sum of xi over the strands
// passing over s minus those passing over t.
int oracle_exponent(const Braid& b, const Character& xi, int s, int t)
{
    long total = 0;
    for (const auto& l : b.word) {
        if (l.under == s)
            total += l.sign * xi.exponent(l.over);
        if (l.under == t)
            total -= l.sign * xi.exponent(l.over);
    }
    return static_cast<int>(((total % xi.order) + xi.order) % xi.order);
}

Arrangement relabel_lines(const Arrangement& a, const Permutation& phi)
{
    Arrangement r = a;
    for (int i = 1; i <= a.size(); ++i)
        r.lines[phi(i) - 1] = a.lines[i - 1];
    return r;
}

}  // namespace

TEST_CASE("the four headline values")
{
    auto xi = builtin_character();
    std::map<std::string, int> want{{"N+", 1}, {"N-", 4}, {"M+", 2}, {"M-", 3}};
    for (const auto& [name, e] : want) {
        auto r = invariant(builtin_arrangement(name), xi, kGamma);
        CHECK(r.value.order == 5);
        CHECK(r.value.exponent == e);
        CHECK(r.runs.size() == 3);
    }
}

TEST_CASE("crossing columns of N+ for the reference path")
{
    auto run = run_invariant(builtin_arrangement("N+"), builtin_character(), kGamma, reference_config());
    const auto& m = run.counts;
    auto col6 = m.column(6), col11 = m.column(11);
    CHECK(col6[10] == 0);
    CHECK(m.signs.at({10, 6}).size() == 2);
    CHECK(col6[7] == 1);
    CHECK(col11[9] == 1);
    auto s9 = m.signs.at({9, 11});
    CHECK(std::count(s9.begin(), s9.end(), 1) == 2);
    CHECK(std::count(s9.begin(), s9.end(), -1) == 1);
    CHECK(col11[10] == -1);
    CHECK(col11[6] == 0);
    CHECK(col11[7] == 1);
    // wires with nonzero exponent and nonzero net count
    int e = 0;
    for (const auto& [i, v] : col6)
        e += v * builtin_character().exponent(i);
    for (const auto& [i, v] : col11)
        e -= v * builtin_character().exponent(i);
    CHECK(((e % 5) + 5) % 5 == 1);
}

TEST_CASE("the line at infinity never enters the braid")
{
    auto run = run_invariant(builtin_arrangement("M-"), builtin_character(), kGamma, reference_config());
    for (const auto& l : run.braid.word) {
        CHECK(l.over != 5);
        CHECK(l.under != 5);
    }
    CHECK(std::count(run.braid.initial_order.begin(), run.braid.initial_order.end(), 5) == 0);
}

TEST_CASE("invariant_from_braid matches a letter-by-letter recount")
{
    auto xi = builtin_character();
    for (const char* name : {"N+", "N-", "M+", "M-"}) {
        for (const auto& cfg : path_configs(3)) {
            auto run = run_invariant(builtin_arrangement(name), xi, kGamma, cfg);
            CHECK(run.value.exponent == oracle_exponent(run.braid, xi, 6, 11));
        }
    }
}

TEST_CASE("path independence over five configurations")
{
    auto xi = builtin_character();
    auto cfgs = path_configs(5);
    CHECK(cfgs.size() == 5);
    for (const char* name : {"N+", "N-", "M+", "M-"}) {
        InvariantOptions o;
        o.configs = cfgs;
        auto r = invariant(builtin_arrangement(name), xi, kGamma, o);
        std::set<int> values;
        for (const auto& run : r.runs)
            values.insert(run.value.exponent);
        CHECK(values.size() == 1);
    }
    CHECK_THROWS_AS(path_configs(6), Error);
}

TEST_CASE("configurations really differ")
{
    auto cfgs = path_configs(5);
    auto a = builtin_arrangement("N+");
    std::set<std::string> words;
    for (const auto& c : cfgs) {
        auto run = run_invariant(a, builtin_character(), kGamma, c);
        std::string w;
        for (const auto& l : run.braid.word)
            w += std::to_string(l.sign * l.pos) + ",";
        words.insert(w);
    }
    CHECK(words.size() == cfgs.size());
}

TEST_CASE("conjugation inverts the value")
{
    auto xi = builtin_character();
    for (const char* name : {"N+", "N-", "M+", "M-"}) {
        auto a = builtin_arrangement(name);
        auto v = invariant(a, xi, kGamma).value;
        auto w = invariant(conjugate(a), xi, kGamma).value;
        CHECK(w.exponent == neg(v.exponent, 5));
    }
}

TEST_CASE("projective image of N+ keeps its value")
{
    auto xi = builtin_character();
    auto img = apply_projectivity(builtin_arrangement("N+"), cyclic_projectivity(10));
    // same labels: the projectivity is an orientation-preserving homeomorphism
    CHECK(invariant(img, xi, kGamma).value.exponent == 1);
    // relabeled by sigma, with character and cycle pushed forward
    auto rel = relabel_lines(img, kSigma);
    CHECK(intersection_lattice(rel) == builtin_combinatorics("K"));
    auto xs = character_pushforward(xi, kSigma);
    auto gs = cycle_pushforward(kGamma, kSigma);
    CHECK(invariant(rel, xs, gs).value.exponent == 1);
}

TEST_CASE("twelve-line arrangements keep the values of their bases")
{
    auto xi = builtin_character(12);
    std::map<std::string, int> want{{"FN+", 1}, {"FN-", 4}, {"FM+", 2}, {"FM-", 3}};
    for (const auto& [name, e] : want)
        CHECK(invariant(builtin_arrangement(name), xi, kGamma).value.exponent == e);
}

TEST_CASE("a three-fold node becomes the positive half-twist")
{
    WiringDiagram w{{1, 2, 3, 4}, {NodeEvent{0, {1, 2, 3}}, NodeEvent{2, {1, 4}}}, {}};
    auto b = braid_for_cycle(w, 1, 4);
    REQUIRE(b.word.size() == 3);
    CHECK(b.word[0].pos == 1);
    CHECK(b.word[1].pos == 2);
    CHECK(b.word[2].pos == 1);
    for (const auto& l : b.word)
        CHECK(l.sign == 1);
    CHECK(b.word[0].over == 1);
    CHECK(b.word[0].under == 2);
    CHECK(b.word[1].over == 1);
    CHECK(b.word[1].under == 3);
    CHECK(b.word[2].over == 2);
    CHECK(b.word[2].under == 3);
    CHECK(b.final_order() == std::vector<int>{3, 2, 1, 4});
}

TEST_CASE("the braid stops before the node of s and t")
{
    WiringDiagram w{{1, 2, 3},
                    {CrossEvent{0, -1, 2, 1}, NodeEvent{1, {1, 3}}, CrossEvent{0, 1, 2, 3}, NodeEvent{0, {3, 2}}},
                    {}};
    auto b = braid_for_cycle(w, 1, 3);
    REQUIRE(b.word.size() == 1);
    CHECK(b.word[0].sign == -1);
    CHECK_THROWS_AS(braid_for_cycle(w, 5, 6), Error);
    WiringDiagram v{{1, 2}, {VerticalEvent{3}}, {}};
    CHECK_THROWS_AS(braid_for_cycle(v, 1, 2), Error);
}

TEST_CASE("the value formula on a hand braid")
{
    Braid b;
    b.n_strands = 3;
    b.initial_order = {1, 2, 3};
    b.word = {{1, 1, 1, 2}, {2, -1, 1, 3}, {1, 1, 2, 3}};
    Character xi{5, {2, 1, 3}};
    // over s = 2: +e1 = 2; over t = 3: -e1 + e2 = -1 -> 2 - (-1) = 3
    CHECK(invariant_from_braid(b, xi, 2, 3).exponent == 3);
    CHECK(oracle_exponent(b, xi, 2, 3) == 3);
}

TEST_CASE("a triple that is not inner-cyclic is refused")
{
    CHECK_THROWS_AS(invariant(builtin_arrangement("N+"), builtin_character(), {1, 2, 3}), Error);
}

TEST_CASE("root formatting")
{
    CHECK(format_root({5, 0}) == "1");
    CHECK(format_root({5, 1}) == "zeta");
    CHECK(format_root({5, 3}) == "zeta^3");
}

TEST_CASE("separation report on the built-ins")
{
    auto rep = separation_report({"N+", "N-", "M+", "M-"}, builtin_character(), kGamma);
    CHECK(rep.all_distinct);
    REQUIRE(rep.entries.size() == 4);
    CHECK(rep.entries[0].value.exponent == 1);
    CHECK(rep.entries[1].value.exponent == 4);
    CHECK(rep.entries[2].value.exponent == 2);
    CHECK(rep.entries[3].value.exponent == 3);
    CHECK_FALSE(rep.conclusions.empty());
    auto same = separation_report({"N+", "N+"}, builtin_character(), kGamma);
    CHECK_FALSE(same.all_distinct);
}
