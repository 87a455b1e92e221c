#pragma once

#include "zariski/arrangement.hpp"
#include "zariski/character.hpp"
#include "zariski/wiring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

struct BraidLetter {
    int pos = 0;  // 1-based position of the upper strand
    int sign = 1;
    int over = 0, under = 0;
};

struct Braid {
    int n_strands = 0;
    std::vector<int> initial_order;
    std::vector<BraidLetter> word;

    // Strand order after the word.
    std::vector<int> final_order() const;
};

// Prefix of w strictly before the node holding s and t, with every node
// replaced by the positive half-twist on its block.
Braid braid_for_cycle(const WiringDiagram& w, int s, int t);

struct CrossingMatrix {
    // signs[(i, j)]: signs of the letters where wire i passes over wire j
    std::map<std::pair<int, int>, std::vector<int>> signs;

    int operator()(int i, int j) const;
    // Net counts of the wires passing over j, including nets of zero.
    std::map<int, int> column(int j) const;
};

CrossingMatrix crossing_counts(const Braid& b);

struct InvariantValue {
    int order = 1;
    int exponent = 0;
    bool operator==(const InvariantValue&) const = default;
};

InvariantValue invariant_from_braid(const Braid& b, const Character& xi, int s, int t);

// One way of producing the diagram: chart, perturbation and path.
struct PathConfig {
    Chart chart = Chart::Lambda;
    std::optional<mpq_class> epsilon;  // default: -1/2^k, k >= 10
    PathOptions path;
    std::string name;
};

// Lambda chart, straight passage, final approach from (3 + i)/4.
PathConfig reference_config();
// k distinct configurations, the reference one first.
std::vector<PathConfig> path_configs(int k);

struct InvariantRun {
    PathConfig config;
    mpq_class epsilon;
    Chart chart_used = Chart::Lambda;
    WiringDiagram diagram;
    Braid braid;
    CrossingMatrix counts;
    InvariantValue value;
};

struct InvariantOptions {
    int paths = 3;
    int precision = 64;
    std::vector<PathConfig> configs;  // overrides `paths` when not empty
};

struct InvariantResult {
    InvariantValue value;
    std::vector<InvariantRun> runs;
};

// One configuration; the lambda chart falls back to the standard one when it
// does not send L_r to infinity.
InvariantRun run_invariant(const Arrangement& a, const Character& xi, const TriangleCycle& g, const PathConfig& cfg,
                           int precision = 64);

// Checks inner-cyclicity, runs every configuration and requires agreement.
InvariantResult invariant(const Arrangement& a, const Character& xi, const TriangleCycle& g,
                          const InvariantOptions& opts = {});

struct SeparationEntry {
    std::string name;
    InvariantValue value;
};

struct SeparationReport {
    std::vector<SeparationEntry> entries;
    bool all_distinct = false;
    std::vector<std::string> conclusions;
};

SeparationReport separation_report(const std::vector<std::string>& names, const Character& xi,
                                   const TriangleCycle& g, const InvariantOptions& opts = {});

std::string format_root(const InvariantValue& v);

}  // namespace zariski
