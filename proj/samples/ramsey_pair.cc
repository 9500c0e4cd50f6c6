// Copyright 2026 The Tree Ramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small tour of the library: r(P_5, K_{1,4}) by exhaustive search, the
// critical colorings one below it, the known results that apply, and a Tabu
// run that rediscovers a critical coloring.
//
//   ./build/samples/ramsey_pair

#include <iostream>

#include "ramsey/ramsey.hpp"

int main() {
    using namespace ramsey;
    const SmallGraph red = build_path(5);
    const SmallGraph blue = build_star(4);

    DriverOptions opts;
    opts.threads = 1;
    const RamseyResult r = compute_ramsey(red, blue, opts);
    std::cout << "r(P_5, K_{1,4}) = " << r.value << " (" << to_string(r.status) << ")\n";

    std::cout << r.critical.count << " critical coloring class(es) of K_" << r.value - 1 << "\n";
    for (const Coloring& w : r.critical.witnesses) {
        std::cout << "  red edges: " << format_edge_list(w.red_graph()) << "\n";
    }
    std::cout << "threshold minimum " << r.optimal.min << " over " << r.optimal.count << " class(es)\n";

    for (const OracleVerdict& v : r.oracles) {
        std::cout << "  " << to_string(v.source) << " " << to_string(v.kind) << " " << v.value << "\n";
    }

    const ObjectiveContext ctx(r.value - 1, red, blue);
    TabuParams p;
    p.seed = 7;
    const TabuOutcome t = tabu_minimize(ctx, p);
    std::cout << "tabu at N = " << ctx.order() << ": objective " << t.best_value.total << " after " << t.iterations
              << " moves\n";
    return 0;
}
