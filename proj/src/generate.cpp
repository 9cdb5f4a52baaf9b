#include "disim/generate.hpp"

#include "disim/transforms.hpp"

namespace disim {

Digraph random_perfect_elimination_st(Rng& rng, int size_hint) {
    const int k = std::max(1, size_hint);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: {
            // split of an order graph: the out(v)->in(v) matching is a
            // perfect matching of disimplicial arcs, so any order works
            Digraph order = random_order_graph(rng, k, 2 * k);
            return split(order).first;
        }
        case 1: {
            // staircase: sources s_i joined to sinks t_j for all j <= i;
            // eliminating (s_1, t_1), (s_2, t_2), ... is perfect
            std::vector<Arc> arcs;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j <= i; ++j) arcs.push_back({i, k + j});
            return build_digraph(2 * k, arcs);
        }
        default: {
            // disjoint balanced complete dicliques K_{a,a}
            std::vector<Arc> arcs;
            int base = 0;
            int left = k;
            while (left > 0) {
                int a = std::min(left,
                                 std::uniform_int_distribution<int>(1, 3)(rng));
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < a; ++j)
                        arcs.push_back({base + i, base + a + j});
                base += 2 * a;
                left -= a;
            }
            return build_digraph(base, arcs);
        }
    }
}

}  // namespace disim
