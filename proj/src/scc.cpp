#include "akc/scc.hpp"

#include <algorithm>
#include <limits>

namespace akc {

SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = successors.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    // (vertex, next successor position)
    std::vector<std::pair<std::size_t, std::size_t>> call;

    SccDecomposition out;
    out.component.assign(n, unvisited);
    std::size_t next_index = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < successors[v].size()) {
                const std::size_t w = successors[v][pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component[w] = out.count;
                } while (w != done);
                ++out.count;
            }
        }
    }
    return out;
}

} // namespace akc
