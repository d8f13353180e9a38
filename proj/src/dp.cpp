#include "relaynet/dp.hpp"

namespace relaynet {

std::vector<int> backtrack(const DpTables& tables) {
    const int stages = static_cast<int>(tables.value.size());
    std::vector<int> path(stages);
    int state = tables.final_pred;
    path[stages - 1] = state;
    for (int s = stages - 1; s > 0; --s) {
        state = tables.pred[s][state];
        path[s - 1] = state;
    }
    return path;
}

} // namespace relaynet
