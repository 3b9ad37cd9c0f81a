#pragma once

#include <json.hpp>

#include "qmcut/graph.hpp"
#include "qmcut/lr.hpp"
#include "qmcut/partition.hpp"
#include "qmcut/solver.hpp"

namespace qmcut {

// Partitions serialize as plain JSON integer arrays, e.g. [3,2].
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"lambda":[..],"mu":[..],"nu":[..],"zeta":[..],"coefficient":k}
nlohmann::json to_json(const ValidTuple& t);

// Tripartite tuples keep the mu/nu/zeta keys; other arities use "factors".
nlohmann::json to_json(const ScoredTuple& t);

// {"d":…,"parts":[…],"method":"search","value":…,"argmax":[…]}
nlohmann::json to_json(const QmcSolution& s);

nlohmann::json to_json(const Graph& g);

} // namespace qmcut
