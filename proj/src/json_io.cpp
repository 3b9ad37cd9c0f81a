#include "qmcut/json_io.hpp"

namespace qmcut {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition JSON must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const ValidTuple& t) {
    return {{"lambda", to_json(t.lambda)},
            {"mu", to_json(t.mu)},
            {"nu", to_json(t.nu)},
            {"zeta", to_json(t.zeta)},
            {"coefficient", t.coefficient}};
}

json to_json(const ScoredTuple& t) {
    if (t.factors.size() == 3)
        return to_json(ValidTuple{t.lambda, t.factors[0], t.factors[1], t.factors[2], t.coefficient});
    json factors = json::array();
    for (const auto& f : t.factors)
        factors.push_back(to_json(f));
    return {{"lambda", to_json(t.lambda)}, {"factors", factors}, {"coefficient", t.coefficient}};
}

json to_json(const QmcSolution& s) {
    json argmax = json::array();
    for (const auto& t : s.argmax)
        argmax.push_back(to_json(t));
    return {{"d", s.d},
            {"parts", s.parts},
            {"method", to_string(s.method)},
            {"value", s.value},
            {"argmax", argmax}};
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges())
        edges.push_back(json::array({i, j}));
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

} // namespace qmcut
