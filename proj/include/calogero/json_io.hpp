#pragma once

#include "calogero/coxgroup.hpp"
#include "calogero/glc.hpp"
#include "calogero/nupoly.hpp"
#include "calogero/rootsys.hpp"
#include "calogero/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace calogero {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j, int field);

/// {"k", "field", "terms": [{"exp": [...], "coef": "p/q"}]}
json nupoly_json(const NuPoly& p);
NuPoly nupoly_from_json(const json& j);

json failure_json(const Failure& f);
Failure failure_from_json(const json& j);

/// Elapsed time is left out unless `timing` is set, so the default
/// document depends only on the input.
json report_json(const Report& r, bool timing = false);
Report report_from_json(const json& j);

struct CountDocument {
    std::string type;
    std::size_t order = 0;
    std::size_t num_classes = 0;
    std::size_t q_by_classes = 0;
    std::size_t q_by_glc = 0;
    bool agree = false;
    friend bool operator==(const CountDocument&, const CountDocument&) = default;
};

json count_json(const CountDocument& c);
CountDocument count_from_json(const json& j);

json root_system_json(const RootSystem& rs);
json group_json(const RootSystem& rs, const Group& group, bool with_elements);
json classes_json(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes);

/// Rows, rank and the solved table of the ground level conditions.
json glc_json(const RootSystem& rs, const Group& group, const std::vector<ConjugacyClass>& classes,
              const GLCSystem& system, const SupertraceSolution& solution, const std::vector<PointRank>& points);

}  // namespace calogero
