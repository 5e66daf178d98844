#pragma once

#include <string>

#include <json.hpp>

#include "qmac/alcove.hpp"
#include "qmac/charpoly.hpp"
#include "qmac/ospath.hpp"
#include "qmac/qbg.hpp"
#include "qmac/qls.hpp"

namespace qmac {

/// ["1","2"] for s1 s2; [] for e.
nlohmann::ordered_json word_json(const WeylElt& w);
nlohmann::ordered_json weight_json(const Vec<std::int64_t>& v);

/// [{"wt":[..],"q":n,"c":c}, ...] in canonical order.
nlohmann::ordered_json terms_json(const GradedChar& f);
nlohmann::ordered_json path_json(const QLSModel& model, const QLSPath& eta);
nlohmann::ordered_json chain_json(const RootDatum& datum, const LambdaChain& chain);
nlohmann::ordered_json admissible_json(const AlcoveModel& model, const AdmissibleSubset& A);
nlohmann::ordered_json os_json(const OSModel& model, const OSPath& p);
nlohmann::ordered_json qbg_json(const QBGraph& graph);

/// Vertices labelled by reduced words; Bruhat edges solid, quantum dashed.
std::string qbg_dot(const QBGraph& graph);

}  // namespace qmac
