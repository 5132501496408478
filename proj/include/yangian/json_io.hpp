#pragma once

#include <json.hpp>

#include "yangian/cyclicity.hpp"
#include "yangian/lie_data.hpp"
#include "yangian/ratfun.hpp"
#include "yangian/weyl.hpp"

namespace yangian {

using Json = nlohmann::ordered_json;

/// {"family":"G2","cartan":[[2,-1],[-3,2]],"d":[3,1],"numbering":"long-first"}
Json cartan_to_json(const LieDatum& datum);

Json word_to_json(const WeylWord& word);

/// {"param":"a1","param_coeff":"1","re":"0","im":"0","mult":1}; numeric roots carry
/// "param":null and "param_coeff":"0".
Json factor_to_json(const SymbolicPoint& root, int mult);

/// {"family":"E6","components":[{"node":1,"factors":[...]}, ...]}. Components equal to 1
/// are omitted on output and default to 1 on input.
Json tuple_to_json(const RationalTuple& p);
RationalTuple tuple_from_json(const LieDatum& datum, const Json& j);

/// {"values":["3/2",...],"provenance":[{"value":"3/2","witnesses":[...]}]}
Json set_to_json(const CyclicitySet& s, bool with_provenance = true);

Json certificate_to_json(const CyclicityCertificate& cert, const std::vector<KrFactor>& factors);

}  // namespace yangian
