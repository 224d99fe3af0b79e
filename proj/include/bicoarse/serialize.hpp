#pragma once

// JSON forms shared by the CLI and its tests. Large integers and rationals
// are always strings ("8/5", "-1", "124416").

#include <json.hpp>

#include "bicoarse/cancel.hpp"
#include "bicoarse/hsmap.hpp"
#include "bicoarse/lab.hpp"
#include "bicoarse/moves.hpp"
#include "bicoarse/qmorph.hpp"
#include "bicoarse/zmetric.hpp"

namespace bicoarse {

using Json = nlohmann::ordered_json;

// {"brooks":"ab"} | {"brooksNO":"ab"} | {"rolli":{"1":1,"2":5}} | {"hom":{"a":"-1","b":"8/5"}}
Quasimorphism quasimorphism_from_json(const Json& spec, const Alphabet& alphabet);

// {"w1":"...","w2":"..."}
ReplacementRule replacement_rule_from_json(const Json& rule, const Alphabet& alphabet);
// {"v":"ab","sigma":{"1":2,"2":1}}
Wobble wobble_from_json(const Json& rule, const Alphabet& alphabet);
// {"k":2,"target_rank":1,"table":{"ab":"a","BA":"A"}}
LocalRule local_rule_from_json(const Json& rule, const Alphabet& alphabet);

Json to_json(const CancellationCertificate& cert);
Json to_json(const MoveSequence& seq);
Json to_json(const ProfiniteWitness& w);

}  // namespace bicoarse
