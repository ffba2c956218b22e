#ifndef AIEO_SERIALIZE_HPP
#define AIEO_SERIALIZE_HPP

// JSON documents for models, verdicts and reports.

#include <json.hpp>

#include "aieo/kernel.hpp"
#include "aieo/model.hpp"
#include "aieo/montague.hpp"
#include "aieo/square.hpp"
#include "aieo/syntax.hpp"

namespace aieo {

using Json = nlohmann::ordered_json;

// {"domain": n, "predicates": {name: [[e...]...]}, "constants": {name: e},
//  "functions": {name: {"arity": k, "table": [...]}},
//  "choice": [[[e...], e]...], "default": e}
// Choice lists every nonempty subset as its sorted member list.
Json model_to_json(const ChoiceModel& m);
// Throws Error(InvalidModel) on a malformed or invalid document.
ChoiceModel model_from_json(const Json& j);

Json term_to_json(const Term& t);
Json formula_to_json(const Formula& f);
Json sequent_to_json(const Sequent& s);

Json verdict_to_json(const EntailmentVerdict& v,
                     const std::vector<Formula>& hypotheses,
                     const Formula& goal);
Json check_to_json(const ConditionCheck& c);
Json square_report_to_json(const SquareReport& r);
Json bivalence_to_json(const BivalenceResult& b);
Json proposition_to_json(const PropositionResult& p);
Json remark_to_json(const RemarkReport& r);
Json inadequacy_to_json(const InadequacyReport& r);

}  // namespace aieo

#endif  // AIEO_SERIALIZE_HPP
