#pragma once

#include "hsdyn/cantor.hpp"
#include "hsdyn/certificates.hpp"
#include "hsdyn/explorer.hpp"
#include "hsdyn/families.hpp"
#include "hsdyn/interval_union.hpp"
#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/rational.hpp"

#include <json.hpp>

namespace hsdyn {

// Insertion-ordered JSON keeps reports byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "hsdyn 0.1.0";

// Rationals cross the wire as "p/q" strings ("p" when integral); no floating
// point anywhere on the interface.
Json to_json(const Q& q);
Q rational_from_json(const Json& j);

Json to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const Json& j);

Json to_json(const CoverTuple& c);
CoverTuple cover_tuple_from_json(const Json& j);

Json to_json(const PLHomeo& g);
PLHomeo pl_homeo_from_json(const Json& j);

Json to_json(const CantorHomeo& u);
CantorHomeo cantor_homeo_from_json(const Json& j);

Json to_json(const StaircaseCurve& c);
StaircaseCurve staircase_from_json(const Json& j);

Json to_json(const SetFamilyTuple& t);
SetFamilyTuple tuple_from_json(const Json& j);

Json to_json(const CurveFamily& f);
CurveFamily curve_family_from_json(const Json& j);

Json to_json(const TupleFamily& f);
TupleFamily tuple_family_from_json(const Json& j);

Json to_json(const SimplexPoint& p);
SimplexPoint simplex_point_from_json(const Json& j);

Json to_json(const FarnessCertificate& c);

Json to_json(const RCertificate& c);
RCertificate r_certificate_from_json(const Json& j);

Json to_json(const CoverCertificate& c);
CoverCertificate cover_certificate_from_json(const Json& j);

Json to_json(const VerificationReport& r);

Json to_json(const HyperPoint& p);
HyperPoint hyper_point_from_json(const Json& j);

Json to_json(const TransitionGraph& g);
TransitionGraph transition_graph_from_json(const Json& j);

Json to_json(const BottomComponent& c);

Json to_json(const DichotomyResult& r);

}  // namespace hsdyn
