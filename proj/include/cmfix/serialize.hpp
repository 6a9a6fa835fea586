#pragma once

#include "cmfix/affine_weyl.hpp"
#include "cmfix/cyclotomic.hpp"
#include "cmfix/fixed_points.hpp"
#include "cmfix/parameters.hpp"
#include "cmfix/partition.hpp"
#include "cmfix/quiver.hpp"
#include "cmfix/wreath.hpp"

#include <json.hpp>

namespace cmfix {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const CyclotomicNumber& x);
Json to_json(const Partition& p);
Json to_json(const Multipartition& mp);
Json to_json(const ResidueVector& d);
Json to_json(const ThetaVector& theta);
Json to_json(const ParamSet& p);
Json to_json(const CyclicCMSurface& s);
Json to_json(const ComponentDescriptor& c, LabelConvention convention);
Json to_json(const CharacterTable& t);
Json to_json(const FiltrationReport& r);
Json to_json(const NestingReport& r);
Json to_json(const RationalRep& rep);
Json to_json(const SimplicityResult& r);

std::string to_string(LabelConvention c);

Rational rational_from_json(const Json& j);
CyclotomicNumber cyclotomic_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Multipartition multipartition_from_json(const Json& j);
ResidueVector residue_vector_from_json(const Json& j);
ParamSet param_set_from_json(const Json& j);
RationalRep rational_rep_from_json(const Json& j);

} // namespace cmfix
