#ifndef CLORB_IO_HPP
#define CLORB_IO_HPP

#include <json.hpp>

#include "clorb/cluster.hpp"
#include "clorb/rep.hpp"
#include "clorb/strings.hpp"

namespace clorb {

using Json = nlohmann::json;

Json to_json(const ExchangeMatrix& b);
ExchangeMatrix exchange_matrix_from_json(const Json& j);

Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const LFRep& m);
LFRep rep_from_json(const Json& j, AlgebraPtr algebra);

Json to_json(const DecoratedRep& m);
DecoratedRep decorated_from_json(const Json& j, AlgebraPtr algebra);

Json to_json(const GentleQuiver& q);

StringWord word_from_json(const Json& j);

std::string rat_str(const mpq_class& q);
mpq_class rat_parse(const std::string& s);

}  // namespace clorb

#endif
