#pragma once

#include <json.hpp>

#include "bianchi/certify.hpp"

namespace bianchi {

// All reports serialize with insertion-ordered keys so that identical
// inputs produce byte-identical dumps. Integers that fit a 64-bit word
// are emitted as JSON numbers, larger values as decimal strings.
using Json = nlohmann::ordered_json;

Json json_int(const Int& x);

Json to_json(const SplitType& st);
Json to_json(const FactoredIdeal& F);
Json to_json(const IndexReport& rep);
Json to_json(const SurjectivityReport& rep);
Json to_json(const FiltrationReport& rep);
Json to_json(const MultiplicativityReport& rep);
Json to_json(const ClosureReport& rep);
Json to_json(const StructureReport& rep);
Json to_json(const AbelianShape& shape);
Json to_json(const AbelianizationData& row);
Json to_json(const Certificate& cert);
Json to_json(const PowerStatusReport& rep);
Json to_json(const Lemma61Report& rep);
Json to_json(const AppendixAReport& rep);

}  // namespace bianchi
