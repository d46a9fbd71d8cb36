#pragma once

#include <nlohmann/json.hpp>

#include "zred/contfrac.hpp"
#include "zred/forms.hpp"
#include "zred/maps.hpp"
#include "zred/oracle.hpp"
#include "zred/pell.hpp"
#include "zred/reduction.hpp"

namespace zred {

using Json = nlohmann::ordered_json;

/// Decimal string, never a JSON number, so values survive any width.
Json integer_json(const Integer& n);
/// Entries as numbers while they fit in 64 bits, decimal strings beyond.
Json nat_string_json(const NatString& s);
/// ["a","b","c"]
Json form_json(const Form& f);
/// Raw bits, e.g. "10011".
Json bin_string_json(const BinString& b);
Json pell_json(const PellSolution& p);
Json cycle_json(const ReductionCycle& c);
Json invariants_json(const ClassInvariants& inv);
Json necklace_json(const SigmaNecklace& n);
Json report_json(const VerificationReport& r);

}  // namespace zred
