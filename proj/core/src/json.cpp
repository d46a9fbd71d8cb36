#include "zred/json.hpp"

#include <limits>

namespace zred {

Json integer_json(const Integer& n) {
    return n.str();
}

Json nat_string_json(const NatString& s) {
    Json out = Json::array();
    for (const Integer& q : s) {
        if (q >= 0 && q <= std::numeric_limits<std::uint64_t>::max()) {
            out.push_back(q.convert_to<std::uint64_t>());
        } else {
            out.push_back(q.str());
        }
    }
    return out;
}

Json form_json(const Form& f) {
    return Json::array({f.a.str(), f.b.str(), f.c.str()});
}

Json bin_string_json(const BinString& b) {
    return b.bits();
}

Json pell_json(const PellSolution& p) {
    return Json{{"t", p.t.str()}, {"u", p.u.str()}, {"epsilon", p.epsilon}};
}

Json cycle_json(const ReductionCycle& c) {
    Json pre = Json::array();
    for (const Form& f : c.pre_period) pre.push_back(form_json(f));
    Json cyc = Json::array();
    for (const Form& f : c.cycle) cyc.push_back(form_json(f));
    return Json{{"pre_period", pre}, {"cycle", cyc}};
}

Json invariants_json(const ClassInvariants& inv) {
    return Json{{"weight", inv.weight}, {"length", inv.length}, {"parity", to_string(inv.parity)}};
}

Json necklace_json(const SigmaNecklace& n) {
    if (const auto* plain = std::get_if<Necklace<BinString>>(&n)) {
        return Json{{"kind", "necklace"}, {"canonical", plain->canonical.bits()}};
    }
    const auto& alt = std::get<AlternatingNecklace>(n);
    return Json{{"kind", "alternating"},
                {"canonical", alt.underlying.canonical.bits()},
                {"phase", alt.phase},
                {"colored", to_string(alt)}};
}

Json report_json(const VerificationReport& r) {
    Json failures = Json::array();
    for (const Counterexample& c : r.failures) {
        Json item{{"delta", c.delta.str()}};
        item["form"] = c.form ? form_json(*c.form) : Json(nullptr);
        item["detail"] = c.detail;
        failures.push_back(std::move(item));
    }
    return Json{{"suite", r.theorem_id},
                {"delta_range", Json::array({r.delta_min, r.delta_max})},
                {"cases_checked", r.cases_checked},
                {"passed", r.passed()},
                {"failures", failures}};
}

}  // namespace zred
