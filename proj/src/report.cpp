#include "hb/report.hpp"

#include <cmath>

namespace hb {

bool VerificationReport::pass() const
{
    if (!residuals.empty()) return false;
    for (const auto& e : estimates)
        if (!(e.rel_err <= e.tolerance)) return false;
    return true;
}

void VerificationReport::merge(const VerificationReport& other)
{
    residuals.insert(residuals.end(), other.residuals.begin(), other.residuals.end());
    estimates.insert(estimates.end(), other.estimates.begin(), other.estimates.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    checks += other.checks;
}

namespace {

// NaN is not representable in JSON
nlohmann::ordered_json number(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["task"] = r.task;
    j["params"] = r.params;
    j["pass"] = r.pass();
    j["checks"] = r.checks;
    auto& res = j["residuals"] = nlohmann::ordered_json::array();
    for (const auto& x : r.residuals)
        res.push_back({{"relation", x.relation}, {"residual", x.residual}, {"central_only", x.central_only}});
    auto& est = j["estimates"] = nlohmann::ordered_json::array();
    for (const auto& e : r.estimates)
        est.push_back({{"label", e.label},
                       {"value_re", number(e.value_re)},
                       {"value_im", number(e.value_im)},
                       {"stderr", number(e.std_error)},
                       {"reference_re", number(e.reference_re)},
                       {"reference_im", number(e.reference_im)},
                       {"rel_err", number(e.rel_err)},
                       {"tolerance", number(e.tolerance)}});
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace hb
