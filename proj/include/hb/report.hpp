#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hb {

struct Residual {
    std::string relation;
    std::string residual;  // canonical operator text
    bool central_only = false;
};

struct EstimateRecord {
    std::string label;
    double value_re = 0.0;
    double value_im = 0.0;
    double std_error = 0.0;
    double reference_re = 0.0;
    double reference_im = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;  // on rel_err
};

struct VerificationReport {
    std::string task;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Residual> residuals;
    std::vector<EstimateRecord> estimates;
    std::vector<std::string> notes;
    std::size_t checks = 0;  // number of individual identities tested

    bool pass() const;
    void merge(const VerificationReport& other);
};

nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace hb
