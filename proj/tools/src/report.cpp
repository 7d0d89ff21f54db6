#include "spcover/cli/suite.hpp"

#include <iomanip>
#include <sstream>

namespace spcover::cli {

namespace {

std::string render_params(const nlohmann::json& params) {
    std::string out;
    for (const auto& [key, value] : params.items()) {
        if (!out.empty()) out += ' ';
        out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out.empty() ? "-" : out;
}

}  // namespace

std::string format_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["check"] = r.check;
        o["params"] = r.params;
        o["status"] = std::string(to_string(r.status));
        o["detail"] = r.detail;
        if (r.witness) o["witness"] = *r.witness;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string format_text(const std::vector<VerificationReport>& reports) {
    constexpr int kCheck = 42;
    constexpr int kParams = 44;
    constexpr int kStatus = 12;
    std::ostringstream os;
    os << std::left << std::setw(kCheck) << "CHECK" << std::setw(kParams) << "PARAMS" << std::setw(kStatus)
       << "STATUS" << "DETAIL\n";
    int pass = 0;
    int fail = 0;
    int report = 0;
    for (const auto& r : reports) {
        std::string params = render_params(r.params);
        if (static_cast<int>(params.size()) >= kParams) params = params.substr(0, kParams - 4) + "...";
        os << std::left << std::setw(kCheck) << r.check << std::setw(kParams) << params << std::setw(kStatus)
           << to_string(r.status) << r.detail << "\n";
        switch (r.status) {
        case Status::Pass: ++pass; break;
        case Status::Fail: ++fail; break;
        case Status::ReportOnly: ++report; break;
        }
    }
    os << reports.size() << " records: " << pass << " pass, " << fail << " fail, " << report << " report-only\n";
    return os.str();
}

}  // namespace spcover::cli
