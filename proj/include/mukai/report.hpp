#pragma once

// Verification reports and their text / JSON renderings.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai::report {

using nlohmann::json;

inline constexpr int schema_version = 1;

enum class Status { Verified = 0, Failed = 1, Undetermined = 2 };

inline std::string to_string(Status s) {
    switch (s) {
    case Status::Verified: return "VERIFIED";
    case Status::Failed: return "FAILED";
    case Status::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

inline constexpr int input_error_exit = 3;

/// Bad user input: unknown genus, unreadable file, out-of-range flag.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Report {
public:
    Report(std::string check, Status status, json expected, json computed, json payload = nullptr)
        : check_(std::move(check)), status_(status), expected_(std::move(expected)), computed_(std::move(computed)),
          payload_(std::move(payload)) {
        if (status_ == Status::Failed && (expected_.is_null() || computed_.is_null()))
            throw std::logic_error("a FAILED report needs expected and computed values");
    }

    /// VERIFIED when expected == computed, FAILED otherwise.
    static Report compare(std::string check, json expected, json computed, json payload = nullptr) {
        const Status s = expected == computed ? Status::Verified : Status::Failed;
        return Report(std::move(check), s, std::move(expected), std::move(computed), std::move(payload));
    }

    const std::string& check() const { return check_; }
    Status status() const { return status_; }
    const json& expected() const { return expected_; }
    const json& computed() const { return computed_; }
    const json& payload() const { return payload_; }
    double seconds() const { return seconds_; }
    void set_seconds(double s) { seconds_ = s; }

    json to_json(bool timing = true) const {
        json j{{"check", check_}, {"status", to_string(status_)}, {"expected", expected_}, {"computed", computed_}};
        if (!payload_.is_null()) j["payload"] = payload_;
        if (timing) j["seconds"] = seconds_;
        return j;
    }

    std::string to_text(bool timing = true) const {
        std::ostringstream os;
        os << std::left << std::setw(13) << to_string(status_) << check_ << "  expected=" << expected_.dump()
           << " computed=" << computed_.dump();
        if (!payload_.is_null()) os << " payload=" << payload_.dump();
        if (timing) os << " (" << std::fixed << std::setprecision(3) << seconds_ << "s)";
        return os.str();
    }

private:
    std::string check_;
    Status status_;
    json expected_;
    json computed_;
    json payload_;
    double seconds_ = 0;
};

/// Runs `f` (returning a Report or a vector of them) and stamps the wall time.
template <class F>
std::vector<Report> timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<Report> out;
    if constexpr (std::is_same_v<decltype(r), Report>) out.push_back(std::move(r));
    else out = std::move(r);
    for (auto& x : out) x.set_seconds(s / static_cast<double>(out.size()));
    return out;
}

inline int exit_code(const std::vector<Report>& reports) {
    int code = 0;
    for (const auto& r : reports) code = std::max(code, static_cast<int>(r.status()));
    return code;
}

inline json document(const std::string& command, const std::vector<Report>& reports, bool timing = true) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(timing));
    return json{{"schema_version", schema_version}, {"command", command}, {"reports", arr}, {"exit_code", exit_code(reports)}};
}

inline std::string render_text(const std::vector<Report>& reports, bool timing = true) {
    std::string out;
    for (const auto& r : reports) out += r.to_text(timing) + "\n";
    return out;
}

} // namespace mukai::report
