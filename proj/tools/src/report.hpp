#pragma once

#include <json.hpp>

#include <chrono>
#include <iosfwd>
#include <string>
#include <utility>

namespace chamberlab::cli {

/// Collects named checks for one command run. A check passes iff its
/// expected and actual JSON values are equal.
class Report {
public:
    Report(std::string command, nlohmann::json parameters, bool timings);

    void check(const std::string& name, const std::string& anchor, nlohmann::json expected, nlohmann::json actual,
               nlohmann::json detail = nullptr);

    /// Runs fn() -> {expected, actual} and records it, with its wall time
    /// when timings are on.
    template <typename F>
    void timed(const std::string& name, const std::string& anchor, F&& fn)
    {
        const auto t0 = std::chrono::steady_clock::now();
        auto [expected, actual] = fn();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        check(name, anchor, std::move(expected), std::move(actual));
        if (timings_) checks_.back()["seconds"] = secs;
    }

    void skip(const std::string& name, const std::string& reason);
    /// A result the run could not settle (search budget exhausted).
    void inconclusive(const std::string& name, nlohmann::json detail);

    nlohmann::json& section(const std::string& key) { return extra_[key]; }

    bool all_pass() const { return failures_ == 0; }
    bool has_inconclusive() const { return !inconclusive_.empty(); }

    nlohmann::json to_json() const;
    void print_human(std::ostream& os) const;

private:
    std::string command_;
    nlohmann::json parameters_;
    bool timings_;
    nlohmann::json checks_ = nlohmann::json::array();
    nlohmann::json skipped_ = nlohmann::json::array();
    nlohmann::json inconclusive_ = nlohmann::json::array();
    nlohmann::json extra_ = nlohmann::json::object();
    std::size_t failures_ = 0;
};

} // namespace chamberlab::cli
