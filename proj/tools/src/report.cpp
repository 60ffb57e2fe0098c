#include "report.hpp"

#include <iomanip>
#include <ostream>

namespace chamberlab::cli {

namespace {

std::string cell(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

} // namespace

Report::Report(std::string command, nlohmann::json parameters, bool timings)
    : command_(std::move(command)), parameters_(std::move(parameters)), timings_(timings)
{
}

void Report::check(const std::string& name, const std::string& anchor, nlohmann::json expected, nlohmann::json actual, nlohmann::json detail)
{
    const bool pass = expected == actual;
    if (!pass) ++failures_;
    nlohmann::json c{{"check", name}, {"anchor", anchor}, {"expected", std::move(expected)}, {"actual", std::move(actual)}, {"pass", pass}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
}

void Report::skip(const std::string& name, const std::string& reason) { skipped_.push_back({{"check", name}, {"reason", reason}}); }

void Report::inconclusive(const std::string& name, nlohmann::json detail)
{
    inconclusive_.push_back({{"check", name}, {"detail", std::move(detail)}});
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j{{"tool", "chamberlab"},
                     {"version", CHAMBERLAB_VERSION},
                     {"command", command_},
                     {"parameters", parameters_},
                     {"checks", checks_},
                     {"skipped", skipped_},
                     {"inconclusive", inconclusive_},
                     {"all_pass", all_pass()}};
    for (auto it = extra_.begin(); it != extra_.end(); ++it) j[it.key()] = it.value();
    return j;
}

void Report::print_human(std::ostream& os) const
{
    os << "chamberlab " << CHAMBERLAB_VERSION << " " << command_ << " " << parameters_.dump() << "\n";
    std::size_t width = 5;
    for (const auto& c : checks_) width = std::max(width, c["check"].get<std::string>().size());
    for (const auto& c : checks_) {
        os << (c["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c["check"].get<std::string>()
           << "  expected " << cell(c["expected"]) << ", actual " << cell(c["actual"]);
        if (c.contains("seconds")) os << "  (" << std::fixed << std::setprecision(3) << c["seconds"].get<double>() << " s)";
        os << "\n";
    }
    for (const auto& s : skipped_) os << "  skip  " << s["check"].get<std::string>() << ": " << s["reason"].get<std::string>() << "\n";
    for (const auto& s : inconclusive_) os << "  open  " << s["check"].get<std::string>() << ": " << s["detail"].dump() << "\n";
    for (auto it = extra_.begin(); it != extra_.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << "\n";
    os << (all_pass() ? "all checks passed" : std::to_string(failures_) + " checks failed") << (has_inconclusive() ? " (some results inconclusive)" : "")
       << "\n";
}

} // namespace chamberlab::cli
