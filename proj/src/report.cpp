#include "radgeo/report.hpp"

#include <sstream>

namespace radgeo {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Unverified: return "unverified";
  }
  return "?";
}

std::string printable(const std::string& s) { return s; }
std::string printable(const char* s) { return s; }
std::string printable(bool b) { return b ? "true" : "false"; }

CheckResult& Report::check(const std::string& id, const std::string& anchor, bool ok,
                           const std::string& expected, const std::string& actual, double ms) {
  entries_.push_back({id, anchor, ok ? Status::Pass : Status::Fail, expected, actual, ms});
  return entries_.back();
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool Report::any_failed() const { return count(Status::Fail) > 0; }

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (e.status == s) ++n;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_)
    arr.push_back({{"check_id", e.check_id},
                   {"paper_anchor", e.anchor},
                   {"status", to_string(e.status)},
                   {"expected", e.expected},
                   {"actual", e.actual},
                   {"runtime_ms", static_cast<long long>(e.runtime_ms + 0.5)}});
  return arr;
}

std::string Report::summary() const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    out << "[" << to_string(e.status) << "] " << e.check_id;
    if (e.status != Status::Pass || e.expected != e.actual)
      out << "  expected=" << e.expected << " actual=" << e.actual;
    out << "\n";
  }
  out << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
      << count(Status::Skipped) << " skipped, " << count(Status::Unverified) << " unverified\n";
  return out.str();
}

}  // namespace radgeo
