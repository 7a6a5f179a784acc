#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace radgeo {

enum class Status { Pass, Fail, Skipped, Unverified };

std::string to_string(Status s);

struct CheckResult {
  std::string check_id;
  std::string anchor;  // human-readable pointer to the claim being checked
  Status status = Status::Pass;
  std::string expected;
  std::string actual;
  double runtime_ms = 0;
};

class Report {
 public:
  void add(CheckResult r) { entries_.push_back(std::move(r)); }
  /// Adds a pass/fail entry comparing two printable values.
  template <class A, class B>
  CheckResult& expect(const std::string& id, const std::string& anchor, const A& expected,
                      const B& actual, double ms = 0);
  CheckResult& check(const std::string& id, const std::string& anchor, bool ok,
                     const std::string& expected, const std::string& actual, double ms = 0);
  void append(const Report& other);

  const std::vector<CheckResult>& entries() const { return entries_; }
  std::vector<CheckResult>& entries() { return entries_; }
  bool any_failed() const;
  std::size_t count(Status s) const;
  /// 0 when nothing failed, 1 otherwise
  int exit_code() const { return any_failed() ? 1 : 0; }

  nlohmann::json to_json() const;
  std::string summary() const;

 private:
  std::vector<CheckResult> entries_;
};

std::string printable(const std::string& s);
std::string printable(const char* s);
std::string printable(bool b);
template <class T>
std::string printable(const T& v);
template <class A, class B>
std::string printable(const std::pair<A, B>& kv) {
  return printable(kv.first) + ":" + printable(kv.second);
}
template <class T>
std::string printable(const T& v) {
  if constexpr (requires { v.begin(); v.end(); }) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : v) {
      if (!first) out += ",";
      first = false;
      out += printable(x);
    }
    return out + "}";
  } else {
    return std::to_string(v);
  }
}

template <class A, class B>
CheckResult& Report::expect(const std::string& id, const std::string& anchor, const A& expected,
                            const B& actual, double ms) {
  const auto e = printable(expected), a = printable(actual);
  return check(id, anchor, e == a, e, a, ms);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  void reset() { start_ = std::chrono::steady_clock::now(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace radgeo
