// Law-check results: pass, or the first failing equation with its location.
#pragma once

#include <string>

namespace catkit {

struct Report {
  bool ok = true;
  std::string law;
  std::string where;
  std::string detail;

  // Records a failure unless one is already recorded.
  void fail(std::string l, std::string w, std::string d = {}) {
    if (!ok) return;
    ok = false;
    law = std::move(l);
    where = std::move(w);
    detail = std::move(d);
  }
  void merge(const Report& r) {
    if (!r.ok) fail(r.law, r.where, r.detail);
  }
  explicit operator bool() const { return ok; }
  std::string str() const {
    if (ok) return "pass";
    std::string s = "fail: " + law + " at " + where;
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
  }
};

}  // namespace catkit
