#pragma once

#include <string>

#include "comlang/verify/checks.hpp"

namespace comlang::verify {

// Collects failed expectations and notes for one check.
class Tally {
 public:
  void need(bool ok, const std::string& what) {
    if (!ok) append(fails_, what);
  }
  template <class T>
  void eq(const std::string& what, const T& got, const T& want) {
    if (!(got == want)) {
      append(fails_, what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    }
  }
  void note(const std::string& what) { append(notes_, what); }

  CheckOutcome done() const {
    if (fails_.empty()) return {true, notes_};
    return {false, notes_.empty() ? fails_ : fails_ + "; " + notes_};
  }

 private:
  static void append(std::string& s, const std::string& what) {
    if (!s.empty()) s += "; ";
    s += what;
  }
  std::string fails_;
  std::string notes_;
};

}  // namespace comlang::verify
