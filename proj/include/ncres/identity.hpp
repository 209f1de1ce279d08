#pragma once

#include <string>
#include <vector>

namespace ncres {

// Outcome of one exact identity check.
struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string exact;   // exact value or residual, as text
  std::string detail;  // what was compared
};

// Throws identity_violation naming the first failing check.
void require_all(const std::vector<IdentityCheck>& checks);

}  // namespace ncres
