#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bisyz/koszul.hpp"
#include "bisyz/textio.hpp"

namespace bisyz {

// The bundled reference ideals. ex2 has two curvilinear base points, ex3 a
// single non-curvilinear LCI point, i3 two fat points that are not LCI.
struct ReferenceIdeals {
  IdealSpec ex2;
  IdealSpec ex3;
  IdealSpec i3;
};

ReferenceIdeals bundled_ideals();
// Same three ideals loaded from <dir>/ex2.ideal, ex3.ideal, i3.ideal.
ReferenceIdeals load_reference_ideals(const std::string& dir);

struct ClaimResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // what was computed, or why the claim failed
  double millis = 0.0;
};

struct VerifyOptions {
  std::string only;  // empty runs everything; otherwise an id or id prefix
  std::optional<std::string> data_dir;
};

// Runs the recorded claims about the bundled ideals: base point loci, local
// invariants, the vanishing-syzygy matrix, Koszul certificates, range
// checks, Hilbert closed forms, slice sweeps, and the saturated-Koszul
// biconditional on all three ideals.
std::vector<ClaimResult> run_reference_claims(const VerifyOptions& options);

bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace bisyz
