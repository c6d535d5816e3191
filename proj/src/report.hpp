// SPDX-License-Identifier: Apache-2.0
//
// Rendering of analyses, resolutions and verification reports as plain text
// or JSON.  JSON output is deterministic: fixed key order, no floats, and
// timing figures only on request.

#pragma once

#include <memory>
#include <string>

#include "homology.hpp"
#include "verify.hpp"

namespace lathom {

struct ReportOptions {
  bool json = false;
  bool timings = false;  // include per-check millis in JSON reports
};

// Structure diagnostics plus the full homological profile of one poset.
std::string render_analysis(std::shared_ptr<const Poset> p, const Field& f,
                            const ReportOptions& opt);

// Minimal projective resolution, injective coresolution and Bass row of one
// module, selected by kind ("simple" | "projective" | "injective") and label.
std::string render_resolution(std::shared_ptr<const Poset> p, const Field& f,
                              const std::string& kind, const std::string& label,
                              const ReportOptions& opt);

std::string render_verification(const VerificationReport& rep, const std::string& command,
                                const Field& f, const ReportOptions& opt);

}  // namespace lathom
