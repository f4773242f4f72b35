#pragma once

#include <string>
#include <vector>

#include "riroch/diffop.hpp"

namespace riroch {

/// One comparison between an engine result and a published polynomial.
struct ReportRow {
    std::string label;
    std::string variety;
    std::string mode; // "default" | "paper-compat"
    TwistPoly computed;
    std::string printed;   // verbatim published form
    TwistPoly printed_poly;
    bool match;
};

/// Recomputes the built-in example operators (the Atiyah operator D_u on
/// the curve CI(3;2,2) and the surfaces CI(4;2,3), CI(4;2,2)) in both
/// modes and compares against the published index polynomials.
std::vector<ReportRow> paper_report_rows();

/// Explanatory notes attached to the report.
std::vector<std::string> paper_report_notes();

/// Plain-text table with one MATCH/MISMATCH verdict per row.
std::string render_paper_report();

} // namespace riroch
