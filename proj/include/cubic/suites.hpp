#pragma once

#include "cubic/report.hpp"

namespace cubic {

/*
 * Self-contained verification suites behind the command line tool.
 * Each one re-derives its expected values from scratch, so a report
 * is meaningful on its own; config carries the prime, the twist, the
 * series order, the sampling seed, and the enumeration level.
 *
 * suite_coperiod intentionally contains one failing check: the
 * branch-value -1 comparison in its displayed form, with the matching
 * twisted variant shown alongside.  Reports do not hide it.
 */
Report suite_cocycle(const ReportConfig& cfg);
Report suite_splitting(const ReportConfig& cfg);
Report suite_gauss(const ReportConfig& cfg);
Report suite_whittaker(const ReportConfig& cfg);
Report suite_coperiod(const ReportConfig& cfg);
Report suite_ktype(const ReportConfig& cfg);
Report suite_arch(const ReportConfig& cfg);
Report suite_all(const ReportConfig& cfg);

}  // namespace cubic
