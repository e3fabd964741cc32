#pragma once

#include <iosfwd>
#include <string>

#include "textclf/eval.hpp"

namespace textclf {

enum class ReportFormat { Json, Csv };

ReportFormat report_format_from_string(const std::string& s);

// JSON is a faithful field dump. CSV rows are
// fraction,model,task,accuracy,train_seconds,total_seconds with the
// fraction as a percent integer and the accuracy with 4 decimals.
std::string render_report(const EvalReport& report, ReportFormat format);
std::string render_report(const SweepReport& report, ReportFormat format);

void write_report(const EvalReport& report, ReportFormat format, std::ostream& out);
void write_report(const SweepReport& report, ReportFormat format, std::ostream& out);

// Human-readable accuracy/timing table for stderr.
std::string render_summary(const EvalReport& report);
std::string render_summary(const SweepReport& report);

}  // namespace textclf
