#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hhbounds/campaign.hpp"

namespace hh {

/// Canonical shortest-round-trip formatting used by every emitter, so
/// re-running a campaign produces byte-identical reports.
std::string format_double(double v);

/// Header: function,a,b,m,q,family,variant1,...,variant4,min,argmin,lhs,
/// slack,holds. Skipped and errored rows keep their numeric cells empty
/// and carry "skipped:<reason>" / "error:<reason>" in the holds column.
void write_csv(const std::vector<VerificationRecord>& records,
               std::ostream& out);

/// Flat array of objects with a fixed key order; null for absent values.
void write_json(const std::vector<VerificationRecord>& records,
                std::ostream& out);

std::string to_csv(const std::vector<VerificationRecord>& records);
std::string to_json(const std::vector<VerificationRecord>& records);

/// format is "csv" or "json". IO failures surface as ConfigError with the
/// path in the message.
void emit_report(const std::vector<VerificationRecord>& records,
                 const std::string& format, const std::string& path);

}  // namespace hh
