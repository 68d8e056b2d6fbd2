#include "hhbounds/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hhbounds/errors.hpp"

namespace hh {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string holds_cell(const VerificationRecord& r) {
  switch (r.status) {
    case RecordStatus::pass: return "true";
    case RecordStatus::fail: return "false";
    case RecordStatus::skipped: return "skipped:" + r.reason;
    case RecordStatus::errored: return "error:" + r.reason;
  }
  return "";
}

}  // namespace

void write_csv(const std::vector<VerificationRecord>& records,
               std::ostream& out) {
  out << "function,a,b,m,q,family,variant1,variant2,variant3,variant4,min,"
         "argmin,lhs,slack,holds\n";
  for (const auto& r : records) {
    out << r.function << ',' << format_double(r.a) << ',' << format_double(r.b)
        << ',' << format_double(r.m) << ',' << format_double(r.q) << ','
        << r.family;
    for (const auto& v : r.variants) out << ',' << opt_cell(v);
    out << ',' << opt_cell(r.minimum) << ','
        << (r.argmin ? std::to_string(*r.argmin) : std::string()) << ','
        << opt_cell(r.lhs) << ',' << opt_cell(r.slack) << ',' << holds_cell(r)
        << '\n';
  }
}

void write_json(const std::vector<VerificationRecord>& records,
                std::ostream& out) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    o["function"] = r.function;
    o["a"] = r.a;
    o["b"] = r.b;
    o["m"] = r.m;
    o["q"] = r.q;
    if (r.p) {
      o["p"] = *r.p;
    } else {
      o["p"] = nullptr;
    }
    o["family"] = r.family;
    for (int i = 0; i < 4; ++i) {
      const std::string key = "variant" + std::to_string(i + 1);
      if (r.variants[i]) {
        o[key] = *r.variants[i];
      } else {
        o[key] = nullptr;
      }
    }
    o["min"] = r.minimum ? ordered_json(*r.minimum) : ordered_json(nullptr);
    o["argmin"] = r.argmin ? ordered_json(*r.argmin) : ordered_json(nullptr);
    o["lhs"] = r.lhs ? ordered_json(*r.lhs) : ordered_json(nullptr);
    o["slack"] = r.slack ? ordered_json(*r.slack) : ordered_json(nullptr);
    o["holds"] = r.status == RecordStatus::pass
                     ? ordered_json(true)
                     : (r.status == RecordStatus::fail ? ordered_json(false)
                                                       : ordered_json(nullptr));
    o["status"] = to_string(r.status);
    o["reason"] = r.reason;
    o["certificates"] = r.certificates;
    o["derivative_mode"] = r.derivative_mode;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::string to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream ss;
  write_csv(records, ss);
  return ss.str();
}

std::string to_json(const std::vector<VerificationRecord>& records) {
  std::ostringstream ss;
  write_json(records, ss);
  return ss.str();
}

void emit_report(const std::vector<VerificationRecord>& records,
                 const std::string& format, const std::string& path) {
  if (format != "csv" && format != "json") {
    throw ConfigError("emit_report: format must be 'csv' or 'json', got '" +
                      format + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("emit_report: cannot open '" + path + "' for writing");
  if (format == "csv") {
    write_csv(records, out);
  } else {
    write_json(records, out);
  }
  out.flush();
  if (!out) throw ConfigError("emit_report: write to '" + path + "' failed");
}

}  // namespace hh
