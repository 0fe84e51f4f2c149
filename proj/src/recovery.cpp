#include "hydfit/recovery.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hydfit {

std::string to_string(WorkTag w) { return w == WorkTag::P4 ? "P4" : "P8"; }
std::string to_string(RecoveryTag r) { return r == RecoveryTag::CP33 ? "CP33" : "CP66"; }

RecoveryRatioTable RecoveryRatioTable::builtin() {
  RecoveryRatioTable t;
  const WorkTag P4 = WorkTag::P4, P8 = WorkTag::P8;
  const RecoveryTag C33 = RecoveryTag::CP33, C66 = RecoveryTag::CP66;
  t.entries = {
      {P4, C33, 120.0, 55.0 / 100.0},  {P4, C33, 240.0, 61.0 / 100.0},
      {P4, C33, 360.0, 70.5 / 100.0},  {P4, C66, 120.0, 49.0 / 100.0},
      {P4, C66, 240.0, 55.0 / 100.0},  {P4, C66, 360.0, 58.0 / 100.0},
      {P8, C33, 120.0, 42.0 / 100.0},  {P8, C33, 240.0, 52.0 / 100.0},
      {P8, C33, 360.0, 59.5 / 100.0},  {P8, C66, 120.0, 38.0 / 100.0},
      {P8, C66, 240.0, 37.5 / 100.0},  {P8, C66, 360.0, 50.0 / 100.0},
  };
  return t;
}

namespace {

std::runtime_error table_error(const std::string& source, int line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  return std::runtime_error(os.str());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RecoveryRatioTable load_recovery_table(std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw table_error(source_name, 1, "empty table");
  ++line_no;
  if (trim(line) != "work,recovery,duration_s,ratio_percent")
    throw table_error(source_name, line_no,
                      "expected header 'work,recovery,duration_s,ratio_percent'");

  RecoveryRatioTable table;
  std::set<std::tuple<int, int, double>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::string work_s, rec_s, dur_s, ratio_s;
    if (!std::getline(row, work_s, ',') || !std::getline(row, rec_s, ',') ||
        !std::getline(row, dur_s, ',') || !std::getline(row, ratio_s))
      throw table_error(source_name, line_no, "expected 4 comma-separated fields");

    RecoveryEntry e{};
    work_s = trim(work_s);
    rec_s = trim(rec_s);
    if (work_s == "P4")
      e.work = WorkTag::P4;
    else if (work_s == "P8")
      e.work = WorkTag::P8;
    else
      throw table_error(source_name, line_no, "work must be P4 or P8, got '" + work_s + "'");
    if (rec_s == "CP33")
      e.recovery = RecoveryTag::CP33;
    else if (rec_s == "CP66")
      e.recovery = RecoveryTag::CP66;
    else
      throw table_error(source_name, line_no,
                        "recovery must be CP33 or CP66, got '" + rec_s + "'");

    try {
      std::size_t pos = 0;
      e.duration_s = std::stod(trim(dur_s), &pos);
      if (pos != trim(dur_s).size()) throw std::invalid_argument("trailing characters");
      double percent = std::stod(trim(ratio_s), &pos);
      if (pos != trim(ratio_s).size()) throw std::invalid_argument("trailing characters");
      e.target_ratio = percent / 100.0;
    } catch (const std::exception&) {
      throw table_error(source_name, line_no, "malformed number");
    }

    if (!(e.duration_s > 0.0))
      throw table_error(source_name, line_no, "duration_s must be positive");
    if (!(e.target_ratio > 0.0) || e.target_ratio > 1.0)
      throw table_error(source_name, line_no, "ratio_percent must lie in (0, 100]");
    const auto key = std::make_tuple(static_cast<int>(e.work), static_cast<int>(e.recovery),
                                     e.duration_s);
    if (!seen.insert(key).second)
      throw table_error(source_name, line_no, "duplicate (work, recovery, duration) entry");
    table.entries.push_back(e);
  }
  if (table.entries.empty()) throw table_error(source_name, line_no, "no data rows");
  return table;
}

RecoveryRatioTable load_recovery_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open recovery table '" + path + "'");
  return load_recovery_table(in, path);
}

void write_recovery_table(std::ostream& out, const RecoveryRatioTable& table) {
  out << "work,recovery,duration_s,ratio_percent\n";
  for (const auto& e : table.entries) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g,%g", e.duration_s, e.target_ratio * 100.0);
    out << to_string(e.work) << ',' << to_string(e.recovery) << ',' << buf << '\n';
  }
}

}  // namespace hydfit
