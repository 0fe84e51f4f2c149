#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hydfit {

enum class WorkTag { P4, P8 };
enum class RecoveryTag { CP33, CP66 };

std::string to_string(WorkTag w);
std::string to_string(RecoveryTag r);

/// One observed recovery ratio: after exhausting at `work`, recovering at
/// `recovery` for `duration_s` seconds restores `target_ratio` of the
/// first bout's duration. Ratios are stored as fractions in (0, 1];
/// percent appears only at I/O boundaries.
struct RecoveryEntry {
  WorkTag work;
  RecoveryTag recovery;
  double duration_s;
  double target_ratio;
};

struct RecoveryRatioTable {
  std::vector<RecoveryEntry> entries;

  /// The published group-derived ratios used as the recovery ground truth.
  static RecoveryRatioTable builtin();
};

/// Parses a comma-separated table with header
/// `work,recovery,duration_s,ratio_percent`. Rejects malformed rows,
/// ratios outside (0, 100] and duplicate (work, recovery, duration) keys.
RecoveryRatioTable load_recovery_table(std::istream& in, const std::string& source_name);
RecoveryRatioTable load_recovery_table_file(const std::string& path);

void write_recovery_table(std::ostream& out, const RecoveryRatioTable& table);

}  // namespace hydfit
