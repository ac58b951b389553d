#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qortho/orthogonality.hpp"
#include "qortho/report.hpp"

namespace qortho {

enum class Command { Verify, Spectrum, Table, Limit, ReportAll };

struct RunConfig {
  Command command = Command::Verify;
  QParams params = QParams::make(0.5, 0.5, -0.7);
  std::optional<double> l;
  std::string identity = "all";
  long index_max = 8;
  long dim = 200;
  double tolerance = 1e-8;
  Precision precision = Precision::Double;
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  bool timestamp = true;
  // classical-limit sweep
  double alpha = 1.0;
  double beta = 0.5;
  double x = 0.4;
};

const char* command_name(Command c);
const std::vector<std::string>& identity_names();

struct TableRow {
  std::string family;
  long n = 0;
  double arg = 0.0;
  double value = 0.0;
  std::string method;
};

struct RunResult {
  std::vector<VerificationReport> records;
  std::vector<TableRow> table;
  // spectrum plot data
  std::vector<double> upper, lower, eig_dim, eig_2dim;
  Summary summary;
};

struct Task {
  std::string identity_id;
  long i = 0;
  long j = 0;
  std::function<std::vector<VerificationReport>()> fn;
};

// Runs tasks on up to `jobs` threads; a task that throws yields one failed record
// keyed by the task. Output order is the task order.
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, const QParams& p, int jobs);

RunResult execute(const RunConfig& config);

// 0 all passed, 1 any failure, 2 inconclusive without failures.
int exit_code(const Summary& s);

std::string render_json(const RunConfig& config, const RunResult& result, const std::string& generated_at = "");
std::string render_csv(const RunConfig& config, const RunResult& result);

// Full command line: parses args (without the program name), runs, writes
// output, returns the exit status (64 on usage errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qortho
