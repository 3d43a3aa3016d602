#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dihedra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_enumerate(std::int64_t p, const std::string& format, std::ostream& out);
int cmd_classify(std::int64_t p, const std::string& set, const std::string& with,
                 std::ostream& out);
int cmd_spectrum(std::int64_t n, const std::string& set, const std::string& format,
                 std::ostream& out);
int cmd_count(std::int64_t p, bool verify, const std::string& format, std::ostream& out);
/// Compares a formula count against an enumerated one; kExitVerification on
/// mismatch.
int report_count_check(std::int64_t p, std::int64_t formula, std::int64_t enumerated,
                       std::ostream& out);

struct VerifyOptions {
  std::int64_t p_max = 13;
  std::int64_t oracle_ceiling = 13;
  std::int64_t formula_ceiling = 31;
};
int cmd_verify(const VerifyOptions& options, std::ostream& out);

int cmd_export(std::int64_t n, const std::string& set, const std::string& format,
               std::ostream& out);

}  // namespace dihedra::cli
