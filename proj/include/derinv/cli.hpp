#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "derinv/factor.hpp"

namespace derinv::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,  // well-formed question whose answer is "no"
  kUsage = 2,
  kCapExceeded = 3,
  kInternal = 4,
};

enum class Format { Json, Csv, Md };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& t, Format f);

/// rho-small, rho-six, pp2, np-scan. Throws InvalidArgument otherwise.
Table make_table(std::string_view which);
std::vector<std::string> table_names();

/// Decimal string for big values, JSON number when it fits in 64 bits.
nlohmann::json factorization_json(const Factorization& f);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace derinv::cli
