#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shimura/report.hpp"

namespace shimura {

struct SuiteOptions {
    std::string data_dir;           ///< empty: bundled tables
    int depth = 4;                  ///< tessellation word length
    unsigned precision = 30;        ///< matrix embedding digits
    std::optional<std::string> svg; ///< tessellation output path
};

const std::vector<std::string>& suite_names();  ///< including "all"
bool is_suite_name(const std::string& name);
std::string default_data_dir();

/// One suite's checks; internal errors propagate as exceptions.
SuiteResult run_single_suite(const std::string& name, const SuiteOptions& options);

/// "all" expands to every suite in order; inputs carry table and family checksums.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Largest difference between the sorted |trace| lists of all words of length
/// <= max_length in the geometric rotations and in the embedded quaternion generators.
double trace_spectrum_deviation(int n, int max_length, unsigned precision = 30);

} // namespace shimura
