#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ramond/report.hpp"

namespace ramond {

/// Suite names: jacobi, subalg, twist, iota, gamma, omega, identity, verma,
/// cover, all. Each maps onto one invariants block of the library; `bound`
/// is the index bound swept (0 picks the per-suite default).
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Runs the named suite. Check order is deterministic. Independent checks
/// run concurrently when `threads` > 1 (capped by RAMOND_CAS_THREADS when
/// that is set; threads == 0 reads the cap alone, defaulting to 1).
Report run_suite(const std::string& name, int bound = 0, unsigned threads = 0);

}  // namespace ramond
