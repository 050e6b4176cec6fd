#pragma once

// The acceptance property suite, shared by `treelie suite run` and the
// acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace treelie {

struct CriterionResult
{
	int id = 0;
	std::string name;
	bool pass = false;
	std::string detail;
	double seconds = 0;
};

struct SuiteOptions
{
	std::uint64_t seed = 1;
};

/// Number of criteria; ids run from 1 to criterion_count().
int criterion_count();
CriterionResult run_criterion(int id, const SuiteOptions& opts);
/// Runs all criteria in order; on_result is called after each one.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace treelie
