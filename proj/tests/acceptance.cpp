// Runs the property suite and prints one PASS/FAIL line per criterion.

#include "treelie/suite.hpp"

#include <cstdio>

int main()
{
	int failed = 0;
	treelie::run_suite({}, [&](const treelie::CriterionResult& r) {
		std::printf("%s %2d %s (%.2f s): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
		            r.detail.c_str());
		std::fflush(stdout);
		failed += r.pass ? 0 : 1;
	});
	std::printf("%d/%d criteria passed\n", treelie::criterion_count() - failed, treelie::criterion_count());
	return failed == 0 ? 0 : 1;
}
