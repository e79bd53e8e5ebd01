// One PASS/FAIL line per acceptance criterion. Optional arguments select criteria ("3", "T7").
#include <iostream>
#include <set>
#include <string>

#include "molpoly/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace molpoly::acceptance;
    std::set<int> which;
    for (int i = 1; i < argc; ++i)
        for (int k : criteria_for(argv[i])) which.insert(k);
    if (which.empty())
        for (int k = 1; k <= kCriteria; ++k) which.insert(k);

    Suite suite;
    int failed = 0;
    for (int k : which) {
        const auto c = suite.run(k);
        std::cout << format_line(c) << std::endl;
        failed += !c.pass;
    }
    if (argc == 1) std::cout << format_line(suite.appendix_a()) << std::endl;
    std::cout << (which.size() - failed) << "/" << which.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
