#include <iostream>

#include "acceptance.hpp"

int main() {
    const auto results = dunkl::acceptance::run({}, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += !r.passed;
    std::cout << (results.size() - failed) << " of " << results.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
