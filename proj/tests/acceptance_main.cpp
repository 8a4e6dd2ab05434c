// Acceptance gate: one PASS/FAIL line per criterion.
//   usage: salemscope_acceptance [id ...]     (no ids = all ten)
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "salemscope/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const int id = std::atoi(argv[i]);
        if (id < 1 || id > 10) {
            std::cerr << "unknown criterion id: " << argv[i] << " (expected 1..10)\n";
            return 2;
        }
        ids.push_back(id);
    }
    int workers = 1;
    if (const char* env = std::getenv("SALEMSCOPE_WORKERS")) workers = std::max(1, std::atoi(env));
    const int failures = salemscope::run_acceptance(ids, workers, std::cout);
    return failures == 0 ? 0 : 1;
}
