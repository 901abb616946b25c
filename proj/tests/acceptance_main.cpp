// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace dequant::acceptance;
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    bool all = true;
    for (int id : criterion_ids()) {
        auto r = run_criterion(id);
        std::cout << r.line() << "\n";
        if (verbose || !r.pass()) std::cout << r.details();
        all = all && r.pass();
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
