#include <cstring>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    domlab::acceptance::Options options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--timings") == 0) {
            options.timings = true;
        } else {
            std::cerr << "usage: acceptance [--timings]\n";
            return 2;
        }
    }
    const auto results = domlab::acceptance::run_all(options);
    return domlab::acceptance::report(results, options, std::cout) ? 0 : 1;
}
