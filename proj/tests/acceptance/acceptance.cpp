#include <cstdlib>
#include <iostream>
#include <string>

#include "hamlab/acceptance.hpp"

int main(int argc, char** argv) {
    hamlab::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--csv" && i + 1 < argc) {
            opts.flow_csv_path = argv[++i];
        } else {
            std::cerr << "usage: hamlab_acceptance [--csv FILE]\n";
            return 2;
        }
    }
    const auto results = hamlab::run_acceptance(opts);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << hamlab::format_criterion(r) << std::flush;
        failed += !r.pass;
    }
    std::cout << "\nsummary: " << results.size() - failed << "/" << results.size() << " criteria pass\n";
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
