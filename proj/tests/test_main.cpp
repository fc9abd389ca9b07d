#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "testutil.hpp"

#include <cstdlib>
#include <cstring>

namespace gsptest {
unsigned long long g_seed = 20240915ull;
}

int main(int argc, char** argv) {
    // --seed=N for the randomized property tests; fixed default otherwise
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            gsptest::g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
        }
    }
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    ctx.setOption("no-unknown-flags", true);
    return ctx.run();
}
