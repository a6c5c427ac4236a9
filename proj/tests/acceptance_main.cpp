#include <genlambert/acceptance.hpp>

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    using namespace genlambert::acceptance;
    Scale scale = Scale::small;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--full") == 0) scale = Scale::full;
    }
    auto results = run_all(scale);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s criterion %2d [%s]: %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        if (!r.passed) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
