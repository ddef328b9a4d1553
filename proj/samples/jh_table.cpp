// Prints the Jordan-Hoelder constituents of V_{2,r} for every r at q = 5.

#include <cstdio>

#include "psgl2/weights.hpp"

int main() {
    using namespace psgl2;
    for (long long r = 1; r < 5; ++r) {
        const auto ws = jh_multiset(2, {NClass::zero(5, 1), NClass::from_integer(5, 1, r)});
        long long total = 0;
        std::printf("r = %lld:", r);
        for (const auto& w : ws) {
            std::printf(" %s", w.to_string().c_str());
            total += w.dimension();
        }
        std::printf("  (total dim %lld)\n", total);
    }
}
