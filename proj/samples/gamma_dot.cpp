// Writes the graph Gamma_r for (p, f) = (5, 1), r = 1 in DOT and the socle
// layers of V_{2,r} computed from the representation itself.

#include <iostream>

#include "psgl2/serialize.hpp"

int main() {
    using namespace psgl2;
    const NClass r = NClass::from_integer(5, 1, 1);
    std::cout << to_dot(gamma_graph(r));

    verify_detail::Context ctx({5, 1, Variant::EqualChar});
    const auto B = ctx.rep(2, r);
    const Module M = Module::from_action(B.action);
    std::cout << layers_json(verify_detail::socle_layers(M, verify_detail::candidates(B, 2))).dump(2) << "\n";
}
