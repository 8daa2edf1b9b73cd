#include <numeric>

#include "toric/fan_io.hpp"

namespace toric {

namespace {

// Rays e_1 .. e_n, then e_0 = -(e_1 + ... + e_n). Maximal cones are the
// n-subsets of {e_0, ..., e_n}; cone j omits ray (j + n) mod (n + 1).
Fan projective_space(std::size_t n) {
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.emplace_back(n, Integer(-1));
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t omit = (j + n) % (n + 1);
        std::vector<std::size_t> cone;
        for (std::size_t r = 0; r <= n; ++r)
            if (r != omit) cone.push_back(r);
        cones.push_back(std::move(cone));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

// Rank-2 fan whose rays are listed counter-clockwise; cones join neighbours.
Fan cyclic_surface(std::vector<IntVector> rays) {
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
    return Fan(2, std::move(rays), std::move(cones));
}

Fan hirzebruch(long a) {
    return cyclic_surface({make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, a}), make_vector({0, -1})});
}

}  // namespace

const std::vector<std::string>& named_fan_names() {
    static const std::vector<std::string> names = {"P1", "P2", "P3", "P1xP1", "F1", "F2", "F3", "P112"};
    return names;
}

Fan named_fan(const std::string& name) {
    if (name == "P1") return projective_space(1);
    if (name == "P2") return projective_space(2);
    if (name == "P3") return projective_space(3);
    if (name == "P1xP1")
        return cyclic_surface({make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 0}), make_vector({0, -1})});
    if (name == "F1") return hirzebruch(1);
    if (name == "F2") return hirzebruch(2);
    if (name == "F3") return hirzebruch(3);
    if (name == "P112") return cyclic_surface({make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -2})});
    std::string known;
    for (const auto& n : named_fan_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown named fan '" + name + "' (known: " + known + ")", "fan");
}

}  // namespace toric
