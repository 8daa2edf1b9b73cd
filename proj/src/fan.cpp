#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

namespace {

std::string format_set(const std::vector<std::size_t>& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

// Positions of `subset` inside the sorted list `rays`.
poly::IndexSet positions_in(const std::vector<std::size_t>& rays, const std::vector<std::size_t>& subset) {
    poly::IndexSet pos;
    for (auto r : subset)
        pos.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    return pos;
}

struct ConeData {
    poly::ConeGeometry geometry;
    std::vector<poly::IndexSet> faces;  // as positions
};

ConeData analyse(const Fan& fan, const Cone& c) {
    ConeData d;
    d.geometry = poly::cone_geometry(fan.generators(c), fan.rank());
    d.faces = poly::cone_faces(d.geometry, c.rays.size());
    return d;
}

bool is_face(const ConeData& d, const poly::IndexSet& positions) {
    return std::binary_search(d.faces.begin(), d.faces.end(), positions);
}

// Empty optional when c1 and c2 meet in a common face; otherwise the reason.
std::optional<std::string> intersection_defect(const Fan& fan, const Cone& c1, const ConeData& d1,
                                               const Cone& c2, const ConeData& d2) {
    std::vector<std::size_t> common;
    std::set_intersection(c1.rays.begin(), c1.rays.end(), c2.rays.begin(), c2.rays.end(),
                          std::back_inserter(common));
    if (!is_face(d1, positions_in(c1.rays, common)) || !is_face(d2, positions_in(c2.rays, common)))
        return "shared rays " + format_set(common) + " do not span a common face";

    std::vector<IntVector> ineq = d1.geometry.facet_normals;
    ineq.insert(ineq.end(), d2.geometry.facet_normals.begin(), d2.geometry.facet_normals.end());
    std::vector<IntVector> eq = d1.geometry.equations;
    eq.insert(eq.end(), d2.geometry.equations.begin(), d2.geometry.equations.end());
    const auto meet_rays = poly::extreme_rays(ineq, eq, fan.rank());
    const auto shared = poly::cone_geometry(fan.generators(fan.make_cone(common)), fan.rank());
    for (const auto& v : meet_rays)
        if (!shared.contains(v)) {
            std::ostringstream os;
            os << "intersection contains " << v << " outside the common face " << format_set(common);
            return os.str();
        }
    return std::nullopt;
}

}  // namespace

bool Cone::contains_ray(std::size_t r) const { return std::binary_search(rays.begin(), rays.end(), r); }

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : rank_(rank) {
    if (rank == 0) throw InputError("lattice rank must be positive", "rank");
    if (rank > kMaxRank)
        throw InputError("lattice rank " + std::to_string(rank) + " exceeds the supported maximum of " +
                             std::to_string(kMaxRank),
                         "rank");
    if (rays.empty()) throw InputError("a fan needs at least one ray", "rays");
    if (max_cones.empty()) throw InputError("a fan needs at least one maximal cone", "max_cones");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != rank)
            throw InputError("ray " + std::to_string(i) + " has length " + std::to_string(rays[i].size()) +
                                 ", expected " + std::to_string(rank),
                             "rays");
        if (is_zero(rays[i])) throw InputError("zero ray at index " + std::to_string(i), "rays");
        rays_.push_back(poly::primitive(std::move(rays[i])));
    }
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        for (auto r : max_cones[c])
            if (r >= rays_.size())
                throw InputError("cone " + std::to_string(c) + " references ray " + std::to_string(r) +
                                     " but only " + std::to_string(rays_.size()) + " rays exist",
                                 "max_cones");
        cones_.push_back(make_cone(std::move(max_cones[c])));
    }
}

std::vector<IntVector> Fan::generators(const Cone& c) const {
    std::vector<IntVector> g;
    g.reserve(c.rays.size());
    for (auto r : c.rays) g.push_back(rays_.at(r));
    return g;
}

Cone Fan::make_cone(std::vector<std::size_t> ray_indices) const {
    std::sort(ray_indices.begin(), ray_indices.end());
    ray_indices.erase(std::unique(ray_indices.begin(), ray_indices.end()), ray_indices.end());
    Cone c{std::move(ray_indices), 0};
    if (!c.rays.empty()) c.dim = toric::rank(IntMatrix::from_rows(generators(c), rank_));
    return c;
}

std::vector<std::string> Fan::ray_labels() const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        std::ostringstream os;
        os << 'D' << i << ' ' << rays_[i];
        labels.push_back(os.str());
    }
    return labels;
}

FanReport validate_fan(const Fan& fan) {
    FanReport report;
    auto& diag = report.diagnostics;

    for (std::size_t i = 0; i < fan.num_rays(); ++i)
        for (std::size_t j = i + 1; j < fan.num_rays(); ++j)
            if (fan.ray(i) == fan.ray(j))
                diag.push_back("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    std::vector<bool> used(fan.num_rays(), false);
    for (const auto& c : fan.max_cones())
        for (auto r : c.rays) used[r] = true;
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
        if (!used[r]) diag.push_back("ray " + std::to_string(r) + " lies in no maximal cone");

    std::vector<ConeData> data;
    bool convex = true;
    for (std::size_t i = 0; i < fan.num_max_cones(); ++i) {
        const Cone& c = fan.max_cone(i);
        data.push_back(analyse(fan, c));
        if (!data.back().geometry.pointed) {
            diag.push_back("cone " + std::to_string(i) + " " + format_set(c.rays) + " is not strongly convex");
            convex = false;
            continue;
        }
        for (std::size_t p = 0; p < c.rays.size(); ++p)
            if (!is_face(data.back(), {p}))
                diag.push_back("ray " + std::to_string(c.rays[p]) + " is not an extreme ray of cone " +
                               std::to_string(i));
    }

    for (std::size_t i = 0; i < fan.num_max_cones(); ++i)
        for (std::size_t j = 0; j < fan.num_max_cones(); ++j) {
            if (i == j) continue;
            const auto& a = fan.max_cone(i).rays;
            const auto& b = fan.max_cone(j).rays;
            if (a == b && i < j)
                diag.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            else if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                diag.push_back("cone " + std::to_string(i) + " is contained in cone " + std::to_string(j) +
                               " and is not maximal");
        }

    if (convex)
        for (std::size_t i = 0; i < fan.num_max_cones(); ++i)
            for (std::size_t j = i + 1; j < fan.num_max_cones(); ++j)
                if (auto defect = intersection_defect(fan, fan.max_cone(i), data[i], fan.max_cone(j), data[j]))
                    diag.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) +
                                   " do not meet in a common face: " + *defect);

    report.valid = diag.empty();
    if (!report.valid) return report;

    report.simplicial = is_simplicial(fan);
    report.smooth = is_smooth(fan);
    std::vector<std::string> completeness;
    report.complete = is_complete(fan, completeness);
    for (auto& d : completeness) diag.push_back("not complete: " + d);
    if (!report.simplicial) diag.push_back("fan is not simplicial");
    return report;
}

bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones()) {
        if (c.rays.empty()) continue;
        const SmithForm f = smith_normal_form(IntMatrix::from_rows(fan.generators(c), fan.rank()));
        if (f.rank != c.rays.size()) return false;
        for (const auto& d : f.diagonal())
            if (d != 1) return false;
    }
    return true;
}

bool is_simplicial(const Fan& fan) {
    return std::all_of(fan.max_cones().begin(), fan.max_cones().end(),
                       [](const Cone& c) { return c.dim == c.rays.size(); });
}

bool is_complete(const Fan& fan, std::vector<std::string>& diagnostics) {
    for (std::size_t i = 0; i < fan.num_max_cones(); ++i)
        if (fan.max_cone(i).dim != fan.rank()) {
            diagnostics.push_back("maximal cone " + std::to_string(i) + " has dimension " +
                                  std::to_string(fan.max_cone(i).dim) + " < " + std::to_string(fan.rank()));
            return false;
        }

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_owners;
    for (std::size_t i = 0; i < fan.num_max_cones(); ++i) {
        const Cone& c = fan.max_cone(i);
        const auto g = poly::cone_geometry(fan.generators(c), fan.rank());
        for (const auto& facet : g.facet_generators) {
            std::vector<std::size_t> rays;
            for (auto p : facet) rays.push_back(c.rays[p]);
            facet_owners[rays].push_back(i);
        }
    }

    std::vector<std::size_t> parent(fan.num_max_cones());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [facet, owners] : facet_owners) {
        if (owners.size() != 2) {
            diagnostics.push_back("facet " + format_set(facet) + " lies in " + std::to_string(owners.size()) +
                                  " maximal cone(s)");
            return false;
        }
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t i = 1; i < fan.num_max_cones(); ++i)
        if (find(i) != find(0)) {
            diagnostics.push_back("maximal cones do not form a connected adjacency graph");
            return false;
        }
    return true;
}

bool is_complete(const Fan& fan) {
    std::vector<std::string> ignored;
    return is_complete(fan, ignored);
}

std::vector<Cone> faces(const Fan& fan, const Cone& c) {
    const ConeData d = analyse(fan, c);
    std::vector<Cone> out;
    for (const auto& f : d.faces) {
        std::vector<std::size_t> rays;
        for (auto p : f) rays.push_back(c.rays[p]);
        out.push_back(fan.make_cone(std::move(rays)));
    }
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.rays < b.rays;
    });
    return out;
}

Cone cone_intersection(const Fan& fan, const Cone& c1, const Cone& c2) {
    const ConeData d1 = analyse(fan, c1);
    const ConeData d2 = analyse(fan, c2);
    if (auto defect = intersection_defect(fan, c1, d1, c2, d2))
        throw HypothesisError("cones " + format_set(c1.rays) + " and " + format_set(c2.rays) +
                              " do not meet in a common face: " + *defect);
    std::vector<std::size_t> common;
    std::set_intersection(c1.rays.begin(), c1.rays.end(), c2.rays.begin(), c2.rays.end(),
                          std::back_inserter(common));
    return fan.make_cone(std::move(common));
}

}  // namespace toric
