#include "toric/job.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/perfectoid.hpp"
#include "toric/polytope.hpp"

namespace toric {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<Command, std::string>>& command_table() {
    static const std::vector<std::pair<Command, std::string>> table = {
        {Command::Validate, "validate"},
        {Command::ClassGroup, "classgroup"},
        {Command::Picard, "picard"},
        {Command::Cocycle, "cocycle"},
        {Command::Polytope, "polytope"},
        {Command::Cohomology, "cohomology"},
        {Command::Demazure, "demazure"},
        {Command::BatyrevBorisov, "bb"},
        {Command::PerfPic, "perf-pic"},
        {Command::PerfCohomology, "perf-cohomology"},
        {Command::PerfDemazure, "perf-demazure"},
        {Command::PerfBB, "perf-bb"},
    };
    return table;
}

json to_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json to_json(const Rational& q) {
    if (q.get_den() == 1) return to_json(q.get_num());
    return q.get_str();
}

template <class T>
json to_json(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const GroupElement& e) { return json{{"free", to_json(e.free)}, {"torsion", to_json(e.torsion)}}; }

json to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json dims_json(const std::vector<std::size_t>& dims) {
    json out = json::object();
    for (std::size_t i = 0; i < dims.size(); ++i) out[std::to_string(i)] = dims[i];
    return out;
}

json table_json(const CohomologyTable& t) {
    json out{{"dims", dims_json(t.dims)},
             {"euler_characteristic", t.euler_characteristic},
             {"euler_consistent", t.euler_consistent},
             {"support_region", {{"lo", to_json(t.region.lo)}, {"hi", to_json(t.region.hi)}}},
             {"degrees_scanned", t.degrees_scanned},
             {"sign_patterns", t.sign_patterns}};
    if (t.modp_agrees) out["modp_agrees"] = *t.modp_agrees;
    if (t.graded) {
        json graded = json::object();
        for (std::size_t i = 0; i < t.graded->size(); ++i) {
            json pieces = json::array();
            for (const auto& g : (*t.graded)[i])
                pieces.push_back({{"m", to_json(g.degree)}, {"multiplicity", g.multiplicity}});
            graded[std::to_string(i)] = std::move(pieces);
        }
        out["graded"] = std::move(graded);
    }
    return out;
}

json bundle_json(const PerfectoidBundle& b) {
    json out{{"p", b.p()}, {"level", b.level}, {"class", to_json(b.base_class)}};
    if (b.representative) out["representative"] = to_json(b.representative->coeffs);
    return out;
}

json series_json(const LevelSeries& s, bool with_bases) {
    json out{{"degree", s.degree}, {"dims", s.dims}, {"verdict", to_string(s.verdict)}};
    if (with_bases) {
        json bases = json::array();
        for (const auto& level : s.bases) bases.push_back(to_json(level));
        out["bases"] = std::move(bases);
    }
    return out;
}

Fan load_fan(const std::string& source) {
    if (source.empty()) throw InputError("no fan given", "fan");
    if (source.rfind("named:", 0) == 0) return named_fan(source.substr(6));
    std::ifstream in(source);
    if (!in) throw InputError("cannot read fan file '" + source + "'", "fan");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_fan_file(buffer.str());
}

TDivisor require_divisor(const JobSpec& job, const Fan& fan) {
    if (!job.divisor) throw InputError("this command needs --divisor", "divisor");
    TDivisor d{*job.divisor};
    check_divisor(fan, d);
    return d;
}

unsigned long require_p(const JobSpec& job) {
    if (!job.p) throw InputError("this command needs --p", "p");
    if (!is_prime(*job.p)) throw InputError("p = " + std::to_string(*job.p) + " is not prime", "p");
    return *job.p;
}

int verdict_exit(Verdict v) { return v == Verdict::Fail ? kExitCheckFailed : kExitOk; }

json inputs_json(const JobSpec& job) {
    json in{{"fan", job.fan_source}};
    if (job.divisor) in["divisor"] = to_json(*job.divisor);
    if (job.p) in["p"] = *job.p;
    in["level"] = job.level;
    if (job.degree) in["degree"] = *job.degree;
    in["n_max"] = job.n_max;
    in["graded"] = job.graded;
    in["assume_trivialization"] = job.assume_trivialization;
    if (job.modp_check) in["modp_check"] = *job.modp_check;
    return in;
}

// Fills `results`; returns the exit code.
int dispatch(const JobSpec& job, const Fan& fan, json& results, std::vector<std::string>& diagnostics) {
    switch (job.command) {
        case Command::Validate:
            break;  // handled by the caller

        case Command::ClassGroup: {
            const ClassGroup cl = class_group(fan);
            results["class_group"] = cl.presentation.describe();
            results["free_rank"] = cl.presentation.free_rank();
            results["invariant_factors"] = to_json(cl.presentation.invariant_factors());
            if (job.divisor) results["class"] = to_json(cl.class_of(require_divisor(job, fan)));
            return kExitOk;
        }

        case Command::Picard: {
            const PicardGroup pic = picard_group(fan);
            results["picard_group"] = pic.presentation.describe();
            results["free_rank"] = pic.presentation.free_rank();
            results["invariant_factors"] = to_json(pic.presentation.invariant_factors());
            results["class_group"] = class_group(fan).presentation.describe();
            results["index_in_class_group"] = pic.index_in_cl ? to_json(*pic.index_in_cl) : json(nullptr);
            results["equals_class_group"] = pic.equals_class_group;
            results["generators_in_class_group"] = to_json(pic.generators_in_cl);
            if (job.divisor) {
                const TDivisor d = require_divisor(job, fan);
                if (is_cartier(fan, d).cartier) results["class"] = to_json(pic.class_of(d));
                else diagnostics.push_back("divisor is not Cartier; no Picard class");
            }
            return kExitOk;
        }

        case Command::Cocycle: {
            const TDivisor d = require_divisor(job, fan);
            const CartierData data = is_cartier(fan, d);
            results["cartier"] = data.cartier;
            if (!data.cartier) {
                results["failing_cone"] = *data.failing_cone;
                diagnostics.push_back("divisor is not Cartier on maximal cone " + std::to_string(*data.failing_cone));
                return kExitOk;
            }
            results["witnesses"] = to_json(data.witnesses);
            const MonomialCocycle a = divisor_to_cocycle(fan, d);
            json entries = json::array();
            for (std::size_t i = 0; i < a.num_cones(); ++i)
                for (std::size_t j = i + 1; j < a.num_cones(); ++j)
                    entries.push_back({{"i", i}, {"j", j}, {"m", to_json(a(i, j))}});
            results["cocycle"] = std::move(entries);
            results["valid"] = is_valid_cocycle(fan, a);
            return is_valid_cocycle(fan, a) ? kExitOk : kExitCheckFailed;
        }

        case Command::Polytope: {
            const TDivisor d = require_divisor(job, fan);
            const DivisorPolytope p = divisor_polytope(fan, d);
            results["dim"] = p.dim;
            results["vertices"] = to_json(p.vertices);
            const auto points = lattice_points(p, false);
            const auto interior = lattice_points(p, true);
            results["lattice_points"] = points.size();
            results["interior_lattice_points"] = interior.size();
            if (job.graded) {
                results["points"] = to_json(points);
                results["interior_points"] = to_json(interior);
            }
            if (is_cartier(fan, d).cartier) results["basepoint_free"] = is_basepoint_free(fan, d);
            return kExitOk;
        }

        case Command::Cohomology: {
            const TDivisor d = require_divisor(job, fan);
            CohomologyOptions options;
            options.want_graded = job.graded;
            options.modp_check = job.modp_check;
            const CohomologyTable t = cohomology(fan, d, options);
            results = table_json(t);
            bool ok = t.euler_consistent;
            if (!t.euler_consistent) diagnostics.push_back("Euler characteristic double entry disagrees");
            if (t.modp_agrees && !*t.modp_agrees) {
                diagnostics.push_back("ranks mod " + std::to_string(*job.modp_check) + " differ from rational ranks");
                ok = false;
            }
            return ok ? kExitOk : kExitCheckFailed;
        }

        case Command::Demazure: {
            const DemazureResult r = demazure_vanishing_check(fan, require_divisor(job, fan));
            results["verdict"] = to_string(r.verdict);
            if (r.offending_degree) results["offending_degree"] = *r.offending_degree;
            if (r.table) results["dims"] = dims_json(r.table->dims);
            if (!r.note.empty()) diagnostics.push_back(r.note);
            return verdict_exit(r.verdict);
        }

        case Command::BatyrevBorisov: {
            const BatyrevBorisovResult r = batyrev_borisov_check(fan, require_divisor(job, fan));
            results["verdict"] = to_string(r.verdict);
            results["polytope_dim"] = r.polytope_dim;
            results["interior_lattice_points"] = r.interior_points.size();
            results["predicted_basis"] = to_json(r.predicted_basis);
            if (r.table) results["dims_of_negative"] = dims_json(r.table->dims);
            if (!r.note.empty()) diagnostics.push_back(r.note);
            return verdict_exit(r.verdict);
        }

        case Command::PerfPic: {
            const auto desc = perfectoid_pic(fan, require_p(job), job.assume_trivialization);
            results["picard_group"] = desc.base;
            results["perfectoid_picard_group"] = desc.localized;
            results["free_rank"] = desc.free_rank;
            results["surviving_torsion"] = to_json(desc.surviving_torsion);
            results["killed_torsion"] = to_json(desc.killed_torsion);
            return kExitOk;
        }

        case Command::PerfCohomology:
        case Command::PerfDemazure:
        case Command::PerfBB: {
            const unsigned long p = require_p(job);
            const TDivisor d = require_divisor(job, fan);
            const SpacePtr space = make_perfectoid_space(fan, p, job.assume_trivialization);
            const PerfectoidBundle l = from_divisor(space, d, job.level);
            results["bundle"] = bundle_json(l);
            results["d_L"] = d_L(l);
            if (job.command == Command::PerfCohomology) {
                if (job.degree && *job.degree > fan.rank())
                    throw InputError("degree exceeds the rank", "degree");
                const auto tables = level_tables(l, job.n_max);
                json series = json::array();
                for (std::size_t i = 0; i <= fan.rank(); ++i) {
                    if (job.degree && *job.degree != i) continue;
                    series.push_back(series_json(series_from_tables(tables, i, p), job.graded));
                }
                results["series"] = std::move(series);
                return kExitOk;
            }
            if (job.command == Command::PerfDemazure) {
                const auto r = perfectoid_demazure(l, job.n_max);
                results["verdict"] = to_string(r.verdict);
                json series = json::array();
                for (const auto& s : r.series) series.push_back(series_json(s, false));
                results["series"] = std::move(series);
                if (r.offending_degree) results["offending_degree"] = *r.offending_degree;
                if (!r.note.empty()) diagnostics.push_back(r.note);
                return verdict_exit(r.verdict);
            }
            const auto r = perfectoid_bb(l, job.n_max);
            results["verdict"] = to_string(r.verdict);
            results["d_L"] = r.d_L;
            json sizes = json::array();
            for (const auto& b : r.bases) sizes.push_back(b.size());
            results["basis_sizes"] = std::move(sizes);
            results["embeddings_verified"] = r.embeddings_verified;
            if (job.graded) {
                json bases = json::array();
                for (const auto& b : r.bases) bases.push_back(to_json(b));
                results["bases"] = std::move(bases);
                results["p_divisible_basis"] = to_json(r.p_divisible_basis);
            }
            json series = json::array();
            for (const auto& s : r.series) series.push_back(series_json(s, false));
            results["series_of_inverse"] = std::move(series);
            if (!r.note.empty()) diagnostics.push_back(r.note);
            return verdict_exit(r.verdict);
        }
    }
    return kExitOk;
}

}  // namespace

std::string command_name(Command c) {
    for (const auto& [cmd, name] : command_table())
        if (cmd == c) return name;
    return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
    for (const auto& [cmd, n] : command_table())
        if (n == name) return cmd;
    return std::nullopt;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : command_table()) out.push_back(entry.second);
        return out;
    }();
    return names;
}

IntVector parse_divisor(const std::string& text) {
    IntVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        Integer v;
        if (item.empty() || (item[0] == '+' ? v.set_str(item.substr(1), 10) : v.set_str(item, 10)) != 0)
            throw InputError("divisor coefficient '" + item + "' is not an integer", "divisor");
        out.push_back(v);
    }
    if (out.empty()) throw InputError("empty divisor", "divisor");
    return out;
}

Report run(const JobSpec& job) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    json& doc = report.document;
    doc["schema"] = kReportSchema;
    doc["command"] = command_name(job.command);
    doc["inputs"] = inputs_json(job);
    json results = json::object();

    try {
        const Fan fan = load_fan(job.fan_source);
        doc["inputs"]["rank"] = fan.rank();
        doc["inputs"]["rays"] = to_json(fan.rays());
        json cones = json::array();
        for (const auto& c : fan.max_cones()) cones.push_back(c.rays);
        doc["inputs"]["max_cones"] = std::move(cones);
        doc["ray_labels"] = fan.ray_labels();

        const FanReport check = validate_fan(fan);
        if (job.command == Command::Validate) {
            results["valid"] = check.valid;
            results["smooth"] = check.smooth;
            results["complete"] = check.complete;
            results["simplicial"] = check.simplicial;
            report.diagnostics = check.diagnostics;
            report.exit_code = check.valid ? kExitOk : kExitInputError;
        } else if (!check.valid) {
            report.diagnostics = check.diagnostics;
            report.diagnostics.insert(report.diagnostics.begin(), "fan is not valid");
            report.exit_code = kExitInputError;
        } else {
            report.exit_code = dispatch(job, fan, results, report.diagnostics);
        }
    } catch (const InputError& e) {
        report.diagnostics.push_back(std::string("input error: ") + e.what());
        report.exit_code = kExitInputError;
        results = json::object();
    } catch (const HypothesisError& e) {
        report.diagnostics.push_back(std::string("hypothesis not met: ") + e.what());
        report.exit_code = kExitInputError;
        results = json::object();
    }

    if (!doc.contains("ray_labels")) doc["ray_labels"] = json::array();
    doc["results"] = std::move(results);
    doc["status"] = report.exit_code == kExitOk ? "ok" : report.exit_code == kExitCheckFailed ? "check-failed" : "error";
    doc["diagnostics"] = report.diagnostics;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    doc["timing"] = {{"elapsed_ms", elapsed.count()}};
    return report;
}

}  // namespace toric
