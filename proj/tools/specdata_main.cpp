// Command-line surface for the spectral-data toolkit: spectra of commuting
// tuples, Chow/Hitchin coordinate conversions, Cayley fibers, multisymmetric
// rewriting, one-parameter families, and the batch verification harness.

#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "CLI11.hpp"
#include "specdata/chow.hpp"
#include "specdata/expr.hpp"
#include "specdata/families.hpp"
#include "specdata/field.hpp"
#include "specdata/gen.hpp"
#include "specdata/io.hpp"
#include "specdata/multisym.hpp"
#include "specdata/tuples.hpp"
#include "specdata/verify.hpp"

namespace {

using namespace specdata;

template <class F>
int with_field(const FieldDesc& field, F&& f) {
    if (field.rational) return f(std::type_identity<Rational>{});
    return f(std::type_identity<Fp>{});
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const SpecdataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::check_failed);
    }
}

FieldDesc field_of_file(const json& j, const std::string& flag_value) {
    if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
    return FieldDesc::parse(flag_value);
}

void emit(const std::string& out_path, const json& payload, const std::string& what) {
    if (out_path.empty()) return;
    write_text_file(out_path, payload.dump(2) + "\n");
    std::cout << what << " written to " << out_path << "\n";
}

template <class K>
std::string render_coords(const std::vector<SymTensor<K>>& tensors, const std::string& name) {
    std::string out;
    for (std::size_t i = 0; i < tensors.size(); ++i)
        out += "  " + name + "_" + std::to_string(i + 1) + " = " + tensors[i].to_string() + "\n";
    return out;
}

int cmd_spectral_datum(const std::string& in, const std::string& out) {
    const json j = parse_json_file(in);
    const FieldDesc field = field_of_file(j, "Q");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto tuple = tuple_from_json<K>(j, field);
        const ZeroCycle<K> datum = spectral_datum(tuple);
        std::cout << "field " << field.to_string() << ", n = " << tuple.n << ", d = " << tuple.d << "\n";
        std::cout << "spectral datum: " << datum.to_string() << "\n";
        emit(out, cycle_to_json(datum, field), "cycle");
        return 0;
    });
}

int cmd_chow_embed(const std::string& in, const std::string& field_flag, const std::string& out) {
    const json j = parse_json_file(in);
    const FieldDesc field = field_of_file(j, field_flag);
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto cycle = cycle_from_json<K>(j, field);
        const auto coords = iota(cycle);
        std::cout << "cycle: " << cycle.to_string() << "\n";
        std::cout << "chow coordinates:\n" << render_coords(coords.tensors, "a");
        emit(out, coords_to_json(coords, field, "chow"), "coordinates");
        return 0;
    });
}

int cmd_newton_convert(const std::string& in, const std::string& direction, bool signed_convention,
                       const std::string& out) {
    const json j = parse_json_file(in);
    const FieldDesc field = field_of_file(j, "Q");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        if (direction == "p2e") {
            const auto b = coords_from_json<K, HitchinCoords<K>>(j, field);
            auto a = newton_p_to_e(b);
            if (signed_convention) a = apply_sign_convention(a);
            std::cout << "chow coordinates (" << (signed_convention ? "signed" : "unsigned") << " convention):\n"
                      << render_coords(a.tensors, "a");
            emit(out, coords_to_json(a, field, "chow"), "coordinates");
        } else if (direction == "e2p") {
            auto a = coords_from_json<K, ChowCoords<K>>(j, field);
            if (signed_convention) a = apply_sign_convention(a);
            const auto b = newton_e_to_p(a);
            std::cout << "hitchin coordinates:\n" << render_coords(b.tensors, "b");
            emit(out, coords_to_json(b, field, "hitchin"), "coordinates");
        } else {
            throw BadInputError("--direction must be p2e or e2p");
        }
        return 0;
    });
}

int cmd_cayley_check(const std::string& tuple_path, const std::string& cycle_path, int trials,
                     std::uint64_t seed) {
    const json jt = parse_json_file(tuple_path);
    const FieldDesc field = field_of_file(jt, "Q");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto tuple = tuple_from_json<K>(jt, field);
        const auto cycle = cycle_from_json<K>(parse_json_file(cycle_path), field);
        if (cycle.n() != tuple.n) throw BadInputError("cycle length does not match tuple size");
        const auto result = cayley_hamilton_check(tuple, cycle, trials, seed);
        if (result.ok) {
            std::cout << "cayley-hamilton: all " << (tuple.d + trials)
                      << " forms annihilate (d coordinate forms + " << trials << " random)\n";
            return 0;
        }
        std::string form;
        for (std::size_t k = 0; k < result.failing_form.size(); ++k) {
            if (k) form += ", ";
            form += to_string_adl(result.failing_form[k]);
        }
        std::cout << "cayley-hamilton: FAILED at form (" << form << ")\n";
        return static_cast<int>(ExitCode::check_failed);
    });
}

int cmd_cayley_fiber(const std::string& in, const std::string& field_flag) {
    const json j = parse_json_file(in);
    const FieldDesc field = field_of_file(j, field_flag);
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto cycle = cycle_from_json<K>(j, field);
        const auto fiber = cayley_fiber(cycle);
        std::cout << "point | mult | local length\n";
        for (const auto& e : fiber.entries) {
            std::string pt;
            for (std::size_t k = 0; k < e.point.size(); ++k) {
                if (k) pt += ", ";
                pt += to_string_adl(e.point[k]);
            }
            std::cout << "(" << pt << ") | " << e.mult << " | " << e.local_length << "\n";
        }
        std::cout << "total length " << fiber.total_length << " over a cycle of length " << cycle.n()
                  << (fiber.jumping ? " -> jumping (cover is not flat here)" : " -> no jump") << "\n";
        return 0;
    });
}

int cmd_rewrite_invariant(const std::string& expr, int n, int d, int max_degree,
                          const std::string& field_flag) {
    const FieldDesc field = FieldDesc::parse(field_flag);
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const MPoly<K> poly = parse_point_polynomial<K>(expr, n, d, field);
        const MultiSymInvariant<K> p(n, d, poly);
        const auto q = rewrite_in_chow(p, max_degree);
        std::cout << "Q = " << q.to_string() << "\n";
        std::cout << "certificate verified: Q composed with the embedding minus P is the zero polynomial\n";
        return 0;
    });
}

int cmd_family_coords(const std::string& in, const std::string& out) {
    const json j = parse_json_file(in);
    const FieldDesc field = field_of_file(j, "Q");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto family = family_from_json<K>(j, field);
        const auto coords = family_spectral_coords(family);
        std::cout << "family over k[s], n = " << family.n << ", d = " << family.d << "\n";
        std::cout << "chow coordinates a_i(s):\n" << render_coords(coords.tensors, "a");
        if (!out.empty()) {
            json tensors = json::array();
            for (const auto& t : coords.tensors) {
                json terms = json::array();
                for (const auto& [e, v] : t.terms()) terms.push_back(json::array({json(e), json(v.to_string())}));
                tensors.push_back(json{{"dim", t.dim()}, {"degree", t.degree()}, {"terms", terms}});
            }
            emit(out, json{{"field", field_to_json(field)}, {"n", family.n}, {"d", family.d}, {"tensors", tensors}},
                 "coordinates");
        }
        return 0;
    });
}

int cmd_ruled_example(const std::string& a1_str, const std::string& a2_str, const std::string& samples,
                      const std::string& field_flag, const std::string& out) {
    const FieldDesc field = FieldDesc::parse(field_flag);
    if (!field.rational && field.p == 2) throw BadInputError("ruled example needs characteristic 0 or p > 2");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const UniPoly<K> a1 = parse_unipoly<K>(a1_str, field);
        const UniPoly<K> a2 = parse_unipoly<K>(a2_str, field);
        const auto ex = ruled_example(a1, a2);
        std::cout << "ruled example: a1 = " << a1.to_string() << ", a2 = " << a2.to_string() << "\n";
        std::cout << "discriminant a1^2 - 4*a2 = " << ex.discriminant.to_string() << "\n";
        std::cout << "generically multiplicity-free: yes (discriminant not identically zero)\n";
        std::cout << "presentation: 3 generators (1, t1, t2), module relation (a1^2-4*a2)*t2 = 0\n";
        std::cout << "free rank: " << ex.report.free_rank << "\n";
        if (ex.report.torsion_free()) {
            std::cout << "torsion: none\n";
        } else {
            std::cout << "torsion invariant factors:";
            for (const auto& f : ex.report.invariant_factors) std::cout << " " << f.to_string();
            std::cout << "\n";
        }
        std::cout << "flat quotient: k[s][t] / (t^2 + (" << a1.to_string() << ")*t + (" << a2.to_string() << "))\n";
        std::cout << "fiber lengths:\n";
        json profile = json::array();
        std::stringstream ss(samples);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const K c = parse_scalar<K>(item, field);
            const int len = ex.fiber_length(c);
            std::cout << "  s = " << item << ": " << len << (len > 2 ? " (jump)" : "") << "\n";
            profile.push_back(json{{"s", item}, {"length", len}});
        }
        if (!out.empty()) {
            json factors = json::array();
            for (const auto& f : ex.report.invariant_factors) factors.push_back(f.to_string());
            emit(out,
                 json{{"field", field_to_json(field)},
                      {"a1", a1.to_string()},
                      {"a2", a2.to_string()},
                      {"discriminant", ex.discriminant.to_string()},
                      {"free_rank", ex.report.free_rank},
                      {"invariant_factors", factors},
                      {"fiber_profile", profile}},
                 "report");
        }
        return 0;
    });
}

int cmd_verify(const VerifyConfig& cfg, const std::string& out) {
    const VerifyOutcome outcome = run_verify(cfg);
    std::cout << outcome.report;
    if (!out.empty()) {
        write_text_file(out, outcome.report);
        std::cout << "report written to " << out << "\n";
    }
    return outcome.all_pass ? 0 : static_cast<int>(ExitCode::check_failed);
}

int cmd_gen(std::uint64_t seed, int n, int d, const std::string& field_flag, const std::string& out,
            const std::string& cycle_out) {
    const FieldDesc field = FieldDesc::parse(field_flag);
    if (!field.rational && field.p <= n) throw BadInputError("gen: prime modulus must exceed n");
    return with_field(field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        SeededRng rng(seed);
        const ZeroCycle<K> cycle = random_cycle<K>(rng, n, d, field);
        const MatrixTuple<K> tuple = conjugate(cycle_to_tuple(cycle), random_invertible<K>(rng, n, field));
        std::cout << "generated n = " << n << ", d = " << d << ", spectrum " << cycle.to_string() << "\n";
        emit(out, tuple_to_json(tuple, field), "tuple");
        emit(cycle_out, cycle_to_json(cycle, field), "cycle");
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral data toolkit: joint spectra of commuting matrix tuples, Chow/Hitchin coordinates, "
                 "Cayley fibers, multisymmetric rewriting, and one-parameter spectral families"};
    app.require_subcommand(1);

    std::string in, out, tuple_path, cycle_path, direction = "p2e", expr, a1 = "0", a2 = "0";
    std::string field_flag = "Q", samples = "0,1,2,3";
    std::uint64_t seed = 1;
    int trials = 20, n = 2, d = 2, max_degree = 6;
    bool signed_convention = false;

    auto* sd = app.add_subcommand("spectral-datum", "compute the spectral datum (joint spectrum) of a tuple file");
    sd->add_option("--in", in, "tuple JSON file")->required();
    sd->add_option("--out", out, "cycle JSON output path");

    auto* ce = app.add_subcommand("chow-embed", "embed a cycle file into the Chow coordinates a_1..a_n");
    ce->add_option("--in", in, "cycle JSON file")->required();
    ce->add_option("--field", field_flag, "field when the file does not carry one (Q or Fp:<p>)");
    ce->add_option("--out", out, "coordinates JSON output path");

    auto* nc = app.add_subcommand("newton-convert", "convert between Chow (a) and Hitchin (b) coordinates");
    nc->add_option("--in", in, "coordinates JSON file")->required();
    nc->add_option("--direction", direction, "p2e (b to a) or e2p (a to b)");
    nc->add_flag("--signed", signed_convention, "use the signed display convention a_i = (-1)^i e_i");
    nc->add_option("--out", out, "converted coordinates output path");

    auto* cc = app.add_subcommand("cayley-check", "generalized Cayley-Hamilton check of a tuple against a cycle");
    cc->add_option("--tuple", tuple_path, "tuple JSON file")->required();
    cc->add_option("--cycle", cycle_path, "cycle JSON file")->required();
    cc->add_option("--trials", trials, "number of random linear forms");
    cc->add_option("--seed", seed, "seed for the random forms");

    auto* cf = app.add_subcommand("cayley-fiber", "fiber of the universal spectral cover over a cycle");
    cf->add_option("--in", in, "cycle JSON file")->required();
    cf->add_option("--field", field_flag, "field when the file does not carry one");

    auto* ri = app.add_subcommand("rewrite-invariant", "rewrite a multisymmetric invariant in Chow coordinates");
    ri->add_option("--expr", expr, "invariant over variables x[j][k], 1-based")->required();
    ri->add_option("--n", n, "number of points")->required();
    ri->add_option("--d", d, "dimension")->required();
    ri->add_option("--max-degree", max_degree, "degree bound for the rewriting");
    ri->add_option("--field", field_flag, "base field");

    auto* fc = app.add_subcommand("family-coords", "spectral coordinates a_i(s) of a family over k[s]");
    fc->add_option("--in", in, "family JSON file")->required();
    fc->add_option("--out", out, "coordinates JSON output path");

    auto* re = app.add_subcommand("ruled-example", "rank-2 ruled-surface family: torsion, quotient, fiber profile");
    re->add_option("--a1", a1, "polynomial in s")->required();
    re->add_option("--a2", a2, "polynomial in s")->required();
    re->add_option("--samples", samples, "comma-separated sample points for the fiber profile");
    re->add_option("--field", field_flag, "base field");
    re->add_option("--out", out, "JSON report output path");

    VerifyConfig vcfg;
    std::string verify_field = "Q";
    auto* vf = app.add_subcommand("verify", "seeded batch cross-check harness");
    vf->add_option("--seed", vcfg.seed, "seed; the report is a pure function of the config");
    vf->add_option("--trials", vcfg.trials, "number of random instances");
    vf->add_option("--nmax", vcfg.nmax, "maximum matrix size");
    vf->add_option("--dmax", vcfg.dmax, "maximum number of commuting matrices");
    vf->add_option("--field", verify_field, "base field");
    vf->add_option("--jobs", vcfg.jobs, "concurrent workers (never changes the report bytes)");
    vf->add_option("--out", out, "write the report to a file as well");
    vf->add_flag("--inject-newton-bug", vcfg.inject_newton_bug, "self-test mutant: flip a Newton sign")->group("");

    auto* gen = app.add_subcommand("gen", "generate a random commuting tuple with known spectrum");
    gen->add_option("--seed", seed, "seed");
    gen->add_option("--n", n, "matrix size");
    gen->add_option("--d", d, "number of commuting matrices");
    gen->add_option("--field", field_flag, "base field");
    gen->add_option("--out", out, "tuple JSON output path")->required();
    gen->add_option("--cycle-out", cycle_path, "also write the sampled cycle");

    CLI11_PARSE(app, argc, argv);

    if (sd->parsed()) return guarded([&] { return cmd_spectral_datum(in, out); });
    if (ce->parsed()) return guarded([&] { return cmd_chow_embed(in, field_flag, out); });
    if (nc->parsed()) return guarded([&] { return cmd_newton_convert(in, direction, signed_convention, out); });
    if (cc->parsed()) return guarded([&] { return cmd_cayley_check(tuple_path, cycle_path, trials, seed); });
    if (cf->parsed()) return guarded([&] { return cmd_cayley_fiber(in, field_flag); });
    if (ri->parsed()) return guarded([&] { return cmd_rewrite_invariant(expr, n, d, max_degree, field_flag); });
    if (fc->parsed()) return guarded([&] { return cmd_family_coords(in, out); });
    if (re->parsed()) return guarded([&] { return cmd_ruled_example(a1, a2, samples, field_flag, out); });
    if (vf->parsed()) {
        return guarded([&] {
            vcfg.field = FieldDesc::parse(verify_field);
            return cmd_verify(vcfg, out);
        });
    }
    if (gen->parsed()) return guarded([&] { return cmd_gen(seed, n, d, field_flag, out, cycle_path); });
    return 0;
}
