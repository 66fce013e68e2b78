// hypdisc command line: classify/invariants, certify, probe, gen.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hypdisc/errors.hpp"
#include "hypdisc/jorgensen.hpp"
#include "hypdisc/json_io.hpp"
#include "hypdisc/registry.hpp"

using namespace hypdisc;
namespace jio = hypdisc::json_io;

namespace {

enum Exit { kOk = 0, kOther = 1, kInput = 2, kPrecondition = 3, kViolation = 10 };

void emit(const jio::json& j, const std::string& path = "") {
    const std::string text = jio::dump(j) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void require_valid(const Element& e, const std::string& what) {
    const bool ok = e.is_clifford() ? validate(e.clifford, tol::kAlg) : sp_validate(e.sp, tol::kSp);
    if (!ok) throw InvalidMatrix(what + " is not a valid " + to_string(e.algebra) + " matrix");
}

Element load_element(const std::string& source) {
    std::ifstream probe(source);
    Element e = probe ? jio::element_from_json(jio::read_file(source)) : example_element(source);
    require_valid(e, source);
    return e;
}

GroupPresentation load_group(const std::string& source) {
    std::ifstream probe(source);
    if (!probe && is_example_group(source)) return example_group(source);
    return jio::group_from_json(jio::read_file(source));
}

jio::json invariants_of(const Element& e, std::uint64_t seed) {
    if (e.is_clifford()) {
        const Analysis a = analyze(e.clifford, seed);
        return jio::to_json(a.inv, a.fixed);
    }
    return jio::to_json(sp_classify(e.sp));
}

Certificate certify(InequalityId id, const Element& f, const Element& g, std::uint64_t seed) {
    if (f.is_clifford() != g.is_clifford()) throw DimensionMismatch("f and g belong to different algebras");
    const bool clifford_id =
        id == InequalityId::lox_cw || id == InequalityId::elliptic_cw || id == InequalityId::nonelliptic_cw;
    if (clifford_id != f.is_clifford())
        throw InputError(to_string(id) + " does not apply to " + to_string(f.algebra) + " matrices");
    switch (id) {
        case InequalityId::lox_cw: return check_lox(f.clifford, g.clifford, seed);
        case InequalityId::elliptic_cw: return check_elliptic(f.clifford, g.clifford, seed);
        case InequalityId::nonelliptic_cw: return check_nonelliptic(f.clifford, g.clifford, seed);
        case InequalityId::sp_elliptic: return check_sp_elliptic(f.sp, g.sp);
        case InequalityId::sp_shimizu: return check_sp_shimizu(f.sp, g.sp);
        case InequalityId::sp_cao_parker: return check_cao_parker(f.sp, g.sp);
    }
    throw InputError("unknown inequality");
}

void write_csv(const ProbeReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << "word,length,lhs,rhs,satisfied,verdict\n";
    char buf[64];
    for (const ProbeItem& p : r.certificates) {
        out << '"' << p.word << "\"," << p.length << ',';
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", p.certificate.lhs, p.certificate.rhs);
        out << buf << ',' << (p.certificate.satisfied ? "true" : "false") << ','
            << to_string(p.certificate.verdict) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discreteness tests for hyperbolic isometry groups"};
    app.require_subcommand(1);

    std::string element_file;
    std::uint64_t seed = kDefaultFrameSeed;
    auto add_classify = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("file", element_file, "matrix JSON file or bundled test map")->required();
        c->add_option("--seed", seed, "seed for the Lorentz reconstruction frame");
        return c;
    };
    CLI::App* classify_cmd = add_classify("classify", "classify an element");
    CLI::App* invariants_cmd = add_classify("invariants", "classify an element and print its invariants");

    std::string ineq, f_file, g_file;
    CLI::App* certify_cmd = app.add_subcommand("certify", "evaluate one inequality on a pair");
    certify_cmd->add_option("--ineq", ineq, "inequality id")->required();
    certify_cmd->add_option("--f", f_file, "test map file or bundled test map")->required();
    certify_cmd->add_option("--g", g_file, "second element file or bundled test map")->required();
    certify_cmd->add_option("--seed", seed, "seed for the Lorentz reconstruction frame");

    std::string group_src, map_src, mode_name, csv_path;
    ProbeOptions popt;
    int threads = 0;
    bool all_certs = false;
    CLI::App* probe_cmd = app.add_subcommand("probe", "search a word ball for inequality violations");
    probe_cmd->add_option("--group", group_src, "group JSON file or bundled group name")->required();
    probe_cmd->add_option("--test-map", map_src, "test map JSON file or bundled test map")->required();
    probe_cmd->add_option("--mode", mode_name, "probe mode")->required();
    probe_cmd->add_option("--depth", popt.depth, "maximal word length")->check(CLI::NonNegativeNumber);
    probe_cmd->add_option("--seed", popt.seed, "seed");
    probe_cmd->add_option("--threads", threads, "worker threads (default HYPDISC_THREADS or 1)");
    probe_cmd->add_option("--budget", popt.budget, "maximal number of distinct matrices");
    probe_cmd->add_option("--csv", csv_path, "write lhs/rhs of every checked word to a CSV file");
    probe_cmd->add_flag("--all-certificates", all_certs, "list consistent certificates too");

    std::string gen_name, gen_out;
    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a bundled group or test map");
    gen_cmd->add_option("name", gen_name, "group name, test map pattern, or 'list'")->required();
    gen_cmd->add_option("-o,--output", gen_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(jio::error_object("usage", e.what()));
        return kInput;
    }

    try {
        if (*classify_cmd || *invariants_cmd) {
            const Element e = load_element(element_file);
            emit(jio::document(invariants_of(e, seed)));
            return kOk;
        }
        if (*certify_cmd) {
            const InequalityId id = inequality_from_string(ineq);
            Certificate c = certify(id, load_element(f_file), load_element(g_file), seed);
            c.f_name = f_file;
            c.g_name = g_file;
            emit(jio::document(jio::to_json(c)));
            return kOk;
        }
        if (*probe_cmd) {
            const GroupPresentation g = load_group(group_src);
            const Element f = load_element(map_src);
            const ProbeMode mode = probe_mode_from_string(mode_name);
            popt.threads = resolve_threads(threads);
            const ProbeReport r = run_probe(g, f, mode, popt);
            if (!csv_path.empty()) write_csv(r, csv_path);
            emit(jio::document(jio::to_json(r, all_certs)));
            return r.violations > 0 ? kViolation : kOk;
        }
        if (*gen_cmd) {
            if (gen_name == "list") {
                emit(jio::document(jio::json{{"groups", example_group_names()},
                                             {"test_maps", example_element_patterns()}}));
                return kOk;
            }
            if (is_example_group(gen_name)) {
                emit(jio::document(jio::to_json(example_group(gen_name))), gen_out);
                return kOk;
            }
            emit(jio::document(jio::to_json(example_element(gen_name))), gen_out);
            return kOk;
        }
    } catch (const PreconditionFailed& e) {
        jio::json err = jio::error_object("precondition_failed", e.what());
        err["error"]["clause"] = e.clause();
        emit(err);
        return kPrecondition;
    } catch (const InputError& e) {
        emit(jio::error_object("input_error", e.what()));
        return kInput;
    } catch (const DimensionMismatch& e) {
        emit(jio::error_object("dimension_mismatch", e.what()));
        return kInput;
    } catch (const InvalidMatrix& e) {
        emit(jio::error_object("invalid_matrix", e.what()));
        return kInput;
    } catch (const InvalidTranslation& e) {
        emit(jio::error_object("invalid_translation", e.what()));
        return kInput;
    } catch (const AmbiguousClass& e) {
        jio::json err = jio::error_object("ambiguous_class", e.what());
        err["error"]["candidates"] = e.candidates();
        emit(err);
        return kOther;
    } catch (const Error& e) {
        emit(jio::error_object("error", e.what()));
        return kOther;
    } catch (const std::exception& e) {
        emit(jio::error_object("internal", e.what()));
        return kOther;
    }
    return kOther;
}
