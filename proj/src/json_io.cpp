#include "hypdisc/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hypdisc/errors.hpp"

namespace hypdisc::json_io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

void write_number(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    out += s;
}

void write(std::string& out, const json& j, int indent, int level) {
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
    const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * level), ' ') : "";
    const char* sep = indent > 0 ? ": " : ":";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            // Small objects of scalars and short scalar arrays stay on one line.
            bool flat = j.size() <= 3;
            for (const json& x : j) {
                const bool short_array =
                    x.is_array() && x.size() <= 4 && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); });
                flat = flat && (x.is_primitive() || short_array);
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += flat && indent > 0 ? ", " : ",";
                first = false;
                if (!flat) out += pad;
                out += json(it.key()).dump();
                out += sep;
                write(out, it.value(), flat ? 0 : indent, level + 1);
            }
            if (!flat) out += close;
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Short numeric arrays stay on one line.
            bool flat = j.size() <= 8;
            for (const json& x : j) flat = flat && x.is_primitive();
            out += '[';
            bool first = true;
            for (const json& x : j) {
                if (!first) out += flat && indent > 0 ? ", " : ",";
                first = false;
                if (!flat) out += pad;
                write(out, x, flat ? 0 : indent, level + 1);
            }
            if (!flat) out += close;
            out += ']';
            return;
        }
        case json::value_t::number_float: write_number(out, j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

json sp_rows(const QuatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string dump(const json& j, int indent) {
    std::string out;
    write(out, j, indent, 0);
    return out;
}

json document(json body) {
    json out = json::object();
    out["schema"] = kSchema;
    for (auto it = body.begin(); it != body.end(); ++it)
        if (it.key() != "schema") out[it.key()] = it.value();
    return out;
}

json error_object(const std::string& type, const std::string& message) {
    return document(json{{"error", json{{"type", type}, {"message", message}}}});
}

json to_json(const CliffordNumber& x) {
    json terms = json::array();
    const std::vector<double>& c = x.coeffs();
    for (std::size_t b = 0; b < c.size(); ++b) {
        if (c[b] == 0.0) continue;
        json blade = json::array();
        for (int t = 1; t <= x.n(); ++t)
            if (b & (std::size_t{1} << (t - 1))) blade.push_back(t);
        terms.push_back(json{{"blade", blade}, {"c", c[b]}});
    }
    return json{{"n", x.n()}, {"terms", terms}};
}

CliffordNumber clifford_number_from_json(const json& j, int n) {
    if (j.is_number()) return CliffordNumber::scalar(n, j.get<double>());
    if (j.contains("n") && integer(j.at("n"), "n") != n) throw DimensionMismatch("element n differs from matrix n");
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw InputError("terms must be an array");
    std::vector<std::pair<std::vector<int>, double>> out;
    for (const json& t : terms) {
        const json& blade = field(t, "blade");
        if (!blade.is_array()) throw InputError("blade must be an array");
        std::vector<int> idx;
        for (const json& b : blade) idx.push_back(integer(b, "blade index"));
        out.emplace_back(idx, number(field(t, "c"), "c"));
    }
    try {
        return CliffordNumber::from_terms(n, out);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
    if (j.is_number()) return Quaternion{j.get<double>()};
    if (!j.is_array() || j.empty() || j.size() > 4) throw InputError("quaternion must be [w, x, y, z]");
    double v[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < j.size(); ++k) v[k] = number(j[k], "quaternion component");
    return {v[0], v[1], v[2], v[3]};
}

json to_json(const BoundaryPoint& p) {
    if (p.is_infinity()) return "inf";
    return p.value().vector_coords();
}

BoundaryPoint boundary_point_from_json(const json& j, int n) {
    if (j.is_string() && j.get<std::string>() == "inf") return BoundaryPoint::infinity(n);
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n + 1))
        throw InputError("boundary point must be \"inf\" or an array of n + 1 numbers");
    std::vector<double> c;
    for (const json& x : j) c.push_back(number(x, "coordinate"));
    return BoundaryPoint::finite(n, c);
}

json to_json(const CliffordMatrix& t) {
    return json{{"algebra", "clifford"}, {"n", t.n()}, {"a", to_json(t.a)}, {"b", to_json(t.b)},
                {"c", to_json(t.c)},     {"d", to_json(t.d)}};
}

json to_json(const SpMatrix& a, Algebra algebra) {
    return json{{"algebra", to_string(algebra)}, {"n", a.n()}, {"form", to_string(a.form)}, {"rows", sp_rows(a.A)}};
}

json to_json(const Element& e) { return e.is_clifford() ? to_json(e.clifford) : to_json(e.sp, e.algebra); }

Element element_from_json(const json& j_in) {
    const json& j = j_in.is_object() && j_in.contains("matrix") ? j_in.at("matrix") : j_in;
    if (!j.is_object()) throw InputError("matrix must be an object");
    const json& alg = field(j, "algebra");
    if (!alg.is_string()) throw InputError("algebra must be a string");
    const Algebra algebra = algebra_from_string(alg.get<std::string>());
    const int n = integer(field(j, "n"), "n");
    if (n < 0) throw InputError("n must be non-negative");
    if (algebra == Algebra::clifford) {
        if (n > 16) throw InputError("n must be at most 16");
        return Element::of(CliffordMatrix{clifford_number_from_json(field(j, "a"), n),
                                          clifford_number_from_json(field(j, "b"), n),
                                          clifford_number_from_json(field(j, "c"), n),
                                          clifford_number_from_json(field(j, "d"), n)});
    }
    if (n < 1) throw InputError("n must be at least 1 for sp and su");
    const FormTag form = j.contains("form") ? form_from_string(field(j, "form").get<std::string>()) : FormTag::J2;
    const json& rows = field(j, "rows");
    const int size = n + 1;
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size))
        throw InputError("rows must hold n + 1 rows");
    QuatMatrix m(size, size);
    for (int r = 0; r < size; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(size))
            throw InputError("each row must hold n + 1 entries");
        for (int k = 0; k < size; ++k) {
            m(r, k) = quaternion_from_json(row[static_cast<std::size_t>(k)]);
            if (algebra == Algebra::su && !m(r, k).is_complex(0.0)) throw InputError("su entries must be complex");
        }
    }
    return Element::of(SpMatrix{m, form}, algebra);
}

json to_json(const GroupPresentation& g) {
    json gens = json::array();
    for (const Generator& x : g.generators) gens.push_back(json{{"name", x.name}, {"matrix", to_json(x.element)}});
    return json{{"kind", "group"},
                {"algebra", to_string(g.algebra)},
                {"n", g.n},
                {"metadata", g.metadata},
                {"generators", gens}};
}

GroupPresentation group_from_json(const json& j) {
    GroupPresentation g;
    const json& alg = field(j, "algebra");
    if (!alg.is_string()) throw InputError("algebra must be a string");
    g.algebra = algebra_from_string(alg.get<std::string>());
    g.n = integer(field(j, "n"), "n");
    if (j.contains("metadata") && j.at("metadata").is_string()) g.metadata = j.at("metadata").get<std::string>();
    const json& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty()) throw InputError("generators must be a non-empty array");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const json& x = gens[k];
        std::string name = "g" + std::to_string(k + 1);
        if (x.is_object() && x.contains("name")) {
            if (!x.at("name").is_string()) throw InputError("generator name must be a string");
            name = x.at("name").get<std::string>();
        }
        Element e = element_from_json(x);
        if (e.algebra != g.algebra) throw DimensionMismatch("generator " + name + " has a different algebra");
        if (e.n() != g.n) throw DimensionMismatch("generator " + name + " has a different n");
        g.generators.push_back({name, e});
    }
    return g;
}

json to_json(const IsometryInvariants& inv, const std::vector<BoundaryPoint>& fixed) {
    json pts = json::array();
    for (const BoundaryPoint& p : fixed) pts.push_back(to_json(p));
    return json{{"kind", to_string(inv.kind)},
                {"angles", inv.angles},
                {"theta", inv.theta_max},
                {"tau", inv.tau},
                {"beta", inv.beta},
                {"fixed_points", pts}};
}

json to_json(const SpInvariants& inv) {
    json classes = json::array();
    for (std::size_t k = 0; k < inv.classes.size(); ++k) {
        json c{{"rep", to_json(inv.classes[k].rep)},
               {"modulus", inv.classes[k].rep.norm()},
               {"multiplicity", inv.classes[k].multiplicity}};
        if (k < inv.eigen_types.size()) c["type"] = inv.eigen_types[k];
        classes.push_back(c);
    }
    return json{{"kind", to_string(inv.kind)}, {"eigenvalue_classes", classes}, {"lambda1", to_json(inv.lambda1)},
                {"delta_cp", inv.delta_cp},    {"M", inv.M},                    {"delta", inv.delta_ell}};
}

json to_json(const Certificate& c) {
    json pre = json::array();
    for (const PreconditionCheck& p : c.preconditions) {
        json x{{"name", p.name}, {"passed", p.passed}};
        if (p.value) x["value"] = *p.value;
        pre.push_back(x);
    }
    json out{{"inequality_id", to_string(c.inequality_id)},
             {"lhs", c.lhs},
             {"rhs", c.rhs},
             {"satisfied", c.satisfied},
             {"f", c.f_name},
             {"g", c.g_name},
             {"preconditions", pre},
             {"non_elementary", c.non_elementary},
             {"distinct_limit_points", c.distinct_limit_points}};
    if (c.fixes_o) out["fixes_o"] = *c.fixes_o;
    out["verdict"] = to_string(c.verdict);
    return out;
}

json to_json(const TestMapCheck& t) {
    json values = json::object();
    for (const auto& [k, v] : t.values) values[k] = v;
    return json{{"mode", to_string(t.mode)},
                {"kind", t.kind},
                {"hypothesis", t.hypothesis},
                {"passed", t.passed},
                {"values", values}};
}

json to_json(const ZariskiEvidence& z) {
    return json{{"common_fixed_point", z.common_fixed_point},
                {"orbit_rank", z.orbit_rank},
                {"algebra_rank", z.algebra_rank},
                {"ambient_dim", z.ambient_dim},
                {"passed", z.passed},
                {"status", z.passed ? "not disproved" : "failed"}};
}

json to_json(const ProbeReport& r, bool all_certificates) {
    auto item = [](const ProbeItem& p) {
        return json{{"word", p.word}, {"length", p.length}, {"certificate", to_json(p.certificate)}};
    };
    json certs = json::array();
    for (const ProbeItem& p : r.certificates)
        if (all_certificates || p.certificate.verdict != Verdict::consistent) certs.push_back(item(p));
    json skipped = json::object();
    for (const auto& [k, v] : r.skipped) skipped[k] = v;
    json errors = json::array();
    for (const auto& [w, msg] : r.errors) errors.push_back(json{{"word", w}, {"message", msg}});
    return json{{"kind", "probe_report"},
                {"mode", to_string(r.mode)},
                {"depth", r.depth},
                {"seed", r.seed},
                {"words_examined", r.words_examined},
                {"distinct_elements", r.distinct_elements},
                {"loxodromic_found", r.loxodromic_found},
                {"filtered_shared_fixed_point", r.filtered_shared_fixed_point},
                {"checked", r.checked},
                {"violations", r.violations},
                {"truncated", r.truncated},
                {"skipped_preconditions", skipped},
                {"errors", errors},
                {"first_violation", r.first_violation ? item(*r.first_violation) : json(nullptr)},
                {"certificates", certs},
                {"test_map_check", to_json(r.test_map_check)},
                {"zariski_evidence", to_json(r.zariski)},
                {"summary", r.summary}};
}

}  // namespace hypdisc::json_io
