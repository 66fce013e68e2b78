#include "hypdisc/registry.hpp"

#include <cmath>
#include <sstream>

#include "hypdisc/errors.hpp"

namespace hypdisc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double number(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw InputError("bad number: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("bad number: " + s);
    }
}

int count(const std::vector<std::string>& p, std::size_t i, int fallback) {
    return p.size() > i ? static_cast<int>(number(p[i])) : fallback;
}

GroupPresentation clifford_group(int n, std::vector<Generator> gens, std::string meta) {
    return {Algebra::clifford, n, std::move(gens), std::move(meta)};
}

SpMatrix sp2(const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
    QuatMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return {m, FormTag::J2};
}

SpMatrix swap_sp(int size) {
    QuatMatrix w = QuatMatrix::identity(size);
    w(0, 0) = w(1, 1) = Quaternion{};
    w(0, 1) = w(1, 0) = Quaternion{1.0};
    return {w, FormTag::J2};
}

}  // namespace

std::vector<std::string> example_group_names() { return {"modular", "picard", "sp-lattice", "su-lattice", "dense"}; }

bool is_example_group(const std::string& name) {
    for (const std::string& n : example_group_names())
        if (n == name) return true;
    return false;
}

CliffordMatrix dense_dilation() { return CliffordMatrix::from_reals(2.0, 0.0, 0.0, 0.5); }

CliffordMatrix dense_rotation() {
    return CliffordMatrix::from_reals(std::cos(1.0), -std::sin(1.0), std::sin(1.0), std::cos(1.0));
}

CliffordMatrix dense_test_map() { return CliffordMatrix::from_reals(1.5, 0.0, 0.0, 1.0 / 1.5); }

GroupPresentation example_group(const std::string& name) {
    if (name == "modular")
        return clifford_group(0,
                              {{"T", Element::of(CliffordMatrix::from_reals(1, 1, 0, 1))},
                               {"S", Element::of(CliffordMatrix::from_reals(0, -1, 1, 0))}},
                              "modular group SL(2, Z)");
    if (name == "picard") {
        const CliffordNumber one = CliffordNumber::scalar(1, 1.0);
        const CliffordMatrix ti{one, CliffordNumber::generator(1, 1), CliffordNumber(1), one};
        return clifford_group(1,
                              {{"T", Element::of(CliffordMatrix::from_reals(1, 1, 0, 1, 1))},
                               {"S", Element::of(CliffordMatrix::from_reals(0, -1, 1, 0, 1))},
                               {"Ti", Element::of(ti)}},
                              "Picard group SL(2, Z[i])");
    }
    if (name == "dense")
        return clifford_group(0, {{"D", Element::of(dense_dilation())}, {"R", Element::of(dense_rotation())}},
                              "rotation by 2 rad and dilation by 4; not discrete");
    if (name == "sp-lattice") {
        GroupPresentation g{Algebra::sp, 1, {}, "integral quaternionic matrices in Sp(1,1), form J2"};
        g.generators.push_back({"Pi", Element::of(sp2(1.0, 0.0, {0, 1, 0, 0}, 1.0))});
        g.generators.push_back({"Pj", Element::of(sp2(1.0, 0.0, {0, 0, 1, 0}, 1.0))});
        g.generators.push_back({"Pk", Element::of(sp2(1.0, 0.0, {0, 0, 0, 1}, 1.0))});
        g.generators.push_back({"W", Element::of(swap_sp(2))});
        return g;
    }
    if (name == "su-lattice") {
        GroupPresentation g{Algebra::su, 1, {}, "integral complex matrices in SU(1,1), form J2"};
        g.generators.push_back({"Pi", Element::of(sp2(1.0, 0.0, {0, 1, 0, 0}, 1.0), Algebra::su)});
        g.generators.push_back({"W", Element::of(swap_sp(2), Algebra::su)});
        return g;
    }
    throw InputError("unknown example group: " + name);
}

std::vector<std::string> example_element_patterns() {
    return {"lox:LAMBDA[:N]",          "translation:MU[:N]",    "rotation:THETA[:N]",
            "sp-lox:LAMBDA[:N]",       "heisenberg:S[:ZETA[:N]]", "sp-elliptic:T1:T2[:N]"};
}

Element example_element(const std::string& spec) {
    const std::vector<std::string> p = split(spec, ':');
    if (p.size() < 2) throw InputError("test map needs parameters: " + spec);
    const std::string& kind = p[0];
    if (kind == "lox") {
        const double l = number(p[1]);
        if (l == 0.0) throw InputError("lambda must be nonzero");
        return Element::of(CliffordMatrix::from_reals(l, 0.0, 0.0, 1.0 / l, count(p, 2, 0)));
    }
    if (kind == "translation") return Element::of(CliffordMatrix::from_reals(1.0, number(p[1]), 0.0, 1.0, count(p, 2, 0)));
    if (kind == "rotation") {
        const double t = number(p[1]);
        const int n = count(p, 2, 0);
        if (n == 0)
            return Element::of(CliffordMatrix::from_reals(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2),
                                                          std::cos(t / 2)));
        const CliffordNumber a = CliffordNumber::from_terms(n, {{{}, std::cos(t / 2)}, {{1}, std::sin(t / 2)}});
        const CliffordNumber d = CliffordNumber::from_terms(n, {{{}, std::cos(t / 2)}, {{1}, -std::sin(t / 2)}});
        return Element::of(CliffordMatrix{a, CliffordNumber(n), CliffordNumber(n), d});
    }
    if (kind == "sp-lox") {
        const double l = number(p[1]);
        const int n = count(p, 2, 2);
        if (l == 0.0 || n < 1) throw InputError("sp-lox needs lambda != 0 and N >= 1");
        std::vector<Quaternion> d(static_cast<std::size_t>(n + 1), Quaternion{1.0});
        d[0] = Quaternion{l};
        d[1] = Quaternion{1.0 / l};
        return Element::of(SpMatrix{QuatMatrix::diagonal(d), FormTag::J2});
    }
    if (kind == "heisenberg") {
        const double im = number(p[1]);
        const double z = p.size() > 2 ? number(p[2]) : 0.0;
        const int n = count(p, 3, z != 0.0 ? 2 : 1);
        if (n < 1 || (z != 0.0 && n < 2)) throw InputError("heisenberg needs N >= 2 when zeta != 0");
        std::vector<Quaternion> zeta(static_cast<std::size_t>(n - 1));
        if (!zeta.empty()) zeta[0] = Quaternion{z};
        return Element::of(heisenberg(Quaternion{0.5 * z * z, im}, zeta));
    }
    if (kind == "sp-elliptic") {
        if (p.size() < 3) throw InputError("sp-elliptic needs two angles");
        const double t1 = number(p[1]), t2 = number(p[2]);
        const int n = count(p, 3, 2);
        if (n < 1) throw InputError("sp-elliptic needs N >= 1");
        std::vector<Quaternion> d(static_cast<std::size_t>(n + 1), Quaternion{1.0});
        d[0] = Quaternion{std::cos(t1), std::sin(t1)};
        d[1] = Quaternion{std::cos(t2), std::sin(t2)};
        return Element::of(SpMatrix{QuatMatrix::diagonal(d), FormTag::J1});
    }
    throw InputError("unknown test map: " + spec);
}

SpMatrix cao_parker_conjugator() {
    const SpMatrix t1 = heisenberg(Quaternion{0.125, 0.3, 0.0, 0.2}, {Quaternion{0.5}});
    const SpMatrix t2 = heisenberg(Quaternion{0.02, -0.4, 0.1, 0.0}, {Quaternion{0.0, 0.0, 0.2, 0.0}});
    const SpMatrix w = swap_sp(3);
    return t1 * w * t2 * w;
}

SpMatrix cao_parker_sequence(int m) {
    const double t = std::ldexp(8.0, -m);
    const SpMatrix k = cao_parker_conjugator();
    const SpMatrix d{QuatMatrix::diagonal({Quaternion{std::exp(t)}, Quaternion{std::exp(-t)}, Quaternion{1.0}}),
                     FormTag::J2};
    return k * d * sp_inverse(k);
}

}  // namespace hypdisc
