#include <doctest.h>

#include <cstdlib>

#include "../support.hpp"
#include "hypdisc/errors.hpp"
#include "hypdisc/probe.hpp"
#include "hypdisc/registry.hpp"

using namespace hypdisc;

namespace {

GroupPresentation clifford_group(std::vector<std::pair<std::string, CliffordMatrix>> gens) {
    GroupPresentation g;
    g.n = gens.front().second.n();
    for (auto& [name, m] : gens) g.generators.push_back({name, Element::of(m)});
    return g;
}

// Brute force: every freely reduced word of length <= depth, deduplicated by matrix up to sign.
std::size_t distinct_by_brute_force(const GroupPresentation& g, int depth) {
    std::vector<CliffordMatrix> letters;
    for (const Generator& gen : g.generators) {
        letters.push_back(gen.element.clifford);
        letters.push_back(mat_inverse(gen.element.clifford));
    }
    std::vector<CliffordMatrix> seen{CliffordMatrix::identity(g.n)};
    auto fresh = [&](const CliffordMatrix& m) {
        for (const CliffordMatrix& s : seen)
            if (max_abs_diff(s, m) < 1e-9 || max_abs_diff(s, -m) < 1e-9) return false;
        return true;
    };
    std::vector<std::pair<int, CliffordMatrix>> frontier{{-1, CliffordMatrix::identity(g.n)}};
    for (int len = 0; len < depth; ++len) {
        std::vector<std::pair<int, CliffordMatrix>> next;
        for (const auto& [last, m] : frontier)
            for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
                if (last >= 0 && (l ^ 1) == last) continue;
                next.push_back({l, m * letters[static_cast<std::size_t>(l)]});
            }
        for (const auto& [l, m] : next)
            if (fresh(m)) seen.push_back(m);
        frontier = std::move(next);
    }
    return seen.size() - 1;
}

}  // namespace

TEST_CASE("word balls") {
    const GroupPresentation one = clifford_group({{"A", CliffordMatrix::from_reals(2, 0, 0, 0.5)}});
    BallOptions opt;
    opt.depth = 3;
    const Ball<CliffordMatrix> b = word_ball_clifford(one, opt);
    CHECK(b.entries.size() == 6);
    CHECK(word_string(b.entries.front().word, one) == "A");
    CHECK(word_string(b.entries[1].word, one) == "A^-1");

    const GroupPresentation modular = example_group("modular");
    for (int depth = 1; depth <= 4; ++depth) {
        opt.depth = depth;
        CHECK(word_ball_clifford(modular, opt).entries.size() == distinct_by_brute_force(modular, depth));
    }
    opt.depth = 2;
    const Ball<CliffordMatrix> m2 = word_ball_clifford(modular, opt);
    CHECK(m2.entries.size() < 16);

    // Ball of radius L sits inside the ball of radius L + 1.
    opt.depth = 4;
    const Ball<CliffordMatrix> small = word_ball_clifford(modular, opt);
    opt.depth = 5;
    const Ball<CliffordMatrix> large = word_ball_clifford(modular, opt);
    for (const auto& e : small.entries) {
        bool found = false;
        for (const auto& f : large.entries) found = found || max_abs_diff(e.matrix, f.matrix) < 1e-12;
        CHECK(found);
    }

    opt.budget = 10;
    const Ball<CliffordMatrix> cut = word_ball_clifford(modular, opt);
    CHECK(cut.truncated);
    CHECK(cut.entries.size() <= 10);
}

TEST_CASE("word balls do not depend on the thread count") {
    const GroupPresentation picard = example_group("picard");
    BallOptions opt;
    opt.depth = 4;
    const Ball<CliffordMatrix> a = word_ball_clifford(picard, opt);
    opt.threads = 4;
    const Ball<CliffordMatrix> b = word_ball_clifford(picard, opt);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        CHECK(a.entries[k].word == b.entries[k].word);
        CHECK(max_abs_diff(a.entries[k].matrix, b.entries[k].matrix) == 0.0);
    }
    const Ball<SpMatrix> s1 = word_ball_sp(example_group("sp-lattice"), {3, tol::kBallBudget, 1});
    const Ball<SpMatrix> s4 = word_ball_sp(example_group("sp-lattice"), {3, tol::kBallBudget, 4});
    REQUIRE(s1.entries.size() == s4.entries.size());
    for (std::size_t k = 0; k < s1.entries.size(); ++k) CHECK(s1.entries[k].word == s4.entries[k].word);
}

TEST_CASE("Zariski heuristic") {
    const CliffordMatrix t = CliffordMatrix::from_reals(1, 1, 0, 1);
    const ZariskiEvidence common = zariski_heuristic(clifford_group({{"T", t}, {"U", t * t}}));
    CHECK(common.common_fixed_point);
    CHECK_FALSE(common.passed);
    CHECK(zariski_heuristic(example_group("modular")).passed);
    CHECK(zariski_heuristic(example_group("picard")).passed);
    CHECK_FALSE(zariski_heuristic(clifford_group({{"A", CliffordMatrix::from_reals(2, 0, 0, 0.5)}})).passed);
}

TEST_CASE("test map hypotheses") {
    CHECK_FALSE(validate_test_map(Element::of(CliffordMatrix::from_reals(2, 0, 0, 0.5)), ProbeMode::thm1_lox).passed);
    CHECK(validate_test_map(Element::of(CliffordMatrix::from_reals(1.2, 0, 0, 1 / 1.2)), ProbeMode::thm1_lox).passed);
    CHECK_THROWS_AS(validate_test_map(Element::of(CliffordMatrix::from_reals(1, 1, 0, 1)), ProbeMode::thm1_lox),
                    PreconditionFailed);
    CHECK(validate_test_map(example_element("heisenberg:0.03:0.25"), ProbeMode::thmq_heisenberg).passed);
    CHECK_FALSE(validate_test_map(example_element("heisenberg:0.5:1"), ProbeMode::thmq_heisenberg).passed);
    // beta = 4 sin^2(theta / 2) = 0.3.
    const double theta = 2 * std::asin(std::sqrt(0.075));
    const CliffordMatrix rot = CliffordMatrix::from_reals(std::cos(theta / 2), -std::sin(theta / 2),
                                                          std::sin(theta / 2), std::cos(theta / 2));
    CHECK(validate_test_map(Element::of(embed_next(rot)), ProbeMode::thm1_elliptic).passed);
}

TEST_CASE("probe reports") {
    const GroupPresentation modular = example_group("modular");
    ProbeOptions opt;
    opt.depth = 0;
    const ProbeReport empty = run_probe(modular, example_element("translation:1"), ProbeMode::thm1_nonelliptic, opt);
    CHECK(empty.checked == 0);
    CHECK(empty.summary.find("no loxodromic words") != std::string::npos);

    opt.depth = 5;
    const ProbeReport clean = run_probe(modular, example_element("translation:1"), ProbeMode::thm1_nonelliptic, opt);
    CHECK(clean.checked > 0);
    CHECK(clean.violations == 0);
    CHECK(clean.errors.empty());
    CHECK(clean.summary.find("discrete") == std::string::npos);

    const GroupPresentation dense = example_group("dense");
    opt.depth = 6;
    const ProbeReport rep = run_probe(dense, Element::of(dense_test_map()), ProbeMode::thm1_lox, opt);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->length == 4);
    CHECK(rep.first_violation->word == "D R R R");
    CHECK(rep.errors.empty());
    opt.threads = 3;
    const ProbeReport rep3 = run_probe(dense, Element::of(dense_test_map()), ProbeMode::thm1_lox, opt);
    CHECK(rep3.violations == rep.violations);
    CHECK(rep3.checked == rep.checked);
    CHECK(rep3.first_violation->word == rep.first_violation->word);

    CHECK_THROWS_AS(run_probe(modular, example_element("lox:2"), ProbeMode::thm1_lox, opt), PreconditionFailed);
}

TEST_CASE("thread resolution") {
    CHECK(resolve_threads(3) == 3);
    ::setenv("HYPDISC_THREADS", "5", 1);
    CHECK(resolve_threads(0) == 5);
    ::unsetenv("HYPDISC_THREADS");
    CHECK(resolve_threads(0) == 1);
}
