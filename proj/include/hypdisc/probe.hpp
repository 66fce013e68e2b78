#pragma once

// Word balls in finitely generated groups and the search for inequality violations between a
// test map f and loxodromic words g.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypdisc/certificate.hpp"
#include "hypdisc/lorentz.hpp"
#include "hypdisc/sp.hpp"
#include "hypdisc/tolerances.hpp"

namespace hypdisc {

enum class Algebra { clifford, sp, su };
std::string to_string(Algebra a);
Algebra algebra_from_string(const std::string& s);

/// Either a Clifford matrix or an Sp(n,1) matrix.
struct Element {
    Algebra algebra = Algebra::clifford;
    CliffordMatrix clifford;
    SpMatrix sp;

    static Element of(const CliffordMatrix& m) { return {Algebra::clifford, m, {}}; }
    static Element of(const SpMatrix& m, Algebra a = Algebra::sp) { return {a, {}, m}; }
    bool is_clifford() const noexcept { return algebra == Algebra::clifford; }
    int n() const noexcept { return is_clifford() ? clifford.n() : sp.n(); }
};

struct Generator {
    std::string name;
    Element element;
};

struct GroupPresentation {
    Algebra algebra = Algebra::clifford;
    int n = 0;
    std::vector<Generator> generators;
    std::string metadata;
};

/// Throws InvalidMatrix when a generator fails its validator, DimensionMismatch on mixed input.
void validate_group(const GroupPresentation& g);

/// Letter 2k is generator k, letter 2k+1 its inverse.
using Word = std::vector<int>;
std::string word_string(const Word& w, const GroupPresentation& g);

template <class M>
struct BallEntry {
    Word word;
    M matrix;
};

template <class M>
struct Ball {
    std::vector<BallEntry<M>> entries;  // identity excluded
    std::size_t words_examined = 0;
    bool truncated = false;
};

struct BallOptions {
    int depth = 1;
    std::size_t budget = tol::kBallBudget;
    int threads = 1;
};

/// Freely reduced words of length <= depth, ordered by length then letter sequence, keeping
/// the first word for each matrix up to sign. Words extending a duplicate are pruned.
Ball<CliffordMatrix> word_ball_clifford(const GroupPresentation& g, const BallOptions& opt);
Ball<SpMatrix> word_ball_sp(const GroupPresentation& g, const BallOptions& opt);

enum class ProbeMode { thm1_lox, thm1_nonelliptic, thm1_elliptic, thm2_conjugate, thmq_lox, thmq_heisenberg, thmq_elliptic };
std::string to_string(ProbeMode m);
ProbeMode probe_mode_from_string(const std::string& s);
bool is_quaternionic(ProbeMode m);

struct TestMapCheck {
    ProbeMode mode = ProbeMode::thm1_lox;
    std::string kind;
    std::string hypothesis;
    bool passed = false;
    std::vector<std::pair<std::string, double>> values;
};

/// Throws PreconditionFailed("test_map_kind") when f has the wrong kind for the mode.
TestMapCheck validate_test_map(const Element& f, ProbeMode mode, std::uint64_t seed = kDefaultFrameSeed);

struct ZariskiEvidence {
    bool common_fixed_point = false;
    int orbit_rank = 0;
    int algebra_rank = 0;
    int ambient_dim = 0;
    bool passed = false;  // "not disproved"; a failure is a proof of non-density
};

ZariskiEvidence zariski_heuristic(const GroupPresentation& g, std::uint64_t seed = kDefaultFrameSeed);

struct ProbeItem {
    std::string word;
    int length = 0;
    Certificate certificate;
};

struct ProbeReport {
    ProbeMode mode = ProbeMode::thm1_lox;
    int depth = 0;
    std::uint64_t seed = 0;
    std::size_t words_examined = 0;
    std::size_t distinct_elements = 0;
    std::size_t loxodromic_found = 0;
    std::size_t filtered_shared_fixed_point = 0;
    std::size_t checked = 0;
    std::size_t violations = 0;
    bool truncated = false;
    std::map<std::string, int> skipped;  // precondition clause -> count
    std::vector<std::pair<std::string, std::string>> errors;
    std::vector<ProbeItem> certificates;
    std::optional<ProbeItem> first_violation;
    TestMapCheck test_map_check;
    ZariskiEvidence zariski;
    std::string summary;
};

struct ProbeOptions {
    int depth = 6;
    std::uint64_t seed = kDefaultFrameSeed;
    int threads = 1;
    std::size_t budget = tol::kBallBudget;
};

/// Throws PreconditionFailed when the test map fails its hypothesis.
ProbeReport run_probe(const GroupPresentation& g, const Element& f, ProbeMode mode, const ProbeOptions& opt);

/// Thread count from --threads, falling back to HYPDISC_THREADS, then 1.
int resolve_threads(int requested);

}  // namespace hypdisc
