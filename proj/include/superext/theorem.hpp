#pragma once

#include "superext/classical.hpp"
#include "superext/cohomology.hpp"
#include "superext/io.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superext {

struct VerifyReport {
    std::string name;
    Json inputs;
    Json expected;
    Json computed;
    bool pass = false;

    Json to_json() const;
};

// Runs body(0..count-1) on at most jobs threads; the first exception is rethrown.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

// g (x) B with B = C[t] / prod (t - a_i)^{n_i} in the local basis e_i (t - a_i)^k.
struct Truncation {
    AlgebraPtr g;
    CommutativeAlgebra b;
    MapAlgebra map;
    AlgebraPtr algebra;

    std::size_t points() const { return b.points().size(); }
    std::size_t multiplicity(std::size_t point) const { return b.points()[point].multiplicity; }
};

Truncation make_truncation(const AlgebraPtr& g, const std::vector<PointData>& points);

// g (x) C[s]/(s^n) in the basis s^k; g itself for n = 1.
AlgebraPtr local_algebra(const AlgebraPtr& g, std::size_t n);

// g (x) B -> g (x) B/m_i^n; target is the given algebra, which must have the structure of local_algebra(g, n).
AlgebraHom local_projection(const Truncation& t, std::size_t point, std::size_t n, const AlgebraPtr& target);

// One local module per point: a module over local_algebra(g, order) seen at the given point.
struct EvaluationEntry {
    std::size_t point = 0;
    std::size_t order = 1;
    Representation local;
};

struct EvaluationFamily {
    std::vector<EvaluationEntry> entries;
    std::string label;
};

void validate_family(const Truncation& t, const EvaluationFamily& f);
// Tensor product of the pulled-back local modules.
Representation evaluation_tensor(const Truncation& t, const EvaluationFamily& f);
// Irreducible product of the pulled-back local modules.
Representation evaluation_module(const Truncation& t, const EvaluationFamily& f);
std::size_t family_kappa(const EvaluationFamily& f);

// Modules of g (x) B restricted to a subalgebra, e.g. a fixed-point subalgebra.
struct Restriction {
    AlgebraPtr algebra;
    Matrix inclusion;  // dim(g (x) B) x dim(sub)
};

struct ExtCell {
    DegreeDims raw;           // Ext^1 of the plain tensor products
    std::size_t kappa_sum = 0;
    DegreeDims corrected;     // Ext^1 of the irreducible products; total is raw / 2^kappa_sum
};

struct ExtTable {
    std::vector<std::string> labels;
    std::vector<std::vector<ExtCell>> cells;  // cells[i][j] = Ext^1(member i, member j)

    Json to_json() const;
};

ExtTable ext_table(const Truncation& t, const std::vector<EvaluationFamily>& family, std::size_t jobs = 1,
                   const std::optional<Restriction>& restriction = std::nullopt);

// Point index -> class of the local highest weight in Lambda/Q; points in the trivial class are omitted.
struct SpectralCharacter {
    std::map<std::size_t, std::vector<mpz_class>> classes;

    friend bool operator==(const SpectralCharacter& a, const SpectralCharacter& b) { return a.classes == b.classes; }
    Json to_json() const;
};

SpectralCharacter spectral_character(const Truncation& t, const EvaluationFamily& f, const RootData& roots);

struct BlocksOptions {
    std::size_t jobs = 1;
    std::optional<Restriction> restriction;
};

struct BlocksReport {
    ExtTable table;
    std::vector<std::size_t> component;  // linkage component of each member
    std::vector<SpectralCharacter> characters;
    std::vector<std::size_t> fiber;      // index of the character class of each member
    bool consistent = false;             // components and fibers give the same partition
    bool within_hypotheses = true;
    std::string verdict;                 // "pass", "fail" or "outside paper hypotheses"

    Json to_json() const;
};

BlocksReport blocks(const Truncation& t, const std::vector<EvaluationFamily>& family, const BlocksOptions& options = {});

VerifyReport verify_h1aC(const LieSuperalgebra& a, const std::string& label);

// H^1(L, C) = 0; with hypotheses_hold = false the value is recorded without a claim.
VerifyReport verify_vanishing_trivial(const LieSuperalgebra& l, const std::string& label, bool hypotheses_hold = true);

struct ThmMainConfig {
    AlgebraPtr g;
    std::vector<Scalar> points;
    std::size_t n = 1;
    // Local modules over local_algebra(g, n), one per point.
    std::vector<Representation> v;
    std::vector<Representation> v_prime;
    std::string label;
};

VerifyReport verify_thm_main(const ThmMainConfig& config);

// Ext^1 between evaluation modules of irreducibles at order-one points against
// (+)_i hom_g(g (x) V_i, V'_i)^{d_i}, restricted to the points where the families differ.
VerifyReport verify_ext1_evaluation(const Truncation& t, const EvaluationFamily& v, const EvaluationFamily& v_prime);

// H^1(g (x) B, (x)-hat ev V_i) against H^1(g, V_1) + hom_g(g, V_1)^d when one point is involved and 0 otherwise.
VerifyReport verify_h1_evaluation(const Truncation& t, const EvaluationFamily& f);

struct KunnethInput {
    Representation u1, v1;  // over g1
    Representation u2, v2;  // over g2
    std::size_t n = 1;
    std::string label;
};

VerifyReport verify_kunneth(const KunnethInput& input);

// Irreducible product checks: dim V-hat = dim(V1 (x) V2) / 2^kappa, halves isomorphic when halved.
VerifyReport verify_irreducible_product(const Representation& r1, const Representation& r2, const std::string& label);

}  // namespace superext
