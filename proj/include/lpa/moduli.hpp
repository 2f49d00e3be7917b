#ifndef LPA_MODULI_HPP
#define LPA_MODULI_HPP

#include <gmpxx.h>

#include "lpa/classify.hpp"
#include "lpa/rep.hpp"

namespace lpa {

struct ModuliProblem {
    Graph graph;
    DimVector dims;
    FieldCtx field;
};

// sum over edges of d_se d_re minus sum over vertices of d_nu^2, plus one;
// may be nonpositive.
long long expected_dim(const Graph& g, const DimVector& d);

struct StabilizerReport {
    int commutant_dim;        // kernel of the base-change action derivative
    int end_dim;              // dim End via hom_space (asserted equal)
    long long transverse_dim; // sum d_se d_re - (sum d_nu^2 - commutant_dim)
    long long expected;       // expected_dim of the ambient problem
    bool schur;               // commutant_dim == 1
};

StabilizerReport stabilizer_check(const Rep& r);

struct OrbitReport {
    std::uint64_t total_reps = 0;
    std::uint64_t irreducible_count = 0;
    std::uint64_t class_count = 0;
    std::uint64_t nonzero_class_count = 0; // classes with some nonzero edge matrix
    std::vector<Rep> representatives;      // minimal enumeration-index per class
    long long expected = 0;
};

// Exhaustive enumeration of all representations with the given dimension
// vector over F_q, irreducibility by complete spinning, orbits under the
// product of general linear groups, canonical representative the minimal
// enumeration index.
OrbitReport enumerate_and_count(const ModuliProblem& p, std::uint64_t budget = kDefaultBudget);

// monic irreducibles of the given degree over F_q, by exhaustive scan
std::uint64_t count_irreducible_monic(const FieldCtx& f, int degree);

struct ChenFamilyCount {
    int cycle_len = 0;
    int poly_deg = 0;
    std::uint64_t count = 0;
};

struct ChenSubvarietyReport {
    int n = 0, d = 0;
    std::uint64_t lambda_family = 0; // |W_d| * (q - 1)
    std::vector<ChenFamilyCount> twisted_families; // ab = d with b >= 2
    std::uint64_t total = 0;
    mpz_class ambient; // q^expected_dim, the ambient point-count scale
    std::string note;
};

// Counts the generalized-Chen parameter data of a given total dimension on
// the bouquet of n loops over F_q, against the ambient moduli scale.
ChenSubvarietyReport chen_subvariety_report(int n, int d, const FieldCtx& field);

} // namespace lpa

#endif
