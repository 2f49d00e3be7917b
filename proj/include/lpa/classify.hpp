#ifndef LPA_CLASSIFY_HPP
#define LPA_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "lpa/rep.hpp"

namespace lpa {

// Classification answers are certified three-ways: probabilistic steps never
// return an uncertified Yes/No, they fall back to Unknown.
enum class Verdict { Yes, No, Unknown };

const char* verdict_name(Verdict v);

constexpr std::uint64_t kDefaultBudget = 1u << 20;

struct IsoResult {
    Verdict verdict;
    std::optional<RepHom> witness; // invertible equivariant map when Yes
    std::string reason;
};

// Decides V ≅ W. Over F_p the No side is certified by exhausting all
// hom-space coordinate tuples; over Q by the generic determinant vanishing
// on a full interpolation grid. Unknown only when the certification grid
// exceeds the budget.
IsoResult is_isomorphic(const Rep& v, const Rep& w, std::uint64_t seed,
                        std::uint64_t budget = kDefaultBudget);

struct IrredResult {
    Verdict verdict;
    std::optional<Subspace> witness; // proper nonzero submodule when No
    std::string reason;
};

// Irreducibility. Over F_p the decision is complete (kernel-seeded spinning
// with a certified two-sided criterion, exhaustive projective spinning as
// fallback when q^dim fits the budget). Over Q, No comes with a witness and
// Yes only from the certified two-sided criterion; otherwise Unknown.
IrredResult is_irreducible(const Rep& r, std::uint64_t seed,
                           std::uint64_t budget = kDefaultBudget);

struct IndecResult {
    Verdict verdict;
    std::optional<std::pair<Subspace, Subspace>> parts; // complementary summands when No
    std::string reason;
};

// Indecomposability via the endomorphism algebra: dim End = 1 gives Yes;
// a coprime factorization of the characteristic polynomial of an
// endomorphism splits the module; over F_p an exhaustive idempotent scan
// completes the decision when |End| fits the budget; over Q the radical
// quotient of End is examined for a certified division-algebra answer.
IndecResult is_indecomposable(const Rep& r, std::uint64_t seed,
                              std::uint64_t budget = kDefaultBudget);

// Exhaustive irreducibility decision over F_p by spinning every projective
// vector; requires q^total_dim <= budget. Complete by construction.
IrredResult irreducible_exhaustive(const Rep& r, std::uint64_t budget = kDefaultBudget);

} // namespace lpa

#endif
