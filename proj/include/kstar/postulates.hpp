#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kstar/propset.hpp"
#include "kstar/rank_function.hpp"
#include "kstar/revision.hpp"
#include "kstar/signature.hpp"
#include "kstar/theory.hpp"

namespace kstar {

/// Every quantified clause the suite can check.
///
/// K1..K8 are the AGM postulates, K9 minimal influence and K9_1, K9_2,
/// K9_2P its halves and weakening. U8* are the intersection postulates and
/// C* the iterated-revision postulates. The P_* ids are derived laws:
/// iterated revision by a conjunction, by a refuted formula, and by a
/// consequence (P_PHIANDPSI, P_PSI, P_GEN), and the mild and severe cases
/// of U8 (P_KM1, P_K9U8_1).
enum class PostulateId {
    K1, K2, K3, K4, K5, K6, K7, K8, K9,
    K9_1, K9_2, K9_2P,
    U8, U8_1, U8_2,
    C1, C2, C2P, C3, C4,
    P_PHIANDPSI, P_PSI, P_GEN, P_KM1, P_K9U8_1,
};

inline constexpr std::array all_postulates = {
    PostulateId::K1,    PostulateId::K2,          PostulateId::K3,    PostulateId::K4,    PostulateId::K5,
    PostulateId::K6,    PostulateId::K7,          PostulateId::K8,    PostulateId::K9,    PostulateId::K9_1,
    PostulateId::K9_2,  PostulateId::K9_2P,       PostulateId::U8,    PostulateId::U8_1,  PostulateId::U8_2,
    PostulateId::C1,    PostulateId::C2,          PostulateId::C2P,   PostulateId::C3,    PostulateId::C4,
    PostulateId::P_PHIANDPSI, PostulateId::P_PSI, PostulateId::P_GEN, PostulateId::P_KM1, PostulateId::P_K9U8_1,
};

std::string_view to_string(PostulateId id);
std::optional<PostulateId> parse_postulate_id(std::string_view text);

/// Comma- or blank-separated ids and inclusive ranges in declaration order,
/// e.g. "K1..K9,U8_2". "all" selects every id. Throws FormatError.
std::vector<PostulateId> parse_postulate_list(std::string_view text);

/// The clause in words, e.g. "if ~phi in K and ~phi in K' then K*phi = K'*phi".
std::string_view statement(PostulateId id);

/// Whether the clause quantifies over three PropSets besides K and so is
/// limited to n <= 2 in exhaustive mode.
bool is_heavy(PostulateId id);

struct Bindings {
    Theory k;
    std::optional<Theory> k_prime;
    PropSet phi;
    std::optional<PropSet> psi;

    friend bool operator==(const Bindings&, const Bindings&) = default;
};

/// A binding under which a clause fails. `observed` is the revision result
/// the clause constrains (e.g. K*phi, or (K*psi)*phi for iterated clauses).
struct Violation {
    PostulateId postulate;
    Bindings bindings;
    Theory observed;
    std::string required;
};

/// Checks one clause at one binding against `rv`. Returns the violation if
/// the clause fails there.
std::optional<Violation> check_binding(const Revision& rv, PostulateId id, const Bindings& b);

/// Re-evaluates the violation's bindings through `rv`; true iff the clause
/// still fails with the same observed theory.
bool replays(const Revision& rv, const Violation& v);

/// Evaluates the clause over every binding in lexicographic (K, K', phi,
/// psi) order of bitmasks and returns the first violation. Requires n <= 2
/// for heavy clauses, n <= 3 otherwise; throws DomainTooLargeError.
std::optional<Violation> check_postulate(const Revision& rv, PostulateId id, const Signature& sig);

/// Evaluates `samples` bindings drawn uniformly at random. The stream for
/// each clause is a std::mt19937_64 seeded from (seed, id), so every clause
/// is replayable on its own.
std::optional<Violation> check_postulate_sampled(const Revision& rv, PostulateId id, const Signature& sig,
                                                 std::uint64_t seed, std::size_t samples);

enum class SuiteMode { exhaustive, sampled };

std::string_view to_string(SuiteMode m);

struct SuiteOptions {
    SuiteMode mode = SuiteMode::exhaustive;
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
};

struct PostulateResult {
    PostulateId postulate;
    std::optional<Violation> violation;

    bool passed() const noexcept { return !violation; }
};

struct SuiteReport {
    std::vector<PostulateResult> results;
    std::size_t atoms = 0;
    /// Number of theories, which equals the number of formula classes.
    std::uint64_t domain_size = 0;
    SuiteMode mode = SuiteMode::exhaustive;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 0;

    bool all_pass() const;
};

/// check_postulate (or its sampled variant) for each id, in the given order.
SuiteReport run_suite(const Revision& rv, std::span<const PostulateId> ids, const Signature& sig,
                      const SuiteOptions& options = {});

/// If rv satisfies K1, K2 and K9_2P, it must satisfy K9_2. Returns the K9_2
/// violation only when that conditional fails. Requires n <= 2.
std::optional<Violation> check_implication_9p_to_92(const Revision& rv, const Signature& sig);

enum class ImpossibilityKind {
    /// U8_1 cannot coexist with K4 and K5: Cn(chi)*true versus K_bot*true.
    u8_1_vs_k4k5,
    /// C2 cannot coexist with K1..K4: (K*false)*true versus K*true.
    c2_vs_k1k4,
};

/// Finds the violation the impossibility argument predicts, scanning the
/// argument's free theory in ascending order. Throws PreconditionError if
/// rv fails the companion postulates and ExhaustionError if nothing is found.
Violation find_impossibility_witness(const Revision& rv, ImpossibilityKind which, const Signature& sig);

/// Two ranked revisions with the same row at k but different results after
/// one more revision: (k*psi)*phi differs.
struct Underdetermination {
    RankFunction first;
    RankFunction second;
    PropSet psi;
    PropSet phi;
};

/// Searches every ordered pair of distinct normalized rank functions in
/// enumeration order, then (psi, phi) in bitmask order. Returns nullopt
/// when the row at k determines every iterated revision (always the case
/// for K_bot). Requires n <= 2.
std::optional<Underdetermination> dynamic_underdetermination(const Signature& sig, const Theory& k);

} // namespace kstar
