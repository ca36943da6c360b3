#ifndef DSM_CERTIFY_HPP_
#define DSM_CERTIFY_HPP_

#include "dsm/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsm {

/// Ambient class for the determined-by-spectra question: all doubly
/// stochastic matrices, or only the symmetric ones. A matrix can be DS
/// in the symmetric class while its status in the full class is open;
/// the two scopes never infer from each other here.
enum class Scope { Symmetric, Full };

enum class Status { CertifiedDS, RefutedDS, Unknown };

std::string status_name(Status s);
std::string scope_name(Scope s);

struct SearchStats {
  long iterations = 0;
  std::vector<std::string> strategies;  // strategies tried, in order
  std::uint64_t seed = 0;
  long budget = 0;
};

struct Verdict {
  Status status = Status::Unknown;
  std::string certificate;               // matcher tag for CertifiedDS
  std::optional<ExactMatrix> witness;    // cospectral non-similar mate
  std::string witness_note;              // how the witness separates
  SearchStats stats;
  Scope scope = Scope::Symmetric;
};

/// The verdict pipeline, first hit wins:
///   (1) n <= 2 complete classification,
///   (2) n = 3 symmetric: the seven-segment classification (certifies
///       only in the symmetric scope; refutations carry to both),
///   (3) permutation matrices, (4) I/J/C, (5) the [I,C] segment,
///   (6) direct sums of C blocks, (7) the zero-diagonal block segment,
///   (8) two-block J recombination refutation, (9) mate search, else
///   Unknown. Every refutation witness is re-verified exactly before
///   the verdict is returned.
Verdict certify(const ExactMatrix& m, Scope scope, long budget = 2000, std::uint64_t seed = 1);

/// Searches for a cospectral, non-permutation-similar symmetric doubly
/// stochastic mate of a symmetric M (n >= 4): structured direct-sum
/// recombinations, the regular-graph route, then a numeric
/// isospectral search with rational reconstruction. Absence of a
/// witness is never a nonexistence claim.
std::optional<ExactMatrix> mate_search(const ExactMatrix& m, long budget, std::uint64_t seed,
                                       SearchStats* stats = nullptr);

struct Realization {
  ExactMatrix matrix;
  std::string description;
};

struct CharacterizationReport {
  std::vector<Rational> lambda;       // sorted descending
  std::string conclusion;             // unique / not-unique / not-realizable / unknown
  bool complete = false;              // is the conclusion a complete answer?
  std::vector<Realization> realizations;
};

/// The inverse question: which symmetric doubly stochastic matrices
/// have this spectrum, and is the realization unique up to
/// permutation? Complete for n <= 3, for the all-equal-tail segment,
/// and for +-1 spectra; otherwise reports whatever block realizations
/// the search finds.
CharacterizationReport spectrum_characterization(std::vector<Rational> lambda);

struct ConjectureScanReport {
  int n = 0;
  Rational trace;
  long samples = 0;
  long on_segment = 0;
  long refuted = 0;
  long unknown = 0;
  long certified_off_segment = 0;  // counterexample candidates
  std::vector<ExactMatrix> counterexample_candidates;
  std::uint64_t seed = 0;
  long budget = 0;
};

/// Samples the trace-a slice of the symmetric polytope and tries to
/// refute every sample lying off the conjectured segments ([I,C] and
/// the vertex segments [I,P], [C,P]). A certified sample off the
/// segments would be a counterexample candidate and is flagged.
ConjectureScanReport conjecture_scan(int n, const Rational& a, int samples, std::uint64_t seed = 1,
                                     long budget = 500);

/// Machine check behind the classical-counterexample chain: when M is
/// certified DS in the symmetric scope and has a zero entry, every
/// symmetric doubly stochastic realization of its spectrum is a
/// permutation image of M, hence has zero entries: no positive
/// realization exists.
struct PositivityObstruction {
  bool applies = false;
  std::string reason;
};
PositivityObstruction no_positive_realization(const ExactMatrix& m, long budget = 2000,
                                              std::uint64_t seed = 1);

}  // namespace dsm

#endif  // DSM_CERTIFY_HPP_
