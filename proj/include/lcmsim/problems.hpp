#pragma once

#include "lcmsim/engine.hpp"

namespace lcmsim {

enum class Verdict { HOLDS, FAILS, UNDECIDED };

const char* verdict_name(Verdict v);

/// Exit-code convention shared with the CLI: 0 HOLDS, 1 FAILS,
/// 2 UNDECIDED-AT-HORIZON.
inline int verdict_exit_code(Verdict v) { return static_cast<int>(v); }

struct Witness {
  Rational time;
  std::string observed;
  std::string expected;
};

struct PredicateReport {
  Verdict verdict = Verdict::UNDECIDED;
  std::optional<Witness> witness;  // always present on FAILS
  std::string note;

  std::string str() const;
};

/// Every joint-stop distance must be a dyadic rational multiple of the
/// initial distance. Worked on squared distances: the ratio must be the
/// square of a dyadic rational. Initial distance zero is an error.
PredicateReport check_dmsd(const Trace& trace);

/// Rendezvous with exactly one move each, stable to the horizon.
PredicateReport check_rdv1(const Trace& trace);

/// One robot moves at least twice while the other stops after at most
/// one move.
PredicateReport check_am(const Trace& trace);

/// Disjunction of the two above.
PredicateReport check_rdam(const Trace& trace);

/// Each robot moves exactly once, ending somewhere else.
PredicateReport check_sm(const Trace& trace);

/// Distance never increases and the final distance is within
/// eps * initial. Monotonicity is checked exactly on each affine piece
/// of the motion; UNDECIDED when monotone but not yet converged.
PredicateReport check_mcv(const Trace& trace, const Rational& eps);

/// The joint-stop configuration sequence is a turn-and-shrink dance:
/// each step is a quarter rotation about the midpoint or a pivot-and-
/// shrink about one endpoint, and lands inside the square frame from
/// two configurations back.
PredicateReport check_sro(const Trace& trace);

/// Stationary configurations follow the doubling map away from the
/// initial center of gravity for `steps` steps. Requires a gridded
/// trace.
PredicateReport check_cge(const Trace& trace, int steps);

/// Is `z` inside (or on) the square whose diagonal is the segment pq?
bool in_square_with_diagonal(const Point& z, const Point& p, const Point& q);

/// Named dispatch used by the CLI; knows "dmsd", "rdv1", "am", "rdam",
/// "sm", "mcv", "sro", "cge".
PredicateReport check_predicate(const std::string& id, const Trace& trace,
                                const Rational& eps, int steps);

}  // namespace lcmsim
