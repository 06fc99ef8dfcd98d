#pragma once

// Classification of the kinds of symmetric solenoidal vector fields.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parityns/symtype.hpp"

namespace parityns {

enum class CaseId { R1, R2, R3, C0, Ci, Cii, Ciii, Civ, Cv, Cvi, Cvii };

const std::vector<CaseId>& real_cases();
const std::vector<CaseId>& complex_cases();

/// Free parameters of a case; axes are 0-based internally, printed 1-based.
struct CaseParams {
  std::optional<int> tau;
  std::optional<int> tau2;
  std::optional<Parity> alpha0;
  std::optional<Parity> beta0;

  auto operator<=>(const CaseParams&) const = default;
};

struct CaseTag {
  CaseId id = CaseId::R1;
  CaseParams params;

  auto operator<=>(const CaseTag&) const = default;
};

std::string to_string(CaseId id);
/// e.g. "Ci(tau=2,alpha0=101,beta0=000)"
std::string to_string(const CaseTag& tag);
std::optional<CaseId> parse_case_id(std::string_view s);

/// Every parameter instantiation of a case, in a fixed order.
std::vector<CaseTag> case_instances(CaseId id);
/// Raw tuple of one instantiation, constant flags as written in the case.
TypeTuple instantiate(const CaseTag& tag);
/// Raw tuples of all instantiations (set semantics).
std::set<TypeTuple> generate_case(CaseId id);

/// Kind identity: a tuple whose constant parts all happen to carry the label a
/// generic (flag-free) kind would give them is that generic kind.
TypeTuple canonical_kind(const TypeTuple& t);

struct CaseCount {
  std::size_t raw = 0;
  std::size_t fresh = 0;    // kinds not produced by an earlier case
  std::size_t overlap = 0;  // raw - fresh
};

struct Census {
  std::set<TypeTuple> tuples;
  std::map<CaseId, CaseCount> by_case;
  std::map<TypeTuple, CaseTag> witness;
  std::size_t total = 0;
};

const Census& census_real();
const Census& census_complex();

struct OracleResult {
  std::size_t multiset_size = 0;
  std::set<TypeTuple> distinct;
  std::size_t total = 0;
};

/// Flat recount with no per-case bookkeeping, on string keys.
OracleResult dedupe_oracle(bool complex);

struct Admissibility {
  bool admissible = false;
  std::optional<TypeTuple> kind;  // census representative
  std::optional<CaseTag> witness;
};

/// Membership in the census matching the tuple's label kind. Unflagged 000
/// parts are also tried as constants, so an all-"000" real tuple is R3.
Admissibility admissible(const TypeTuple& t);

}  // namespace parityns
