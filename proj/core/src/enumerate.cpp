#include "parityns/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace parityns {

namespace {

PartLabel generic(int l, Parity shift) { return PartLabel::of(Parity::unit(l) + shift); }

bool has_flags(const TypeTuple& t) {
  for (const auto& l : t.labels) {
    if (l.re().flag != PartFlag::none) return true;
    if (l.is_complex() && l.im().flag != PartFlag::none) return true;
  }
  return false;
}

// Tu_l = m(e_l + a0) (+ i m(e_l + b0)) for some shifts, no flags.
bool is_generic(const TypeTuple& t) {
  if (has_flags(t)) return false;
  const bool cplx = t[0].is_complex();
  for (int l = 0; l < 3; ++l)
    if (t[l].is_complex() != cplx) return false;
  const Parity a0 = t[0].re().parity + Parity::unit(0);
  const Parity b0 = t[0].im().parity + Parity::unit(0);
  for (int l = 1; l < 3; ++l) {
    if (t[l].re().parity + Parity::unit(l) != a0) return false;
    if (cplx && t[l].im().parity + Parity::unit(l) != b0) return false;
  }
  return true;
}

PartLabel strip(PartLabel p) { return p.is_constant() ? PartLabel::of(Parity{}) : p; }

Census build_census(const std::vector<CaseId>& cases) {
  Census c;
  for (CaseId id : cases) {
    CaseCount count;
    for (const CaseTag& tag : case_instances(id)) {
      ++count.raw;
      const TypeTuple kind = canonical_kind(instantiate(tag));
      if (c.tuples.insert(kind).second) {
        ++count.fresh;
        c.witness.emplace(kind, tag);
      }
    }
    count.overlap = count.raw - count.fresh;
    c.by_case[id] = count;
  }
  c.total = c.tuples.size();
  return c;
}

}  // namespace

const std::vector<CaseId>& real_cases() {
  static const std::vector<CaseId> v{CaseId::R1, CaseId::R2, CaseId::R3};
  return v;
}

const std::vector<CaseId>& complex_cases() {
  static const std::vector<CaseId> v{CaseId::C0,  CaseId::Ci, CaseId::Cii, CaseId::Ciii,
                                     CaseId::Civ, CaseId::Cv, CaseId::Cvi, CaseId::Cvii};
  return v;
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::R1: return "R1";
    case CaseId::R2: return "R2";
    case CaseId::R3: return "R3";
    case CaseId::C0: return "C0";
    case CaseId::Ci: return "Ci";
    case CaseId::Cii: return "Cii";
    case CaseId::Ciii: return "Ciii";
    case CaseId::Civ: return "Civ";
    case CaseId::Cv: return "Cv";
    case CaseId::Cvi: return "Cvi";
    case CaseId::Cvii: return "Cvii";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view s) {
  for (const auto* list : {&real_cases(), &complex_cases()})
    for (CaseId id : *list)
      if (to_string(id) == s) return id;
  return std::nullopt;
}

std::string to_string(const CaseTag& tag) {
  std::string out = to_string(tag.id);
  std::vector<std::string> parts;
  const auto& p = tag.params;
  if (p.tau) parts.push_back("tau=" + std::to_string(*p.tau + 1));
  if (p.tau2) parts.push_back("tau2=" + std::to_string(*p.tau2 + 1));
  if (p.alpha0) parts.push_back("alpha0=" + to_string(*p.alpha0));
  if (p.beta0) parts.push_back("beta0=" + to_string(*p.beta0));
  if (parts.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ')';
}

std::vector<CaseTag> case_instances(CaseId id) {
  std::vector<CaseTag> out;
  const auto ps = all_parities();
  auto add = [&](CaseParams p) { out.push_back({id, p}); };
  switch (id) {
    case CaseId::R1:
      for (Parity a : ps) add({{}, {}, a, {}});
      break;
    case CaseId::R2:
      for (int tau = 0; tau < 3; ++tau)
        for (Parity a : ps) add({tau, {}, a, {}});
      break;
    case CaseId::R3:
    case CaseId::Cvii:
      add({});
      break;
    case CaseId::C0:
      for (Parity a : ps)
        for (Parity b : ps) add({{}, {}, a, b});
      break;
    case CaseId::Ci:
    case CaseId::Cii:
    case CaseId::Ciii:
      for (int tau = 0; tau < 3; ++tau)
        for (Parity a : ps)
          for (Parity b : ps) add({tau, {}, a, b});
      break;
    case CaseId::Civ:
      for (int tau = 0; tau < 3; ++tau)
        for (int tau2 = 0; tau2 < 3; ++tau2) {
          if (tau2 == tau) continue;
          for (Parity a : ps)
            for (Parity b : ps) add({tau, tau2, a, b});
        }
      break;
    case CaseId::Cv:
      for (Parity b : ps) add({{}, {}, {}, b});
      break;
    case CaseId::Cvi:
      for (Parity a : ps) add({{}, {}, a, {}});
      break;
  }
  return out;
}

TypeTuple instantiate(const CaseTag& tag) {
  const auto& p = tag.params;
  const Parity a0 = p.alpha0.value_or(Parity{});
  const Parity b0 = p.beta0.value_or(Parity{});
  const int tau = p.tau.value_or(-1);
  const int tau2 = p.tau2.value_or(-1);
  const PartLabel c = PartLabel::constant();
  TypeTuple t;
  for (int l = 0; l < 3; ++l) {
    const PartLabel re = generic(l, a0);
    const PartLabel im = generic(l, b0);
    switch (tag.id) {
      case CaseId::R1: t[l] = SymLabel::real(re); break;
      case CaseId::R2: t[l] = SymLabel::real(l == tau ? c : re); break;
      case CaseId::R3: t[l] = SymLabel::real(c); break;
      case CaseId::C0: t[l] = SymLabel::complex(re, im); break;
      case CaseId::Ci: t[l] = SymLabel::complex(l == tau ? c : re, im); break;
      case CaseId::Cii: t[l] = SymLabel::complex(re, l == tau ? c : im); break;
      case CaseId::Ciii: t[l] = l == tau ? SymLabel::complex(c, c) : SymLabel::complex(re, im); break;
      case CaseId::Civ: t[l] = SymLabel::complex(l == tau ? c : re, l == tau2 ? c : im); break;
      case CaseId::Cv: t[l] = SymLabel::complex(c, im); break;
      case CaseId::Cvi: t[l] = SymLabel::complex(re, c); break;
      case CaseId::Cvii: t[l] = SymLabel::complex(c, c); break;
    }
  }
  return t;
}

std::set<TypeTuple> generate_case(CaseId id) {
  std::set<TypeTuple> out;
  for (const CaseTag& tag : case_instances(id)) out.insert(instantiate(tag));
  return out;
}

TypeTuple canonical_kind(const TypeTuple& t) {
  TypeTuple s = t;
  for (auto& l : s.labels)
    l = l.is_complex() ? SymLabel::complex(strip(l.re()), strip(l.im())) : SymLabel::real(strip(l.re()));
  return is_generic(s) ? s : t;
}

const Census& census_real() {
  static const Census c = build_census(real_cases());
  return c;
}

const Census& census_complex() {
  static const Census c = build_census(complex_cases());
  return c;
}

OracleResult dedupe_oracle(bool complex) {
  std::vector<std::string> flat;
  std::unordered_set<std::string> generic_keys;
  for (CaseId id : complex ? complex_cases() : real_cases()) {
    for (const CaseTag& tag : case_instances(id)) {
      const std::string key = to_string(instantiate(tag));
      flat.push_back(key);
      if (tag.id == CaseId::R1 || tag.id == CaseId::C0) generic_keys.insert(key);
    }
  }
  OracleResult r;
  r.multiset_size = flat.size();
  std::unordered_set<std::string> seen;
  for (const std::string& key : flat) {
    std::string stripped = key;
    stripped.erase(std::remove(stripped.begin(), stripped.end(), 'c'), stripped.end());
    seen.insert(generic_keys.count(stripped) ? stripped : key);
  }
  for (const std::string& key : seen) r.distinct.insert(parse_tuple(key));
  r.total = seen.size();
  return r;
}

Admissibility admissible(const TypeTuple& t) {
  const bool cplx = t[0].is_complex();
  for (int l = 1; l < 3; ++l)
    if (t[l].is_complex() != cplx) return {};
  const Census& census = cplx ? census_complex() : census_real();

  // Unflagged 000 parts, as (component, is_imag) slots.
  std::vector<std::pair<int, bool>> slots;
  for (int l = 0; l < 3; ++l) {
    if (t[l].re() == PartLabel::of(Parity{})) slots.emplace_back(l, false);
    if (cplx && t[l].im() == PartLabel::of(Parity{})) slots.emplace_back(l, true);
  }
  std::vector<unsigned> subsets(1u << slots.size());
  for (unsigned s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

  for (unsigned s : subsets) {
    TypeTuple cand = t;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!(s >> i & 1u)) continue;
      auto [l, imag] = slots[i];
      cand[l] = cplx ? (imag ? SymLabel::complex(cand[l].re(), PartLabel::constant())
                             : SymLabel::complex(PartLabel::constant(), cand[l].im()))
                     : SymLabel::real(PartLabel::constant());
    }
    const TypeTuple kind = canonical_kind(cand);
    auto it = census.witness.find(kind);
    if (it != census.witness.end()) return {true, kind, it->second};
  }
  return {};
}

}  // namespace parityns
