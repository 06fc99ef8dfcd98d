#include "parityns/symtype.hpp"

#include <stdexcept>

namespace parityns {

namespace {

int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

SymLabel make_like(bool complex, PartLabel re, PartLabel im) {
  return complex ? SymLabel::complex(re, im) : SymLabel::real(re);
}

MultiIndex unit_index(int axis) {
  MultiIndex idx{0, 0, 0};
  idx[static_cast<std::size_t>(axis)] = 1;
  return idx;
}

MultiIndex pair_index(int a, int b) {
  MultiIndex idx{0, 0, 0};
  idx[static_cast<std::size_t>(a)] += 1;
  idx[static_cast<std::size_t>(b)] += 1;
  return idx;
}

}  // namespace

Parity m_reduce(const std::array<long long, 3>& a) { return Parity(mod2(a[0]), mod2(a[1]), mod2(a[2])); }

Parity m_reduce(const MultiIndex& a) { return Parity(mod2(a[0]), mod2(a[1]), mod2(a[2])); }

bool TypeTuple::is_real() const {
  for (const auto& l : labels)
    if (l.is_complex()) return false;
  return true;
}

std::optional<PartLabel> sum_part(PartLabel a, PartLabel b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity != b.parity) return std::nullopt;
  if (a.is_constant() && b.is_constant()) return PartLabel::constant();
  return PartLabel::of(a.parity);
}

PartLabel product_part(PartLabel a, PartLabel b) {
  if (a.is_zero() || b.is_zero()) return PartLabel::zero();
  if (a.is_constant() && b.is_constant()) return PartLabel::constant();
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return PartLabel::of(a.parity + b.parity);
}

PartLabel derivative_part(PartLabel a, const MultiIndex& idx) {
  if (idx[0] == 0 && idx[1] == 0 && idx[2] == 0) return a;
  if (a.is_zero() || a.is_constant()) return PartLabel::zero();
  return PartLabel::of(a.parity + m_reduce(idx));
}

std::optional<SymLabel> sum_label(const SymLabel& a, const SymLabel& b) {
  auto re = sum_part(a.re(), b.re());
  auto im = sum_part(a.im(), b.im());
  if (!re || !im) return std::nullopt;
  return make_like(a.is_complex() || b.is_complex(), *re, *im);
}

std::optional<SymLabel> product_label(const SymLabel& a, const SymLabel& b) {
  // (a_re + i a_im)(b_re + i b_im) = (a_re b_re - a_im b_im) + i (a_im b_re + a_re b_im)
  auto re = sum_part(product_part(a.re(), b.re()), product_part(a.im(), b.im()));
  auto im = sum_part(product_part(a.im(), b.re()), product_part(a.re(), b.im()));
  if (!re || !im) return std::nullopt;
  return make_like(a.is_complex() || b.is_complex(), *re, *im);
}

std::optional<SymLabel> convolution_label(const SymLabel& a, const SymLabel& b) { return product_label(a, b); }

SymLabel derivative_label(const SymLabel& a, const MultiIndex& idx) {
  return make_like(a.is_complex(), derivative_part(a.re(), idx), derivative_part(a.im(), idx));
}

SymLabel radial_kernel_label(const SymLabel& a) { return a; }

bool matched_check(const TypeTuple& u, const TypeTuple& v) {
  for (int l = 0; l < 3; ++l)
    if (!product_label(u[l], v[l])) return false;
  return true;
}

std::optional<TypeTuple> advect_label(const TypeTuple& u, const TypeTuple& v) {
  TypeTuple out;
  for (int l = 0; l < 3; ++l) {
    std::optional<SymLabel> acc;
    for (int j = 0; j < 3; ++j) {
      auto term = product_label(u[j], derivative_label(v[l], unit_index(j)));
      if (!term) return std::nullopt;
      acc = acc ? sum_label(*acc, *term) : term;
      if (!acc) return std::nullopt;
    }
    out[l] = *acc;
  }
  return out;
}

std::optional<SymLabel> g_label(const TypeTuple& u, const TypeTuple& v) {
  std::optional<SymLabel> acc;
  for (int l = 0; l < 3; ++l) {
    for (int lp = 0; lp < 3; ++lp) {
      auto prod = product_label(u[l], v[lp]);
      if (!prod) return std::nullopt;
      auto term = derivative_label(*prod, pair_index(l, lp));
      acc = acc ? sum_label(*acc, term) : term;
      if (!acc) return std::nullopt;
    }
  }
  return acc;
}

std::optional<TypeTuple> c_label(const TypeTuple& u, const TypeTuple& v) {
  auto a = advect_label(u, v);
  auto g = g_label(u, v);
  if (!a || !g) return std::nullopt;
  const SymLabel pressure = radial_kernel_label(*g);
  TypeTuple out;
  for (int l = 0; l < 3; ++l) {
    auto c = sum_label((*a)[l], derivative_label(pressure, unit_index(l)));
    if (!c) return std::nullopt;
    out[l] = *c;
  }
  return out;
}

std::optional<TypeTuple> bilinear_B_label(const TypeTuple& u, const TypeTuple& v) {
  auto c = c_label(u, v);
  if (!c) return std::nullopt;
  for (auto& l : c->labels) l = radial_kernel_label(l);
  return c;
}

TypeTuple solenoidal_tuple(Parity alpha0, Parity beta0) {
  TypeTuple t;
  for (int l = 0; l < 3; ++l) t[l] = SymLabel::complex(Parity::unit(l) + alpha0, Parity::unit(l) + beta0);
  return t;
}

TypeTuple solenoidal_tuple(Parity alpha0) {
  TypeTuple t;
  for (int l = 0; l < 3; ++l) t[l] = SymLabel::real(Parity::unit(l) + alpha0);
  return t;
}

std::string to_string(Parity p) {
  std::string s(3, '0');
  for (int a = 0; a < 3; ++a) s[static_cast<std::size_t>(a)] = p.bit(a) ? '1' : '0';
  return s;
}

std::string to_string(PartLabel p) {
  std::string s = to_string(p.parity);
  if (p.is_constant()) s += 'c';
  if (p.is_zero()) s += 'z';
  return s;
}

std::string to_string(const SymLabel& l) {
  if (!l.is_complex()) return to_string(l.re());
  return to_string(l.re()) + "+i" + to_string(l.im());
}

std::string to_string(const TypeTuple& t) {
  return "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + ")";
}

Parity parse_parity(std::string_view s) {
  if (s.size() != 3) throw std::invalid_argument("parity must have 3 bits: '" + std::string(s) + "'");
  int b[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bad parity bit in '" + std::string(s) + "'");
    b[i] = s[i] - '0';
  }
  return Parity(b[0], b[1], b[2]);
}

PartLabel parse_part(std::string_view s) {
  if (s.size() == 4) {
    const Parity p = parse_parity(s.substr(0, 3));
    if (!p.is_even()) throw std::invalid_argument("constant/zero parts must be labelled 000: '" + std::string(s) + "'");
    if (s[3] == 'c') return PartLabel::constant();
    if (s[3] == 'z') return PartLabel::zero();
    throw std::invalid_argument("unknown label suffix in '" + std::string(s) + "'");
  }
  return PartLabel::of(parse_parity(s));
}

SymLabel parse_label(std::string_view s) {
  const auto plus = s.find("+i");
  if (plus == std::string_view::npos) return SymLabel::real(parse_part(s));
  return SymLabel::complex(parse_part(s.substr(0, plus)), parse_part(s.substr(plus + 2)));
}

TypeTuple parse_tuple(std::string_view s) {
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced tuple: '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
  }
  TypeTuple t;
  for (int l = 0; l < 3; ++l) {
    const auto comma = s.find(',');
    if ((l < 2) != (comma != std::string_view::npos))
      throw std::invalid_argument("tuple needs exactly 3 labels: '" + std::string(s) + "'");
    t[l] = parse_label(s.substr(0, comma));
    if (l < 2) s = s.substr(comma + 1);
  }
  return t;
}

}  // namespace parityns
