#pragma once

// Parity labels and their propagation rules.
//
// A symmetric real function f on R^3 (or on the 2*pi torus) satisfies
//   f(s_1 x_1, s_2 x_2, s_3 x_3) = (+/-) f(x)   for every sign pattern s,
// and the sign depends on s only through three bits: bit l is set when f is
// odd in x_l. Complex functions carry one such label for the real part and
// one for the imaginary part.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parityns {

/// Element of (Z/2)^3. Bit order is (x1, x2, x3).
class Parity {
 public:
  constexpr Parity() = default;
  constexpr Parity(int b1, int b2, int b3)
      : bits_(static_cast<std::uint8_t>((b1 & 1) | ((b2 & 1) << 1) | ((b3 & 1) << 2))) {}

  static constexpr Parity from_mask(unsigned mask) {
    Parity p;
    p.bits_ = static_cast<std::uint8_t>(mask & 7u);
    return p;
  }
  /// e_l, with axis in {0, 1, 2}.
  static constexpr Parity unit(int axis) { return from_mask(1u << axis); }

  constexpr unsigned mask() const { return bits_; }
  constexpr int bit(int axis) const { return (bits_ >> axis) & 1; }
  constexpr bool is_even() const { return bits_ == 0; }

  friend constexpr Parity operator+(Parity a, Parity b) { return from_mask(a.bits_ ^ b.bits_); }
  constexpr Parity& operator+=(Parity o) {
    bits_ ^= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const Parity&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

constexpr std::array<Parity, 8> all_parities() {
  std::array<Parity, 8> out{};
  for (unsigned m = 0; m < 8; ++m) out[m] = Parity::from_mask(m);
  return out;
}

using MultiIndex = std::array<int, 3>;

/// Component-wise reduction mod 2 (negative entries allowed).
Parity m_reduce(const std::array<long long, 3>& a);
Parity m_reduce(const MultiIndex& a);

enum class PartFlag : std::uint8_t { none, constant, zero };

/// Label of one real part. Constant and identically-zero parts carry parity 000
/// plus a flag; the zero flag is compatible with every label.
struct PartLabel {
  Parity parity{};
  PartFlag flag = PartFlag::none;

  static constexpr PartLabel of(Parity p) { return {p, PartFlag::none}; }
  static constexpr PartLabel constant() { return {Parity{}, PartFlag::constant}; }
  static constexpr PartLabel zero() { return {Parity{}, PartFlag::zero}; }

  constexpr bool is_zero() const { return flag == PartFlag::zero; }
  constexpr bool is_constant() const { return flag == PartFlag::constant; }

  constexpr auto operator<=>(const PartLabel&) const = default;
};

enum class LabelKind : std::uint8_t { real_only, complex };

/// Value of the T operator: a real label, or a (real part, imaginary part) pair.
class SymLabel {
 public:
  SymLabel() = default;

  static SymLabel real(PartLabel re) { return SymLabel(re, PartLabel::zero(), LabelKind::real_only); }
  static SymLabel real(Parity p) { return real(PartLabel::of(p)); }
  static SymLabel complex(PartLabel re, PartLabel im) { return SymLabel(re, im, LabelKind::complex); }
  static SymLabel complex(Parity re, Parity im) { return complex(PartLabel::of(re), PartLabel::of(im)); }

  LabelKind kind() const { return kind_; }
  bool is_complex() const { return kind_ == LabelKind::complex; }
  const PartLabel& re() const { return re_; }
  /// Zero-flagged for real-only labels.
  const PartLabel& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// Same label viewed as complex (imaginary part identically zero).
  SymLabel as_complex() const { return complex(re_, im_); }

  auto operator<=>(const SymLabel&) const = default;

 private:
  SymLabel(PartLabel re, PartLabel im, LabelKind k) : re_(re), im_(im), kind_(k) {}

  PartLabel re_{};
  PartLabel im_ = PartLabel::zero();
  LabelKind kind_ = LabelKind::real_only;
};

/// One label per velocity component: a "kind" of symmetric vector field.
struct TypeTuple {
  std::array<SymLabel, 3> labels{};

  const SymLabel& operator[](int l) const { return labels[static_cast<std::size_t>(l)]; }
  SymLabel& operator[](int l) { return labels[static_cast<std::size_t>(l)]; }

  bool is_real() const;

  auto operator<=>(const TypeTuple&) const = default;
};

// --- part-level rules -------------------------------------------------------

/// nullopt when two differently-labelled nonzero parts are added.
std::optional<PartLabel> sum_part(PartLabel a, PartLabel b);
PartLabel product_part(PartLabel a, PartLabel b);
PartLabel derivative_part(PartLabel a, const MultiIndex& idx);

// --- label rules ------------------------------------------------------------

/// nullopt is the Incompatible outcome: the sum is not symmetric.
std::optional<SymLabel> sum_label(const SymLabel& a, const SymLabel& b);

/// nullopt is the Unmatched outcome. Real labels multiply by mod-2 addition;
/// complex labels need m(a.re + b.re) = m(a.im + b.im) unless zero parts
/// remove one of the competing terms.
std::optional<SymLabel> product_label(const SymLabel& a, const SymLabel& b);
std::optional<SymLabel> convolution_label(const SymLabel& a, const SymLabel& b);

SymLabel derivative_label(const SymLabel& a, const MultiIndex& idx);

/// Heat semigroup and inverse Laplacian have radial kernels: labels unchanged.
SymLabel radial_kernel_label(const SymLabel& a);

bool matched_check(const TypeTuple& u, const TypeTuple& v);

/// Type-level u.grad(v).
std::optional<TypeTuple> advect_label(const TypeTuple& u, const TypeTuple& v);
/// Type-level sum_{l,l'} d_l d_l' (u_l v_l').
std::optional<SymLabel> g_label(const TypeTuple& u, const TypeTuple& v);
/// Type-level P grad(u (x) v) = A + (-Delta)^{-1} grad G.
std::optional<TypeTuple> c_label(const TypeTuple& u, const TypeTuple& v);
/// Type-level Duhamel term B(u, v); the heat kernel does not change labels.
std::optional<TypeTuple> bilinear_B_label(const TypeTuple& u, const TypeTuple& v);

/// Tu_l = m(e_l + alpha0) + i m(e_l + beta0).
TypeTuple solenoidal_tuple(Parity alpha0, Parity beta0);
/// Tu_l = m(e_l + alpha0), real.
TypeTuple solenoidal_tuple(Parity alpha0);

// --- text form ---------------------------------------------------------------
// Real "101"; complex "101+i010"; suffix "c" for constant, "z" for zero parts.

std::string to_string(Parity p);
std::string to_string(PartLabel p);
std::string to_string(const SymLabel& l);
/// "(100,010,001)"
std::string to_string(const TypeTuple& t);

Parity parse_parity(std::string_view s);
PartLabel parse_part(std::string_view s);
SymLabel parse_label(std::string_view s);
/// Accepts "(a,b,c)" or "a,b,c".
TypeTuple parse_tuple(std::string_view s);

}  // namespace parityns
