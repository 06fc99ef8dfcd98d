#include "parityns/selftest.hpp"

#include <functional>

#include "parityns/enumerate.hpp"

namespace parityns {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what();
    }
  }

  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string opt_str(const std::optional<SymLabel>& l) { return l ? to_string(*l) : "none"; }

std::vector<MultiIndex> small_indices() {
  std::vector<MultiIndex> out;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) out.push_back({a, b, c});
  return out;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

bool flag_free(const SymLabel& l) { return l.re().flag == PartFlag::none && l.im().flag == PartFlag::none; }

CheckResult parity_group() {
  Check c("parity group laws");
  const auto ps = all_parities();
  for (Parity a : ps) {
    c.expect(a + Parity{} == a, [&] { return "identity fails at " + to_string(a); });
    c.expect((a + a).is_even(), [&] { return "self-inverse fails at " + to_string(a); });
    for (Parity b : ps) {
      c.expect(a + b == b + a, [&] { return "commutativity " + to_string(a) + "," + to_string(b); });
      for (Parity d : ps)
        c.expect((a + b) + d == a + (b + d), [&] { return "associativity at " + to_string(a); });
    }
  }
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      for (int k = -3; k <= 3; ++k)
        for (int l = -3; l <= 3; ++l) {
          const MultiIndex x{i, j, k}, y{l, k, i};
          c.expect(m_reduce(add(x, y)) == m_reduce(x) + m_reduce(y), [] { return std::string("m not additive"); });
        }
  return c.done();
}

CheckResult sum_laws(const std::vector<SymLabel>& labels) {
  Check c("sum laws");
  const SymLabel zr = SymLabel::real(PartLabel::zero());
  for (const auto& a : labels) {
    c.expect(sum_label(a, zr) == a, [&] { return "zero not neutral for " + to_string(a); });
    if (!a.is_zero()) c.expect(sum_label(a, a).has_value(), [&] { return "a+a undefined for " + to_string(a); });
    for (const auto& b : labels) {
      const auto ab = sum_label(a, b);
      c.expect(ab == sum_label(b, a), [&] { return "sum not commutative " + to_string(a) + " " + to_string(b); });
      if (a.is_complex() == b.is_complex() && flag_free(a) && flag_free(b))
        c.expect(ab.has_value() == (a == b), [&] { return "sum of distinct pure labels " + to_string(a); });
      for (const auto& d : labels) {
        const auto l = ab ? sum_label(*ab, d) : std::nullopt;
        const auto bd = sum_label(b, d);
        const auto r = bd ? sum_label(a, *bd) : std::nullopt;
        c.expect(l == r, [&] { return "sum not associative at " + to_string(a) + "," + to_string(b) + "," + to_string(d); });
      }
    }
  }
  return c.done();
}

CheckResult product_laws(const std::vector<SymLabel>& labels) {
  Check c("product laws");
  const SymLabel one = SymLabel::real(PartLabel::constant());
  const SymLabel zr = SymLabel::real(PartLabel::zero());
  for (const auto& a : labels) {
    c.expect(product_label(one, a) == (a.is_complex() ? a : SymLabel::real(a.re())),
             [&] { return "constant not a unit for " + to_string(a); });
    const auto z = product_label(zr, a);
    c.expect(z && z->is_zero(), [&] { return "zero not absorbing for " + to_string(a); });
    for (const auto& b : labels) {
      const auto ab = product_label(a, b);
      c.expect(ab == product_label(b, a), [&] { return "product not commutative " + to_string(a) + " " + to_string(b); });
      c.expect(ab == convolution_label(a, b), [&] { return "convolution differs from product"; });
      if (!a.is_complex() && !b.is_complex() && flag_free(a) && flag_free(b))
        c.expect(ab == SymLabel::real(a.re().parity + b.re().parity),
                 [&] { return "real product rule " + to_string(a) + " " + to_string(b); });
      if (a.is_complex() && b.is_complex() && flag_free(a) && flag_free(b)) {
        const bool matched = a.re().parity + b.re().parity == a.im().parity + b.im().parity;
        const auto want = matched ? std::optional<SymLabel>(SymLabel::complex(a.re().parity + b.re().parity,
                                                                              a.im().parity + b.re().parity))
                                  : std::nullopt;
        c.expect(ab == want, [&] { return "complex product rule " + to_string(a) + " " + to_string(b); });
      }
      for (const auto& d : labels) {
        const auto bd = product_label(b, d);
        const auto l = ab ? product_label(*ab, d) : std::nullopt;
        const auto r = bd ? product_label(a, *bd) : std::nullopt;
        if (l && r)
          c.expect(*l == *r, [&] { return "product not associative at " + to_string(a) + "," + to_string(b) + "," + to_string(d); });
        // distributivity where all pieces exist
        const auto s = sum_label(b, d);
        const auto ad = product_label(a, d);
        if (s && ab && ad) {
          const auto lhs = product_label(a, *s);
          const auto rhs = sum_label(*ab, *ad);
          if (lhs && rhs) c.expect(*lhs == *rhs, [&] { return "distributivity at " + to_string(a); });
        }
      }
    }
  }
  return c.done();
}

CheckResult derivative_laws(const std::vector<SymLabel>& labels) {
  Check c("derivative composition");
  const auto idx = small_indices();
  for (const auto& a : labels) {
    c.expect(derivative_label(a, {0, 0, 0}) == a, [&] { return "d^0 not identity at " + to_string(a); });
    for (const auto& i : idx) {
      const SymLabel di = derivative_label(a, i);
      if (flag_free(a))
        c.expect(di.re().parity == a.re().parity + m_reduce(i) &&
                     (!a.is_complex() || di.im().parity == a.im().parity + m_reduce(i)),
                 [&] { return "derivative shift at " + to_string(a); });
      for (const auto& j : idx)
        c.expect(derivative_label(di, j) == derivative_label(a, add(i, j)),
                 [&] { return "d^j d^i != d^(i+j) at " + to_string(a); });
    }
  }
  // Leibniz: d(ab) agrees with da.b + a.db whenever all of them exist.
  for (const auto& a : labels)
    for (const auto& b : labels)
      for (int j = 0; j < 3; ++j) {
        const MultiIndex e{j == 0, j == 1, j == 2};
        const auto ab = product_label(a, b);
        const auto t1 = product_label(derivative_label(a, e), b);
        const auto t2 = product_label(a, derivative_label(b, e));
        if (!ab || !t1 || !t2) continue;
        const auto rhs = sum_label(*t1, *t2);
        const SymLabel lhs = derivative_label(*ab, e);
        if (rhs && !lhs.is_zero() && !rhs->is_zero())
          c.expect(lhs == *rhs, [&] { return "Leibniz at " + to_string(a) + "," + to_string(b) + " -> " + opt_str(rhs); });
      }
  return c.done();
}

CheckResult kernel_invariance(const std::vector<SymLabel>& labels) {
  Check c("radial kernel invariance");
  for (const auto& a : labels) {
    c.expect(radial_kernel_label(a) == a, [&] { return "kernel changed " + to_string(a); });
    for (const auto& i : small_indices())
      c.expect(radial_kernel_label(derivative_label(a, i)) == derivative_label(radial_kernel_label(a), i),
               [&] { return "kernel/derivative commutation at " + to_string(a); });
  }
  return c.done();
}

CheckResult bilinear_complex() {
  Check c("matched/bilinear consistency (complex generic kinds)");
  const auto ps = all_parities();
  for (Parity a0 : ps)
    for (Parity b0 : ps)
      for (Parity a1 : ps)
        for (Parity b1 : ps) {
          const TypeTuple u = solenoidal_tuple(a0, b0);
          const TypeTuple v = solenoidal_tuple(a1, b1);
          const bool matched = matched_check(u, v);
          c.expect(matched == (a0 + a1 == b0 + b1), [&] { return "matched condition at " + to_string(u); });
          const auto b = bilinear_B_label(u, v);
          c.expect(b.has_value() == matched, [&] { return "B defined iff matched fails at " + to_string(u) + " x " + to_string(v); });
          if (!b) continue;
          for (int l = 0; l < 3; ++l) {
            const SymLabel want = SymLabel::complex(Parity::unit(l) + a0 + a1, Parity::unit(l) + a1 + b0);
            c.expect((*b)[l] == want, [&] { return "closed form mismatch at " + to_string(u) + " x " + to_string(v); });
          }
        }
  return c.done();
}

CheckResult bilinear_real() {
  Check c("bilinear label (real generic kinds)");
  for (Parity a0 : all_parities())
    for (Parity a1 : all_parities()) {
      const auto b = bilinear_B_label(solenoidal_tuple(a0), solenoidal_tuple(a1));
      c.expect(b.has_value(), [&] { return "real B undefined"; });
      if (!b) continue;
      for (int l = 0; l < 3; ++l)
        c.expect((*b)[l] == SymLabel::real(Parity::unit(l) + a0 + a1), [&] { return "real closed form at " + to_string(a0); });
    }
  return c.done();
}

CheckResult text_roundtrip(const std::vector<SymLabel>& labels) {
  Check c("text round trip");
  for (const auto& a : labels) c.expect(parse_label(to_string(a)) == a, [&] { return to_string(a); });
  for (const Census* census : {&census_real(), &census_complex()})
    for (const auto& t : census->tuples) c.expect(parse_tuple(to_string(t)) == t, [&] { return to_string(t); });
  return c.done();
}

}  // namespace

std::vector<PartLabel> all_part_labels() {
  std::vector<PartLabel> out;
  for (Parity p : all_parities()) out.push_back(PartLabel::of(p));
  out.push_back(PartLabel::constant());
  out.push_back(PartLabel::zero());
  return out;
}

std::vector<SymLabel> all_labels() {
  std::vector<SymLabel> out;
  const auto parts = all_part_labels();
  for (const auto& p : parts) out.push_back(SymLabel::real(p));
  for (const auto& re : parts)
    for (const auto& im : parts) out.push_back(SymLabel::complex(re, im));
  return out;
}

std::vector<CheckResult> run_symtype_selftest() {
  const auto labels = all_labels();
  return {parity_group(),         sum_laws(labels),    product_laws(labels), derivative_laws(labels),
          kernel_invariance(labels), bilinear_complex(), bilinear_real(),      text_roundtrip(labels)};
}

}  // namespace parityns
