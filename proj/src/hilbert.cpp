#include "mukai_lab/hilbert.hpp"

namespace mukai_lab {

namespace {

void check_n(long n) {
  if (n < 2) fail(Err::n_too_small, "the T-bearing model needs n >= 2");
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

bool HilbClass::is_zero() const {
  for (const Int& v : pic)
    if (v != 0) return false;
  for (const Int& v : trans)
    if (v != 0) return false;
  return t == 0;
}

void HilbClass::reduce() {
  if (scale == 0) fail(Err::bad_input, "zero denominator in HilbClass");
  Int g = scale;
  auto fold = [&g](const Int& v) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t()); };
  for (const Int& v : pic) fold(v);
  for (const Int& v : trans) fold(v);
  fold(t);
  if (g < 0) g = -g;
  if (scale < 0) g = -g;  // keep scale positive
  if (g != 1) {
    for (Int& v : pic) v /= g;
    for (Int& v : trans) v /= g;
    t /= g;
    scale /= g;
  }
}

HilbClass operator+(const HilbClass& a, const HilbClass& b) {
  HilbClass r;
  Int l;
  mpz_lcm(l.get_mpz_t(), a.scale.get_mpz_t(), b.scale.get_mpz_t());
  Int fa = l / a.scale, fb = l / b.scale;
  IntVec ap = a.pic, bp = b.pic;
  for (Int& v : ap) v *= fa;
  for (Int& v : bp) v *= fb;
  r.pic = add_vec(ap, bp);
  IntVec at = a.trans, bt = b.trans;
  for (Int& v : at) v *= fa;
  for (Int& v : bt) v *= fb;
  r.trans = add_vec(at, bt);
  r.t = fa * a.t + fb * b.t;
  r.scale = l;
  r.reduce();
  return r;
}

HilbClass operator-(const HilbClass& a, const HilbClass& b) {
  return a + Int(-1) * b;
}

HilbClass operator*(const Int& m, const HilbClass& a) {
  HilbClass r = a;
  for (Int& v : r.pic) v *= m;
  for (Int& v : r.trans) v *= m;
  r.t *= m;
  r.reduce();
  return r;
}

HilbClass operator*(const Rat& q, const HilbClass& a) {
  HilbClass r = q.get_num() * a;
  r.scale *= q.get_den();
  r.reduce();
  return r;
}

HilbClass hilb_zero(const SurfaceModel& s) {
  return {IntVec(s.picard_rank()), IntVec(s.trans_rank()), 0, 1};
}

HilbClass hilb_pic_basis(const SurfaceModel& s, std::size_t i) {
  HilbClass h = hilb_zero(s);
  h.pic.at(i) = 1;
  return h;
}

HilbClass hilb_t(const SurfaceModel& s) {
  HilbClass h = hilb_zero(s);
  h.t = 1;
  return h;
}

HilbClass sigma_embed(const SurfaceModel& s, long n, const MukaiElement& alpha) {
  check_n(n);
  if (alpha.a0 != 0 || alpha.a2 != 0)
    fail(Err::bad_input, "sigma embeds H^2 classes only (a0 = a2 = 0)");
  HilbClass h = hilb_zero(s);
  h.pic = alpha.c1;
  if (!alpha.trans.empty()) h.trans = alpha.trans;
  return h;
}

Rat beauville_pair_rat(const SurfaceModel& s, long n, const HilbClass& b,
                       const HilbClass& c) {
  check_n(n);
  if (b.pic.size() != s.picard_rank() || c.pic.size() != s.picard_rank())
    fail(Err::dimension_mismatch, "HilbClass does not match surface model");
  Int num = picard_pair(s, b.pic, c.pic);
  if (!b.trans.empty() && !c.trans.empty()) {
    if (!s.trans_gram)
      fail(Err::invalid_surface,
           "transcendental coordinates without a transcendental Gram");
    for (std::size_t i = 0; i < b.trans.size(); ++i)
      for (std::size_t j = 0; j < c.trans.size(); ++j)
        num += b.trans[i] * (*s.trans_gram)(i, j) * c.trans[j];
  }
  num -= 2 * Int(n - 1) * b.t * c.t;
  Rat out = Rat(num) / Rat(b.scale * c.scale);
  out.canonicalize();
  return out;
}

Int beauville_pair(const SurfaceModel& s, long n, const HilbClass& b,
                   const HilbClass& c) {
  Rat q = beauville_pair_rat(s, n, b, c);
  if (q.get_den() != 1)
    fail(Err::bad_input, "Beauville pairing of non-integral classes");
  return q.get_num();
}

HilbClass class_L(const SurfaceModel& s, long n) {
  check_n(n);
  if (!s.has_section_data())
    fail(Err::invalid_surface, "class L needs the designated fiber class");
  HilbClass h = Int(n - 1) * hilb_pic_basis(s, *s.c_index);
  h.t = -1;
  return h;
}

Int fujiki_lambda(long n) {
  if (n < 1) fail(Err::n_too_small, "Fujiki constant needs n >= 1");
  Int num, den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * n));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n));
  den <<= static_cast<unsigned long>(n);
  return num / den;  // exact: (2n)!/(n! 2^n) = (2n-1)!!
}

Int fujiki_eval(const SurfaceModel& s, long n, const HilbClass& beta) {
  if (n < 1) fail(Err::n_too_small, "Fujiki evaluation needs n >= 1");
  Int b;
  if (n == 1) {
    // S^[1] = S: no T class; only embedded H^2 classes make sense here.
    if (beta.t != 0)
      fail(Err::n_too_small, "T-bearing class evaluated at n = 1");
    if (!beta.is_integral())
      fail(Err::bad_input, "Fujiki evaluation needs an integral class");
    b = picard_pair(s, beta.pic, beta.pic);
    if (!beta.trans.empty()) {
      if (!s.trans_gram)
        fail(Err::invalid_surface,
             "transcendental coordinates without a transcendental Gram");
      for (std::size_t i = 0; i < beta.trans.size(); ++i)
        for (std::size_t j = 0; j < beta.trans.size(); ++j)
          b += beta.trans[i] * (*s.trans_gram)(i, j) * beta.trans[j];
    }
  } else {
    b = beauville_pair(s, n, beta, beta);
  }
  Int pow;
  mpz_pow_ui(pow.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
  return fujiki_lambda(n) * pow;
}

}  // namespace mukai_lab
