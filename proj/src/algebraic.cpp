/*
   Copyright 2026 The tmeasure Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tmeasure/algebraic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>

#include "tmeasure/error.hpp"

namespace tmeasure {

namespace {

Ball coefficient_ball(const BigInt& c, Precision prec) { return Ball(Interval(c, prec)); }

Ball point_ball(const Float& re, const Float& im) {
  Float r1 = re, r2 = re, i1 = im, i2 = im;
  return Ball(Interval(std::move(r1), std::move(r2)), Interval(std::move(i1), std::move(i2)));
}

Ball horner(const IntPolynomial& f, const Ball& z) {
  Precision prec = z.precision();
  return f.evaluate(z, [prec](const BigInt& c) { return coefficient_ball(c, prec); });
}

IntPolynomial normalized(IntPolynomial f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidAlgebraic, "minimal polynomial must have degree >= 1");
  BigInt g = content(f);
  std::vector<BigInt> c = f.coefficients();
  bool flip = sgn(f.leading()) < 0;
  for (auto& x : c) {
    x /= g;
    if (flip) x = -x;
  }
  return IntPolynomial(std::move(c));
}

BigRational eval_exact(const IntPolynomial& f, const BigRational& x) {
  return to_rational(f).evaluate(x);
}

std::vector<std::complex<double>> aberth_double(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<std::complex<double>> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(i)).get_d();
  auto eval = [&](std::complex<double> z, std::complex<double>& dz) {
    std::complex<double> p = a.back();
    dz = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      dz = dz * z + p;
      p = p * z + a[static_cast<std::size_t>(i)];
    }
    return p;
  };
  // Start on a circle whose radius is the geometric mean of the root moduli.
  double r = std::pow(std::abs(a[0] / a.back()), 1.0 / n);
  if (!(r > 0.0) || !std::isfinite(r)) r = 1.0;
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(r, 2.0 * std::numbers::pi * k / n + 0.4);
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<double> d;
      std::complex<double> p = eval(z[i], d);
      if (p == 0.0) continue;
      std::complex<double> w = p / d;
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      std::complex<double> corr = w / (1.0 - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = 1e-3;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

// z <= 2^-e (1 + |w|), decided on the enclosures.
bool small_relative_to(const Float& z, const Interval& w_abs, long e) {
  Float rhs(w_abs.precision());
  mpfr_add_ui(rhs.get(), w_abs.lo().get(), 1, MPFR_RNDD);
  mpfr_div_2si(rhs.get(), rhs.get(), e, MPFR_RNDD);
  return mpfr_lessequal_p(z.get(), rhs.get()) != 0;
}

void aberth_polish(const IntPolynomial& f, std::vector<Ball>& z, Precision prec) {
  const IntPolynomial df = f.derivative();
  for (int iter = 0; iter < 100; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Ball p = horner(f, z[i]).midpoint_ball();
      if (is_zero(p)) continue;
      Ball d = horner(df, z[i]).midpoint_ball();
      Ball s(prec);
      try {
        for (std::size_t j = 0; j < z.size(); ++j)
          if (j != i) s += Ball(Interval(1L, prec)) / (z[i] - z[j]).midpoint_ball();
        Ball w = (p / d).midpoint_ball();
        Ball corr = (w / (Ball(Interval(1L, prec)) - w * s).midpoint_ball()).midpoint_ball();
        z[i] = (z[i] - corr).midpoint_ball();
        if (!small_relative_to(abs(corr).hi(), abs(z[i]), static_cast<long>(prec) - 8)) converged = false;
      } catch (const Error&) {
        // coincident iterates or a critical point; nudge and keep going
        z[i] = (z[i] + Ball(BigRational(1, 1024), BigRational(1, 4096), prec)).midpoint_ball();
        converged = false;
      }
    }
    if (converged) return;
  }
}

// Smith's inclusion radii n |f(z_i) / (lc prod_{j != i} (z_i - z_j))|.
// Returns false when the product cannot be bounded away from zero.
bool smith_radii(const IntPolynomial& f, const std::vector<Ball>& z, std::vector<Float>& radii) {
  const std::size_t n = z.size();
  radii.clear();
  for (std::size_t i = 0; i < n; ++i) {
    Precision prec = z[i].precision();
    Ball den = coefficient_ball(f.leading(), prec);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= (z[i] - z[j]);
    if (den.contains_zero()) return false;
    Ball w = horner(f, z[i]) / den;
    Float r = abs(w).hi();
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    radii.push_back(std::move(r));
  }
  return true;
}

bool discs_disjoint(const std::vector<Ball>& z, const std::vector<Float>& radii) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      Interval dist = abs(z[i] - z[j]);
      Float sum(dist.precision());
      mpfr_add(sum.get(), radii[i].get(), radii[j].get(), MPFR_RNDU);
      if (!mpfr_less_p(sum.get(), dist.lo().get())) return false;
    }
  }
  return true;
}

bool radii_small(const std::vector<Ball>& z, const std::vector<Float>& radii, Precision bits) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!small_relative_to(radii[i], abs(z[i]), static_cast<long>(bits))) return false;
  return true;
}

bool less_by_midpoint(const Ball& a, const Ball& b) {
  int c = mpfr_cmp(a.mid_real().get(), b.mid_real().get());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.mid_imag().get(), b.mid_imag().get()) < 0;
}

BigRational to_rational(const Float& x) {
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

// Simplest rational (smallest denominator) in [a, b].
BigRational simplest_between(const BigRational& a, const BigRational& b) {
  if (a <= 0 && b >= 0) return 0;
  if (b < 0) return -simplest_between(-b, -a);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (fl == a) return a;
  if (fl + 1 <= b) return BigRational(fl + 1);
  BigRational rest = 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
  return BigRational(fl) + rest;
}

// Rectangle around the disc of `root`; edges sit between 1 and `factor` radii
// from the centre and are chosen with small denominators.
RootBox box_around(const Ball& root, unsigned long factor) {
  BigRational cr = to_rational(root.mid_real());
  BigRational ci = to_rational(root.mid_imag());
  BigRational r = to_rational(root.radius());
  BigRational far = r * factor;
  if (factor <= 1) return RootBox{cr - r, cr + r, ci - r, ci + r};
  return RootBox{simplest_between(cr - far, cr - r), simplest_between(cr + r, cr + far),
                 simplest_between(ci - far, ci - r), simplest_between(ci + r, ci + far)};
}

enum class BoxVerdict { Unique, Ambiguous, Empty, Multiple };

BoxVerdict locate(const RootIsolation& iso, const RootBox& box, std::size_t& index) {
  Ball b = box.to_ball(iso.roots.front().precision());
  std::size_t overlapping = 0, contained = 0;
  for (std::size_t i = 0; i < iso.roots.size(); ++i) {
    if (!b.overlaps(iso.roots[i])) continue;
    ++overlapping;
    if (b.contains(iso.roots[i])) {
      ++contained;
      index = i;
    }
  }
  if (overlapping == 0) return BoxVerdict::Empty;
  if (contained >= 2) return BoxVerdict::Multiple;
  if (overlapping == 1 && contained == 1) return BoxVerdict::Unique;
  return BoxVerdict::Ambiguous;
}

// Root selection by box needs no more than this; beyond it the box edge runs
// through a root (or the box is degenerate) and we reject.
constexpr Precision kBoxPrecisionCap = 4096;

std::size_t locate_or_throw(const IntPolynomial& f, const RootBox& box, Precision start, RootIsolation* out) {
  for (Precision bits = start; bits <= kBoxPrecisionCap; bits *= 2) {
    RootIsolation iso = isolate_roots(f, bits);
    std::size_t index = 0;
    switch (locate(iso, box, index)) {
      case BoxVerdict::Unique:
        if (out) *out = std::move(iso);
        return index;
      case BoxVerdict::Empty:
        throw Error(ErrorCode::InvalidAlgebraic, "box " + box.to_string() + " contains no root of " + to_string(f));
      case BoxVerdict::Multiple:
        throw Error(ErrorCode::InvalidAlgebraic, "box " + box.to_string() + " contains several roots of " + to_string(f));
      case BoxVerdict::Ambiguous:
        break;
    }
  }
  throw Error(ErrorCode::InvalidAlgebraic, "box " + box.to_string() + " does not isolate a root of " + to_string(f));
}

void check_squarefree_no_rational_root(const IntPolynomial& f) {
  RatPolynomial g = gcd(to_rational(f), to_rational(f.derivative()));
  if (g.degree() > 0) throw Error(ErrorCode::InvalidAlgebraic, to_string(f) + " is not squarefree");
  if (f.degree() < 2) return;
  // A rational root u/v has v | lc, so lc * root is an integer.
  for (Precision bits = 64; bits <= kBoxPrecisionCap; bits *= 2) {
    RootIsolation iso = isolate_roots(f, bits);
    bool decided = true;
    for (const auto& root : iso.roots) {
      if (!root.imag().contains_zero()) continue;
      Interval scaled = root.real() * Interval(f.leading(), root.precision());
      BigInt lo, hi;
      mpfr_get_z(lo.get_mpz_t(), scaled.lo().get(), MPFR_RNDU);
      mpfr_get_z(hi.get_mpz_t(), scaled.hi().get(), MPFR_RNDD);
      if (hi - lo > 64) {
        decided = false;
        break;
      }
      for (BigInt u = lo; u <= hi; ++u) {
        BigRational cand(u, f.leading());
        cand.canonicalize();
        if (is_zero(eval_exact(f, cand)))
          throw Error(ErrorCode::InvalidAlgebraic,
                      to_string(f) + " has the rational root " + to_fraction_string(cand) + " and is reducible");
      }
    }
    if (decided) return;
  }
  throw Error(ErrorCode::PrecisionExhausted, "rational root test did not converge for " + to_string(f));
}

}  // namespace

Ball RootBox::to_ball(Precision prec) const {
  Interval re = Interval::hull(Interval(re_lo, prec), Interval(re_hi, prec));
  Interval im = Interval::hull(Interval(im_lo, prec), Interval(im_hi, prec));
  return Ball(std::move(re), std::move(im));
}

std::string RootBox::to_string() const {
  return to_fraction_string(re_lo) + "," + to_fraction_string(re_hi) + "," + to_fraction_string(im_lo) + "," +
         to_fraction_string(im_hi);
}

RootIsolation isolate_roots(const IntPolynomial& f, Precision bits) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidAlgebraic, "cannot isolate roots of a constant");
  RootIsolation out;
  if (n == 1) {
    BigRational root(-f.coeff(0), f.coeff(1));
    root.canonicalize();
    out.roots.emplace_back(Interval(root, std::max<Precision>(bits + 64, kDefaultPrecision)));
    out.real.push_back(true);
    return out;
  }
  std::vector<std::complex<double>> guess = aberth_double(f);
  Precision prec = std::max<Precision>(bits + 32, kDefaultPrecision);
  std::vector<Ball> z;
  for (const auto& g : guess) {
    Float re(prec), im(prec);
    mpfr_set_d(re.get(), g.real(), MPFR_RNDN);
    mpfr_set_d(im.get(), g.imag(), MPFR_RNDN);
    z.push_back(point_ball(re, im));
  }
  std::vector<Float> radii;
  for (; prec <= kMaxPrecision; prec *= 2) {
    for (auto& zi : z) zi = zi.with_precision(prec);
    aberth_polish(f, z, prec);
    if (!smith_radii(f, z, radii) || !discs_disjoint(z, radii) || !radii_small(z, radii, bits)) continue;

    // Snap near-real centres onto the axis. A disc centred on the axis that
    // isolates a single root of a real polynomial holds a real root.
    std::vector<Ball> snapped = z;
    std::vector<bool> real(z.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Float im = z[i].mid_imag();
      mpfr_abs(im.get(), im.get(), MPFR_RNDU);
      if (mpfr_lessequal_p(im.get(), radii[i].get())) {
        snapped[i] = point_ball(z[i].mid_real(), Float(prec));
        real[i] = true;
        any = true;
      }
    }
    std::vector<Float> snapped_radii;
    if (any && smith_radii(f, snapped, snapped_radii) && discs_disjoint(snapped, snapped_radii) &&
        radii_small(snapped, snapped_radii, bits)) {
      z = std::move(snapped);
      radii = std::move(snapped_radii);
    } else {
      std::fill(real.begin(), real.end(), false);
    }

    std::vector<std::pair<Ball, bool>> roots;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (real[i]) {
        Ball d = Ball::disc(z[i].mid_real(), Float(prec), radii[i]);
        roots.emplace_back(Ball(d.real()), true);
      } else {
        roots.emplace_back(Ball::disc(z[i].mid_real(), z[i].mid_imag(), radii[i]), false);
      }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return less_by_midpoint(a.first, b.first); });
    for (auto& [ball, is_real] : roots) {
      out.roots.push_back(std::move(ball));
      out.real.push_back(is_real);
    }
    return out;
  }
  throw Error(ErrorCode::PrecisionExhausted, "root isolation failed for " + to_string(f));
}

AlgebraicNumber::AlgebraicNumber(IntPolynomial minpoly, RootBox box)
    : minpoly_(normalized(std::move(minpoly))), box_(std::move(box)) {
  for (const auto& c : minpoly_.coefficients()) height_ = std::max(height_, BigInt(abs(c)));
  if (box_.re_lo > box_.re_hi || box_.im_lo > box_.im_hi)
    throw Error(ErrorCode::InvalidAlgebraic, "malformed box " + box_.to_string());
  check_squarefree_no_rational_root(minpoly_);
  if (minpoly_.degree() == 1) {
    BigRational q = rational_value();
    if (q < box_.re_lo || q > box_.re_hi || box_.im_lo > 0 || box_.im_hi < 0)
      throw Error(ErrorCode::InvalidAlgebraic, "box " + box_.to_string() + " does not contain " + to_fraction_string(q));
    return;
  }
  locate_or_throw(minpoly_, box_, 64, nullptr);
}

AlgebraicNumber AlgebraicNumber::rational(const BigRational& value) {
  IntPolynomial f{BigInt(-value.get_num()), BigInt(value.get_den())};
  return AlgebraicNumber(std::move(f), RootBox{value, value, 0, 0});
}

AlgebraicNumber AlgebraicNumber::select(IntPolynomial minpoly, RootSelector selector) {
  IntPolynomial f = normalized(std::move(minpoly));
  if (f.degree() == 1) {
    BigRational q(-f.coeff(0), f.coeff(1));
    q.canonicalize();
    return rational(q);
  }
  check_squarefree_no_rational_root(f);
  RootIsolation iso = isolate_roots(f, 64);
  // Coordinates whose enclosures overlap count as equal (conjugate pairs).
  auto primary = [&](const Ball& b) -> const Interval& {
    return (selector == RootSelector::LargestReal || selector == RootSelector::SmallestReal) ? b.real() : b.imag();
  };
  auto secondary = [&](const Ball& b) -> const Interval& {
    return (selector == RootSelector::LargestReal || selector == RootSelector::SmallestReal) ? b.imag() : b.real();
  };
  const bool largest = selector == RootSelector::LargestReal || selector == RootSelector::LargestImag;
  std::size_t best = 0;
  for (std::size_t i = 1; i < iso.roots.size(); ++i) {
    const Interval& a = primary(iso.roots[i]);
    const Interval& b = primary(iso.roots[best]);
    bool tie = !certainly_less(a, b) && !certainly_less(b, a);
    bool better = tie ? certainly_less(secondary(iso.roots[best]), secondary(iso.roots[i]))
                      : (largest ? certainly_less(b, a) : certainly_less(a, b));
    if (better) best = i;
  }
  RootBox box = box_around(iso.roots[best], 3);
  Ball wide = box.to_ball(kDefaultPrecision);
  for (std::size_t i = 0; i < iso.roots.size(); ++i) {
    if (i != best && wide.overlaps(iso.roots[i])) {
      box = box_around(iso.roots[best], 1);
      break;
    }
  }
  return AlgebraicNumber(std::move(f), std::move(box));
}

AlgebraicNumber AlgebraicNumber::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos && text.find_first_of("xX") == std::string::npos)
    return rational(parse_rational(text));
  IntPolynomial f = parse_polynomial(text.substr(0, colon));
  if (colon == std::string::npos) {
    if (normalized(f).degree() != 1)
      throw Error(ErrorCode::ParseError, "'" + text + "': a root selector (:+re, :box=...) is required for degree >= 2");
    return select(std::move(f), RootSelector::LargestReal);
  }
  std::string sel = text.substr(colon + 1);
  sel.erase(std::remove_if(sel.begin(), sel.end(), [](unsigned char c) { return std::isspace(c); }), sel.end());
  if (sel == "+re") return select(std::move(f), RootSelector::LargestReal);
  if (sel == "-re") return select(std::move(f), RootSelector::SmallestReal);
  if (sel == "+im") return select(std::move(f), RootSelector::LargestImag);
  if (sel == "-im") return select(std::move(f), RootSelector::SmallestImag);
  if (sel.rfind("box=", 0) == 0) {
    std::vector<BigRational> v;
    std::string rest = sel.substr(4);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      v.push_back(parse_rational(rest.substr(start, comma - start)));
      start = comma + 1;
    }
    if (v.size() != 4) throw Error(ErrorCode::ParseError, "box needs four endpoints: '" + sel + "'");
    return AlgebraicNumber(std::move(f), RootBox{v[0], v[1], v[2], v[3]});
  }
  throw Error(ErrorCode::ParseError, "unknown root selector '" + sel + "'");
}

BigRational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::DomainError, descriptor() + " is not rational");
  BigRational q(-minpoly_.coeff(0), minpoly_.coeff(1));
  q.canonicalize();
  return q;
}

std::string AlgebraicNumber::descriptor() const {
  if (is_rational()) return to_string(minpoly_);
  return to_string(minpoly_) + ":box=" + box_.to_string();
}

AlgebraicNumber::Embeddings AlgebraicNumber::embeddings(Precision bits) const {
  Embeddings e;
  if (is_rational()) {
    e.isolation = isolate_roots(minpoly_, bits);
    return e;
  }
  for (Precision b = bits;; b *= 2) {
    RootIsolation iso = isolate_roots(minpoly_, b);
    std::size_t index = 0;
    if (locate(iso, box_, index) == BoxVerdict::Unique) {
      e.isolation = std::move(iso);
      e.identity = index;
      return e;
    }
    if (b >= kMaxPrecision) throw Error(ErrorCode::PrecisionExhausted, "cannot re-identify root of " + descriptor());
  }
}

Ball AlgebraicNumber::enclosure(Precision bits) const {
  Embeddings e = embeddings(bits);
  return e.isolation.roots[e.identity];
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    BigInt a = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (k == 0 || a != 1) out += a.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  auto fail = [&]() { throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + text + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt c = start == i ? BigInt(1) : BigInt(s.substr(start, i - start));
    bool has_digits = start != i;
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_digits) fail();
      ++i;
      if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) fail();
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ps == i) fail();
        power = std::stoul(s.substr(ps, i - ps));
      }
    } else if (!has_digits) {
      fail();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<Ball> conjugates(const AlgebraicNumber& alpha, Precision bits) {
  return isolate_roots(alpha.minpoly(), bits).roots;
}

Interval house(const AlgebraicNumber& alpha, long rel_bits) {
  for (Precision bits = rel_bits + 16; bits <= kMaxPrecision; bits *= 2) {
    RootIsolation iso = isolate_roots(alpha.minpoly(), bits);
    Interval best = abs(iso.roots.front());
    for (std::size_t i = 1; i < iso.roots.size(); ++i) best = max(best, abs(iso.roots[i]));
    Float tol(best.precision());
    mpfr_div_2si(tol.get(), best.hi().get(), rel_bits, MPFR_RNDD);
    if (mpfr_lessequal_p(best.width().get(), tol.get())) return best;
  }
  throw Error(ErrorCode::PrecisionExhausted, "house of " + alpha.descriptor());
}

BigInt denominator_surrogate(const AlgebraicNumber& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroInput, "denominator of 0 requested");
  return alpha.minpoly().leading();
}

AlgebraicNumber inverse(const AlgebraicNumber& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of 0");
  if (alpha.is_rational()) {
    BigRational q = 1 / alpha.rational_value();
    return AlgebraicNumber::rational(q);
  }
  std::vector<BigInt> rev = alpha.minpoly().coefficients();
  std::reverse(rev.begin(), rev.end());
  IntPolynomial g = normalized(IntPolynomial(std::move(rev)));
  for (Precision bits = 64; bits <= kMaxPrecision; bits *= 2) {
    Ball image = Ball(Interval(1L, bits)) / alpha.enclosure(bits);
    RootIsolation iso = isolate_roots(g, bits);
    std::size_t hit = 0, count = 0;
    for (std::size_t i = 0; i < iso.roots.size(); ++i) {
      if (iso.roots[i].overlaps(image)) {
        hit = i;
        ++count;
      }
    }
    if (count == 1) {
      RootBox box = box_around(iso.roots[hit], 3);
      Ball wide = box.to_ball(bits);
      for (std::size_t i = 0; i < iso.roots.size(); ++i) {
        if (i != hit && wide.overlaps(iso.roots[i])) {
          box = box_around(iso.roots[hit], 1);
          break;
        }
      }
      return AlgebraicNumber(std::move(g), std::move(box));
    }
  }
  throw Error(ErrorCode::PrecisionExhausted, "inverse of " + alpha.descriptor());
}

bool same_number(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a.minpoly() == b.minpoly())) return false;
  if (a.is_rational()) return true;
  for (Precision bits = kDefaultPrecision; bits <= kMaxPrecision; bits *= 2) {
    auto ea = a.embeddings(bits);
    auto eb = b.embeddings(bits);
    if (ea.isolation.roots.size() == eb.isolation.roots.size()) {
      // identical isolations at equal precision, so indices are comparable
      return ea.identity == eb.identity || ea.isolation.roots[ea.identity].overlaps(eb.isolation.roots[eb.identity]);
    }
  }
  return false;
}

HouseDenReport house_den_bound_check(const AlgebraicNumber& alpha) {
  AlgebraicNumber inv = inverse(alpha);
  HouseDenReport r;
  r.denominator_of_inverse = denominator_surrogate(inv);
  const long d = alpha.degree();
  const BigInt& h = alpha.height();
  r.denominator_ok = r.denominator_of_inverse * r.denominator_of_inverse <= h * h * (1 + d);
  r.house_of_inverse = house(inv);
  r.bound = Interval(h, kDefaultPrecision) * sqrt(Interval(1 + d, kDefaultPrecision));
  r.house_ok = certainly_less_equal(r.house_of_inverse, r.bound);
  return r;
}

}  // namespace tmeasure
