#include "sl2/oracle.hpp"

#include "sl2/errors.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace sl2 {

namespace {

constexpr std::int64_t kBatch = 1024;
// Samples whose trace or parameter sits this close to a decision boundary
// of the predicted set are redrawn rather than judged.
constexpr double kBoundaryBand = 1e-7;
constexpr int kMaxRedraws = 1000;

Rng derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

bool near_boundary(const ClassSet& predicted, const ClassId& id, double trace) {
  if (std::abs(std::abs(trace) - 2.0) <= kBoundaryBand) return true;
  if (const auto* e = std::get_if<EllipticClass>(&id.get())) {
    const double u = e->alpha.units().value();
    for (const auto& iv : predicted.ell.atoms())
      if (std::abs(u - to_double(iv.lo)) <= kBoundaryBand || std::abs(u - to_double(iv.hi)) <= kBoundaryBand)
        return true;
  }
  if (const auto* h = std::get_if<HyperbolicClass>(&id.get())) {
    const double v = h->lambda.value().value();
    for (const HypSet* s : {&predicted.hyp_pos, &predicted.hyp_neg})
      for (const auto& x : s->values())
        if (std::abs(v - to_double(x)) <= kBoundaryBand * std::max(1.0, std::abs(v))) return true;
  }
  return false;
}

enum class Verdict { In, Out, Ambiguous };

Verdict judge(const ClassSet& predicted, const Mat2& m, const Tolerances& tol, ClassId& out) {
  try {
    out = classify(m, tol);
    if (predicted.contains(out, tol.trace)) return Verdict::In;
  } catch (const BoundaryAmbiguous&) {
    return Verdict::Ambiguous;
  } catch (const FloatAngleUndecidable&) {
    return Verdict::Ambiguous;
  }
  return near_boundary(predicted, out, m.trace()) ? Verdict::Ambiguous : Verdict::Out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string query_string(const ProductQuery& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? " * " : "") + q[i].to_string();
  return s;
}

nlohmann::ordered_json mat_json(const Mat2& m) { return {m.a(), m.b(), m.c(), m.d()}; }

// ---------------------------------------------------------------------------
// Witness search.

struct Stripped {
  std::vector<ClassId> factors;  // non-scalar
  ClassId target;                // adjusted for the stripped scalar sign
};

Stripped strip(const ProductQuery& query, const ClassId& target) {
  int sign = 1;
  std::vector<ClassId> f;
  for (const auto& c : query) {
    if (const auto* s = std::get_if<ScalarClass>(&c.get()))
      sign *= s->sign;
    else
      f.push_back(c);
  }
  return {std::move(f), sign > 0 ? target : target.negated()};
}

bool classifies_as(const Mat2& m, const ClassId& want, const Tolerances& tol) {
  try {
    return classify(m, tol) == want;
  } catch (const Error&) {
    return false;
  }
}

// D(t) M D(t)^-1 with D(t) = diag(e^t, e^-t), given e^(2t).
Mat2 scaled(const Mat2& m, double e2t) { return Mat2::unchecked(m.a(), m.b() * e2t, m.c() / e2t, m.d()); }

// Second-to-last factor runs through D(t) M D(t)^-1 with M a random
// conjugate of its representative; the last factor is forced and its trace
// root-searched in t.
bool generic_attempt(const std::vector<ClassId>& f, const ClassId& target, Rng& rng, const Tolerances& tol) {
  static constexpr int kGrid = 24;
  static constexpr double kSpan = 3.0;
  static const std::array<double, kGrid + 1> kScale = [] {
    std::array<double, kGrid + 1> e{};
    for (int k = 0; k <= kGrid; ++k) e[k] = std::exp(2.0 * (-kSpan + 2.0 * kSpan * k / kGrid));
    return e;
  }();
  const std::size_t n = f.size();
  Mat2 prefix = Mat2::identity();
  for (std::size_t i = 0; i + 2 < n; ++i) prefix = prefix * sample(f[i], rng);
  const Mat2 c = sample(target, rng);
  const Mat2 k = random_conjugator(rng);
  const Mat2 m_inv = (k * canonical_rep(f[n - 2]) * k.inverse()).inverse();
  // L(t) = A(t)^-1 prefix^-1 C.
  const Mat2 w = prefix.inverse() * c;
  const ClassId& last = f[n - 1];
  const double tau = last.trace();
  auto forced = [&](double t) { return scaled(m_inv, std::exp(2.0 * t)) * w; };
  auto g = [&](double t) { return forced(t).trace() - tau; };
  // tr(D M^-1 D^-1 W) is affine in e^(2t) and e^(-2t).
  const double g0 = m_inv.a() * w.a() + m_inv.d() * w.d() - tau;
  const double gp = m_inv.b() * w.c();
  const double gm = m_inv.c() * w.b();
  auto g_grid = [&](int k) { return g0 + gp * kScale[k] + gm / kScale[k]; };

  double prev_g = g_grid(0);
  for (int k = 0; k <= kGrid; ++k) {
    const double t = -kSpan + 2.0 * kSpan * k / kGrid;
    const double gt = k == 0 ? prev_g : g_grid(k);
    if (std::abs(gt) <= 1e-12 * std::max(1.0, std::abs(tau))) {
      if (classifies_as(forced(t), last, tol)) return true;
    } else if (k > 0 && (gt > 0) != (prev_g > 0) && std::abs(prev_g) > 0) {
      std::uintmax_t iters = 64;
      const double lo = t - 2.0 * kSpan / kGrid;
      const auto root = boost::math::tools::toms748_solve(g, lo, t, g(lo), g(t),
                                                           boost::math::tools::eps_tolerance<double>(50), iters);
      const double r = (root.first + root.second) / 2.0;
      if (classifies_as(forced(r), last, tol)) return true;
    }
    prev_g = gt;
  }
  return false;
}

enum class EigenMode { None, Rotations, Triangular };

EigenMode eigen_mode(const std::vector<ClassId>& f, const ClassId& target) {
  const bool all_elliptic = std::all_of(f.begin(), f.end(), [](const ClassId& c) { return c.is_elliptic(); });
  const bool none_elliptic = std::none_of(f.begin(), f.end(), [](const ClassId& c) { return c.is_elliptic(); });
  if (all_elliptic && (target.is_elliptic() || target.is_scalar())) return EigenMode::Rotations;
  if (none_elliptic && !target.is_elliptic()) return EigenMode::Triangular;
  return EigenMode::None;
}

// Factors sharing an eigenbasis: commuting rotations, or lower-triangular
// representatives with random off-diagonal parts. For a scalar target the
// last triangular factor's off-diagonal entry is solved for instead.
bool eigen_attempt(const std::vector<ClassId>& f, const ClassId& target, EigenMode mode, Rng& rng,
                   const Tolerances& tol) {
  if (mode == EigenMode::Rotations) {
    Mat2 prod = Mat2::identity();
    for (const auto& c : f) prod = prod * canonical_rep(c);
    return classifies_as(prod, target, tol);
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  auto diagonal = [&](const ClassId& c) -> std::pair<double, double> {
    if (const auto* p = std::get_if<ParabolicClass>(&c.get())) return {p->eps, p->eps};
    const double l = std::get<HyperbolicClass>(c.get()).lambda.value().value();
    return coin(rng) ? std::pair{l, 1.0 / l} : std::pair{1.0 / l, l};
  };
  auto off_diagonal = [&](const ClassId& c) {
    if (const auto* p = std::get_if<ParabolicClass>(&c.get())) return p->delta * std::exp(normal(rng));
    return normal(rng);
  };
  Mat2 prod = Mat2::identity();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const auto [top, bottom] = diagonal(f[i]);
    prod = prod * Mat2::unchecked(top, 0.0, off_diagonal(f[i]), bottom);
  }
  const ClassId& last = f.back();
  const auto [top, bottom] = diagonal(last);
  double x = off_diagonal(last);
  if (const auto* s = std::get_if<ScalarClass>(&target.get())) {
    // (prod * L).c = prod.c * top + prod.d * x must vanish.
    x = -prod.c() * top / prod.d();
    if (const auto* p = std::get_if<ParabolicClass>(&last.get()); p && !(x * p->delta > 0)) return false;
    if (std::abs(prod.a() * top - s->sign) > tol.trace) return false;
  }
  prod = prod * Mat2::unchecked(top, 0.0, x, bottom);
  const Mat2 k = random_conjugator(rng);
  return classifies_as(k * prod * k.inverse(), target, tol);
}

}  // namespace

std::optional<std::int64_t> find_witness(const ProductQuery& query, const ClassId& target, Rng& rng,
                                         std::int64_t max_attempts, const Tolerances& tol) {
  if (query.empty()) throw DomainError("a product needs at least one factor");
  const Stripped s = strip(query, target);
  if (s.factors.empty())
    return s.target == ClassId::scalar(1) ? std::optional<std::int64_t>(1) : std::nullopt;
  if (s.factors.size() == 1) return s.target == s.factors[0] ? std::optional<std::int64_t>(1) : std::nullopt;
  const EigenMode mode = eigen_mode(s.factors, s.target);
  for (std::int64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    // Commuting rotations give one fixed product, so that mode is tried once.
    const bool eigen = mode == EigenMode::Triangular ? attempt % 2 == 0 : (mode == EigenMode::Rotations && attempt == 2);
    const bool ok = eigen ? eigen_attempt(s.factors, s.target, mode, rng, tol) : generic_attempt(s.factors, s.target, rng, tol);
    if (ok) return attempt;
  }
  return std::nullopt;
}

std::vector<ClassId> coverage_probes(const ClassSet& predicted) {
  std::vector<ClassId> out;
  if (predicted.has_I) out.push_back(ClassId::scalar(1));
  if (predicted.has_negI) out.push_back(ClassId::scalar(-1));
  for (int eps : {1, -1})
    for (int delta : {1, -1})
      if (predicted.has_par(eps, delta)) out.push_back(ClassId::parabolic(eps, delta));
  const Rational inset(1, 24);
  for (const auto& iv : predicted.ell.atoms()) {
    if (iv.is_point()) {
      out.push_back(ClassId::elliptic(iv.lo));
      continue;
    }
    std::vector<Rational> pts{iv.lo + inset, (iv.lo + iv.hi) / 2, iv.hi - inset};
    std::vector<Rational> kept;
    for (const auto& p : pts)
      if (iv.lo < p && p < iv.hi && std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(p);
    for (const auto& p : kept) out.push_back(ClassId::elliptic(p));
  }
  for (const Rational v : {Rational(3, 2), Rational(2), Rational(-3, 2), Rational(-2)}) {
    const HypSet& h = v > 0 ? predicted.hyp_pos : predicted.hyp_neg;
    if (h.contains(v)) out.push_back(ClassId::hyperbolic(v));
  }
  return out;
}

std::size_t VerifyReport::covered() const {
  return static_cast<std::size_t>(
      std::count_if(coverage.begin(), coverage.end(), [](const CoverageTarget& t) { return t.found; }));
}

std::string VerifyReport::summary_line() const {
  std::ostringstream os;
  os << query_string(query) << " | " << trials << " | " << violations.size() << " | coverage " << covered() << '/'
     << coverage.size() << " | trace [" << fmt(trace_lo) << ',' << fmt(trace_hi) << ']';
  return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["query"] = nlohmann::ordered_json::array();
  for (const auto& c : query) j["query"].push_back(c.to_string());
  j["trials"] = trials;
  j["seed"] = seed;
  j["rejections"] = rejections;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json f = nlohmann::ordered_json::array();
    for (const auto& m : v.factors) f.push_back(mat_json(m));
    j["violations"].push_back({{"factors", f}, {"product", mat_json(v.product)}, {"classified", v.classified.to_string()}});
  }
  j["coverage"] = nlohmann::ordered_json::array();
  for (const auto& t : coverage)
    j["coverage"].push_back({{"target", t.target.to_string()}, {"found", t.found}, {"attempts", t.attempts}});
  j["trace_envelope"] = {trace_lo, trace_hi};
  j["sound"] = sound();
  j["covered"] = covered();
  return j;
}

VerifyReport verify_product(const ProductQuery& query, const ClassSet& predicted, std::int64_t trials,
                            std::uint64_t seed, const OracleOptions& opts) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (query.empty()) throw DomainError("a product needs at least one factor");
  VerifyReport rep;
  rep.query = query;
  rep.trials = trials;
  rep.seed = seed;
  rep.trace_lo = std::numeric_limits<double>::infinity();
  rep.trace_hi = -std::numeric_limits<double>::infinity();

  std::vector<Mat2> factors(query.size(), Mat2::identity());
  for (std::int64_t start = 0, batch = 0; start < trials; start += kBatch, ++batch) {
    Rng rng = derived_rng(seed, 1, static_cast<std::uint64_t>(batch));
    const std::int64_t stop = std::min(trials, start + kBatch);
    for (std::int64_t t = start; t < stop; ++t) {
      for (int redraw = 0;; ++redraw) {
        Mat2 prod = Mat2::identity();
        for (std::size_t i = 0; i < query.size(); ++i) {
          factors[i] = sample(query[i], rng);
          prod = prod * factors[i];
        }
        ClassId got = ClassId::scalar(1);
        const Verdict v = judge(predicted, prod, opts.tol, got);
        if (v == Verdict::Ambiguous && redraw < kMaxRedraws) {
          ++rep.rejections;
          continue;
        }
        rep.trace_lo = std::min(rep.trace_lo, prod.trace());
        rep.trace_hi = std::max(rep.trace_hi, prod.trace());
        if (v != Verdict::In) rep.violations.push_back({factors, prod, got});
        break;
      }
    }
  }

  if (!opts.soundness_only) {
    const auto probes = coverage_probes(predicted);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      Rng rng = derived_rng(seed, 2, i);
      const auto attempts = find_witness(query, probes[i], rng, opts.max_witness_attempts, opts.tol);
      rep.coverage.push_back({probes[i], attempts.has_value(), attempts.value_or(opts.max_witness_attempts)});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Trace envelopes.

namespace {

struct GplusPair {
  ClassId x, y;
  int sign;
};

GplusPair to_gplus(const ClassId& x, const ClassId& y) {
  const Normalized nx = normalize_to_gplus(x);
  const Normalized ny = normalize_to_gplus(y);
  return {nx.id, ny.id, nx.sign * ny.sign};
}

int rank(const ClassId& c) {
  if (const auto* p = std::get_if<ParabolicClass>(&c.get())) return p->delta > 0 ? 0 : 1;
  return c.is_elliptic() ? 2 : 3;
}

double pi_cos(const ClassId& e) { return 2.0 * std::cos(std::get<EllipticClass>(e.get()).alpha.radians()); }

TraceInterval upper(double hi, bool closed) { return {0.0, hi, false, true, false, closed}; }
TraceInterval lower(double lo, bool closed) { return {lo, 0.0, true, false, closed, false}; }

// R(theta) D(e^s) with theta log-close to a multiple of pi/2 and |s| <= 5:
// one row of K nearly vanishes, which is where open trace ends are approached.
Mat2 near_axis_conjugator(Rng& rng) {
  std::uniform_int_distribution<int> quarter(0, 3);
  std::uniform_real_distribution<double> stretch(-5.0, 5.0), log_offset(std::log(1e-7), 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double theta = quarter(rng) * std::numbers::pi / 2 + normal(rng) * std::exp(log_offset(rng));
  return Mat2::rotation(theta) * Mat2::diagonal(std::exp(stretch(rng)));
}

}  // namespace

TraceInterval predicted_trace_range(const ClassId& x, const ClassId& y) {
  if (x.is_scalar() || y.is_scalar()) throw DomainError("trace ranges need non-scalar classes");
  GplusPair p = to_gplus(x, y);
  if (rank(p.y) < rank(p.x)) std::swap(p.x, p.y);
  TraceInterval r;  // whole line unless narrowed below
  const int rx = rank(p.x), ry = rank(p.y);
  if (rx == 2 && ry == 2) {
    const double s = std::get<EllipticClass>(p.x.get()).alpha.radians() + std::get<EllipticClass>(p.y.get()).alpha.radians();
    r = upper(2.0 * std::cos(s), true);
  } else if (rx == 0 && ry == 2) {
    r = upper(pi_cos(p.y), false);
  } else if (rx == 1 && ry == 2) {
    r = lower(pi_cos(p.y), false);
  } else if (rx == 0 && ry == 0) {
    r = upper(2.0, true);
  } else if (rx == 0 && ry == 1) {
    r = lower(2.0, true);
  } else if (rx == 1 && ry == 1) {
    r = upper(2.0, true);
  }
  if (p.sign < 0) {
    std::swap(r.lo, r.hi);
    std::swap(r.lo_finite, r.hi_finite);
    std::swap(r.lo_closed, r.hi_closed);
    r.lo = -r.lo;
    r.hi = -r.hi;
  }
  return r;
}

TraceRangeReport trace_range_check(const ClassId& x, const ClassId& y, std::int64_t trials, std::uint64_t seed,
                                   double approach_tol, double cross_tol) {
  TraceRangeReport rep;
  rep.predicted = predicted_trace_range(x, y);
  const Mat2 a = canonical_rep(x);
  const Mat2 b0 = canonical_rep(y);
  rep.observed_lo = std::numeric_limits<double>::infinity();
  rep.observed_hi = -std::numeric_limits<double>::infinity();
  for (std::int64_t start = 0, batch = 0; start < trials; start += kBatch, ++batch) {
    Rng rng = derived_rng(seed, 3, static_cast<std::uint64_t>(batch));
    for (std::int64_t t = start; t < std::min(trials, start + kBatch); ++t) {
      const Mat2 k = t % 2 == 0 ? random_conjugator_wide(rng) : near_axis_conjugator(rng);
      const double tr = (a * (k * b0 * k.inverse())).trace();
      rep.observed_lo = std::min(rep.observed_lo, tr);
      rep.observed_hi = std::max(rep.observed_hi, tr);
    }
  }
  bool ok = true;
  const TraceInterval& pr = rep.predicted;
  if (pr.lo_finite) {
    rep.lo_gap = std::abs(rep.observed_lo - pr.lo);
    rep.lo_overshoot = std::max(0.0, pr.lo - rep.observed_lo);
    ok = ok && rep.lo_gap <= approach_tol && rep.lo_overshoot <= cross_tol;
  }
  if (pr.hi_finite) {
    rep.hi_gap = std::abs(rep.observed_hi - pr.hi);
    rep.hi_overshoot = std::max(0.0, rep.observed_hi - pr.hi);
    ok = ok && rep.hi_gap <= approach_tol && rep.hi_overshoot <= cross_tol;
  }
  // Closed ends are attained by the representatives themselves (common eigenbasis).
  const double attained = (a * b0).trace();
  if (pr.lo_finite && pr.lo_closed) rep.constructive_ok = rep.constructive_ok && std::abs(attained - pr.lo) <= 1e-12;
  if (pr.hi_finite && pr.hi_closed) rep.constructive_ok = rep.constructive_ok && std::abs(attained - pr.hi) <= 1e-12;
  rep.passed = ok && rep.constructive_ok;
  return rep;
}

double trace_formula_check(const Angle& alpha, const Angle& beta, std::int64_t trials, std::uint64_t seed) {
  const double a = alpha.radians();
  const double b = beta.radians();
  const CMat2 pa = phi_matrix(Mat2::rotation(a));
  const CMat2 pb = phi_matrix(Mat2::rotation(b));
  double worst = 0.0;
  for (std::int64_t start = 0, batch = 0; start < trials; start += kBatch, ++batch) {
    Rng rng = derived_rng(seed, 4, static_cast<std::uint64_t>(batch));
    for (std::int64_t t = start; t < std::min(trials, start + kBatch); ++t) {
      const Mat2 k = random_conjugator(rng);
      const CMat2 q = phi_matrix(k);
      const CMat2 q_inv = phi_matrix(k.inverse());
      const double got = (pa * q * pb * q_inv).trace().real();
      const double formula = 2.0 * std::cos(a + b) - 4.0 * std::norm(q.e[1]) * std::sin(a) * std::sin(b);
      worst = std::max(worst, std::abs(got - formula) / std::max(1.0, std::abs(formula)));
    }
  }
  return worst;
}

namespace {

// Eigenline of a non-scalar parabolic matrix: the kernel of m - eps I.
Vec2 parabolic_eigenvector(const Mat2& m) {
  const double eps = m.trace() > 0 ? 1.0 : -1.0;
  const double p = m.a() - eps, q = m.b();
  Vec2 v = std::abs(p) + std::abs(q) > 0 ? Vec2{-q, p} : Vec2{m.d() - eps, -m.c()};
  const double n = std::hypot(v[0], v[1]);
  return {v[0] / n, v[1] / n};
}

bool shares_eigenvector(const Mat2& a, const Mat2& b) {
  const Vec2 v = parabolic_eigenvector(a);
  const Vec2 bv = b.apply(v);
  return std::abs(wedge(v, bv)) <= 1e-9 * std::max(1.0, std::hypot(bv[0], bv[1]));
}

bool excluded(const ClassId& c) {
  if (c.is_scalar()) return true;
  if (const auto* p = std::get_if<ParabolicClass>(&c.get())) return p->delta < 0;
  if (const auto* e = std::get_if<EllipticClass>(&c.get())) return e->alpha.units().value() > 1.0;
  return false;
}

}  // namespace

Lemma42Report lemma42_exclusion_check(std::int64_t trials, std::uint64_t seed) {
  // A over rotations by k*pi/24 (k = 1..23) and the two parabolic ends,
  // B over positive hyperbolics, the two positive parabolics and I.
  std::vector<ClassId> a_classes{ClassId::parabolic(1, 1), ClassId::parabolic(-1, 1)};
  for (int k = 1; k < 24; ++k) a_classes.push_back(ClassId::elliptic(Rational(k, 24)));
  std::vector<ClassId> b_classes{ClassId::scalar(1), ClassId::parabolic(1, 1), ClassId::parabolic(1, -1)};
  for (const Rational l : {Rational(11, 10), Rational(3, 2), Rational(2), Rational(5)})
    b_classes.push_back(ClassId::hyperbolic(l));

  Lemma42Report rep;
  rep.trials = trials;
  for (std::int64_t start = 0, batch = 0; start < trials; start += kBatch, ++batch) {
    Rng rng = derived_rng(seed, 5, static_cast<std::uint64_t>(batch));
    std::uniform_int_distribution<std::size_t> pick_a(0, a_classes.size() - 1), pick_b(0, b_classes.size() - 1);
    std::bernoulli_distribution share(0.25);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::int64_t t = start; t < std::min(trials, start + kBatch); ++t) {
      const ClassId ca = a_classes[pick_a(rng)];
      const ClassId cb = b_classes[pick_b(rng)];
      Mat2 a = Mat2::identity(), b = Mat2::identity();
      if (ca.is_parabolic() && cb.is_parabolic() && share(rng)) {
        // Common eigenvector (0,1) before conjugation.
        const auto& pa = std::get<ParabolicClass>(ca.get());
        const auto& pb = std::get<ParabolicClass>(cb.get());
        const Mat2 k = random_conjugator(rng);
        a = k * Mat2::unchecked(pa.eps, 0.0, pa.delta * std::exp(normal(rng)), pa.eps) * k.inverse();
        b = k * Mat2::unchecked(pb.eps, 0.0, pb.delta * std::exp(normal(rng)), pb.eps) * k.inverse();
      } else {
        a = sample(ca, rng);
        b = sample(cb, rng);
      }
      ClassId got = ClassId::scalar(1);
      try {
        got = classify(a * b);
      } catch (const BoundaryAmbiguous&) {
        ++rep.rejections;
        continue;
      }
      if (!excluded(got)) continue;
      if (ca.is_parabolic() && cb.is_parabolic() && shares_eigenvector(a, b))
        ++rep.exceptional;
      else
        ++rep.violations;
    }
  }
  return rep;
}

}  // namespace sl2
