#include "sl2/product.hpp"

#include "sl2/errors.hpp"
#include "sl2/notation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl2 {

namespace {

// Non-scalar classes of G+ in table order.
enum class Kind { ParPlus, ParMinus, Elliptic, Hyperbolic };

Kind kind_of(const ClassId& id) {
  if (const auto* p = std::get_if<ParabolicClass>(&id.get())) return p->delta > 0 ? Kind::ParPlus : Kind::ParMinus;
  if (id.is_elliptic()) return Kind::Elliptic;
  return Kind::Hyperbolic;
}

const Rational& angle_of(const ClassId& id) { return std::get<EllipticClass>(id.get()).alpha.units().exact(); }
const Rational& lambda_of(const ClassId& id) { return std::get<HyperbolicClass>(id.get()).lambda.value().exact(); }

void require_exact(const ClassId& id) {
  if (!id.is_exact()) throw DomainError("class " + id.to_string() + " has a float-backed parameter; products need exact input");
}

ClassSet signed_set(const ClassSet& s, int sign) { return sign > 0 ? s : s.negate(); }

ClassSet notation(const std::string& text) { return parse_notation(text); }

std::string r(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------------------
// Pair table for non-scalar classes in G+.

ClassSet pair_gplus(ClassId x, ClassId y) {
  if (kind_of(y) < kind_of(x)) std::swap(x, y);
  static const ClassSet kParParPlus = notation("C3[0,1]>");
  static const ClassSet kParPlusParMinus = notation("I | C2[++] | C2[+-] | C4+");
  static const ClassSet kParParMinus = notation("C3<[1,2]");
  static const ClassSet kUpperHalf = notation("C3<[0,1]>");
  static const ClassSet kLowerHalf = notation("C3<[1,2]>");
  static const ClassSet kNegIAndNegHyp = notation("-I | C4-");
  static const ClassSet kNoScalars = notation("{I | -I}^c");
  static const ClassSet kNoNegI = notation("{-I}^c");

  switch (kind_of(x)) {
    case Kind::ParPlus:
      switch (kind_of(y)) {
        case Kind::ParPlus: return kParParPlus;
        case Kind::ParMinus: return kParPlusParMinus;
        case Kind::Elliptic: return notation("C3]" + r(angle_of(y)) + ",1]>");
        case Kind::Hyperbolic: return kUpperHalf;
      }
      break;
    case Kind::ParMinus:
      switch (kind_of(y)) {
        case Kind::ParMinus: return kParParMinus;
        case Kind::Elliptic: return notation("C3<[0," + r(angle_of(y)) + "[");
        case Kind::Hyperbolic: return kLowerHalf;
        default: break;
      }
      break;
    case Kind::Elliptic:
      if (kind_of(y) == Kind::Hyperbolic) return kUpperHalf;
      {
        const Rational sum = angle_of(x) + angle_of(y);
        if (sum < 1) return notation("C3[" + r(sum) + ",1]>");
        if (sum == 1) return kNegIAndNegHyp;
        return notation("C3<[1," + r(sum) + "]");
      }
    case Kind::Hyperbolic:
      // Both factors are self-inverse classes, so the product is closed
      // under inversion and every trace occurs; I appears iff the classes
      // coincide, -I never.
      return lambda_of(x) == lambda_of(y) ? kNoNegI : kNoScalars;
  }
  throw std::logic_error("pair_gplus: unreachable");
}

// ---------------------------------------------------------------------------
// Interval pieces for the fold.

ClassSet ell_piece(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed) {
  ClassSet s;
  s.ell = EllipticSet::from_intervals({{lo, hi, lo_closed, hi_closed}});
  return s;
}

ClassSet flags(std::initializer_list<ClassId> ids) {
  ClassSet s;
  for (const auto& id : ids) s = s.unite(ClassSet::singleton(id));
  return s;
}

ClassSet full_hyp(int sign) {
  ClassSet s;
  (sign > 0 ? s.hyp_pos : s.hyp_neg) = HypSet::full();
  return s;
}

// Union over alpha in `iv` (inside ]0,1[) of Cl3^alpha * y, y non-scalar in G+.
// Per-alpha images have ends monotone in alpha, so the union is bounded by
// the images of the interval ends; closed ends are attained.
ClassSet interval_times_gplus(const AngleInterval& iv, const ClassId& y) {
  if (iv.is_point()) return pair_gplus(ClassId::elliptic(iv.lo), y);
  const ClassId neg_plus = ClassId::parabolic(-1, 1);
  const ClassId neg_minus = ClassId::parabolic(-1, -1);
  switch (kind_of(y)) {
    case Kind::ParPlus:
      // ]alpha, 1] plus C4-: the lower end is never attained.
      return ell_piece(iv.lo, 1, false, false) | flags({neg_plus}) | full_hyp(-1);
    case Kind::ParMinus:
      return full_hyp(1) | flags({ClassId::parabolic(1, 1)}) | ell_piece(0, iv.hi, false, false);
    case Kind::Hyperbolic:
      return pair_gplus(ClassId::elliptic(Rational(1, 2)), y);
    case Kind::Elliptic: {
      const Rational beta = angle_of(y);
      const Rational threshold = 1 - beta;
      ClassSet out;
      if (iv.lo < threshold)
        out = out | ell_piece(iv.lo + beta, 1, iv.lo_closed, false) | flags({neg_plus}) | full_hyp(-1);
      if (iv.contains(threshold)) out = out | flags({ClassId::scalar(-1)}) | full_hyp(-1);
      if (iv.hi > threshold)
        out = out | full_hyp(-1) | flags({neg_minus}) | ell_piece(1, iv.hi + beta, false, iv.hi_closed);
      return out;
    }
  }
  throw std::logic_error("interval_times_gplus: unreachable");
}

ClassSet elliptic_set_times(const EllipticSet& e, const ClassId& y) {
  const Normalized ny = normalize_to_gplus(y);
  ClassSet out;
  for (auto iv : e.atoms()) {
    int sign = ny.sign;
    if (iv.lo >= 1) {
      iv.lo -= 1;
      iv.hi -= 1;
      sign = -sign;
    }
    out = out | signed_set(interval_times_gplus(iv, ny.id), sign);
  }
  return out;
}

// Union over lambda in h (component `component_sign`) of Cl4^lambda * y.
ClassSet hyp_set_times(const HypSet& h, int component_sign, const ClassId& y) {
  if (h.empty()) return {};
  const HypSet positive = component_sign > 0 ? h : h.mirrored();
  const Normalized ny = normalize_to_gplus(y);
  ClassSet out;
  if (ny.id.is_hyperbolic()) {
    const Rational& mu = lambda_of(ny.id);
    if (positive.has_member_other_than(mu)) out = out | notation("{I | -I}^c");
    if (positive.contains(mu)) out = out | notation("{-I}^c");
  } else {
    // The product with any single positive hyperbolic class is independent of lambda.
    out = pair_gplus(ClassId::hyperbolic(Rational(2)), ny.id);
  }
  return signed_set(out, component_sign * ny.sign);
}

struct Stripped {
  std::vector<ClassId> factors;  // non-scalar
  int sign = 1;
};

Stripped strip_scalars(std::span<const ClassId> factors) {
  if (factors.empty()) throw DomainError("a product needs at least one factor");
  Stripped s;
  for (const auto& f : factors) {
    require_exact(f);
    if (const auto* sc = std::get_if<ScalarClass>(&f.get()))
      s.sign *= sc->sign;
    else
      s.factors.push_back(f);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Closed forms for triples of non-scalar classes in G+.

ClassSet triple_gplus(std::vector<ClassId> f) {
  std::sort(f.begin(), f.end(), [](const ClassId& l, const ClassId& r) { return kind_of(l) < kind_of(r); });
  int n_pp = 0, n_pm = 0, n_h = 0;
  std::vector<Rational> angles;
  for (const auto& c : f) {
    switch (kind_of(c)) {
      case Kind::ParPlus: ++n_pp; break;
      case Kind::ParMinus: ++n_pm; break;
      case Kind::Elliptic: angles.push_back(angle_of(c)); break;
      case Kind::Hyperbolic: ++n_h; break;
    }
  }
  Rational sum(0);
  for (const auto& a : angles) sum += a;

  if (n_h >= 2) return ClassSet::whole();
  if (n_h == 1) {
    // Remaining two factors decide which scalar is missing.
    const int n_e = static_cast<int>(angles.size());
    const bool misses_neg_i = (n_pp == 1 && n_pm == 1) || (n_e == 1 && n_pm == 1);
    return notation(misses_neg_i ? "{-I}^c" : "{I}^c");
  }
  switch (angles.size()) {
    case 0:
      if (n_pp == 3 || n_pm == 3) return notation("{I}^c");
      if (n_pp == 2) return notation("{-I | C3[1,2[}^c");
      return notation("{-I | C3]0,1]}^c");
    case 1: {
      const std::string a = r(angles[0]);
      if (n_pp == 2) return notation("{I | C3[0," + a + "]}^c");
      if (n_pm == 2) return notation("{-I | C3[" + a + ",1]}^c");
      return notation("C3<[0,1]>");
    }
    case 2:
      if (n_pp == 1) return sum < 1 ? notation("{I | C3[0," + r(sum) + "]}^c") : notation("C3<[1,2]>");
      return sum > 1 ? notation("{I | C3[" + r(sum) + ",2]}^c") : notation("C3<[0,1]>");
    default:
      if (sum < 1) return notation("{I | C3[0," + r(sum) + "[}^c");
      if (sum == 1) return notation("-I | C3<[1,2]>");
      if (sum < 2) return notation("C3<[1,2]>");
      if (sum == 2) return notation("I | C3<[1,2]>");
      return notation("{-I | C3]" + r(sum - 2) + ",1]}^c");
  }
}

ClassSet triple_direct(const std::vector<ClassId>& f) {
  int sign = 1;
  std::vector<ClassId> g;
  for (const auto& c : f) {
    const Normalized n = normalize_to_gplus(c);
    sign *= n.sign;
    g.push_back(n.id);
  }
  return signed_set(triple_gplus(std::move(g)), sign);
}

}  // namespace

ClassSet product_pair(const ClassId& x, const ClassId& y) {
  require_exact(x);
  require_exact(y);
  if (const auto* s = std::get_if<ScalarClass>(&x.get())) return signed_set(ClassSet::singleton(y), s->sign);
  if (const auto* s = std::get_if<ScalarClass>(&y.get())) return signed_set(ClassSet::singleton(x), s->sign);
  const Normalized nx = normalize_to_gplus(x);
  const Normalized ny = normalize_to_gplus(y);
  return signed_set(pair_gplus(nx.id, ny.id), nx.sign * ny.sign);
}

ClassSet product_set_class(const ClassSet& x, const ClassId& y) {
  require_exact(y);
  if (const auto* s = std::get_if<ScalarClass>(&y.get())) return signed_set(x, s->sign);
  ClassSet out;
  if (x.has_I) out = out | ClassSet::singleton(y);
  if (x.has_negI) out = out | ClassSet::singleton(y.negated());
  for (int eps : {1, -1})
    for (int delta : {1, -1})
      if (x.has_par(eps, delta)) out = out | product_pair(ClassId::parabolic(eps, delta), y);
  out = out | elliptic_set_times(x.ell, y);
  out = out | hyp_set_times(x.hyp_pos, 1, y);
  out = out | hyp_set_times(x.hyp_neg, -1, y);
  return out;
}

ClassSet product_n(std::span<const ClassId> factors) {
  const Stripped s = strip_scalars(factors);
  const auto& f = s.factors;
  if (f.empty()) return ClassSet::singleton(ClassId::scalar(s.sign));
  ClassSet acc = f.size() == 1 ? ClassSet::singleton(f[0]) : product_pair(f[0], f[1]);
  for (std::size_t i = 2; i < f.size(); ++i) acc = product_set_class(acc, f[i]);
  if (f.size() >= 5 && !acc.is_whole())
    throw std::logic_error("product of five or more non-scalar classes is not the whole group");
  return signed_set(acc, s.sign);
}

ClassSet product_direct(std::span<const ClassId> factors) {
  const Stripped s = strip_scalars(factors);
  const auto& f = s.factors;
  ClassSet out;
  switch (f.size()) {
    case 0: return ClassSet::singleton(ClassId::scalar(s.sign));
    case 1: out = ClassSet::singleton(f[0]); break;
    case 2: out = product_pair(f[0], f[1]); break;
    case 3: out = triple_direct(f); break;
    case 4: {
      // Every triple contains Cl4 and Cl4 times any non-scalar class
      // contains everything but +-I, so only the scalars need deciding.
      const ClassSet head = triple_direct({f[0], f[1], f[2]});
      const ClassId last_inv = f[3].inverted();
      out = notation("{I | -I}^c");
      out.has_I = head.contains(last_inv);
      out.has_negI = head.contains(last_inv.negated());
      break;
    }
    default: out = ClassSet::whole(); break;
  }
  return signed_set(out, s.sign);
}

bool scalar_membership(std::span<const ClassId> factors, int sign) {
  if (factors.size() < 2) throw DomainError("scalar membership needs at least two factors");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const ClassId target = sign > 0 ? factors.back().inverted() : factors.back().inverted().negated();
  return product_n(factors.first(factors.size() - 1)).contains(target);
}

bool figure1_contains_identity(const Angle& a, const Angle& b, const Angle& c) {
  const std::vector<ClassId> q{ClassId::elliptic(a), ClassId::elliptic(b), ClassId::elliptic(c)};
  return scalar_membership(q, 1);
}

namespace {

std::vector<Rational> lattice(const Rational& step, const Rational& lo, const Rational& hi, const Rational& skip) {
  if (step <= 0) throw DomainError("grid step must be positive");
  std::vector<Rational> out;
  for (Rational v = lo + step; v < hi; v += step)
    if (v != skip) out.push_back(v);
  return out;
}

std::vector<Figure1Row> grid_rows(const std::vector<Rational>& values) {
  auto to_angle = [](const Rational& v) { return Angle(Parameter(v < 0 ? v + 2 : v)); };
  std::vector<Figure1Row> rows;
  rows.reserve(values.size() * values.size() * values.size());
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values)
        rows.push_back({a, b, c, figure1_contains_identity(to_angle(a), to_angle(b), to_angle(c))});
  return rows;
}

}  // namespace

std::vector<Figure1Row> figure1_grid(const Rational& step) { return grid_rows(lattice(step, 0, 2, 1)); }

std::vector<Figure1Row> figure1_grid_signed(const Rational& step) {
  // Lattice points k*step in ]-1,1[ \ {0}.
  if (step <= 0) throw DomainError("grid step must be positive");
  std::vector<Rational> values;
  for (Rational v = -step; v > -1; v -= step) values.insert(values.begin(), v);
  for (Rational v = step; v < 1; v += step) values.push_back(v);
  return grid_rows(values);
}

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
  std::ostringstream os;
  os << "alpha,beta,gamma,contains_I\n";
  for (const auto& row : rows)
    os << to_string(row.alpha) << ',' << to_string(row.beta) << ',' << to_string(row.gamma) << ','
       << (row.contains_identity ? "true" : "false") << '\n';
  return os.str();
}

std::vector<TableRow> reconstructed_tables() {
  const auto pp = ClassId::parabolic(1, 1);
  const auto pm = ClassId::parabolic(1, -1);
  auto e = [](std::int64_t p, std::int64_t q) { return ClassId::elliptic(Rational(p, q)); };
  auto h = [](std::int64_t p, std::int64_t q) { return ClassId::hyperbolic(Rational(p, q)); };
  const std::string lemma = "lemma-derived";
  const std::string closure = "inverse-closure, oracle-checked";
  const std::string calculus = "calculus-derived";
  return {
      {"C3[a] * C3[b]", "a+b<1", "C3[a+b,1]>", lemma, {e(1, 3), e(1, 4)}},
      {"C3[a] * C3[b]", "a+b=1", "-I | C4-", lemma, {e(1, 3), e(2, 3)}},
      {"C3[a] * C3[b]", "a+b>1", "C3<[1,a+b]", lemma, {e(2, 3), e(3, 4)}},
      {"C3[a] * C2[++]", "", "C3]a,1]>", lemma, {e(1, 3), pp}},
      {"C3[a] * C2[+-]", "", "C3<[0,a[", lemma, {e(1, 3), pm}},
      {"C2[++] * C2[++]", "", "C3[0,1]>", lemma, {pp, pp}},
      {"C2[++] * C2[+-]", "", "I | C2[++] | C2[+-] | C4+", lemma, {pp, pm}},
      {"C2[+-] * C2[+-]", "", "C3<[1,2]", lemma, {pm, pm}},
      {"C4[l] * C2[++]", "", "C3<[0,1]>", lemma, {h(2, 1), pp}},
      {"C4[l] * C2[+-]", "", "C3<[1,2]>", closure, {h(2, 1), pm}},
      {"C4[l] * C3[a]", "", "C3<[0,1]>", lemma, {h(2, 1), e(1, 3)}},
      {"C4[l] * C4[l]", "", "{-I}^c", closure, {h(2, 1), h(2, 1)}},
      {"C4[l] * C4[m]", "l!=m", "{I | -I}^c", closure, {h(2, 1), h(3, 2)}},
      {"C2[++] * C2[++] * C2[++]", "", "{I}^c", calculus, {pp, pp, pp}},
      {"C2[++] * C2[++] * C2[+-]", "", "{-I | C3[1,2[}^c", calculus, {pp, pp, pm}},
      {"C2[++] * C2[+-] * C2[+-]", "", "{-I | C3]0,1]}^c", calculus, {pp, pm, pm}},
      {"C2[+-] * C2[+-] * C2[+-]", "", "{I}^c", calculus, {pm, pm, pm}},
      {"C3[a] * C2[++] * C2[++]", "", "{I | C3[0,a]}^c", calculus, {e(1, 3), pp, pp}},
      {"C3[a] * C2[++] * C2[+-]", "", "C3<[0,1]>", calculus, {e(1, 3), pp, pm}},
      {"C3[a] * C2[+-] * C2[+-]", "", "{-I | C3[a,1]}^c", calculus, {e(1, 3), pm, pm}},
      {"C3[a] * C3[b] * C2[++]", "a+b<1", "{I | C3[0,a+b]}^c", calculus, {e(1, 3), e(1, 4), pp}},
      {"C3[a] * C3[b] * C2[++]", "a+b>=1", "C3<[1,2]>", calculus, {e(1, 3), e(2, 3), pp}},
      {"C3[a] * C3[b] * C2[+-]", "a+b<=1", "C3<[0,1]>", calculus, {e(1, 3), e(1, 4), pm}},
      {"C3[a] * C3[b] * C2[+-]", "a+b>1", "{I | C3[a+b,2]}^c", calculus, {e(2, 3), e(3, 4), pm}},
      {"C3[a] * C3[b] * C3[c]", "a+b+c<1", "{I | C3[0,a+b+c[}^c", calculus, {e(1, 6), e(1, 4), e(1, 3)}},
      {"C3[a] * C3[b] * C3[c]", "a+b+c=1", "-I | C3<[1,2]>", calculus, {e(1, 3), e(1, 3), e(1, 3)}},
      {"C3[a] * C3[b] * C3[c]", "1<a+b+c<2", "C3<[1,2]>", calculus, {e(1, 2), e(1, 2), e(1, 2)}},
      {"C3[a] * C3[b] * C3[c]", "a+b+c=2", "I | C3<[1,2]>", calculus, {e(2, 3), e(2, 3), e(2, 3)}},
      {"C3[a] * C3[b] * C3[c]", "a+b+c>2", "{-I | C3]a+b+c-2,1]}^c", calculus, {e(3, 4), e(3, 4), e(5, 6)}},
      {"C4[l] * C2[++] * C2[++]", "", "{I}^c", calculus, {h(2, 1), pp, pp}},
      {"C4[l] * C2[++] * C2[+-]", "", "{-I}^c", calculus, {h(2, 1), pp, pm}},
      {"C4[l] * C2[+-] * C2[+-]", "", "{I}^c", calculus, {h(2, 1), pm, pm}},
      {"C4[l] * C3[a] * C2[++]", "", "{I}^c", calculus, {h(2, 1), e(1, 3), pp}},
      {"C4[l] * C3[a] * C2[+-]", "", "{-I}^c", calculus, {h(2, 1), e(1, 3), pm}},
      {"C4[l] * C3[a] * C3[b]", "", "{I}^c", calculus, {h(2, 1), e(1, 3), e(1, 4)}},
      {"C4[l] * C4[m] * X", "X non-scalar", "G", calculus, {h(2, 1), h(3, 2), pp}},
  };
}

}  // namespace sl2
