// Copyright 2026 The ellnb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ellnb/enb.hpp"

#include <cmath>

#include "ellnb/errors.hpp"

namespace ellnb {

namespace {

bool is_unit_mod_xn_minus_1(const std::vector<Element>& v) {
  const FieldPtr& f = v.front().field();
  std::vector<Element> xn(v.size() + 1, f->zero());
  xn.front() = -f->one();
  xn.back() = f->one();
  return gcd(Poly(f, v), Poly(f, xn)).degree() == 0;
}

bool has_order(const Curve& e, const Point& p, std::uint64_t n) {
  Point acc = p;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (acc.is_infinity()) return false;
    acc = e.add(acc, p);
  }
  return acc.is_infinity();
}

Point frobenius(const Point& p) {
  if (p.is_infinity()) return p;
  return Point(p.x().frobenius(), p.y().frobenius());
}

std::uint64_t hasse_upper(std::uint64_t q) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= 4 * q) ++s;
  return q + 1 + s;
}

// Validates a user-supplied b against the lifted field.
void validate_b(const EnbParams& p) {
  const Curve ext = p.curve.base_change(p.fqn);
  if (!ext.on_curve(p.b)) fail(ErrorKind::kNotOnCurve, "b is not on E");
  const Point image = p.iso.map(p.b);
  const Point a_ext = p.iso.codomain.embed(p.a, p.fqn);
  if (image != a_ext && image != p.iso.codomain.base_change(p.fqn).neg(a_ext)) {
    fail(ErrorKind::kFrobeniusConditionFailed, "b does not map to +-a");
  }
  if (frobenius(p.b) != ext.add(p.b, ext.embed(p.t, p.fqn))) {
    fail(ErrorKind::kFrobeniusConditionFailed, "phi(b) != b + t");
  }
  if (ext.mul(static_cast<std::int64_t>(p.n), p.b).is_infinity()) {
    fail(ErrorKind::kFrobeniusConditionFailed, "nb = O");
  }
}

}  // namespace

Element element_from_raw(const FieldPtr& f, const RawElement& raw) {
  if (raw.size() > f->abs_degree()) {
    fail(ErrorKind::kInvalidArgument, "element has too many coefficients for " + f->describe());
  }
  const auto p = static_cast<std::int64_t>(f->characteristic());
  std::vector<std::uint32_t> flat;
  for (auto v : raw) flat.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
  return f->from_flat(std::move(flat));
}

Point point_from_raw(const FieldPtr& f, const RawPoint& raw) {
  if (raw.infinity) return Point::infinity();
  return Point(element_from_raw(f, raw.x), element_from_raw(f, raw.y));
}

Point find_torsion_point(const Curve& e, std::uint64_t n) {
  if (n < 2) fail(ErrorKind::kInvalidArgument, "torsion order must be at least 2");
  const std::uint64_t order = e.group_order();
  if (order % n != 0) fail(ErrorKind::kNoTorsionPoint, "n does not divide #E");
  std::optional<Point> found;
  e.for_each_point([&](const Point& p) {
    if (e.point_order(p, order) == n) {
      found = p;
      return false;
    }
    return true;
  });
  if (!found) fail(ErrorKind::kNoTorsionPoint, "no point of order " + std::to_string(n));
  return *found;
}

std::pair<Element, Element> choose_scalars(const Element& c, std::uint64_t n) {
  const FieldPtr& f = c.field();
  if (!c.is_zero()) return {c.inv(), f->zero()};
  const Element nn = f->from_int(static_cast<std::int64_t>(n % f->characteristic()));
  if (nn.is_zero()) fail(ErrorKind::kNoScalarSolution, "c = 0 and p divides n");
  return {f->one(), (f->one() - c) / nn};
}

Lift lift_b(const IsogenyData& iso, const Point& a) {
  const Poly h = preimage_poly(iso, a);
  const FieldPtr fqn = Field::extension(iso.domain.field(), h.coeffs());
  const Curve ext = iso.domain.base_change(fqn);
  const Element x = fqn->gen();
  const Element p1 = iso.y_num1.eval(x);
  if (p1.is_zero()) fail(ErrorKind::kConsistencyFailure, "Y-map is not invertible at x(b)");
  const Element y = (fqn->embed(a.y()) * iso.y_den.eval(x) - iso.y_num0.eval(x)) / p1;
  const Point b0(x, y);
  if (!ext.on_curve(b0)) fail(ErrorKind::kConsistencyFailure, "lifted point is not on E");

  const Point s = ext.sub(frobenius(b0), b0);
  const Point t = ext.embed(iso.t, fqn);
  Point b;
  if (s == t) {
    b = b0;
  } else if (s == ext.neg(t)) {
    b = ext.neg(b0);
  } else {
    fail(ErrorKind::kFrobeniusConditionFailed, "phi(b) - b is not +-t");
  }
  if (ext.mul(static_cast<std::int64_t>(iso.n), b).is_infinity()) {
    fail(ErrorKind::kFrobeniusConditionFailed, "nb = O");
  }
  return {fqn, h, b};
}

std::vector<Element> build_basis(const Curve& e, const Point& t, const Point& b, const Element& sa,
                                 const Element& sb, std::uint64_t n) {
  const FieldPtr& fqn = b.x().field();
  const Curve ext = e.base_change(fqn);
  std::vector<Point> kt = multiples(e, t, n);
  for (auto& p : kt) p = ext.embed(p, fqn);
  const Point minus_b = ext.neg(b);
  const Element A = fqn->embed(sa), B = fqn->embed(sb);
  std::vector<Element> basis;
  basis.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    basis.push_back(A * eval_f(ext, kt[k], kt[(k + 1) % n], minus_b) + B);
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    if (basis[k].frobenius() != basis[(k + 1) % n]) {
      fail(ErrorKind::kNotABasis, "basis is not Frobenius-cyclic");
    }
  }
  return basis;
}

Matrix basis_matrix_inverse(const std::vector<Element>& basis) {
  Matrix m;
  for (const auto& alpha : basis) m.push_back(alpha.field()->to_base(alpha));
  auto inv = inverse(m);
  if (!inv) fail(ErrorKind::kNotABasis, "basis elements are linearly dependent");
  return *inv;
}

std::vector<Element> r_vector(const Curve& e, const Point& t, const Point& r, std::uint64_t n,
                              const Element& sa, const Element& sb) {
  std::vector<Element> out;
  Point p = r;
  for (std::uint64_t j = 0; j < n; ++j) {
    out.push_back(sa * eval_f(e, Point::infinity(), t, p) + sb);
    p = e.add(p, t);
  }
  return out;
}

Point choose_R(const Curve& e, const Point& t, std::uint64_t n, const Element& sa, const Element& sb) {
  std::optional<Point> found;
  e.for_each_point([&](const Point& p) {
    if (e.mul(static_cast<std::int64_t>(n), p).is_infinity()) return true;
    if (!is_unit_mod_xn_minus_1(r_vector(e, t, p, n, sa, sb))) return true;
    found = p;
    return false;
  });
  if (!found) fail(ErrorKind::kNoAuxiliaryPoint, "no F_q-point outside E[n] with invertible R vector");
  return *found;
}

EnbParams params_computation(std::uint64_t q, std::uint64_t n, const Overrides& ov,
                             const SearchConfig& config) {
  if (n < 2) fail(ErrorKind::kInvalidArgument, "n must be at least 2");
  const auto pp = prime_power(q);
  if (!pp) fail(ErrorKind::kInvalidArgument, "q must be a prime power");
  const auto [p, m] = *pp;
  FieldPtr fq;
  if (ov.q_modulus) {
    const FieldPtr fp = Field::prime(p);
    std::vector<Element> mod;
    for (auto v : *ov.q_modulus) mod.push_back(fp->from_int(v));
    fq = Field::extension(fp, mod);
    if (*fq->order() != q) fail(ErrorKind::kInvalidArgument, "q_modulus does not match q");
  } else {
    fq = Field::galois(p, m);
  }
  if (q > kMaxCountingFieldOrder) fail(ErrorKind::kScaleExceeded, "q above 2^20");
  // n | #E and a point outside E[n] force #E >= 2n.
  if (2 * n > hasse_upper(q)) {
    fail(ErrorKind::kParameterSearchExhausted, "no curve order over F_q is a proper multiple of n");
  }

  const std::uint64_t nqv = nq(q, n);
  const bool pinned_curve = ov.curve.has_value();

  auto attempt = [&](const Curve& e) -> std::optional<EnbParams> {
    EnbParams out;
    out.q = q;
    out.n = n;
    out.fq = fq;
    out.curve = e;
    out.nq = nqv;
    out.nq_within_sqrt_q = nqv * nqv <= q;
    out.group_order = e.group_order();
    if (out.group_order % n != 0) {
      if (pinned_curve) fail(ErrorKind::kNoTorsionPoint, "n does not divide #E");
      return std::nullopt;
    }
    if (ov.t) {
      out.t = point_from_raw(fq, *ov.t);
      if (!e.on_curve(out.t)) fail(ErrorKind::kNotOnCurve, "t is not on E");
      if (!has_order(e, out.t, n)) fail(ErrorKind::kKernelOrderMismatch, "t does not have order n");
    } else {
      try {
        out.t = find_torsion_point(e, n);
      } catch (const Error& err) {
        if (pinned_curve || err.kind() != ErrorKind::kNoTorsionPoint) throw;
        return std::nullopt;
      }
    }
    out.iso = velu_quotient(e, out.t, n);
    try {
      out.c = elliptic_constant_c(e, out.t, n);
    } catch (const Error& err) {
      if (pinned_curve || err.kind() != ErrorKind::kNoSafeEvaluationPoint) throw;
      return std::nullopt;
    }
    const Element nn = fq->from_int(static_cast<std::int64_t>(n % p));
    if (ov.scalar_a || ov.scalar_b) {
      if (ov.scalar_a && ov.scalar_b) {
        out.scalar_a = element_from_raw(fq, *ov.scalar_a);
        out.scalar_b = element_from_raw(fq, *ov.scalar_b);
      } else if (ov.scalar_a) {
        out.scalar_a = element_from_raw(fq, *ov.scalar_a);
        if (nn.is_zero()) fail(ErrorKind::kNoScalarSolution, "B cannot be derived when p divides n");
        out.scalar_b = (fq->one() - out.scalar_a * out.c) / nn;
      } else {
        out.scalar_b = element_from_raw(fq, *ov.scalar_b);
        if (out.c.is_zero()) fail(ErrorKind::kNoScalarSolution, "A cannot be derived when c = 0");
        out.scalar_a = (fq->one() - nn * out.scalar_b) / out.c;
      }
      if (out.scalar_a.is_zero() || out.scalar_a * out.c + nn * out.scalar_b != fq->one()) {
        fail(ErrorKind::kInvalidArgument, "scalars must satisfy A != 0 and A c + n B = 1");
      }
    } else {
      try {
        std::tie(out.scalar_a, out.scalar_b) = choose_scalars(out.c, n);
      } catch (const Error&) {
        if (pinned_curve) throw;
        return std::nullopt;
      }
    }
    if (ov.R) {
      out.R = point_from_raw(fq, *ov.R);
      if (!e.on_curve(out.R)) fail(ErrorKind::kNotOnCurve, "R is not on E");
      if (e.mul(static_cast<std::int64_t>(n), out.R).is_infinity()) {
        fail(ErrorKind::kNoAuxiliaryPoint, "auxiliary point is n-torsion");
      }
    } else {
      try {
        out.R = choose_R(e, out.t, n, out.scalar_a, out.scalar_b);
      } catch (const Error&) {
        if (pinned_curve) throw;
        return std::nullopt;
      }
    }

    std::vector<Point> candidates;
    if (ov.a) {
      candidates.push_back(point_from_raw(fq, *ov.a));
      if (!out.iso.codomain.on_curve(candidates.back())) {
        fail(ErrorKind::kNotOnCurve, "a is not on the quotient curve");
      }
    } else {
      std::uint64_t seen = 0;
      out.iso.codomain.for_each_point([&](const Point& pt) {
        candidates.push_back(pt);
        return ++seen < config.budget_points;
      });
    }
    for (const Point& a : candidates) {
      try {
        if (!poly_irreducible(preimage_poly(out.iso, a))) {
          if (ov.a) fail(ErrorKind::kNoGeneratorFound, "preimage polynomial of a is reducible");
          continue;
        }
        Lift lift = lift_b(out.iso, a);
        out.a = a;
        out.fqn = lift.fqn;
        out.modulus = lift.modulus;
        out.b = lift.b;
        if (ov.b) {
          out.b = point_from_raw(out.fqn, *ov.b);
          validate_b(out);
        }
        out.basis = build_basis(e, out.t, out.b, out.scalar_a, out.scalar_b, n);
        out.basis_inverse = basis_matrix_inverse(out.basis);
        return out;
      } catch (const Error& err) {
        if (ov.a) throw;
        if (err.kind() != ErrorKind::kFrobeniusConditionFailed && err.kind() != ErrorKind::kNotABasis) {
          throw;
        }
      }
    }
    if (pinned_curve) fail(ErrorKind::kNoGeneratorFound, "no suitable point a on the quotient curve");
    return std::nullopt;
  };

  if (pinned_curve) {
    std::array<Element, 5> coeffs;
    for (std::size_t i = 0; i < 5; ++i) coeffs[i] = element_from_raw(fq, (*ov.curve)[i]);
    if (auto r = attempt(Curve(fq, coeffs))) return *r;
    fail(ErrorKind::kParameterSearchExhausted, "pinned curve yields no parameters");
  }

  const std::uint64_t total = q * q * q * q * q;
  const std::uint64_t limit = std::min(total, config.budget_curves);
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    std::array<Element, 5> coeffs;
    std::uint64_t r = idx;
    for (std::size_t i = 5; i-- > 0;) {
      coeffs[i] = fq->from_index(r % q);
      r /= q;
    }
    std::optional<Curve> e;
    try {
      e.emplace(fq, coeffs);
    } catch (const Error&) {
      continue;
    }
    if (auto res = attempt(*e)) return *res;
  }
  fail(ErrorKind::kParameterSearchExhausted,
       "no parameters within " + std::to_string(limit) + " curves");
}

std::vector<std::string> check_structure(const EnbParams& p) {
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  const Curve& e = p.curve;
  check(e.on_curve(p.t) && has_order(e, p.t, p.n), "order(t) = n");
  check(e.on_curve(p.R) && !e.mul(static_cast<std::int64_t>(p.n), p.R).is_infinity(), "nR != O");
  const Curve ext = e.base_change(p.fqn);
  check(ext.on_curve(p.b), "b on E");
  check(frobenius(p.b) == ext.add(p.b, ext.embed(p.t, p.fqn)), "phi(b) = b + t");
  check(!ext.mul(static_cast<std::int64_t>(p.n), p.b).is_infinity(), "nb != O");
  const Element nn = p.fq->from_int(static_cast<std::int64_t>(p.n % p.fq->characteristic()));
  check(!p.scalar_a.is_zero() && p.scalar_a * p.c + nn * p.scalar_b == p.fq->one(), "A c + n B = 1");
  Matrix m;
  for (const auto& alpha : p.basis) m.push_back(p.fqn->to_base(alpha));
  check(p.basis.size() == p.n && rank(m) == p.n, "basis linearly independent");
  bool cyclic = p.basis.size() == p.n;
  for (std::uint64_t k = 0; cyclic && k < p.n; ++k) {
    cyclic = p.basis[k].frobenius() == p.basis[(k + 1) % p.n];
  }
  check(cyclic, "alpha_{k+1} = phi(alpha_k)");
  return failures;
}

}  // namespace ellnb
