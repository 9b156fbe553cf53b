#include "hbstrata/limit_classifier.hpp"

#include "hbstrata/error.hpp"

namespace hbstrata {

namespace {

Int as_int(const Rational& r) { return r.numerator(); }

// HN type of a sum of three line bundles, given integral slopes.
HNType lines_type(const Rational& a, const Rational& b, const Rational& c) {
  return HNType({{1, as_int(a)}, {1, as_int(b)}, {1, as_int(c)}});
}

std::string describe(const Rational& v) { return v.to_string(); }

Rational require_integral(const Rational& v, const char* what) {
  if (!v.is_integer()) {
    throw Error(ErrorKind::NonIntegralInvariant,
                std::string(what) + " = " + v.to_string() + " is not an integer (it is a line bundle degree)");
  }
  return v;
}

LimitOutcome classify_case1(const AdmissibleStratum& s, const Rational& slope_i) {
  const Int k = s.genus.canonical_degree();
  const Rational& mu1 = s.mu_vector[0];
  const Rational& mu2 = s.mu_vector[1];
  const Rational& mu3 = s.mu_vector[2];
  const Int d = s.degree();
  const Rational v = require_integral(slope_i, "mu(I)");

  if (mu3 < v && v < mu2) {
    throw Error(ErrorKind::InfeasibleBySpecialization,
                "mu(I) = " + describe(v) + " lies strictly between mu3 = " + describe(mu3) +
                    " and mu2 = " + describe(mu2));
  }
  if (v < mu1 - Rational(k)) {
    throw Error(ErrorKind::SlopeOutOfBounds,
                "mu(I) = " + describe(v) + " < mu1-(2g-2) = " + describe(mu1 - Rational(k)));
  }
  if (v > mu2) {
    throw Error(ErrorKind::SlopeOutOfBounds, "mu(I) = " + describe(v) + " > mu2 = " + describe(mu2));
  }

  const Int d1 = as_int(mu1);
  const Rational t = case1_threshold(s);
  if (v < t) {
    return {CaseTag::C1_1, label::Type12{d1, d - d1}, {d1, d - d1}, s.hn, false};
  }
  if (v == t) {
    const Int q = d - d1 - as_int(v);
    auto poly = make_polystable({{{d1, as_int(v)}, {0, 1}}, {{q}, {2}}});
    return {CaseTag::C1_2, poly, {d1, as_int(v), q}, lines_type(mu1, s.mu, t), true};
  }
  if (v <= mu3) {
    const Rational q = mu2 + mu3 - v;
    return {CaseTag::C1_3, label::Type111{d1, as_int(v), as_int(q)}, {d1, as_int(v), as_int(q)},
            lines_type(mu1, q, v), false};
  }
  // v == mu2 > mu3: I is the maximal destabilizing line bundle E2/E1.
  return {CaseTag::C1_4, label::Type111{d1, as_int(mu2), as_int(mu3)},
          {d1, as_int(mu2), as_int(mu3)}, s.hn, false};
}

LimitOutcome classify_case2(const AdmissibleStratum& s, const Rational& slope_n) {
  const Int k = s.genus.canonical_degree();
  const Rational& mu1 = s.mu_vector[0];
  const Rational& mu2 = s.mu_vector[1];
  const Rational& mu3 = s.mu_vector[2];
  const Rational v = require_integral(slope_n, "mu(N)");

  if (mu2 < v && v < mu1) {
    throw Error(ErrorKind::InfeasibleBySpecialization,
                "mu(N) = " + describe(v) + " lies strictly between mu2 = " + describe(mu2) +
                    " and mu1 = " + describe(mu1));
  }
  const Rational low = mu1 + mu2 - mu3 - Rational(k);
  if (v < low) {
    throw Error(ErrorKind::SlopeOutOfBounds,
                "mu(N) = " + describe(v) + " < mu1+mu2-mu3-(2g-2) = " + describe(low));
  }
  if (v > mu1) {
    throw Error(ErrorKind::SlopeOutOfBounds, "mu(N) = " + describe(v) + " > mu1 = " + describe(mu1));
  }

  const Int deg_e2 = as_int(mu1 + mu2);
  const Int deg_q = as_int(mu3);
  if (v < s.mu) {
    return {CaseTag::C2_1, label::Type21{deg_e2, deg_q}, {deg_e2, deg_q}, s.hn, false};
  }
  const Int n = as_int(v);
  if (v == s.mu) {
    auto poly = make_polystable({{{n}, {0}}, {{deg_e2 - n, deg_q}, {1, 2}}});
    const Rational top = Rational(2, 3) * mu1 + Rational(2, 3) * mu2 - Rational(1, 3) * mu3;
    return {CaseTag::C2_2, poly, {n, deg_e2 - n, deg_q}, lines_type(top, s.mu, mu3), true};
  }
  if (v <= mu2) {
    return {CaseTag::C2_3, label::Type111{n, deg_e2 - n, deg_q}, {n, deg_e2 - n, deg_q},
            lines_type(Rational(deg_e2 - n), v, mu3), false};
  }
  // v == mu1 > mu2: N = E1.
  return {CaseTag::C2_4, label::Type111{as_int(mu1), as_int(mu2), deg_q},
          {as_int(mu1), as_int(mu2), deg_q}, s.hn, false};
}

LimitOutcome classify_case3(const AdmissibleStratum& s, bool aligned) {
  const Int k = s.genus.canonical_degree();
  const Int l1 = as_int(s.mu_vector[0]);
  const Int l2 = as_int(s.mu_vector[1]);
  const Int l3 = as_int(s.mu_vector[2]);
  if (aligned) {
    return {CaseTag::C3_1, label::Type111{l1, l2, l3}, {l1, l2, l3}, s.hn, false};
  }
  if (l1 - l3 > k) {
    throw Error(ErrorKind::AlignmentImpossible,
                "N != E1 needs phi31 != 0, hence mu1-mu3 <= 2g-2, but mu1-mu3 = " +
                    std::to_string(l1 - l3) + " > " + std::to_string(k));
  }
  auto poly = make_polystable({{{l1, l3}, {0, 1}}, {{l2}, {0}}});
  return {CaseTag::C3_2, poly, {l1, l2, l3}, s.hn, true};
}

}  // namespace

std::string to_string(const Invariant& inv) {
  if (auto* i = std::get_if<SlopeI>(&inv)) return i->value.to_string();
  if (auto* n = std::get_if<SlopeN>(&inv)) return n->value.to_string();
  if (auto* a = std::get_if<Aligned>(&inv)) return a->value ? "true" : "false";
  return "-";
}

LimitOutcome classify_semistable(const AdmissibleStratum& s) {
  if (!s.hn.is_semistable()) {
    throw Error(ErrorKind::NotSemistable, "HN type " + s.hn.to_string() + " has more than one step");
  }
  return {CaseTag::Semistable, label::Min{s.rank(), s.degree()}, {s.degree()}, s.hn, false};
}

LimitOutcome classify_rank2(const AdmissibleStratum& s) {
  if (s.rank() != 2) throw Error(ErrorKind::WrongRank, "classify_rank2 needs rank 2");
  if (s.hn.is_semistable()) {
    throw Error(ErrorKind::NotUnstable, "semistable input; use classify_semistable");
  }
  const Int d1 = s.hn.steps()[0].degree;
  return {CaseTag::Rank2Unstable, label::Rank2{d1}, {d1, s.degree() - d1}, s.hn, false};
}

LimitOutcome classify_rank3(const ClassifierInput& input) {
  const auto& s = input.stratum;
  if (s.rank() != 3) throw Error(ErrorKind::WrongRank, "classify_rank3 needs rank 3");
  if (s.hn.is_semistable()) {
    throw Error(ErrorKind::NotUnstable, "semistable input; use classify_semistable");
  }
  switch (case_family_of(s)) {
    case CaseFamily::Case1_I:
      if (auto* i = std::get_if<SlopeI>(&input.invariant)) return classify_case1(s, i->value);
      throw Error(ErrorKind::CaseFamilyMismatch, "mu2 < mu: expected a slope of I");
    case CaseFamily::Case2_N:
      if (auto* n = std::get_if<SlopeN>(&input.invariant)) return classify_case2(s, n->value);
      throw Error(ErrorKind::CaseFamilyMismatch, "mu2 > mu: expected a slope of N");
    case CaseFamily::Case3_flag:
      if (auto* a = std::get_if<Aligned>(&input.invariant)) return classify_case3(s, a->value);
      throw Error(ErrorKind::CaseFamilyMismatch, "mu2 = mu: expected an alignment flag");
    case CaseFamily::None:
      break;
  }
  throw Error(ErrorKind::NotUnstable, "semistable input");
}

LimitOutcome classify(const ClassifierInput& input) {
  const auto& s = input.stratum;
  if (s.hn.is_semistable()) return classify_semistable(s);
  if (s.rank() == 2) return classify_rank2(s);
  return classify_rank3(input);
}

namespace {

AuditEntry entry(std::string name, Rational slope, Rational bound, Relation rel) {
  bool holds = rel == Relation::Less ? slope < bound : slope <= bound;
  return {std::move(name), slope, bound, rel, holds};
}

}  // namespace

std::vector<AuditEntry> stability_audit(const LimitOutcome& outcome, const ClassifierInput& input) {
  const auto& s = input.stratum;
  const auto& gd = outcome.graded_degrees;
  const Rational mu = s.mu;
  const auto split = is_strictly_polystable_case(outcome.case_tag) ? Relation::LessEqual : Relation::Less;
  std::vector<AuditEntry> out;

  auto invariant_value = [&]() -> Rational {
    if (auto* i = std::get_if<SlopeI>(&input.invariant)) return i->value;
    if (auto* n = std::get_if<SlopeN>(&input.invariant)) return n->value;
    throw Error(ErrorKind::CaseFamilyMismatch, "audit needs a slope invariant");
  };

  switch (outcome.case_tag) {
    case CaseTag::Semistable:
      break;
    case CaseTag::Rank2Unstable:
      out.push_back(entry("E/E1", Rational(gd[1]), mu, Relation::Less));
      break;
    case CaseTag::C1_1: {
      const Rational v = invariant_value();
      out.push_back(entry("E1+I", Rational(gd[0]) / 2 + v / 2, mu, Relation::Less));
      out.push_back(entry("E/E1", Rational(gd[1], 2), mu, Relation::Less));
      out.push_back(entry("L in E/E1", s.mu_vector[1], mu, Relation::Less));
      break;
    }
    case CaseTag::C1_2:
    case CaseTag::C1_3:
    case CaseTag::C1_4:
      out.push_back(entry("I+Q", Rational(gd[1] + gd[2], 2), mu, Relation::Less));
      out.push_back(entry("Q", Rational(gd[2]), mu, split));
      break;
    case CaseTag::C2_1: {
      const Rational v = invariant_value();
      out.push_back(entry("N", v, mu, Relation::Less));
      out.push_back(entry("E/E2", Rational(gd[1]), mu, Relation::Less));
      out.push_back(entry("L+E/E2", (s.mu_vector[0] + Rational(gd[1])) / 2, mu, Relation::Less));
      break;
    }
    case CaseTag::C2_2:
    case CaseTag::C2_3:
    case CaseTag::C2_4:
    case CaseTag::C3_1:
      out.push_back(entry("E/E2", Rational(gd[2]), mu, Relation::Less));
      out.push_back(entry("E2/N+E/E2", Rational(gd[1] + gd[2], 2), mu, split));
      break;
    case CaseTag::C3_2:
      out.push_back(entry("E/E2", Rational(gd[2]), mu, Relation::Less));
      out.push_back(entry("E1+E/E2", Rational(gd[0] + gd[2], 2), mu, split));
      out.push_back(entry("L+E/E2 (L != E1)", Rational(gd[1] + gd[2], 2), mu, Relation::Less));
      break;
  }
  return out;
}

}  // namespace hbstrata
