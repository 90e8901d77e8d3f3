#include "eulerseq/verify.hpp"

#include <numeric>
#include <sstream>

#include "eulerseq/builtin.hpp"
#include "eulerseq/derivations.hpp"
#include "eulerseq/extclass.hpp"
#include "eulerseq/parser.hpp"
#include "eulerseq/sheaf.hpp"

namespace eulerseq::verify {

namespace {

template <typename F>
Item run_item(const std::string& name, F&& body) {
  Item item{name, false, ""};
  try {
    std::string detail;
    item.pass = body(detail);
    item.detail = detail;
  } catch (const std::exception& e) {
    item.pass = false;
    item.detail = e.what();
  }
  return item;
}

HomogeneousDerivation conic_dz(const GradedRing& ring) {
  const Field& f = ring.field();
  HomogeneousDerivation dz;
  dz.degree = -1;
  dz.images = {MPoly::zero(f, 3), MPoly::constant(f, 3, f.one()), MPoly::zero(f, 3)};
  return dz;
}

bool spans_exactly(const Field& f, const IntDivisor& e, const std::vector<RatFun>& basis,
                   const std::vector<RatFun>& expected) {
  if (basis.size() != expected.size()) return false;
  Eliminator span(f, section_coords(f, e, RatFun::zero(f, "t")).size());
  for (const auto& b : basis) span.add(section_coords(f, e, b));
  for (const auto& x : expected)
    if (!span.contains(section_coords(f, e, x))) return false;
  return true;
}

}  // namespace

std::vector<Item> run_suite() {
  std::vector<Item> items;
  Field q = Field::rationals();
  Field f2 = Field::prime(2);

  items.push_back(run_item("conic: no degree -1 derivation over Q", [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::conic_ring_doc(q)));
    long dim = solve_degree(ring, -1).dimension;
    detail = "dimension " + std::to_string(dim);
    return dim == 0;
  }));

  items.push_back(run_item("conic: d_z spans the degree -1 derivations over F_2",
                           [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::conic_ring_doc(f2)));
    DerivationSpace space = solve_degree(ring, -1);
    detail = "dimension " + std::to_string(space.dimension);
    return space.dimension == 1 && in_span(ring, space, conic_dz(ring));
  }));

  items.push_back(run_item("icis: eta is a degree -1 derivation over Q",
                           [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::icis_ring_doc()));
    VerifyResult r = verify_derivation(ring, builtin::icis_eta(ring));
    detail = r.diagnostic;
    return r.ok;
  }));

  items.push_back(run_item("icis: eta lies in the solved degree -1 space",
                           [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::icis_ring_doc()));
    DerivationSpace space = solve_degree(ring, -1);
    detail = "dimension " + std::to_string(space.dimension);
    return space.dimension >= 1 && in_span(ring, space, builtin::icis_eta(ring));
  }));

  items.push_back(run_item("icis: the euler derivation verifies", [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::icis_ring_doc()));
    VerifyResult r = verify_derivation(ring, euler_derivation(ring));
    detail = r.diagnostic;
    return r.ok;
  }));

  items.push_back(run_item("icis: Hilbert function matches its weight-(4,4,1,1,1) reduction",
                           [&](std::string& detail) {
    GradedRing a(io::load_ring(builtin::icis_ring_doc()));
    GradedRing ar(io::load_ring(builtin::icis_reduced_ring_doc()));
    for (long j = 0; j <= 15; ++j)
      if (a.quotient_dim(2 * j) != ar.quotient_dim(j)) {
        detail = "mismatch at j = " + std::to_string(j);
        return false;
      }
    return true;
  }));

  items.push_back(run_item("icis: Hilbert function matches the complete-intersection series",
                           [&](std::string& detail) {
    GradedRing a(io::load_ring(builtin::icis_ring_doc()));
    std::vector<long> w{8, 8, 5, 2, 2, 2}, degs{10, 10};
    for (long e = 0; e <= 30; ++e)
      if (hilbert_ci_oracle(w, degs, e) != a.quotient_dim(e)) {
        detail = "mismatch at e = " + std::to_string(e);
        return false;
      }
    return true;
  }));

  items.push_back(run_item("conic ring: graded pieces in degrees 1 and 2",
                           [&](std::string& detail) {
    GradedRing ring(io::load_ring(builtin::conic_ring_doc(q)));
    auto p1 = ring.piece(1);
    auto p2 = ring.piece(2);
    std::ostringstream os;
    os << "I_1 rank " << p1->ideal_rank << ", dim A_1 " << p1->quotient_dim << ", I_2 rank "
       << p2->ideal_rank << ", dim A_2 " << p2->quotient_dim;
    detail = os.str();
    return p1->ideal_rank == 0 && p1->quotient_dim == 3 && p2->ideal_rank == 1 &&
           p2->quotient_dim == 5;
  }));

  items.push_back(run_item("conic divisor: ample of degree 2", [&](std::string& detail) {
    QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(q));
    validate_ample(d);
    detail = "degree " + d.degree_str();
    return d.degree_str() == "2";
  }));

  items.push_back(run_item("conic divisor: section dimensions 1,3,5,7",
                           [&](std::string& detail) {
    QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(q));
    auto pieces = section_ring(d, 3);
    std::vector<std::size_t> dims;
    for (const auto& p : pieces) dims.push_back(p.basis.size());
    return dims == std::vector<std::size_t>{1, 3, 5, 7};
  }));

  items.push_back(run_item("conic divisor: unit-twist sections span 1, t, 1/t",
                           [&](std::string& detail) {
    QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(q));
    IntDivisor e = floor_divisor(d, 1);
    SectionSpace s = rr_space(q, e);
    Poly1 one = Poly1::one(q, "t"), t = Poly1::variable(q, "t");
    std::vector<RatFun> expected{RatFun::of(one), RatFun::of(t), RatFun(one, t)};
    return spans_exactly(q, e, s.basis, expected);
  }));

  items.push_back(run_item("conic divisor: three generators and one quadric relation",
                           [&](std::string& detail) {
    QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(q));
    SectionRingModel m = present_section_ring(d, 8);
    std::ostringstream os;
    os << m.generators.size() << " generators, " << m.relations.size() << " relations, complete "
       << m.complete;
    detail = os.str();
    if (!(m.complete && m.generators.size() == 3 && m.relations.size() == 1)) return false;
    if (m.generators[0].degree != 1 || m.generators[1].degree != 1 ||
        m.generators[2].degree != 1 || m.relation_degrees[0] != 2)
      return false;
    // The discovered quotient reproduces the section dimensions.
    GradedRing ring(m.presentation());
    for (long i = 0; i <= 8; ++i)
      if (ring.quotient_dim(i) != static_cast<long>(m.pieces[static_cast<std::size_t>(i)].basis.size()))
        return false;
    return true;
  }));

  items.push_back(run_item("conic d=-1: chart bases match the reference pairs",
                           [&](std::string& detail) {
    (void)detail;
    for (const Field& f : {q, f2}) {
      QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
      for (Chart chart : {Chart::U1, Chart::U2}) {
        std::string v = chart == Chart::U1 ? "t" : "s";
        ChartModule m = chart_basis(d, -1, chart);
        Poly1 u = Poly1::variable(f, v);
        // The reference basis (u,1), (u^2,0): containment both ways means the
        // printed bases span the same module up to unimodular change.
        LocalDerivationPair r1{RatFun::of(u), RatFun::one(f, v)};
        LocalDerivationPair r2{RatFun::of(u * u), RatFun::zero(f, v)};
        if (!module_contains(m, r1) || !module_contains(m, r2)) return false;
        auto in_ref = [&](const LocalDerivationPair& pair) {
          // pair = x*(u,1) + y*(u^2,0): x = alpha, y = (sigma - alpha*u)/u^2.
          RatFun x = pair.alpha;
          RatFun y = (pair.sigma - x * RatFun::of(u)) / RatFun::of(u * u);
          return x.is_polynomial() && y.is_polynomial();
        };
        if (!in_ref(m.basis[0]) || !in_ref(m.basis[1])) return false;
      }
    }
    return true;
  }));

  items.push_back(run_item("conic d=-1: (t,1) passes the local conditions",
                           [&](std::string& detail) {
    QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(q));
    std::vector<long long> samples;
    for (long long i = -6; i <= 6; ++i) samples.push_back(i);
    Poly1 t = Poly1::variable(q, "t");
    LocalDerivationPair good{RatFun::of(t), RatFun::one(q, "t")};
    LocalDerivationPair bad{RatFun::one(q, "t"), RatFun::zero(q, "t")};
    return check_local_conditions(good, d, -1, Chart::U1, samples) &&
           !check_local_conditions(bad, d, -1, Chart::U1, samples);
  }));

  items.push_back(run_item("conic d=-1: splitting (0,-2) over F_2 and (-1,-1) over Q",
                           [&](std::string& detail) {
    QDivisorP1 d2 = io::load_divisor(builtin::conic_divisor_doc(f2));
    QDivisorP1 dq = io::load_divisor(builtin::conic_divisor_doc(q));
    SplittingType s2 = splitting_type(d2, -1);
    SplittingType sq = splitting_type(dq, -1);
    std::ostringstream os;
    os << "F_2 (" << s2.a1 << "," << s2.a2 << "), Q (" << sq.a1 << "," << sq.a2 << ")";
    detail = os.str();
    return s2.a1 == 0 && s2.a2 == -2 && sq.a1 == -1 && sq.a2 == -1;
  }));

  items.push_back(run_item("conic d=-1: global sections match the solver dimensions",
                           [&](std::string& detail) {
    for (const Field& f : {q, f2}) {
      QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
      long h0 = h0_twisted(d, -1, 0);
      GradedRing ring(io::load_ring(builtin::conic_ring_doc(f)));
      long der = solve_degree(ring, -1).dimension;
      long expected = f.is_rationals() ? 0 : 1;
      if (h0 != expected || der != expected) {
        detail = "characteristic " + std::to_string(f.characteristic());
        return false;
      }
    }
    return true;
  }));

  items.push_back(run_item(
      "conic d=0: splitting (1,1) in characteristics 0,3,5 and (2,0) in characteristic 2",
      [&](std::string& detail) {
        for (long p : {0L, 2L, 3L, 5L}) {
          Field f = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p));
          QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
          SplittingType st = splitting_type(d, 0);
          long e1 = p == 2 ? 2 : 1, e2 = p == 2 ? 0 : 1;
          if (st.a1 != e1 || st.a2 != e2) {
            detail = "characteristic " + std::to_string(p);
            return false;
          }
        }
        return true;
      }));

  items.push_back(run_item("conic: degree reports at d=-1 and d=0", [&](std::string& detail) {
    EulerReportOptions opts;
    for (const Field& f : {q, f2}) {
      QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
      EulerReport r1 = euler_report(d, -1, opts);
      EulerReport r0 = euler_report(d, 0, opts);
      if (!(r1.a == -2 && r1.b == 0 && r1.consistent)) return false;
      if (!(r0.a == 0 && r0.b == 2 && r0.consistent)) return false;
    }
    return true;
  }));

  items.push_back(run_item("conic: extension class vanishes exactly in characteristic 2",
                           [&](std::string& detail) {
    for (long p : {0L, 2L, 3L, 5L}) {
      Field f = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p));
      QDivisorP1 d = io::load_divisor(builtin::conic_divisor_doc(f));
      CechClass c = cech_cocycle(d, -1);
      bool vanishes = f.is_zero(c.residue);
      if (vanishes != (p == 2)) {
        detail = "characteristic " + std::to_string(p) + ": residue " + f.str(c.residue);
        return false;
      }
      // Residue is -2 as an integer of the field.
      if (!f.eq(c.residue, f.from_int(-2))) return false;
      EulerReport r = euler_report(d, -1, {false, 8, 8});
      bool split_pred = splits(d, -1);
      bool type_pred = (r.splitting.a1 == std::max(r.a, r.b) && r.splitting.a2 == std::min(r.a, r.b));
      if (split_pred != type_pred) return false;
    }
    return true;
  }));

  items.push_back(run_item("point divisor: the classical sequence never splits",
                           [&](std::string& detail) {
    for (long p : {0L, 2L, 3L}) {
      Field f = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p));
      QDivisorP1 d = io::load_divisor(builtin::point_divisor_doc(f));
      if (splits(d, 0)) {
        detail = "characteristic " + std::to_string(p);
        return false;
      }
      SplittingType st = splitting_type(d, 0);
      if (st.a1 != 1 || st.a2 != 1) return false;
    }
    return true;
  }));

  items.push_back(run_item("floor identity sweep (|p|<=7, q<=8, |d|<=6)",
                           [&](std::string& detail) {
    for (long long p = -7; p <= 7; ++p)
      for (long long qq = 1; qq <= 8; ++qq) {
        if (std::gcd(p < 0 ? -p : p, qq) != 1) continue;
        for (long long d = -6; d <= 6; ++d) {
          long long s = s_value(p, qq, d);
          long long smin = s_i_value(p, qq, d, 0).s_i;
          for (long long i = 0; i < qq; ++i) smin = std::min(smin, s_i_value(p, qq, d, i).s_i);
          if (smin != s) {
            detail = "minimum mismatch";
            return false;
          }
          bool congruent = ((p * d) % qq + qq) % qq == (qq - 1) % qq;
          for (long long i = -2 * qq; i <= 2 * qq; ++i) {
            SiValue v = s_i_value(p, qq, d, i);
            long long frac_d = ((p * d) % qq + qq) % qq;
            long long frac_i = ((p * i) % qq + qq) % qq;
            if (v.achieves_minimum != (frac_d + frac_i < qq)) {
              detail = "fractional criterion mismatch";
              return false;
            }
            if (congruent && v.achieves_minimum != (i % qq == 0)) {
              detail = "period characterization mismatch";
              return false;
            }
          }
        }
      }
    return true;
  }));

  return items;
}

}  // namespace eulerseq::verify
