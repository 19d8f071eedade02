#include <doctest.h>

#include "oracles.hpp"
#include "youngschur/error.hpp"
#include "youngschur/measures.hpp"

using namespace youngschur;

namespace {

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

const std::vector<ZParams> kZ = {{q(-1), q(3, 16)}, {q(0), q(1)}, {q(-1), q(5)}};
const std::vector<AlphaParam> kAlpha = {{q(3, 16)}, {q(1, 4)}, {q(5)}};

std::vector<int> raw(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::vector<MeasureSpec> all_specs() {
  std::vector<MeasureSpec> out{MeasureSpec::plancherel(), MeasureSpec::plancherel_shifted()};
  for (const auto& z : kZ) out.push_back(MeasureSpec::z_measure(z));
  for (const auto& a : kAlpha) out.push_back(MeasureSpec::alpha_measure(a));
  return out;
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK_NOTHROW(ZParams::make(q(-1), q(3, 16)));
  CHECK_NOTHROW(ZParams::make(q(0), q(1)));
  CHECK_THROWS_AS(ZParams::make(q(0), q(0)), Error);
  // z = 1, z' = 2: integer roots make some weight vanish
  CHECK(z_admissibility_violation(q(-3), q(2)).has_value());
  // z = -1/4, z' = -3/4: both roots strictly inside (-1, 0)
  CHECK_FALSE(z_admissibility_violation(q(-1), q(3, 16)).has_value());
  // z = -1/2, z' = -5/2 straddle -1 and -2
  CHECK(z_admissibility_violation(q(3), q(5, 4)).has_value());
  CHECK_THROWS_AS(AlphaParam::make(q(0)), Error);
  CHECK_THROWS_AS(AlphaParam::make(q(-1)), Error);
  try {
    ZParams::make(q(-3), q(2));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inadmissible_params);
  }
}

TEST_CASE("alpha to z parameters") {
  CHECK(alpha_to_zparams(AlphaParam::make(q(3, 16))) == ZParams{q(-1), q(3, 16)});
  CHECK(alpha_to_zparams(AlphaParam::make(q(1, 4))) == ZParams{q(-1), q(1, 4)});
  CHECK(alpha_to_zparams(AlphaParam::make(q(5))) == ZParams{q(-1), q(5)});
  CHECK(AlphaParam::make(q(3, 16)).nu() == q(1, 4));
  CHECK(AlphaParam::make(q(1, 4)).nu() == q(0));
  CHECK_FALSE(AlphaParam::make(q(5)).nu().has_value());
  CHECK(AlphaParam::make(q(5)).nu_squared() == q(-19, 4));
}

TEST_CASE("down kernels") {
  CHECK(p_down(Partition{1}, Partition{}) == 1);
  CHECK(p_down(Partition{2, 1}, Partition{2}) == q(1, 2));
  CHECK(p_down(Partition{2, 1}, Partition{1, 1}) == q(1, 2));
  CHECK(p_down(Partition{2}, Partition{1, 1}) == 0);
  CHECK(p_down_shifted(StrictPartition{2, 1}, StrictPartition{2}) == 1);
  CHECK(p_down_shifted(StrictPartition{3, 1}, StrictPartition{3}) == q(1, 2));
  CHECK(p_down_shifted(StrictPartition{3, 1}, StrictPartition{2, 1}) == q(1, 2));
  CHECK(p_down_shifted(StrictPartition{2}, StrictPartition{1}) == 1);
}

TEST_CASE("up kernels") {
  CHECK(p_up_pl(Partition{1}, Partition{2}) == q(1, 2));
  CHECK(p_up_pl_shifted(StrictPartition{2}, StrictPartition{3}) == q(2, 3));
  CHECK(p_up_pl_shifted(StrictPartition{2}, StrictPartition{2, 1}) == q(1, 3));
  CHECK(p_up_pl_shifted(StrictPartition{1}, StrictPartition{2}) == 1);
  for (const auto& z : kZ) CHECK(p_up_z(Partition{}, Partition{1}, z) == 1);
  CHECK(p_up_z(Partition{3, 1}, Partition{3, 2}, ZParams::make(q(-1), q(3, 16))) == q(1, 67));
  CHECK(p_up_z(Partition{1}, Partition{2}, ZParams::make(q(0), q(1))) == q(1, 2));
  for (const auto& a : kAlpha) CHECK(p_up_alpha(StrictPartition{}, StrictPartition{1}, a) == 1);
  const auto a = AlphaParam::make(q(3, 16));
  CHECK(p_up_alpha(StrictPartition{2}, StrictPartition{2, 1}, a) == q(1, 67));
  CHECK(p_up_alpha(StrictPartition{2}, StrictPartition{3}, a) == q(66, 67));
  CHECK_THROWS_AS(p_up_pl(Partition{1}, Partition{3}), Error);
}

TEST_CASE("kernel rows sum to one, |sigma| <= 12") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& sigma : young_layer(n).vertices) {
      std::vector<YoungKernel> kernels{YoungKernel{}};
      for (const auto& z : kZ) kernels.push_back(YoungKernel{z});
      for (const auto& k : kernels) {
        ExactRational sum = 0;
        for (const auto& rho : covers_up(sigma)) {
          const ExactRational v = k(sigma, rho);
          REQUIRE(v > 0);
          sum += v;
        }
        REQUIRE(sum == 1);
        REQUIRE_NOTHROW(k.row(sigma));
      }
      if (n > 0) {
        ExactRational down = 0;
        for (const auto& tau : covers_down(sigma)) down += p_down(sigma, tau);
        REQUIRE(down == 1);
      }
    }
    for (const auto& mu : schur_layer(n).vertices) {
      std::vector<SchurKernel> kernels{SchurKernel{}};
      for (const auto& a : kAlpha) kernels.push_back(SchurKernel{a});
      for (const auto& k : kernels) {
        ExactRational sum = 0;
        for (const auto& lambda : covers_up(mu)) sum += k(mu, lambda);
        REQUIRE(sum == 1);
      }
      if (n > 0) {
        ExactRational down = 0;
        for (const auto& nu : covers_down(mu)) down += p_down_shifted(mu, nu);
        REQUIRE(down == 1);
      }
    }
  }
}

TEST_CASE("small tables") {
  const auto pl = std::get<YoungTable>(build_measure(MeasureSpec::plancherel(), 2));
  CHECK(pl.at(Partition{2}) == q(1, 2));
  CHECK(pl.at(Partition{1, 1}) == q(1, 2));
  const auto al = std::get<SchurTable>(build_measure(MeasureSpec::alpha_measure(AlphaParam::make(q(3, 16))), 3));
  CHECK(al.entries().size() == 2);
  CHECK(al.at(StrictPartition{3}) == q(66, 67));
  CHECK(al.at(StrictPartition{2, 1}) == q(1, 67));
  const auto zt = std::get<YoungTable>(build_measure(MeasureSpec::z_measure(ZParams::make(q(-1), q(3, 16))), 2));
  CHECK(zt.at(Partition{2}) == q(3, 38));
  CHECK(zt.at(Partition{1, 1}) == q(35, 38));
  CHECK(zt.total() == 1);
  CHECK(zt.entries().begin()->first == Partition{2});
}

TEST_CASE("parameter errors and caps") {
  MeasureSpec missing;
  missing.family = Family::z;
  CHECK_THROWS_AS(build_measure(missing, 3), Error);
  CHECK_THROWS_AS(build_measure(MeasureSpec::plancherel(), 25), Error);
  CHECK_THROWS_AS(parse_family("poisson"), Error);
  CHECK(parse_family("plancherel-shifted") == Family::plancherel_shifted);
  CHECK(family_name(Family::alpha) == "alpha");
}

TEST_CASE("Plancherel tables equal their closed forms, n <= 12") {
  for (int n = 0; n <= 12; ++n) {
    const auto ord = std::get<YoungTable>(build_measure(MeasureSpec::plancherel(), n));
    for (const auto& [p, v] : ord.entries()) {
      const mpz_class f = oracle::f_recurrence(raw(p));
      ExactRational expected(f * f, oracle::factorial(n));
      expected.canonicalize();
      REQUIRE(v == expected);
    }
    CHECK(ord == plancherel_closed_table(n));
    const auto sh = std::get<SchurTable>(build_measure(MeasureSpec::plancherel_shifted(), n));
    for (const auto& [s, v] : sh.entries()) {
      const mpz_class g = oracle::g_recurrence({s.parts().begin(), s.parts().end()});
      mpz_class w;
      mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(n - s.length()));
      ExactRational expected(w * g * g, oracle::factorial(n));
      expected.canonicalize();
      REQUIRE(v == expected);
    }
    CHECK(sh == plancherel_shifted_closed_table(n));
  }
}

TEST_CASE("tables are positive and sum to one, n <= 10") {
  for (const auto& spec : all_specs())
    for (int n = 0; n <= 10; ++n) {
      const AnyTable t = build_measure(spec, n);
      std::visit(
          [&](const auto& table) {
            ExactRational sum = 0;
            for (const auto& [d, v] : table.entries()) {
              REQUIRE(v > 0);
              sum += v;
            }
            REQUIRE(sum == 1);
          },
          t);
    }
}

TEST_CASE("coherence examples") {
  CHECK(coherence_check(MeasureSpec::z_measure(ZParams::make(q(-1), q(3, 16))), 6));
  CHECK(coherence_check(MeasureSpec::alpha_measure(AlphaParam::make(q(5))), 6));
}

TEST_CASE("coherence for all four families, n <= 12") {
  for (const auto& spec : all_specs())
    for (int n = 1; n <= 12; ++n) REQUIRE(coherence_check(spec, n));
}

TEST_CASE("z-measure closed form against a cell-product oracle, n <= 10") {
  CHECK(z_measure_closed(Partition{}, kZ[0]) == 1);
  CHECK(z_measure_closed(Partition{1, 1}, kZ[0]) == q(35, 38));
  CHECK(z_measure_closed(Partition{2}, kZ[1]) == q(1, 2));
  for (const auto& z : kZ)
    for (int n = 0; n <= 10; ++n) {
      const auto t = std::get<YoungTable>(build_measure(MeasureSpec::z_measure(z), n));
      for (const auto& [p, v] : t.entries()) {
        REQUIRE(v == z_measure_closed(p, z));
        REQUIRE(v == oracle::z_measure(raw(p), z.s, z.p));
      }
    }
}

TEST_CASE("principal specialization and rising factorial") {
  CHECK(schur_principal(Partition{}, q(7, 3)) == 1);
  CHECK(schur_principal(Partition{1}, q(7, 3)) == q(7, 3));
  CHECK(schur_principal(Partition{2, 1}, q(2)) == 2);
  // s_{(2,1)}(1^3) = 8 semistandard tableaux
  CHECK(schur_principal(Partition{2, 1}, q(3)) == 8);
  CHECK(pochhammer(q(5, 7), 0) == 1);
  CHECK(pochhammer(q(1), 5) == 120);
  CHECK(pochhammer(q(3, 16), 2) == q(57, 256));
}

TEST_CASE("alpha closed form") {
  const auto a = AlphaParam::make(q(3, 16));
  CHECK(alpha_measure_closed(StrictPartition{}, a) == 1);
  CHECK(alpha_measure_closed(StrictPartition{2, 1}, a) == q(1, 67));
  CHECK(alpha_measure_closed(StrictPartition{3}, a) == q(66, 67));
  try {
    alpha_measure_closed(StrictPartition{2}, AlphaParam::make(q(5)));
    FAIL("expected irrational_nu");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::irrational_nu);
  }
  for (const auto& alpha : {q(3, 16), q(1, 4)}) {
    const auto b = AlphaParam::make(alpha);
    for (int n = 0; n <= 10; ++n) {
      const auto t = std::get<SchurTable>(build_measure(MeasureSpec::alpha_measure(b), n));
      for (const auto& [s, v] : t.entries()) REQUIRE(v == alpha_measure_closed(s, b));
    }
  }
}

TEST_CASE("down identity on examples and for every strict cover, |lambda| <= 12") {
  CHECK(verify_prop1(StrictPartition{2, 1}, StrictPartition{2}));
  CHECK(verify_prop1(StrictPartition{1}, StrictPartition{}));
  CHECK(verify_prop1(StrictPartition{3}, StrictPartition{2}));
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : schur_layer(n).vertices)
      for (const auto& mu : covers_down(lambda)) {
        const auto [lhs, rhs] = prop1_sides(lambda, mu);
        REQUIRE(lhs == rhs);
        REQUIRE(lhs == p_down_shifted(lambda, mu));
      }
}

TEST_CASE("alpha up kernel as a sum of z up kernels, |lambda| <= 10") {
  const auto a = AlphaParam::make(q(3, 16));
  const auto spot = prop3_sides(StrictPartition{2}, StrictPartition{2, 1}, a);
  CHECK(spot.lhs == q(1, 67));
  CHECK(spot.rhs == q(1, 67));
  CHECK(verify_prop3(StrictPartition{}, StrictPartition{1}, a));
  CHECK(verify_prop3(StrictPartition{2}, StrictPartition{3}, a));
  for (const auto& b : kAlpha)
    for (int n = 1; n <= 10; ++n)
      for (const auto& lambda : schur_layer(n).vertices)
        for (const auto& mu : covers_down(lambda)) REQUIRE(verify_prop3(mu, lambda, b));
}

TEST_CASE("proportionality of the alpha measure and the doubled z measure") {
  CHECK(proportionality_check(1, AlphaParam::make(q(3, 16))).constant);
  const auto r3 = proportionality_check(3, AlphaParam::make(q(3, 16)));
  CHECK(r3.constant);
  CHECK(r3.ratios.size() == 2);
  CHECK(proportionality_check(5, AlphaParam::make(q(5))).constant);
  for (const auto& alpha : {q(3, 16), q(5)})
    for (int n = 0; n <= 8; ++n) {
      const auto r = proportionality_check(n, AlphaParam::make(alpha));
      REQUIRE(r.constant);
      REQUIRE(r.ratio.has_value());
      REQUIRE(*r.ratio > 0);
    }
}

TEST_CASE("z kernel approaches the Plancherel kernel as p grows") {
  const std::vector<std::pair<Partition, Partition>> edges = {
      {Partition{1}, Partition{2}}, {Partition{2, 1}, Partition{2, 1, 1}}, {Partition{3, 1}, Partition{3, 2}}};
  for (const auto& [sigma, rho] : edges) {
    ExactRational previous = -1;
    for (long t : {100L, 10000L, 1000000L}) {
      const ExactRational diff = abs(p_up_z(sigma, rho, ZParams::make(q(0), q(t))) - p_up_pl(sigma, rho));
      if (previous >= 0) CHECK(diff <= previous);
      previous = diff;
    }
    CHECK(previous < q(1, 10000));
  }
}
