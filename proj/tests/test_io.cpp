#include <doctest.h>

#include "youngschur/error.hpp"
#include "youngschur/table_io.hpp"
#include "youngschur/verify.hpp"

using namespace youngschur;

namespace {

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/16") == q(3, 16));
  CHECK(parse_rational("-6/8") == q(-3, 4));
  CHECK(parse_rational("0.1875") == q(3, 16));
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("-0.5") == q(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(q(3, 38)) == "3/38");
  CHECK(to_string(q(4)) == "4");
  CHECK(to_fraction_string(q(4)) == "4/1");
  CHECK(to_decimal(q(1, 67), 6) == "0.014925");
  CHECK(to_decimal(q(1, 8), 2) == "0.12");  // half-even
  CHECK(to_decimal(q(3, 8), 2) == "0.38");
  CHECK(to_decimal(q(-1, 3), 3) == "-0.333");
  CHECK(rational_sqrt(q(1, 16)) == q(1, 4));
  CHECK_FALSE(rational_sqrt(q(2)).has_value());
}

TEST_CASE("distribution JSON round trip") {
  const MeasureSpec spec = MeasureSpec::alpha_measure(AlphaParam::make(q(3, 16)));
  const AnyTable t = build_measure(spec, 5);
  const auto doc = table_to_json(t, spec.params());
  CHECK(doc["kind"] == "schur");
  CHECK(doc["n"] == 5);
  CHECK(doc["params"]["alpha"] == "3/16");
  CHECK(doc["entries"][0]["parts"] == "5");
  CHECK(doc["entries"][0]["prob_num"].is_string());
  const LoadedTable back = parse_table_json(doc.dump());
  CHECK(back.kind == Kind::strict);
  CHECK(back.n == 5);
  CHECK_FALSE(back.samples.has_value());
  CHECK(tv_distance(back, to_loaded(t)) == 0);
  const auto& entries = std::get<SchurTable>(t).entries();
  REQUIRE(back.entries.size() == entries.size());
  auto it = entries.begin();
  for (const auto& [parts, prob] : back.entries) {
    CHECK(parts == it->first.to_string());
    CHECK(prob == it->second);
    ++it;
  }
}

TEST_CASE("histogram JSON carries counts") {
  EmpiricalTable<Partition> e;
  e.level = 2;
  e.add(Partition{2});
  e.add(Partition{2});
  e.add(Partition{1, 1});
  const auto doc = histogram_to_json(e, {{"seed", "1"}});
  CHECK(doc["samples"] == 3);
  CHECK(doc["entries"][0]["count"] == 2);
  CHECK(doc["entries"][0]["prob_num"] == "2");
  CHECK(doc["entries"][0]["prob_den"] == "3");
  const LoadedTable back = parse_table_json(doc.dump());
  CHECK(back.samples == 3u);
  const auto exact = to_loaded(build_measure(MeasureSpec::plancherel(), 2));
  CHECK(tv_distance(back, exact) == q(1, 6));
}

TEST_CASE("malformed JSON") {
  const auto code_of = [](const std::string& text) {
    try {
      parse_table_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_diagram;  // sentinel: no error
  };
  CHECK(code_of("{") == Errc::parse_error);
  CHECK(code_of(R"({"kind":"young","n":1})") == Errc::parse_error);
  CHECK(code_of(R"({"kind":"tree","n":1,"entries":[]})") == Errc::parse_error);
  CHECK(code_of(R"({"kind":"young","n":2,"entries":[{"parts":"2","prob_num":"1","prob_den":"0"}]})") ==
        Errc::parse_error);
  CHECK(code_of(R"({"kind":"young","n":3,"entries":[{"parts":"2","prob_num":"1","prob_den":"1"}]})") ==
        Errc::level_mismatch);
  CHECK(code_of(R"({"kind":"schur","n":2,"entries":[{"parts":"1,1","prob_num":"1","prob_den":"1"}]})") ==
        Errc::invalid_diagram);
  const auto y2 = parse_table_json(R"({"kind":"young","n":2,"entries":[{"parts":"2","prob_num":"1","prob_den":"1"}]})");
  const auto y3 = parse_table_json(R"({"kind":"young","n":3,"entries":[{"parts":"3","prob_num":"1","prob_den":"1"}]})");
  CHECK_THROWS_AS(tv_distance(y2, y3), Error);
}

TEST_CASE("table renderings") {
  const MeasureSpec spec = MeasureSpec::z_measure(ZParams::make(q(-1), q(3, 16)));
  const AnyTable t = build_measure(spec, 2);
  CHECK(render_table(t, TableFormat::exact, spec.params()) == "2\t3/38\n1,1\t35/38\n");
  CHECK(render_table(t, TableFormat::csv, spec.params(), 4) ==
        "parts,prob_num,prob_den,prob\n\"2\",3,38,0.0789\n\"1,1\",35,38,0.9211\n");
  CHECK_THROWS_AS(parse_table_format("xml"), Error);
}

TEST_CASE("trace JSON") {
  GrowthTrace<Partition> t{{Partition{}, Partition{1}, Partition{1, 1}}, 7, 3};
  const auto doc = trace_to_json(t);
  CHECK(doc.dump() == R"({"index":3,"seed":7,"trace":["","1","1,1"]})");
}

TEST_CASE("verification sweeps pass at small range") {
  for (const auto& name : verification_names()) {
    const VerificationReport r = run_verification(name, 6);
    CAPTURE(name);
    CHECK(r.pass());
    CHECK(r.checked > 0);
    const auto doc = report_to_json(r);
    CHECK(doc["prop"] == name);
    CHECK(doc["status"] == "pass");
    CHECK(doc["n"] == 6);
    CHECK(doc["witnesses"].empty());
  }
  CHECK_THROWS_AS(run_verification("riemann", 3), Error);
}

TEST_CASE("closed forms note the parameters they cannot cover") {
  const VerificationReport r = verify_closed_forms(4);
  CHECK(r.pass());
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("a failing report renders both sides") {
  VerificationReport r;
  r.prop = "demo";
  r.witnesses.push_back({"lambda=(1)", "1/2", "1/3"});
  CHECK_FALSE(r.pass());
  const auto doc = report_to_json(r);
  CHECK(doc["status"] == "fail");
  CHECK(doc["witnesses"][0]["lhs"] == "1/2");
  CHECK(doc["witnesses"][0]["rhs"] == "1/3");
}
