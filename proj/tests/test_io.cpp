#include "exm/json_io.hpp"
#include "exm/selftest.hpp"

#include <doctest.h>

using namespace exm;

TEST_CASE("group json round trip") {
    for (const GroupSpec& G : {GroupSpec::real_add(), GroupSpec::pos_mul(), GroupSpec::int_add(),
                               GroupSpec::finite(CayleyTable::symmetric3())}) {
        CHECK(group_from_json(group_to_json(G)) == G);
    }
    CHECK_THROWS_AS(group_from_json(parse_json_text("{\"type\":\"circle\"}")),
                    std::invalid_argument);
}

TEST_CASE("set json matches the documented schema") {
    GroupSpec R = GroupSpec::real_add();
    json j = parse_json_text(R"({"kind":"half_open","intervals":[["0","1"],["3/2","2"]]})");
    SetValue s = set_from_json(j, R);
    CHECK(s == SetValue(IntervalSet(Kind::half_open, {{0, 1}, {Rational(3, 2), 2}})));
    CHECK(set_from_json(set_to_json(s), R) == s);

    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    SetValue f = set_from_json(parse_json_text(R"({"members":[0,2,4]})"), S3);
    CHECK(f == SetValue(FiniteSet::of(6, {0, 2, 4})));

    GroupSpec Z = GroupSpec::int_add();
    SetValue z = set_from_json(parse_json_text(R"({"cofinite":true,"excluded":[5]})"), Z);
    CHECK(z == SetValue(IntSet::all_but({5})));

    CHECK_THROWS_AS(set_from_json(parse_json_text(R"({"kind":"half_open","intervals":[["1/0","2"]]})"), R),
                    std::exception);
}

TEST_CASE("measure json matches the documented schema") {
    GroupSpec R = GroupSpec::real_add();
    MeasureSpec leb = measure_from_json(parse_json_text(R"({"type":"lebesgue","scale":"3"})"), R);
    CHECK(leb.type() == MeasureType::lebesgue_scaled);
    CHECK(leb.scale() == Rational(3));

    MeasureSpec d = measure_from_json(parse_json_text(R"({"type":"dirac","at":"0"})"), R);
    CHECK(d.atom() == Element(Rational(0)));

    MeasureSpec h = measure_from_json(
        parse_json_text(R"({"type":"haar","K0":{"kind":"closed","intervals":[["0","1"]]},"n":10})"), R);
    CHECK(h.type() == MeasureType::haar_estimate);
    CHECK(h.haar_evaluator().n_max == 10);

    for (const MeasureSpec& m : {leb, d, MeasureSpec::counting(GroupSpec::int_add())})
        CHECK(measure_to_json(measure_from_json(measure_to_json(m), m.group())) ==
              measure_to_json(m));
}

TEST_CASE("rect union json matches the documented schema") {
    json j = parse_json_text(
        R"({"slabs":[{"x":["0","1"],"y":{"kind":"half_open","intervals":[["0","3"]]}}]})");
    RectUnion r = rect_union_from_json(j);
    CHECK(r.slice_x(Rational(1, 2)) == IntervalSet::single(Kind::half_open, 0, 3));
    CHECK(product_set_from_json(rect_union_to_json(r), GroupSpec::real_add()) == ProductSet(r));
}

TEST_CASE("simple function json") {
    GroupSpec R = GroupSpec::real_add();
    json j = parse_json_text(
        R"({"pieces":[{"set":{"kind":"half_open","intervals":[["0","3"]]},"value":"2"}]})");
    SimpleFunc f = simple_func_from_json(j, R);
    CHECK(lintegral(MeasureSpec::lebesgue(R, 1), f) == ExtNonneg::finite(6));

    json sj = parse_json_text(
        R"({"dim":2,"pieces":[{"set":{"kind":"half_open","intervals":[["0","1"]]},"value":["1","-2"]}]})");
    StepFuncVec g = step_func_from_json(sj, R);
    CHECK(g.dim() == 2);
    CHECK(step_func_from_json(step_func_to_json(g), R) == g);
}

TEST_CASE("reports serialize deterministically") {
    CheckReport rep("demo");
    rep.seed = 7;
    auto& a = rep.add_case("first");
    a.field("value", Rational(1025, 513));
    a.field("bracket", Bracket{ExtNonneg::finite(Rational(2)), ExtNonneg::finite(Rational(3))});
    auto& b = rep.add_case("second", Verdict::fail);
    b.field("reference", 2.0);
    b.field("residual", ExtNonneg::finite(Rational(1, 8)));

    std::string one = report_to_json(rep, "demo --seed 7");
    std::string two = report_to_json(rep, "demo --seed 7");
    CHECK(one == two);
    CHECK(one.find("\"1025/513\"") != std::string::npos);
    CHECK(one.find("1.99805068226") != std::string::npos);  // 12 significant digits
    CHECK(one.find("\"float_reference\"") != std::string::npos);
    CHECK(one.find("\"max_residual\": \"1/8\"") != std::string::npos);
    CHECK(one.find("\"verdict\": \"fail\"") != std::string::npos);

    std::string csv = report_to_csv(rep);
    int rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 3);  // header + one row per case
}

TEST_CASE("selftest is deterministic across runs and thread counts") {
    CheckReport a = selftest(42, 1);
    CheckReport b = selftest(42, 1);
    CheckReport c = selftest(42, 4);
    std::string ja = report_to_json(a, "selftest --seed 42");
    CHECK(ja == report_to_json(b, "selftest --seed 42"));
    CHECK(ja == report_to_json(c, "selftest --seed 42"));
    CHECK(a.all_pass());
    // a different seed still passes but draws different cases
    CHECK(selftest(7, 1).all_pass());
}
