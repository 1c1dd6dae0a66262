#include "chaindeck/taskgen.hpp"

#include <map>
#include <stdexcept>

#include "chaindeck/constructions.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chaindeck;

namespace {

VertexLabel fx(const std::string& text) {
  return FunctionLabel{FunctionLabel::Tag::Fixed, parse_simple_function(text)};
}

VertexLabel cls(FunctionLabel::Tag tag) { return FunctionLabel{tag, std::nullopt}; }

VertexLabel op(OperationLabel::Kind kind, int arity) { return OperationLabel{kind, arity}; }

Labeling five_fixed() {
  return {5, {fx("x^2"), fx("sin x"), fx("ln x"), fx("e^x"), fx("arctan x")}};
}

Decomposition deco(int n, const std::vector<std::vector<Vertex>>& seqs) {
  std::vector<DirectedPath> paths;
  for (const auto& s : seqs) paths.emplace_back(s);
  return {n, std::move(paths)};
}

}  // namespace

TEST_CASE("labeling json and its short description") {
  Labeling lab = parse_labeling(
      R"({"n":3,"labels":{"1":{"class":"Power"},"2":{"fixed":"sin x"},"3":{"op":"sum","arity":2}}})");
  CHECK(lab.n == 3);
  CHECK(labeling_to_string(lab) == "1:Power,2:sin x,3:sum_2");
  CHECK(lab.labels[0] == VertexLabel(cls(FunctionLabel::Tag::Power)));
  CHECK(lab.labels[1] == VertexLabel(fx("sin x")));
  CHECK(lab.labels[2] == VertexLabel(op(OperationLabel::Kind::Sum, 2)));

  // arity defaults to 2
  Labeling q = parse_labeling(R"({"n":1,"labels":{"1":{"op":"quotient"}}})");
  CHECK(labeling_to_string(q) == "1:quotient_2");
}

TEST_CASE("labeling json rejections") {
  for (const char* bad : {
           R"({"n":2,"labels":{"1":{"class":"Power"}}})",                             // uncovered
           R"({"n":1,"labels":{"1":{"class":"Power"},"2":{"class":"Trig"}}})",        // range
           R"({"n":1,"labels":{"0":{"class":"Power"}}})",                             // range
           R"({"n":1,"labels":{"x":{"class":"Power"}}})",                             // key
           R"({"n":1,"labels":{"1":{"class":"Fixed"}}})",                             // class name
           R"({"n":1,"labels":{"1":{"class":"power"}}})",                             // case
           R"({"n":1,"labels":{"1":{"fixed":"frobnicate x"}}})",                      // function
           R"({"n":1,"labels":{"1":{"op":"sum","arity":1}}})",                        // arity
           R"({"n":1,"labels":{"1":{"op":"quotient","arity":3}}})",                   // quotient
           R"({"n":1,"labels":{"1":{"op":"minus"}}})",                                // op name
           R"({"n":1,"labels":{"1":{"class":"Power","fixed":"x^2"}}})",               // two keys
           R"({"n":1,"labels":{"1":{}}})",                                            // no keys
           R"({"n":1,"labels":{"1":{"class":"Power"}},"extra":0})",                   // extra key
           R"({"labels":{"1":{"class":"Power"}}})",                                   // no n
           R"(not json)",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_labeling(bad), std::invalid_argument);
  }
}

TEST_CASE("class labeling helper") {
  Labeling lab = make_class_labeling({FunctionLabel::Tag::Power, FunctionLabel::Tag::Trig,
                                      FunctionLabel::Tag::Log, FunctionLabel::Tag::Exp,
                                      FunctionLabel::Tag::InvTrig});
  CHECK(lab.n == 5);
  CHECK(labeling_to_string(lab) == "1:Power,2:Trig,3:Log,4:Exp,5:InvTrig");
  CHECK_THROWS_AS(make_class_labeling({FunctionLabel::Tag::Fixed}), std::invalid_argument);
}

TEST_CASE("redraw policy names") {
  CHECK(parse_redraw_policy("once") == RedrawPolicy::OncePerLabeling);
  CHECK(parse_redraw_policy("per-occurrence") == RedrawPolicy::PerOccurrence);
  CHECK(parse_redraw_policy("mixed") == RedrawPolicy::Mixed);
  CHECK_THROWS_AS(parse_redraw_policy("sometimes"), std::invalid_argument);
}

TEST_CASE("instantiate resolves classes according to the policy") {
  Labeling spec = make_class_labeling({FunctionLabel::Tag::Power, FunctionLabel::Tag::Trig,
                                       FunctionLabel::Tag::Log, FunctionLabel::Tag::Exp,
                                       FunctionLabel::Tag::InvTrig});

  Labeling once = instantiate(spec, 42, RedrawPolicy::OncePerLabeling);
  for (const auto& label : once.labels)
    CHECK(std::get<FunctionLabel>(label).tag == FunctionLabel::Tag::Fixed);

  Labeling never = instantiate(spec, 42, RedrawPolicy::PerOccurrence);
  CHECK(never.labels == spec.labels);

  Labeling mixed = instantiate(spec, 42, RedrawPolicy::Mixed);
  CHECK(std::get<FunctionLabel>(mixed.labels[0]).tag == FunctionLabel::Tag::Fixed);   // Power
  CHECK(std::get<FunctionLabel>(mixed.labels[1]).tag == FunctionLabel::Tag::Fixed);   // Trig
  CHECK(std::get<FunctionLabel>(mixed.labels[2]).tag == FunctionLabel::Tag::Log);     // stays
  CHECK(std::get<FunctionLabel>(mixed.labels[3]).tag == FunctionLabel::Tag::Exp);     // stays
  CHECK(std::get<FunctionLabel>(mixed.labels[4]).tag == FunctionLabel::Tag::Fixed);   // InvTrig

  CHECK(instantiate(spec, 42, RedrawPolicy::OncePerLabeling).labels == once.labels);
}

TEST_CASE("drawn parameters respect the class ranges") {
  Labeling spec = make_class_labeling({FunctionLabel::Tag::Power, FunctionLabel::Tag::Trig,
                                       FunctionLabel::Tag::Log, FunctionLabel::Tag::Exp,
                                       FunctionLabel::Tag::InvTrig});
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    Labeling lab = instantiate(spec, seed, RedrawPolicy::OncePerLabeling);
    auto get = [&](int v) { return *std::get<FunctionLabel>(lab.labels[v - 1]).fixed; };

    SimpleFunction p = get(1);
    CHECK(p.kind == SimpleFunctionKind::Power);
    CHECK(p.param >= 2);
    CHECK(p.param <= 10);

    auto in = [](SimpleFunctionKind k, std::initializer_list<SimpleFunctionKind> set) {
      for (auto s : set)
        if (k == s) return true;
      return false;
    };
    CHECK(in(get(2).kind, {SimpleFunctionKind::Sin, SimpleFunctionKind::Cos, SimpleFunctionKind::Tan,
                           SimpleFunctionKind::Sec, SimpleFunctionKind::Csc, SimpleFunctionKind::Cot}));
    SimpleFunction lg = get(3);
    CHECK(in(lg.kind, {SimpleFunctionKind::Ln, SimpleFunctionKind::LogBase}));
    if (lg.kind == SimpleFunctionKind::LogBase) {
      CHECK(lg.param >= 2);
      CHECK(lg.param <= 10);
    }
    SimpleFunction ex = get(4);
    CHECK(in(ex.kind, {SimpleFunctionKind::ExpNatural, SimpleFunctionKind::ExpBase}));
    if (ex.kind == SimpleFunctionKind::ExpBase) {
      CHECK(ex.param >= 2);
      CHECK(ex.param <= 10);
    }
    CHECK(in(get(5).kind, {SimpleFunctionKind::Arcsin, SimpleFunctionKind::Arccos,
                           SimpleFunctionKind::Arctan}));
  }
}

TEST_CASE("path composition puts the first vertex innermost") {
  Labeling lab{2, {fx("x^2"), fx("sin x")}};
  CHECK(render_latex(path_to_chain(DirectedPath({1, 2}), lab)) == "\\sin(x^2)");
  CHECK(render_latex(path_to_chain(DirectedPath({2, 1}), lab)) == "(\\sin x)^2");

  Labeling five = five_fixed();
  CHECK(render_latex(path_to_chain(DirectedPath({4, 5, 1, 2}), five)) ==
        "\\sin((\\arctan(e^{x}))^2)");
}

TEST_CASE("path composition rejects unusable labels") {
  Labeling with_op{2, {fx("x^2"), op(OperationLabel::Kind::Sum, 2)}};
  CHECK_THROWS_AS(path_to_chain(DirectedPath({1, 2}), with_op), std::invalid_argument);
  Labeling with_class{2, {fx("x^2"), cls(FunctionLabel::Tag::Trig)}};
  CHECK_THROWS_AS(path_to_chain(DirectedPath({1, 2}), with_class), std::invalid_argument);
  Labeling small{2, {fx("x^2"), fx("sin x")}};
  CHECK_THROWS_AS(path_to_chain(DirectedPath({2, 3}), small), std::invalid_argument);
}

TEST_CASE("task set from the two-vertex decomposition") {
  Labeling lab{2, {fx("x^2"), fx("sin x")}};
  TaskSet ts = generate_task_set(deco(2, {{1, 2}, {2, 1}}), lab, 7);
  CHECK(ts.n == 2);
  CHECK_FALSE(ts.profile.has_value());
  CHECK(ts.k == 2);
  CHECK(ts.labeling == "1:x^2,2:sin x");
  CHECK(ts.seed == 7);
  REQUIRE(ts.tasks.size() == 2);
  CHECK(ts.tasks[0].latex == "\\sin(x^2)");
  CHECK(ts.tasks[1].latex == "(\\sin x)^2");
  CHECK(ts.tasks[0].text == "sin(x^2)");
  CHECK(ts.tasks[1].text == "(sin x)^2");

  CHECK(taskset_to_latex(ts) ==
        "\\begin{enumerate}\n"
        "  \\item $\\sin(x^2)$\n"
        "  \\item $(\\sin x)^2$\n"
        "\\end{enumerate}\n");
  CHECK(taskset_to_text(ts) == "1. sin(x^2)\n2. (sin x)^2\n");

  auto doc = nlohmann::json::parse(taskset_to_json(ts));
  CHECK(doc["meta"]["n"] == 2);
  CHECK(doc["meta"]["profile"].is_null());
  CHECK(doc["meta"]["k"] == 2);
  CHECK(doc["meta"]["seed"] == 7);
  CHECK(doc["tasks"][0]["path"] == nlohmann::json::array({1, 2}));
  CHECK(doc["tasks"][0]["latex"] == "\\sin(x^2)");
}

TEST_CASE("task set preconditions") {
  Labeling lab{2, {fx("x^2"), fx("sin x")}};
  CHECK_THROWS_AS(generate_task_set(deco(2, {{1, 2}}), lab, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_task_set(deco(3, {{1, 2}, {2, 1}}), lab, 0), std::invalid_argument);

  // unbalanced partition: allowed only on request
  auto uneven = deco(6, {{4, 6, 1, 2}, {6, 2, 3, 4}, {2, 4, 5, 6}, {2, 5, 3, 6},
                         {2, 1, 6, 4}, {4, 3, 2, 6}, {6, 5, 4, 2}, {6, 3, 5, 2},
                         {5, 1, 3},    {3, 1, 5},    {1, 4},       {4, 1}});
  Labeling six{6, {fx("x^2"), fx("sin x"), fx("ln x"), fx("e^x"), fx("arctan x"), fx("cos x")}};
  CHECK_THROWS_AS(generate_task_set(uneven, six, 0), std::invalid_argument);
  TaskSet ts = generate_task_set(uneven, six, 0, RedrawPolicy::Mixed, true);
  CHECK(ts.tasks.size() == 12);
  CHECK_FALSE(ts.k.has_value());

  Labeling with_op{2, {fx("x^2"), op(OperationLabel::Kind::Sum, 2)}};
  CHECK_THROWS_AS(generate_task_set(deco(2, {{1, 2}, {2, 1}}), with_op, 0),
                  std::invalid_argument);
}

TEST_CASE("every vertex function reaches exactly k tasks") {
  TaskSet ts = generate_task_set(construct(5, parse_profile("3,4,3")), five_fixed(), 1,
                                 RedrawPolicy::Mixed, false, "n5-1d");
  CHECK(ts.k == 6);
  CHECK(ts.profile == parse_profile("3,4,3"));
  CHECK(ts.source == "n5-1d");
  REQUIRE(ts.tasks.size() == 10);
  std::map<Vertex, int> hits;
  for (const Task& t : ts.tasks)
    for (Vertex v : t.path) ++hits[v];
  for (Vertex v = 1; v <= 5; ++v) CHECK(hits[v] == 6);
}

TEST_CASE("class draws are deterministic per seed") {
  Labeling spec = make_class_labeling({FunctionLabel::Tag::Power, FunctionLabel::Tag::Trig,
                                       FunctionLabel::Tag::Log, FunctionLabel::Tag::Exp,
                                       FunctionLabel::Tag::InvTrig});
  Decomposition d = construct(5, parse_profile("0,10,0"));
  TaskSet a = generate_task_set(d, spec, 99);
  TaskSet b = generate_task_set(d, spec, 99);
  REQUIRE(a.tasks.size() == 10);
  for (std::size_t i = 0; i < a.tasks.size(); ++i) {
    CHECK(a.tasks[i].latex == b.tasks[i].latex);
    CHECK(a.tasks[i].chain.size() == 3);
  }
  CHECK(a.labeling == "1:Power,2:Trig,3:Log,4:Exp,5:InvTrig");
}

TEST_CASE("once-per-labeling draws give each vertex one consistent function") {
  Labeling spec = make_class_labeling(
      std::vector<FunctionLabel::Tag>(5, FunctionLabel::Tag::Exp));
  TaskSet ts = generate_task_set(construct(5, parse_profile("3,4,3")), spec, 5,
                                 RedrawPolicy::OncePerLabeling);
  std::map<Vertex, SimpleFunction> fn;
  for (const Task& t : ts.tasks)
    for (std::size_t i = 0; i < t.path.size(); ++i) {
      auto [it, fresh] = fn.emplace(t.path[i], t.chain[i]);
      if (!fresh) CHECK(it->second == t.chain[i]);
    }
}

TEST_CASE("derivative-tree trichotomy") {
  Labeling fns{4, {fx("x^2"), fx("x^3"), fx("x^4"), fx("sin x")}};

  // chain into a binary sum: (x^3)' and (sin x)' feed +, + feeds the square
  Labeling a_labels{4, {fx("x^2"), op(OperationLabel::Kind::Sum, 2), fx("x^3"), fx("sin x")}};
  Eft a{4, {{2, 1}, {3, 2}, {4, 2}}, a_labels};
  CHECK(classify_eft(a) == EftClass::Feasible);

  // the product vertex never receives its two inputs
  Labeling b_labels{4, {fx("x^2"), op(OperationLabel::Kind::Sum, 2),
                        op(OperationLabel::Kind::Product, 2), fx("sin x")}};
  Eft b{4, {{2, 1}, {3, 2}, {4, 2}}, b_labels};
  CHECK(classify_eft(b) == EftClass::SemiFeasible);

  // a plain function with two incoming results
  Labeling c_labels{4, {fx("x^2"), fx("sin x"), fx("x^4"), op(OperationLabel::Kind::Sum, 2)}};
  Eft c{4, {{2, 1}, {3, 2}, {4, 2}}, c_labels};
  CHECK(classify_eft(c) == EftClass::Infeasible);
}

TEST_CASE("more degree cases") {
  Labeling three{3, {fx("x^2"), fx("x^3"), fx("x^4")}};
  CHECK(classify_eft({3, {{1, 2}, {1, 3}}, three}) == EftClass::Infeasible);  // fan-out

  Labeling overfed{4, {fx("x^2"), fx("x^3"), fx("x^4"), op(OperationLabel::Kind::Sum, 2)}};
  CHECK(classify_eft({4, {{1, 4}, {2, 4}, {3, 4}}, overfed}) == EftClass::Infeasible);

  Labeling ternary{4, {fx("x^2"), fx("x^3"), fx("x^4"), op(OperationLabel::Kind::Sum, 3)}};
  CHECK(classify_eft({4, {{1, 4}, {2, 4}, {3, 4}}, ternary}) == EftClass::Feasible);

  Labeling lone{1, {fx("sin x")}};
  CHECK(classify_eft({1, {}, lone}) == EftClass::Feasible);

  Labeling lone_op{1, {op(OperationLabel::Kind::Sum, 2)}};
  CHECK(classify_eft({1, {}, lone_op}) == EftClass::SemiFeasible);
}

TEST_CASE("structural errors") {
  Labeling two{2, {fx("x^2"), fx("x^3")}};
  Labeling four{4, {fx("x^2"), fx("x^3"), fx("x^4"), fx("sin x")}};
  CHECK_THROWS_AS(classify_eft({2, {{1, 2}, {2, 1}}, two}), std::invalid_argument);   // cycle
  CHECK_THROWS_AS(classify_eft({4, {{1, 2}}, four}), std::invalid_argument);          // split
  CHECK_THROWS_AS(classify_eft({2, {{1, 1}}, two}), std::invalid_argument);           // loop
  CHECK_THROWS_AS(classify_eft({2, {{1, 2}, {1, 2}}, two}), std::invalid_argument);   // dup
  CHECK_THROWS_AS(classify_eft({2, {{1, 3}}, two}), std::invalid_argument);           // range
  CHECK_THROWS_AS(classify_eft({3, {{1, 2}}, two}), std::invalid_argument);           // labels
  CHECK(eft_class_name(EftClass::SemiFeasible) == "SemiFeasible");
}
