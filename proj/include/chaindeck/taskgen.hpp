#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chaindeck/digraph.hpp"
#include "chaindeck/expressions.hpp"
#include "chaindeck/spectrum.hpp"

namespace chaindeck {

// A function-class label: one of the five drawable classes, or a fixed
// concrete function.
struct FunctionLabel {
  enum class Tag { Power, Trig, Log, Exp, InvTrig, Fixed };

  Tag tag = Tag::Fixed;
  std::optional<SimpleFunction> fixed;  // set iff tag == Fixed

  bool operator==(const FunctionLabel&) const = default;
};

struct OperationLabel {
  enum class Kind { Sum, Product, Quotient };

  Kind kind = Kind::Sum;
  int arity = 2;  // >= 2; Quotient is always 2

  bool operator==(const OperationLabel&) const = default;
};

using VertexLabel = std::variant<FunctionLabel, OperationLabel>;

// Total assignment of labels to vertices 1..n; labels[v-1] is vertex v's.
// Need not be injective.
struct Labeling {
  int n = 0;
  std::vector<VertexLabel> labels;
};

Labeling make_class_labeling(const std::vector<FunctionLabel::Tag>& tags);

// JSON: {"n":5,"labels":{"1":{"class":"Power"},"2":{"fixed":"sin x"},
// "3":{"op":"sum","arity":2},...}}; fixed values use the plain-text simple
// function notation.
Labeling parse_labeling(const std::string& text);
std::string labeling_to_string(const Labeling& lab);  // short description for task-set meta

// When a drawable class re-rolls its parameters: once for the whole
// labeling, once per occurrence on a path, or the mixed default where only
// Exp and Log re-roll per occurrence (their bases visibly vary between
// tasks while trig picks repeat).
enum class RedrawPolicy { OncePerLabeling, PerOccurrence, Mixed };

RedrawPolicy parse_redraw_policy(const std::string& name);

// Draw rules per class: Power exponent uniform on {2..10}; Trig uniform on
// (sin, cos, tan, sec, csc, cot); Log and Exp flip a fair coin (0 natural,
// 1 general) and draw a base on {2..10} when general; InvTrig uniform on
// (arcsin, arccos, arctan). Resolves every class the policy draws once per
// labeling into a Fixed label, visiting vertices in ascending order.
Labeling instantiate(const Labeling& spec, std::uint64_t seed,
                     RedrawPolicy policy = RedrawPolicy::Mixed);

// Composition along the path, first vertex innermost. All labels on the
// path must be Fixed; operation labels are rejected.
Chain path_to_chain(const DirectedPath& p, const Labeling& lab);

struct Task {
  std::vector<Vertex> path;
  Chain chain;
  std::string latex;
  std::string text;
};

struct TaskSet {
  int n = 0;
  std::optional<LengthProfile> profile;
  std::optional<std::int64_t> k;
  std::string labeling;
  std::uint64_t seed = 0;
  std::string source;
  std::vector<Task> tasks;
};

// One task per path, in decomposition order. The input must verify as a
// balanced partition (balance waivable); path lengths are unconstrained
// here. Classes the policy treats as once-per-labeling are resolved first
// (vertices ascending), then per-occurrence classes draw as each path is
// rendered, path by path, vertices innermost first.
TaskSet generate_task_set(const Decomposition& d, const Labeling& spec, std::uint64_t seed,
                          RedrawPolicy policy = RedrawPolicy::Mixed,
                          bool allow_unbalanced = false, const std::string& source = "");

std::string taskset_to_json(const TaskSet& ts);
std::string taskset_to_latex(const TaskSet& ts);
std::string taskset_to_text(const TaskSet& ts);

// A labeled digraph whose arcs point from argument to function; vertices
// are 1..order, labels.n == order.
struct Eft {
  int order = 0;
  std::vector<Arc> arcs;
  Labeling labels;
};

enum class EftClass { Feasible, SemiFeasible, Infeasible };

std::string eft_class_name(EftClass c);

// Degree trichotomy. The digraph must be weakly connected and acyclic
// (structural error otherwise). Infeasible when any vertex has out-degree
// above 1, a function vertex has in-degree above 1, or an operation vertex
// exceeds its arity; semi-feasible when an operation vertex is underfed;
// feasible otherwise.
EftClass classify_eft(const Eft& t);

}  // namespace chaindeck
