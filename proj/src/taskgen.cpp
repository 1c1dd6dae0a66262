#include "chaindeck/taskgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "chaindeck/rng.hpp"
#include "chaindeck/verifier.hpp"
#include "json.hpp"

namespace chaindeck {

namespace {

const char* class_tag_name(FunctionLabel::Tag tag) {
  switch (tag) {
    case FunctionLabel::Tag::Power: return "Power";
    case FunctionLabel::Tag::Trig: return "Trig";
    case FunctionLabel::Tag::Log: return "Log";
    case FunctionLabel::Tag::Exp: return "Exp";
    case FunctionLabel::Tag::InvTrig: return "InvTrig";
    case FunctionLabel::Tag::Fixed: return "Fixed";
  }
  return "unknown";
}

FunctionLabel::Tag parse_class_tag(const std::string& name) {
  for (FunctionLabel::Tag tag : {FunctionLabel::Tag::Power, FunctionLabel::Tag::Trig,
                                 FunctionLabel::Tag::Log, FunctionLabel::Tag::Exp,
                                 FunctionLabel::Tag::InvTrig})
    if (name == class_tag_name(tag)) return tag;
  throw std::invalid_argument("unknown function class \"" + name + "\"");
}

const char* op_kind_name(OperationLabel::Kind kind) {
  switch (kind) {
    case OperationLabel::Kind::Sum: return "sum";
    case OperationLabel::Kind::Product: return "product";
    case OperationLabel::Kind::Quotient: return "quotient";
  }
  return "unknown";
}

SimpleFunction draw(FunctionLabel::Tag tag, SplitMix64& rng) {
  switch (tag) {
    case FunctionLabel::Tag::Power:
      return {SimpleFunctionKind::Power, rng.range(2, 10)};
    case FunctionLabel::Tag::Trig: {
      static constexpr SimpleFunctionKind kinds[] = {
          SimpleFunctionKind::Sin, SimpleFunctionKind::Cos, SimpleFunctionKind::Tan,
          SimpleFunctionKind::Sec, SimpleFunctionKind::Csc, SimpleFunctionKind::Cot};
      return {kinds[rng.range(1, 6) - 1], 0};
    }
    case FunctionLabel::Tag::Log:
      if (rng.range(0, 1) == 0) return {SimpleFunctionKind::Ln, 0};
      return {SimpleFunctionKind::LogBase, rng.range(2, 10)};
    case FunctionLabel::Tag::Exp:
      if (rng.range(0, 1) == 0) return {SimpleFunctionKind::ExpNatural, 0};
      return {SimpleFunctionKind::ExpBase, rng.range(2, 10)};
    case FunctionLabel::Tag::InvTrig: {
      static constexpr SimpleFunctionKind kinds[] = {
          SimpleFunctionKind::Arcsin, SimpleFunctionKind::Arccos, SimpleFunctionKind::Arctan};
      return {kinds[rng.range(1, 3) - 1], 0};
    }
    case FunctionLabel::Tag::Fixed: break;
  }
  throw std::logic_error("draw on a non-drawable label");
}

bool draws_once(FunctionLabel::Tag tag, RedrawPolicy policy) {
  switch (policy) {
    case RedrawPolicy::OncePerLabeling: return true;
    case RedrawPolicy::PerOccurrence: return false;
    case RedrawPolicy::Mixed:
      return tag == FunctionLabel::Tag::Power || tag == FunctionLabel::Tag::Trig ||
             tag == FunctionLabel::Tag::InvTrig;
  }
  return true;
}

std::vector<VertexLabel> instantiate_with(const Labeling& spec, SplitMix64& rng,
                                          RedrawPolicy policy) {
  std::vector<VertexLabel> labels = spec.labels;
  for (VertexLabel& label : labels) {
    auto* fn = std::get_if<FunctionLabel>(&label);
    if (!fn || fn->tag == FunctionLabel::Tag::Fixed) continue;
    if (draws_once(fn->tag, policy))
      *fn = FunctionLabel{FunctionLabel::Tag::Fixed, draw(fn->tag, rng)};
  }
  return labels;
}

void check_labeling(const Labeling& lab) {
  if (lab.n < 1 || lab.labels.size() != static_cast<std::size_t>(lab.n))
    throw std::invalid_argument("labeling must assign a label to every vertex 1..n");
  for (const VertexLabel& label : lab.labels) {
    if (const auto* fn = std::get_if<FunctionLabel>(&label)) {
      if ((fn->tag == FunctionLabel::Tag::Fixed) != fn->fixed.has_value())
        throw std::invalid_argument("fixed labels and only fixed labels carry a function");
    } else {
      const auto& op = std::get<OperationLabel>(label);
      if (op.arity < 2) throw std::invalid_argument("operation arity must be at least 2");
      if (op.kind == OperationLabel::Kind::Quotient && op.arity != 2)
        throw std::invalid_argument("quotient is binary");
    }
  }
}

}  // namespace

Labeling make_class_labeling(const std::vector<FunctionLabel::Tag>& tags) {
  Labeling lab;
  lab.n = static_cast<int>(tags.size());
  for (FunctionLabel::Tag tag : tags) {
    if (tag == FunctionLabel::Tag::Fixed)
      throw std::invalid_argument("make_class_labeling takes drawable classes only");
    lab.labels.push_back(FunctionLabel{tag, std::nullopt});
  }
  check_labeling(lab);
  return lab;
}

Labeling parse_labeling(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("labeling is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("labels") || doc.size() != 2)
    throw std::invalid_argument(R"(labeling document must be {"n":..., "labels":{...}})");
  Labeling lab;
  lab.n = doc["n"].get<int>();
  if (lab.n < 1) throw std::invalid_argument("labeling needs n >= 1");
  lab.labels.assign(static_cast<std::size_t>(lab.n), FunctionLabel{});
  std::set<int> seen;
  for (const auto& [key, value] : doc["labels"].items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("label keys must be vertex indices, got \"" + key + "\"");
    }
    if (v < 1 || v > lab.n)
      throw std::invalid_argument("label vertex " + key + " out of range for n=" +
                                  std::to_string(lab.n));
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate label for vertex " + key);
    if (!value.is_object() || value.size() != 1 + value.count("arity"))
      throw std::invalid_argument("label for vertex " + key +
                                  R"( must be {"class":...}, {"fixed":...} or {"op":...})");
    VertexLabel label;
    if (value.contains("class")) {
      label = FunctionLabel{parse_class_tag(value["class"].get<std::string>()), std::nullopt};
    } else if (value.contains("fixed")) {
      label = FunctionLabel{FunctionLabel::Tag::Fixed,
                            parse_simple_function(value["fixed"].get<std::string>())};
    } else if (value.contains("op")) {
      std::string name = value["op"].get<std::string>();
      OperationLabel op;
      if (name == "sum") op.kind = OperationLabel::Kind::Sum;
      else if (name == "product") op.kind = OperationLabel::Kind::Product;
      else if (name == "quotient") op.kind = OperationLabel::Kind::Quotient;
      else throw std::invalid_argument("unknown operation \"" + name + "\"");
      op.arity = value.value("arity", 2);
      label = op;
    } else {
      throw std::invalid_argument("label for vertex " + key + " has no class/fixed/op key");
    }
    lab.labels[static_cast<std::size_t>(v) - 1] = label;
  }
  if (static_cast<int>(seen.size()) != lab.n)
    throw std::invalid_argument("labeling must cover every vertex 1..n");
  check_labeling(lab);
  return lab;
}

std::string labeling_to_string(const Labeling& lab) {
  std::string out;
  for (int v = 1; v <= lab.n; ++v) {
    if (v > 1) out += ",";
    out += std::to_string(v) + ":";
    const VertexLabel& label = lab.labels[static_cast<std::size_t>(v) - 1];
    if (const auto* fn = std::get_if<FunctionLabel>(&label)) {
      out += fn->tag == FunctionLabel::Tag::Fixed ? simple_function_to_text(*fn->fixed)
                                                  : class_tag_name(fn->tag);
    } else {
      const auto& op = std::get<OperationLabel>(label);
      out += std::string(op_kind_name(op.kind)) + "_" + std::to_string(op.arity);
    }
  }
  return out;
}

RedrawPolicy parse_redraw_policy(const std::string& name) {
  if (name == "once") return RedrawPolicy::OncePerLabeling;
  if (name == "per-occurrence") return RedrawPolicy::PerOccurrence;
  if (name == "mixed") return RedrawPolicy::Mixed;
  throw std::invalid_argument("redraw policy must be once, per-occurrence or mixed");
}

Labeling instantiate(const Labeling& spec, std::uint64_t seed, RedrawPolicy policy) {
  check_labeling(spec);
  SplitMix64 rng(seed);
  return Labeling{spec.n, instantiate_with(spec, rng, policy)};
}

Chain path_to_chain(const DirectedPath& p, const Labeling& lab) {
  check_labeling(lab);
  Chain chain;
  for (Vertex v : p.vertices()) {
    if (v > lab.n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no label (n=" +
                                  std::to_string(lab.n) + ")");
    const VertexLabel& label = lab.labels[static_cast<std::size_t>(v) - 1];
    const auto* fn = std::get_if<FunctionLabel>(&label);
    if (!fn)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " carries an operation label; paths compose functions only");
    if (fn->tag != FunctionLabel::Tag::Fixed)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is an uninstantiated class; instantiate the labeling first");
    chain.push_back(*fn->fixed);
  }
  return chain;
}

TaskSet generate_task_set(const Decomposition& d, const Labeling& spec, std::uint64_t seed,
                          RedrawPolicy policy, bool allow_unbalanced, const std::string& source) {
  check_labeling(spec);
  if (spec.n != d.n())
    throw std::invalid_argument("labeling is for n=" + std::to_string(spec.n) +
                                ", decomposition has n=" + std::to_string(d.n()));
  VerificationReport report = verify(d);
  if (!report.is_partition)
    throw std::invalid_argument("decomposition is not a partition of the arc set; refusing to "
                                "generate tasks");
  if (!report.balanced && !allow_unbalanced)
    throw std::invalid_argument("decomposition is unbalanced: " + report.failures.back().message);

  SplitMix64 rng(seed);
  Labeling resolved{spec.n, instantiate_with(spec, rng, policy)};

  TaskSet ts;
  ts.n = d.n();
  ts.profile = report.profile;
  ts.k = report.k;
  ts.labeling = labeling_to_string(spec);
  ts.seed = seed;
  ts.source = source;
  for (const DirectedPath& p : d.paths()) {
    Chain chain;
    for (Vertex v : p.vertices()) {
      const VertexLabel& label = resolved.labels[static_cast<std::size_t>(v) - 1];
      const auto* fn = std::get_if<FunctionLabel>(&label);
      if (!fn)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " carries an operation label; paths compose functions only");
      chain.push_back(fn->tag == FunctionLabel::Tag::Fixed ? *fn->fixed : draw(fn->tag, rng));
    }
    ts.tasks.push_back({p.vertices(), chain, render_latex(chain), render_text(chain)});
  }
  return ts;
}

std::string taskset_to_json(const TaskSet& ts) {
  nlohmann::ordered_json meta;
  meta["n"] = ts.n;
  meta["profile"] = ts.profile ? nlohmann::ordered_json(ts.profile->counts())
                               : nlohmann::ordered_json(nullptr);
  meta["k"] = ts.k ? nlohmann::ordered_json(*ts.k) : nlohmann::ordered_json(nullptr);
  meta["labeling"] = ts.labeling;
  meta["seed"] = ts.seed;
  meta["source"] = ts.source;
  auto tasks = nlohmann::ordered_json::array();
  for (const Task& t : ts.tasks) {
    nlohmann::ordered_json item;
    item["path"] = t.path;
    item["latex"] = t.latex;
    item["text"] = t.text;
    tasks.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["tasks"] = std::move(tasks);
  return doc.dump(2) + "\n";
}

std::string taskset_to_latex(const TaskSet& ts) {
  std::string out = "\\begin{enumerate}\n";
  for (const Task& t : ts.tasks) out += "  \\item $" + t.latex + "$\n";
  out += "\\end{enumerate}\n";
  return out;
}

std::string taskset_to_text(const TaskSet& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.tasks.size(); ++i)
    out += std::to_string(i + 1) + ". " + ts.tasks[i].text + "\n";
  return out;
}

std::string eft_class_name(EftClass c) {
  switch (c) {
    case EftClass::Feasible: return "Feasible";
    case EftClass::SemiFeasible: return "SemiFeasible";
    case EftClass::Infeasible: return "Infeasible";
  }
  return "unknown";
}

EftClass classify_eft(const Eft& t) {
  check_labeling(t.labels);
  if (t.order < 1) throw std::invalid_argument("EFT needs at least one vertex");
  if (t.labels.n != t.order)
    throw std::invalid_argument("EFT labeling must cover exactly its vertices");

  auto m = static_cast<std::size_t>(t.order);
  std::vector<int> in_deg(m + 1, 0), out_deg(m + 1, 0);
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> undirected(m + 1), forward(m + 1);
  for (const Arc& a : t.arcs) {
    if (a.tail < 1 || a.tail > t.order || a.head < 1 || a.head > t.order || a.tail == a.head)
      throw std::invalid_argument("EFT arc out of range or a loop");
    if (!seen.insert({a.tail, a.head}).second)
      throw std::invalid_argument("EFT has a duplicate arc");
    ++out_deg[static_cast<std::size_t>(a.tail)];
    ++in_deg[static_cast<std::size_t>(a.head)];
    undirected[static_cast<std::size_t>(a.tail)].push_back(a.head);
    undirected[static_cast<std::size_t>(a.head)].push_back(a.tail);
    forward[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }

  std::vector<char> visited(m + 1, 0);
  std::vector<int> queue{1};
  visited[1] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : undirected[static_cast<std::size_t>(v)])
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
  }
  for (int v = 1; v <= t.order; ++v)
    if (!visited[static_cast<std::size_t>(v)])
      throw std::invalid_argument("EFT is not connected");

  std::vector<int> pending(in_deg.begin(), in_deg.end());
  std::vector<int> ready;
  for (int v = 1; v <= t.order; ++v)
    if (pending[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int processed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++processed;
    for (int w : forward[static_cast<std::size_t>(v)])
      if (--pending[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  if (processed != t.order) throw std::invalid_argument("EFT contains a cycle");

  bool underfed = false;
  for (int v = 1; v <= t.order; ++v) {
    auto sv = static_cast<std::size_t>(v);
    if (out_deg[sv] > 1) return EftClass::Infeasible;
    const VertexLabel& label = t.labels.labels[sv - 1];
    if (std::holds_alternative<FunctionLabel>(label)) {
      if (in_deg[sv] > 1) return EftClass::Infeasible;
    } else {
      int arity = std::get<OperationLabel>(label).arity;
      if (in_deg[sv] > arity) return EftClass::Infeasible;
      if (in_deg[sv] < arity) underfed = true;
    }
  }
  return underfed ? EftClass::SemiFeasible : EftClass::Feasible;
}

}  // namespace chaindeck
