// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sumflow/exact.hpp"

namespace sumflow {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

/// Whitespace tokenizer that keeps a running token ordinal for messages.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : rest_(text) {}

  std::optional<std::string_view> next() {
    while (!rest_.empty() && is_space(rest_.front())) {
      rest_.remove_prefix(1);
    }
    if (rest_.empty()) {
      return std::nullopt;
    }
    std::size_t end = 0;
    while (end < rest_.size() && !is_space(rest_[end])) {
      ++end;
    }
    std::string_view token = rest_.substr(0, end);
    rest_.remove_prefix(end);
    ++ordinal_;
    return token;
  }

  int ordinal() const { return ordinal_; }

 private:
  std::string_view rest_;
  int ordinal_ = 0;
};

long long to_integer(std::string_view token, const std::string& what) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(what + ": expected an integer, got \"" +
                     std::string(token) + "\"");
  }
  return value;
}

FlowInstance make_instance(int node_count, std::vector<Arc> arcs,
                           FlowUnits supply) {
  try {
    return FlowInstance(node_count, std::move(arcs), supply);
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }
}

std::string cell_name(int row, int col) {
  return "entry (" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

}  // namespace

MatrixForm MatrixForm::from_instance(const FlowInstance& instance) {
  MatrixForm form;
  const int n = instance.node_count();
  form.node_count = n;
  form.entries.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  form.supply = instance.supply();
  auto cell = [n](int row, int col) {
    return static_cast<std::size_t>(row - 1) * n + (col - 1);
  };
  for (int row = 1; row <= n; ++row) {
    form.entries[cell(row, row)] = 0;
    for (int col = row + 1; col <= n; ++col) {
      // A zero-capacity arc and no arc at all print identically: capacity
      // 0 above the diagonal, "inf" below it.
      const Arc* arc = instance.find_arc(row, col);
      form.entries[cell(row, col)] = arc == nullptr ? 0 : arc->capacity;
      if (arc != nullptr && arc->capacity > 0) {
        form.entries[cell(col, row)] = arc->cost;
      }
    }
  }
  return form;
}

FlowInstance MatrixForm::to_instance() const {
  const int n = node_count;
  if (n < 2) {
    throw ParseError("node count must be at least 2, got " +
                     std::to_string(n));
  }
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw ParseError("matrix has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  auto cell = [n](int row, int col) {
    return static_cast<std::size_t>(row - 1) * n + (col - 1);
  };
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      const auto& entry = entries[cell(row, col)];
      if (row == col) {
        if (!entry.has_value() || *entry != 0) {
          throw ParseError(cell_name(row, col) + ": diagonal must be 0");
        }
      } else if (row < col) {
        if (!entry.has_value()) {
          throw ParseError(cell_name(row, col) +
                           ": capacity cannot be \"inf\"");
        }
        if (*entry < 0) {
          throw ParseError(cell_name(row, col) + ": negative capacity " +
                           std::to_string(*entry));
        }
      } else if (entry.has_value() && *entry < 0) {
        throw ParseError(cell_name(row, col) + ": negative cost " +
                         std::to_string(*entry));
      }
    }
  }
  std::vector<Arc> arcs;
  for (int tail = 1; tail <= n; ++tail) {
    for (int head = tail + 1; head <= n; ++head) {
      const FlowUnits capacity = *entries[cell(tail, head)];
      const auto& cost = entries[cell(head, tail)];
      if (capacity == 0) {
        continue;  // a finite cost under a zero capacity is dead data
      }
      if (!cost.has_value()) {
        throw ParseError("arc " + std::to_string(tail) + "->" +
                         std::to_string(head) +
                         " has capacity but its cost is \"inf\"");
      }
      arcs.push_back({tail, head, capacity, *cost});
    }
  }
  FlowUnits final_supply;
  if (supply.has_value()) {
    if (*supply < 0) {
      throw ParseError("negative supply " + std::to_string(*supply));
    }
    final_supply = *supply;
  } else {
    final_supply = max_feasible_flow(n, arcs);
  }
  return make_instance(n, std::move(arcs), final_supply);
}

FlowInstance parse_matrix(std::string_view text) {
  Tokenizer tokens(text);
  MatrixForm form;

  const auto head = tokens.next();
  if (!head.has_value()) {
    throw ParseError("empty matrix file");
  }
  form.node_count = static_cast<int>(to_integer(*head, "node count"));
  if (form.node_count < 2) {
    throw ParseError("node count must be at least 2, got " +
                     std::to_string(form.node_count));
  }

  const std::size_t cells =
      static_cast<std::size_t>(form.node_count) * form.node_count;
  form.entries.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const auto token = tokens.next();
    if (!token.has_value()) {
      throw ParseError("matrix ends after " + std::to_string(i) +
                       " entries, expected " + std::to_string(cells));
    }
    if (*token == "inf") {
      form.entries.push_back(std::nullopt);
    } else {
      form.entries.push_back(
          to_integer(*token, "token " + std::to_string(tokens.ordinal())));
    }
  }

  if (auto token = tokens.next()) {
    if (*token != "s") {
      throw ParseError("unexpected token \"" + std::string(*token) +
                       "\" after the matrix (expected \"s <supply>\")");
    }
    const auto value = tokens.next();
    if (!value.has_value()) {
      throw ParseError("supply line ends after \"s\"");
    }
    form.supply = to_integer(*value, "supply");
    if (auto extra = tokens.next()) {
      throw ParseError("unexpected trailing token \"" + std::string(*extra) +
                       "\"");
    }
  }
  return form.to_instance();
}

std::string write_matrix(const FlowInstance& instance) {
  const MatrixForm form = MatrixForm::from_instance(instance);
  const int n = form.node_count;
  std::string out = std::to_string(n);
  out += '\n';
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      const auto& entry =
          form.entries[static_cast<std::size_t>(row - 1) * n + (col - 1)];
      if (col > 1) {
        out += ' ';
      }
      out += entry.has_value() ? std::to_string(*entry) : "inf";
    }
    out += '\n';
  }
  out += "s " + std::to_string(*form.supply) + "\n";
  return out;
}

namespace {

struct DimacsArc {
  NodeId src = 0;
  NodeId dst = 0;
  FlowUnits capacity = 0;
  CostValue cost = 0;
};

/// Topological relabeling: the source must become node 1, the sink node n,
/// everything in between keeps the original relative id order as far as
/// the arc dependencies allow.
std::vector<NodeId> relabel(int n, NodeId source, NodeId sink,
                            const std::vector<DimacsArc>& arcs) {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> in_degree(static_cast<std::size_t>(n) + 1, 0);
  for (const DimacsArc& arc : arcs) {
    out[arc.src].push_back(arc.dst);
    ++in_degree[arc.dst];
  }

  // Min-heap keyed so the source sorts below and the sink above every
  // other node.
  const auto key = [&](NodeId node) {
    if (node == source) return -1;
    if (node == sink) return n + 1;
    return node;
  };
  std::priority_queue<std::pair<int, NodeId>,
                      std::vector<std::pair<int, NodeId>>, std::greater<>>
      ready;
  for (NodeId node = 1; node <= n; ++node) {
    if (in_degree[node] == 0) {
      ready.push({key(node), node});
    }
  }
  std::vector<NodeId> new_label(static_cast<std::size_t>(n) + 1, 0);
  NodeId next_label = 1;
  while (!ready.empty()) {
    const NodeId node = ready.top().second;
    ready.pop();
    new_label[node] = next_label++;
    for (NodeId succ : out[node]) {
      if (--in_degree[succ] == 0) {
        ready.push({key(succ), succ});
      }
    }
  }
  if (next_label <= n) {
    throw ParseError("the arcs form a cycle; only acyclic networks fit the "
                     "index-ordered form");
  }
  // In a DAG the keys force the source first and the sink last unless an
  // arc enters the source or leaves the sink.
  if (new_label[source] != 1) {
    throw ParseError("the source node " + std::to_string(source) +
                     " has incoming arcs");
  }
  if (new_label[sink] != n) {
    throw ParseError("the sink node " + std::to_string(sink) +
                     " has outgoing arcs");
  }
  return new_label;
}

}  // namespace

FlowInstance parse_dimacs(std::string_view text) {
  int n = 0;
  int declared_arcs = 0;
  bool saw_header = false;
  std::vector<std::pair<NodeId, FlowUnits>> node_lines;
  std::vector<DimacsArc> arcs;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;
    const std::string where = "line " + std::to_string(line_number);

    Tokenizer tokens(line);
    const auto kind = tokens.next();
    if (!kind.has_value() || *kind == "c") {
      continue;
    }
    if (*kind == "p") {
      if (saw_header) {
        throw ParseError(where + ": duplicate problem line");
      }
      const auto problem = tokens.next();
      if (!problem.has_value() || *problem != "min") {
        throw ParseError(where + ": expected \"p min <nodes> <arcs>\"");
      }
      const auto nodes_token = tokens.next();
      const auto arcs_token = tokens.next();
      if (!nodes_token || !arcs_token || tokens.next().has_value()) {
        throw ParseError(where + ": expected \"p min <nodes> <arcs>\"");
      }
      n = static_cast<int>(to_integer(*nodes_token, where + " node count"));
      declared_arcs =
          static_cast<int>(to_integer(*arcs_token, where + " arc count"));
      if (n < 2) {
        throw ParseError(where + ": need at least 2 nodes, got " +
                         std::to_string(n));
      }
      if (declared_arcs < 0) {
        throw ParseError(where + ": negative arc count");
      }
      saw_header = true;
      continue;
    }
    if (!saw_header) {
      throw ParseError(where + ": \"" + std::string(*kind) +
                       "\" line before the problem line");
    }
    if (*kind == "n") {
      const auto id_token = tokens.next();
      const auto flux_token = tokens.next();
      if (!id_token || !flux_token || tokens.next().has_value()) {
        throw ParseError(where + ": expected \"n <id> <flux>\"");
      }
      const NodeId id =
          static_cast<NodeId>(to_integer(*id_token, where + " node id"));
      if (id < 1 || id > n) {
        throw ParseError(where + ": node id " + std::to_string(id) +
                         " out of range 1.." + std::to_string(n));
      }
      node_lines.emplace_back(id, to_integer(*flux_token, where + " flux"));
      continue;
    }
    if (*kind == "a") {
      DimacsArc arc;
      const auto src = tokens.next();
      const auto dst = tokens.next();
      const auto low = tokens.next();
      const auto cap = tokens.next();
      const auto cost = tokens.next();
      if (!src || !dst || !low || !cap || !cost || tokens.next().has_value()) {
        throw ParseError(where +
                         ": expected \"a <src> <dst> <low> <cap> <cost>\"");
      }
      arc.src = static_cast<NodeId>(to_integer(*src, where + " src"));
      arc.dst = static_cast<NodeId>(to_integer(*dst, where + " dst"));
      if (arc.src < 1 || arc.src > n || arc.dst < 1 || arc.dst > n) {
        throw ParseError(where + ": arc endpoint out of range 1.." +
                         std::to_string(n));
      }
      if (arc.src == arc.dst) {
        throw ParseError(where + ": self-loop on node " +
                         std::to_string(arc.src));
      }
      const long long lower = to_integer(*low, where + " lower bound");
      if (lower != 0) {
        throw ParseError(where + ": nonzero lower bound " +
                         std::to_string(lower) + " is not supported");
      }
      arc.capacity = to_integer(*cap, where + " capacity");
      arc.cost = to_integer(*cost, where + " cost");
      if (arc.capacity < 0) {
        throw ParseError(where + ": negative capacity");
      }
      if (arc.cost < 0) {
        throw ParseError(where + ": negative cost");
      }
      arcs.push_back(arc);
      continue;
    }
    throw ParseError(where + ": unrecognized line type \"" +
                     std::string(*kind) + "\"");
  }

  if (!saw_header) {
    throw ParseError("missing problem line \"p min <nodes> <arcs>\"");
  }
  if (static_cast<int>(arcs.size()) != declared_arcs) {
    throw ParseError("problem line declares " + std::to_string(declared_arcs) +
                     " arcs but " + std::to_string(arcs.size()) +
                     " were given");
  }
  if (node_lines.size() != 2) {
    throw ParseError("expected exactly one source and one sink node line, "
                     "got " +
                     std::to_string(node_lines.size()) + " node lines");
  }

  auto [first_id, first_flux] = node_lines[0];
  auto [second_id, second_flux] = node_lines[1];
  if (first_flux < 0 || (first_flux == 0 && second_flux > 0)) {
    std::swap(first_id, second_id);
    std::swap(first_flux, second_flux);
  }
  // `first` is now the source candidate, `second` the sink candidate.
  if (first_flux < 0 || second_flux > 0) {
    throw ParseError("need one node with positive flux and one with "
                     "negative flux");
  }
  if (first_id == second_id) {
    throw ParseError("source and sink are the same node " +
                     std::to_string(first_id));
  }
  if (first_flux + second_flux != 0) {
    throw ParseError("source flux " + std::to_string(first_flux) +
                     " does not offset sink flux " +
                     std::to_string(second_flux));
  }

  const std::vector<NodeId> new_label = relabel(n, first_id, second_id, arcs);
  std::vector<Arc> relabeled;
  relabeled.reserve(arcs.size());
  for (const DimacsArc& arc : arcs) {
    relabeled.push_back(
        {new_label[arc.src], new_label[arc.dst], arc.capacity, arc.cost});
  }
  return make_instance(n, std::move(relabeled), first_flux);
}

std::string write_dimacs(const FlowInstance& instance) {
  std::string out = "p min " + std::to_string(instance.node_count()) + " " +
                    std::to_string(instance.arcs().size()) + "\n";
  out += "n 1 " + std::to_string(instance.supply()) + "\n";
  out += "n " + std::to_string(instance.node_count()) + " " +
         std::to_string(-instance.supply()) + "\n";
  for (const Arc& arc : instance.arcs()) {
    out += "a " + std::to_string(arc.tail) + " " + std::to_string(arc.head) +
           " 0 " + std::to_string(arc.capacity) + " " +
           std::to_string(arc.cost) + "\n";
  }
  return out;
}

std::string write_trace(const FlowSolution& solution) {
  std::string out =
      "step,sender,receiver,quantity,unit_cost,leg_cost,cumulative_cost\n";
  CostValue cumulative = 0;
  int step = 0;
  for (const DispatchEvent& event : solution.trace) {
    cumulative += event.leg_cost;
    out += std::to_string(++step) + "," + std::to_string(event.sender) + "," +
           std::to_string(event.receiver) + "," +
           std::to_string(event.quantity) + "," +
           std::to_string(event.unit_cost) + "," +
           std::to_string(event.leg_cost) + "," + std::to_string(cumulative) +
           "\n";
  }
  return out;
}

}  // namespace sumflow
