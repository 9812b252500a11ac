#pragma once

#include <string>
#include <vector>

namespace gmpd {

/// Minimal Graphviz digraph writer. Output order is insertion order.
class DotWriter {
public:
  explicit DotWriter(std::string graph_name) : name_(std::move(graph_name)) {}

  void add_node(std::string id, std::string label);
  void add_edge(std::string from, std::string to);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::string str() const;

private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> nodes_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

/// Quotes and escapes a DOT identifier.
std::string dot_quote(const std::string &text);

} // namespace gmpd
