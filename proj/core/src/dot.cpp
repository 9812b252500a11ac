#include "gmpd/dot.hpp"

namespace gmpd {

std::string dot_quote(const std::string &text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

void DotWriter::add_node(std::string id, std::string label) {
  nodes_.emplace_back(std::move(id), std::move(label));
}

void DotWriter::add_edge(std::string from, std::string to) {
  edges_.emplace_back(std::move(from), std::move(to));
}

namespace {

bool is_plain_id(const std::string &text) {
  if (text.empty() || (text[0] >= '0' && text[0] <= '9')) return false;
  for (char ch : text) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

} // namespace

std::string DotWriter::str() const {
  std::string out = "digraph " + (is_plain_id(name_) ? name_ : dot_quote(name_)) + " {\n";
  for (const auto &[id, label] : nodes_) {
    out += "  " + id + " [label=" + dot_quote(label) + "];\n";
  }
  for (const auto &[from, to] : edges_) {
    out += "  " + from + " -> " + to + ";\n";
  }
  out += "}\n";
  return out;
}

} // namespace gmpd
