#include "onemedian/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onemedian/error.hpp"

namespace onemedian {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      fields.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) fields.push_back(tok);
      if (!fields.empty()) return true;
    }
    return false;
  }

  void expect(std::vector<std::string>& fields, std::size_t count, const char* what) {
    if (!next(fields)) fail(std::string("unexpected end of input, expected ") + what);
    if (fields.size() != count) {
      fail(std::string("expected ") + what + " (" + std::to_string(count) + " fields), got " +
           std::to_string(fields.size()) + " field(s)");
    }
  }

  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::Parse) const {
    throw Error(code, "line " + std::to_string(line_no_ == 0 ? 1 : line_no_) + ": " + msg);
  }

  template <typename T>
  T integer(const std::string& s, const char* what) const {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail(std::string("invalid ") + what + " '" + s + "'");
    }
    return value;
  }

  double real(const std::string& s, const char* what) const {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail(std::string("invalid ") + what + " '" + s + "'");
    }
    return value;
  }

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

Graph parse_graph_block(LineReader& reader) {
  std::vector<std::string> f;
  reader.expect(f, 2, "header 'n m_edges'");
  const auto n = reader.integer<NodeId>(f[0], "node count");
  const auto m_edges = reader.integer<std::uint64_t>(f[1], "edge count");
  if (n == 0) reader.fail("node count must be positive");

  std::vector<Edge> edges;
  edges.reserve(m_edges);
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  for (std::uint64_t k = 0; k < m_edges; ++k) {
    reader.expect(f, 3, "edge 'u v cost'");
    const auto u = reader.integer<NodeId>(f[0], "node id");
    const auto v = reader.integer<NodeId>(f[1], "node id");
    const double cost = reader.real(f[2], "cost");
    if (u >= n || v >= n) reader.fail("node id out of range [0, " + std::to_string(n) + ")", Errc::NodeIdOutOfRange);
    if (u == v) reader.fail("self-loop on node " + std::to_string(u), Errc::SelfLoop);
    if (!(cost >= 0.0) || !std::isfinite(cost)) reader.fail("cost must be finite and non-negative", Errc::NegativeCost);
    const std::uint64_t key = static_cast<std::uint64_t>(std::min(u, v)) * n + std::max(u, v);
    auto [it, inserted] = first_seen.emplace(key, reader.line_no());
    if (!inserted) {
      reader.fail("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) +
                      "} (first on line " + std::to_string(it->second) + ")",
                  Errc::DuplicateEdge);
    }
    edges.push_back({u, v, cost});
  }
  return Graph::build(n, edges);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_graph(std::ostream& out, const Graph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edge_list()) {
    out << e.u << ' ' << e.v << ' ' << format_real(e.cost) << '\n';
  }
}

void write_instance(std::ostream& out, const Instance& instance) {
  write_graph(out, instance.graph());
  out << instance.customer_count() << '\n';
  for (std::size_t j = 0; j < instance.customer_count(); ++j) {
    out << instance.customers()[j] << ' ' << format_real(instance.weights()[j]) << '\n';
  }
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  return parse_graph_block(reader);
}

Instance read_instance(std::istream& in) {
  LineReader reader(in);
  Graph graph = parse_graph_block(reader);
  std::vector<std::string> f;
  reader.expect(f, 1, "customer count 'm'");
  const auto m = reader.integer<std::size_t>(f[0], "customer count");
  std::vector<NodeId> customers;
  std::vector<Weight> weights;
  for (std::size_t j = 0; j < m; ++j) {
    reader.expect(f, 2, "customer 'id weight'");
    customers.push_back(reader.integer<NodeId>(f[0], "customer id"));
    weights.push_back(reader.real(f[1], "weight"));
  }
  if (reader.next(f)) reader.fail("trailing content after customer list");
  try {
    return Instance(std::move(graph), std::move(customers), std::move(weights));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("instance rejected: ") + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  return read_instance(in);
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  auto out = open_for_write(path);
  write_instance(out, instance);
  if (!out) throw Error(Errc::Io, "write to '" + path.string() + "' failed");
}

}  // namespace onemedian
