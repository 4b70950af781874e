#include "emsim/io_text.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "emsim/errors.hpp"

namespace emsim {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

// Reads data lines one at a time, stripping '#' comments and blanks.
class LineReader {
 public:
  LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw IoError("cannot open '" + path + "'");
  }

  // Next non-empty data line tokenized; false at end of file.
  bool next(std::vector<std::string>* toks) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      *toks = tokens_of(raw);
      if (!toks->empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw DataError(path_ + ":" + std::to_string(lineno_) + ": " + why);
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ifstream in_;
  int lineno_ = 0;
};

}  // namespace

std::string fmt_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;  // 64 bytes always suffice for the shortest form
  return std::string(buf, p);
}

double parse_double(const std::string& tok) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw DataError("expected a real number, got '" + tok + "'");
  return v;
}

int64_t parse_int(const std::string& tok) {
  int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw DataError("expected an integer, got '" + tok + "'");
  return v;
}

Electorate load_electorate(const std::string& path) {
  LineReader in(path);
  std::vector<std::string> toks;

  auto expect_count = [&](const char* word) -> int {
    if (!in.next(&toks)) in.fail(std::string("expected '") + word + " <count>'");
    if (toks.size() != 2 || toks[0] != word)
      in.fail(std::string("expected '") + word + " <count>'");
    int64_t n = parse_int(toks[1]);
    if (n < 1) in.fail(std::string(word) + " count must be >= 1");
    return static_cast<int>(n);
  };

  try {
    int m = expect_count("candidates");
    std::vector<Candidate> cands(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
      if (!in.next(&toks)) in.fail("missing candidate line");
      if (toks.size() != 2) in.fail("candidate line needs '<id> <position>'");
      if (parse_int(toks[0]) != c) in.fail("candidate ids must run 0..m-1 in order");
      cands[static_cast<size_t>(c)] = {c, parse_double(toks[1])};
    }

    int n = expect_count("voters");
    std::vector<Voter> voters(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      if (!in.next(&toks)) in.fail("missing voter line");
      if (toks.size() != 2) in.fail("voter line needs '<id> <position>'");
      if (parse_int(toks[0]) != v) in.fail("voter ids must run 0..n-1 in order");
      voters[static_cast<size_t>(v)] = {v, parse_double(toks[1])};
    }

    if (!in.next(&toks)) in.fail("expected 'views' or 'target <id>'");
    ViewMatrix views(n, m);
    if (toks.size() == 1 && toks[0] == "views") {
      for (int v = 0; v < n; ++v) {
        if (!in.next(&toks)) in.fail("missing views line");
        if (static_cast<int>(toks.size()) != m)
          in.fail("views line needs one value per candidate");
        for (int c = 0; c < m; ++c) views.at(v, c) = parse_double(toks[static_cast<size_t>(c)]);
      }
      if (!in.next(&toks)) in.fail("expected 'target <id>'");
    } else {
      // No views block: perception is exact.
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c) views.at(v, c) = cands[static_cast<size_t>(c)].position;
    }

    if (toks.size() != 2 || toks[0] != "target") in.fail("expected 'target <id>'");
    CandidateId target = static_cast<CandidateId>(parse_int(toks[1]));
    if (in.next(&toks)) in.fail("unexpected trailing content");

    return make_electorate(std::move(cands), std::move(voters), std::move(views), target);
  } catch (const ConfigError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void save_electorate(const Electorate& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "candidates " << e.num_candidates() << '\n';
  for (const Candidate& c : e.candidates) out << c.id << ' ' << fmt_double(c.position) << '\n';
  out << "voters " << e.num_voters() << '\n';
  for (const Voter& v : e.voters) out << v.id << ' ' << fmt_double(v.position) << '\n';
  out << "views\n";
  for (int v = 0; v < e.num_voters(); ++v) {
    for (int c = 0; c < e.num_candidates(); ++c) {
      if (c) out << ' ';
      out << fmt_double(e.views(v, c));
    }
    out << '\n';
  }
  out << "target " << e.target << '\n';
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

SocialNetwork load_edge_list(const std::string& path, double default_p) {
  struct Line {
    NodeId u, v;
    double p;
    bool directed;
  };
  std::vector<Line> lines;
  int64_t max_id = -1;
  {
    LineReader in(path);
    std::vector<std::string> toks;
    while (in.next(&toks)) {
      if (toks.size() != 2 && toks.size() != 3)
        in.fail("expected 'u v' (undirected) or 'u v p' (directed)");
      int64_t u = parse_int(toks[0]);
      int64_t v = parse_int(toks[1]);
      if (u < 0 || v < 0) in.fail("node ids must be >= 0");
      double p = toks.size() == 3 ? parse_double(toks[2]) : default_p;
      if (!(p >= 0.0 && p <= 1.0)) in.fail("probability outside [0, 1]");
      if (u == v) in.fail("self-loops are not allowed");
      max_id = std::max({max_id, u, v});
      lines.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), p, toks.size() == 3});
    }
  }
  SocialNetwork net(static_cast<int>(max_id + 1));
  for (const Line& l : lines) {
    net.add_edge(l.u, l.v, l.p);  // duplicates keep the first occurrence
    if (!l.directed) net.add_edge(l.v, l.u, l.p);
  }
  return net;
}

void save_edge_list(const SocialNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  net.for_each_edge([&](NodeId u, NodeId v, double p) {
    out << u << ' ' << v << ' ' << fmt_double(p) << '\n';
  });
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

Partition load_partition(const std::string& path) {
  LineReader in(path);
  std::vector<std::string> toks;
  std::vector<std::pair<int64_t, int64_t>> entries;
  int64_t max_node = -1;
  while (in.next(&toks)) {
    if (toks.size() != 2) in.fail("expected 'node community'");
    int64_t node = parse_int(toks[0]);
    int64_t comm = parse_int(toks[1]);
    if (node < 0) in.fail("node ids must be >= 0");
    if (comm < 0) in.fail("community labels must be >= 0");
    max_node = std::max(max_node, node);
    entries.emplace_back(node, comm);
  }
  if (max_node < 0) throw DataError(path + ": empty partition");
  Partition part;
  part.community.assign(static_cast<size_t>(max_node + 1), -1);
  for (const auto& [node, comm] : entries) {
    if (part.community[static_cast<size_t>(node)] != -1)
      throw DataError(path + ": node " + std::to_string(node) + " listed twice");
    part.community[static_cast<size_t>(node)] = static_cast<int32_t>(comm);
  }
  for (int64_t v = 0; v <= max_node; ++v)
    if (part.community[static_cast<size_t>(v)] == -1)
      throw DataError(path + ": node " + std::to_string(v) + " missing from partition");
  part.validate();  // dense labels 0..k-1
  return part;
}

}  // namespace emsim
