#include "wdlab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace wdlab {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto body = text.substr(start, end - start);
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::istringstream is{std::string(body)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const char* what, int line, const std::string& msg) {
  throw InvalidArgument(std::string(what) + ": line " + std::to_string(line) + ": " + msg);
}

std::int64_t to_int(const char* what, const Line& line, const std::string& tok) {
  std::int64_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(what, line.number, "expected an integer, got '" + tok + "'");
  return v;
}

// Header "a b" with both non-negative; returns the remaining lines.
std::pair<std::int64_t, std::int64_t> header(const char* what, const std::vector<Line>& lines) {
  if (lines.empty()) throw InvalidArgument(std::string(what) + ": empty input");
  const auto& h = lines.front();
  if (h.tokens.size() != 2) fail(what, h.number, "header needs two integers");
  const auto x = to_int(what, h, h.tokens[0]);
  const auto y = to_int(what, h, h.tokens[1]);
  if (x < 0 || y < 0) fail(what, h.number, "header values must be non-negative");
  return {x, y};
}

void expect_rows(const char* what, const std::vector<Line>& lines, std::int64_t rows) {
  const auto got = static_cast<std::int64_t>(lines.size()) - 1;
  if (got != rows) {
    throw InvalidArgument(std::string(what) + ": header promises " + std::to_string(rows) + " rows, found " +
                          std::to_string(got));
  }
}

Ranking ranking_from(const char* what, const Line& line, std::size_t first, int m) {
  if (line.tokens.size() - first != static_cast<std::size_t>(m)) {
    fail(what, line.number, "expected " + std::to_string(m) + " alternatives");
  }
  std::vector<Alternative> order;
  for (auto i = first; i < line.tokens.size(); ++i) {
    const auto v = to_int(what, line, line.tokens[i]);
    if (v < 0 || v >= m) fail(what, line.number, "alternative " + line.tokens[i] + " out of range");
    order.push_back(static_cast<Alternative>(v));
  }
  try {
    return Ranking(order);
  } catch (const Error& e) {
    fail(what, line.number, e.what());
  }
}

void put_ranking(std::ostringstream& os, const Ranking& r) {
  for (int i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[static_cast<std::size_t>(i)];
}

}  // namespace

Profile parse_profile(std::string_view text) {
  constexpr const char* what = "profile";
  const auto lines = tokenize(text);
  const auto [m, n] = header(what, lines);
  expect_rows(what, lines, n);
  std::vector<Ranking> rs;
  for (std::size_t i = 1; i < lines.size(); ++i) rs.push_back(ranking_from(what, lines[i], 0, static_cast<int>(m)));
  return Profile(static_cast<int>(m), std::move(rs));
}

WeightedProfile parse_weighted_profile(std::string_view text) {
  constexpr const char* what = "weighted profile";
  const auto lines = tokenize(text);
  const auto [m, n] = header(what, lines);
  expect_rows(what, lines, n);
  std::vector<WeightedProfile::Entry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    Rational w;
    try {
      w = parse_rational(line.tokens.front());
    } catch (const Error& e) {
      fail(what, line.number, e.what());
    }
    entries.push_back({ranking_from(what, line, 1, static_cast<int>(m)), w});
  }
  try {
    return WeightedProfile(static_cast<int>(m), std::move(entries));
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

Digraph parse_digraph(std::string_view text) {
  constexpr const char* what = "digraph";
  const auto lines = tokenize(text);
  const auto [m, e] = header(what, lines);
  expect_rows(what, lines, e);
  Digraph g(static_cast<int>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) fail(what, line.number, "an arc needs two endpoints");
    const auto u = to_int(what, line, line.tokens[0]);
    const auto v = to_int(what, line, line.tokens[1]);
    if (u < 0 || u >= m || v < 0 || v >= m) fail(what, line.number, "vertex out of range");
    try {
      g.add_arc(static_cast<int>(u), static_cast<int>(v));
    } catch (const Error& err) {
      fail(what, line.number, err.what());
    }
  }
  return g;
}

X3CInstance parse_x3c(std::string_view text) {
  constexpr const char* what = "x3c";
  const auto lines = tokenize(text);
  const auto [q, s] = header(what, lines);
  expect_rows(what, lines, s);
  std::vector<X3CInstance::Triple> triples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3) fail(what, line.number, "a subset needs three elements");
    X3CInstance::Triple t{};
    for (std::size_t k = 0; k < 3; ++k) t[k] = static_cast<int>(to_int(what, line, line.tokens[k]));
    triples.push_back(t);
  }
  try {
    return X3CInstance(static_cast<int>(q), std::move(triples));
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

std::string format_profile(const Profile& p) {
  std::ostringstream os;
  os << p.num_alternatives() << ' ' << p.num_voters() << '\n';
  for (const auto& r : p) {
    put_ranking(os, r);
    os << '\n';
  }
  return os.str();
}

std::string format_weighted_profile(const WeightedProfile& p) {
  std::ostringstream os;
  os << p.num_alternatives() << ' ' << p.entries().size() << '\n';
  for (const auto& e : p.entries()) {
    os << e.weight.numerator() << '/' << e.weight.denominator() << ' ';
    put_ranking(os, e.ranking);
    os << '\n';
  }
  return os.str();
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_arcs() << '\n';
  for (const auto& [u, v] : g.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string format_x3c(const X3CInstance& inst) {
  std::ostringstream os;
  os << inst.q() << ' ' << inst.s() << '\n';
  for (const auto& t : inst.subsets()) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

nlohmann::json layout_json(const DodgsonReductionOutput& out) {
  return {{"m1", out.profile.num_alternatives()},
          {"n", out.profile.num_voters()},
          {"critical", out.critical},
          {"threshold", out.threshold},
          {"a", out.layout.a},
          {"b", out.layout.b},
          {"subset", out.layout.subset},
          {"swing_count", out.swing_count},
          {"equalizing_count", out.equalizing_count},
          {"incremental_count", out.incremental_count}};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
  if (!f) throw InvalidArgument("cannot write " + path);
}

}  // namespace wdlab
