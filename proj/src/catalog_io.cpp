#include "superalg/catalog_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

#include "superalg/brackets.hpp"

namespace superalg {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "malformed integer '" + s + "'");
  return v;
}

void write_entries(std::ostream& out, const BilinearOp& b) {
  const int d = b.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : b.at(i, j)) out << i << ' ' << j << ' ' << k << ' ' << rat_to_string(c) << '\n';
}

BilinearOp make(int n, int m, const std::vector<std::tuple<int, int, int, int>>& entries) {
  BilinearOp b(SuperSpace(n, m));
  for (const auto& [i, j, k, c] : entries) b.add(i, j, k, Rat(c));
  return b;
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_header = false;
  bool in_assoc = false;
  AlgebraFile file;
  std::set<std::tuple<int, int, int>> seen[2];
  int d = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto t = tokens(raw);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.size() != 4 || t[0] != "superalg") throw ParseError(line, "expected header 'superalg <name> <n> <m>'");
      const int n = parse_int(t[2], line), m = parse_int(t[3], line);
      if (n < 0 || m < 0) throw ParseError(line, "dimensions must be nonnegative");
      file.name = t[1];
      file.product = BilinearOp(SuperSpace(n, m));
      d = n + m;
      have_header = true;
      continue;
    }
    if (t.size() == 1 && t[0] == "assoc") {
      if (in_assoc) throw ParseError(line, "repeated assoc section");
      in_assoc = true;
      file.assoc = BilinearOp(file.product.space());
      continue;
    }
    if (t.size() != 4) throw ParseError(line, "malformed line, expected '<i> <j> <k> <num>/<den>'");
    const int i = parse_int(t[0], line), j = parse_int(t[1], line), k = parse_int(t[2], line);
    if (i < 0 || j < 0 || k < 0 || i >= d || j >= d || k >= d) throw ParseError(line, "index out of range");
    Rat c;
    try {
      c = parse_rat(t[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    if (!seen[in_assoc].insert({i, j, k}).second)
      throw ParseError(line, "duplicate entry " + t[0] + " " + t[1] + " " + t[2]);
    (in_assoc ? *file.assoc : file.product).add(i, j, k, c);
  }
  if (!have_header) throw ParseError(line, "missing header");
  return file;
}

std::string serialize_algebra(const AlgebraFile& file) {
  std::ostringstream out;
  const SuperSpace& s = file.product.space();
  out << "superalg " << file.name << ' ' << s.n << ' ' << s.m << '\n';
  write_entries(out, file.product);
  if (file.assoc) {
    out << "assoc\n";
    write_entries(out, *file.assoc);
  }
  return out.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_algebra(buf.str());
}

void write_algebra_file(const std::string& path, const AlgebraFile& file) {
  const std::string text = serialize_algebra(file);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::string> catalog_names() {
  return {"zero(p|q)",  "idempotent-line",  "grassmann1", "lie2",        "abelian-lie(p|q)",
          "heisenberg-super", "leibniz2", "nonflexible2"};
}

AlgebraFile catalog(const std::string& name) {
  static const std::regex parametrized(R"((zero|abelian-lie)\((\d+)\|(\d+)\))");
  std::smatch match;
  if (std::regex_match(name, match, parametrized)) {
    const int n = std::stoi(match[2]), m = std::stoi(match[3]);
    return {name, BilinearOp(SuperSpace(n, m)), std::nullopt};
  }
  if (name == "idempotent-line") return {name, make(1, 0, {{0, 0, 0, 1}}), std::nullopt};
  if (name == "grassmann1") return {name, make(1, 1, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}), std::nullopt};
  if (name == "lie2") return {name, make(2, 0, {{0, 1, 0, 1}, {1, 0, 0, -1}}), std::nullopt};
  if (name == "heisenberg-super") {
    BilinearOp h = make(1, 2, {{1, 2, 0, 1}, {2, 1, 0, 1}});
    if (!is_lie_superalgebra(h)) throw std::logic_error("heisenberg-super fails the super Jacobi identity");
    return {name, std::move(h), std::nullopt};
  }
  if (name == "leibniz2") return {name, make(2, 0, {{1, 1, 0, 1}}), std::nullopt};
  if (name == "nonflexible2") return {name, make(2, 0, {{0, 0, 1, 1}, {0, 1, 0, 1}}), std::nullopt};
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown algebra '" + name + "'; known: " + known);
}

std::vector<AlgebraFile> catalog_examples() {
  std::vector<AlgebraFile> out;
  for (const char* n : {"zero(1|0)", "zero(1|1)", "idempotent-line", "grassmann1", "lie2", "abelian-lie(2|1)",
                        "heisenberg-super", "leibniz2", "nonflexible2"})
    out.push_back(catalog(n));
  return out;
}

BilinearOp random_superalgebra(std::uint64_t seed, int n, int m, double density) {
  std::mt19937_64 rng(seed);
  const SuperSpace s(n, m);
  const int d = s.dim();
  const auto threshold = static_cast<std::uint64_t>(density * 1000.0);
  BilinearOp b(s);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if ((s.parity(i) + s.parity(j) + s.parity(k)) & 1) continue;
        // Two draws per slot keep the stream aligned whatever the density.
        const std::uint64_t gate = rng() % 1000;
        const long value = static_cast<long>(rng() % 4);
        if (gate < threshold) b.add(i, j, k, Rat(value < 2 ? value - 2 : value - 1));
      }
  return b;
}

}  // namespace superalg
