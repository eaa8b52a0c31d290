#include "dof/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dof/errors.hpp"

namespace dof {

void write_dimacs(std::ostream& out, const Formula& phi) {
  const std::size_t stars = phi.count(ClauseKind::Star);
  out << "p cnf " << phi.n_vars() << ' ' << (phi.size() - stars) << '\n';
  if (stars > 0) out << "c star-dropped " << stars << '\n';
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Star) continue;
    for (Literal l : c.literals()) out << l.value() << ' ';
    out << "0\n";
  }
}

namespace {

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Formula read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  Formula phi;
  std::vector<Literal> pending;

  auto finish_clause = [&]() {
    if (pending.empty()) {
      phi.add(Clause::zero());
      return;
    }
    try {
      phi.add(Clause::of(pending));
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok.front() == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      std::string ns;
      std::string ms;
      if (have_header || !(ls >> fmt >> ns >> ms) || fmt != "cnf") {
        throw ParseError("line " + std::to_string(line_no) + ": malformed problem line");
      }
      n = parse_int(ns, line_no);
      m = parse_int(ms, line_no);
      if (n < 0 || m < 0 || n > std::numeric_limits<std::int32_t>::max()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid header counts");
      }
      phi = Formula(static_cast<Var>(n));
      phi.reserve(static_cast<std::size_t>(m));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    do {
      const long long v = parse_int(tok, line_no);
      if (v == 0) {
        finish_clause();
        continue;
      }
      if (v > n || -v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": literal " + tok + " outside +-[" +
                         std::to_string(n) + "]");
      }
      pending.emplace_back(static_cast<std::int32_t>(v));
    } while (ls >> tok);
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!pending.empty()) throw ParseError("last clause is not zero-terminated");
  if (static_cast<long long>(phi.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " clauses, found " + std::to_string(phi.size()));
  }
  return phi;
}

void save_dimacs(const std::filesystem::path& path, const Formula& phi) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_dimacs(out, phi);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

Formula load_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_dimacs(in);
}

}  // namespace dof
