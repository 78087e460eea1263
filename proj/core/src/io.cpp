#include "sysstruct/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sysstruct/error.hpp"

namespace sysstruct {

namespace {

struct Section {
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 0;
};

bool is_header_key(const std::string& key) {
  return key == "n" || key == "l" || key == "m" || key == "p";
}

bool is_matrix_key(const std::string& key) {
  return key == "A" || key == "Ahat" || key == "Abar" || key == "Atil" || key == "B" ||
         key == "Bbar" || key == "C" || key == "Cbar" || key == "D";
}

QMatrix build_matrix(const std::map<std::string, Section>& sections, const std::string& name,
                     std::size_t rows, std::size_t cols) {
  const auto it = sections.find(name);
  if (it == sections.end()) {
    if (rows == 0 || cols == 0) return QMatrix(rows, cols);
    raise(errc::parse_error, "missing matrix section '" + name + "'");
  }
  const Section& sec = it->second;
  if (sec.rows.size() != rows)
    raise(errc::parse_error, "matrix '" + name + "' near line " + std::to_string(sec.line_no) +
                                 ": expected " + std::to_string(rows) + " rows, got " +
                                 std::to_string(sec.rows.size()));
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (sec.rows[i].size() != cols)
      raise(errc::parse_error, "matrix '" + name + "' row " + std::to_string(i + 1) +
                                   ": expected " + std::to_string(cols) + " entries, got " +
                                   std::to_string(sec.rows[i].size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_rational(sec.rows[i][j]);
  }
  return m;
}

}  // namespace

GeneralizedRealization parse_realization(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  std::map<std::string, std::size_t> header;
  std::map<std::string, Section> sections;
  Labels labels;
  std::string current;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;

    if (is_header_key(first)) {
      std::size_t value = 0;
      if (!(ls >> value))
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": expected a count after '" + first + "'");
      header[first] = value;
      current.clear();
    } else if (is_matrix_key(first)) {
      current = first;
      if (sections.count(first))
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": duplicate section '" + first + "'");
      sections[first] = Section{{}, line_no};
    } else if (first == "labels") {
      std::string family;
      ls >> family;
      std::vector<std::string>* target = family == "u"   ? &labels.u
                                         : family == "x" ? &labels.x
                                         : family == "w" ? &labels.w
                                         : family == "y" ? &labels.y
                                                         : nullptr;
      if (target == nullptr)
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": labels family must be u, x, w or y");
      std::string name;
      while (ls >> name) target->push_back(name);
      current.clear();
    } else {
      if (current.empty())
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": unexpected token '" + first + "'");
      std::vector<std::string> row{first};
      std::string entry;
      while (ls >> entry) row.push_back(entry);
      sections[current].rows.push_back(std::move(row));
    }
  }

  for (const char* key : {"n", "l", "m", "p"})
    if (!header.count(key)) raise(errc::parse_error, std::string("missing header '") + key + "'");

  GeneralizedRealization g;
  g.n = header["n"];
  g.l = header["l"];
  g.m = header["m"];
  g.p = header["p"];
  g.A = build_matrix(sections, "A", g.n, g.n);
  g.Ahat = build_matrix(sections, "Ahat", g.n, g.l);
  g.Abar = build_matrix(sections, "Abar", g.l, g.n);
  g.Atil = build_matrix(sections, "Atil", g.l, g.l);
  g.B = build_matrix(sections, "B", g.n, g.m);
  g.Bbar = build_matrix(sections, "Bbar", g.l, g.m);
  g.C = build_matrix(sections, "C", g.p, g.n);
  g.Cbar = build_matrix(sections, "Cbar", g.p, g.l);
  g.D = build_matrix(sections, "D", g.p, g.m);
  g.labels = labels;
  g.validate_dimensions();
  return g;
}

namespace {

void append_labels(std::string& out, const char* family, const std::vector<std::string>& names) {
  if (names.empty()) return;
  out += std::string("labels ") + family;
  for (const std::string& name : names) out += " " + name;
  out += "\n";
}

void append_matrix(std::string& out, const char* name, const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return;
  out += name;
  out += "\n";
  out += to_string(m);
}

}  // namespace

std::string write_realization(const GeneralizedRealization& g) {
  std::string out;
  out += "n " + std::to_string(g.n) + "\n";
  out += "l " + std::to_string(g.l) + "\n";
  out += "m " + std::to_string(g.m) + "\n";
  out += "p " + std::to_string(g.p) + "\n";
  append_matrix(out, "A", g.A);
  append_matrix(out, "Ahat", g.Ahat);
  append_matrix(out, "Abar", g.Abar);
  append_matrix(out, "Atil", g.Atil);
  append_matrix(out, "B", g.B);
  append_matrix(out, "Bbar", g.Bbar);
  append_matrix(out, "C", g.C);
  append_matrix(out, "Cbar", g.Cbar);
  append_matrix(out, "D", g.D);
  append_labels(out, "u", g.labels.u);
  append_labels(out, "x", g.labels.x);
  append_labels(out, "w", g.labels.w);
  append_labels(out, "y", g.labels.y);
  return out;
}

std::string write_realization(const StateRealization& r) { return write_realization(as_generalized(r)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::parse_error, "cannot write '" + path + "'");
  out << content;
}

}  // namespace sysstruct
