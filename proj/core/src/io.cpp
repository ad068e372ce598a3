#include "bolalg/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace bolalg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string w; in >> w;) l.words.push_back(w);
    if (!l.words.empty()) lines.push_back(std::move(l));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what, l.number, 0);
}

std::size_t to_index(const Line& l, const std::string& w, std::size_t bound, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(w, &pos);
  } catch (const std::exception&) {
    fail(l, std::string("expected ") + what + ", got '" + w + "'");
  }
  if (pos != w.size()) fail(l, std::string("expected ") + what + ", got '" + w + "'");
  if (v < 1 || v > bound)
    fail(l, std::string(what) + " " + w + " out of range 1.." + std::to_string(bound));
  return v - 1;
}

std::size_t to_count(const Line& l, const std::string& w, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(w, &pos);
  } catch (const std::exception&) {
    fail(l, std::string("expected ") + what + ", got '" + w + "'");
  }
  if (pos != w.size() || (!w.empty() && w[0] == '-'))
    fail(l, std::string("expected ") + what + ", got '" + w + "'");
  return v;
}

Scalar to_scalar(const Line& l, const std::string& w) {
  Scalar q;
  if (!try_parse_rational(w, q)) fail(l, "malformed rational '" + w + "'");
  return q;
}

/// Words after "=" as a vector of exactly `len` rationals.
Vector values_after(const Line& l, std::size_t eq, std::size_t len) {
  if (eq >= l.words.size() || l.words[eq] != "=") fail(l, "expected '='");
  const std::size_t got = l.words.size() - eq - 1;
  if (got != len)
    fail(l, "expected " + std::to_string(len) + " values, got " + std::to_string(got));
  Vector v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = to_scalar(l, l.words[eq + 1 + i]);
  return v;
}

/// m rows of m rationals separated by ';' (the separator may touch numbers).
Matrix matrix_after(const Line& l, std::size_t eq, std::size_t m) {
  if (eq >= l.words.size() || l.words[eq] != "=") fail(l, "expected '='");
  std::vector<std::vector<std::string>> rows(1);
  for (std::size_t i = eq + 1; i < l.words.size(); ++i) {
    std::string w = l.words[i];
    std::size_t p = 0;
    while (p <= w.size()) {
      const std::size_t semi = w.find(';', p);
      const std::string piece = w.substr(p, semi == std::string::npos ? std::string::npos : semi - p);
      if (!piece.empty()) rows.back().push_back(piece);
      if (semi == std::string::npos) break;
      rows.emplace_back();
      p = semi + 1;
    }
  }
  if (rows.size() != m)
    fail(l, "expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
  Matrix out(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != m)
      fail(l, "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                  " entries, expected " + std::to_string(m));
    for (std::size_t c = 0; c < m; ++c) out(r, c) = to_scalar(l, rows[r][c]);
  }
  return out;
}

struct Header {
  std::string kind;
  std::size_t next = 0;
};

Header read_header(const std::vector<Line>& lines, std::initializer_list<std::string_view> kinds) {
  if (lines.empty()) throw ParseError("empty input", 0, 0);
  const Line& h = lines[0];
  bool known = false;
  for (auto k : kinds) known = known || h.words[0] == k;
  if (!known || h.words.size() != 2) fail(h, "unknown header '" + h.words[0] + "'");
  if (h.words[1] != "1") fail(h, "unsupported format version " + h.words[1]);
  return Header{h.words[0], 1};
}

/// "key value" line at lines[at].
std::size_t read_keyed_count(const std::vector<Line>& lines, std::size_t at, const char* key) {
  if (at >= lines.size()) throw ParseError(std::string("missing '") + key + "' line", 0, 0);
  const Line& l = lines[at];
  if (l.words[0] != key || l.words.size() != 2) fail(l, std::string("expected '") + key + " <n>'");
  return to_count(l, l.words[1], key);
}

template <typename Key>
void reject_duplicate(std::set<Key>& seen, const Key& key, const Line& l) {
  if (!seen.insert(key).second) fail(l, "duplicate entry");
}

std::string scalars(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += " ; ";
    s += scalars(m.row(r));
  }
  return s;
}

AnyAlgebra parse_algebra_lines(const std::vector<Line>& lines) {
  const Header h = read_header(lines, {"bolalg", "liealg"});
  const bool lie = h.kind == "liealg";
  const std::size_t n = read_keyed_count(lines, 1, "dim");
  if (lines.size() < 3 || lines[2].words.size() != 2 || lines[2].words[0] != "field")
    throw ParseError("missing 'field Q' line", lines.size() < 3 ? 0 : lines[2].number, 0);
  if (lines[2].words[1] != "Q") fail(lines[2], "only field Q is supported");

  BolAlgebra bol(lie ? 0 : n);
  LieAlgebra lalg(lie ? n : 0);
  std::set<std::vector<std::size_t>> seen_bin, seen_ter;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& kw = l.words[0];
    if (kw == "bin") {
      if (l.words.size() < 3) fail(l, "expected 'bin i j = ...'");
      const std::size_t i = to_index(l, l.words[1], n, "index");
      const std::size_t j = to_index(l, l.words[2], n, "index");
      reject_duplicate(seen_bin, std::vector<std::size_t>{i, j}, l);
      const Vector v = values_after(l, 3, n);
      if (lie) lalg.set_bracket(i, j, v);
      else bol.set_product(i, j, v);
    } else if (kw == "ter") {
      if (lie) fail(l, "'ter' entries are not allowed in a Lie algebra file");
      if (l.words.size() < 4) fail(l, "expected 'ter i j k = ...'");
      const std::size_t i = to_index(l, l.words[1], n, "index");
      const std::size_t j = to_index(l, l.words[2], n, "index");
      const std::size_t k = to_index(l, l.words[3], n, "index");
      reject_duplicate(seen_ter, std::vector<std::size_t>{i, j, k}, l);
      bol.set_triple(i, j, k, values_after(l, 4, n));
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (lie) return lalg;
  return bol;
}

}  // namespace

AnyAlgebra parse_algebra(std::string_view text) { return parse_algebra_lines(tokenize(text)); }

BolAlgebra parse_bol_algebra(std::string_view text) {
  AnyAlgebra a = parse_algebra(text);
  if (!std::holds_alternative<BolAlgebra>(a)) throw ParseError("expected a 'bolalg' file", 1, 0);
  return std::get<BolAlgebra>(std::move(a));
}

LieAlgebra parse_lie_algebra(std::string_view text) {
  AnyAlgebra a = parse_algebra(text);
  if (!std::holds_alternative<LieAlgebra>(a)) throw ParseError("expected a 'liealg' file", 1, 0);
  return std::get<LieAlgebra>(std::move(a));
}

BolModule parse_module(std::string_view text) {
  const auto lines = tokenize(text);
  read_header(lines, {"bolmod"});
  const std::size_t n = read_keyed_count(lines, 1, "algdim");
  const std::size_t m = read_keyed_count(lines, 2, "moddim");
  BolModule v(n, m);
  std::set<std::vector<std::size_t>> seen;
  std::set<std::size_t> explicit_right;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& kw = l.words[0];
    if (kw == "Lact" || kw == "Ract") {
      if (l.words.size() < 2) fail(l, "expected '" + kw + " i = ...'");
      const std::size_t i = to_index(l, l.words[1], n, "index");
      reject_duplicate(seen, std::vector<std::size_t>{kw == "Lact" ? 0u : 1u, i}, l);
      const Matrix a = matrix_after(l, 2, m);
      if (kw == "Lact") v.left(i) = a;
      else {
        v.right(i) = a;
        explicit_right.insert(i);
      }
    } else if (kw == "vbb" || kw == "bvb" || kw == "bbv") {
      if (l.words.size() < 3) fail(l, "expected '" + kw + " i j = ...'");
      const std::size_t i = to_index(l, l.words[1], n, "index");
      const std::size_t j = to_index(l, l.words[2], n, "index");
      const std::size_t tag = kw == "vbb" ? 2 : kw == "bvb" ? 3 : 4;
      reject_duplicate(seen, std::vector<std::size_t>{tag, i, j}, l);
      const Matrix a = matrix_after(l, 3, m);
      if (tag == 2) v.vbb(i, j) = a;
      else if (tag == 3) v.bvb(i, j) = a;
      else v.bbv(i, j) = a;
    } else {
      fail(l, "unknown keyword '" + kw + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!explicit_right.count(i)) v.right(i) = Scalar(-1) * v.left(i);
  return v;
}

Matrix parse_map(std::string_view text) {
  const auto lines = tokenize(text);
  read_header(lines, {"bolmap"});
  if (lines.size() < 2 || lines[1].words.size() != 3 || lines[1].words[0] != "shape")
    throw ParseError("missing 'shape <rows> <cols>' line", lines.size() < 2 ? 0 : lines[1].number, 0);
  const std::size_t rows = to_count(lines[1], lines[1].words[1], "row count");
  const std::size_t cols = to_count(lines[1], lines[1].words[2], "column count");
  Matrix out(rows, cols);
  std::set<std::size_t> seen;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.words[0] != "row" || l.words.size() < 2) fail(l, "expected 'row i = ...'");
    const std::size_t r = to_index(l, l.words[1], rows, "row");
    reject_duplicate(seen, r, l);
    out.set_row(r, values_after(l, 2, cols));
  }
  return out;
}

std::string format_algebra(const BolAlgebra& a) {
  const std::size_t n = a.dim();
  std::ostringstream os;
  os << "bolalg 1\ndim " << n << "\nfield Q\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = a.basis_product(i, j);
      if (!v.is_zero()) os << "bin " << i + 1 << ' ' << j + 1 << " = " << scalars(v) << '\n';
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector v = a.basis_triple(i, j, k);
        if (!v.is_zero())
          os << "ter " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << " = " << scalars(v) << '\n';
      }
  return os.str();
}

std::string format_algebra(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  std::ostringstream os;
  os << "liealg 1\ndim " << n << "\nfield Q\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = a.basis_bracket(i, j);
      if (!v.is_zero()) os << "bin " << i + 1 << ' ' << j + 1 << " = " << scalars(v) << '\n';
    }
  return os.str();
}

std::string format_module(const BolModule& v) {
  const std::size_t n = v.alg_dim();
  std::ostringstream os;
  os << "bolmod 1\nalgdim " << n << "\nmoddim " << v.mod_dim() << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    if (!v.left(i).is_zero()) os << "Lact " << i + 1 << " = " << matrix_text(v.left(i)) << '\n';
    if (v.right(i) != Scalar(-1) * v.left(i))
      os << "Ract " << i + 1 << " = " << matrix_text(v.right(i)) << '\n';
  }
  auto pairs = [&](const char* kw, auto get) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!get(i, j).is_zero())
          os << kw << ' ' << i + 1 << ' ' << j + 1 << " = " << matrix_text(get(i, j)) << '\n';
  };
  pairs("vbb", [&](std::size_t i, std::size_t j) -> const Matrix& { return v.vbb(i, j); });
  pairs("bvb", [&](std::size_t i, std::size_t j) -> const Matrix& { return v.bvb(i, j); });
  pairs("bbv", [&](std::size_t i, std::size_t j) -> const Matrix& { return v.bbv(i, j); });
  return os.str();
}

std::string format_map(const Matrix& map) {
  std::ostringstream os;
  os << "bolmap 1\nshape " << map.rows() << ' ' << map.cols() << '\n';
  for (std::size_t r = 0; r < map.rows(); ++r) os << "row " << r + 1 << " = " << scalars(map.row(r)) << '\n';
  return os.str();
}

std::string format_envelope(const EnvelopingAlgebra& e) {
  std::ostringstream os;
  os << format_algebra(e.total);
  os << "# coordinates 1.." << e.base.dim() << ": base algebra\n";
  for (std::size_t w = 0; w < e.wedges.size(); ++w)
    os << "# coordinate " << e.base.dim() + w + 1 << ": e" << e.wedges[w].first + 1 << "^e"
       << e.wedges[w].second + 1 << '\n';
  return os.str();
}

Vector parse_vector(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    Scalar q;
    if (!try_parse_rational(piece, q))
      throw ParseError("malformed vector component '" + std::string(piece) + "'", 0, start + 1);
    out.push_back(q);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Vector(std::move(out));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace bolalg
