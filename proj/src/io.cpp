#include "mlmw/io.hpp"

#include <sstream>

namespace mlmw {

namespace {

// Line-oriented tokenizer tracking positions for error messages.
struct Reader {
  std::vector<std::string> lines;
  int line = 0;  // 0-based next line

  explicit Reader(const std::string& text) {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);  // unterminated final line
  }

  [[noreturn]] void fail(int col, const std::string& what) const {
    throw ParseError(line + 1, col, what);
  }

  std::string next_line(const std::string& expect) {
    if (line >= static_cast<int>(lines.size()))
      throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                       "unexpected end of document, expected " + expect);
    return lines[line++];
  }

  std::string peek_word() const {
    if (line >= static_cast<int>(lines.size())) return "";
    const std::string& s = lines[line];
    size_t sp = s.find(' ');
    return sp == std::string::npos ? s : s.substr(0, sp);
  }

  // "key rest" with exact key match
  std::string keyed(const std::string& key) {
    std::string s = next_line(key);
    if (s == key) return "";
    if (s.rfind(key + " ", 0) != 0) fail(1, "expected '" + key + "'");
    return s.substr(key.size() + 1);
  }

  int keyed_int(const std::string& key) {
    std::string v = keyed(key);
    try {
      size_t pos = 0;
      int out = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("trailing");
      return out;
    } catch (...) {
      line--;
      fail(static_cast<int>(key.size()) + 2, "expected an integer");
    }
  }

  std::vector<int> ints_of(const std::string& s, int expect_count, int limit) {
    std::vector<int> out;
    std::istringstream is(s);
    int v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) {
      line--;
      fail(1, "expected integers");
    }
    if (static_cast<int>(out.size()) != expect_count) {
      line--;
      fail(1, "expected " + std::to_string(expect_count) + " integers");
    }
    for (int x : out)
      if (x < 0 || x >= limit) {
        line--;
        fail(1, "index out of range");
      }
    return out;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(v[k]);
  }
  return s;
}

void parse_common_header(Reader& rd, int& version, int& n, int& m,
                         std::vector<std::string>& names,
                         const std::string& header,
                         const std::string& count_key) {
  std::string head = rd.next_line(header);
  if (head.rfind(header + " ", 0) != 0) rd.fail(1, "expected '" + header + "'");
  try {
    version = std::stoi(head.substr(header.size() + 1));
  } catch (...) {
    rd.line--;
    rd.fail(static_cast<int>(header.size()) + 2, "expected a version number");
  }
  if (version != 1) {
    rd.line--;
    rd.fail(static_cast<int>(header.size()) + 2, "unsupported format version");
  }
  n = rd.keyed_int("n");
  m = rd.keyed_int("m");
  if (n < 2 || m < 2) {
    rd.line--;
    rd.fail(1, "n and m must be >= 2");
  }
  int count = rd.keyed_int(count_key);
  if (count < 1) {
    rd.line--;
    rd.fail(1, "element count must be positive");
  }
  if (count > 64) {
    rd.line--;
    rd.fail(1, "element count exceeds the 64-element document limit");
  }
  for (int k = 0; k < count; ++k) names.push_back(rd.keyed("name"));
}

PosetTable parse_order_rows(Reader& rd, int count) {
  PosetTable p;
  for (int a = 0; a < count; ++a) {
    std::string row = rd.keyed("order");
    if (static_cast<int>(row.size()) != count) {
      rd.line--;
      rd.fail(7, "order row must have exactly " + std::to_string(count) +
                     " digits");
    }
    std::vector<bool> bits;
    for (char ch : row) {
      if (ch != '0' && ch != '1') {
        rd.line--;
        rd.fail(7, "order rows are strings of 0 and 1");
      }
      bits.push_back(ch == '1');
    }
    p.leq.push_back(std::move(bits));
  }
  return p;
}

std::vector<std::pair<std::pair<int, int>, OpTable1>> parse_keyed_tables(
    Reader& rd, const std::string& key, int n, int m, int count) {
  std::vector<std::pair<std::pair<int, int>, OpTable1>> out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) {
      std::string body = rd.keyed(key);
      std::string want =
          std::to_string(i) + " " + std::to_string(j) + " :";
      if (body.rfind(want + " ", 0) != 0) {
        rd.line--;
        rd.fail(static_cast<int>(key.size()) + 2,
                "expected " + key + " " + std::to_string(i) + " " +
                    std::to_string(j));
      }
      OpTable1 t;
      t.map = rd.ints_of(body.substr(want.size() + 1), count, count);
      out.push_back({{i, j}, std::move(t)});
    }
  return out;
}

void parse_meta_and_end(Reader& rd, std::map<std::string, std::string>& meta) {
  while (true) {
    std::string word = rd.peek_word();
    if (word == "meta") {
      std::string body = rd.keyed("meta");
      size_t sp = body.find(' ');
      std::string key = sp == std::string::npos ? body : body.substr(0, sp);
      std::string val = sp == std::string::npos ? "" : body.substr(sp + 1);
      if (key.empty()) {
        rd.line--;
        rd.fail(6, "metadata key missing");
      }
      if (meta.count(key)) {
        rd.line--;
        rd.fail(6, "duplicate metadata key");
      }
      meta[key] = val;
    } else if (word == "end") {
      rd.next_line("end");
      return;
    } else {
      rd.next_line("'meta' or 'end'");
      rd.line--;
      rd.fail(1, "expected 'meta' or 'end'");
    }
  }
}

}  // namespace

DocumentKind detect_kind(const std::string& text) {
  Reader rd(text);
  std::string word = rd.peek_word();
  if (word == "mlmw-algebra") return DocumentKind::algebra;
  if (word == "mlmw-space") return DocumentKind::space;
  throw ParseError(1, 1, "unknown document header");
}

AlgebraDocument parse_algebra_document(const std::string& text) {
  Reader rd(text);
  AlgebraDocument doc;
  parse_common_header(rd, doc.format_version, doc.n, doc.m, doc.names,
                      "mlmw-algebra", "elements");
  const int count = static_cast<int>(doc.names.size());
  std::string tables = rd.keyed("tables");
  if (tables == "order") {
    doc.order_form = true;
    doc.order = parse_order_rows(rd, count);
  } else if (tables == "meetjoin") {
    doc.order_form = false;
    for (int a = 0; a < count; ++a)
      doc.meet.table.push_back(rd.ints_of(rd.keyed("meet"), count, count));
    for (int a = 0; a < count; ++a)
      doc.join.table.push_back(rd.ints_of(rd.keyed("join"), count, count));
  } else {
    rd.line--;
    rd.fail(8, "tables must be 'order' or 'meetjoin'");
  }
  doc.neg.map = rd.ints_of(rd.keyed("neg"), count, count);
  doc.sigma = parse_keyed_tables(rd, "sigma", doc.n, doc.m, count);
  if (rd.peek_word() == "exists") {
    OpTable1 t;
    t.map = rd.ints_of(rd.keyed("exists"), count, count);
    doc.exists = std::move(t);
  }
  parse_meta_and_end(rd, doc.metadata);
  return doc;
}

std::string emit_algebra_document(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << "mlmw-algebra " << doc.format_version << "\n";
  os << "n " << doc.n << "\n";
  os << "m " << doc.m << "\n";
  os << "elements " << doc.names.size() << "\n";
  for (const std::string& nm : doc.names) os << "name " << nm << "\n";
  if (doc.order_form) {
    os << "tables order\n";
    for (const auto& row : doc.order.leq) {
      os << "order ";
      for (bool b : row) os << (b ? '1' : '0');
      os << "\n";
    }
  } else {
    os << "tables meetjoin\n";
    for (const auto& row : doc.meet.table) os << "meet " << join_ints(row) << "\n";
    for (const auto& row : doc.join.table) os << "join " << join_ints(row) << "\n";
  }
  os << "neg " << join_ints(doc.neg.map) << "\n";
  for (const auto& [key, t] : doc.sigma)
    os << "sigma " << key.first << " " << key.second << " : "
       << join_ints(t.map) << "\n";
  if (doc.exists) os << "exists " << join_ints(doc.exists->map) << "\n";
  for (const auto& [k, v] : doc.metadata)
    os << "meta " << k << (v.empty() ? "" : " " + v) << "\n";
  os << "end\n";
  return os.str();
}

AlgebraDocument document_from_algebra(const FiniteAlgebra& L,
                                      std::map<std::string, std::string> meta) {
  AlgebraDocument doc;
  doc.n = L.n;
  doc.m = L.m;
  doc.names = L.carrier.names;
  doc.order_form = true;
  doc.order = L.leq;
  doc.neg = L.neg;
  for (int i = 1; i < L.n; ++i)
    for (int j = 1; j < L.m; ++j)
      doc.sigma.push_back({{i, j}, L.sigma[L.sigma_index(i, j)]});
  doc.exists = L.exists;
  doc.metadata = std::move(meta);
  return doc;
}

BuildResult algebra_from_document(const AlgebraDocument& doc) {
  BuildResult out;
  FiniteAlgebra L;
  L.n = doc.n;
  L.m = doc.m;
  L.carrier.names = doc.names;
  const int sz = static_cast<int>(doc.names.size());
  for (int a = 0; a < sz; ++a)
    for (int b = a + 1; b < sz; ++b)
      if (doc.names[a] == doc.names[b])
        throw StructuralError("duplicate element name " + doc.names[a]);

  if (doc.order_form) {
    L.leq = doc.order;
    Report pr = validate_poset(L.leq);
    if (!pr.ok()) {
      out.problems = pr;
      return out;
    }
    // derive meet and join as unique greatest lower / least upper bounds
    L.meet.table.assign(sz, std::vector<int>(sz, 0));
    L.join.table.assign(sz, std::vector<int>(sz, 0));
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) {
        int glb = -1, lub = -1;
        for (int z = 0; z < sz; ++z) {
          if (L.leq.le(z, a) && L.leq.le(z, b)) {
            bool greatest = true;
            for (int w = 0; w < sz; ++w)
              if (L.leq.le(w, a) && L.leq.le(w, b) && !L.leq.le(w, z))
                greatest = false;
            if (greatest) glb = z;
          }
          if (L.leq.le(a, z) && L.leq.le(b, z)) {
            bool least = true;
            for (int w = 0; w < sz; ++w)
              if (L.leq.le(a, w) && L.leq.le(b, w) && !L.leq.le(z, w))
                least = false;
            if (least) lub = z;
          }
        }
        if (glb < 0 || lub < 0) {
          out.problems.add_once("lattice", "no meet or join for " +
                                               doc.names[a] + "," +
                                               doc.names[b]);
          continue;
        }
        L.meet.table[a][b] = glb;
        L.join.table[a][b] = lub;
      }
    if (!out.problems.ok()) return out;
  } else {
    L.meet = doc.meet;
    L.join = doc.join;
    L.leq.leq.assign(sz, std::vector<bool>(sz, false));
    for (int a = 0; a < sz; ++a)
      for (int b = 0; b < sz; ++b) L.leq.leq[a][b] = L.meet(a, b) == a;
  }

  int bottom = -1, top = -1;
  for (int a = 0; a < sz; ++a) {
    bool bot = true, tp = true;
    for (int b = 0; b < sz; ++b) {
      bot = bot && L.leq.le(a, b);
      tp = tp && L.leq.le(b, a);
    }
    if (bot) bottom = a;
    if (tp) top = a;
  }
  if (bottom < 0 || top < 0) {
    out.problems.add("bounds", "no least or greatest element");
    return out;
  }
  L.bottom = bottom;
  L.top = top;
  L.neg = doc.neg;
  for (const auto& [key, t] : doc.sigma) L.sigma.push_back(t);
  L.exists = doc.exists;

  Report shape = L.check_shape();
  if (!shape.ok()) throw StructuralError(shape.items.front().detail);
  out.algebra = std::move(L);
  return out;
}

SpaceDocument parse_space_document(const std::string& text) {
  Reader rd(text);
  SpaceDocument doc;
  parse_common_header(rd, doc.format_version, doc.n, doc.m, doc.names,
                      "mlmw-space", "points");
  const int count = static_cast<int>(doc.names.size());
  doc.order = parse_order_rows(rd, count);
  doc.g.map = rd.ints_of(rd.keyed("g"), count, count);
  doc.f = parse_keyed_tables(rd, "f", doc.n, doc.m, count);
  doc.eblocks = rd.ints_of(rd.keyed("eblocks"), count, count);
  parse_meta_and_end(rd, doc.metadata);
  return doc;
}

std::string emit_space_document(const SpaceDocument& doc) {
  std::ostringstream os;
  os << "mlmw-space " << doc.format_version << "\n";
  os << "n " << doc.n << "\n";
  os << "m " << doc.m << "\n";
  os << "points " << doc.names.size() << "\n";
  for (const std::string& nm : doc.names) os << "name " << nm << "\n";
  for (const auto& row : doc.order.leq) {
    os << "order ";
    for (bool b : row) os << (b ? '1' : '0');
    os << "\n";
  }
  os << "g " << join_ints(doc.g.map) << "\n";
  for (const auto& [key, t] : doc.f)
    os << "f " << key.first << " " << key.second << " : " << join_ints(t.map)
       << "\n";
  os << "eblocks " << join_ints(doc.eblocks) << "\n";
  for (const auto& [k, v] : doc.metadata)
    os << "meta " << k << (v.empty() ? "" : " " + v) << "\n";
  os << "end\n";
  return os.str();
}

SpaceDocument document_from_space(const MlmSpace& X,
                                  std::map<std::string, std::string> meta) {
  SpaceDocument doc;
  doc.n = X.n;
  doc.m = X.m;
  doc.names = X.points.names;
  doc.order = X.leq;
  doc.g = X.g;
  for (int i = 1; i < X.n; ++i)
    for (int j = 1; j < X.m; ++j) doc.f.push_back({{i, j}, X.f[X.f_index(i, j)]});
  doc.eblocks = X.E.block_of;
  doc.metadata = std::move(meta);
  return doc;
}

MlmSpace space_from_document(const SpaceDocument& doc) {
  MlmSpace X;
  X.n = doc.n;
  X.m = doc.m;
  X.points.names = doc.names;
  X.leq = doc.order;
  X.g = doc.g;
  for (const auto& [key, t] : doc.f) X.f.push_back(t);
  X.E.block_of = doc.eblocks;
  X.E.normalize();
  Report shape = X.check_shape();
  if (!shape.ok()) throw StructuralError(shape.items.front().detail);
  return X;
}

}  // namespace mlmw
