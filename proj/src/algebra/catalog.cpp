#include "molds/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace molds {

namespace {

const std::vector<CatalogEntry> kDegree2 = {
    {"M2", 2, "**/**", "M2"},
    {"B2", 2, "**/0*", "B2"},
    {"D2", 2, "*0/0*", "D2"},
    {"N2", 2, "ab/0a", "N2"},
    {"C2", 2, "a0/0a", "C2"},
};

const std::vector<CatalogEntry> kDegree3 = {
    {"M3", 3, "***/***/***", "M3"},
    {"P21", 3, "***/***/00*", "P12"},
    {"P12", 3, "***/0**/0**", "P21"},
    {"B3", 3, "***/0**/00*", "B3"},
    {"C3", 3, "a00/0a0/00a", "C3"},
    {"D3", 3, "*00/0*0/00*", "D3"},
    {"C2xD1", 3, "a00/0a0/00b", "C2xD1"},
    {"N2xD1", 3, "ac0/0a0/00b", "N2xD1"},
    {"B2xD1", 3, "**0/0*0/00*", "B2xD1"},
    {"M2xD1", 3, "**0/**0/00*", "M2xD1"},
    {"J3", 3, "abc/0ab/00a", "J3"},
    {"N3", 3, "abc/0ad/00a", "N3"},
    {"S1", 3, "ab0/0a0/00a", "S1"},
    {"S2", 3, "a00/0ac/00b", "S3"},
    {"S3", 3, "a0c/0b0/00b", "S2"},
    {"S4", 3, "abc/0a0/00a", "S5"},
    {"S5", 3, "a0b/0ac/00a", "S4"},
    {"S6", 3, "acd/0a0/00b", "S9"},
    {"S7", 3, "a0c/0ad/00b", "S8"},
    {"S8", 3, "acd/0b0/00b", "S7"},
    {"S9", 3, "a0c/0bd/00b", "S6"},
    {"S10", 3, "abc/0ad/00e", "S12"},
    {"S11", 3, "abc/0ed/00a", "S11"},
    {"S12", 3, "abc/0ed/00e", "S10"},
    {"S13", 3, "***/0*0/00*", "S14"},
    {"S14", 3, "*0*/0**/00*", "S13"},
};

std::vector<std::string> split_rows(std::string_view shape) {
  std::vector<std::string> rows;
  std::string cur;
  for (char ch : shape) {
    if (ch == '/') {
      rows.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  rows.push_back(cur);
  return rows;
}

std::string join_rows(const std::vector<std::string>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '/';
    s += rows[i];
  }
  return s;
}

// Shapes of the parametric families.
std::string family_shape(char letter, const std::vector<std::size_t>& blocks, std::size_t n) {
  std::vector<std::string> rows(n, std::string(n, '0'));
  switch (letter) {
    case 'M':
      for (auto& r : rows) r.assign(n, '*');
      break;
    case 'B':
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rows[i][j] = '*';
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) rows[i][i] = '*';
      break;
    case 'C':
      for (std::size_t i = 0; i < n; ++i) rows[i][i] = 'a';
      break;
    case 'P': {
      std::size_t start = 0;
      for (auto b : blocks) {
        for (std::size_t i = start; i < start + b; ++i)
          for (std::size_t j = start; j < n; ++j) rows[i][j] = '*';
        start += b;
      }
      break;
    }
    default:
      break;
  }
  return join_rows(rows);
}

Algebra jordan(std::size_t n, const Ring& ring, std::string name) {
  std::vector<QMatrix> basis;
  QMatrix x(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) x(i, i + 1) = 1;
  QMatrix p = QMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    basis.push_back(p);
    p = p * x;
  }
  return Algebra::verify(n, ring, std::move(basis), std::move(name)).with_family({'J', {n}});
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw CatalogError("BadParams: cannot read a size in '" + std::string(whole) + "'");
  }
  const std::size_t v = std::stoul(std::string(s));
  if (v == 0) throw CatalogError("BadParams: sizes must be positive in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries(std::size_t degree) {
  if (degree == 2) return kDegree2;
  if (degree == 3) return kDegree3;
  throw CatalogError("BadParams: the named catalog covers degrees 2 and 3");
}

std::vector<CatalogEntry> all_catalog_entries() {
  std::vector<CatalogEntry> all = kDegree2;
  all.insert(all.end(), kDegree3.begin(), kDegree3.end());
  return all;
}

Algebra from_shape(std::string name, std::size_t n, std::string_view shape, const Ring& ring) {
  const auto rows = split_rows(shape);
  if (rows.size() != n) throw CatalogError("BadParams: shape for " + name + " does not have " + std::to_string(n) + " rows");
  std::vector<QMatrix> basis;
  std::map<char, QMatrix> letters;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw CatalogError("BadParams: shape row " + std::to_string(i + 1) + " of " + name);
    for (std::size_t j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c == '*') {
        basis.push_back(QMatrix::unit(n, i, j));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [it, fresh] = letters.try_emplace(c, n, n);
        it->second(i, j) = 1;
      } else if (c != '0') {
        throw CatalogError("BadParams: unexpected character in shape of " + name);
      }
    }
  }
  for (auto& [c, m] : letters) basis.push_back(std::move(m));
  return Algebra::verify(n, ring, std::move(basis), std::move(name));
}

Algebra catalog(std::string_view name, const Ring& ring) {
  for (const auto* table : {&kDegree2, &kDegree3}) {
    for (const auto& e : *table) {
      if (e.name != name) continue;
      if (e.name == "J3") return jordan(3, ring, e.name);
      return from_shape(e.name, e.n, e.shape, ring);
    }
  }
  if (name.size() < 2) throw CatalogError("UnknownName: '" + std::string(name) + "'");
  const char letter = name[0];
  std::string_view rest = name.substr(1);
  if (letter == 'P') {
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    std::vector<std::size_t> blocks;
    std::size_t total = 0;
    while (true) {
      const auto comma = rest.find(',');
      blocks.push_back(parse_count(rest.substr(0, comma), name));
      total += blocks.back();
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (blocks.size() < 2) throw CatalogError("BadParams: a parabolic needs at least two blocks, e.g. P2,1");
    return from_shape(std::string(name), total, family_shape('P', blocks, total), ring);
  }
  if (std::string_view("BDCMJ").find(letter) == std::string_view::npos) {
    throw CatalogError("UnknownName: '" + std::string(name) + "'");
  }
  const std::size_t n = parse_count(rest, name);
  if (letter == 'J') {
    if (n < 2) throw CatalogError("BadParams: J_n needs n >= 2");
    return jordan(n, ring, std::string(name));
  }
  return from_shape(std::string(name), n, family_shape(letter, {}, n), ring);
}

std::string transpose_partner(std::string_view name) {
  for (const auto* table : {&kDegree2, &kDegree3}) {
    for (const auto& e : *table) {
      if (e.name == name) return e.partner;
    }
  }
  throw CatalogError("UnknownName: '" + std::string(name) + "'");
}

}  // namespace molds
