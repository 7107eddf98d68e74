#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "hybridres/cli.hpp"
#include "hybridres/parser.hpp"

namespace hybridres::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> splitNames(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

MonomialOrder parseOrdering(std::string_view text, const Ring& ring) {
  text = trim(text);
  auto cut = text.find_first_of(" \t");
  std::string kind(text.substr(0, cut));
  std::string_view rest = cut == std::string_view::npos ? std::string_view() : text.substr(cut);
  OrderKind k;
  if (kind == "negdegrevlex" || kind == "ds" || kind == "local") {
    k = OrderKind::LocalNegDegRevLex;
  } else if (kind == "degrevlex" || kind == "dp") {
    k = OrderKind::GlobalDegRevLex;
  } else if (kind == "lex" || kind == "lp") {
    k = OrderKind::Lex;
  } else {
    throw ParseError("unknown ordering '" + kind + "'", 1, 1);
  }
  std::vector<std::size_t> perm;
  auto names = splitNames(rest);
  if (names.empty()) {
    for (std::size_t i = 0; i < ring.size(); ++i) perm.push_back(i);
  } else {
    for (const auto& n : names) {
      auto idx = ring.find(n);
      if (!idx) throw ParseError("unknown variable '" + n + "' in ordering", 1, 1);
      perm.push_back(*idx);
    }
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != ring.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("ordering must list every variable exactly once", 1, 1);
    }
  }
  return MonomialOrder(k, std::move(perm));
}

IdealFile parseIdealFile(std::string_view text) {
  IdealFile f;
  std::optional<std::pair<std::string, std::size_t>> orderLine;
  std::vector<std::pair<std::string, std::size_t>> genLines;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("line " + std::to_string(lineNo) + ": expected 'key: value'", lineNo, 1);
    std::string key(trim(line.substr(0, colon)));
    // pad with spaces so parser columns line up with the file
    std::string value = std::string(colon + 1, ' ') + std::string(line.substr(colon + 1));
    if (key == "ring") {
      if (f.ring) throw ParseError("line " + std::to_string(lineNo) + ": ring declared twice", lineNo, 1);
      auto names = splitNames(value);
      try {
        f.ring = makeRing(names);
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(lineNo) + ": " + e.what(), lineNo, colon + 2);
      }
    } else if (key == "order") {
      if (orderLine) throw ParseError("line " + std::to_string(lineNo) + ": order declared twice", lineNo, 1);
      orderLine = {value, lineNo};
    } else if (key == "gen") {
      genLines.emplace_back(value, lineNo);
    } else {
      throw ParseError("line " + std::to_string(lineNo) + ": unknown key '" + key + "'", lineNo, 1);
    }
    if (end == text.size()) break;
  }
  if (!f.ring) throw ParseError("missing 'ring:' declaration", lineNo, 1);
  if (genLines.empty()) throw ParseError("no 'gen:' lines", lineNo, 1);
  if (orderLine) {
    try {
      f.order = parseOrdering(orderLine->first, *f.ring);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(orderLine->second) + ": " + e.what(), orderLine->second, 1);
    }
  } else {
    f.order = MonomialOrder::localDefault(f.ring->size());
  }
  std::vector<Polynomial> gens;
  for (const auto& [g, n] : genLines) gens.push_back(parsePolynomial(g, f.ring, n));
  f.ideal = Ideal(f.ring, std::move(gens));
  if (f.ideal.isZero()) throw ParseError("all generators are zero", lineNo, 1);
  return f;
}

IdealFile loadIdealFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseIdealFile(ss.str());
}

}  // namespace hybridres::cli
