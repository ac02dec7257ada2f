#include "scq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace scq {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ", column " << col << ": " << msg;
  throw std::invalid_argument(os.str());
}

// strips a trailing comment and whitespace; returns (keyword, rest, column of rest)
struct Directive {
  std::string key;
  std::string rest;
  int rest_col = 1;
  bool blank = false;
};

Directive split_line(const std::string& raw, int line) {
  std::string s = raw;
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  Directive d;
  if (i == s.size()) {
    d.blank = true;
    return d;
  }
  std::size_t j = i;
  while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  d.key = s.substr(i, j - i);
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  std::size_t end = s.size();
  while (end > j && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  d.rest = s.substr(j, end - j);
  d.rest_col = static_cast<int>(j) + 1;
  (void)line;
  return d;
}

}  // namespace

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_rank = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    Directive d = split_line(raw, line);
    if (d.blank) continue;
    if (d.key == "rank") {
      if (have_rank) fail(line, 1, "duplicate rank directive");
      try {
        std::size_t pos = 0;
        int r = std::stoi(d.rest, &pos);
        if (pos != d.rest.size() || r < 1 || r > 26) throw std::exception();
        p.rank = r;
      } catch (const std::exception&) {
        fail(line, d.rest_col, "rank must be an integer in [1, 26]");
      }
      have_rank = true;
    } else if (d.key == "rel") {
      if (!have_rank) fail(line, 1, "rel before rank");
      if (d.rest.empty()) fail(line, d.rest_col, "empty relator");
      try {
        p.relators.push_back(parse_word(p.rank, d.rest));
      } catch (const std::exception& e) {
        fail(line, d.rest_col, e.what());
      }
    } else {
      fail(line, 1, "unknown directive '" + d.key + "'");
    }
  }
  if (!have_rank) fail(line + 1, 1, "missing rank directive");
  return p;
}

Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_presentation(in);
}

std::string emit_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "rank " << p.rank << "\n";
  for (const auto& r : p.relators) os << "rel " << to_string(r) << "\n";
  return os.str();
}

FiniteGroupTable parse_group_table(std::istream& in) {
  std::string raw;
  int line = 0;
  int order = -1;
  std::vector<int> flat;
  while (std::getline(in, raw)) {
    ++line;
    Directive d = split_line(raw, line);
    if (d.blank) continue;
    if (order < 0) {
      if (d.key != "order") fail(line, 1, "expected 'order N'");
      try {
        std::size_t pos = 0;
        order = std::stoi(d.rest, &pos);
        if (pos != d.rest.size() || order < 1) throw std::exception();
      } catch (const std::exception&) {
        fail(line, d.rest_col, "order must be a positive integer");
      }
      continue;
    }
    std::istringstream row(raw);
    int x;
    int col = 0;
    while (row >> x) {
      ++col;
      if (x < 0 || x >= order) fail(line, col, "table entry out of range");
      flat.push_back(x);
    }
    if (col != order) fail(line, 1, "expected " + std::to_string(order) + " entries in row");
  }
  if (order < 0) fail(line + 1, 1, "missing order directive");
  if (static_cast<int>(flat.size()) != order * order)
    fail(line + 1, 1, "expected " + std::to_string(order) + " rows");
  try {
    return FiniteGroupTable::from_table(order, std::move(flat));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid group table: ") + e.what());
  }
}

FiniteGroupTable parse_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_group_table(in);
}

std::string emit_group_table(const FiniteGroupTable& t) {
  std::ostringstream os;
  os << "order " << t.order << "\n";
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) os << (b ? " " : "") << t.mul(a, b);
    os << "\n";
  }
  return os.str();
}

std::string emit_report(const SCCertificate& c) {
  nlohmann::json j;
  j["rank"] = c.rank;
  j["exponent"] = c.n;
  j["maxlen"] = c.Lmax;
  j["classes"] = c.classes;
  j["delta"] = c.delta;
  j["inj"] = c.inj;
  j["ratio"] = {{"num", c.ratio.num}, {"den", c.ratio.den}};
  j["threshold"] = {{"num", c.threshold.num}, {"den", c.threshold.den}};
  j["verdict"] = c.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace scq
