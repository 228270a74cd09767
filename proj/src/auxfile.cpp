#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "rmeasure/auxfun.hpp"

namespace rmeasure {

AuxFileError::AuxFileError(const std::string& what, int ln)
    : std::runtime_error(ln > 0 ? "line " + std::to_string(ln) + ": " + what : what), line(ln) {}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_decimal(const std::string& text, int line) {
  static const std::regex kDecimal(R"([+]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  if (!std::regex_match(text, kDecimal)) throw AuxFileError("malformed coefficient '" + text + "'", line);
  const char* b = text.data() + (text[0] == '+' ? 1 : 0);
  double v = 0;
  auto [ptr, ec] = std::from_chars(b, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw AuxFileError("coefficient out of range '" + text + "'", line);
  return v;
}

}  // namespace

std::string format_coefficient(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  return std::string(buf, ptr);
}

AuxFunction parse_aux(const std::string& text) {
  AuxFunction f;
  bool have_weight = false;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw AuxFileError("expected 'weight:' or 'term:'", ln);
    std::string key = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    if (key == "weight") {
      if (have_weight) throw AuxFileError("duplicate weight line", ln);
      have_weight = true;
      if (rest == "positive-real") {
        f.weight = WeightKind::positive_real();
      } else if (rest.rfind("sector", 0) == 0) {
        std::string angle = trim(rest.substr(6));
        double theta = parse_decimal(angle, ln);
        try {
          f.weight = WeightKind::sector(theta);
        } catch (const std::invalid_argument& e) {
          throw AuxFileError(e.what(), ln);
        }
      } else {
        throw AuxFileError("unknown weight '" + rest + "'", ln);
      }
    } else if (key == "term") {
      auto semi = rest.find(';');
      if (semi == std::string::npos) throw AuxFileError("term needs '<coefficient> ; <polynomial>'", ln);
      AuxTerm t;
      t.c = parse_decimal(trim(rest.substr(0, semi)), ln);
      try {
        t.q = parse_polynomial(trim(rest.substr(semi + 1)));
      } catch (const ParseError& e) {
        throw AuxFileError(std::string("polynomial: ") + e.what(), ln);
      }
      if (t.q.is_zero()) throw AuxFileError("zero polynomial", ln);
      f.terms.push_back(std::move(t));
    } else {
      throw AuxFileError("unknown key '" + key + "'", ln);
    }
  }
  if (f.terms.empty()) throw AuxFileError("no terms", 0);
  return f;
}

AuxFunction load_aux(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AuxFileError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_aux(ss.str());
}

std::string format_aux(const AuxFunction& f, const std::string& header_comment) {
  std::ostringstream os;
  if (!header_comment.empty()) {
    std::istringstream hc(header_comment);
    std::string l;
    while (std::getline(hc, l)) os << "# " << l << '\n';
  }
  os << "weight: " << f.weight.describe() << '\n';
  for (const auto& t : f.terms) os << "term: " << format_coefficient(t.c) << " ; " << to_string(t.q) << '\n';
  return os.str();
}

}  // namespace rmeasure
