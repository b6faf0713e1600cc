#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "soplab/amalgam/provider.hpp"
#include "soplab/error.hpp"

namespace soplab::amalgam {

namespace {

std::string trim(std::string s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_error(std::size_t line, std::string const& what) {
  fail(ErrorKind::Parse, "provider line " + std::to_string(line) + ": " + what);
}

// Recursive-descent reader for  term (('+'|'-') term)*  with
// term := [rational '*'] (A|B|E) '[' index ']'  and
// index := INT | [INT '*'] 'i' ['+' INT].
class CoordReader {
 public:
  CoordReader(std::string text, std::size_t line) : s_(std::move(text)), line_(line) {}

  CoordRule read() {
    CoordRule rule;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    while (true) {
      auto t = term();
      if (negative) t.coeff = -t.coeff;
      rule.terms.push_back(std::move(t));
      skip();
      if (at_end()) break;
      char const op = get();
      if (op != '+' && op != '-') error("expected + or -");
      negative = op == '-';
    }
    return rule;
  }

 private:
  CoordTerm term() {
    skip();
    CoordTerm t;
    t.coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') num += get();
      t.coeff = qlinalg::parse_rational(num);
      expect('*');
    }
    skip();
    char const sym = get();
    if (sym != 'A' && sym != 'B' && sym != 'E') error("expected A, B or E");
    t.kind = qlinalg::kind_from_letter(sym);
    expect('[');
    t.index = index();
    expect(']');
    return t;
  }

  IndexExpr index() {
    skip();
    IndexExpr ix{0, 0};
    if (peek() == 'i') {
      get();
      ix.scale = 1;
    } else {
      auto const k = integer();
      skip();
      if (peek() != '*') return {0, k};
      get();
      skip();
      if (get() != 'i') error("expected i");
      ix.scale = k;
    }
    skip();
    if (peek() == '+') {
      get();
      ix.offset = integer();
    }
    return ix;
  }

  std::uint32_t integer() {
    skip();
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty() || d.size() > 9) error("expected a small non-negative integer");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  void expect(char c) {
    skip();
    if (get() != c) error(std::string("expected '") + c + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void error(std::string const& what) const {
    parse_error(line_, what + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  std::string s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

SequenceProvider parse_provider(std::string const& text) {
  std::istringstream in(text);
  std::string raw, name = "file";
  Ambient ambient = Ambient::B0;
  std::uint32_t nstar = 0;
  std::optional<std::uint32_t> length;
  std::vector<CoordRule> rules;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    raw = trim(raw);
    if (raw.empty()) continue;
    auto const eq = raw.find('=');
    if (eq == std::string::npos) parse_error(line, "expected key = value");
    auto const key = trim(raw.substr(0, eq)), value = trim(raw.substr(eq + 1));
    if (key == "name") {
      name = value;
    } else if (key == "ambient") {
      if (value == "b0")
        ambient = Ambient::B0;
      else if (value == "maxabs")
        ambient = Ambient::MaxAbs;
      else
        parse_error(line, "ambient must be b0 or maxabs");
    } else if (key == "nstar" || key == "length") {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        parse_error(line, key + " must be a natural number");
      auto const v = static_cast<std::uint32_t>(std::stoul(value));
      (key == "nstar" ? nstar : length.emplace()) = v;
    } else if (key == "coord") {
      rules.push_back(CoordReader(value, line).read());
    } else {
      parse_error(line, "unknown key '" + key + "'");
    }
  }
  if (length && *length != rules.size())
    fail(ErrorKind::Parse, "length does not match the number of coord lines");
  return SequenceProvider(name, ambient, nstar, std::move(rules));
}

SequenceProvider load_provider(std::string const& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read provider file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_provider(buf.str());
}

SequenceProvider provider_by_name(std::string const& name_or_path) {
  if (name_or_path == "canonical") return SequenceProvider::canonical();
  if (name_or_path == "simple") return SequenceProvider::simple();
  return load_provider(name_or_path);
}

}  // namespace soplab::amalgam
