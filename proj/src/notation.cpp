#include "grpn/notation.hpp"

#include <cctype>
#include <charconv>

namespace grpn {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long long integer() {
    skip_space();
    long long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupElement parse_element(std::string_view text, int r, int p) {
  if (r < 1) throw Error(Errc::InvalidParams, "r must be positive");
  Scanner in(text);
  std::vector<int> perm;
  std::vector<int> colors;
  in.expect('[');
  do {
    long long exponent = 0;
    if (in.accept('z')) {
      exponent = in.integer();
      in.expect('*');
    }
    const long long value = in.integer();
    if (value < 1 || value > 1'000'000) in.fail("value out of range");
    perm.push_back(static_cast<int>(value));
    colors.push_back(static_cast<int>(((exponent % r) + r) % r));
  } while (in.accept(','));
  in.expect(']');
  if (!in.done()) in.fail("trailing characters");
  const auto n = static_cast<int>(perm.size());
  return make_element(GroupParams::make(r, p, n), std::move(perm), std::move(colors));
}

std::string format_element(const GroupElement& w) {
  std::string out = "[";
  for (int pos = 1; pos <= w.rank(); ++pos) {
    if (pos > 1) out += ',';
    if (w.color_at(pos) != 0) out += "z" + std::to_string(w.color_at(pos)) + "*";
    out += std::to_string(w.value_at(pos));
  }
  return out + "]";
}

std::string format_value(const OneDimValue& v) {
  return std::string(v.sign() < 0 ? "-" : "+") + "z^" + std::to_string(v.exponent());
}

nlohmann::json to_json(const StandardTableau& t) { return t.rows(); }

nlohmann::json to_json(const Multitableau& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : t.components()) j.push_back(to_json(c));
  return j;
}

nlohmann::json to_json(const RSPair& pair) {
  return nlohmann::json{{"P", to_json(pair.P)}, {"Q", to_json(pair.Q)}};
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    failures.push_back({{"element", format_element(c.element)},
                        {"i", c.i},
                        {"check", c.check},
                        {"expected", c.expected},
                        {"got", c.got}});
  }
  return nlohmann::json{
      {"sweep", report.sweep},
      {"params", {{"r", report.params.r}, {"p", report.params.p}, {"n", report.params.n}}},
      {"checked", report.elements_checked},
      {"checks", report.i_values_checked},
      {"total_failures", report.total_failures},
      {"passed", report.passed()},
      {"failures", failures},
      {"elapsed_ms", static_cast<double>(report.elapsed.count()) / 1000.0}};
}

Multitableau multitableau_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) { throw Error(Errc::ParseError, what); };
  if (!j.is_array()) fail("multitableau must be an array of components");
  std::vector<StandardTableau> comps;
  for (const auto& comp : j) {
    if (!comp.is_array()) fail("component must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : comp) {
      if (!row.is_array()) fail("row must be an array of labels");
      std::vector<int> labels;
      for (const auto& label : row) {
        if (!label.is_number_integer()) fail("labels must be integers");
        labels.push_back(label.get<int>());
      }
      rows.push_back(std::move(labels));
    }
    comps.emplace_back(std::move(rows));
  }
  return Multitableau(std::move(comps));
}

RSPair rs_pair_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("P") && j.contains("Q")) {
    return RSPair{multitableau_from_json(j.at("P")), multitableau_from_json(j.at("Q"))};
  }
  if (j.is_array() && j.size() == 2) {
    return RSPair{multitableau_from_json(j[0]), multitableau_from_json(j[1])};
  }
  throw Error(Errc::ParseError, "expected {\"P\": ..., \"Q\": ...} or [P, Q]");
}

}  // namespace grpn
