#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grpn/group.hpp"
#include "grpn/notation.hpp"
#include "grpn/rs.hpp"
#include "grpn/sign.hpp"
#include "grpn/tableau.hpp"

namespace grpn::cli {

namespace {

using nlohmann::json;

struct Options {
  std::optional<int> r;
  int p = 1;
  std::optional<int> n;
  std::string format = "text";
  std::uint64_t cap = kDefaultCap;
  bool force = false;
  std::string input;
  std::string sweep;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--r", o.r, "color modulus r");
  cmd->add_option("--p", o.p, "subgroup parameter p (divides r)")->default_val(1);
  cmd->add_option("--n", o.n, "rank n");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  cmd->add_option("--cap", o.cap, "refuse enumerations larger than this");
  cmd->add_flag("--force", o.force, "ignore the enumeration cap");
}

std::string read_input(const std::string& input, std::istream& in) {
  if (input != "-") return input;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

GroupElement element_input(const Options& o, std::istream& in) {
  if (!o.r) throw UsageError("--r is required to read an element");
  GroupElement w = parse_element(read_input(o.input, in), *o.r, o.p);
  if (o.n && *o.n != w.rank()) {
    throw UsageError("--n " + std::to_string(*o.n) + " disagrees with the element's " +
                     std::to_string(w.rank()) + " entries");
  }
  return w;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

void check_r(const Options& o, std::size_t components) {
  if (o.r && static_cast<std::size_t>(*o.r) != components) {
    throw UsageError("--r " + std::to_string(*o.r) + " but the tableau has " +
                     std::to_string(components) + " components");
  }
}

json tableau_stats(const Multitableau& t) {
  return json{{"inv", inv_multi(t)},
              {"e", e_multi(t)},
              {"twice_spin", twice_spin(t)},
              {"sign", sign_multi(t)},
              {"ascending", is_ascending_multitableau(t)}};
}

std::string stats_line(const json& s) {
  std::ostringstream line;
  line << "inv=" << s["inv"] << " e=" << s["e"] << " twice_spin=" << s["twice_spin"]
       << " sign=" << (s["sign"] == 1 ? "+1" : "-1") << " ascending=" << s["ascending"];
  return line.str();
}

std::string move_token(const AdmissibleMove& m) {
  return (m.side == AdmissibleMove::Side::Left ? "L" : "R") + std::to_string(m.index);
}

int cmd_rs(const Options& o, std::istream& in, std::ostream& out) {
  const GroupElement w = element_input(o, in);
  const RSPair pair = rs_map(w);
  if (o.format == "json") {
    json j = to_json(pair);
    j["element"] = format_element(w);
    out << j.dump() << '\n';
  } else {
    out << "P = " << to_json(pair.P).dump() << '\n' << "Q = " << to_json(pair.Q).dump() << '\n';
  }
  return 0;
}

int cmd_inverse_rs(const Options& o, std::istream& in, std::ostream& out) {
  const RSPair pair = rs_pair_from_json(parse_json(read_input(o.input, in)));
  check_r(o, pair.P.num_components());
  const int r = static_cast<int>(pair.P.num_components());
  const GroupParams params = GroupParams::make(r, o.p, pair.P.size());
  const GroupElement w = rs_inverse(pair, params);
  if (o.format == "json") {
    out << json{{"element", format_element(w)}}.dump() << '\n';
  } else {
    out << format_element(w) << '\n';
  }
  return 0;
}

int cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = read_input(o.input, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto second = first == std::string::npos ? first : text.find_first_not_of(" \t\r\n", first + 1);
  const bool is_tableau = second != std::string::npos && text[first] == '[' &&
                          (text[second] == '[' || text[second] == ']');
  if (is_tableau) {
    const Multitableau t = multitableau_from_json(parse_json(text));
    check_r(o, t.num_components());
    const json s = tableau_stats(t);
    if (o.format == "json") {
      out << s.dump() << '\n';
    } else {
      out << stats_line(s) << '\n';
    }
    return 0;
  }
  Options copy = o;
  copy.input = text;
  const GroupElement w = element_input(copy, in);
  const RSPair pair = rs_map(w);
  const json sp = tableau_stats(pair.P);
  const json sq = tableau_stats(pair.Q);
  if (o.format == "json") {
    out << json{{"element", format_element(w)}, {"P", sp}, {"Q", sq}}.dump() << '\n';
  } else {
    out << "element = " << format_element(w) << '\n'
        << "P: " << stats_line(sp) << '\n'
        << "Q: " << stats_line(sq) << '\n';
  }
  return 0;
}

int cmd_sgn(const Options& o, std::istream& in, std::ostream& out) {
  const GroupElement w = element_input(o, in);
  const int r = w.params().r;
  json values = json::array();
  for (int i = 0; i < r; ++i) {
    values.push_back({{"i", i},
                      {"sigma", format_value(one_dim_rep(w, i, 0))},
                      {"sgn", format_value(one_dim_rep(w, i, 1))}});
  }
  if (o.format == "json") {
    out << json{{"element", format_element(w)}, {"values", values}}.dump() << '\n';
  } else {
    for (const auto& v : values) {
      out << "i=" << v["i"] << " sigma_i=" << v["sigma"].get<std::string>()
          << " sgn_i=" << v["sgn"].get<std::string>() << '\n';
    }
  }
  return 0;
}

int cmd_pi(const Options& o, std::istream& in, std::ostream& out) {
  const GroupElement w = element_input(o, in);
  const int r = w.params().r;
  const RSPair pair = rs_map(w);
  json values = json::array();
  for (int i = 0; i < r; ++i) {
    values.push_back({{"i", i}, {"pi", format_value(pi_from_tableaux(pair.P, pair.Q, i, r))}});
  }
  if (o.format == "json") {
    out << json{{"element", format_element(w)}, {"values", values}}.dump() << '\n';
  } else {
    for (const auto& v : values) {
      out << "i=" << v["i"] << " pi_i=" << v["pi"].get<std::string>() << '\n';
    }
  }
  return 0;
}

int cmd_ascend(const Options& o, std::istream& in, std::ostream& out) {
  const GroupElement w = element_input(o, in);
  const GroupElement rep = ascending_representative(w);
  json moves = json::array();
  for (const auto& m : ascending_moves(w)) moves.push_back(move_token(m));
  if (o.format == "json") {
    out << json{{"element", format_element(w)},
                {"representative", format_element(rep)},
                {"moves", moves}}
               .dump()
        << '\n';
  } else {
    out << "representative = " << format_element(rep) << '\n' << "moves =";
    for (const auto& m : moves) out << ' ' << m.get<std::string>();
    out << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.r || !o.n) throw UsageError("verify needs --r and --n");
  const GroupParams params = GroupParams::make(*o.r, o.p, *o.n);
  VerifyOptions options;
  options.cap = o.force ? std::numeric_limits<std::uint64_t>::max() : o.cap;
  VerificationReport report;
  if (o.sweep == "theorem") {
    report = verify_theorem(params, options);
  } else if (o.sweep == "membership") {
    report = verify_membership(params, options);
  } else {
    report = verify_admissible(params, options);
  }
  const json j = to_json(report);
  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << "sweep=" << report.sweep << " r=" << params.r << " p=" << params.p
        << " n=" << params.n << " checked=" << report.elements_checked
        << " checks=" << report.i_values_checked << " failures=" << report.total_failures
        << " elapsed_ms=" << j["elapsed_ms"] << '\n';
    for (const auto& f : j["failures"]) {
      out << "  " << f["element"].get<std::string>() << " i=" << f["i"] << " ["
          << f["check"].get<std::string>() << "] expected " << f["expected"].get<std::string>()
          << " got " << f["got"].get<std::string>() << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sign characters of G(r,p,n) through the multitableau Robinson-Schensted map",
               "grpn"};
  app.require_subcommand(1);
  Options o;

  auto* rs = app.add_subcommand("rs", "print the RS pair (P, Q) of an element");
  auto* inv_rs = app.add_subcommand("inverse-rs", "recover the element from a JSON pair [P, Q]");
  auto* stats = app.add_subcommand("stats", "inv / e / twice_spin / sign of a tableau or element");
  auto* sgn = app.add_subcommand("sgn", "sigma_i and sgn_i evaluated on the group side");
  auto* pi_cmd = app.add_subcommand("pi", "pi_i evaluated from the RS tableaux");
  auto* ascend = app.add_subcommand("ascend", "ascending representative and admissible moves");
  auto* verify = app.add_subcommand("verify", "exhaustive verification sweep");

  for (auto* cmd : {rs, inv_rs, stats, sgn, pi_cmd, ascend}) {
    add_common(cmd, o);
    cmd->add_option("input", o.input, "element, tableau JSON, or - for stdin")->required();
  }
  add_common(verify, o);
  verify->add_option("sweep", o.sweep, "theorem | membership | admissible")
      ->required()
      ->check(CLI::IsMember({"theorem", "membership", "admissible"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (rs->parsed()) return cmd_rs(o, in, out);
    if (inv_rs->parsed()) return cmd_inverse_rs(o, in, out);
    if (stats->parsed()) return cmd_stats(o, in, out);
    if (sgn->parsed()) return cmd_sgn(o, in, out);
    if (pi_cmd->parsed()) return cmd_pi(o, in, out);
    if (ascend->parsed()) return cmd_ascend(o, in, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace grpn::cli
