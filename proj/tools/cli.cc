#include "cli.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "tamecover/errors.h"
#include "tamecover/int_poly.h"

namespace tamecover::cli
{

namespace
{

template <typename E, std::size_t N>
E enum_from_string(std::array<E, N> const &values, std::string const &name)
{
  for (E v : values)
    if (to_string(v) == name)
      return v;
  throw ParseError("unknown value '" + name + "'");
}

constexpr std::array all_commands{Command::decide, Command::enumerate, Command::orbit,
                                  Command::construct, Command::analyze, Command::verify_map,
                                  Command::self_test};
constexpr std::array all_statuses{ExistenceStatus::exists, ExistenceStatus::not_exists,
                                  ExistenceStatus::out_of_scope, ExistenceStatus::invalid};
constexpr std::array all_admissibility{Admissibility::admissible, Admissibility::not_admissible,
                                       Admissibility::out_of_scope, Admissibility::wild};
constexpr std::array all_criteria{Criterion::three_point, Criterion::chain, Criterion::none};
constexpr std::array all_error_kinds{ErrorKind::none, ErrorKind::input, ErrorKind::bound,
                                     ErrorKind::internal};

unsigned require_p(Request const &req)
{
  if (!req.p)
    throw ParseError("--p is required");
  return *req.p;
}

std::vector<unsigned> require_ram(Request const &req)
{
  if (req.ram.empty())
    throw ParseError("--ram is required");
  return req.ram;
}

HurwitzTuple require_tuple(Request const &req)
{
  if (!req.tuple_text)
    throw ParseError("--file is required");
  HurwitzTuple t = parse_tuple_file(*req.tuple_text);
  auto const report = validate(t);
  if (!report) {
    std::string msg = "invalid tuple";
    for (auto const &d : report.diagnostics)
      msg += "; " + d;
    throw ParseError(msg);
  }
  return t;
}

std::string join(std::vector<unsigned> const &v, std::string const &sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

Json tuple_details(HurwitzTuple const &t)
{
  Json j = to_json(t);
  j["text"] = t.to_string();
  j["partial_products"] = partial_product_lengths(t);
  return j;
}

Response cmd_decide(Request const &req)
{
  RamProfile const profile{require_p(req), require_ram(req)};
  ExistenceVerdict const v = decide(profile);
  Response r;
  r.status = to_string(v.status);
  r.result["profile"] = to_string(profile);
  r.result["verdict"] = to_json(v);
  if (v.certificate)
    r.result["certificate_text"] = v.certificate->to_string();
  return r;
}

Response cmd_enumerate(Request const &req)
{
  if (!req.d)
    throw ParseError("--d is required");
  auto const lengths = require_ram(req);
  EnumerateOptions options;
  options.max_degree = req.max_d;
  auto const classes = enumerate_classes(*req.d, lengths, options);
  Response r;
  r.status = "OK";
  r.result["degree"] = *req.d;
  r.result["lengths"] = lengths;
  r.result["count"] = classes.size();
  Json list = Json::array();
  for (auto const &t : classes)
    list.push_back(t.to_string());
  r.result["classes"] = list;
  return r;
}

Response cmd_orbit(Request const &req)
{
  HurwitzTuple const t = require_tuple(req);
  OrbitOptions raw;
  raw.max_states = req.max_states;
  OrbitOptions quotient = raw;
  quotient.up_to_conjugation = true;

  std::size_t raw_size = 0;
  visit_pure_braid_orbit(t, raw, [&](HurwitzTuple const &) {
    ++raw_size;
    return false;
  });
  auto const classes = pure_braid_orbit(t, quotient);

  Response r;
  r.status = "OK";
  r.result["tuple"] = tuple_details(t);
  r.result["orbit_size"] = raw_size;
  r.result["class_count"] = classes.size();
  Json list = Json::array();
  for (auto const &c : classes)
    list.push_back(c.to_string());
  r.result["classes"] = list;
  return r;
}

Response cmd_construct(Request const &req)
{
  RamProfile const profile{require_p(req), require_ram(req)};
  ExistenceVerdict const v = decide(profile);
  if (v.status == ExistenceStatus::invalid)
    throw ParseError(v.reason);
  if (v.status == ExistenceStatus::exists && !v.certificate)
    throw BoundError(v.certificate_note);

  Response r;
  r.status = to_string(v.status);
  r.result["profile"] = to_string(profile);
  r.result["verdict"] = to_json(v);
  if (v.certificate) {
    r.result["tuple"] = tuple_details(*v.certificate);
    r.result["partial_product_condition"] =
      satisfies_partial_product_condition(*v.certificate, profile.p);
  }
  return r;
}

Response cmd_analyze(Request const &req)
{
  unsigned const p = require_p(req);
  HurwitzTuple const t = require_tuple(req);
  ImprimitiveReport const report = analyze_monodromy(t, p);
  Response r;
  r.status = to_string(report.status);
  r.result["tuple"] = tuple_details(t);
  r.result["report"] = to_json(report);
  return r;
}

Response cmd_verify_map(Request const &req)
{
  FiniteField const field(require_p(req), req.k);
  std::map<std::string, FieldElement, std::less<>> values;
  if (field.extension_degree() >= 2u)
    values["u"] = field.generator();
  for (auto const &[name, text] : req.params)
    values[name] = text == "gen" ? field.generator() : parse_field_element(field, text);
  if (req.num.empty())
    throw ParseError("--num is required");

  Poly const num = reduce_mod_p(IntPoly::parse(req.num), field, "x", values);
  Poly const den = reduce_mod_p(IntPoly::parse(req.den), field, "x", values);
  RationalMap const f(num, den);
  if (f.is_constant())
    throw ParseError("the map is constant");

  Response r;
  Json params = Json::object();
  for (auto const &[name, value] : values)
    params[name] = field.to_string(value);
  r.result["field"] = {{"p", field.characteristic()},
                       {"k", field.extension_degree()},
                       {"modulus", field.modulus()}};
  r.result["params"] = params;
  r.result["map"] = f.to_string();
  r.result["declared_degree"] = f.declared_degree();
  r.result["degree"] = f.degree();
  r.result["was_reduced"] = f.was_reduced();
  r.result["separable"] = f.is_separable();
  if (!f.is_separable()) {
    r.status = "INSEPARABLE";
    return r;
  }
  RamReport const report = ram_report(f);
  r.result["ramification"] = to_json(field, report);
  bool const tame = std::all_of(report.points.begin(), report.points.end(),
                                [](RamPoint const &pt) { return pt.tame; });
  r.result["tame"] = tame;
  if (tame)
    r.result["riemann_hurwitz"] = tame_rh_check(report, f.degree());
  else
    r.result["riemann_hurwitz"] = nullptr;
  r.status = tame ? "OK" : "WILD";
  return r;
}

char const *const s10_tuple_text = "d=10\n(1,3,5,8,2,4,6,7)\n(10,8,6,4,9,7,5,3)\n(10,3,1,9,4,2)(7,8)\n";

Response cmd_self_test(Request const &)
{
  std::vector<std::pair<std::string, bool>> checks;
  auto status_of = [](unsigned p, std::vector<unsigned> e) { return decide({p, std::move(e)}).status; };

  checks.emplace_back("decide p=3 2,2,2,2 exists",
                      status_of(3, {2, 2, 2, 2}) == ExistenceStatus::exists);
  checks.emplace_back("decide p=5 4,4,4,4,3 does not exist",
                      status_of(5, {4, 4, 4, 4, 3}) == ExistenceStatus::not_exists);
  checks.emplace_back("decide p=5 4,4,4,4 exists",
                      status_of(5, {4, 4, 4, 4}) == ExistenceStatus::exists);
  checks.emplace_back("decide p=7 5,3,3 exists", status_of(7, {5, 3, 3}) == ExistenceStatus::exists);
  checks.emplace_back("decide p=5 7,7,7,7 out of scope",
                      status_of(5, {7, 7, 7, 7}) == ExistenceStatus::out_of_scope);
  checks.emplace_back("enumerate d=3 2,2,2,2 has 4 classes",
                      enumerate_classes(3, {2, 2, 2, 2}).size() == 4u);
  checks.emplace_back("enumerate d=4 4,2,2,2 has 4 classes",
                      enumerate_classes(4, {4, 2, 2, 2}).size() == 4u);
  checks.emplace_back("single pure-braid orbit for d=4 4,2,2,2",
                      single_orbit_check(4, {4, 2, 2, 2}).single_orbit);
  checks.emplace_back("S_10 genus-1 tuple ruled out at p=5",
                      analyze_monodromy(parse_tuple_file(s10_tuple_text), 5).status
                        == MonodromyStatus::not_exists);
  checks.emplace_back(
    "quartic reduces mod 3",
    IntPoly::parse("b^4 + (2 + 8mu)b^3 + 36mu b^2 + 54mu b + 27mu").reduce_mod(3)
      == IntPoly::parse("b^4 + (2 + 2mu)*b^3"));

  Response r;
  bool all = true;
  Json list = Json::array();
  for (auto const &[name, ok] : checks) {
    list.push_back({{"name", name}, {"pass", ok}});
    all = all && ok;
  }
  r.result["checks"] = list;
  r.status = all ? "PASS" : "FAIL";
  if (!all) {
    r.error = ErrorKind::internal;
    r.diagnostics.push_back("self-test failed");
  }
  return r;
}

Response dispatch(Request const &req)
{
  switch (req.command) {
  case Command::decide:
    return cmd_decide(req);
  case Command::enumerate:
    return cmd_enumerate(req);
  case Command::orbit:
    return cmd_orbit(req);
  case Command::construct:
    return cmd_construct(req);
  case Command::analyze:
    return cmd_analyze(req);
  case Command::verify_map:
    return cmd_verify_map(req);
  case Command::self_test:
    return cmd_self_test(req);
  }
  throw std::logic_error("unhandled command");
}

Response failure(ErrorKind kind, std::string const &message)
{
  Response r;
  r.status = "ERROR";
  r.error = kind;
  r.diagnostics.push_back(message);
  return r;
}

} // anonymous namespace

std::string to_string(Command c)
{
  switch (c) {
  case Command::decide:
    return "decide";
  case Command::enumerate:
    return "enumerate";
  case Command::orbit:
    return "orbit";
  case Command::construct:
    return "construct";
  case Command::analyze:
    return "analyze";
  case Command::verify_map:
    return "verify-map";
  case Command::self_test:
    return "self-test";
  }
  return "?";
}

Command command_from_string(std::string const &name)
{
  return enum_from_string(all_commands, name);
}

std::string to_string(ErrorKind k)
{
  switch (k) {
  case ErrorKind::none:
    return "none";
  case ErrorKind::input:
    return "input";
  case ErrorKind::bound:
    return "bound";
  case ErrorKind::internal:
    return "internal";
  }
  return "?";
}

std::vector<unsigned> parse_index_list(std::string const &text)
{
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t const comma = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1u);
    unsigned value = 0;
    auto const [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || value == 0u)
      throw ParseError("index list: '" + item + "' is not a positive integer");
    out.push_back(value);
    pos = comma + 1u;
  }
  return out;
}

std::pair<std::string, std::string> parse_param(std::string const &text)
{
  auto const eq = text.find('=');
  if (eq == std::string::npos || eq == 0u || eq + 1u == text.size())
    throw ParseError("parameter must look like name=value: '" + text + "'");
  return {text.substr(0, eq), text.substr(eq + 1u)};
}

int Response::exit_code() const
{
  switch (error) {
  case ErrorKind::none:
    return 0;
  case ErrorKind::input:
    return 2;
  case ErrorKind::bound:
    return 3;
  case ErrorKind::internal:
    return 1;
  }
  return 1;
}

Json to_json(Response const &r)
{
  Json j;
  j["command"] = r.command;
  j["status"] = r.status;
  j["result"] = r.result;
  j["diagnostics"] = r.diagnostics;
  j["error"] = to_string(r.error);
  j["exit_code"] = r.exit_code();
  return j;
}

Response response_from_json(Json const &j)
{
  Response r;
  r.command = j.at("command").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.result = j.at("result");
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  r.error = enum_from_string(all_error_kinds, j.at("error").get<std::string>());
  return r;
}

Json to_json(HurwitzTuple const &t)
{
  Json perms = Json::array();
  for (auto const &g : t.perms)
    perms.push_back(g.to_string());
  return {{"degree", t.degree}, {"perms", perms}};
}

HurwitzTuple tuple_from_json(Json const &j)
{
  HurwitzTuple t;
  t.degree = j.at("degree").get<unsigned>();
  for (auto const &s : j.at("perms"))
    t.perms.push_back(parse_cycles(s.get<std::string>(), t.degree));
  return t;
}

Json to_json(InseparableWitness const &w)
{
  return {{"m", w.m},
          {"p_power", w.p_power},
          {"subset", w.subset},
          {"quotient_indices", w.quotient_indices},
          {"quotient_degree", w.quotient_degree},
          {"base_points", w.base_points}};
}

InseparableWitness inseparable_from_json(Json const &j)
{
  InseparableWitness w;
  w.m = j.at("m").get<unsigned>();
  w.p_power = j.at("p_power").get<std::uint64_t>();
  w.subset = j.at("subset").get<std::vector<unsigned>>();
  w.quotient_indices = j.at("quotient_indices").get<std::vector<unsigned>>();
  w.quotient_degree = j.at("quotient_degree").get<unsigned>();
  w.base_points = j.at("base_points").get<std::vector<unsigned>>();
  return w;
}

Json to_json(AdmissibilityVerdict const &v)
{
  Json j;
  j["status"] = to_string(v.status);
  j["criterion"] = to_string(v.criterion);
  if (v.inseparable)
    j["inseparable_witness"] = to_json(*v.inseparable);
  if (v.chain)
    j["chain_witness"] = v.chain->primed;
  j["chain_prefix"] = v.chain_prefix;
  return j;
}

AdmissibilityVerdict admissibility_from_json(Json const &j)
{
  AdmissibilityVerdict v;
  v.status = enum_from_string(all_admissibility, j.at("status").get<std::string>());
  v.criterion = enum_from_string(all_criteria, j.at("criterion").get<std::string>());
  if (j.contains("inseparable_witness"))
    v.inseparable = inseparable_from_json(j.at("inseparable_witness"));
  if (j.contains("chain_witness"))
    v.chain = ChainWitness{j.at("chain_witness").get<std::vector<unsigned>>()};
  v.chain_prefix = j.at("chain_prefix").get<std::vector<unsigned>>();
  return v;
}

Json to_json(ExistenceVerdict const &v)
{
  Json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  j["note"] = v.note;
  if (v.admissibility)
    j["admissibility"] = to_json(*v.admissibility);
  if (v.certificate)
    j["certificate"] = to_json(*v.certificate);
  if (!v.certificate_note.empty())
    j["certificate_note"] = v.certificate_note;
  return j;
}

ExistenceVerdict verdict_from_json(Json const &j)
{
  ExistenceVerdict v;
  v.status = enum_from_string(all_statuses, j.at("status").get<std::string>());
  v.reason = j.at("reason").get<std::string>();
  v.note = j.at("note").get<std::string>();
  if (j.contains("admissibility"))
    v.admissibility = admissibility_from_json(j.at("admissibility"));
  if (j.contains("certificate"))
    v.certificate = tuple_from_json(j.at("certificate"));
  v.certificate_note = j.value("certificate_note", std::string());
  return v;
}

Json to_json(ImprimitiveReport const &r)
{
  Json systems = Json::array();
  for (auto const &s : r.systems) {
    Json row;
    row["block_size"] = s.system.block_size;
    row["quotient_degree"] = s.quotient_degree;
    row["blocks"] = s.system.blocks;
    row["induced_lengths"] = s.induced_lengths;
    row["stripped_fixed_points"] = s.stripped_fixed_points;
    row["genus_zero"] = s.genus_zero;
    row["regime"] = to_string(s.regime);
    if (s.verdict)
      row["verdict"] = to_json(*s.verdict);
    row["rules_out_cover"] = s.rules_out_cover();
    systems.push_back(row);
  }
  Json j;
  j["genus"] = r.genus;
  j["status"] = to_string(r.status);
  j["systems"] = systems;
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(FiniteField const &field, RamReport const &r)
{
  Json points = Json::array();
  for (auto const &pt : r.points) {
    points.push_back({{"point", to_string(field, pt.point)},
                      {"value", to_string(field, pt.value)},
                      {"index", pt.index},
                      {"tame", pt.tame}});
  }
  return {{"degree", r.degree}, {"points", points}};
}

Response run(Request const &request)
{
  Response r;
  try {
    r = dispatch(request);
  } catch (BoundError const &e) {
    r = failure(ErrorKind::bound, e.what());
  } catch (std::invalid_argument const &e) {
    r = failure(ErrorKind::input, e.what());
  } catch (std::exception const &e) {
    r = failure(ErrorKind::internal, e.what());
  }
  r.command = to_string(request.command);
  return r;
}

namespace
{

void render_admissibility(std::ostringstream &out, Json const &a)
{
  out << "criterion: " << a.at("criterion").get<std::string>() << " ("
      << a.at("status").get<std::string>() << ")\n";
  if (a.contains("inseparable_witness")) {
    auto const &w = a.at("inseparable_witness");
    out << "inseparable witness: m=" << w.at("m").get<unsigned>()
        << " S={" << join(w.at("subset").get<std::vector<unsigned>>()) << "}"
        << " quotient indices=(" << join(w.at("quotient_indices").get<std::vector<unsigned>>()) << ")"
        << " quotient degree=" << w.at("quotient_degree").get<unsigned>()
        << " base points=(" << join(w.at("base_points").get<std::vector<unsigned>>()) << ")\n";
  }
  if (a.contains("chain_witness"))
    out << "chain witness: (" << join(a.at("chain_witness").get<std::vector<unsigned>>()) << ")\n";
  else if (a.at("criterion") == "chain")
    out << "chain fails after prefix: ("
        << join(a.at("chain_prefix").get<std::vector<unsigned>>()) << ")\n";
}

void render_verdict(std::ostringstream &out, Json const &result)
{
  auto const &v = result.at("verdict");
  out << "profile: " << result.at("profile").get<std::string>() << "\n";
  if (!v.at("reason").get<std::string>().empty())
    out << "reason: " << v.at("reason").get<std::string>() << "\n";
  out << "note: " << v.at("note").get<std::string>() << "\n";
  if (v.contains("admissibility"))
    render_admissibility(out, v.at("admissibility"));
  if (result.contains("certificate_text"))
    out << "certificate: " << result.at("certificate_text").get<std::string>() << "\n";
  else if (v.contains("certificate_note"))
    out << "certificate: omitted (" << v.at("certificate_note").get<std::string>() << ")\n";
}

void render_tuple(std::ostringstream &out, Json const &t)
{
  out << "tuple: " << t.at("text").get<std::string>() << "\n";
  out << "partial products: " << join(t.at("partial_products").get<std::vector<unsigned>>(), " ")
      << "\n";
}

void render_list(std::ostringstream &out, Json const &list)
{
  for (auto const &item : list)
    out << "  " << item.get<std::string>() << "\n";
}

} // anonymous namespace

std::string render_text(Response const &r)
{
  std::ostringstream out;
  out << r.command << ": " << r.status << "\n";
  if (r.error != ErrorKind::none && r.status == "ERROR") {
    for (auto const &d : r.diagnostics)
      out << "error (" << to_string(r.error) << "): " << d << "\n";
    return out.str();
  }
  auto const &res = r.result;
  switch (command_from_string(r.command)) {
  case Command::decide:
    render_verdict(out, res);
    break;
  case Command::construct:
    render_verdict(out, res);
    if (res.contains("tuple")) {
      render_tuple(out, res.at("tuple"));
      out << "partial product condition: "
          << (res.at("partial_product_condition").get<bool>() ? "yes" : "no") << "\n";
    }
    break;
  case Command::enumerate:
    out << "classes: " << res.at("count").get<std::size_t>() << "\n";
    render_list(out, res.at("classes"));
    break;
  case Command::orbit:
    render_tuple(out, res.at("tuple"));
    out << "orbit size: " << res.at("orbit_size").get<std::size_t>() << "\n";
    out << "classes: " << res.at("class_count").get<std::size_t>() << "\n";
    render_list(out, res.at("classes"));
    break;
  case Command::analyze: {
    render_tuple(out, res.at("tuple"));
    auto const &rep = res.at("report");
    out << "genus: " << rep.at("genus").get<unsigned>() << "\n";
    out << "block size | blocks | induced lengths | genus 0 | regime | verdict\n";
    for (auto const &s : rep.at("systems")) {
      out << s.at("block_size").get<unsigned>() << " | " << s.at("quotient_degree").get<unsigned>()
          << " | (" << join(s.at("induced_lengths").get<std::vector<unsigned>>()) << ") | "
          << (s.at("genus_zero").get<bool>() ? "yes" : "no") << " | "
          << s.at("regime").get<std::string>() << " | "
          << (s.contains("verdict") ? s.at("verdict").at("status").get<std::string>() : "-") << "\n";
    }
    if (!rep.at("witness").is_null())
      out << "witness: system " << rep.at("witness").get<std::size_t>() + 1u << "\n";
    break;
  }
  case Command::verify_map: {
    out << "f = " << res.at("map").get<std::string>() << "\n";
    for (auto const &[name, value] : res.at("params").items())
      out << name << " = " << value.get<std::string>() << "\n";
    out << "degree: " << res.at("degree").get<unsigned>();
    if (res.at("was_reduced").get<bool>())
      out << " (reduced from " << res.at("declared_degree").get<unsigned>() << ")";
    out << "\n";
    out << "separable: " << (res.at("separable").get<bool>() ? "yes" : "no") << "\n";
    if (res.contains("ramification")) {
      out << "point | value | index | tame\n";
      for (auto const &pt : res.at("ramification").at("points"))
        out << pt.at("point").get<std::string>() << " | " << pt.at("value").get<std::string>()
            << " | " << pt.at("index").get<unsigned>() << " | "
            << (pt.at("tame").get<bool>() ? "yes" : "no") << "\n";
      auto const &rh = res.at("riemann_hurwitz");
      out << "riemann-hurwitz: " << (rh.is_null() ? "n/a (wild)" : rh.get<bool>() ? "ok" : "incomplete")
          << "\n";
    }
    break;
  }
  case Command::self_test:
    for (auto const &c : res.at("checks"))
      out << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << "\n";
    break;
  }
  for (auto const &d : r.diagnostics)
    out << "note: " << d << "\n";
  return out.str();
}

std::string render_json(Response const &r)
{
  return to_json(r).dump(2) + "\n";
}

} // namespace tamecover::cli
