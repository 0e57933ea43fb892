#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.h"
#include "tamecover/perm.h"

using namespace tamecover;

namespace
{

struct Flags
{
  unsigned p = 0;
  unsigned k = 1;
  std::string ram;
  unsigned d = 0;
  std::string file;
  std::string num;
  std::string den = "1";
  std::vector<std::string> params;
  std::size_t max_states = 1'000'000;
  unsigned max_d = 6;
  bool json = false;
};

bool given(CLI::App const &sub, std::string const &name)
{
  auto const *opt = sub.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0u;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

cli::Request to_request(cli::Command command, Flags const &f, CLI::App const &sub)
{
  cli::Request req;
  req.command = command;
  req.json = f.json;
  if (given(sub, "--p"))
    req.p = f.p;
  req.k = f.k;
  if (!f.ram.empty())
    req.ram = cli::parse_index_list(f.ram);
  if (given(sub, "--d"))
    req.d = f.d;
  if (!f.file.empty()) {
    req.file = f.file;
    req.tuple_text = read_file(f.file);
  }
  req.num = f.num;
  req.den = f.den;
  for (auto const &text : f.params)
    req.params.insert(cli::parse_param(text));
  req.max_states = f.max_states;
  req.max_d = f.max_d;
  return req;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Tame branched covers of the projective line in characteristic p"};
  app.require_subcommand(1);
  Flags flags;

  struct Entry
  {
    cli::Command command;
    char const *help;
    CLI::App *sub = nullptr;
  };
  std::vector<Entry> entries{
    {cli::Command::decide, "Decide whether a tame genus-0 cover with the given indices exists"},
    {cli::Command::enumerate, "List Hurwitz factorizations up to simultaneous conjugation"},
    {cli::Command::orbit, "Pure-braid orbit of a tuple"},
    {cli::Command::construct, "Build a tuple with cycle partial products"},
    {cli::Command::analyze, "Block-system analysis of a monodromy tuple"},
    {cli::Command::verify_map, "Ramification of an explicit rational map over F_{p^k}"},
    {cli::Command::self_test, "Run built-in sanity checks"},
  };

  for (auto &e : entries) {
    e.sub = app.add_subcommand(cli::to_string(e.command), e.help);
    e.sub->add_flag("--json", flags.json, "Emit one JSON document");
    switch (e.command) {
    case cli::Command::decide:
    case cli::Command::construct:
      e.sub->add_option("--p", flags.p, "Characteristic")->required();
      e.sub->add_option("--ram", flags.ram, "Ramification indices, comma separated")->required();
      break;
    case cli::Command::enumerate:
      e.sub->add_option("--d", flags.d, "Degree")->required();
      e.sub->add_option("--ram", flags.ram, "Cycle lengths, comma separated")->required();
      e.sub->add_option("--max-d", flags.max_d, "Largest degree to enumerate")->capture_default_str();
      break;
    case cli::Command::orbit:
      e.sub->add_option("--file", flags.file, "Tuple file")->required();
      e.sub->add_option("--max-states", flags.max_states, "Search state bound")->capture_default_str();
      break;
    case cli::Command::analyze:
      e.sub->add_option("--p", flags.p, "Characteristic")->required();
      e.sub->add_option("--file", flags.file, "Tuple file")->required();
      break;
    case cli::Command::verify_map:
      e.sub->add_option("--p", flags.p, "Characteristic")->required();
      e.sub->add_option("--k", flags.k, "Extension degree")->capture_default_str();
      e.sub->add_option("--num", flags.num, "Numerator in x")->required();
      e.sub->add_option("--den", flags.den, "Denominator in x")->capture_default_str();
      e.sub->add_option("--param", flags.params, "name=value; value may be 'gen' or use u");
      break;
    case cli::Command::self_test:
      break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return 2;
  }

  for (auto const &e : entries) {
    if (!e.sub->parsed())
      continue;
    cli::Response response;
    try {
      response = cli::run(to_request(e.command, flags, *e.sub));
    } catch (std::invalid_argument const &ex) {
      response.command = cli::to_string(e.command);
      response.status = "ERROR";
      response.error = cli::ErrorKind::input;
      response.diagnostics.push_back(ex.what());
    }
    std::string const text = flags.json ? cli::render_json(response) : cli::render_text(response);
    (flags.json || response.exit_code() == 0 ? std::cout : std::cerr) << text;
    return response.exit_code();
  }
  return 1;
}
