#ifndef TAMECOVER_TOOLS_CLI_H
#define TAMECOVER_TOOLS_CLI_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamecover/existence.h"
#include "tamecover/rational_map.h"

/**
 * @file cli.h
 * @brief Request dispatch and response rendering behind the tamecover tool.
 */

namespace tamecover::cli
{

using Json = nlohmann::ordered_json;

enum class Command { decide, enumerate, orbit, construct, analyze, verify_map, self_test };

std::string to_string(Command c);
/// Throws ParseError for an unknown name.
Command command_from_string(std::string const &name);

struct Request
{
  Command command = Command::decide;
  std::optional<unsigned> p;
  unsigned k = 1;
  std::vector<unsigned> ram;
  std::optional<unsigned> d;
  std::string file;                 ///< tuple file name, for diagnostics
  std::optional<std::string> tuple_text;
  std::string num;
  std::string den = "1";
  std::map<std::string, std::string> params;
  std::size_t max_states = 1'000'000;
  unsigned max_d = 6;
  bool json = false;
};

/// Comma-separated positive integers; throws ParseError.
std::vector<unsigned> parse_index_list(std::string const &text);

/// "name=value"; throws ParseError.
std::pair<std::string, std::string> parse_param(std::string const &text);

enum class ErrorKind { none, input, bound, internal };

std::string to_string(ErrorKind k);

struct Response
{
  std::string command;
  std::string status;               ///< EXISTS, NOT_EXISTS, OK, ERROR, ...
  Json result = Json::object();
  std::vector<std::string> diagnostics;
  ErrorKind error = ErrorKind::none;

  /// 0 ok, 1 internal, 2 bad input, 3 bound exceeded.
  int exit_code() const;

  friend bool operator==(Response const &, Response const &) = default;
};

Json to_json(Response const &r);
/// Throws nlohmann::json exceptions on malformed documents.
Response response_from_json(Json const &j);

Json to_json(HurwitzTuple const &t);
HurwitzTuple tuple_from_json(Json const &j);

Json to_json(InseparableWitness const &w);
InseparableWitness inseparable_from_json(Json const &j);

Json to_json(AdmissibilityVerdict const &v);
AdmissibilityVerdict admissibility_from_json(Json const &j);

Json to_json(ExistenceVerdict const &v);
ExistenceVerdict verdict_from_json(Json const &j);

Json to_json(ImprimitiveReport const &r);
Json to_json(FiniteField const &field, RamReport const &r);

/// Never throws: failures become ERROR responses.
Response run(Request const &request);

std::string render_text(Response const &r);
/// A single JSON document with a trailing newline.
std::string render_json(Response const &r);

} // namespace tamecover::cli

#endif // TAMECOVER_TOOLS_CLI_H
