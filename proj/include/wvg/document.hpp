#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "complete_game.hpp"
#include "errors.hpp"
#include "game_analysis.hpp"
#include "rational.hpp"
#include "representation.hpp"

namespace wvg {

using json = nlohmann::ordered_json;

/// A game as read from or written to JSON: either a typed form (sizes + shift-minimal winning
/// profiles) or a weighted form (quota + per-voter weights).
struct game_document
{
  std::optional<complete_game> typed;
  std::optional<integer_representation> weights;
  std::string name;
  std::string source;
  std::vector<std::string> warnings;

  bool is_typed() const { return typed.has_value(); }
};

namespace detail {

/// `byte` is the 1-based offset of the offending character, as reported by the JSON parser.
inline std::string position_of( const std::string& text, std::size_t byte )
{
  std::size_t line = 1, column = 1;
  for ( std::size_t i = 0; i + 1 < byte && i < text.size(); ++i )
  {
    if ( text[i] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
  }
  return "line " + std::to_string( line ) + ", column " + std::to_string( column );
}

template <typename T>
T field( const json& j, const char* key )
{
  if ( !j.contains( key ) )
  {
    throw parse_error( std::string( "missing field \"" ) + key + "\"" );
  }
  try
  {
    return j.at( key ).get<T>();
  }
  catch ( const nlohmann::json::exception& )
  {
    throw parse_error( std::string( "field \"" ) + key + "\" has the wrong type" );
  }
}

} // namespace detail

inline game_document document_from_json( const json& j )
{
  if ( !j.is_object() )
  {
    throw parse_error( "document must be a JSON object" );
  }
  game_document doc;
  if ( j.contains( "name" ) )
  {
    doc.name = detail::field<std::string>( j, "name" );
  }
  if ( j.contains( "source" ) )
  {
    doc.source = detail::field<std::string>( j, "source" );
  }
  const auto kind = detail::field<std::string>( j, "kind" );
  if ( kind == "typed" )
  {
    const auto sizes = detail::field<std::vector<int>>( j, "sizes" );
    const auto rows = detail::field<std::vector<std::vector<int>>>( j, "winners" );
    std::vector<coalition_profile> winners;
    for ( const auto& r : rows )
    {
      winners.emplace_back( r );
    }
    try
    {
      doc.typed = validate_complete_game( class_sizes( sizes ), winners );
    }
    catch ( const precondition_error& e )
    {
      throw parse_error( std::string( "invalid typed document: " ) + e.what() );
    }
  }
  else if ( kind == "weights" )
  {
    integer_representation rep{ detail::field<weight_t>( j, "quota" ), detail::field<std::vector<weight_t>>( j, "weights" ) };
    if ( !std::is_sorted( rep.weights.begin(), rep.weights.end(), std::greater<>() ) )
    {
      std::sort( rep.weights.begin(), rep.weights.end(), std::greater<>() );
      doc.warnings.push_back( "weights were not non-increasing and have been re-sorted" );
    }
    try
    {
      check_representation( rep );
    }
    catch ( const precondition_error& e )
    {
      throw parse_error( std::string( "invalid weights document: " ) + e.what() );
    }
    doc.weights = std::move( rep );
  }
  else
  {
    throw parse_error( "unknown document kind \"" + kind + "\", expected \"typed\" or \"weights\"" );
  }
  return doc;
}

inline game_document parse_document( const std::string& text )
{
  json j;
  try
  {
    j = json::parse( text );
  }
  catch ( const nlohmann::json::parse_error& e )
  {
    throw parse_error( "malformed JSON at " + detail::position_of( text, e.byte ) );
  }
  return document_from_json( j );
}

/// Canonical form of the document's game; a typed document is its own canonical form.
inline canonical_form canonical_of( const game_document& doc )
{
  if ( doc.typed )
  {
    type_partition identity;
    int next = 0;
    for ( int n : doc.typed->sizes().counts() )
    {
      auto& c = identity.classes.emplace_back();
      for ( int k = 0; k < n; ++k )
      {
        c.push_back( next++ );
      }
    }
    return { *doc.typed, identity };
  }
  return canonicalize( *doc.weights );
}

inline json to_json( const complete_game& game, const std::string& name = {}, const std::string& source = {} )
{
  json rows = json::array();
  for ( const auto& m : game.winners() )
  {
    rows.push_back( m.counts() );
  }
  json j{ { "kind", "typed" }, { "sizes", game.sizes().counts() }, { "winners", rows } };
  if ( !name.empty() )
  {
    j["name"] = name;
  }
  if ( !source.empty() )
  {
    j["source"] = source;
  }
  return j;
}

inline json to_json( const integer_representation& rep )
{
  return json{ { "kind", "weights" }, { "quota", rep.quota }, { "weights", rep.weights } };
}

inline json to_json( const typed_representation& rep )
{
  return json{ { "quota", rep.quota }, { "class_weights", rep.class_weights } };
}

inline json to_json( const coalition_profile& p ) { return p.counts(); }

/// Exact rational as {"num": "...", "den": "..."}.
inline json to_json( const rational& r )
{
  return json{ { "num", r.get_num().get_str() }, { "den", r.get_den().get_str() } };
}

inline json to_json( const std::vector<rational>& v )
{
  json out = json::array();
  for ( const auto& x : v )
  {
    out.push_back( to_json( x ) );
  }
  return out;
}

inline json to_json( const type_partition& p )
{
  json out = json::array();
  for ( const auto& c : p.classes )
  {
    json members = json::array();
    for ( int v : c )
    {
      members.push_back( v + 1 );
    }
    out.push_back( members );
  }
  return out;
}

} // namespace wvg
