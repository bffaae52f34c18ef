#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"

namespace wvg {

using weight_t = std::int64_t;

/// Per-voter integer realization [q; w_1, ..., w_n].
struct integer_representation
{
  weight_t quota = 1;
  std::vector<weight_t> weights;

  weight_t total() const { return std::accumulate( weights.begin(), weights.end(), weight_t{ 0 } ); }

  friend bool operator==( const integer_representation&, const integer_representation& ) = default;
  friend auto operator<=>( const integer_representation&, const integer_representation& ) = default;
};

/// Throws unless q >= 1, all weights are non-negative and the grand coalition wins.
inline void check_representation( const integer_representation& rep )
{
  if ( rep.quota < 1 )
  {
    throw precondition_error( "quota must be at least 1" );
  }
  if ( rep.weights.empty() )
  {
    throw precondition_error( "representation has no voters" );
  }
  if ( std::any_of( rep.weights.begin(), rep.weights.end(), []( weight_t w ) { return w < 0; } ) )
  {
    throw precondition_error( "weights must be non-negative" );
  }
  if ( rep.total() < rep.quota )
  {
    throw precondition_error( "degenerate game: total weight " + std::to_string( rep.total() ) + " below quota " +
                              std::to_string( rep.quota ) );
  }
}

/// One weight per equivalence class, strongest class first.
struct typed_representation
{
  weight_t quota = 1;
  std::vector<weight_t> class_weights;

  friend bool operator==( const typed_representation&, const typed_representation& ) = default;
  friend auto operator<=>( const typed_representation&, const typed_representation& ) = default;
};

inline weight_t profile_weight( const std::vector<weight_t>& class_weights, const coalition_profile& p )
{
  weight_t s = 0;
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    s += class_weights[i] * p[i];
  }
  return s;
}

inline weight_t typed_total( const typed_representation& rep, const class_sizes& sizes )
{
  weight_t s = 0;
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    s += rep.class_weights[i] * sizes[i];
  }
  return s;
}

/// Smallest weight of a shift-minimal winning profile and largest weight of a shift-maximal
/// losing profile under typed weights.
struct weight_gap
{
  weight_t min_winning = std::numeric_limits<weight_t>::max();
  weight_t max_losing = std::numeric_limits<weight_t>::min();

  bool separates() const { return max_losing < min_winning; }
};

inline weight_gap gap_of( const std::vector<weight_t>& class_weights, const std::vector<coalition_profile>& winners,
                          const std::vector<coalition_profile>& losers )
{
  weight_gap g;
  for ( const auto& x : winners )
  {
    g.min_winning = std::min( g.min_winning, profile_weight( class_weights, x ) );
  }
  for ( const auto& y : losers )
  {
    g.max_losing = std::max( g.max_losing, profile_weight( class_weights, y ) );
  }
  return g;
}

/// Exact check that typed weights and quota realize the game: every shift-minimal winning profile
/// reaches the quota, every shift-maximal losing profile stays below it, and weights are
/// non-increasing across classes.
inline bool realizes( const typed_representation& rep, const std::vector<coalition_profile>& winners,
                      const std::vector<coalition_profile>& losers )
{
  const auto& w = rep.class_weights;
  for ( std::size_t i = 0; i + 1 < w.size(); ++i )
  {
    if ( w[i] < w[i + 1] )
    {
      return false;
    }
  }
  if ( !w.empty() && w.back() < 0 )
  {
    return false;
  }
  const auto g = gap_of( w, winners, losers );
  return g.min_winning >= rep.quota && g.max_losing <= rep.quota - 1;
}

inline bool realizes( const complete_game& game, const typed_representation& rep )
{
  return rep.class_weights.size() == game.types() && realizes( rep, game.winners(), shift_maximal_losing( game ) );
}

/// Per-voter check. Voters are numbered class by class (class 1 first). Within a class the
/// lightest members realize a winning profile most cheaply and the heaviest a losing profile
/// most expensively; classes must not overlap in weight order.
inline bool realizes( const complete_game& game, const integer_representation& rep,
                      const std::vector<coalition_profile>& losers )
{
  const auto& sizes = game.sizes();
  if ( rep.weights.size() != static_cast<std::size_t>( sizes.voters() ) )
  {
    return false;
  }
  std::vector<std::vector<weight_t>> classes( sizes.types() );
  std::size_t v = 0;
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    for ( int k = 0; k < sizes[i]; ++k )
    {
      classes[i].push_back( rep.weights[v++] );
    }
    std::sort( classes[i].begin(), classes[i].end(), std::greater<>() );
  }
  for ( std::size_t i = 0; i + 1 < classes.size(); ++i )
  {
    if ( classes[i].back() < classes[i + 1].front() )
    {
      return false;
    }
  }
  if ( classes.back().back() < 0 )
  {
    return false;
  }
  for ( const auto& x : game.winners() )
  {
    weight_t s = 0;
    for ( std::size_t i = 0; i < x.size(); ++i )
    {
      s += std::accumulate( classes[i].end() - x[i], classes[i].end(), weight_t{ 0 } );
    }
    if ( s < rep.quota )
    {
      return false;
    }
  }
  for ( const auto& y : losers )
  {
    weight_t s = 0;
    for ( std::size_t i = 0; i < y.size(); ++i )
    {
      s += std::accumulate( classes[i].begin(), classes[i].begin() + y[i], weight_t{ 0 } );
    }
    if ( s > rep.quota - 1 )
    {
      return false;
    }
  }
  return true;
}

inline integer_representation expand( const typed_representation& rep, const class_sizes& sizes )
{
  integer_representation out{ rep.quota, {} };
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    out.weights.insert( out.weights.end(), static_cast<std::size_t>( sizes[i] ), rep.class_weights[i] );
  }
  return out;
}

inline std::string to_string( const integer_representation& rep )
{
  std::string s = "[" + std::to_string( rep.quota ) + ";";
  for ( std::size_t i = 0; i < rep.weights.size(); ++i )
  {
    s += ( i ? ", " : " " ) + std::to_string( rep.weights[i] );
  }
  return s + "]";
}

inline std::string to_string( const typed_representation& rep )
{
  return to_string( integer_representation{ rep.quota, rep.class_weights } );
}

} // namespace wvg
