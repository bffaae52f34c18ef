#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace wvg {

namespace detail {

inline std::vector<rational> profile_row( const coalition_profile& p, std::size_t vars )
{
  std::vector<rational> row( vars, rational( 0 ) );
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    row[i] = p[i];
  }
  return row;
}

} // namespace detail

struct formulation_options
{
  /// Drop w_1 >= w_2 + 1; only valid for t = 2 with at least two shift-minimal winning rows.
  bool drop_redundant = false;
  /// Add w_t >= 1 (used to check that it is implied).
  bool positive_last = false;
};

/// Quota formulation over variables (w_1, ..., w_t, q):
///   x·w >= q (x in W^s),  y·w <= q - 1 (y in L^s),  w_i >= w_{i+1} + 1,  w_t >= 0.
inline rational_lp quota_formulation( const complete_game& game, const std::vector<coalition_profile>& losers,
                                      std::vector<rational> objective, formulation_options opts = {} )
{
  const std::size_t t = game.types();
  rational_lp lp;
  lp.variables = t + 1;
  lp.objective = std::move( objective );
  for ( const auto& x : game.winners() )
  {
    auto row = detail::profile_row( x, t + 1 );
    row[t] = -1;
    lp.add( std::move( row ), relation::greater_eq, 0 );
  }
  for ( const auto& y : losers )
  {
    auto row = detail::profile_row( y, t + 1 );
    row[t] = -1;
    lp.add( std::move( row ), relation::less_eq, -1 );
  }
  if ( !opts.drop_redundant )
  {
    for ( std::size_t i = 0; i + 1 < t; ++i )
    {
      std::vector<rational> row( t + 1, rational( 0 ) );
      row[i] = 1;
      row[i + 1] = -1;
      lp.add( std::move( row ), relation::greater_eq, 1 );
    }
  }
  std::vector<rational> last( t + 1, rational( 0 ) );
  last[t - 1] = 1;
  lp.add( std::move( last ), relation::greater_eq, opts.positive_last ? 1 : 0 );
  return lp;
}

/// Quota-free formulation over (w_1, ..., w_t): x·w >= y·w + 1 for all pairs, plus the ordering rows.
inline rational_lp quota_free_formulation( const complete_game& game, const std::vector<coalition_profile>& losers )
{
  const std::size_t t = game.types();
  rational_lp lp;
  lp.variables = t;
  lp.objective.assign( t, rational( 0 ) );
  for ( const auto& x : game.winners() )
  {
    for ( const auto& y : losers )
    {
      std::vector<rational> row( t );
      for ( std::size_t i = 0; i < t; ++i )
      {
        row[i] = x[i] - y[i];
      }
      lp.add( std::move( row ), relation::greater_eq, 1 );
    }
  }
  for ( std::size_t i = 0; i + 1 < t; ++i )
  {
    std::vector<rational> row( t, rational( 0 ) );
    row[i] = 1;
    row[i + 1] = -1;
    lp.add( std::move( row ), relation::greater_eq, 1 );
  }
  std::vector<rational> last( t, rational( 0 ) );
  last[t - 1] = 1;
  lp.add( std::move( last ), relation::greater_eq, 0 );
  return lp;
}

struct weightedness_result
{
  bool weighted = false;
  /// Minimum-quota solution (w_1, ..., w_t, q) of the quota formulation when weighted.
  std::optional<rational_solution> witness;
};

inline weightedness_result is_weighted( const complete_game& game, const std::vector<coalition_profile>& losers )
{
  std::vector<rational> objective( game.types() + 1, rational( 0 ) );
  objective.back() = 1;
  auto sol = solve( quota_formulation( game, losers, std::move( objective ) ) );
  if ( sol.status == lp_status::unbounded )
  {
    throw consistency_error( "quota minimization cannot be unbounded" );
  }
  if ( sol.status == lp_status::infeasible )
  {
    return {};
  }
  return { true, std::move( sol ) };
}

inline weightedness_result is_weighted( const complete_game& game )
{
  return is_weighted( game, shift_maximal_losing( game ) );
}

inline bool is_weighted_quota_free( const complete_game& game )
{
  return solve( quota_free_formulation( game, shift_maximal_losing( game ) ) ).status == lp_status::optimal;
}

struct fractional_minimum
{
  /// "w1", ..., "wt", "q" or "sum".
  std::string objective;
  rational_solution solution;
};

/// Objective vector for the named target over (w_1, ..., w_t, q).
inline std::vector<rational> lp_objective( const class_sizes& sizes, const std::string& name )
{
  const std::size_t t = sizes.types();
  std::vector<rational> c( t + 1, rational( 0 ) );
  if ( name == "q" )
  {
    c[t] = 1;
  }
  else if ( name == "sum" )
  {
    for ( std::size_t i = 0; i < t; ++i )
    {
      c[i] = sizes[i];
    }
  }
  else if ( name.size() > 1 && name[0] == 'w' )
  {
    std::size_t i = 0;
    try
    {
      i = std::stoul( name.substr( 1 ) );
    }
    catch ( const std::exception& )
    {
      i = 0;
    }
    if ( i < 1 || i > t )
    {
      throw precondition_error( "unknown objective " + name );
    }
    c[i - 1] = 1;
  }
  else
  {
    throw precondition_error( "unknown objective " + name );
  }
  return c;
}

inline std::vector<std::string> objective_names( std::size_t t )
{
  std::vector<std::string> names;
  for ( std::size_t i = 1; i <= t; ++i )
  {
    names.push_back( "w" + std::to_string( i ) );
  }
  names.push_back( "q" );
  names.push_back( "sum" );
  return names;
}

/// Minimizes each of w_1, ..., w_t, q and Σ n_i w_i over the quota formulation. For t = 2 with
/// r >= 2 the redundant ordering row is dropped.
inline std::vector<fractional_minimum> fractional_minima( const complete_game& game )
{
  const auto losers = shift_maximal_losing( game );
  formulation_options opts;
  opts.drop_redundant = game.types() == 2 && game.winners().size() >= 2;
  std::vector<fractional_minimum> out;
  for ( const auto& name : objective_names( game.types() ) )
  {
    auto sol = solve( quota_formulation( game, losers, lp_objective( game.sizes(), name ), opts ) );
    if ( sol.status == lp_status::infeasible )
    {
      throw not_weighted_error( "game is not weighted" );
    }
    if ( sol.status != lp_status::optimal )
    {
      throw consistency_error( "objective " + name + " is unbounded below" );
    }
    out.push_back( { name, std::move( sol ) } );
  }
  return out;
}

/// The optimal values of the single-variable objectives w_1, ..., w_t, q, each minimized on its own.
inline std::vector<rational> fractional_minimum_vector( const std::vector<fractional_minimum>& minima )
{
  std::vector<rational> v;
  for ( const auto& m : minima )
  {
    if ( m.objective != "sum" )
    {
      v.push_back( m.solution.objective_value );
    }
  }
  return v;
}

} // namespace wvg
