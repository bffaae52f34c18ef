#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace wvg {

struct ilp_options
{
  /// Maximum number of LP relaxations solved before giving up with search_limit_error.
  std::size_t node_limit = 200000;
};

struct ilp_result
{
  lp_status status = lp_status::infeasible;
  std::vector<big_integer> values;
  rational objective_value;
};

namespace detail {

inline bool all_integral( const std::vector<rational>& v )
{
  for ( const auto& x : v )
  {
    if ( !is_integral( x ) )
    {
      return false;
    }
  }
  return true;
}

inline bool integral_objective( const std::vector<rational>& c )
{
  return all_integral( c );
}

inline void add_bound( rational_lp& lp, std::size_t var, relation rel, const rational& value )
{
  std::vector<rational> row( lp.variables, rational( 0 ) );
  row[var] = 1;
  lp.add( std::move( row ), rel, value );
}

inline std::vector<big_integer> to_integers( const std::vector<rational>& v )
{
  std::vector<big_integer> out;
  out.reserve( v.size() );
  for ( const auto& x : v )
  {
    out.push_back( x.get_num() );
  }
  return out;
}

class node_budget
{
public:
  explicit node_budget( std::size_t limit ) : left_( limit ) {}

  void spend( const char* what )
  {
    if ( left_ == 0 )
    {
      throw search_limit_error( std::string( what ) + ": node limit exhausted" );
    }
    --left_;
  }

private:
  std::size_t left_;
};

} // namespace detail

/// Minimizes lp.objective over integer points of the LP's feasible region by best-first
/// branch-and-bound on exact LP relaxations. Unbounded relaxations are rejected.
inline ilp_result minimize_integer( const rational_lp& lp, const ilp_options& opts = {} )
{
  struct node
  {
    rational bound;
    std::size_t order;
    rational_lp lp;
    std::vector<rational> point;
  };
  struct worse
  {
    bool operator()( const node& a, const node& b ) const
    {
      return a.bound != b.bound ? a.bound > b.bound : a.order > b.order;
    }
  };

  const bool integral_obj = detail::integral_objective( lp.objective );
  const auto tighten = [&]( const rational& b ) { return integral_obj ? rational( ceil_of( b ) ) : b; };

  detail::node_budget budget( opts.node_limit );
  budget.spend( "integer search" );
  auto root = solve( lp );
  if ( root.status == lp_status::unbounded )
  {
    throw precondition_error( "integer search needs a bounded relaxation" );
  }
  ilp_result best;
  if ( root.status == lp_status::infeasible )
  {
    return best;
  }

  std::priority_queue<node, std::vector<node>, worse> open;
  std::size_t order = 0;
  open.push( { tighten( root.objective_value ), order++, lp, std::move( root.values ) } );
  std::optional<rational> incumbent;

  while ( !open.empty() )
  {
    node n = open.top();
    open.pop();
    if ( incumbent && n.bound >= *incumbent )
    {
      break;
    }
    std::optional<std::size_t> frac;
    for ( std::size_t k = 0; k < n.point.size() && !frac; ++k )
    {
      if ( !is_integral( n.point[k] ) )
      {
        frac = k;
      }
    }
    if ( !frac )
    {
      rational value = 0;
      for ( std::size_t k = 0; k < n.point.size(); ++k )
      {
        value += lp.objective[k] * n.point[k];
      }
      incumbent = value;
      best.status = lp_status::optimal;
      best.objective_value = value;
      best.values = detail::to_integers( n.point );
      continue;
    }
    const rational& x = n.point[*frac];
    for ( int side = 0; side < 2; ++side )
    {
      rational_lp child = n.lp;
      if ( side == 0 )
      {
        detail::add_bound( child, *frac, relation::less_eq, rational( floor_of( x ) ) );
      }
      else
      {
        detail::add_bound( child, *frac, relation::greater_eq, rational( ceil_of( x ) ) );
      }
      budget.spend( "integer search" );
      auto sol = solve( child );
      if ( sol.status != lp_status::optimal )
      {
        continue;
      }
      rational bound = tighten( sol.objective_value );
      if ( incumbent && bound >= *incumbent )
      {
        continue;
      }
      open.push( { std::move( bound ), order++, std::move( child ), std::move( sol.values ) } );
    }
  }
  return best;
}

/// Smallest integer value of variable `var` over the integer points of the LP.
inline std::optional<big_integer> minimize_variable( rational_lp lp, std::size_t var, const ilp_options& opts = {} )
{
  lp.objective.assign( lp.variables, rational( 0 ) );
  lp.objective[var] = 1;
  auto r = minimize_integer( lp, opts );
  if ( r.status != lp_status::optimal )
  {
    return std::nullopt;
  }
  return r.values[var];
}

/// Visits every integer assignment of the variables `free_vars` (in that order) that extends to a
/// point of the LP relaxation with those variables fixed. The remaining variables are left to
/// the callback. The LP must be bounded in every listed variable.
inline void enumerate_integer_points( const rational_lp& lp, const std::vector<std::size_t>& free_vars,
                                      const std::function<void( const std::vector<big_integer>& )>& visit,
                                      const ilp_options& opts = {} )
{
  detail::node_budget budget( opts.node_limit );
  std::vector<big_integer> chosen;
  std::function<void( const rational_lp&, std::size_t )> rec = [&]( const rational_lp& cur, std::size_t depth ) {
    if ( depth == free_vars.size() )
    {
      visit( chosen );
      return;
    }
    const auto var = free_vars[depth];
    rational_lp probe = cur;
    probe.objective.assign( probe.variables, rational( 0 ) );
    probe.objective[var] = 1;
    budget.spend( "point enumeration" );
    const auto lo = solve( probe );
    if ( lo.status == lp_status::infeasible )
    {
      return;
    }
    probe.objective[var] = -1;
    budget.spend( "point enumeration" );
    const auto hi = solve( probe );
    if ( lo.status != lp_status::optimal || hi.status != lp_status::optimal )
    {
      throw precondition_error( "point enumeration needs every listed variable bounded" );
    }
    const big_integer first = ceil_of( lo.objective_value );
    const big_integer last = floor_of( -hi.objective_value );
    for ( big_integer v = first; v <= last; ++v )
    {
      rational_lp next = cur;
      std::vector<rational> row( next.variables, rational( 0 ) );
      row[var] = 1;
      next.add( std::move( row ), relation::equal, rational( v ) );
      if ( depth + 1 == free_vars.size() )
      {
        budget.spend( "point enumeration" );
        if ( solve( next ).status == lp_status::infeasible )
        {
          continue;
        }
      }
      chosen.push_back( v );
      rec( next, depth + 1 );
      chosen.pop_back();
    }
  };
  rec( lp, 0 );
}

/// All integer points attaining `optimum` (restricted to `free_vars`), given the optimal value.
inline std::vector<std::vector<big_integer>> optimal_face( rational_lp lp, const rational& optimum,
                                                           const std::vector<std::size_t>& free_vars,
                                                           const ilp_options& opts = {} )
{
  lp.add( lp.objective, relation::equal, optimum );
  std::vector<std::vector<big_integer>> out;
  enumerate_integer_points( lp, free_vars, [&]( const std::vector<big_integer>& p ) { out.push_back( p ); }, opts );
  return out;
}

} // namespace wvg
