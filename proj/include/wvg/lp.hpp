#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wvg {

enum class relation
{
  greater_eq,
  less_eq,
  equal
};

struct linear_constraint
{
  std::vector<rational> coefficients;
  relation rel = relation::greater_eq;
  rational rhs;
};

/// min objective · z over free variables z subject to the listed constraints.
struct rational_lp
{
  std::size_t variables = 0;
  std::vector<linear_constraint> constraints;
  std::vector<rational> objective;

  void add( std::vector<rational> coefficients, relation rel, rational rhs )
  {
    constraints.push_back( { std::move( coefficients ), rel, std::move( rhs ) } );
  }
};

enum class lp_status
{
  optimal,
  infeasible,
  unbounded
};

struct rational_solution
{
  lp_status status = lp_status::infeasible;
  std::vector<rational> values;
  rational objective_value;
};

inline bool satisfies( const linear_constraint& c, const std::vector<rational>& z )
{
  rational lhs = 0;
  for ( std::size_t k = 0; k < z.size(); ++k )
  {
    if ( sgn( c.coefficients[k] ) != 0 )
    {
      lhs += c.coefficients[k] * z[k];
    }
  }
  switch ( c.rel )
  {
  case relation::greater_eq:
    return lhs >= c.rhs;
  case relation::less_eq:
    return lhs <= c.rhs;
  case relation::equal:
    return lhs == c.rhs;
  }
  return false;
}

inline bool satisfies( const rational_lp& lp, const std::vector<rational>& z )
{
  for ( const auto& c : lp.constraints )
  {
    if ( !satisfies( c, z ) )
    {
      return false;
    }
  }
  return true;
}

namespace detail {

/// Dense simplex tableau in equality form A x = rhs, x >= 0, rhs >= 0, with an explicit basis.
struct tableau
{
  std::vector<std::vector<rational>> rows;
  std::vector<rational> rhs;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot( std::size_t r, std::size_t j )
  {
    const rational inv = 1 / rows[r][j];
    for ( auto& e : rows[r] )
    {
      if ( sgn( e ) != 0 )
      {
        e *= inv;
      }
    }
    rhs[r] *= inv;
    for ( std::size_t k = 0; k < rows.size(); ++k )
    {
      if ( k == r || sgn( rows[k][j] ) == 0 )
      {
        continue;
      }
      const rational f = rows[k][j];
      for ( std::size_t c = 0; c < columns; ++c )
      {
        if ( sgn( rows[r][c] ) != 0 )
        {
          rows[k][c] -= f * rows[r][c];
        }
      }
      rhs[k] -= f * rhs[r];
    }
    basis[r] = j;
  }

  void erase_row( std::size_t r )
  {
    rows.erase( rows.begin() + static_cast<std::ptrdiff_t>( r ) );
    rhs.erase( rhs.begin() + static_cast<std::ptrdiff_t>( r ) );
    basis.erase( basis.begin() + static_cast<std::ptrdiff_t>( r ) );
  }

  /// Minimizes cost · x using Bland's rule over columns < usable. Returns false if unbounded.
  bool minimize( const std::vector<rational>& cost, std::size_t usable )
  {
    std::vector<char> is_basic( columns, 0 );
    for ( auto b : basis )
    {
      is_basic[b] = 1;
    }
    for ( ;; )
    {
      std::optional<std::size_t> entering;
      for ( std::size_t j = 0; j < usable && !entering; ++j )
      {
        if ( is_basic[j] )
        {
          continue;
        }
        rational reduced = cost[j];
        for ( std::size_t r = 0; r < rows.size(); ++r )
        {
          if ( sgn( rows[r][j] ) != 0 && sgn( cost[basis[r]] ) != 0 )
          {
            reduced -= cost[basis[r]] * rows[r][j];
          }
        }
        if ( sgn( reduced ) < 0 )
        {
          entering = j;
        }
      }
      if ( !entering )
      {
        return true;
      }
      const auto j = *entering;
      std::optional<std::size_t> leaving;
      rational best_ratio;
      for ( std::size_t r = 0; r < rows.size(); ++r )
      {
        if ( sgn( rows[r][j] ) <= 0 )
        {
          continue;
        }
        rational ratio = rhs[r] / rows[r][j];
        if ( !leaving || ratio < best_ratio || ( ratio == best_ratio && basis[r] < basis[*leaving] ) )
        {
          leaving = r;
          best_ratio = std::move( ratio );
        }
      }
      if ( !leaving )
      {
        return false;
      }
      is_basic[basis[*leaving]] = 0;
      is_basic[j] = 1;
      pivot( *leaving, j );
    }
  }
};

/// Solves the (possibly underdetermined, consistent) system rows · z = rhs; free variables are 0.
inline std::vector<rational> solve_consistent( std::vector<std::vector<rational>> a, std::vector<rational> b,
                                               std::size_t n )
{
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for ( std::size_t col = 0; col < n && row < a.size(); ++col )
  {
    std::size_t p = row;
    while ( p < a.size() && sgn( a[p][col] ) == 0 )
    {
      ++p;
    }
    if ( p == a.size() )
    {
      continue;
    }
    std::swap( a[p], a[row] );
    std::swap( b[p], b[row] );
    const rational inv = 1 / a[row][col];
    for ( auto& e : a[row] )
    {
      e *= inv;
    }
    b[row] *= inv;
    for ( std::size_t k = 0; k < a.size(); ++k )
    {
      if ( k == row || sgn( a[k][col] ) == 0 )
      {
        continue;
      }
      const rational f = a[k][col];
      for ( std::size_t c = 0; c < n; ++c )
      {
        a[k][c] -= f * a[row][c];
      }
      b[k] -= f * b[row];
    }
    pivot_col.push_back( col );
    ++row;
  }
  std::vector<rational> z( n, rational( 0 ) );
  for ( std::size_t r = 0; r < pivot_col.size(); ++r )
  {
    z[pivot_col[r]] = b[r];
  }
  return z;
}

struct normalized_rows
{
  std::vector<std::vector<rational>> a; // a_j · z >= b_j
  std::vector<rational> b;
};

inline normalized_rows normalize( const rational_lp& lp )
{
  normalized_rows out;
  for ( const auto& c : lp.constraints )
  {
    std::vector<rational> neg( c.coefficients.size() );
    for ( std::size_t k = 0; k < neg.size(); ++k )
    {
      neg[k] = -c.coefficients[k];
    }
    if ( c.rel != relation::less_eq )
    {
      out.a.push_back( c.coefficients );
      out.b.push_back( c.rhs );
    }
    if ( c.rel != relation::greater_eq )
    {
      out.a.push_back( std::move( neg ) );
      out.b.push_back( -c.rhs );
    }
  }
  return out;
}

enum class dual_outcome
{
  optimal,
  dual_infeasible,
  dual_unbounded
};

/// Runs the simplex method on the dual  max b·y  s.t.  Σ y_j a_j = c, y >= 0  and recovers the
/// primal point from the optimal dual basis by complementary slackness.
inline dual_outcome solve_dual( const normalized_rows& rows, const std::vector<rational>& c, std::size_t d,
                                std::vector<rational>& primal )
{
  const std::size_t m = rows.a.size();
  tableau tab;
  tab.columns = m + d;
  tab.rows.assign( d, std::vector<rational>( tab.columns, rational( 0 ) ) );
  tab.rhs.assign( d, rational( 0 ) );
  tab.basis.resize( d );
  for ( std::size_t k = 0; k < d; ++k )
  {
    const bool flip = sgn( c[k] ) < 0;
    for ( std::size_t j = 0; j < m; ++j )
    {
      tab.rows[k][j] = flip ? rational( -rows.a[j][k] ) : rows.a[j][k];
    }
    tab.rows[k][m + k] = 1;
    tab.rhs[k] = flip ? rational( -c[k] ) : c[k];
    tab.basis[k] = m + k;
  }

  std::vector<rational> phase1( tab.columns, rational( 0 ) );
  for ( std::size_t k = 0; k < d; ++k )
  {
    phase1[m + k] = 1;
  }
  tab.minimize( phase1, tab.columns );
  for ( std::size_t r = 0; r < tab.rows.size(); ++r )
  {
    if ( tab.basis[r] >= m && sgn( tab.rhs[r] ) != 0 )
    {
      return dual_outcome::dual_infeasible;
    }
  }
  for ( std::size_t r = 0; r < tab.rows.size(); )
  {
    if ( tab.basis[r] < m )
    {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for ( std::size_t j = 0; j < m && !col; ++j )
    {
      if ( sgn( tab.rows[r][j] ) != 0 )
      {
        col = j;
      }
    }
    if ( col )
    {
      tab.pivot( r, *col );
      ++r;
    }
    else
    {
      tab.erase_row( r );
    }
  }

  std::vector<rational> phase2( tab.columns, rational( 0 ) );
  for ( std::size_t j = 0; j < m; ++j )
  {
    phase2[j] = -rows.b[j];
  }
  if ( !tab.minimize( phase2, m ) )
  {
    return dual_outcome::dual_unbounded;
  }

  std::vector<std::vector<rational>> tight;
  std::vector<rational> tight_rhs;
  for ( auto j : tab.basis )
  {
    tight.push_back( rows.a[j] );
    tight_rhs.push_back( rows.b[j] );
  }
  primal = solve_consistent( std::move( tight ), std::move( tight_rhs ), d );
  return dual_outcome::optimal;
}

} // namespace detail

/// Exact LP solve. The simplex method (Bland's rule, exact rational pivots) runs on the dual,
/// whose tableau has one row per variable; the instances here have few variables and many
/// constraints.
inline rational_solution solve( const rational_lp& lp )
{
  const std::size_t d = lp.variables;
  if ( d == 0 )
  {
    throw precondition_error( "LP needs at least one variable" );
  }
  if ( lp.objective.size() != d )
  {
    throw precondition_error( "objective has " + std::to_string( lp.objective.size() ) + " entries for " +
                              std::to_string( d ) + " variables" );
  }
  for ( std::size_t i = 0; i < lp.constraints.size(); ++i )
  {
    if ( lp.constraints[i].coefficients.size() != d )
    {
      throw precondition_error( "constraint " + std::to_string( i + 1 ) + " has " +
                                std::to_string( lp.constraints[i].coefficients.size() ) + " coefficients for " +
                                std::to_string( d ) + " variables" );
    }
  }

  const auto rows = detail::normalize( lp );
  rational_solution out;
  std::vector<rational> z;
  switch ( detail::solve_dual( rows, lp.objective, d, z ) )
  {
  case detail::dual_outcome::dual_unbounded:
    out.status = lp_status::infeasible;
    return out;
  case detail::dual_outcome::dual_infeasible:
  {
    std::vector<rational> feasible_point;
    const std::vector<rational> zero( d, rational( 0 ) );
    const auto probe = detail::solve_dual( rows, zero, d, feasible_point );
    out.status = probe == detail::dual_outcome::optimal ? lp_status::unbounded : lp_status::infeasible;
    return out;
  }
  case detail::dual_outcome::optimal:
    break;
  }
  if ( !satisfies( lp, z ) )
  {
    throw consistency_error( "simplex returned a point violating a constraint" );
  }
  out.status = lp_status::optimal;
  out.objective_value = 0;
  for ( std::size_t k = 0; k < d; ++k )
  {
    out.objective_value += lp.objective[k] * z[k];
  }
  out.values = std::move( z );
  return out;
}

} // namespace wvg
