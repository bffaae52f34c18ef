#include <gtest/gtest.h>

#include <random>
#include <numeric>
#include <set>

#include <wvg/ilp.hpp>

using namespace wvg;

namespace {

struct brute_result
{
  std::optional<rational> best;
  std::set<std::vector<long>> argmin;
};

brute_result brute_force( const rational_lp& lp, long lo, long hi )
{
  brute_result r;
  std::vector<long> z( lp.variables, lo );
  for ( ;; )
  {
    std::vector<rational> zr( z.begin(), z.end() );
    if ( satisfies( lp, zr ) )
    {
      rational v = 0;
      for ( std::size_t k = 0; k < z.size(); ++k )
      {
        v += lp.objective[k] * zr[k];
      }
      if ( !r.best || v < *r.best )
      {
        r.best = v;
        r.argmin.clear();
      }
      if ( v == *r.best )
      {
        r.argmin.insert( z );
      }
    }
    std::size_t k = 0;
    while ( k < z.size() && z[k] == hi )
    {
      z[k++] = lo;
    }
    if ( k == z.size() )
    {
      break;
    }
    ++z[k];
  }
  return r;
}

rational_lp random_program( std::mt19937& rng, std::size_t d )
{
  std::uniform_int_distribution<long> coef( -5, 5 ), rhs( -9, 9 );
  rational_lp lp;
  lp.variables = d;
  for ( std::size_t i = 0; i < d; ++i )
  {
    lp.objective.emplace_back( coef( rng ) );
    std::vector<rational> e( d, rational( 0 ) );
    e[i] = 1;
    lp.add( e, relation::less_eq, 6 );
    lp.add( e, relation::greater_eq, -6 );
  }
  for ( int k = 0; k < 4; ++k )
  {
    std::vector<rational> row;
    for ( std::size_t i = 0; i < d; ++i )
    {
      row.emplace_back( coef( rng ) );
    }
    rational r( rhs( rng ), 2 + k % 3 );
    r.canonicalize();
    lp.add( row, relation::greater_eq, r );
  }
  return lp;
}

} // namespace

TEST( MinimizeInteger, MatchesBruteForce )
{
  std::mt19937 rng( 23 );
  int feasible = 0;
  for ( int trial = 0; trial < 250; ++trial )
  {
    const auto lp = random_program( rng, 2 + trial % 2 );
    const auto oracle = brute_force( lp, -6, 6 );
    const auto r = minimize_integer( lp );
    if ( !oracle.best )
    {
      EXPECT_EQ( r.status, lp_status::infeasible );
      continue;
    }
    ++feasible;
    ASSERT_EQ( r.status, lp_status::optimal );
    EXPECT_EQ( r.objective_value, *oracle.best );
    std::vector<long> got;
    for ( const auto& v : r.values )
    {
      got.push_back( v.get_si() );
    }
    EXPECT_EQ( oracle.argmin.count( got ), 1u );

    std::vector<std::size_t> vars( lp.variables );
    std::iota( vars.begin(), vars.end(), 0 );
    std::set<std::vector<long>> face;
    for ( const auto& p : optimal_face( lp, *oracle.best, vars ) )
    {
      std::vector<long> q;
      for ( const auto& v : p )
      {
        q.push_back( v.get_si() );
      }
      face.insert( q );
    }
    EXPECT_EQ( face, oracle.argmin );
  }
  EXPECT_GT( feasible, 100 );
}

TEST( MinimizeInteger, FractionalObjective )
{
  rational_lp lp;
  lp.variables = 2;
  lp.objective = { rational( 1, 2 ), rational( 1, 3 ) };
  lp.add( { 1, 1 }, relation::greater_eq, rational( 7, 2 ) );
  lp.add( { 1, 0 }, relation::greater_eq, 0 );
  lp.add( { 0, 1 }, relation::greater_eq, 0 );
  const auto r = minimize_integer( lp );
  ASSERT_EQ( r.status, lp_status::optimal );
  EXPECT_EQ( r.objective_value, rational( 4, 3 ) );
}

TEST( MinimizeInteger, NodeLimit )
{
  rational_lp lp;
  lp.variables = 2;
  lp.objective = { 1, 1 };
  lp.add( { 2, 2 }, relation::equal, 1 );
  lp.add( { 1, 0 }, relation::greater_eq, -40 );
  lp.add( { 0, 1 }, relation::greater_eq, -40 );
  lp.add( { 1, 0 }, relation::less_eq, 40 );
  lp.add( { 0, 1 }, relation::less_eq, 40 );
  ilp_options tiny;
  tiny.node_limit = 5;
  EXPECT_THROW( minimize_integer( lp, tiny ), search_limit_error );
}

TEST( MinimizeInteger, UnboundedRelaxationRejected )
{
  rational_lp lp;
  lp.variables = 1;
  lp.objective = { 1 };
  lp.add( { 1 }, relation::less_eq, 3 );
  EXPECT_THROW( minimize_integer( lp ), precondition_error );
}
