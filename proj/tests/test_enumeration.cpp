#include <gtest/gtest.h>

#include <set>

#include <wvg/enumeration.hpp>

using namespace wvg;

namespace {

using game_key = std::pair<std::vector<int>, std::vector<std::vector<int>>>;

game_key key_of( const complete_game& g )
{
  std::vector<std::vector<int>> rows;
  for ( const auto& m : g.winners() )
  {
    rows.push_back( m.counts() );
  }
  return { g.sizes().counts(), rows };
}

bool prefix_dominates( const coalition_profile& x, const coalition_profile& y )
{
  return x[0] >= y[0] && x[0] + x[1] >= y[0] + y[1];
}

// Every set of profiles closed upward under prefix-sum dominance, containing the grand coalition
// and not the empty one, kept when it defines a game with exactly two types.
std::set<game_key> upsets_oracle( int n )
{
  std::set<game_key> out;
  for ( int n1 = 1; n1 < n; ++n1 )
  {
    const class_sizes sizes{ n1, n - n1 };
    profile_space space( sizes );
    const std::size_t k = space.size();
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << k ); ++mask )
    {
      bool closed = true;
      for ( std::size_t i = 0; i < k && closed; ++i )
      {
        if ( !( mask >> i & 1 ) )
        {
          continue;
        }
        for ( std::size_t j = 0; j < k; ++j )
        {
          if ( !( mask >> j & 1 ) && prefix_dominates( space.at( j ), space.at( i ) ) )
          {
            closed = false;
            break;
          }
        }
      }
      if ( !closed )
      {
        continue;
      }
      std::vector<char> table( k );
      for ( std::size_t i = 0; i < k; ++i )
      {
        table[i] = mask >> i & 1;
      }
      if ( !table[space.index_of( coalition_profile{ n1, n - n1 } )] || table[space.index_of( coalition_profile{ 0, 0 } )] )
      {
        continue;
      }
      try
      {
        out.insert( key_of( validate_complete_game( sizes, shift_minimal_winning( sizes, table ) ) ) );
      }
      catch ( const invalid_game_error& )
      {
      }
    }
  }
  return out;
}

} // namespace

TEST( Enumeration, FormulaValues )
{
  EXPECT_EQ( fibonacci_csg_formula( 2 ), 1 );
  EXPECT_EQ( fibonacci_csg_formula( 3 ), 5 );
  EXPECT_EQ( fibonacci_csg_formula( 6 ), 76 );
  EXPECT_EQ( fibonacci_csg_formula( 10 ), 839 );
  EXPECT_EQ( single_row_weighted_formula( 2 ), 1 );
  EXPECT_EQ( single_row_weighted_formula( 3 ), 4 );
  EXPECT_EQ( single_row_weighted_formula( 8 ), 74 );
  EXPECT_THROW( fibonacci_csg_formula( 1 ), precondition_error );
}

TEST( Enumeration, AgreesWithUpsetOracle )
{
  for ( int n = 2; n <= 6; ++n )
  {
    std::set<game_key> generated;
    for ( const auto& g : enumerate_csg_t2( n ) )
    {
      EXPECT_TRUE( generated.insert( key_of( g ) ).second ) << "duplicate at n = " << n;
    }
    EXPECT_EQ( generated, upsets_oracle( n ) ) << "n = " << n;
  }
}

TEST( Enumeration, CountMatchesFibonacciFormula )
{
  for ( int n = 2; n <= 12; ++n )
  {
    const auto games = enumerate_csg_t2( n );
    EXPECT_EQ( big_integer( games.size() ), fibonacci_csg_formula( n ) ) << "n = " << n;
    std::set<game_key> keys;
    for ( const auto& g : games )
    {
      keys.insert( key_of( g ) );
    }
    EXPECT_EQ( keys.size(), games.size() );
  }
  EXPECT_EQ( count_csg_t2( 12, std::nullopt, 4 ), count_csg_t2( 12 ) );
}

TEST( Enumeration, SingleRowWeightedCount )
{
  for ( int n = 2; n <= 10; ++n )
  {
    const auto row = count_wvg_t2( n, 1 );
    EXPECT_EQ( row.wvg_count, static_cast<std::uint64_t>( single_row_weighted_formula( n ) ) ) << "n = " << n;
    EXPECT_LE( row.wvg_count, row.csg_count );
  }
}

TEST( Enumeration, NotWeightedRectangle )
{
  for ( int n = 2; n <= 10; ++n )
  {
    for ( const auto& shard : enumeration_shards( n ) )
    {
      if ( shard.first )
      {
        continue;
      }
      for_each_game_in_shard( shard, [&]( const complete_game& g ) {
        const auto& m = g.winners().front();
        const bool rectangle = 1 <= m[0] && m[0] <= shard.n1 - 1 && 2 <= m[1] && m[1] <= shard.n2 - 2;
        EXPECT_EQ( is_weighted( g ).weighted, !rectangle ) << to_string( m );
      } );
    }
  }
}

TEST( Enumeration, WeightedCountBounds )
{
  for ( int n = 2; n <= 10; ++n )
  {
    const auto row = count_wvg_t2( n, std::nullopt, { 4, 10 } );
    EXPECT_EQ( big_integer( row.csg_count ), fibonacci_csg_formula( n ) );
    EXPECT_LE( rational( row.wvg_count ), wm_t2_bound( n ) ) << "n = " << n;
    EXPECT_LE( big_integer( row.wvg_count ), wm_t2_counting_sum( n ) );
    EXPECT_LT( big_integer( row.wvg_count ), wm_general_bound( n, 2 ) );
    EXPECT_LE( rational( wm_t2_counting_sum( n ) ), wm_t2_bound( n ) );
  }
  EXPECT_EQ( count_wvg_t2( 7, std::nullopt, { 1, 10 } ).wvg_count, count_wvg_t2( 7, std::nullopt, { 3, 10 } ).wvg_count );
  EXPECT_THROW( count_wvg_t2( 11 ), precondition_error );
}

TEST( Enumeration, WeightednessFormulationsAgree )
{
  for ( int n = 2; n <= 8; ++n )
  {
    for ( const auto& g : enumerate_csg_t2( n ) )
    {
      ASSERT_EQ( is_weighted( g ).weighted, is_weighted_quota_free( g ) );
    }
  }
}
