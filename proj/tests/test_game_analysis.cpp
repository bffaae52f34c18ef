#include <gtest/gtest.h>

#include <random>

#include <wvg/game_analysis.hpp>

using namespace wvg;

namespace {

truth_table_game from_minimal_winning( int n, const std::vector<std::uint32_t>& minimal )
{
  std::vector<bool> winning( std::size_t{ 1 } << n );
  for ( std::uint32_t u = 0; u < winning.size(); ++u )
  {
    for ( auto m : minimal )
    {
      winning[u] = winning[u] || ( u & m ) == m;
    }
  }
  return truth_table_game( n, std::move( winning ) );
}

// Independent brute force: desirability straight from the definition, quantifying over U containing j.
bool at_least_as_desirable( const truth_table_game& g, int i, int j )
{
  for ( std::uint32_t u = 0; u < ( 1u << g.voters() ); ++u )
  {
    if ( ( u >> j & 1u ) && !( u >> i & 1u ) )
    {
      if ( g( u ) && !g( ( u & ~( 1u << j ) ) | ( 1u << i ) ) )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace

TEST( Desirability, SmallWeightedGame )
{
  const auto g = truth_table( { 4, { 3, 2, 1, 1 } } );
  EXPECT_EQ( desirability( g, 2, 3 ), desirability_relation::equivalent );
  EXPECT_EQ( desirability( g, 0, 1 ), desirability_relation::i_stronger );
  EXPECT_EQ( desirability( g, 1, 0 ), desirability_relation::j_stronger );
  EXPECT_EQ( desirability( g, 1, 2 ), desirability_relation::equivalent );
  EXPECT_THROW( desirability( g, 1, 1 ), precondition_error );
  EXPECT_THROW( desirability( g, 0, 4 ), precondition_error );
}

TEST( Desirability, MatchesDefinition )
{
  std::mt19937 rng( 3 );
  std::uniform_int_distribution<weight_t> wd( 0, 6 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    integer_representation rep{ 0, std::vector<weight_t>( 6 ) };
    for ( auto& w : rep.weights )
    {
      w = wd( rng );
    }
    rep.quota = std::max<weight_t>( 1, rep.total() / 2 );
    const auto g = truth_table( rep );
    for ( int i = 0; i < 6; ++i )
    {
      for ( int j = 0; j < 6; ++j )
      {
        if ( i == j )
        {
          continue;
        }
        const bool ij = at_least_as_desirable( g, i, j ), ji = at_least_as_desirable( g, j, i );
        const auto rel = desirability( g, i, j );
        EXPECT_EQ( rel == desirability_relation::i_stronger || rel == desirability_relation::equivalent, ij );
        EXPECT_EQ( rel == desirability_relation::j_stronger || rel == desirability_relation::equivalent, ji );
      }
    }
  }
}

TEST( Desirability, Symmetric )
{
  const auto g = truth_table( { 2, { 1, 1, 1 } } );
  EXPECT_EQ( desirability( g, 0, 2 ), desirability_relation::equivalent );
}

TEST( Complete, Examples )
{
  EXPECT_TRUE( is_complete( truth_table( { 12, { 7, 6, 6, 4, 4, 4, 3, 2 } } ) ) );
  EXPECT_FALSE( is_complete( from_minimal_winning( 4, { 0b0011, 0b1100 } ) ) );
  EXPECT_TRUE( is_complete( truth_table_game( 1, { false, true } ) ) );
}

TEST( TruthTable, RejectsBadInput )
{
  EXPECT_THROW( truth_table_game( 2, { true, true, true, true } ), precondition_error );
  EXPECT_THROW( truth_table_game( 2, { false, true, false, false } ), precondition_error );
  EXPECT_THROW( truth_table_game( 2, { false, true } ), precondition_error );
  EXPECT_THROW( truth_table_game( 25, {} ), precondition_error );
  EXPECT_THROW( canonicalize_truth_table( from_minimal_winning( 4, { 0b0011, 0b1100 } ) ), precondition_error );
}

TEST( Canonicalize, SmallWeightedGame )
{
  const auto c = canonicalize( integer_representation{ 4, { 3, 2, 1, 1 } } );
  EXPECT_EQ( c.game.sizes(), ( class_sizes{ 1, 3 } ) );
  EXPECT_EQ( c.game.winners(), ( std::vector<coalition_profile>{ { 1, 1 }, { 0, 3 } } ) );
  EXPECT_EQ( shift_maximal_losing( c.game ), ( std::vector<coalition_profile>{ { 1, 0 }, { 0, 2 } } ) );
  EXPECT_EQ( c.partition.classes, ( std::vector<std::vector<int>>{ { 0 }, { 1, 2, 3 } } ) );
}

TEST( Canonicalize, EquivalentRepresentations )
{
  const auto ref = canonicalize( integer_representation{ 4, { 3, 2, 1, 1 } } ).game;
  EXPECT_TRUE( isomorphic( canonicalize( integer_representation{ 3, { 2, 1, 1, 1 } } ).game, ref ) );
  EXPECT_TRUE( isomorphic( canonicalize( integer_representation{ 11, { 9, 5, 5, 4 } } ).game, ref ) );
}

TEST( Canonicalize, UnequalWeightsCanBeEquivalent )
{
  const integer_representation rep{ 12, { 7, 6, 6, 4, 4, 4, 3, 2 } };
  const auto c = canonicalize( rep );
  ASSERT_EQ( c.game.types(), 4u );
  EXPECT_EQ( c.partition.classes.back(), ( std::vector<int>{ 6, 7 } ) );
  const auto via_table = canonicalize_truth_table( truth_table( rep ) );
  EXPECT_TRUE( isomorphic( c.game, via_table.game ) );
}

TEST( Canonicalize, Symmetric )
{
  const auto c = canonicalize( integer_representation{ 2, { 1, 1, 1 } } );
  EXPECT_EQ( c.game.sizes(), ( class_sizes{ 3 } ) );
  EXPECT_EQ( c.game.winners(), ( std::vector<coalition_profile>{ { 2 } } ) );
}

TEST( Canonicalize, TruthTableExamples )
{
  const auto c = canonicalize_truth_table( truth_table( { 6, { 2, 2, 1, 1, 1 } } ) );
  EXPECT_EQ( c.game.sizes(), ( class_sizes{ 2, 3 } ) );
  EXPECT_EQ( c.game.winners(), ( std::vector<coalition_profile>{ { 2, 2 } } ) );
  const auto k = canonicalize_truth_table( truth_table( { 3, { 1, 1, 1, 1, 1 } } ) );
  EXPECT_EQ( k.game.sizes(), ( class_sizes{ 5 } ) );
  EXPECT_EQ( k.game.winners(), ( std::vector<coalition_profile>{ { 3 } } ) );
}

TEST( Canonicalize, AgreesWithTruthTableOnRandomGames )
{
  std::mt19937 rng( 5 );
  std::uniform_int_distribution<int> nd( 1, 10 );
  std::uniform_int_distribution<weight_t> wd( 0, 9 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const int n = nd( rng );
    integer_representation rep{ 0, std::vector<weight_t>( static_cast<std::size_t>( n ) ) };
    for ( auto& w : rep.weights )
    {
      w = wd( rng );
    }
    if ( rep.total() == 0 )
    {
      continue;
    }
    rep.quota = std::uniform_int_distribution<weight_t>( 1, rep.total() )( rng );
    const auto direct = canonicalize( rep );
    const auto tt = truth_table( rep );
    const auto via_table = canonicalize_truth_table( tt );
    EXPECT_TRUE( isomorphic( direct.game, via_table.game ) ) << to_string( rep );
    // Class ordering agrees with desirability.
    for ( std::size_t a = 0; a < direct.partition.classes.size(); ++a )
    {
      for ( std::size_t b = a; b < direct.partition.classes.size(); ++b )
      {
        const int i = direct.partition.classes[a].front(), j = direct.partition.classes[b].back();
        if ( i == j )
        {
          continue;
        }
        EXPECT_EQ( desirability( tt, i, j ), a == b ? desirability_relation::equivalent : desirability_relation::i_stronger )
            << to_string( rep );
      }
    }
    // Round trip through validation.
    EXPECT_NO_THROW( validate_complete_game( direct.game.sizes(), direct.game.winners() ) );
  }
}

TEST( Canonicalize, TypedRepresentation )
{
  const auto c = canonicalize( typed_representation{ 24, { 7, 3 } }, class_sizes{ 4, 8 } );
  EXPECT_EQ( c.game.winners(),
             ( std::vector<coalition_profile>{ { 3, 1 }, { 2, 4 }, { 1, 6 }, { 0, 8 } } ) );
  EXPECT_EQ( shift_maximal_losing( c.game ), ( std::vector<coalition_profile>{ { 3, 0 }, { 2, 3 }, { 1, 5 }, { 0, 7 } } ) );
}
