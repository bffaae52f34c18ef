#include <gtest/gtest.h>

#include <functional>

#include <wvg/minrep2.hpp>
#include <wvg/oracle.hpp>

using namespace wvg;

namespace {

// Every complete two-type game on (n1, n2): rows listed with strictly decreasing first entry and
// strictly increasing size form an antichain; validation filters the rest.
std::vector<complete_game> all_two_type_games( int n1, int n2 )
{
  std::vector<complete_game> out;
  std::vector<coalition_profile> rows;
  std::function<void( int, int )> rec = [&]( int max_a, int min_size ) {
    if ( !rows.empty() )
    {
      try
      {
        out.push_back( validate_complete_game( class_sizes{ n1, n2 }, rows ) );
      }
      catch ( const invalid_game_error& )
      {
      }
    }
    for ( int a = max_a; a >= 0; --a )
    {
      for ( int b = 0; b <= n2; ++b )
      {
        if ( a + b < min_size || a + b == 0 )
        {
          continue;
        }
        rows.push_back( coalition_profile{ a, b } );
        rec( a - 1, a + b + 1 );
        rows.pop_back();
      }
    }
  };
  rec( n1, 0 );
  return out;
}

complete_game game_of( const class_sizes& sizes, const typed_representation& rep )
{
  return validate_complete_game(
      sizes, shift_minimal_winning( sizes, tabulate( sizes, [&]( const coalition_profile& p ) {
                                      return profile_weight( rep.class_weights, p ) >= rep.quota;
                                    } ) ) );
}

} // namespace

TEST( MinRep2, ThresholdGame )
{
  EXPECT_EQ( min_rep_t1( 5, 3 ), ( typed_representation{ 3, { 1 } } ) );
  EXPECT_THROW( min_rep_t1( 3, 4 ), precondition_error );
}

TEST( MinRep2, SingleRowExamples )
{
  EXPECT_EQ( min_rep_t2_r1( 2, 3, 1, 1 ), ( typed_representation{ 4, { 3, 1 } } ) );
  EXPECT_THROW( min_rep_t2_r1( 2, 4, 1, 2 ), not_weighted_error );
  EXPECT_THROW( min_rep_t2_r1( 2, 3, 3, 0 ), invalid_game_error );
  const auto g = validate_complete_game( class_sizes{ 2, 3 }, { coalition_profile{ 2, 2 } } );
  EXPECT_EQ( min_rep_t2( g ).typed, ( typed_representation{ 6, { 2, 1 } } ) );
}

TEST( MinRep2, SingleRowFormulasAgreeWithOracle )
{
  for ( int n1 = 1; n1 <= 7; ++n1 )
  {
    for ( int n2 = 1; n2 <= 7; ++n2 )
    {
      for ( int m1 = 0; m1 <= n1; ++m1 )
      {
        for ( int m2 = 0; m2 <= n2; ++m2 )
        {
          std::optional<complete_game> g;
          try
          {
            g = validate_complete_game( class_sizes{ n1, n2 }, { coalition_profile{ m1, m2 } } );
          }
          catch ( const invalid_game_error& )
          {
            continue;
          }
          SCOPED_TRACE( "n=(" + std::to_string( n1 ) + "," + std::to_string( n2 ) + ") m=(" + std::to_string( m1 ) +
                        "," + std::to_string( m2 ) + ")" );
          if ( !is_weighted( *g ).weighted )
          {
            EXPECT_THROW( min_rep_t2_r1( n1, n2, m1, m2 ), not_weighted_error );
            continue;
          }
          const auto rep = min_rep_t2_r1( n1, n2, m1, m2 );
          const auto oracle = min_typed( *g );
          ASSERT_TRUE( oracle.minimum.has_value() );
          EXPECT_EQ( rep, *oracle.minimum );
          EXPECT_TRUE( within_main_bounds( g->sizes(), rep ) );
        }
      }
    }
  }
}

TEST( MinRep2, TwoRowExamples )
{
  const auto a = validate_complete_game( class_sizes{ 1, 3 }, { coalition_profile{ 1, 1 }, coalition_profile{ 0, 3 } } );
  EXPECT_EQ( min_rep_t2( a ).typed, ( typed_representation{ 3, { 2, 1 } } ) );
  EXPECT_EQ( min_rep_t2( a ).per_voter, ( integer_representation{ 3, { 2, 1, 1, 1 } } ) );

  const class_sizes sizes{ 4, 8 };
  const auto b = game_of( sizes, { 24, { 7, 3 } } );
  EXPECT_EQ( b.winners().size(), 4u );
  EXPECT_EQ( min_rep_t2( b ).typed, ( typed_representation{ 24, { 7, 3 } } ) );
}

TEST( MinRep2, NullVotersStripped )
{
  const auto g = validate_complete_game( class_sizes{ 4, 3 }, { coalition_profile{ 2, 0 } } );
  const auto s = strip_null_voters( g );
  EXPECT_EQ( s.null_voters, 3 );
  EXPECT_EQ( s.game.types(), 1u );
  EXPECT_EQ( min_rep_t2( g ).typed, ( typed_representation{ 2, { 1, 0 } } ) );
  const auto h = validate_complete_game( class_sizes{ 2, 3 }, { coalition_profile{ 1, 1 } } );
  EXPECT_EQ( strip_null_voters( h ).null_voters, 0 );
}

TEST( MinRep2, EuclidPair )
{
  for ( std::int64_t a = 1; a <= 30; ++a )
  {
    for ( std::int64_t b = 1; b <= 30; ++b )
    {
      if ( std::gcd( a, b ) != 1 )
      {
        continue;
      }
      const auto [u, v] = detail::euclid_pair( a, b );
      EXPECT_EQ( u * b - v * a, 1 );
      EXPECT_GT( u, 0 );
      EXPECT_LE( u, a );
      EXPECT_GE( v, 0 );
      EXPECT_LT( v, b );
    }
  }
}

TEST( MinRep2, RejectsOtherTypeCounts )
{
  EXPECT_THROW( min_rep_t2( one_type_game( 3, 2 ) ), precondition_error );
}

// Every complete two-type game with at most 9 voters: the algorithm agrees with the exact integer
// program and with a box scan, stays within the bounds, and admissible triples have Q = 1.
TEST( MinRep2, ExhaustiveSweepUpToNineVoters )
{
  std::size_t weighted = 0, unweighted = 0;
  for ( int n1 = 1; n1 <= 8; ++n1 )
  {
    for ( int n2 = 1; n1 + n2 <= 9; ++n2 )
    {
      for ( const auto& g : all_two_type_games( n1, n2 ) )
      {
        SCOPED_TRACE( "sizes (" + std::to_string( n1 ) + "," + std::to_string( n2 ) + "), r = " +
                      std::to_string( g.winners().size() ) );
        if ( !is_weighted( g ).weighted )
        {
          ++unweighted;
          EXPECT_THROW( min_rep_t2( g ), not_weighted_error );
          continue;
        }
        ++weighted;
        const auto rep = min_rep_t2( g );
        const auto oracle = min_typed( g );
        ASSERT_TRUE( oracle.minimum.has_value() );
        EXPECT_EQ( rep.typed, *oracle.minimum );
        const auto box = box_search_t2( g, n1 + n2 + 2, n1 + n2 + 2 );
        ASSERT_TRUE( box.minimum.has_value() );
        EXPECT_EQ( rep.typed, *box.minimum );
        EXPECT_TRUE( within_main_bounds( g.sizes(), rep.typed ) );
        if ( g.winners().size() >= 2 )
        {
          EXPECT_TRUE( within_sharpened_bounds( g.sizes(), rep.typed ) ) << to_string( rep.typed );
          for ( const auto& c : tight_triple_candidates( g, shift_maximal_losing( g ) ) )
          {
            if ( c.admissible )
            {
              EXPECT_EQ( c.determinant, 1 );
            }
          }
        }
        if ( n1 + n2 <= 6 )
        {
          const auto pv = min_per_voter( g );
          ASSERT_TRUE( pv.has_minimum );
          EXPECT_EQ( rep.per_voter, pv.minimum );
        }
      }
    }
  }
  EXPECT_GT( weighted, 0u );
  EXPECT_GT( unweighted, 0u );
}
