#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "profile.hpp"

namespace wvg {

/// Raised when a (sizes, matrix) pair violates one of the four parameterization properties.
/// `property` is 1..4; `row`/`other_row`/`column` are 0-based, -1 when not applicable.
struct invalid_game_error : precondition_error
{
  invalid_game_error( int property, int row, int other_row, int column, const std::string& what )
      : precondition_error( what ), property( property ), row( row ), other_row( other_row ), column( column )
  {
  }

  int property;
  int row;
  int other_row;
  int column;
};

class complete_game;
complete_game validate_complete_game( const class_sizes& sizes, const std::vector<coalition_profile>& winners );

/// A complete simple game in canonical form: class sizes plus the shift-minimal winning
/// profiles in strictly decreasing lexicographic order. Only obtainable through
/// validate_complete_game, so every instance satisfies properties (i)-(iv).
class complete_game
{
public:
  const class_sizes& sizes() const noexcept { return sizes_; }
  const std::vector<coalition_profile>& winners() const noexcept { return winners_; }
  std::size_t types() const noexcept { return sizes_.types(); }
  int voters() const noexcept { return sizes_.voters(); }

  friend bool operator==( const complete_game&, const complete_game& ) = default;

private:
  friend complete_game validate_complete_game( const class_sizes&, const std::vector<coalition_profile>& );

  complete_game( class_sizes sizes, std::vector<coalition_profile> winners )
      : sizes_( std::move( sizes ) ), winners_( std::move( winners ) )
  {
  }

  class_sizes sizes_;
  std::vector<coalition_profile> winners_;
};

inline complete_game validate_complete_game( const class_sizes& sizes, const std::vector<coalition_profile>& winners )
{
  if ( winners.empty() )
  {
    throw precondition_error( "a complete game needs at least one shift-minimal winning profile" );
  }
  const auto t = sizes.types();
  for ( std::size_t i = 0; i < winners.size(); ++i )
  {
    if ( winners[i].size() != t )
    {
      throw precondition_error( "row " + std::to_string( i + 1 ) + " has dimension " +
                                std::to_string( winners[i].size() ) + ", expected " + std::to_string( t ) );
    }
  }

  // (i)
  if ( winners[0][0] <= 0 )
  {
    throw invalid_game_error( 1, 0, -1, 0, "property (i): m_{1,1} must be positive" );
  }
  for ( std::size_t i = 0; i < winners.size(); ++i )
  {
    for ( std::size_t j = 0; j < t; ++j )
    {
      if ( winners[i][j] < 0 || winners[i][j] > sizes[j] )
      {
        throw invalid_game_error( 1, static_cast<int>( i ), -1, static_cast<int>( j ),
                                  "property (i): entry (" + std::to_string( i + 1 ) + "," + std::to_string( j + 1 ) +
                                      ") = " + std::to_string( winners[i][j] ) + " outside [0, " +
                                      std::to_string( sizes[j] ) + "]" );
      }
    }
  }

  // (ii)
  for ( std::size_t i = 0; i < winners.size(); ++i )
  {
    for ( std::size_t k = i + 1; k < winners.size(); ++k )
    {
      if ( shift_compare( winners[i], winners[k] ) != shift_ordering::incomparable )
      {
        throw invalid_game_error( 2, static_cast<int>( i ), static_cast<int>( k ), -1,
                                  "property (ii): rows " + std::to_string( i + 1 ) + " " + to_string( winners[i] ) +
                                      " and " + std::to_string( k + 1 ) + " " + to_string( winners[k] ) +
                                      " are shift-comparable" );
      }
    }
  }

  // (iii)
  for ( std::size_t j = 0; j + 1 < t; ++j )
  {
    const bool separated = std::any_of( winners.begin(), winners.end(), [&]( const coalition_profile& m ) {
      return m[j] > 0 && m[j + 1] < sizes[j + 1];
    } );
    if ( !separated )
    {
      throw invalid_game_error( 3, -1, -1, static_cast<int>( j ),
                                "property (iii): no row separates classes " + std::to_string( j + 1 ) + " and " +
                                    std::to_string( j + 2 ) );
    }
  }

  // (iv)
  for ( std::size_t i = 0; i + 1 < winners.size(); ++i )
  {
    if ( !( winners[i] > winners[i + 1] ) )
    {
      throw invalid_game_error( 4, static_cast<int>( i ), static_cast<int>( i + 1 ), -1,
                                "property (iv): rows " + std::to_string( i + 1 ) + " and " + std::to_string( i + 2 ) +
                                    " are not in strictly decreasing lexicographic order" );
    }
  }

  return complete_game( sizes, winners );
}

inline bool is_winning( const complete_game& game, const coalition_profile& p )
{
  if ( p.size() != game.types() )
  {
    throw precondition_error( "is_winning: profile " + to_string( p ) + " has wrong dimension" );
  }
  return std::any_of( game.winners().begin(), game.winners().end(),
                      [&]( const coalition_profile& m ) { return shift_dominates( p, m ); } );
}

namespace detail {

template <typename Fn>
void for_each_lower_neighbor( const class_sizes& sizes, coalition_profile p, Fn&& fn )
{
  const auto t = sizes.types();
  for ( std::size_t i = 0; i < t; ++i )
  {
    if ( p[i] == 0 )
    {
      continue;
    }
    --p[i];
    fn( p );
    if ( i + 1 < t && p[i + 1] < sizes[i + 1] )
    {
      ++p[i + 1];
      fn( p );
      --p[i + 1];
    }
    ++p[i];
  }
}

template <typename Fn>
void for_each_upper_neighbor( const class_sizes& sizes, coalition_profile p, Fn&& fn )
{
  const auto t = sizes.types();
  for ( std::size_t i = 0; i < t; ++i )
  {
    if ( p[i] == sizes[i] )
    {
      continue;
    }
    ++p[i];
    fn( p );
    if ( i + 1 < t && p[i + 1] > 0 )
    {
      --p[i + 1];
      fn( p );
      ++p[i + 1];
    }
    --p[i];
  }
}

} // namespace detail

/// Evaluates `winning` on every profile; entries are indexed by profile_space.
inline std::vector<char> tabulate( const class_sizes& sizes, const std::function<bool( const coalition_profile& )>& winning )
{
  profile_space space( sizes );
  std::vector<char> table( space.size() );
  for ( std::size_t k = 0; k < space.size(); ++k )
  {
    table[k] = winning( space.at( k ) ) ? 1 : 0;
  }
  return table;
}

/// Shift-minimal winning profiles of a tabulated shift-monotone game, decreasing lex order.
inline std::vector<coalition_profile> shift_minimal_winning( const class_sizes& sizes, const std::vector<char>& table )
{
  profile_space space( sizes );
  std::vector<coalition_profile> result;
  for ( std::size_t k = space.size(); k-- > 0; )
  {
    if ( !table[k] )
    {
      continue;
    }
    bool minimal = true;
    detail::for_each_lower_neighbor( sizes, space.at( k ), [&]( const coalition_profile& q ) {
      minimal = minimal && !table[space.index_of( q )];
    } );
    if ( minimal )
    {
      result.push_back( space.at( k ) );
    }
  }
  return result;
}

inline std::vector<coalition_profile> shift_maximal_losing( const class_sizes& sizes, const std::vector<char>& table )
{
  profile_space space( sizes );
  std::vector<coalition_profile> result;
  for ( std::size_t k = space.size(); k-- > 0; )
  {
    if ( table[k] )
    {
      continue;
    }
    bool maximal = true;
    detail::for_each_upper_neighbor( sizes, space.at( k ), [&]( const coalition_profile& q ) {
      maximal = maximal && table[space.index_of( q )];
    } );
    if ( maximal )
    {
      result.push_back( space.at( k ) );
    }
  }
  return result;
}

inline std::vector<char> winning_table( const complete_game& game )
{
  return tabulate( game.sizes(), [&]( const coalition_profile& p ) { return is_winning( game, p ); } );
}

/// The shift-maximal losing profiles L^s, strictly decreasing lexicographically.
inline std::vector<coalition_profile> shift_maximal_losing( const complete_game& game )
{
  auto losing = shift_maximal_losing( game.sizes(), winning_table( game ) );
  if ( game.types() == 2 && losing.size() > game.winners().size() + 1 )
  {
    throw consistency_error( "t = 2 game with |L^s| = " + std::to_string( losing.size() ) + " > |W^s| + 1" );
  }
  return losing;
}

inline bool isomorphic( const complete_game& a, const complete_game& b )
{
  return a.sizes() == b.sizes() && a.winners() == b.winners();
}

inline complete_game one_type_game( int n, int k )
{
  return validate_complete_game( class_sizes{ n }, { coalition_profile{ k } } );
}

} // namespace wvg
