#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "representation.hpp"

namespace wvg {

/// Explicit simple game on n <= 24 voters. Bit v of a coalition mask is voter v (0-based).
class truth_table_game
{
public:
  static constexpr int max_voters = 24;

  truth_table_game( int n, std::vector<bool> winning ) : n_( n ), winning_( std::move( winning ) )
  {
    if ( n < 1 || n > max_voters )
    {
      throw precondition_error( "truth tables support 1.." + std::to_string( max_voters ) + " voters, got " +
                                std::to_string( n ) );
    }
    if ( winning_.size() != ( std::size_t{ 1 } << n ) )
    {
      throw precondition_error( "truth table must have 2^n entries" );
    }
    if ( winning_.front() || !winning_.back() )
    {
      throw precondition_error( "a simple game needs a losing empty coalition and a winning grand coalition" );
    }
    for ( std::uint32_t u = 0; u < winning_.size(); ++u )
    {
      if ( !winning_[u] )
      {
        continue;
      }
      for ( int v = 0; v < n; ++v )
      {
        if ( !( u >> v & 1u ) && !winning_[u | ( 1u << v )] )
        {
          throw precondition_error( "truth table is not monotone" );
        }
      }
    }
  }

  int voters() const noexcept { return n_; }
  bool operator()( std::uint32_t coalition ) const { return winning_[coalition]; }

private:
  int n_;
  std::vector<bool> winning_;
};

inline truth_table_game truth_table( const integer_representation& rep )
{
  check_representation( rep );
  const int n = static_cast<int>( rep.weights.size() );
  if ( n > truth_table_game::max_voters )
  {
    throw precondition_error( "truth tables support at most " + std::to_string( truth_table_game::max_voters ) +
                              " voters" );
  }
  std::vector<bool> winning( std::size_t{ 1 } << n );
  std::vector<weight_t> sum( winning.size(), 0 );
  for ( std::size_t u = 1; u < winning.size(); ++u )
  {
    const int low = std::countr_zero( u );
    sum[u] = sum[u & ( u - 1 )] + rep.weights[static_cast<std::size_t>( low )];
    winning[u] = sum[u] >= rep.quota;
  }
  return truth_table_game( n, std::move( winning ) );
}

enum class desirability_relation
{
  i_stronger,
  j_stronger,
  equivalent,
  incomparable
};

/// Isbell's relation between voters i and j (0-based).
inline desirability_relation desirability( const truth_table_game& game, int i, int j )
{
  const int n = game.voters();
  if ( i == j || i < 0 || j < 0 || i >= n || j >= n )
  {
    throw precondition_error( "desirability needs two distinct voters in 0.." + std::to_string( n - 1 ) );
  }
  const std::uint32_t bi = 1u << i, bj = 1u << j;
  bool i_ge_j = true, j_ge_i = true;
  const std::uint32_t limit = 1u << n;
  for ( std::uint32_t rest = 0; rest < limit && ( i_ge_j || j_ge_i ); ++rest )
  {
    if ( rest & ( bi | bj ) )
    {
      continue;
    }
    const bool with_i = game( rest | bi ), with_j = game( rest | bj );
    i_ge_j = i_ge_j && with_i >= with_j;
    j_ge_i = j_ge_i && with_j >= with_i;
  }
  if ( i_ge_j && j_ge_i )
  {
    return desirability_relation::equivalent;
  }
  if ( i_ge_j )
  {
    return desirability_relation::i_stronger;
  }
  if ( j_ge_i )
  {
    return desirability_relation::j_stronger;
  }
  return desirability_relation::incomparable;
}

inline bool is_complete( const truth_table_game& game )
{
  for ( int i = 0; i < game.voters(); ++i )
  {
    for ( int j = i + 1; j < game.voters(); ++j )
    {
      if ( desirability( game, i, j ) == desirability_relation::incomparable )
      {
        return false;
      }
    }
  }
  return true;
}

/// Equivalence classes N_1, ..., N_t of voter indices (0-based), strongest class first.
struct type_partition
{
  std::vector<std::vector<int>> classes;

  class_sizes sizes() const
  {
    std::vector<int> counts;
    for ( const auto& c : classes )
    {
      counts.push_back( static_cast<int>( c.size() ) );
    }
    return class_sizes( std::move( counts ) );
  }

  friend bool operator==( const type_partition&, const type_partition& ) = default;
};

struct canonical_form
{
  complete_game game;
  type_partition partition;
};

namespace detail {

/// Builds the canonical form from a partition and a per-coalition oracle. Members of each
/// class are equivalent, so a profile is evaluated on the coalition made of the first m_i
/// members of class i.
template <typename Oracle>
canonical_form canonical_from_partition( type_partition partition, Oracle&& coalition_wins )
{
  const auto sizes = partition.sizes();
  auto table = tabulate( sizes, [&]( const coalition_profile& p ) {
    std::vector<int> members;
    for ( std::size_t i = 0; i < p.size(); ++i )
    {
      members.insert( members.end(), partition.classes[i].begin(), partition.classes[i].begin() + p[i] );
    }
    return coalition_wins( members );
  } );
  auto winners = shift_minimal_winning( sizes, table );
  return canonical_form{ validate_complete_game( sizes, winners ), std::move( partition ) };
}

} // namespace detail

/// Canonical (ñ, M) of a complete game given by its truth table. Voters are ranked by the
/// number of winning coalitions containing them, which orders voters of a complete game
/// consistently with desirability; equal counts mean equivalence.
inline canonical_form canonicalize_truth_table( const truth_table_game& game )
{
  if ( !is_complete( game ) )
  {
    throw precondition_error( "game is not complete: some voters are incomparable under desirability" );
  }
  const int n = game.voters();
  std::vector<std::uint64_t> count( static_cast<std::size_t>( n ), 0 );
  const std::uint32_t limit = 1u << n;
  for ( std::uint32_t u = 0; u < limit; ++u )
  {
    if ( !game( u ) )
    {
      continue;
    }
    for ( int v = 0; v < n; ++v )
    {
      count[static_cast<std::size_t>( v )] += u >> v & 1u;
    }
  }
  std::vector<int> order( static_cast<std::size_t>( n ) );
  std::iota( order.begin(), order.end(), 0 );
  std::stable_sort( order.begin(), order.end(), [&]( int a, int b ) {
    return count[static_cast<std::size_t>( a )] > count[static_cast<std::size_t>( b )];
  } );
  type_partition partition;
  for ( std::size_t k = 0; k < order.size(); ++k )
  {
    if ( k == 0 || count[static_cast<std::size_t>( order[k] )] != count[static_cast<std::size_t>( order[k - 1] )] )
    {
      partition.classes.emplace_back();
    }
    partition.classes.back().push_back( order[k] );
  }
  return detail::canonical_from_partition( std::move( partition ), [&]( const std::vector<int>& members ) {
    std::uint32_t u = 0;
    for ( int v : members )
    {
      u |= 1u << v;
    }
    return game( u );
  } );
}

/// Canonical (ñ, M) of a weighted game. Voters are grouped by equal weight, then adjacent
/// groups are merged while the lighter group can replace a member of the heavier one in every
/// winning profile without the coalition losing. Works on the profile space of the groups, so
/// no 2^n truth table is built.
inline canonical_form canonicalize( const integer_representation& rep )
{
  check_representation( rep );
  std::vector<int> order( rep.weights.size() );
  std::iota( order.begin(), order.end(), 0 );
  std::stable_sort( order.begin(), order.end(), [&]( int a, int b ) {
    return rep.weights[static_cast<std::size_t>( a )] > rep.weights[static_cast<std::size_t>( b )];
  } );
  const auto weight_of = [&]( int v ) { return rep.weights[static_cast<std::size_t>( v )]; };
  const auto wins = [&]( const std::vector<int>& members ) {
    weight_t s = 0;
    for ( int v : members )
    {
      s += weight_of( v );
    }
    return s >= rep.quota;
  };

  type_partition partition;
  for ( std::size_t k = 0; k < order.size(); ++k )
  {
    if ( k == 0 || weight_of( order[k] ) != weight_of( order[k - 1] ) )
    {
      partition.classes.emplace_back();
    }
    partition.classes.back().push_back( order[k] );
  }

  // Groups are internally equivalent at every stage, so profiles are well defined.
  bool merged = true;
  while ( merged && partition.classes.size() > 1 )
  {
    merged = false;
    const auto sizes = partition.sizes();
    profile_space space( sizes );
    const auto profile_wins = [&]( const coalition_profile& p ) {
      weight_t s = 0;
      for ( std::size_t i = 0; i < p.size(); ++i )
      {
        for ( int k = 0; k < p[i]; ++k )
        {
          s += weight_of( partition.classes[i][static_cast<std::size_t>( k )] );
        }
      }
      return s >= rep.quota;
    };
    auto table = tabulate( sizes, profile_wins );
    for ( std::size_t g = 0; g + 1 < partition.classes.size(); ++g )
    {
      bool equivalent = true;
      for ( std::size_t k = 0; k < space.size() && equivalent; ++k )
      {
        if ( !table[k] )
        {
          continue;
        }
        auto p = space.at( k );
        if ( p[g] == 0 || p[g + 1] == sizes[g + 1] )
        {
          continue;
        }
        --p[g];
        ++p[g + 1];
        equivalent = table[space.index_of( p )] != 0;
      }
      if ( equivalent )
      {
        auto& into = partition.classes[g];
        auto& from = partition.classes[g + 1];
        into.insert( into.end(), from.begin(), from.end() );
        partition.classes.erase( partition.classes.begin() + static_cast<std::ptrdiff_t>( g + 1 ) );
        merged = true;
        break;
      }
    }
  }
  return detail::canonical_from_partition( std::move( partition ), wins );
}

/// Canonical form of the typed representation with the given class sizes.
inline canonical_form canonicalize( const typed_representation& rep, const class_sizes& sizes )
{
  if ( rep.class_weights.size() != sizes.types() )
  {
    throw precondition_error( "typed representation has " + std::to_string( rep.class_weights.size() ) +
                              " weights for " + std::to_string( sizes.types() ) + " classes" );
  }
  return canonicalize( expand( rep, sizes ) );
}

} // namespace wvg
