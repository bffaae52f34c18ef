#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "weightedness.hpp"

namespace wvg {

/// Unit of parallel work: all games on sizes (n1, n - n1) whose first row is `first`, or every
/// single-row game on those sizes when `first` is empty.
struct enumeration_shard
{
  int n1 = 0;
  int n2 = 0;
  std::optional<coalition_profile> first;
};

inline std::vector<enumeration_shard> enumeration_shards( int n )
{
  if ( n < 2 )
  {
    throw precondition_error( "two-type enumeration needs n >= 2" );
  }
  std::vector<enumeration_shard> out;
  for ( int n1 = 1; n1 < n; ++n1 )
  {
    const int n2 = n - n1;
    out.push_back( { n1, n2, std::nullopt } );
    for ( int a = 1; a <= n1; ++a )
    {
      for ( int b = 0; b <= n2; ++b )
      {
        out.push_back( { n1, n2, coalition_profile{ a, b } } );
      }
    }
  }
  return out;
}

/// Visits the games of one shard. Single-row games follow the compact description
/// 1 <= m_1 <= n_1, 0 <= m_2 <= n_2 - 1. Longer matrices have strictly decreasing first entries
/// and strictly increasing row sums; each candidate is passed through validate_complete_game.
inline void for_each_game_in_shard( const enumeration_shard& shard, const std::function<void( const complete_game& )>& visit )
{
  const class_sizes sizes{ shard.n1, shard.n2 };
  if ( !shard.first )
  {
    for ( int a = 1; a <= shard.n1; ++a )
    {
      for ( int b = 0; b < shard.n2; ++b )
      {
        visit( validate_complete_game( sizes, { coalition_profile{ a, b } } ) );
      }
    }
    return;
  }
  std::vector<coalition_profile> rows{ *shard.first };
  std::function<void()> extend = [&] {
    const coalition_profile last = rows.back();
    for ( int a = last[0] - 1; a >= 0; --a )
    {
      for ( int b = std::max( 0, last.total() + 1 - a ); b <= shard.n2; ++b )
      {
        rows.push_back( coalition_profile{ a, b } );
        try
        {
          visit( validate_complete_game( sizes, rows ) );
        }
        catch ( const invalid_game_error& )
        {
        }
        extend();
        rows.pop_back();
      }
    }
  };
  extend();
}

namespace detail {

/// Runs `work(shard_index)` over all shards on `threads` workers.
inline void run_sharded( std::size_t shards, unsigned threads, const std::function<void( std::size_t )>& work )
{
  std::atomic<std::size_t> cursor{ 0 };
  auto worker = [&] {
    for ( std::size_t i = cursor++; i < shards; i = cursor++ )
    {
      work( i );
    }
  };
  std::vector<std::jthread> pool;
  for ( unsigned k = 0; k < std::max( 1u, threads ); ++k )
  {
    pool.emplace_back( worker );
  }
}

} // namespace detail

/// Every complete simple game with n voters and exactly two types, each once, in shard order.
inline std::vector<complete_game> enumerate_csg_t2( int n )
{
  std::vector<complete_game> out;
  for ( const auto& shard : enumeration_shards( n ) )
  {
    for_each_game_in_shard( shard, [&]( const complete_game& g ) { out.push_back( g ); } );
  }
  return out;
}

/// Fib(n + 6) - (n^2 + 4n + 8) with Fib(1) = Fib(2) = 1.
inline big_integer fibonacci_csg_formula( int n )
{
  if ( n < 2 )
  {
    throw precondition_error( "formula needs n >= 2" );
  }
  big_integer f0 = 0, f1 = 1;
  for ( int k = 1; k < n + 6; ++k )
  {
    big_integer next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  return f1 - ( big_integer( n ) * n + 4 * n + 8 );
}

/// wm(n, 2, 1): n - 1 for n <= 2, 2(n-2)^2 + 2 otherwise.
inline std::int64_t single_row_weighted_formula( int n )
{
  if ( n < 1 )
  {
    throw precondition_error( "formula needs n >= 1" );
  }
  return n <= 2 ? n - 1 : 2 * std::int64_t( n - 2 ) * ( n - 2 ) + 2;
}

/// n^5 / 15 + 4 n^4.
inline rational wm_t2_bound( int n )
{
  const rational x = n;
  return x * x * x * x * x / 15 + 4 * x * x * x * x;
}

/// The exact sum from which the n^5/15 + 4n^4 bound is derived:
/// 2(n-2)^2 + 2 + 2 Σ_{n1=1}^{n-1} (n-n1)^2 (n1+1) n1.
inline big_integer wm_t2_counting_sum( int n )
{
  big_integer s = single_row_weighted_formula( n );
  for ( int n1 = 1; n1 < n; ++n1 )
  {
    s += big_integer( 2 ) * ( n - n1 ) * ( n - n1 ) * ( n1 + 1 ) * n1;
  }
  return s;
}

/// (tn)^(t^3 + 2t^2).
inline big_integer wm_general_bound( int n, int t )
{
  big_integer out;
  mpz_ui_pow_ui( out.get_mpz_t(), static_cast<unsigned long>( t ) * static_cast<unsigned long>( n ),
                 static_cast<unsigned long>( t * t * t + 2 * t * t ) );
  return out;
}

struct census_row
{
  int n = 0;
  int t = 2;
  std::optional<std::size_t> r;
  std::uint64_t csg_count = 0;
  std::uint64_t wvg_count = 0;
};

struct census_options
{
  unsigned threads = 1;
  /// Largest n for which the weighted count (one LP per game) is attempted.
  int max_n = 10;
};

/// Number of complete games with two types, generated shard by shard.
inline std::uint64_t count_csg_t2( int n, std::optional<std::size_t> r = std::nullopt, unsigned threads = 1 )
{
  const auto shards = enumeration_shards( n );
  std::vector<std::uint64_t> counts( shards.size(), 0 );
  detail::run_sharded( shards.size(), threads, [&]( std::size_t i ) {
    for_each_game_in_shard( shards[i], [&]( const complete_game& g ) {
      if ( !r || g.winners().size() == *r )
      {
        ++counts[i];
      }
    } );
  } );
  std::uint64_t total = 0;
  for ( auto c : counts )
  {
    total += c;
  }
  return total;
}

/// Counts complete and weighted games with n voters and two types, optionally only those with
/// r shift-minimal winning rows.
inline census_row count_wvg_t2( int n, std::optional<std::size_t> r = std::nullopt, const census_options& opts = {} )
{
  if ( n > opts.max_n )
  {
    throw precondition_error( "weighted census is capped at n = " + std::to_string( opts.max_n ) );
  }
  const auto shards = enumeration_shards( n );
  std::vector<std::uint64_t> complete( shards.size(), 0 ), weighted( shards.size(), 0 );
  detail::run_sharded( shards.size(), opts.threads, [&]( std::size_t i ) {
    for_each_game_in_shard( shards[i], [&]( const complete_game& g ) {
      if ( r && g.winners().size() != *r )
      {
        return;
      }
      ++complete[i];
      if ( is_weighted( g ).weighted )
      {
        ++weighted[i];
      }
    } );
  } );
  census_row row;
  row.n = n;
  row.r = r;
  for ( std::size_t i = 0; i < shards.size(); ++i )
  {
    row.csg_count += complete[i];
    row.wvg_count += weighted[i];
  }
  return row;
}

} // namespace wvg
