#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "game_analysis.hpp"
#include "representation.hpp"

namespace wvg {

/// True iff k = Σ x_i d_i for non-negative integers x_i. Negative k is never representable.
inline bool representable( std::int64_t k, const std::vector<std::int64_t>& denominations )
{
  if ( k < 0 )
  {
    return false;
  }
  for ( auto d : denominations )
  {
    if ( d <= 0 )
    {
      throw precondition_error( "denominations must be positive" );
    }
  }
  std::vector<char> reach( static_cast<std::size_t>( k ) + 1, 0 );
  reach[0] = 1;
  for ( std::int64_t s = 1; s <= k; ++s )
  {
    for ( auto d : denominations )
    {
      if ( d <= s && reach[static_cast<std::size_t>( s - d )] )
      {
        reach[static_cast<std::size_t>( s )] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>( k )] != 0;
}

namespace detail {

inline void require_coprime_pair( std::int64_t a, std::int64_t b )
{
  if ( a < 1 || b < 1 )
  {
    throw precondition_error( "denominations must be positive, got " + std::to_string( a ) + ", " + std::to_string( b ) );
  }
  if ( std::gcd( a, b ) != 1 )
  {
    throw precondition_error( std::to_string( a ) + " and " + std::to_string( b ) + " are not coprime" );
  }
}

} // namespace detail

/// g(a, b) = (a-1)(b-1) - 1 for coprime a, b >= 2.
inline std::int64_t frobenius_number( std::int64_t a, std::int64_t b )
{
  detail::require_coprime_pair( a, b );
  if ( a < 2 || b < 2 )
  {
    throw precondition_error( "Frobenius number needs both denominations >= 2" );
  }
  return ( a - 1 ) * ( b - 1 ) - 1;
}

/// Pair query for coprime a, b: answered directly above the Frobenius number.
inline bool representable( std::int64_t k, std::int64_t a, std::int64_t b )
{
  detail::require_coprime_pair( a, b );
  if ( k < 0 )
  {
    return false;
  }
  if ( k > ( a - 1 ) * ( b - 1 ) - 1 )
  {
    return true;
  }
  // k = u a + v b with 0 <= v < a is unique when it exists.
  for ( std::int64_t v = 0; v < a && v * b <= k; ++v )
  {
    if ( ( k - v * b ) % a == 0 )
    {
      return true;
    }
  }
  return false;
}

/// Number of non-negative integers not representable by coprime a, b: (a-1)(b-1)/2.
inline std::int64_t count_nonrepresentable( std::int64_t a, std::int64_t b )
{
  detail::require_coprime_pair( a, b );
  return ( a - 1 ) * ( b - 1 ) / 2;
}

/// (representable(k), representable(ab - k)); exactly one holds when 1 <= k <= ab and neither
/// a nor b divides k.
inline std::pair<bool, bool> popoviciu_dual( std::int64_t k, std::int64_t a, std::int64_t b )
{
  detail::require_coprime_pair( a, b );
  if ( k < 1 || k > a * b )
  {
    throw precondition_error( "k = " + std::to_string( k ) + " outside [1, ab]" );
  }
  if ( k % a == 0 || k % b == 0 )
  {
    throw precondition_error( "k = " + std::to_string( k ) + " is divisible by a denomination" );
  }
  return { representable( k, a, b ), representable( a * b - k, a, b ) };
}

namespace detail {

inline complete_game typed_game_with_shape( const typed_representation& rep, const class_sizes& sizes, const char* what )
{
  auto form = canonicalize( rep, sizes );
  if ( form.game.sizes() != sizes )
  {
    throw precondition_error( std::string( what ) + ": classes do not stay distinct, canonical form has " +
                              std::to_string( form.game.types() ) + " types" );
  }
  return std::move( form.game );
}

} // namespace detail

/// Conditions of the three-type construction, each with its failure message.
struct t3_condition_report
{
  bool coprime = false;
  bool order = false;
  bool gap_not_representable = false;
  bool double_gap_representable = false;
  bool heavy_enough = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline t3_condition_report check_t3_conditions( std::int64_t a, std::int64_t b, std::int64_t q, std::int64_t w1 )
{
  t3_condition_report r;
  r.coprime = a >= 1 && b >= 1 && std::gcd( a, b ) == 1;
  r.order = b > a && a >= 1;
  if ( !r.coprime )
  {
    r.failures.push_back( "a and b must be coprime positive integers" );
  }
  if ( !r.order )
  {
    r.failures.push_back( "need b > a >= 1" );
  }
  if ( r.coprime )
  {
    r.gap_not_representable = !representable( q - w1, a, b );
    r.double_gap_representable = representable( q - 2 * w1 + 1, a, b );
    if ( !r.gap_not_representable )
    {
      r.failures.push_back( "q - w1 = " + std::to_string( q - w1 ) + " is representable" );
    }
    if ( !r.double_gap_representable )
    {
      r.failures.push_back( "q - 2 w1 + 1 = " + std::to_string( q - 2 * w1 + 1 ) + " is not representable" );
    }
  }
  r.heavy_enough = w1 - 1 > b;
  if ( !r.heavy_enough )
  {
    r.failures.push_back( "w1 - 1 = " + std::to_string( w1 - 1 ) + " is not greater than b" );
  }
  return r;
}

/// Game of [q; w1 - 1/2, w1 - 1/2, b (a times), a (b times)] with class sizes (2, a, b), built
/// from the doubled integer weights.
inline complete_game build_t3_counterexample( std::int64_t a, std::int64_t b, std::int64_t q, std::int64_t w1 )
{
  const auto report = check_t3_conditions( a, b, q, w1 );
  if ( !report.ok() )
  {
    throw precondition_error( "three-type construction: " + report.failures.front() );
  }
  const class_sizes sizes{ 2, static_cast<int>( a ), static_cast<int>( b ) };
  return detail::typed_game_with_shape( { 2 * q, { 2 * w1 - 1, 2 * b, 2 * a } }, sizes, "three-type construction" );
}

/// Four-type game on sizes (1, 1, 7, 11) built from 7u + 11v avoiding {52, 59}.
inline complete_game build_t4_counterexample()
{
  const class_sizes sizes{ 1, 1, 7, 11 };
  std::vector<coalition_profile> rows{
      { 1, 1, 2, 2 }, { 1, 1, 0, 5 }, { 1, 0, 5, 0 }, { 1, 0, 3, 3 }, { 1, 0, 1, 6 },
      { 1, 0, 0, 8 }, { 0, 1, 5, 1 }, { 0, 1, 3, 4 }, { 0, 1, 1, 7 }, { 0, 1, 0, 9 },
      { 0, 0, 7, 0 }, { 0, 0, 6, 2 }, { 0, 0, 4, 5 }, { 0, 0, 2, 8 }, { 0, 0, 0, 11 } };
  return validate_complete_game( sizes, rows );
}

/// Coprime a > b and levels l_1 < ... < l_t; the base weights are ŵ_i = ab - l_i - 1.
struct proposition_params
{
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> levels;

  std::vector<std::int64_t> base_weights() const
  {
    std::vector<std::int64_t> w;
    for ( auto l : levels )
    {
      w.push_back( a * b - l - 1 );
    }
    return w;
  }

  friend bool operator==( const proposition_params&, const proposition_params& ) = default;
};

struct proposition_report
{
  /// (1): a < ŵ_i < ab - 1, l_i not representable, l_i + 1 representable, for every i.
  bool levels = true;
  /// (2): 0 < Σ_{i in S} l_i - (|S|-1) ab < ab and not representable for every S, 2 <= |S| < t.
  bool subsets = true;
  /// (3): 0 < Σ l_i + 1 - (t-1) ab < ab and representable.
  bool total = true;
  std::vector<std::string> failures;

  bool ok() const { return levels && subsets && total; }
};

namespace detail {

inline void require_proposition_shape( const proposition_params& p )
{
  detail::require_coprime_pair( p.a, p.b );
  if ( p.a <= p.b )
  {
    throw precondition_error( "need a > b" );
  }
  if ( p.levels.size() < 2 )
  {
    throw precondition_error( "need at least two levels" );
  }
  for ( std::size_t i = 0; i + 1 < p.levels.size(); ++i )
  {
    if ( p.levels[i] >= p.levels[i + 1] )
    {
      throw precondition_error( "levels must be strictly increasing" );
    }
  }
}

inline bool level_ok( std::int64_t l, std::int64_t a, std::int64_t b )
{
  const auto w = a * b - l - 1;
  return a < w && w < a * b - 1 && !representable( l, a, b ) && representable( l + 1, a, b );
}

inline bool subset_value_ok( std::int64_t s, std::int64_t ab, std::int64_t a, std::int64_t b )
{
  return 0 < s && s < ab && !representable( s, a, b );
}

} // namespace detail

inline proposition_report check_proposition_params( const proposition_params& p )
{
  detail::require_proposition_shape( p );
  const std::int64_t a = p.a, b = p.b, ab = a * b;
  const std::size_t t = p.levels.size();
  proposition_report r;
  for ( std::size_t i = 0; i < t; ++i )
  {
    if ( !detail::level_ok( p.levels[i], a, b ) )
    {
      r.levels = false;
      r.failures.push_back( "condition (1) fails for l_" + std::to_string( i + 1 ) + " = " + std::to_string( p.levels[i] ) );
    }
  }
  for ( std::uint64_t mask = 1; mask < ( std::uint64_t{ 1 } << t ); ++mask )
  {
    const auto z = static_cast<std::size_t>( std::popcount( mask ) );
    if ( z < 2 || z >= t )
    {
      continue;
    }
    std::int64_t s = -static_cast<std::int64_t>( z - 1 ) * ab;
    std::string members;
    for ( std::size_t i = 0; i < t; ++i )
    {
      if ( mask >> i & 1 )
      {
        s += p.levels[i];
        members += ( members.empty() ? "" : "," ) + std::to_string( i + 1 );
      }
    }
    if ( !detail::subset_value_ok( s, ab, a, b ) )
    {
      r.subsets = false;
      r.failures.push_back( "condition (2) fails for subset {" + members + "}: value " + std::to_string( s ) );
    }
  }
  std::int64_t s = 1 - static_cast<std::int64_t>( t - 1 ) * ab;
  for ( auto l : p.levels )
  {
    s += l;
  }
  if ( !( 0 < s && s < ab && representable( s, a, b ) ) )
  {
    r.total = false;
    r.failures.push_back( "condition (3) fails: value " + std::to_string( s ) );
  }
  return r;
}

/// Class sizes (1, ..., 1, b, a) of the Proposition game.
inline class_sizes proposition_sizes( const proposition_params& p )
{
  std::vector<int> n( p.levels.size(), 1 );
  n.push_back( static_cast<int>( p.b ) );
  n.push_back( static_cast<int>( p.a ) );
  return class_sizes( std::move( n ) );
}

/// The t cyclic representations (ab; ŵ_1 + 1, ..., ŵ_k, ..., ŵ_t + 1, a, b), k = 1..t.
inline std::vector<typed_representation> proposition_representations( const proposition_params& p )
{
  const auto w = p.base_weights();
  std::vector<typed_representation> out;
  for ( std::size_t k = 0; k < w.size(); ++k )
  {
    typed_representation rep{ p.a * p.b, {} };
    for ( std::size_t i = 0; i < w.size(); ++i )
    {
      rep.class_weights.push_back( i == k ? w[i] : w[i] + 1 );
    }
    rep.class_weights.push_back( p.a );
    rep.class_weights.push_back( p.b );
    out.push_back( std::move( rep ) );
  }
  return out;
}

inline complete_game build_proposition_game( const proposition_params& p )
{
  const auto report = check_proposition_params( p );
  if ( !report.ok() )
  {
    throw precondition_error( "Proposition parameters rejected: " + report.failures.front() );
  }
  return detail::typed_game_with_shape( proposition_representations( p ).front(), proposition_sizes( p ),
                                        "Proposition construction" );
}

/// All level tuples of length t satisfying the three conditions, in lexicographic order, at most
/// `limit` of them (0 for no limit). Work is split over the choice of l_1.
inline std::vector<proposition_params> search_proposition_params( std::int64_t a, std::int64_t b, std::size_t t,
                                                                  std::size_t limit = 0, unsigned threads = 1 )
{
  detail::require_coprime_pair( a, b );
  if ( a <= b || t < 2 )
  {
    throw precondition_error( "search needs a > b and t >= 2" );
  }
  const std::int64_t ab = a * b;
  std::vector<std::int64_t> candidates;
  for ( std::int64_t l = 0; l < ab; ++l )
  {
    if ( detail::level_ok( l, a, b ) )
    {
      candidates.push_back( l );
    }
  }

  // Subset sums of the chosen prefix, grouped by subset size.
  auto search_from = [&]( std::size_t first, std::vector<std::vector<std::int64_t>>& found ) {
    std::vector<std::int64_t> chosen{ candidates[first] };
    std::vector<std::vector<std::int64_t>> sums( t + 1 );
    sums[1] = { candidates[first] };
    std::function<void( std::size_t )> rec = [&]( std::size_t next ) {
      if ( limit && found.size() >= limit )
      {
        return;
      }
      if ( chosen.size() == t )
      {
        std::int64_t s = 1 - static_cast<std::int64_t>( t - 1 ) * ab;
        for ( auto l : chosen )
        {
          s += l;
        }
        if ( 0 < s && s < ab && representable( s, a, b ) )
        {
          found.push_back( chosen );
        }
        return;
      }
      for ( std::size_t k = next; k < candidates.size(); ++k )
      {
        const auto l = candidates[k];
        const std::size_t top = std::min( chosen.size() + 1, t - 1 );
        bool ok = true;
        std::vector<std::vector<std::int64_t>> added( t + 1 );
        for ( std::size_t z = 2; z <= top && ok; ++z )
        {
          for ( auto s : sums[z - 1] )
          {
            const auto value = s + l - static_cast<std::int64_t>( z - 1 ) * ab;
            if ( !detail::subset_value_ok( value, ab, a, b ) )
            {
              ok = false;
              break;
            }
            added[z].push_back( s + l );
          }
        }
        if ( !ok )
        {
          continue;
        }
        added[1].push_back( l );
        for ( std::size_t z = 1; z <= t; ++z )
        {
          sums[z].insert( sums[z].end(), added[z].begin(), added[z].end() );
        }
        chosen.push_back( l );
        rec( k + 1 );
        chosen.pop_back();
        for ( std::size_t z = 1; z <= t; ++z )
        {
          sums[z].resize( sums[z].size() - added[z].size() );
        }
      }
    };
    rec( first + 1 );
  };

  std::vector<std::vector<std::vector<std::int64_t>>> per_first( candidates.size() );
  {
    std::mutex m;
    std::size_t cursor = 0;
    auto worker = [&] {
      for ( ;; )
      {
        std::size_t i;
        {
          std::lock_guard lock( m );
          if ( cursor == candidates.size() )
          {
            return;
          }
          i = cursor++;
        }
        search_from( i, per_first[i] );
      }
    };
    std::vector<std::jthread> pool;
    for ( unsigned k = 0; k < std::max( 1u, threads ); ++k )
    {
      pool.emplace_back( worker );
    }
  }
  std::vector<proposition_params> out;
  for ( auto& group : per_first )
  {
    for ( auto& levels : group )
    {
      if ( limit && out.size() >= limit )
      {
        return out;
      }
      out.push_back( { a, b, std::move( levels ) } );
    }
  }
  return out;
}

/// A constructed game together with the representation claimed to be its minimum.
struct family_instance
{
  complete_game game;
  typed_representation representation;
  class_sizes sizes;
  /// Non-negative u_i with Σ u_i a_i = q - 1 (product family only).
  std::vector<std::int64_t> coefficients;
};

/// [ab; b (n1 times), a (n2 times)] for coprime b > a >= 1, or [1; 1 (n1 times), 0 (n2 times)]
/// for a = 0, b = 1. Requires n1 >= 2a + 1 and n2 >= 2b + 1.
inline family_instance build_two_weight_family( std::int64_t a, std::int64_t b, int n1, int n2 )
{
  const bool zero_case = a == 0 && b == 1;
  if ( !zero_case )
  {
    detail::require_coprime_pair( a, b );
    if ( b <= a )
    {
      throw precondition_error( "two-weight family needs b > a" );
    }
  }
  if ( n1 < 2 * a + 1 || n2 < 2 * b + 1 )
  {
    throw precondition_error( "two-weight family needs n1 >= " + std::to_string( 2 * a + 1 ) + " and n2 >= " +
                              std::to_string( 2 * b + 1 ) );
  }
  const class_sizes sizes{ n1, n2 };
  const typed_representation rep{ zero_case ? 1 : a * b, { b, a } };
  return { detail::typed_game_with_shape( rep, sizes, "two-weight family" ), rep, sizes, {} };
}

namespace detail {

inline void require_decreasing_positive( const std::vector<std::int64_t>& a, const std::vector<int>& n )
{
  if ( a.empty() || a.size() != n.size() )
  {
    throw precondition_error( "need one size per weight" );
  }
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( a[i] <= 0 || ( i + 1 < a.size() && a[i] <= a[i + 1] ) )
    {
      throw precondition_error( "weights must be strictly decreasing and positive" );
    }
  }
}

} // namespace detail

/// [lcm(a); a_1 (n_1 times), ..., a_t (n_t times)] when every a_i has a coprime partner and
/// n_i >= 1 + 2 max a.
inline family_instance build_lcm_family( const std::vector<std::int64_t>& a, const std::vector<int>& n )
{
  detail::require_decreasing_positive( a, n );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( std::none_of( a.begin(), a.end(), [&]( std::int64_t x ) { return std::gcd( a[i], x ) == 1; } ) )
    {
      throw precondition_error( "weight " + std::to_string( a[i] ) + " has no coprime partner" );
    }
    if ( n[i] < 1 + 2 * a.front() )
    {
      throw precondition_error( "class " + std::to_string( i + 1 ) + " needs at least " +
                                std::to_string( 1 + 2 * a.front() ) + " voters" );
    }
  }
  std::int64_t q = 1;
  for ( auto x : a )
  {
    q = std::lcm( q, x );
  }
  const class_sizes sizes( n );
  const typed_representation rep{ q, a };
  return { detail::typed_game_with_shape( rep, sizes, "lcm family" ), rep, sizes, {} };
}

/// [Π a; a_1 (n_1 times), ..., a_t (n_t times)] when gcd(a) = 1 and n_i >= 1 + 2 Π_{j != i} a_j.
inline family_instance build_product_family( const std::vector<std::int64_t>& a, const std::vector<int>& n )
{
  detail::require_decreasing_positive( a, n );
  std::int64_t g = 0, q = 1;
  for ( auto x : a )
  {
    g = std::gcd( g, x );
    q *= x;
  }
  if ( g != 1 )
  {
    throw precondition_error( "weights have common divisor " + std::to_string( g ) );
  }
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( n[i] < 1 + 2 * ( q / a[i] ) )
    {
      throw precondition_error( "class " + std::to_string( i + 1 ) + " needs at least " +
                                std::to_string( 1 + 2 * ( q / a[i] ) ) + " voters" );
    }
  }
  // u_i in [0, q/a_i - 1] with Σ u_i a_i = q - 1, first in lexicographic order.
  std::vector<std::int64_t> u( a.size(), 0 );
  std::function<bool( std::size_t, std::int64_t )> fill = [&]( std::size_t i, std::int64_t rest ) {
    if ( i + 1 == a.size() )
    {
      if ( rest % a[i] != 0 || rest / a[i] > q / a[i] - 1 )
      {
        return false;
      }
      u[i] = rest / a[i];
      return true;
    }
    for ( std::int64_t x = 0; x <= q / a[i] - 1 && x * a[i] <= rest; ++x )
    {
      u[i] = x;
      if ( fill( i + 1, rest - x * a[i] ) )
      {
        return true;
      }
    }
    return false;
  };
  if ( !fill( 0, q - 1 ) )
  {
    throw consistency_error( "no coefficients for q - 1" );
  }
  const class_sizes sizes( n );
  const typed_representation rep{ q, a };
  return { detail::typed_game_with_shape( rep, sizes, "product family" ), rep, sizes, std::move( u ) };
}

/// Appends a class of k null voters (weight 0) to a representation with positive weights.
inline family_instance extend_with_null_class( const typed_representation& rep, const class_sizes& sizes, int k )
{
  if ( k < 1 )
  {
    throw precondition_error( "null class needs at least one voter" );
  }
  if ( std::any_of( rep.class_weights.begin(), rep.class_weights.end(), []( weight_t w ) { return w <= 0; } ) )
  {
    throw precondition_error( "representation already has a zero weight" );
  }
  std::vector<int> n( sizes.counts().begin(), sizes.counts().end() );
  n.push_back( k );
  typed_representation out = rep;
  out.class_weights.push_back( 0 );
  const class_sizes extended( std::move( n ) );
  return { detail::typed_game_with_shape( out, extended, "null extension" ), out, extended, {} };
}

} // namespace wvg
