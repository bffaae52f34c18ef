#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "ilp.hpp"
#include "rational.hpp"
#include "representation.hpp"
#include "weightedness.hpp"

namespace wvg {

/// Minimum representation of the k-out-of-n game: every weight 1, quota k.
inline typed_representation min_rep_t1( int n, int k )
{
  if ( n < 1 || k < 1 || k > n )
  {
    throw precondition_error( "threshold game needs 1 <= k <= n, got n = " + std::to_string( n ) +
                              ", k = " + std::to_string( k ) );
  }
  return { k, { 1 } };
}

/// Closed-form minimum for two types and a single shift-minimal winning profile (m1, m2).
inline typed_representation min_rep_t2_r1( int n1, int n2, int m1, int m2 )
{
  validate_complete_game( class_sizes{ n1, n2 }, { coalition_profile{ m1, m2 } } );
  const weight_t N1 = n1, N2 = n2, M1 = m1, M2 = m2;
  if ( m2 == 0 )
  {
    return { M1, { 1, 0 } };
  }
  if ( m1 == n1 )
  {
    return { N1 * ( N2 - M2 + 1 ) + M2, { N2 - M2 + 1, 1 } };
  }
  if ( m2 == 1 )
  {
    return { M1 * N2 + 1, { N2, 1 } };
  }
  if ( m2 == n2 - 1 )
  {
    if ( m1 + n2 - 1 <= n1 )
    {
      return { M1 * N2 + ( N2 - 1 ) * ( N2 - 1 ), { N2, N2 - 1 } };
    }
    return { ( M1 + N2 ) * ( N1 + 1 - M1 ) + 2 * M1 - N1 - 1, { N1 + 2 - M1, N1 + 1 - M1 } };
  }
  throw not_weighted_error( "game (" + std::to_string( n1 ) + "," + std::to_string( n2 ) + ") with row (" +
                            std::to_string( m1 ) + "," + std::to_string( m2 ) +
                            ") is not weighted: (m1-1, m2+2) and (m1+1, m2-2) are both losing" );
}

struct stripped_game
{
  complete_game game;
  /// Size of the removed weakest class, 0 when no class consists of null voters.
  int null_voters = 0;
};

/// Removes the weakest class when its voters are null, i.e. no shift-minimal winning profile
/// uses it. Only the weakest class can be null, since two null classes would be equivalent.
inline stripped_game strip_null_voters( const complete_game& game )
{
  const std::size_t t = game.types();
  if ( t < 2 )
  {
    return { game, 0 };
  }
  for ( const auto& m : game.winners() )
  {
    if ( m[t - 1] != 0 )
    {
      return { game, 0 };
    }
  }
  std::vector<int> sizes( game.sizes().counts().begin(), game.sizes().counts().end() - 1 );
  std::vector<coalition_profile> rows;
  for ( const auto& m : game.winners() )
  {
    rows.emplace_back( std::vector<int>( m.counts().begin(), m.counts().end() - 1 ) );
  }
  return { validate_complete_game( class_sizes( std::move( sizes ) ), rows ), game.sizes()[t - 1] };
}

/// Three tight profiles (two of one kind, one of the other), the determinant Q of the
/// corresponding 3x3 system and its exact solution (w_1, w_2, q).
struct tight_triple_candidate
{
  struct tagged_profile
  {
    coalition_profile profile;
    bool winning;
  };

  std::array<tagged_profile, 3> tight_profiles;
  big_integer determinant;
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::optional<rational_solution> solution;
  bool admissible = false;
};

namespace detail {

/// u, v with u·b - v·a = 1, 0 < u <= a, 0 <= v < b, for coprime a, b >= 1.
inline std::pair<std::int64_t, std::int64_t> euclid_pair( std::int64_t a, std::int64_t b )
{
  // Extended Euclid for x with b·x ≡ 1 (mod a).
  std::int64_t r0 = a, r1 = b % a, s0 = 0, s1 = 1;
  while ( r1 != 0 )
  {
    const std::int64_t k = r0 / r1;
    std::tie( r0, r1 ) = std::make_pair( r1, r0 - k * r1 );
    std::tie( s0, s1 ) = std::make_pair( s1, s0 - k * s1 );
  }
  if ( r0 != 1 )
  {
    throw consistency_error( "euclid_pair: arguments not coprime" );
  }
  std::int64_t u = ( ( s0 % a ) + a ) % a;
  if ( u == 0 )
  {
    u = a;
  }
  const std::int64_t v = ( u * b - 1 ) / a;
  if ( u * b - v * a != 1 || v < 0 || v >= b )
  {
    throw consistency_error( "euclid_pair: coefficient out of range" );
  }
  return { u, v };
}

/// Solves rows (x1, x2) · w - q = rhs exactly; nullopt when singular.
inline std::optional<std::vector<rational>> solve_3x3( const std::array<coalition_profile, 3>& rows,
                                                       const std::array<int, 3>& rhs, big_integer& det_out )
{
  std::array<std::array<rational, 4>, 3> m;
  for ( std::size_t r = 0; r < 3; ++r )
  {
    m[r] = { rational( rows[r][0] ), rational( rows[r][1] ), rational( -1 ), rational( rhs[r] ) };
  }
  auto det3 = []( const std::array<std::array<rational, 4>, 3>& a, std::size_t c0, std::size_t c1, std::size_t c2 ) {
    return rational( a[0][c0] * ( a[1][c1] * a[2][c2] - a[1][c2] * a[2][c1] ) -
                     a[0][c1] * ( a[1][c0] * a[2][c2] - a[1][c2] * a[2][c0] ) +
                     a[0][c2] * ( a[1][c0] * a[2][c1] - a[1][c1] * a[2][c0] ) );
  };
  const rational det = det3( m, 0, 1, 2 );
  det_out = det.get_num();
  if ( det == 0 )
  {
    return std::nullopt;
  }
  return std::vector<rational>{ det3( m, 3, 1, 2 ) / det, det3( m, 0, 3, 2 ) / det, det3( m, 0, 1, 3 ) / det };
}

inline big_integer labeled_q( const coalition_profile& ab, const coalition_profile& cd, const coalition_profile& ef )
{
  const big_integer a = ab[0], b = ab[1], c = cd[0], d = cd[1], e = ef[0], f = ef[1];
  return f * c - f * a + a * d - b * c - e * d + e * b;
}

inline bool feasible_for( const std::vector<rational>& s, const std::vector<coalition_profile>& winners,
                          const std::vector<coalition_profile>& losers )
{
  for ( const auto& x : winners )
  {
    if ( s[0] * x[0] + s[1] * x[1] < s[2] )
    {
      return false;
    }
  }
  for ( const auto& y : losers )
  {
    if ( s[0] * y[0] + s[1] * y[1] > s[2] - 1 )
    {
      return false;
    }
  }
  return s[0] >= s[1] + 1 && s[1] >= 0;
}

} // namespace detail

/// Candidate vertices for t = 2, r >= 2. Each pair of shift-minimal winning rows (a,b), (c,d) with
/// a > c is reduced by g = gcd(a-c, d-b) and completed by the losing profile (a-u, b+v); each
/// pair of shift-maximal losing rows (c,d), (e,f) with e > c is reduced likewise and completed by
/// the winning profile (c+u, d-v).
inline std::vector<tight_triple_candidate> tight_triple_candidates( const complete_game& game,
                                                                    const std::vector<coalition_profile>& losers )
{
  const auto& sizes = game.sizes();
  const auto& winners = game.winners();
  std::vector<tight_triple_candidate> out;

  auto finish = [&]( tight_triple_candidate cand, const coalition_profile& third, bool third_winning ) {
    if ( !fits( third, sizes ) )
    {
      out.push_back( std::move( cand ) );
      return;
    }
    cand.tight_profiles[2] = { third, third_winning };
    std::array<coalition_profile, 3> rows{ cand.tight_profiles[0].profile, cand.tight_profiles[1].profile, third };
    std::array<int, 3> rhs{};
    for ( std::size_t k = 0; k < 3; ++k )
    {
      rhs[k] = cand.tight_profiles[k].winning ? 0 : -1;
    }
    big_integer det;
    auto sol = detail::solve_3x3( rows, rhs, det );
    if ( third_winning )
    {
      cand.determinant = detail::labeled_q( third, cand.tight_profiles[0].profile, cand.tight_profiles[1].profile );
    }
    else
    {
      cand.determinant = detail::labeled_q( cand.tight_profiles[0].profile, cand.tight_profiles[1].profile, third );
    }
    if ( sol )
    {
      rational_solution rs;
      rs.status = lp_status::optimal;
      rs.values = *sol;
      rs.objective_value = ( *sol )[2];
      cand.admissible = detail::all_integral( *sol ) && detail::feasible_for( *sol, winners, losers );
      cand.solution = std::move( rs );
    }
    out.push_back( std::move( cand ) );
  };

  for ( const auto& p : winners )
  {
    for ( const auto& s : winners )
    {
      if ( p[0] <= s[0] )
      {
        continue;
      }
      const std::int64_t a = p[0], b = p[1];
      const std::int64_t g = std::gcd( a - s[0], static_cast<std::int64_t>( s[1] ) - b );
      const std::int64_t da = ( a - s[0] ) / g, db = ( s[1] - b ) / g;
      const coalition_profile reduced{ static_cast<int>( a - da ), static_cast<int>( b + db ) };
      tight_triple_candidate cand;
      cand.tight_profiles[0] = { p, true };
      cand.tight_profiles[1] = { reduced, true };
      std::tie( cand.u, cand.v ) = detail::euclid_pair( da, db );
      finish( std::move( cand ), coalition_profile{ static_cast<int>( a - cand.u ), static_cast<int>( b + cand.v ) }, false );
    }
  }
  for ( const auto& cd : losers )
  {
    for ( const auto& ef : losers )
    {
      if ( ef[0] <= cd[0] )
      {
        continue;
      }
      const std::int64_t e = ef[0], f = ef[1];
      const std::int64_t g = std::gcd( e - cd[0], static_cast<std::int64_t>( cd[1] ) - f );
      const std::int64_t de = ( e - cd[0] ) / g, df = ( cd[1] - f ) / g;
      const coalition_profile reduced{ static_cast<int>( e - de ), static_cast<int>( f + df ) };
      tight_triple_candidate cand;
      cand.tight_profiles[0] = { reduced, false };
      cand.tight_profiles[1] = { ef, false };
      std::tie( cand.u, cand.v ) = detail::euclid_pair( de, df );
      finish( std::move( cand ), coalition_profile{ reduced[0] + static_cast<int>( cand.u ), reduced[1] - static_cast<int>( cand.v ) },
              true );
    }
  }
  return out;
}

struct minrep2_result
{
  typed_representation typed;
  integer_representation per_voter;
};

/// Unique minimum integer representation of a weighted game with two types.
inline minrep2_result min_rep_t2( const complete_game& game )
{
  if ( game.types() != 2 )
  {
    throw precondition_error( "two-type algorithm called on a game with " + std::to_string( game.types() ) + " types" );
  }
  const auto stripped = strip_null_voters( game );
  typed_representation typed;
  if ( stripped.null_voters > 0 )
  {
    const auto base = min_rep_t1( stripped.game.sizes()[0], stripped.game.winners()[0][0] );
    typed = { base.quota, { base.class_weights[0], 0 } };
  }
  else if ( game.winners().size() == 1 )
  {
    const auto& m = game.winners()[0];
    typed = min_rep_t2_r1( game.sizes()[0], game.sizes()[1], m[0], m[1] );
  }
  else
  {
    const auto losers = shift_maximal_losing( game );
    std::vector<std::vector<rational>> found;
    for ( const auto& cand : tight_triple_candidates( game, losers ) )
    {
      if ( !cand.admissible )
      {
        continue;
      }
      if ( cand.determinant != 1 && cand.determinant != -1 )
      {
        throw consistency_error( "admissible tight triple with |Q| = " + cand.determinant.get_str() );
      }
      const auto& s = cand.solution->values;
      if ( std::find( found.begin(), found.end(), s ) == found.end() )
      {
        found.push_back( s );
      }
    }
    if ( found.empty() )
    {
      if ( !is_weighted( game, losers ).weighted )
      {
        throw not_weighted_error( "game is not weighted" );
      }
      throw consistency_error( "weighted two-type game without an admissible tight triple" );
    }
    const std::vector<rational>* least = nullptr;
    for ( const auto& s : found )
    {
      if ( std::all_of( found.begin(), found.end(),
                        [&]( const auto& o ) { return s[0] <= o[0] && s[1] <= o[1] && s[2] <= o[2]; } ) )
      {
        least = &s;
        break;
      }
    }
    if ( !least )
    {
      throw consistency_error( "tight triples give incomparable minima" );
    }
    typed = { to_int64( ( *least )[2] ), { to_int64( ( *least )[0] ), to_int64( ( *least )[1] ) } };
  }
  if ( !realizes( game, typed ) )
  {
    throw consistency_error( "computed representation " + to_string( typed ) + " does not realize the game" );
  }
  return { typed, expand( typed, game.sizes() ) };
}

/// w_1 <= max(n_1+1, n_2), w_2 <= max(n_1, n_2-1), q <= (n_1+n_2)·max(n_1+1, n_2).
inline bool within_main_bounds( const class_sizes& sizes, const typed_representation& rep )
{
  const weight_t n1 = sizes[0], n2 = sizes[1];
  const weight_t m = std::max( n1 + 1, n2 );
  return rep.class_weights[0] <= m && rep.class_weights[1] <= std::max( n1, n2 - 1 ) && rep.quota <= ( n1 + n2 ) * m;
}

/// 1 <= w_1 <= n_2, 0 <= w_2 <= n_1, w_2 + 1 <= q <= 2 n_1 n_2.
inline bool within_sharpened_bounds( const class_sizes& sizes, const typed_representation& rep )
{
  const weight_t n1 = sizes[0], n2 = sizes[1];
  const auto& w = rep.class_weights;
  return 1 <= w[0] && w[0] <= n2 && 0 <= w[1] && w[1] <= n1 && w[1] + 1 <= rep.quota && rep.quota <= 2 * n1 * n2;
}

} // namespace wvg
