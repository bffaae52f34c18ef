#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "complete_game.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "game_analysis.hpp"
#include "minrep2.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "representation.hpp"
#include "weightedness.hpp"

namespace wvg {

struct report_item
{
  std::string name;
  bool passed = false;
  std::string detail;
};

struct verification_report
{
  std::vector<report_item> items;

  bool all_passed() const
  {
    return std::all_of( items.begin(), items.end(), []( const auto& i ) { return i.passed; } );
  }
};

inline std::ostream& operator<<( std::ostream& os, const report_item& item )
{
  os << item.name << ": " << ( item.passed ? "PASS" : "FAIL" );
  if ( !item.detail.empty() )
  {
    os << " (" << item.detail << ")";
  }
  return os;
}

/// Runs `check`, which returns an empty string on success and a failure description otherwise.
/// Exceptions are reported as failures.
inline report_item run_check( const std::string& name, const std::function<std::string()>& check )
{
  try
  {
    auto why = check();
    return { name, why.empty(), why };
  }
  catch ( const std::exception& e )
  {
    return { name, false, std::string( "exception: " ) + e.what() };
  }
}

namespace detail {

inline std::vector<coalition_profile> profile_rows( std::initializer_list<std::vector<int>> rows )
{
  std::vector<coalition_profile> out;
  for ( const auto& r : rows )
  {
    out.emplace_back( r );
  }
  return out;
}

inline std::string render( const std::vector<rational>& v )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    s += ( i ? ", " : "" ) + v[i].get_str();
  }
  return s + ")";
}

inline std::string expect( bool ok, const std::string& what ) { return ok ? std::string() : what; }

} // namespace detail

inline std::string check_canonicalization()
{
  const auto c = canonicalize( integer_representation{ 4, { 3, 2, 1, 1 } } );
  if ( c.game.sizes() != class_sizes{ 1, 3 } || c.game.winners() != detail::profile_rows( { { 1, 1 }, { 0, 3 } } ) )
  {
    return "canonical form of [4; 3, 2, 1, 1] differs";
  }
  if ( shift_maximal_losing( c.game ) != detail::profile_rows( { { 1, 0 }, { 0, 2 } } ) )
  {
    return "shift-maximal losing profiles differ";
  }
  const auto other = canonicalize( integer_representation{ 3, { 2, 1, 1, 1 } } );
  return detail::expect( isomorphic( c.game, other.game ), "[3; 2, 1, 1, 1] is not the same game" );
}

inline std::string check_two_type_minimum()
{
  const auto g = canonicalize( typed_representation{ 24, { 7, 3 } }, class_sizes{ 4, 8 } ).game;
  if ( g.sizes() != class_sizes{ 4, 8 } || g.winners() != detail::profile_rows( { { 3, 1 }, { 2, 4 }, { 1, 6 }, { 0, 8 } } ) )
  {
    return "game of [24; 7, 3] on (4, 8) differs";
  }
  const auto r = min_rep_t2( g ).typed;
  if ( r != typed_representation{ 24, { 7, 3 } } )
  {
    return "got " + to_string( r );
  }
  const auto small = validate_complete_game( class_sizes{ 1, 3 }, detail::profile_rows( { { 1, 1 }, { 0, 3 } } ) );
  return detail::expect( min_rep_t2( small ).typed == typed_representation{ 3, { 2, 1 } }, "(1, 3) game is not [3; 2, 1]" );
}

inline std::string check_single_row_not_weighted()
{
  try
  {
    min_rep_t2_r1( 2, 4, 1, 2 );
  }
  catch ( const not_weighted_error& )
  {
    const auto g = validate_complete_game( class_sizes{ 2, 4 }, { coalition_profile{ 1, 2 } } );
    return detail::expect( !is_weighted( g ).weighted, "LP reports (2, 4)/[(1, 2)] weighted" );
  }
  return "closed form accepted (2, 4)/[(1, 2)]";
}

inline std::string check_three_type_counterexample()
{
  const auto g = build_t3_counterexample( 5, 7, 35, 12 );
  if ( shift_maximal_losing( g ) !=
       detail::profile_rows( { { 2, 1, 0 }, { 2, 0, 2 }, { 1, 3, 0 }, { 1, 1, 3 }, { 0, 4, 1 }, { 0, 2, 4 } } ) )
  {
    return "shift-maximal losing profiles differ";
  }
  const auto v = fractional_minimum_vector( fractional_minima( g ) );
  const std::vector<rational> expected{ rational( 23, 2 ), 7, 5, 35 };
  if ( v != expected )
  {
    return "fractional minima " + detail::render( v );
  }
  oracle_options opts;
  opts.voter_cap = 32;
  const auto c = min_per_voter( g, opts );
  if ( c.has_minimum )
  {
    return "a minimum per-voter representation was found";
  }
  std::vector<integer_representation> witnesses;
  for ( auto head : { std::vector<weight_t>{ 12, 11 }, std::vector<weight_t>{ 11, 12 } } )
  {
    head.insert( head.end(), { 7, 7, 7, 7, 7, 5, 5, 5, 5, 5, 5, 5 } );
    witnesses.push_back( { 35, head } );
  }
  auto got = c.min_sum_reps;
  std::sort( got.begin(), got.end() );
  std::sort( witnesses.begin(), witnesses.end() );
  return detail::expect( c.min_sum_value == 93 && got == witnesses, "minimum-sum representations differ" );
}

inline std::string check_four_type_counterexample()
{
  const auto g = build_t4_counterexample();
  if ( g.winners().front() != coalition_profile{ 1, 1, 2, 2 } || g.winners().back() != coalition_profile{ 0, 0, 0, 11 } )
  {
    return "matrix differs";
  }
  const std::vector<typed_representation> expected{ { 77, { 25, 17, 11, 7 } }, { 77, { 24, 18, 11, 7 } } };
  if ( min_sum_typed( g ) != expected )
  {
    return "minimum-sum typed representations differ";
  }
  for ( const auto& m : fractional_minima( g ) )
  {
    if ( m.objective == "w2" && m.solution.objective_value != 17 )
    {
      return "minimum w2 is " + m.solution.objective_value.get_str();
    }
  }
  return detail::expect( !min_typed( g ).minimum.has_value(), "a typed minimum exists" );
}

inline std::string check_muroga()
{
  const integer_representation rep{ 12, { 7, 6, 6, 4, 4, 4, 3, 2 } };
  const auto c = canonicalize( rep );
  if ( c.game.sizes() != class_sizes{ 1, 2, 3, 2 } )
  {
    return "expected classes (1, 2, 3, 2)";
  }
  const auto r = min_per_voter( c.game );
  if ( r.has_minimum )
  {
    return "a per-voter minimum exists";
  }
  const bool swapped = std::count( r.min_sum_reps.begin(), r.min_sum_reps.end(), integer_representation{ 12, { 7, 6, 6, 4, 4, 4, 2, 3 } } ) == 1;
  if ( !swapped )
  {
    return "[12; 7, 6, 6, 4, 4, 4, 2, 3] is not a minimum-sum representation";
  }
  if ( !r.typed_minimum || expand( *r.typed_minimum, c.game.sizes() ) != integer_representation{ 14, { 8, 7, 7, 5, 5, 5, 3, 3 } } )
  {
    return "typed minimum differs";
  }
  return {};
}

inline std::string check_proposition_game( const proposition_params& p )
{
  const auto g = build_proposition_game( p );
  auto expected = proposition_representations( p );
  std::sort( expected.begin(), expected.end(), []( const auto& a, const auto& b ) { return a.class_weights > b.class_weights; } );
  const auto got = min_sum_typed( g );
  if ( got != expected )
  {
    return std::to_string( got.size() ) + " minimum-sum representations, not the cyclic " + std::to_string( expected.size() );
  }
  return {};
}

inline std::string check_proposition_tuple( const proposition_params& p )
{
  const auto r = check_proposition_params( p );
  return r.ok() ? std::string() : r.failures.front();
}

/// Tuples (a, b, l_1, ..., l_t) listed for t = 3, ..., 10.
inline std::vector<proposition_params> listed_proposition_tuples()
{
  return { { 13, 11, { 93, 97, 106 } },
           { 17, 13, { 157, 161, 174 } },
           { 19, 11, { 141, 157, 160, 179 } },
           { 19, 17, { 249, 251, 253, 268, 287 } },
           { 29, 17, { 389, 396, 401, 418, 430, 447 } },
           { 31, 29, { 746, 750, 752, 777, 779, 808, 810 } },
           { 37, 29, { 883, 891, 920, 941, 949, 970, 978, 1007 } },
           { 41, 31, { 1086, 1100, 1106, 1117, 1127, 1137, 1158, 1168, 1199 } },
           { 43, 41, { 1513, 1550, 1552, 1554, 1593, 1595, 1597, 1636, 1638, 1679 } } };
}

inline std::string check_frobenius_values()
{
  if ( frobenius_number( 7, 11 ) != 59 || representable( 52, 7, 11 ) || representable( 59, 7, 11 ) )
  {
    return "7u + 11v values differ";
  }
  if ( frobenius_number( 5, 7 ) != 23 || !representable( 12, 5, 7 ) )
  {
    return "5u + 7v values differ";
  }
  return {};
}

inline std::string check_enumeration_formulas( int max_n )
{
  for ( int n = 2; n <= max_n; ++n )
  {
    if ( big_integer( count_csg_t2( n ) ) != fibonacci_csg_formula( n ) )
    {
      return "complete game count differs at n = " + std::to_string( n );
    }
  }
  for ( int n = 3; n <= std::min( max_n, 10 ); ++n )
  {
    const auto row = count_wvg_t2( n, 1 );
    if ( static_cast<std::int64_t>( row.wvg_count ) != single_row_weighted_formula( n ) )
    {
      return "single-row weighted count differs at n = " + std::to_string( n );
    }
    if ( rational( count_wvg_t2( n ).wvg_count ) > wm_t2_bound( n ) )
    {
      return "weighted count exceeds the bound at n = " + std::to_string( n );
    }
  }
  return {};
}

/// One of the five larger three-type instances: class sizes, the fractional minima
/// (w_1, w_2, w_3, q) and the integer minimum (w_1, w_2, w_3, q).
struct listed_instance
{
  std::vector<int> sizes;
  std::array<rational, 4> fractional;
  std::array<weight_t, 4> integral;
};

inline std::vector<listed_instance> listed_instances()
{
  return { { { 9, 62, 71 }, { rational( 115, 3 ), rational( 68, 3 ), rational( 20, 3 ), rational( 463, 3 ) }, { 46, 27, 8, 185 } },
           { { 19, 52, 65 }, { rational( 200 ), rational( 110 ), rational( 383, 5 ), rational( 19921, 5 ) }, { 282, 155, 108, 5617 } },
           { { 30, 93, 30 }, { rational( 67, 3 ), rational( 16 ), rational( 28, 3 ), rational( 367, 3 ) }, { 24, 17, 10, 131 } },
           { { 8, 99, 10 }, { rational( 17 ), rational( 21, 2 ), rational( 9, 2 ), rational( 51 ) }, { 19, 12, 5, 57 } },
           { { 3, 71, 37 }, { rational( 100 ), rational( 63, 2 ), rational( 15 ), rational( 695, 2 ) }, { 127, 40, 19, 441 } } };
}

inline std::string check_listed_instance( const listed_instance& item )
{
  const auto& w = item.integral;
  const class_sizes sizes( item.sizes );
  const auto c = canonicalize( typed_representation{ w[3], { w[0], w[1], w[2] } }, sizes );
  if ( c.game.sizes() != sizes )
  {
    return "classes merge under the listed weights";
  }
  const auto v = fractional_minimum_vector( fractional_minima( c.game ) );
  if ( v != std::vector<rational>( item.fractional.begin(), item.fractional.end() ) )
  {
    return "fractional minima " + detail::render( v );
  }
  const auto m = min_typed( c.game );
  const typed_representation expected{ w[3], { w[0], w[1], w[2] } };
  if ( !m.minimum )
  {
    return "no typed minimum";
  }
  return detail::expect( *m.minimum == expected, "typed minimum " + to_string( *m.minimum ) );
}

/// Every reference example; the five larger instances only when `full` is set.
inline verification_report verify_paper( bool full )
{
  verification_report r;
  r.items.push_back( run_check( "Canonicalization", check_canonicalization ) );
  r.items.push_back( run_check( "Two-type minimum", check_two_type_minimum ) );
  r.items.push_back( run_check( "Single-row non-weighted", check_single_row_not_weighted ) );
  r.items.push_back( run_check( "Frobenius values", check_frobenius_values ) );
  r.items.push_back( run_check( "Three-type counterexample", check_three_type_counterexample ) );
  r.items.push_back( run_check( "Four-type counterexample", check_four_type_counterexample ) );
  r.items.push_back( run_check( "Muroga", check_muroga ) );
  for ( const proposition_params& p : { proposition_params{ 13, 11, { 93, 97, 106 } }, proposition_params{ 17, 13, { 157, 161, 174 } } } )
  {
    r.items.push_back( run_check( "Proposition game (" + std::to_string( p.a ) + ", " + std::to_string( p.b ) + ")",
                                  [&] { return check_proposition_game( p ); } ) );
  }
  for ( const auto& p : listed_proposition_tuples() )
  {
    r.items.push_back( run_check( "Proposition tuple (" + std::to_string( p.a ) + ", " + std::to_string( p.b ) + "), t=" + std::to_string( p.levels.size() ),
                                  [&] { return check_proposition_tuple( p ); } ) );
  }
  r.items.push_back( run_check( "Enumeration formulas", [] { return check_enumeration_formulas( 10 ); } ) );
  if ( full )
  {
    const auto instances = listed_instances();
    for ( std::size_t i = 0; i < instances.size(); ++i )
    {
      r.items.push_back( run_check( "Instance (" + std::to_string( i + 1 ) + ")",
                                    [&] { return check_listed_instance( instances[i] ); } ) );
    }
  }
  return r;
}

} // namespace wvg
