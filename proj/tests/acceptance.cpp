#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wvg/wvg.hpp>

using namespace wvg;

namespace {

std::string join( const std::vector<std::string>& parts )
{
  std::string s;
  for ( const auto& p : parts )
  {
    s += ( s.empty() ? "" : "; " ) + p;
  }
  return s;
}

std::string canonicalization()
{
  return check_canonicalization();
}

std::string two_type_algorithm()
{
  if ( auto why = check_two_type_minimum(); !why.empty() )
  {
    return why;
  }
  std::size_t checked = 0;
  for ( int n = 2; n <= 9; ++n )
  {
    for ( const auto& g : enumerate_csg_t2( n ) )
    {
      if ( !is_weighted( g ).weighted )
      {
        continue;
      }
      const auto rep = min_rep_t2( g ).typed;
      const auto oracle = min_typed( g );
      if ( !oracle.minimum )
      {
        return "no component-wise minimum for a weighted game with n = " + std::to_string( n );
      }
      if ( *oracle.minimum != rep )
      {
        return "n = " + std::to_string( n ) + ": " + to_string( rep ) + " vs oracle " + to_string( *oracle.minimum );
      }
      if ( !within_main_bounds( g.sizes(), rep ) )
      {
        return to_string( rep ) + " exceeds the bounds";
      }
      ++checked;
    }
  }
  return checked > 0 ? std::string() : "no games checked";
}

std::string propositions()
{
  std::vector<std::string> failures;
  for ( const proposition_params& p : { proposition_params{ 13, 11, { 93, 97, 106 } }, proposition_params{ 17, 13, { 157, 161, 174 } } } )
  {
    if ( auto why = check_proposition_game( p ); !why.empty() )
    {
      failures.push_back( "(" + std::to_string( p.a ) + ", " + std::to_string( p.b ) + "): " + why );
    }
  }
  for ( const auto& p : listed_proposition_tuples() )
  {
    if ( auto why = check_proposition_tuple( p ); !why.empty() )
    {
      failures.push_back( "t=" + std::to_string( p.levels.size() ) + " (" + std::to_string( p.a ) + ", " +
                          std::to_string( p.b ) + "): " + why );
    }
  }
  return join( failures );
}

std::string enumeration_formulas()
{
  for ( int n = 2; n <= 12; ++n )
  {
    const auto all = count_wvg_t2( n, std::nullopt, { 4, 12 } );
    if ( big_integer( all.csg_count ) != fibonacci_csg_formula( n ) )
    {
      return "csg(" + std::to_string( n ) + ", 2) = " + std::to_string( all.csg_count );
    }
    if ( rational( all.wvg_count ) > wm_t2_bound( n ) )
    {
      return "wm(" + std::to_string( n ) + ", 2) exceeds the bound";
    }
    if ( n >= 3 && n <= 10 &&
         static_cast<std::int64_t>( count_wvg_t2( n, 1, { 4, 12 } ).wvg_count ) != single_row_weighted_formula( n ) )
    {
      return "wm(" + std::to_string( n ) + ", 2, 1) differs from 2(n-2)^2 + 2";
    }
  }
  return {};
}

std::string listed_instances_check()
{
  std::vector<std::string> failures;
  const auto items = listed_instances();
  for ( std::size_t i = 0; i < items.size(); ++i )
  {
    if ( auto why = check_listed_instance( items[i] ); !why.empty() )
    {
      failures.push_back( "(" + std::to_string( i + 1 ) + "): " + why );
    }
  }
  return join( failures );
}

// All profiles reachable from p by dropping a member or demoting one to the next class.
std::set<std::vector<int>> generator_closure( const coalition_profile& p, const class_sizes& sizes )
{
  std::set<std::vector<int>> seen{ p.counts() };
  std::vector<std::vector<int>> stack{ p.counts() };
  while ( !stack.empty() )
  {
    const auto cur = stack.back();
    stack.pop_back();
    for ( std::size_t i = 0; i < cur.size(); ++i )
    {
      if ( cur[i] == 0 )
      {
        continue;
      }
      auto drop = cur;
      --drop[i];
      if ( seen.insert( drop ).second )
      {
        stack.push_back( drop );
      }
      if ( i + 1 < cur.size() && cur[i + 1] < sizes[i + 1] )
      {
        auto demote = cur;
        --demote[i];
        ++demote[i + 1];
        if ( seen.insert( demote ).second )
        {
          stack.push_back( demote );
        }
      }
    }
  }
  return seen;
}

std::string shift_order_property()
{
  for ( std::size_t t = 1; t <= 4; ++t )
  {
    std::vector<int> n( t, 1 );
    while ( true )
    {
      const class_sizes sizes( n );
      profile_space space( sizes );
      for ( std::size_t i = 0; i < space.size(); ++i )
      {
        const auto p = space.at( i );
        const auto below = generator_closure( p, sizes );
        for ( std::size_t j = 0; j < space.size(); ++j )
        {
          const auto q = space.at( j );
          const auto rel = shift_compare( p, q );
          const bool prefix = rel == shift_ordering::greater_eq || rel == shift_ordering::equal;
          if ( prefix != below.count( q.counts() ) > 0 )
          {
            return "shift order disagrees for " + to_string( p ) + " and " + to_string( q );
          }
        }
      }
      std::size_t k = 0;
      while ( k < t && n[k] == 4 )
      {
        n[k++] = 1;
      }
      if ( k == t )
      {
        break;
      }
      ++n[k];
    }
  }
  return {};
}

std::string weightedness_formulations()
{
  for ( int n = 2; n <= 8; ++n )
  {
    for ( const auto& g : enumerate_csg_t2( n ) )
    {
      if ( is_weighted( g ).weighted != is_weighted_quota_free( g ) )
      {
        return "formulations disagree at n = " + std::to_string( n );
      }
    }
  }
  return {};
}

std::string popoviciu_property()
{
  for ( std::int64_t a = 2; a <= 30; ++a )
  {
    for ( std::int64_t b = a + 1; b <= 30; ++b )
    {
      if ( std::gcd( a, b ) != 1 )
      {
        continue;
      }
      for ( std::int64_t k = 1; k < a * b; ++k )
      {
        if ( k % a == 0 || k % b == 0 )
        {
          continue;
        }
        const auto [x, y] = popoviciu_dual( k, a, b );
        if ( x == y )
        {
          return "both or neither representable for k = " + std::to_string( k ) + " with " + std::to_string( a ) + ", " +
                 std::to_string( b );
        }
      }
    }
  }
  return {};
}

std::string two_weight_family_minimality()
{
  oracle_options opts;
  opts.voter_cap = 32;
  for ( auto [a, b] : std::vector<std::pair<int, int>>{ { 1, 2 }, { 2, 3 }, { 3, 4 }, { 2, 5 } } )
  {
    const auto f = build_two_weight_family( a, b, 2 * a + 1, 2 * b + 1 );
    const auto c = min_per_voter( f.game, opts );
    if ( !c.has_minimum || *c.minimum != expand( f.representation, f.sizes ) )
    {
      return "family (" + std::to_string( a ) + ", " + std::to_string( b ) + ") is not the minimum";
    }
  }
  return {};
}

std::string property_suites()
{
  std::vector<std::string> failures;
  for ( const auto& check : { shift_order_property, weightedness_formulations, popoviciu_property, two_weight_family_minimality } )
  {
    if ( auto why = check(); !why.empty() )
    {
      failures.push_back( why );
    }
  }
  return join( failures );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Acceptance criteria" };
  bool full = false;
  app.add_flag( "--full", full, "Include the five larger three-type instances" );
  CLI11_PARSE( app, argc, argv );

  struct criterion
  {
    std::string name;
    std::string ( *check )();
    bool heavy = false;
  };
  const std::vector<criterion> criteria{
      { "1 Canonicalization", canonicalization },
      { "2 Two-type exact algorithm", two_type_algorithm },
      { "3 Three-type counterexample", check_three_type_counterexample },
      { "4 Four-type counterexample", check_four_type_counterexample },
      { "5 Muroga instance", check_muroga },
      { "6 Propositions", propositions },
      { "7 Enumeration formulas", enumeration_formulas },
      { "8 Larger three-type instances", listed_instances_check, true },
      { "9 Property suites", property_suites } };

  bool all = true;
  for ( const auto& c : criteria )
  {
    if ( c.heavy && !full )
    {
      std::cout << c.name << ": SKIPPED (needs --full)" << std::endl;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto item = run_check( c.name, c.check );
    const auto seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    std::cout << item << " [" << seconds << " s]" << std::endl;
    all = all && item.passed;
  }
  return all ? 0 : 1;
}
