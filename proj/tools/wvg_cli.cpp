#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wvg/wvg.hpp>

using namespace wvg;

namespace {

struct global_flags
{
  bool json = false;
  unsigned threads = 1;
};

std::string read_input( const std::string& path )
{
  if ( path == "-" )
  {
    return { std::istreambuf_iterator<char>( std::cin ), std::istreambuf_iterator<char>() };
  }
  std::ifstream in( path );
  if ( !in )
  {
    throw parse_error( "cannot open " + path );
  }
  return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
}

game_document load( const std::string& path )
{
  auto doc = parse_document( read_input( path ) );
  for ( const auto& w : doc.warnings )
  {
    std::cerr << "warning: " << w << "\n";
  }
  return doc;
}

void print_json( const json& j ) { std::cout << j.dump( 2 ) << "\n"; }

std::string render_partition( const type_partition& p )
{
  std::string s;
  for ( std::size_t i = 0; i < p.classes.size(); ++i )
  {
    s += ( i ? " | " : "" );
    for ( std::size_t k = 0; k < p.classes[i].size(); ++k )
    {
      s += ( k ? " " : "" ) + std::to_string( p.classes[i][k] + 1 );
    }
  }
  return s;
}

std::string render( const std::vector<rational>& v )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    s += ( i ? ", " : "" ) + v[i].get_str();
  }
  return s + ")";
}

/// Typed representation matching the canonical classes of a weights document: the weight of the
/// first member of each class.
typed_representation typed_of( const integer_representation& rep, const type_partition& p )
{
  typed_representation out{ rep.quota, {} };
  for ( const auto& c : p.classes )
  {
    out.class_weights.push_back( rep.weights[c.front()] );
  }
  return out;
}

void emit_game( const global_flags& g, const complete_game& game, const json& extra, const std::string& human )
{
  if ( g.json )
  {
    json j{ { "game", to_json( game ) } };
    j.update( extra );
    print_json( j );
    return;
  }
  print_json( to_json( game ) );
  std::cerr << human;
}

int cmd_canon( const global_flags& g, const std::string& path )
{
  const auto doc = load( path );
  const auto c = canonical_of( doc );
  if ( g.json )
  {
    print_json( json{ { "game", to_json( c.game, doc.name, doc.source ) },
                      { "partition", to_json( c.partition ) },
                      { "warnings", doc.warnings } } );
    return 0;
  }
  print_json( to_json( c.game, doc.name, doc.source ) );
  std::cerr << "partition: " << render_partition( c.partition ) << "\n";
  return 0;
}

int cmd_minrep( const global_flags& g, const std::string& path, int voter_cap, std::optional<weight_t> cap )
{
  const auto c = canonical_of( load( path ) );
  const auto& game = c.game;
  std::optional<typed_representation> typed;
  std::optional<integer_representation> per_voter;
  std::string method;
  bool exists = true;
  if ( game.types() == 1 )
  {
    typed = min_rep_t1( game.voters(), game.winners().front()[0] );
    per_voter = expand( *typed, game.sizes() );
    method = "closed form";
  }
  else if ( game.types() == 2 )
  {
    const auto r = min_rep_t2( game );
    typed = r.typed;
    per_voter = r.per_voter;
    method = game.winners().size() == 1 ? "closed form" : "tight triples";
  }
  else
  {
    oracle_options opts;
    opts.voter_cap = voter_cap;
    opts.weight_cap = cap;
    const auto r = min_per_voter( game, opts );
    exists = r.has_minimum;
    per_voter = r.minimum;
    typed = r.typed_minimum;
    method = "integer search";
  }
  if ( g.json )
  {
    json j{ { "method", method }, { "has_minimum", exists } };
    j["typed"] = typed ? to_json( *typed ) : json();
    j["weights"] = per_voter ? to_json( *per_voter ) : json();
    print_json( j );
    return 0;
  }
  if ( typed )
  {
    std::cout << "typed: " << to_string( *typed ) << "\n";
  }
  else
  {
    std::cout << "typed: none\n";
  }
  if ( exists && per_voter )
  {
    std::cout << "weights: " << to_string( *per_voter ) << "\n";
  }
  else
  {
    std::cout << "weights: no minimum integer representation\n";
  }
  std::cout << "method: " << method << "\n";
  return 0;
}

int cmd_minsum( const global_flags& g, const std::string& path, bool preserve_types, std::optional<weight_t> cap, int voter_cap )
{
  const auto c = canonical_of( load( path ) );
  oracle_options opts;
  opts.weight_cap = cap;
  opts.voter_cap = voter_cap;
  if ( preserve_types )
  {
    const auto reps = min_sum_typed( c.game, opts );
    const weight_t sum = reps.empty() ? 0 : typed_total( reps.front(), c.game.sizes() );
    if ( g.json )
    {
      json list = json::array();
      for ( const auto& r : reps )
      {
        list.push_back( to_json( r ) );
      }
      print_json( json{ { "sum", sum }, { "representations", list } } );
      return 0;
    }
    std::cout << "sum: " << sum << "\n";
    for ( const auto& r : reps )
    {
      std::cout << to_string( r ) << "\n";
    }
    return 0;
  }
  const auto r = min_sum_per_voter( c.game, opts );
  if ( g.json )
  {
    json list = json::array();
    for ( const auto& w : r.witnesses )
    {
      list.push_back( to_json( w ) );
    }
    print_json( json{ { "sum", r.sum }, { "representations", list }, { "truncated", r.truncated } } );
    return 0;
  }
  std::cout << "sum: " << r.sum << "\n";
  for ( const auto& w : r.witnesses )
  {
    std::cout << to_string( w ) << "\n";
  }
  if ( r.truncated )
  {
    std::cout << "(list truncated)\n";
  }
  return 0;
}

int cmd_weighted( const global_flags& g, const std::string& path, bool minima )
{
  const auto c = canonical_of( load( path ) );
  const auto r = is_weighted( c.game );
  std::vector<fractional_minimum> mins;
  if ( minima && r.weighted )
  {
    mins = fractional_minima( c.game );
  }
  if ( g.json )
  {
    json j{ { "weighted", r.weighted } };
    if ( r.witness )
    {
      j["witness"] = to_json( r.witness->values );
    }
    if ( !mins.empty() )
    {
      json m = json::object();
      for ( const auto& f : mins )
      {
        m[f.objective] = json{ { "value", to_json( f.solution.objective_value ) }, { "solution", to_json( f.solution.values ) } };
      }
      j["minima"] = m;
    }
    print_json( j );
    return 0;
  }
  std::cout << ( r.weighted ? "weighted" : "not weighted" ) << "\n";
  if ( r.witness )
  {
    std::cout << "witness (w_1, ..., w_t, q): " << render( r.witness->values ) << "\n";
  }
  for ( const auto& f : mins )
  {
    std::cout << "min " << f.objective << " = " << f.solution.objective_value.get_str() << " at " << render( f.solution.values ) << "\n";
  }
  return 0;
}

int cmd_enum( const global_flags& g, int n, bool t2, std::optional<std::size_t> r, int max_n )
{
  if ( !t2 )
  {
    throw precondition_error( "only two-type enumeration is available; pass --t2" );
  }
  const std::uint64_t csg = count_csg_t2( n, r, g.threads );
  std::optional<std::uint64_t> wvg;
  if ( n <= max_n )
  {
    wvg = count_wvg_t2( n, r, { g.threads, max_n } ).wvg_count;
  }
  if ( g.json )
  {
    json j{ { "n", n }, { "t", 2 }, { "csg", csg } };
    j["r"] = r ? json( *r ) : json();
    j["wvg"] = wvg ? json( *wvg ) : json();
    if ( !r )
    {
      j["csg_formula"] = fibonacci_csg_formula( n ).get_str();
      j["wvg_bound"] = to_json( wm_t2_bound( n ) );
    }
    else if ( *r == 1 )
    {
      j["wvg_formula"] = single_row_weighted_formula( n );
    }
    print_json( j );
    return 0;
  }
  std::cout << "csg: " << csg << "\n";
  if ( wvg )
  {
    std::cout << "wvg: " << *wvg << "\n";
  }
  else
  {
    std::cout << "wvg: skipped (n > " << max_n << ")\n";
  }
  if ( !r )
  {
    std::cout << "csg formula: " << fibonacci_csg_formula( n ).get_str() << "\n";
    std::cout << "wvg bound: " << wm_t2_bound( n ).get_str() << "\n";
  }
  else if ( *r == 1 )
  {
    std::cout << "wvg formula: " << single_row_weighted_formula( n ) << "\n";
  }
  return 0;
}

json params_json( const proposition_params& p ) { return json{ { "a", p.a }, { "b", p.b }, { "levels", p.levels } }; }

std::string render_levels( const std::vector<std::int64_t>& v )
{
  std::string s;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    s += ( i ? " " : "" ) + std::to_string( v[i] );
  }
  return s;
}

void print_family( const global_flags& g, const family_instance& f )
{
  json extra{ { "representation", to_json( f.representation ) } };
  std::string human = "representation: " + to_string( f.representation ) + "\n";
  if ( !f.coefficients.empty() )
  {
    extra["coefficients"] = f.coefficients;
    human += "coefficients: " + render_levels( f.coefficients ) + "\n";
  }
  emit_game( g, f.game, extra, human );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Weighted voting games: canonical forms, minimum representations, counterexamples" };
  app.require_subcommand( 1 );
  global_flags g;
  app.add_flag( "--json", g.json, "Machine-readable output with exact rationals" );
  app.add_option( "--threads", g.threads, "Worker threads for enumeration and searches" )->check( CLI::Range( 1u, 256u ) );

  std::string input = "-";
  int voter_cap = 12;
  std::optional<weight_t> bounds;

  auto* canon = app.add_subcommand( "canon", "Canonical typed form of a game document" );
  canon->add_option( "input", input, "Document path or - for stdin" );

  auto* minrep = app.add_subcommand( "minrep", "Minimum integer representation" );
  minrep->add_option( "input", input, "Document path or - for stdin" );
  minrep->add_option( "--voter-cap", voter_cap, "Largest voter count for per-voter search" );
  minrep->add_option( "--bounds", bounds, "Cap on every weight in the integer search" );

  bool preserve = false;
  auto* minsum = app.add_subcommand( "minsum", "Minimum-sum integer representations" );
  minsum->add_option( "input", input, "Document path or - for stdin" );
  minsum->add_flag( "--preserve-types", preserve, "Equal weights within each class" );
  minsum->add_option( "--bounds", bounds, "Cap on every weight in the integer search" );
  minsum->add_option( "--voter-cap", voter_cap, "Largest voter count for per-voter search" );

  bool minima = false;
  auto* weighted = app.add_subcommand( "weighted", "Decide weightedness by exact LP" );
  weighted->add_option( "input", input, "Document path or - for stdin" );
  weighted->add_flag( "--minima", minima, "Also print the fractional minima" );

  int n = 0, max_n = 10;
  bool t2 = false;
  std::optional<std::size_t> rows;
  auto* enumerate = app.add_subcommand( "enum", "Count complete and weighted games" );
  enumerate->add_option( "n", n, "Number of voters" )->required()->check( CLI::Range( 2, 30 ) );
  enumerate->add_flag( "--t2", t2, "Two types of voters" );
  enumerate->add_option( "--r", rows, "Number of shift-minimal winning rows" );
  enumerate->add_option( "--max-n", max_n, "Largest n for the weighted count" );

  auto* frob = app.add_subcommand( "frobenius", "Two-coin Frobenius arithmetic and Proposition parameters" );
  frob->require_subcommand( 1 );
  std::int64_t a = 0, b = 0, k = 0;
  std::vector<std::int64_t> levels;
  std::size_t t = 0, limit = 0;
  auto* f_number = frob->add_subcommand( "number", "Largest value not of the form ua + vb" );
  f_number->add_option( "a", a )->required();
  f_number->add_option( "b", b )->required();
  auto* f_count = frob->add_subcommand( "count", "Number of non-representable values" );
  f_count->add_option( "a", a )->required();
  f_count->add_option( "b", b )->required();
  std::vector<std::int64_t> denominations;
  auto* f_repr = frob->add_subcommand( "representable", "Is k a non-negative combination of the denominations" );
  f_repr->add_option( "k", k )->required();
  f_repr->add_option( "denominations", denominations )->required();
  auto* f_pop = frob->add_subcommand( "popoviciu", "Representability of k and ab - a - b - k" );
  f_pop->add_option( "k", k )->required();
  f_pop->add_option( "a", a )->required();
  f_pop->add_option( "b", b )->required();
  auto* f_check = frob->add_subcommand( "proposition-check", "Check Proposition parameters a b l_1 ... l_t" );
  f_check->add_option( "a", a )->required();
  f_check->add_option( "b", b )->required();
  f_check->add_option( "levels", levels )->required();
  auto* f_search = frob->add_subcommand( "proposition-search", "All valid levels for a, b, t" );
  f_search->add_option( "a", a )->required();
  f_search->add_option( "b", b )->required();
  f_search->add_option( "t", t )->required();
  f_search->add_option( "--limit", limit, "Stop after this many tuples (0 = all)" );

  auto* construct = app.add_subcommand( "construct", "Build a family or counterexample game" );
  construct->require_subcommand( 1 );
  std::int64_t q = 0, w1 = 0;
  int n1 = 0, n2 = 0;
  std::vector<std::int64_t> coins;
  std::vector<int> sizes;
  auto* c_t3 = construct->add_subcommand( "t3", "Three-type game without a minimum representation" );
  c_t3->add_option( "a", a )->required();
  c_t3->add_option( "b", b )->required();
  c_t3->add_option( "q", q )->required();
  c_t3->add_option( "w1", w1 )->required();
  auto* c_t4 = construct->add_subcommand( "t4", "Four-type game with two minimum-sum typed representations" );
  auto* c_prop = construct->add_subcommand( "proposition", "Proposition game for a b l_1 ... l_t" );
  c_prop->add_option( "a", a )->required();
  c_prop->add_option( "b", b )->required();
  c_prop->add_option( "levels", levels )->required();
  auto* c_two = construct->add_subcommand( "two-weight", "[ab; b (n1), a (n2)]" );
  c_two->add_option( "a", a )->required();
  c_two->add_option( "b", b )->required();
  c_two->add_option( "n1", n1 )->required();
  c_two->add_option( "n2", n2 )->required();
  auto* c_lcm = construct->add_subcommand( "lcm", "Least-common-multiple family" );
  c_lcm->add_option( "--a", coins, "Weights a_1 > ... > a_t" )->required();
  c_lcm->add_option( "--n", sizes, "Class sizes" )->required();
  auto* c_product = construct->add_subcommand( "product", "Product family" );
  c_product->add_option( "--a", coins, "Weights a_1 > ... > a_t" )->required();
  c_product->add_option( "--n", sizes, "Class sizes" )->required();
  int null_voters = 1;
  auto* c_null = construct->add_subcommand( "null-extend", "Append a class of null voters to a weights document" );
  c_null->add_option( "input", input, "Weights document path or - for stdin" );
  c_null->add_option( "k", null_voters, "Number of null voters" );

  bool full = false;
  auto* verify = app.add_subcommand( "verify-paper", "Check every published example" );
  verify->add_flag( "--full", full, "Include the five larger three-type instances" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    return app.exit( e ) == 0 ? 0 : 1;
  }

  try
  {
    if ( *canon )
    {
      return cmd_canon( g, input );
    }
    if ( *minrep )
    {
      return cmd_minrep( g, input, voter_cap, bounds );
    }
    if ( *minsum )
    {
      return cmd_minsum( g, input, preserve, bounds, voter_cap );
    }
    if ( *weighted )
    {
      return cmd_weighted( g, input, minima );
    }
    if ( *enumerate )
    {
      return cmd_enum( g, n, t2, rows, max_n );
    }
    if ( *f_number || *f_count )
    {
      const std::int64_t v = *f_number ? frobenius_number( a, b ) : count_nonrepresentable( a, b );
      g.json ? print_json( json{ { "a", a }, { "b", b }, { *f_number ? "number" : "count", v } } ) : void( std::cout << v << "\n" );
      return 0;
    }
    if ( *f_repr )
    {
      const bool v = representable( k, denominations );
      g.json ? print_json( json{ { "k", k }, { "representable", v } } ) : void( std::cout << ( v ? "true" : "false" ) << "\n" );
      return 0;
    }
    if ( *f_pop )
    {
      const auto [first, second] = popoviciu_dual( k, a, b );
      if ( g.json )
      {
        print_json( json{ { "k", k }, { "dual", a * b - a - b - k }, { "k_representable", first }, { "dual_representable", second } } );
      }
      else
      {
        std::cout << k << ": " << ( first ? "representable" : "not representable" ) << "\n"
                  << a * b - a - b - k << ": " << ( second ? "representable" : "not representable" ) << "\n";
      }
      return 0;
    }
    if ( *f_check )
    {
      const proposition_params p{ a, b, levels };
      const auto r = check_proposition_params( p );
      if ( g.json )
      {
        print_json( json{ { "params", params_json( p ) },
                          { "ok", r.ok() },
                          { "levels", r.levels },
                          { "subsets", r.subsets },
                          { "total", r.total },
                          { "failures", r.failures } } );
      }
      else
      {
        std::cout << ( r.ok() ? "ok" : "rejected" ) << "\n";
        for ( const auto& f : r.failures )
        {
          std::cout << "  " << f << "\n";
        }
      }
      return 0;
    }
    if ( *f_search )
    {
      const auto found = search_proposition_params( a, b, t, limit, g.threads );
      if ( g.json )
      {
        json list = json::array();
        for ( const auto& p : found )
        {
          list.push_back( p.levels );
        }
        print_json( json{ { "a", a }, { "b", b }, { "t", t }, { "levels", list } } );
      }
      else
      {
        for ( const auto& p : found )
        {
          std::cout << render_levels( p.levels ) << "\n";
        }
        std::cout << found.size() << " tuple(s)\n";
      }
      return 0;
    }
    if ( *c_t3 )
    {
      emit_game( g, build_t3_counterexample( a, b, q, w1 ), json::object(), "" );
      return 0;
    }
    if ( *c_t4 )
    {
      emit_game( g, build_t4_counterexample(), json::object(), "" );
      return 0;
    }
    if ( *c_prop )
    {
      const proposition_params p{ a, b, levels };
      const auto game = build_proposition_game( p );
      json reps = json::array();
      std::string human;
      for ( const auto& r : proposition_representations( p ) )
      {
        reps.push_back( to_json( r ) );
        human += "representation: " + to_string( r ) + "\n";
      }
      emit_game( g, game, json{ { "representations", reps } }, human );
      return 0;
    }
    if ( *c_two )
    {
      print_family( g, build_two_weight_family( a, b, n1, n2 ) );
      return 0;
    }
    if ( *c_lcm || *c_product )
    {
      print_family( g, *c_lcm ? build_lcm_family( coins, sizes ) : build_product_family( coins, sizes ) );
      return 0;
    }
    if ( *c_null )
    {
      const auto doc = load( input );
      if ( !doc.weights )
      {
        throw precondition_error( "null-extend needs a weights document" );
      }
      const auto c = canonical_of( doc );
      print_family( g, extend_with_null_class( typed_of( *doc.weights, c.partition ), c.game.sizes(), null_voters ) );
      return 0;
    }
    if ( *verify )
    {
      const auto report = verify_paper( full );
      if ( g.json )
      {
        json items = json::array();
        for ( const auto& i : report.items )
        {
          items.push_back( json{ { "name", i.name }, { "passed", i.passed }, { "detail", i.detail } } );
        }
        print_json( json{ { "items", items }, { "all_passed", report.all_passed() } } );
      }
      else
      {
        for ( const auto& i : report.items )
        {
          std::cout << i << "\n";
        }
      }
      return report.all_passed() ? 0 : 1;
    }
  }
  catch ( const wvg::error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>( e.kind() );
  }
  catch ( const std::exception& e )
  {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>( error_kind::internal );
  }
  return 0;
}
