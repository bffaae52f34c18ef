#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "complete_game.hpp"
#include "errors.hpp"
#include "ilp.hpp"
#include "representation.hpp"
#include "weightedness.hpp"

namespace wvg {

struct oracle_options
{
  ilp_options ilp;
  /// Optional cap on every weight (typed class weight or per-voter weight).
  std::optional<weight_t> weight_cap;
  /// Per-voter classification refuses games with more voters than this.
  int voter_cap = 12;
  /// Upper limit on listed representations; longer lists are truncated and flagged.
  std::size_t max_results = 4096;
};

namespace detail {

inline weight_t to_weight( const big_integer& z ) { return to_int64( z ); }

inline void add_caps( rational_lp& lp, std::size_t weight_vars, const std::optional<weight_t>& cap )
{
  if ( !cap )
  {
    return;
  }
  for ( std::size_t k = 0; k < weight_vars; ++k )
  {
    add_bound( lp, k, relation::less_eq, rational( static_cast<long>( *cap ) ) );
  }
}

/// Completes integer class weights with the smallest admissible quota, max losing weight + 1.
inline std::optional<typed_representation> with_minimal_quota( std::vector<weight_t> w,
                                                               const std::vector<coalition_profile>& winners,
                                                               const std::vector<coalition_profile>& losers )
{
  const auto gap = gap_of( w, winners, losers );
  typed_representation rep{ std::max<weight_t>( gap.max_losing + 1, 1 ), std::move( w ) };
  for ( std::size_t i = 0; i + 1 < rep.class_weights.size(); ++i )
  {
    if ( rep.class_weights[i] < rep.class_weights[i + 1] + 1 )
    {
      return std::nullopt;
    }
  }
  if ( rep.class_weights.back() < 0 || rep.quota > gap.min_winning )
  {
    return std::nullopt;
  }
  return rep;
}

inline std::vector<std::size_t> first_indices( std::size_t n )
{
  std::vector<std::size_t> v( n );
  for ( std::size_t k = 0; k < n; ++k )
  {
    v[k] = k;
  }
  return v;
}

} // namespace detail

/// Integer program over (w_1, ..., w_t, q) with one weight per class.
inline rational_lp typed_program( const complete_game& game, const std::vector<coalition_profile>& losers,
                                  std::vector<rational> objective, const std::optional<weight_t>& cap = {} )
{
  auto lp = quota_formulation( game, losers, std::move( objective ) );
  detail::add_caps( lp, game.types(), cap );
  return lp;
}

/// All typed representations minimizing Σ n_i w_i, each with its minimal quota, in decreasing
/// lexicographic order of the weights.
inline std::vector<typed_representation> min_sum_typed( const complete_game& game, const oracle_options& opts = {} )
{
  const auto losers = shift_maximal_losing( game );
  const auto lp = typed_program( game, losers, lp_objective( game.sizes(), "sum" ), opts.weight_cap );
  const auto best = minimize_integer( lp, opts.ilp );
  if ( best.status != lp_status::optimal )
  {
    if ( !is_weighted( game, losers ).weighted )
    {
      throw not_weighted_error( "game is not weighted" );
    }
    throw search_limit_error( "no typed representation within the weight cap" );
  }
  std::vector<typed_representation> out;
  for ( const auto& p : optimal_face( lp, best.objective_value, detail::first_indices( game.types() ), opts.ilp ) )
  {
    std::vector<weight_t> w;
    for ( const auto& z : p )
    {
      w.push_back( detail::to_weight( z ) );
    }
    auto rep = detail::with_minimal_quota( std::move( w ), game.winners(), losers );
    if ( !rep )
    {
      throw consistency_error( "optimal face point does not realize the game" );
    }
    out.push_back( std::move( *rep ) );
  }
  std::sort( out.begin(), out.end(), []( const auto& a, const auto& b ) { return a.class_weights > b.class_weights; } );
  return out;
}

struct typed_minimum_result
{
  /// Smallest integer value of each w_i over all typed representations (within the cap).
  std::vector<weight_t> lower_bounds;
  /// Set iff lower_bounds itself is a representation; then it is the component-wise minimum.
  std::optional<typed_representation> minimum;
};

inline typed_minimum_result min_typed( const complete_game& game, const oracle_options& opts = {} )
{
  const auto losers = shift_maximal_losing( game );
  const auto lp = typed_program( game, losers, std::vector<rational>( game.types() + 1, rational( 0 ) ), opts.weight_cap );
  typed_minimum_result out;
  for ( std::size_t i = 0; i < game.types(); ++i )
  {
    const auto v = minimize_variable( lp, i, opts.ilp );
    if ( !v )
    {
      if ( !is_weighted( game, losers ).weighted )
      {
        throw not_weighted_error( "game is not weighted" );
      }
      throw search_limit_error( "no typed representation within the weight cap" );
    }
    out.lower_bounds.push_back( detail::to_weight( *v ) );
  }
  out.minimum = detail::with_minimal_quota( out.lower_bounds, game.winners(), losers );
  return out;
}

/// Voters are numbered class by class; inside class i the variables are sorted non-increasing, so
/// variable (i, 0) is the heaviest member and (i, n_i - 1) the lightest.
class per_voter_layout
{
public:
  explicit per_voter_layout( const class_sizes& sizes ) : sizes_( sizes )
  {
    std::size_t k = 0;
    for ( std::size_t i = 0; i < sizes.types(); ++i )
    {
      offset_.push_back( k );
      k += static_cast<std::size_t>( sizes[i] );
    }
    voters_ = k;
  }

  std::size_t voters() const noexcept { return voters_; }
  std::size_t quota() const noexcept { return voters_; }
  std::size_t at( std::size_t cls, int pos ) const { return offset_[cls] + static_cast<std::size_t>( pos ); }

private:
  class_sizes sizes_;
  std::vector<std::size_t> offset_;
  std::size_t voters_ = 0;
};

/// Integer program over sorted per-voter weights and q. A winning profile must reach q with the
/// lightest members of each class, a losing one must stay below with the heaviest.
inline rational_lp per_voter_program( const complete_game& game, const std::vector<coalition_profile>& losers,
                                      const std::optional<weight_t>& cap = {} )
{
  const auto& sizes = game.sizes();
  const per_voter_layout lay( sizes );
  const std::size_t d = lay.voters() + 1;
  rational_lp lp;
  lp.variables = d;
  lp.objective.assign( d, rational( 0 ) );
  for ( const auto& x : game.winners() )
  {
    std::vector<rational> row( d, rational( 0 ) );
    for ( std::size_t i = 0; i < sizes.types(); ++i )
    {
      for ( int k = sizes[i] - x[i]; k < sizes[i]; ++k )
      {
        row[lay.at( i, k )] = 1;
      }
    }
    row[lay.quota()] = -1;
    lp.add( std::move( row ), relation::greater_eq, 0 );
  }
  for ( const auto& y : losers )
  {
    std::vector<rational> row( d, rational( 0 ) );
    for ( std::size_t i = 0; i < sizes.types(); ++i )
    {
      for ( int k = 0; k < y[i]; ++k )
      {
        row[lay.at( i, k )] = 1;
      }
    }
    row[lay.quota()] = -1;
    lp.add( std::move( row ), relation::less_eq, -1 );
  }
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    for ( int k = 0; k + 1 < sizes[i]; ++k )
    {
      std::vector<rational> row( d, rational( 0 ) );
      row[lay.at( i, k )] = 1;
      row[lay.at( i, k + 1 )] = -1;
      lp.add( std::move( row ), relation::greater_eq, 0 );
    }
    if ( i + 1 < sizes.types() )
    {
      std::vector<rational> row( d, rational( 0 ) );
      row[lay.at( i, sizes[i] - 1 )] = 1;
      row[lay.at( i + 1, 0 )] = -1;
      lp.add( std::move( row ), relation::greater_eq, 1 );
    }
  }
  detail::add_bound( lp, lay.at( sizes.types() - 1, sizes[sizes.types() - 1] - 1 ), relation::greater_eq, 0 );
  detail::add_caps( lp, lay.voters(), cap );
  return lp;
}

namespace detail {

/// Minimal quota for sorted per-voter weights: heaviest-member weight of L^s plus one.
inline weight_t per_voter_quota( const class_sizes& sizes, const std::vector<weight_t>& sorted,
                                 const std::vector<coalition_profile>& losers )
{
  const per_voter_layout lay( sizes );
  weight_t worst = -1;
  for ( const auto& y : losers )
  {
    weight_t s = 0;
    for ( std::size_t i = 0; i < sizes.types(); ++i )
    {
      for ( int k = 0; k < y[i]; ++k )
      {
        s += sorted[lay.at( i, k )];
      }
    }
    worst = std::max( worst, s );
  }
  return std::max<weight_t>( worst + 1, 1 );
}

/// Every distinct within-class rearrangement of sorted per-voter weights, up to `limit`.
inline std::vector<std::vector<weight_t>> arrangements( const class_sizes& sizes, const std::vector<weight_t>& sorted,
                                                        std::size_t limit, bool& truncated )
{
  const per_voter_layout lay( sizes );
  std::vector<std::vector<std::vector<weight_t>>> per_class( sizes.types() );
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    std::vector<weight_t> block( sorted.begin() + static_cast<std::ptrdiff_t>( lay.at( i, 0 ) ),
                                 sorted.begin() + static_cast<std::ptrdiff_t>( lay.at( i, 0 ) + sizes[i] ) );
    std::sort( block.begin(), block.end(), std::greater<>() );
    do
    {
      per_class[i].push_back( block );
      if ( per_class[i].size() > limit )
      {
        truncated = true;
        break;
      }
    } while ( std::prev_permutation( block.begin(), block.end() ) );
  }
  std::vector<std::vector<weight_t>> out{ {} };
  for ( const auto& options : per_class )
  {
    std::vector<std::vector<weight_t>> next;
    for ( const auto& prefix : out )
    {
      for ( const auto& block : options )
      {
        if ( next.size() >= limit )
        {
          truncated = true;
          break;
        }
        auto w = prefix;
        w.insert( w.end(), block.begin(), block.end() );
        next.push_back( std::move( w ) );
      }
    }
    out = std::move( next );
  }
  return out;
}

inline bool componentwise_le( const std::vector<weight_t>& a, const std::vector<weight_t>& b )
{
  for ( std::size_t k = 0; k < a.size(); ++k )
  {
    if ( a[k] > b[k] )
    {
      return false;
    }
  }
  return true;
}

} // namespace detail

struct min_sum_result
{
  weight_t sum = 0;
  std::vector<integer_representation> witnesses;
  /// The witness list hit oracle_options::max_results.
  bool truncated = false;
};

/// Minimum total weight over per-voter integer representations and every representation
/// attaining it (within-class rearrangements listed separately), each with its minimal quota.
inline min_sum_result min_sum_per_voter( const complete_game& game, const oracle_options& opts = {} )
{
  const auto losers = shift_maximal_losing( game );
  const per_voter_layout lay( game.sizes() );
  auto lp = per_voter_program( game, losers, opts.weight_cap );
  for ( std::size_t k = 0; k < lay.voters(); ++k )
  {
    lp.objective[k] = 1;
  }
  const auto best = minimize_integer( lp, opts.ilp );
  if ( best.status != lp_status::optimal )
  {
    if ( !is_weighted( game, losers ).weighted )
    {
      throw not_weighted_error( "game is not weighted" );
    }
    throw search_limit_error( "no per-voter representation within the weight cap" );
  }
  min_sum_result out;
  out.sum = detail::to_weight( best.objective_value.get_num() );
  for ( const auto& p : optimal_face( lp, best.objective_value, detail::first_indices( lay.voters() ), opts.ilp ) )
  {
    std::vector<weight_t> sorted;
    for ( const auto& z : p )
    {
      sorted.push_back( detail::to_weight( z ) );
    }
    const weight_t q = detail::per_voter_quota( game.sizes(), sorted, losers );
    for ( auto& w : detail::arrangements( game.sizes(), sorted, opts.max_results, out.truncated ) )
    {
      if ( out.witnesses.size() >= opts.max_results )
      {
        out.truncated = true;
        break;
      }
      out.witnesses.push_back( { q, std::move( w ) } );
    }
  }
  std::sort( out.witnesses.begin(), out.witnesses.end(),
             []( const auto& a, const auto& b ) { return a.weights > b.weights; } );
  for ( const auto& w : out.witnesses )
  {
    if ( !realizes( game, w, losers ) )
    {
      throw consistency_error( "min-sum witness " + to_string( w ) + " does not realize the game" );
    }
  }
  return out;
}

struct representation_classification
{
  bool has_minimum = false;
  std::optional<integer_representation> minimum;
  bool has_minimum_preserving_types = false;
  std::optional<typed_representation> typed_minimum;
  /// Smallest weight any representation gives to the lightest member of each class.
  std::vector<weight_t> class_lower_bounds;
  /// Two incomparable representations when no minimum exists and a pair was found.
  std::vector<integer_representation> incomparable_pair;
  weight_t min_sum_value = 0;
  std::vector<integer_representation> min_sum_reps;
  std::vector<typed_representation> min_sum_typed_reps;
  bool truncated = false;
};

/// Per-voter classification. A component-wise minimum must not exceed any within-class
/// rearrangement of a representation, so it exists iff giving every member of class i the
/// smallest weight any representation gives to a member of class i is itself a representation.
inline representation_classification min_per_voter( const complete_game& game, const oracle_options& opts = {} )
{
  if ( game.voters() > opts.voter_cap )
  {
    throw precondition_error( "per-voter search is capped at " + std::to_string( opts.voter_cap ) + " voters, game has " +
                              std::to_string( game.voters() ) );
  }
  const auto losers = shift_maximal_losing( game );
  if ( !is_weighted( game, losers ).weighted )
  {
    throw not_weighted_error( "game is not weighted" );
  }
  const auto& sizes = game.sizes();
  const per_voter_layout lay( sizes );
  const auto lp = per_voter_program( game, losers, opts.weight_cap );

  representation_classification out;
  std::vector<integer_representation> minimizers;
  for ( std::size_t i = 0; i < sizes.types(); ++i )
  {
    auto probe = lp;
    probe.objective.assign( probe.variables, rational( 0 ) );
    probe.objective[lay.at( i, sizes[i] - 1 )] = 1;
    const auto r = minimize_integer( probe, opts.ilp );
    if ( r.status != lp_status::optimal )
    {
      throw search_limit_error( "no per-voter representation within the weight cap" );
    }
    out.class_lower_bounds.push_back( detail::to_weight( r.values[lay.at( i, sizes[i] - 1 )] ) );
    std::vector<weight_t> sorted;
    for ( std::size_t k = 0; k < lay.voters(); ++k )
    {
      sorted.push_back( detail::to_weight( r.values[k] ) );
    }
    minimizers.push_back( { detail::per_voter_quota( sizes, sorted, losers ), std::move( sorted ) } );
  }

  const auto typed = min_typed( game, opts );
  out.has_minimum_preserving_types = typed.minimum.has_value();
  out.typed_minimum = typed.minimum;

  if ( auto candidate = detail::with_minimal_quota( out.class_lower_bounds, game.winners(), losers ) )
  {
    out.has_minimum = true;
    out.minimum = expand( *candidate, sizes );
    if ( !out.has_minimum_preserving_types || *typed.minimum != *candidate )
    {
      throw consistency_error( "per-voter minimum exists but differs from the typed minimum" );
    }
  }
  else
  {
    bool truncated = false;
    std::vector<integer_representation> pool;
    for ( const auto& m : minimizers )
    {
      for ( auto& w : detail::arrangements( sizes, m.weights, 64, truncated ) )
      {
        pool.push_back( { m.quota, std::move( w ) } );
      }
    }
    for ( std::size_t a = 0; a < pool.size() && out.incomparable_pair.empty(); ++a )
    {
      for ( std::size_t b = a + 1; b < pool.size(); ++b )
      {
        if ( !detail::componentwise_le( pool[a].weights, pool[b].weights ) &&
             !detail::componentwise_le( pool[b].weights, pool[a].weights ) )
        {
          out.incomparable_pair = { pool[a], pool[b] };
          break;
        }
      }
    }
  }

  auto sums = min_sum_per_voter( game, opts );
  out.min_sum_value = sums.sum;
  out.min_sum_reps = std::move( sums.witnesses );
  out.truncated = sums.truncated;
  out.min_sum_typed_reps = min_sum_typed( game, opts );
  return out;
}

/// Independent two-type oracle: scans every (w_1, w_2) in a box and keeps the representations
/// (minimal quota) that are not dominated component-wise by another one in the box.
struct box_search_result
{
  std::vector<typed_representation> minimal;
  std::optional<typed_representation> minimum;
};

inline box_search_result box_search_t2( const complete_game& game, weight_t w1_max, weight_t w2_max )
{
  if ( game.types() != 2 )
  {
    throw precondition_error( "box search needs exactly two types" );
  }
  const auto losers = shift_maximal_losing( game );
  std::vector<typed_representation> valid;
  for ( weight_t w1 = 0; w1 <= w1_max; ++w1 )
  {
    for ( weight_t w2 = 0; w2 <= w2_max && w2 < w1; ++w2 )
    {
      if ( auto rep = detail::with_minimal_quota( { w1, w2 }, game.winners(), losers ) )
      {
        valid.push_back( *rep );
      }
    }
  }
  box_search_result out;
  for ( const auto& a : valid )
  {
    const bool dominated = std::any_of( valid.begin(), valid.end(), [&]( const auto& b ) {
      return b.class_weights != a.class_weights && detail::componentwise_le( b.class_weights, a.class_weights );
    } );
    if ( !dominated )
    {
      out.minimal.push_back( a );
    }
  }
  if ( out.minimal.size() == 1 &&
       std::all_of( valid.begin(), valid.end(), [&]( const auto& b ) {
         return detail::componentwise_le( out.minimal.front().class_weights, b.class_weights );
       } ) )
  {
    out.minimum = out.minimal.front();
  }
  return out;
}

} // namespace wvg
