#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wvg {

/// Sizes (n_1, ..., n_t) of the voter equivalence classes, strongest class first.
class class_sizes
{
public:
  class_sizes() = default;

  explicit class_sizes( std::vector<int> counts ) : counts_( std::move( counts ) )
  {
    if ( counts_.empty() )
    {
      throw precondition_error( "class sizes need at least one class" );
    }
    for ( std::size_t i = 0; i < counts_.size(); ++i )
    {
      if ( counts_[i] < 1 )
      {
        throw precondition_error( "class " + std::to_string( i + 1 ) + " has size " +
                                  std::to_string( counts_[i] ) + " < 1" );
      }
    }
  }

  class_sizes( std::initializer_list<int> counts ) : class_sizes( std::vector<int>( counts ) ) {}

  std::size_t types() const noexcept { return counts_.size(); }
  int voters() const noexcept { return std::accumulate( counts_.begin(), counts_.end(), 0 ); }
  int operator[]( std::size_t i ) const { return counts_[i]; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  friend bool operator==( const class_sizes&, const class_sizes& ) = default;

private:
  std::vector<int> counts_;
};

/// Coalition type (m_1, ..., m_t): m_i participating voters of class i.
class coalition_profile
{
public:
  coalition_profile() = default;
  explicit coalition_profile( std::vector<int> counts ) : counts_( std::move( counts ) ) {}
  coalition_profile( std::initializer_list<int> counts ) : counts_( counts ) {}

  std::size_t size() const noexcept { return counts_.size(); }
  int operator[]( std::size_t i ) const { return counts_[i]; }
  int& operator[]( std::size_t i ) { return counts_[i]; }
  const std::vector<int>& counts() const noexcept { return counts_; }
  int total() const noexcept { return std::accumulate( counts_.begin(), counts_.end(), 0 ); }

  friend bool operator==( const coalition_profile&, const coalition_profile& ) = default;
  /// Lexicographic order; canonical matrices list rows in decreasing order.
  friend auto operator<=>( const coalition_profile& a, const coalition_profile& b )
  {
    return a.counts_ <=> b.counts_;
  }

private:
  std::vector<int> counts_;
};

inline bool fits( const coalition_profile& p, const class_sizes& sizes )
{
  if ( p.size() != sizes.types() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    if ( p[i] < 0 || p[i] > sizes[i] )
    {
      return false;
    }
  }
  return true;
}

inline std::string to_string( const coalition_profile& p )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    s += ( i ? "," : "" ) + std::to_string( p[i] );
  }
  return s + ")";
}

inline std::ostream& operator<<( std::ostream& os, const coalition_profile& p ) { return os << to_string( p ); }

enum class shift_ordering
{
  less_eq,
  greater_eq,
  equal,
  incomparable
};

/// Shift order via prefix-sum dominance: a ⪰ b iff every prefix sum of a is at least the
/// corresponding prefix sum of b.
inline shift_ordering shift_compare( const coalition_profile& a, const coalition_profile& b )
{
  if ( a.size() != b.size() )
  {
    throw precondition_error( "shift_compare: dimension mismatch " + to_string( a ) + " vs " + to_string( b ) );
  }
  bool a_ge = true, b_ge = true;
  long sa = 0, sb = 0;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    sa += a[i];
    sb += b[i];
    if ( sa < sb )
    {
      a_ge = false;
    }
    if ( sb < sa )
    {
      b_ge = false;
    }
  }
  if ( a_ge && b_ge )
  {
    return shift_ordering::equal;
  }
  if ( a_ge )
  {
    return shift_ordering::greater_eq;
  }
  if ( b_ge )
  {
    return shift_ordering::less_eq;
  }
  return shift_ordering::incomparable;
}

inline bool shift_dominates( const coalition_profile& a, const coalition_profile& b )
{
  const auto o = shift_compare( a, b );
  return o == shift_ordering::greater_eq || o == shift_ordering::equal;
}

/// Mixed-radix indexing of all profiles 0 <= m_i <= n_i.
class profile_space
{
public:
  explicit profile_space( const class_sizes& sizes ) : sizes_( sizes )
  {
    std::uint64_t total = 1;
    for ( auto n : sizes.counts() )
    {
      total *= static_cast<std::uint64_t>( n + 1 );
      if ( total > limit )
      {
        throw precondition_error( "profile space exceeds " + std::to_string( limit ) + " entries" );
      }
    }
    size_ = static_cast<std::size_t>( total );
  }

  static constexpr std::uint64_t limit = std::uint64_t{ 1 } << 28;

  std::size_t size() const noexcept { return size_; }

  coalition_profile at( std::size_t index ) const
  {
    std::vector<int> m( sizes_.types() );
    for ( std::size_t i = sizes_.types(); i-- > 0; )
    {
      const auto radix = static_cast<std::size_t>( sizes_[i] + 1 );
      m[i] = static_cast<int>( index % radix );
      index /= radix;
    }
    return coalition_profile( std::move( m ) );
  }

  std::size_t index_of( const coalition_profile& p ) const
  {
    std::size_t index = 0;
    for ( std::size_t i = 0; i < sizes_.types(); ++i )
    {
      index = index * static_cast<std::size_t>( sizes_[i] + 1 ) + static_cast<std::size_t>( p[i] );
    }
    return index;
  }

private:
  class_sizes sizes_;
  std::size_t size_ = 0;
};

} // namespace wvg
