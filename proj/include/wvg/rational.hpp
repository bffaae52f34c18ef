#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace wvg {

/// Arbitrary-precision rational. GMP keeps values canonical (reduced, positive denominator)
/// after every arithmetic operation.
using rational = mpq_class;
using big_integer = mpz_class;

inline rational make_rational( std::int64_t num, std::int64_t den = 1 )
{
  rational r( big_integer( static_cast<long>( num ) ), big_integer( static_cast<long>( den ) ) );
  r.canonicalize();
  return r;
}

inline bool is_integral( const rational& r ) { return r.get_den() == 1; }

inline big_integer floor_of( const rational& r )
{
  big_integer q;
  mpz_fdiv_q( q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t() );
  return q;
}

inline big_integer ceil_of( const rational& r )
{
  big_integer q;
  mpz_cdiv_q( q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t() );
  return q;
}

inline std::int64_t to_int64( const big_integer& z )
{
  if ( !z.fits_slong_p() )
  {
    throw consistency_error( "integer " + z.get_str() + " does not fit in 64 bits" );
  }
  return z.get_si();
}

inline std::int64_t to_int64( const rational& r )
{
  if ( !is_integral( r ) )
  {
    throw consistency_error( "rational " + r.get_str() + " is not an integer" );
  }
  return to_int64( big_integer( r.get_num() ) );
}

/// Renders "a/b", or "a" for integers. Never a decimal expansion.
inline std::string to_string( const rational& r ) { return r.get_str(); }

} // namespace wvg
