#pragma once

#include <stdexcept>
#include <string>

namespace wvg {

/// Coarse error category; the CLI maps each one to its own exit code.
enum class error_kind
{
  parse = 1,
  precondition = 2,
  inconclusive = 3,
  internal = 4
};

class error : public std::runtime_error
{
public:
  error( error_kind kind, const std::string& what )
      : std::runtime_error( what ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

struct parse_error : error
{
  explicit parse_error( const std::string& what ) : error( error_kind::parse, what ) {}
};

struct precondition_error : error
{
  explicit precondition_error( const std::string& what ) : error( error_kind::precondition, what ) {}
};

struct not_weighted_error : precondition_error
{
  explicit not_weighted_error( const std::string& what ) : precondition_error( what ) {}
};

/// A bounded search ran out of budget; the answer is unknown, not negative.
struct search_limit_error : error
{
  explicit search_limit_error( const std::string& what ) : error( error_kind::inconclusive, what ) {}
};

/// An internal cross-check failed (e.g. two incomparable minima where uniqueness is a theorem).
struct consistency_error : error
{
  explicit consistency_error( const std::string& what ) : error( error_kind::internal, what ) {}
};

} // namespace wvg
