#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semlog {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class MalformedLine : public Error
{
public:
  explicit MalformedLine( const std::string& reason )
    : Error( "malformed log line: " + reason ), reason_( reason )
  {
  }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::string reason_;
};

class InvalidTimestamp : public Error
{
public:
  explicit InvalidTimestamp( const std::string& text )
    : Error( "invalid timestamp: " + text )
  {
  }
};

class NotAbsoluteUrl : public Error
{
public:
  explicit NotAbsoluteUrl( const std::string& url )
    : Error( "not an absolute URL: " + url )
  {
  }
};

class MalformedTriple : public Error
{
public:
  MalformedTriple( std::size_t line, const std::string& reason )
    : Error( "malformed triple at line " + std::to_string( line ) + ": " + reason ), line_( line )
  {
  }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class CyclicHierarchy : public Error
{
public:
  explicit CyclicHierarchy( const std::string& cls )
    : Error( "cyclic subclass hierarchy through " + cls ), cls_( cls )
  {
  }
  const std::string& class_iri() const noexcept { return cls_; }

private:
  std::string cls_;
};

class InvalidRule : public Error
{
public:
  using Error::Error;
};

class IoFailure : public Error
{
public:
  using Error::Error;
};

class SchemaMismatch : public Error
{
public:
  SchemaMismatch( std::size_t line, long long version )
    : Error( "unsupported schema_version " + std::to_string( version ) + " at line " + std::to_string( line ) ),
      line_( line ), version_( version )
  {
  }
  std::size_t line() const noexcept { return line_; }
  long long version() const noexcept { return version_; }

private:
  std::size_t line_;
  long long version_;
};

class MalformedRecord : public Error
{
public:
  MalformedRecord( std::size_t line, const std::string& reason )
    : Error( "malformed session record at line " + std::to_string( line ) + ": " + reason ), line_( line )
  {
  }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class SyntaxError : public Error
{
public:
  SyntaxError( std::size_t position, const std::string& expected )
    : Error( "syntax error at position " + std::to_string( position ) + ": expected " + expected ),
      position_( position ), expected_( expected )
  {
  }
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

class UnknownAtom : public Error
{
public:
  UnknownAtom( std::size_t position, const std::string& name )
    : Error( "unknown atom '" + name + "' at position " + std::to_string( position ) ), name_( name )
  {
  }
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class EmptySession : public Error
{
public:
  EmptySession() : Error( "session has no events" ) {}
};

class EmptyCorpus : public Error
{
public:
  EmptyCorpus() : Error( "no sessions to summarize" ) {}
};

class ConfigError : public Error
{
public:
  using Error::Error;
};

} // namespace semlog
