#pragma once

/*!
  \file parser.hpp
  \brief Recursive-descent LTL parser

  Precedence, loosest first:

    <->            (non-associative chain, left)
    -> =>          (right associative)
    || |
    && &
    U R W          (right associative)
    ! ~ X F G <> []  (prefix)

  `a W b` and `a <-> b` have no tree node of their own; they are expanded
  into `(a U b) || G a` and `(a -> b) && (b -> a)` when parsed.
*/

#include "ltl.hpp"

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace monic
{

class syntax_error : public std::runtime_error
{
public:
  syntax_error( std::size_t line, std::size_t column, std::string found, std::set<std::string> expected )
      : std::runtime_error( describe( line, column, found, expected ) ),
        line_( line ), column_( column ), found_( std::move( found ) ), expected_( std::move( expected ) )
  {
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::string const& found() const { return found_; }
  std::set<std::string> const& expected() const { return expected_; }

private:
  static std::string describe( std::size_t line, std::size_t column, std::string const& found,
                               std::set<std::string> const& expected )
  {
    std::ostringstream os;
    os << line << ":" << column << ": syntax error: unexpected " << found;
    if ( !expected.empty() )
    {
      os << ", expected one of:";
      for ( auto const& e : expected )
        os << ' ' << e;
    }
    return os.str();
  }

  std::size_t line_, column_;
  std::string found_;
  std::set<std::string> expected_;
};

namespace detail
{

enum class tok
{
  end,
  ident,
  quoted,
  lparen,
  rparen,
  kw_true,
  kw_false,
  not_,
  and_,
  or_,
  implies,
  iff,
  next,
  finally,
  globally,
  until,
  release,
  weak_until,
};

struct token
{
  tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class lexer
{
public:
  explicit lexer( std::string_view src ) : src_( src ) {}

  std::vector<token> run()
  {
    std::vector<token> out;
    for ( ;; )
    {
      skip_space();
      std::size_t l = line_, c = col_;
      if ( pos_ >= src_.size() )
      {
        out.push_back( { tok::end, "end of input", l, c } );
        return out;
      }
      char ch = src_[pos_];
      if ( std::isalpha( static_cast<unsigned char>( ch ) ) || ch == '_' )
      {
        std::string id;
        while ( pos_ < src_.size() && ( std::isalnum( static_cast<unsigned char>( src_[pos_] ) ) || src_[pos_] == '_' ) )
          id += advance();
        out.push_back( { keyword( id ), id, l, c } );
        continue;
      }
      if ( ch == '"' )
      {
        advance();
        std::string s;
        for ( ;; )
        {
          if ( pos_ >= src_.size() )
            throw syntax_error( l, c, "unterminated string", { "\"" } );
          char d = advance();
          if ( d == '"' )
            break;
          if ( d == '\\' && pos_ < src_.size() )
            d = advance();
          s += d;
        }
        if ( s.empty() )
          throw syntax_error( l, c, "empty quoted proposition", { "proposition" } );
        out.push_back( { tok::quoted, s, l, c } );
        continue;
      }
      out.push_back( punct( l, c ) );
    }
  }

private:
  static tok keyword( std::string const& id )
  {
    if ( id == "true" ) return tok::kw_true;
    if ( id == "false" ) return tok::kw_false;
    if ( id == "X" ) return tok::next;
    if ( id == "F" ) return tok::finally;
    if ( id == "G" ) return tok::globally;
    if ( id == "U" ) return tok::until;
    if ( id == "R" ) return tok::release;
    if ( id == "W" ) return tok::weak_until;
    return tok::ident;
  }

  token punct( std::size_t l, std::size_t c )
  {
    auto starts = [this]( std::string_view s ) { return src_.substr( pos_, s.size() ) == s; };
    struct entry
    {
      std::string_view text;
      tok kind;
    };
    // longest match first
    static constexpr entry table[] = {
        { "<->", tok::iff }, { "<=>", tok::iff }, { "->", tok::implies }, { "=>", tok::implies },
        { "&&", tok::and_ }, { "||", tok::or_ },  { "<>", tok::finally }, { "[]", tok::globally },
        { "&", tok::and_ },  { "|", tok::or_ },   { "!", tok::not_ },     { "~", tok::not_ },
        { "(", tok::lparen }, { ")", tok::rparen },
    };
    for ( auto const& e : table )
      if ( starts( e.text ) )
      {
        for ( std::size_t i = 0; i < e.text.size(); ++i )
          advance();
        return { e.kind, std::string( e.text ), l, c };
      }
    throw syntax_error( l, c, "character '" + std::string( 1, src_[pos_] ) + "'", {} );
  }

  void skip_space()
  {
    while ( pos_ < src_.size() && std::isspace( static_cast<unsigned char>( src_[pos_] ) ) )
      advance();
  }

  char advance()
  {
    char ch = src_[pos_++];
    if ( ch == '\n' )
    {
      ++line_;
      col_ = 1;
    }
    else
      ++col_;
    return ch;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class parser
{
public:
  explicit parser( std::vector<token> toks ) : toks_( std::move( toks ) ) {}

  formula parse_all()
  {
    auto f = parse_iff();
    if ( peek().kind != tok::end )
      fail( { "end of input", "&&", "||", "->", "<->", "U", "R", "W", ")" } );
    return f;
  }

private:
  token const& peek() const { return toks_[pos_]; }
  token const& take() { return toks_[pos_++]; }
  bool accept( tok k )
  {
    if ( peek().kind != k )
      return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail( std::set<std::string> expected ) const
  {
    auto const& t = peek();
    std::string found = t.kind == tok::end ? "end of input" : "'" + t.text + "'";
    throw syntax_error( t.line, t.column, found, std::move( expected ) );
  }

  formula parse_iff()
  {
    auto lhs = parse_implies();
    while ( accept( tok::iff ) )
    {
      auto rhs = parse_implies();
      lhs = implies( lhs, rhs ) && implies( rhs, lhs );
    }
    return lhs;
  }

  formula parse_implies()
  {
    auto lhs = parse_or();
    if ( accept( tok::implies ) )
      return implies( lhs, parse_implies() );
    return lhs;
  }

  formula parse_or()
  {
    auto lhs = parse_and();
    while ( accept( tok::or_ ) )
      lhs = lhs || parse_and();
    return lhs;
  }

  formula parse_and()
  {
    auto lhs = parse_until();
    while ( accept( tok::and_ ) )
      lhs = lhs && parse_until();
    return lhs;
  }

  formula parse_until()
  {
    auto lhs = parse_unary();
    if ( accept( tok::until ) )
      return U( lhs, parse_until() );
    if ( accept( tok::release ) )
      return R( lhs, parse_until() );
    if ( accept( tok::weak_until ) )
    {
      auto rhs = parse_until();
      return U( lhs, rhs ) || G( lhs );
    }
    return lhs;
  }

  formula parse_unary()
  {
    switch ( peek().kind )
    {
    case tok::not_:
      take();
      return !parse_unary();
    case tok::next:
      take();
      return X( parse_unary() );
    case tok::finally:
      take();
      return F( parse_unary() );
    case tok::globally:
      take();
      return G( parse_unary() );
    default:
      return parse_primary();
    }
  }

  formula parse_primary()
  {
    auto const& t = peek();
    switch ( t.kind )
    {
    case tok::kw_true:
      take();
      return formula::tt();
    case tok::kw_false:
      take();
      return formula::ff();
    case tok::ident:
    case tok::quoted:
      return formula::atom( take().text );
    case tok::lparen:
    {
      take();
      auto f = parse_iff();
      if ( !accept( tok::rparen ) )
        fail( { ")", "&&", "||", "->", "<->", "U", "R", "W" } );
      return f;
    }
    default:
      fail( { "proposition", "true", "false", "(", "!", "X", "F", "G", "<>", "[]" } );
    }
  }

  std::vector<token> toks_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses one LTL formula; throws syntax_error with position and expected tokens.
inline formula parse( std::string_view text )
{
  return detail::parser( detail::lexer( text ).run() ).parse_all();
}

} // namespace monic
