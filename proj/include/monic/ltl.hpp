#pragma once

/*!
  \file ltl.hpp
  \brief LTL syntax trees, alphabets and finite/lasso words
*/

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monic
{

enum class op : std::uint8_t
{
  tt,
  ff,
  atom,
  not_,
  and_,
  or_,
  implies,
  next,
  until,
  release,
  finally,
  globally,
};

inline bool is_binary( op o )
{
  return o == op::and_ || o == op::or_ || o == op::implies || o == op::until || o == op::release;
}

inline bool is_unary( op o )
{
  return o == op::not_ || o == op::next || o == op::finally || o == op::globally;
}

/*! \brief Immutable LTL formula.

  Nodes are shared between formulas; copying a formula copies a pointer.
*/
class formula
{
  struct node
  {
    op kind;
    std::string name;
    std::shared_ptr<node const> lhs;
    std::shared_ptr<node const> rhs;
  };

  explicit formula( std::shared_ptr<node const> n ) : n_( std::move( n ) ) {}

public:
  formula() : formula( tt() ) {}

  static formula tt() { return make( op::tt, {}, {}, {} ); }
  static formula ff() { return make( op::ff, {}, {}, {} ); }
  static formula atom( std::string name )
  {
    if ( name.empty() )
      throw std::invalid_argument( "atomic proposition name must be non-empty" );
    return make( op::atom, std::move( name ), {}, {} );
  }
  static formula unary( op o, formula const& f )
  {
    if ( !is_unary( o ) )
      throw std::invalid_argument( "not a unary operator" );
    return make( o, {}, f.n_, {} );
  }
  static formula binary( op o, formula const& a, formula const& b )
  {
    if ( !is_binary( o ) )
      throw std::invalid_argument( "not a binary operator" );
    return make( o, {}, a.n_, b.n_ );
  }

  op kind() const { return n_->kind; }
  std::string const& name() const { return n_->name; }
  /// Operand of a unary node, left operand of a binary node.
  formula lhs() const { return formula( n_->lhs ); }
  formula rhs() const { return formula( n_->rhs ); }

  /// Total structural order.
  static int compare( formula const& a, formula const& b )
  {
    if ( a.n_ == b.n_ )
      return 0;
    if ( a.kind() != b.kind() )
      return a.kind() < b.kind() ? -1 : 1;
    if ( a.kind() == op::atom )
      return a.name().compare( b.name() );
    if ( a.kind() == op::tt || a.kind() == op::ff )
      return 0;
    if ( int c = compare( a.lhs(), b.lhs() ); c != 0 )
      return c;
    return is_binary( a.kind() ) ? compare( a.rhs(), b.rhs() ) : 0;
  }

  friend bool operator==( formula const& a, formula const& b ) { return compare( a, b ) == 0; }

  std::size_t size() const
  {
    std::size_t s = 1;
    if ( n_->lhs )
      s += lhs().size();
    if ( n_->rhs )
      s += rhs().size();
    return s;
  }

private:
  static formula make( op o, std::string name, std::shared_ptr<node const> l, std::shared_ptr<node const> r )
  {
    return formula( std::make_shared<node const>( node{ o, std::move( name ), std::move( l ), std::move( r ) } ) );
  }

  std::shared_ptr<node const> n_;
};

struct formula_less
{
  bool operator()( formula const& a, formula const& b ) const { return formula::compare( a, b ) < 0; }
};

inline formula operator!( formula const& f ) { return formula::unary( op::not_, f ); }
inline formula operator&&( formula const& a, formula const& b ) { return formula::binary( op::and_, a, b ); }
inline formula operator||( formula const& a, formula const& b ) { return formula::binary( op::or_, a, b ); }
inline formula implies( formula const& a, formula const& b ) { return formula::binary( op::implies, a, b ); }
inline formula X( formula const& f ) { return formula::unary( op::next, f ); }
inline formula F( formula const& f ) { return formula::unary( op::finally, f ); }
inline formula G( formula const& f ) { return formula::unary( op::globally, f ); }
inline formula U( formula const& a, formula const& b ) { return formula::binary( op::until, a, b ); }
inline formula R( formula const& a, formula const& b ) { return formula::binary( op::release, a, b ); }

/*! \brief A letter of 2^AP, as a bitmask over the alphabet's propositions.

  Bit `i` is set iff proposition `i` of the owning alphabet holds.
*/
struct symbol
{
  std::uint32_t bits = 0;

  bool has( std::size_t prop ) const { return ( bits >> prop ) & 1u; }
  friend auto operator<=>( symbol, symbol ) = default;
};

using finite_word = std::vector<symbol>;

/// The infinite word prefix . loop^omega.
struct lasso_word
{
  finite_word prefix;
  finite_word loop;

  lasso_word() = default;
  lasso_word( finite_word p, finite_word l ) : prefix( std::move( p ) ), loop( std::move( l ) )
  {
    if ( loop.empty() )
      throw std::invalid_argument( "lasso loop must be non-empty" );
  }

  std::size_t positions() const { return prefix.size() + loop.size(); }
  symbol at( std::size_t i ) const { return i < prefix.size() ? prefix[i] : loop[i - prefix.size()]; }
  std::size_t successor( std::size_t i ) const { return i + 1 < positions() ? i + 1 : prefix.size(); }
};

/*! \brief Ordered set of atomic propositions. */
class alphabet
{
public:
  static constexpr std::size_t max_propositions = 16;

  alphabet() = default;
  explicit alphabet( std::vector<std::string> props )
  {
    for ( auto& p : props )
      add( std::move( p ) );
  }

  /// Adds `p` if absent; returns its index either way.
  std::size_t add( std::string p )
  {
    if ( p.empty() )
      throw std::invalid_argument( "atomic proposition name must be non-empty" );
    if ( auto i = index_of( p ) )
      return *i;
    if ( props_.size() == max_propositions )
      throw std::length_error( "too many atomic propositions (limit is 16)" );
    props_.push_back( std::move( p ) );
    return props_.size() - 1;
  }

  std::optional<std::size_t> index_of( std::string_view p ) const
  {
    auto it = std::find( props_.begin(), props_.end(), p );
    if ( it == props_.end() )
      return std::nullopt;
    return static_cast<std::size_t>( it - props_.begin() );
  }

  bool contains( std::string_view p ) const { return index_of( p ).has_value(); }
  bool includes( alphabet const& other ) const
  {
    return std::all_of( other.props_.begin(), other.props_.end(), [this]( auto const& p ) { return contains( p ); } );
  }

  std::size_t size() const { return props_.size(); }
  std::vector<std::string> const& propositions() const { return props_; }
  std::string const& operator[]( std::size_t i ) const { return props_[i]; }

  std::size_t symbol_count() const { return std::size_t{ 1 } << props_.size(); }
  bool valid( symbol s ) const { return s.bits < symbol_count(); }

  /// Builds the symbol in which exactly `names` hold; throws on unknown names.
  symbol make_symbol( std::vector<std::string> const& names ) const
  {
    symbol s;
    for ( auto const& n : names )
    {
      auto i = index_of( n );
      if ( !i )
        throw std::out_of_range( "unknown proposition '" + n + "'" );
      s.bits |= 1u << *i;
    }
    return s;
  }

  std::vector<std::string> names( symbol s ) const
  {
    std::vector<std::string> out;
    for ( std::size_t i = 0; i < props_.size(); ++i )
      if ( s.has( i ) )
        out.push_back( props_[i] );
    return out;
  }

  /// "{p,q}" style; the empty set is written "{}".
  std::string to_string( symbol s ) const
  {
    std::string out = "{";
    bool first = true;
    for ( auto const& n : names( s ) )
    {
      if ( !first )
        out += ',';
      out += n;
      first = false;
    }
    return out + "}";
  }

  /*! \brief Every symbol, ordered lexicographically by the ascending list
      of proposition indices it contains (so the empty set comes first). */
  std::vector<symbol> ordered_symbols() const
  {
    std::vector<symbol> out( symbol_count() );
    for ( std::size_t i = 0; i < out.size(); ++i )
      out[i].bits = static_cast<std::uint32_t>( i );
    auto key = [this]( symbol s ) {
      std::vector<std::size_t> k;
      for ( std::size_t i = 0; i < props_.size(); ++i )
        if ( s.has( i ) )
          k.push_back( i );
      return k;
    };
    std::sort( out.begin(), out.end(), [&]( symbol a, symbol b ) { return key( a ) < key( b ); } );
    return out;
  }

  friend bool operator==( alphabet const&, alphabet const& ) = default;

private:
  std::vector<std::string> props_;
};

/// Propositions occurring in `f`, in first-occurrence (left-to-right) order.
inline alphabet alphabet_of( formula const& f )
{
  alphabet a;
  auto visit = [&a]( auto const& self, formula const& g ) -> void {
    switch ( g.kind() )
    {
    case op::tt:
    case op::ff:
      return;
    case op::atom:
      a.add( g.name() );
      return;
    default:
      self( self, g.lhs() );
      if ( is_binary( g.kind() ) )
        self( self, g.rhs() );
    }
  };
  visit( visit, f );
  return a;
}

/// Union of `a` and `b`, keeping `a`'s order first.
inline alphabet merge( alphabet a, alphabet const& b )
{
  for ( auto const& p : b.propositions() )
    a.add( p );
  return a;
}

namespace detail
{

inline bool is_identifier( std::string const& s )
{
  if ( s.empty() || ( !std::isalpha( static_cast<unsigned char>( s[0] ) ) && s[0] != '_' ) )
    return false;
  for ( char c : s )
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' )
      return false;
  static constexpr std::string_view reserved[] = { "true", "false", "U", "R", "W", "X", "F", "G" };
  return std::find( std::begin( reserved ), std::end( reserved ), s ) == std::end( reserved );
}

inline std::string render_atom( std::string const& name )
{
  if ( is_identifier( name ) )
    return name;
  std::string out = "\"";
  for ( char c : name )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace detail

/*! \brief Canonical ASCII rendering.

  Letter operators (`X F G U R`) and symbolic connectives (`! && || ->`);
  every non-atomic operand is parenthesized, so the output re-parses to
  the same tree regardless of precedence.
*/
inline std::string render_formula( formula const& f )
{
  auto operand = []( auto const& self, formula const& g ) -> std::string {
    auto k = g.kind();
    if ( k == op::tt || k == op::ff || k == op::atom )
      return self( self, g );
    return "(" + self( self, g ) + ")";
  };
  auto go = [&operand]( auto const& self, formula const& g ) -> std::string {
    switch ( g.kind() )
    {
    case op::tt:
      return "true";
    case op::ff:
      return "false";
    case op::atom:
      return detail::render_atom( g.name() );
    case op::not_:
      return "!" + operand( self, g.lhs() );
    case op::next:
      return "X " + operand( self, g.lhs() );
    case op::finally:
      return "F " + operand( self, g.lhs() );
    case op::globally:
      return "G " + operand( self, g.lhs() );
    case op::and_:
      return operand( self, g.lhs() ) + " && " + operand( self, g.rhs() );
    case op::or_:
      return operand( self, g.lhs() ) + " || " + operand( self, g.rhs() );
    case op::implies:
      return operand( self, g.lhs() ) + " -> " + operand( self, g.rhs() );
    case op::until:
      return operand( self, g.lhs() ) + " U " + operand( self, g.rhs() );
    case op::release:
      return operand( self, g.lhs() ) + " R " + operand( self, g.rhs() );
    }
    return {};
  };
  return go( go, f );
}

/*! \brief Negation normal form over {true, false, p, !p, &&, ||, X, U, R}.

  `->`, `F` and `G` are expanded; negations are pushed to atoms.
*/
inline formula to_nnf( formula const& f, bool negate = false )
{
  switch ( f.kind() )
  {
  case op::tt:
    return negate ? formula::ff() : f;
  case op::ff:
    return negate ? formula::tt() : f;
  case op::atom:
    return negate ? !f : f;
  case op::not_:
    return to_nnf( f.lhs(), !negate );
  case op::and_:
    return negate ? to_nnf( f.lhs(), true ) || to_nnf( f.rhs(), true ) : to_nnf( f.lhs() ) && to_nnf( f.rhs() );
  case op::or_:
    return negate ? to_nnf( f.lhs(), true ) && to_nnf( f.rhs(), true ) : to_nnf( f.lhs() ) || to_nnf( f.rhs() );
  case op::implies:
    return negate ? to_nnf( f.lhs() ) && to_nnf( f.rhs(), true ) : to_nnf( f.lhs(), true ) || to_nnf( f.rhs() );
  case op::next:
    return X( to_nnf( f.lhs(), negate ) );
  case op::until:
    return negate ? R( to_nnf( f.lhs(), true ), to_nnf( f.rhs(), true ) ) : U( to_nnf( f.lhs() ), to_nnf( f.rhs() ) );
  case op::release:
    return negate ? U( to_nnf( f.lhs(), true ), to_nnf( f.rhs(), true ) ) : R( to_nnf( f.lhs() ), to_nnf( f.rhs() ) );
  case op::finally:
    return negate ? R( formula::ff(), to_nnf( f.lhs(), true ) ) : U( formula::tt(), to_nnf( f.lhs() ) );
  case op::globally:
    return negate ? U( formula::tt(), to_nnf( f.lhs(), true ) ) : R( formula::ff(), to_nnf( f.lhs() ) );
  }
  throw std::logic_error( "to_nnf: unknown operator" );
}

} // namespace monic
