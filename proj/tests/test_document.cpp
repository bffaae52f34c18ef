#include <gtest/gtest.h>

#include <wvg/document.hpp>

using namespace wvg;

namespace {

std::string canon_text( const std::string& text )
{
  const auto doc = parse_document( text );
  return to_json( canonical_of( doc ).game, doc.name, doc.source ).dump( 2 );
}

std::string parse_message( const std::string& text )
{
  try
  {
    parse_document( text );
  }
  catch ( const parse_error& e )
  {
    return e.what();
  }
  return {};
}

} // namespace

TEST( Document, WeightsToCanonicalForm )
{
  const auto doc = parse_document( R"({"kind": "weights", "quota": 4, "weights": [3, 2, 1, 1], "name": "small"})" );
  ASSERT_TRUE( doc.weights.has_value() );
  EXPECT_FALSE( doc.is_typed() );
  EXPECT_EQ( doc.name, "small" );
  EXPECT_TRUE( doc.warnings.empty() );
  const auto c = canonical_of( doc );
  EXPECT_EQ( c.game.sizes(), ( class_sizes{ 1, 3 } ) );
  EXPECT_EQ( c.game.winners(), ( std::vector<coalition_profile>{ { 1, 1 }, { 0, 3 } } ) );
  const auto j = to_json( c.game );
  EXPECT_EQ( j.dump(), R"({"kind":"typed","sizes":[1,3],"winners":[[1,1],[0,3]]})" );
  EXPECT_EQ( to_json( c.partition ).dump(), "[[1],[2,3,4]]" );
}

TEST( Document, TypedIsItsOwnCanonicalForm )
{
  const std::string text = R"({"kind":"typed","sizes":[1,3],"winners":[[1,1],[0,3]]})";
  const auto doc = parse_document( text );
  ASSERT_TRUE( doc.is_typed() );
  EXPECT_EQ( to_json( canonical_of( doc ).game ).dump(), text );
  EXPECT_EQ( canonical_of( doc ).partition.classes, ( std::vector<std::vector<int>>{ { 0 }, { 1, 2, 3 } } ) );
}

TEST( Document, RoundTripIsByteIdentical )
{
  for ( const std::string text : { R"({"kind":"weights","quota":12,"weights":[7,6,6,4,4,4,3,2],"source":"x"})",
                                   R"({"kind":"weights","quota":24,"weights":[7,7,7,7,3,3,3,3,3,3,3,3]})",
                                   R"({"kind":"typed","sizes":[2,5,7],"winners":[[2,1,1],[2,0,3],[1,2,2],[1,0,5],[0,5,0],[0,3,3],[0,0,7]]})" } )
  {
    const auto once = canon_text( text );
    EXPECT_EQ( canon_text( once ), once );
  }
}

TEST( Document, UnsortedWeightsAreResortedWithWarning )
{
  const auto doc = parse_document( R"({"kind":"weights","quota":4,"weights":[1,3,1,2]})" );
  ASSERT_EQ( doc.warnings.size(), 1u );
  EXPECT_EQ( doc.weights->weights, ( std::vector<weight_t>{ 3, 2, 1, 1 } ) );
}

TEST( Document, SyntaxErrorsCarryPosition )
{
  EXPECT_EQ( parse_message( "{\n  \"kind\": \"typed\",\n  ]" ), "malformed JSON at line 3, column 3" );
  EXPECT_NE( parse_message( "" ).find( "line 1" ), std::string::npos );
}

TEST( Document, StructuralErrors )
{
  EXPECT_NE( parse_message( "[1, 2]" ).find( "object" ), std::string::npos );
  EXPECT_NE( parse_message( R"({"quota": 3})" ).find( "\"kind\"" ), std::string::npos );
  EXPECT_NE( parse_message( R"({"kind": "weights", "weights": [1]})" ).find( "\"quota\"" ), std::string::npos );
  EXPECT_NE( parse_message( R"({"kind": "weights", "quota": "x", "weights": [1]})" ).find( "wrong type" ), std::string::npos );
  EXPECT_NE( parse_message( R"({"kind": "table"})" ).find( "unknown" ), std::string::npos );
}

TEST( Document, InvalidGamesAreParseErrors )
{
  EXPECT_NE( parse_message( R"({"kind":"typed","sizes":[1,3],"winners":[[1,1],[0,2]]})" ).find( "invalid typed document" ),
             std::string::npos );
  EXPECT_NE( parse_message( R"({"kind":"typed","sizes":[0,3],"winners":[[0,2]]})" ).find( "invalid typed document" ),
             std::string::npos );
  EXPECT_NE( parse_message( R"({"kind":"weights","quota":0,"weights":[1,1]})" ).find( "invalid weights document" ),
             std::string::npos );
  EXPECT_NE( parse_message( R"({"kind":"weights","quota":5,"weights":[1,1]})" ).find( "invalid weights document" ),
             std::string::npos );
}

TEST( Document, RationalsAreExactStrings )
{
  EXPECT_EQ( to_json( rational( 23, 2 ) ).dump(), R"({"num":"23","den":"2"})" );
  EXPECT_EQ( to_json( make_rational( -4, 6 ) ).dump(), R"({"num":"-2","den":"3"})" );
  const rational huge( big_integer( "123456789012345678901234567890" ), big_integer( 7 ) );
  EXPECT_EQ( to_json( huge )["num"], "123456789012345678901234567890" );
  EXPECT_EQ( to_json( std::vector<rational>{ 1, rational( 1, 3 ) } ).dump(), R"([{"num":"1","den":"1"},{"num":"1","den":"3"}])" );
}

TEST( Document, RepresentationJson )
{
  EXPECT_EQ( to_json( integer_representation{ 24, { 7, 3 } } ).dump(), R"({"kind":"weights","quota":24,"weights":[7,3]})" );
  EXPECT_EQ( to_json( typed_representation{ 24, { 7, 3 } } ).dump(), R"({"quota":24,"class_weights":[7,3]})" );
}
