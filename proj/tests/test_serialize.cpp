#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "properties.hpp"
#include "qseries/serialize.hpp"

using namespace qseries;

TEST_CASE("series JSON layout") {
  const BiSeries s = from_terms(2, 3, {{1, 2, -5}, {0, 0, 1}, {2, 3, 12}});
  CHECK(dump(series_to_json(s)) ==
        "{\"x_order\":2,\"q_order\":3,\"terms\":[[0,0,\"1\"],[1,2,\"-5\"],[2,3,\"12\"]]}\n");
  CHECK(dump(series_to_json(BiSeries::zero(0, 0))) ==
        "{\"x_order\":0,\"q_order\":0,\"terms\":[]}\n");
}

TEST_CASE("series JSON round trip is bit-exact") {
  props::SeriesGen gen(77);
  for (int c = 0; c < 100; ++c) {
    const BiSeries s = gen.series(gen.uniform(0, 4), gen.uniform(0, 10), 0.4);
    const std::string text = dump(series_to_json(s));
    const BiSeries back = series_from_json(parse_json(text));
    CHECK(back == s);
    CHECK(dump(series_to_json(back)) == text);
  }
}

TEST_CASE("series JSON rejects non-canonical input") {
  const char* bad[] = {
      R"({"x_order":1,"q_order":1})",
      R"({"x_order":-1,"q_order":1,"terms":[]})",
      R"({"x_order":1,"q_order":1,"terms":[[2,0,"1"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,1,"1"],[0,0,"1"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0,"1"],[0,0,"2"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0,"0"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0,"01"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0,"+1"]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0,1]]})",
      R"({"x_order":1,"q_order":1,"terms":[[0,0]]})",
      R"([1,2,3])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(series_from_json(parse_json(text)), FormatError);
  }
  CHECK_THROWS_AS(parse_json("{not json"), FormatError);
}

TEST_CASE("family JSON round trip") {
  const RecursionFamily fam = solve(2, 4, 12);
  const std::string text = dump(family_to_json(fam));
  CHECK(text.rfind("{\"k\":2,\"x_order\":4,\"q_order\":12,\"F\":[", 0) == 0);
  const RecursionFamily back = family_from_json(parse_json(text));
  CHECK(back == fam);
  CHECK(dump(family_to_json(back)) == text);

  Json wrong_count = family_to_json(fam);
  wrong_count["F"].erase(0);
  CHECK_THROWS_AS(family_from_json(wrong_count), FormatError);

  Json wrong_window = family_to_json(fam);
  wrong_window["F"][1]["q_order"] = 11;
  CHECK_THROWS_AS(family_from_json(wrong_window), FormatError);
}

TEST_CASE("TSV writers") {
  std::ostringstream fam_out;
  write_family_tsv(fam_out, solve(1, 1, 2));
  CHECK(fam_out.str() == "i\ta\tb\tcoeff\n0\t0\t0\t1\n0\t1\t2\t1\n1\t0\t0\t1\n1\t1\t1\t1\n1\t1\t2\t1\n");

  std::ostringstream table_out;
  write_table_tsv(table_out, hilbert_table(1, 1, 1, 2));
  CHECK(table_out.str() == "m\tw\tdim\n0\t0\t1\n0\t1\t0\n0\t2\t0\n1\t0\t0\n1\t1\t0\n1\t2\t1\n");
  CHECK(series_from_json(table_to_json(hilbert_table(1, 2, 3, 8))) ==
        hilbert_table(1, 2, 3, 8).to_series());
}
