#include <doctest.h>

#include "gentropy/catalog_id.hpp"
#include "gentropy/error.hpp"

using namespace gentropy;

TEST_CASE("entropy ids") {
  CHECK(entropy_name(parse_entropy("bg")) == "bg");
  CHECK(eval_trace(std::get<TraceGenerator>(parse_entropy("tsallis:q=2,c=1")), uniform(2)) == 0.5);
  CHECK(entropy_name(parse_entropy("tsallis:q=1,c=2")) == "bg");
  CHECK(entropy_name(parse_entropy("twopower:q1=0.5,q2=1.5")) == "twopower");
  CHECK(std::holds_alternative<NonTraceSpec>(parse_entropy("renyi:alpha=2")));
  CHECK(std::get<NonTraceSpec>(parse_entropy("logpow:a=0.5,b=0.5,q=2")).beta == 1.0);

  for (const char* id : {"bg", "bg:c=2", "tsallis:q=2,c=1", "twopower:q1=0.5,q2=1.5", "renyi:alpha=0.5",
                         "logpow:a=0.5,b=0.5,q=2"})
    CHECK(format_entropy_id(parse_entropy(id)) == id);

  for (const char* bad : {"", "shannon", "tsallis", "tsallis:q=2,z=1", "tsallis:q=abc", "tsallis:q=2,q=3",
                          "renyi:", "bg:c"})
    CHECK_THROWS_AS(parse_entropy(bad), Error);
  CHECK_THROWS_AS(parse_entropy("tsallis:q=-1"), Error);
}

TEST_CASE("law ids") {
  CHECK(parse_law("additive").kind() == LawKind::Additive);
  CHECK(parse_law("mult:alpha=-1").alpha() == -1.0);
  const auto law = parse_law("renyitype:logpow:a=0.5,b=0.5,q=2,alpha=2");
  CHECK(law.kind() == LawKind::RenyiType);
  CHECK(law.alpha() == 2.0);
  CHECK(law.conjugation()->beta == 1.0);
  CHECK(parse_law("renyitype:renyi:alpha=2,alpha=1").conjugation()->params[0].second == 2.0);

  for (const char* id : {"additive", "mult:alpha=-1", "mult:alpha=0.5", "renyitype:logpow:a=0.5,b=0.5,q=2,alpha=2"})
    CHECK(format_law_id(parse_law(id)) == id);

  for (const char* bad : {"mult", "mult:beta=1", "renyitype:bg,alpha=1", "renyitype:renyi:alpha=2", "xor"})
    CHECK_THROWS_AS(parse_law(bad), Error);
}
