#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "htlogic/duality.hpp"
#include "htlogic/json_io.hpp"
#include "support.hpp"

using namespace htlogic;

TEST_CASE("algebra JSON round trip") {
  for (const auto& a : oracle::algebra_corpus()) CHECK(algebra_from_json(algebra_to_json(a)) == a);
  const FiniteAlgebra t = make_bt().without_implication();
  CHECK(algebra_from_json(algebra_to_json(t)) == t);
  CHECK(algebra_from_json(algebra_to_json(complex_algebra(make_k0()))) ==
        complex_algebra(make_k0()));
}

TEST_CASE("algebra JSON layout") {
  const Json j = algebra_to_json(make_bt());
  CHECK(j["elements"] == Json::array({"bot", "mid", "top"}));
  CHECK(j["bot"] == "bot");
  CHECK(j["s2"]["mid"] == "top");
  CHECK(j["c"]["mid"] == "top");
  CHECK(j["imp"]["mid"]["bot"] == "bot");
  CHECK(j["neg"]["bot"] == "top");
  CHECK_FALSE(algebra_to_json(make_bt().without_c()).contains("c"));
}

TEST_CASE("algebra JSON rejects bad input") {
  Json good = algebra_to_json(make_b());

  Json extra = good;
  extra["colour"] = "red";
  CHECK_THROWS_AS(algebra_from_json(extra), SchemaError);

  Json missing = good;
  missing.erase("s1");
  CHECK_THROWS_AS(algebra_from_json(missing), SchemaError);

  Json partial = good;
  partial["s1"].erase("top");
  CHECK_THROWS_AS(algebra_from_json(partial), SchemaError);

  Json unknown = good;
  unknown["s1"]["top"] = "mid";
  CHECK_THROWS_AS(algebra_from_json(unknown), Error);

  Json wrong_type = good;
  wrong_type["elements"] = "bot top";
  CHECK_THROWS_AS(algebra_from_json(wrong_type), SchemaError);

  Json bad_pair = good;
  bad_pair["le"] = Json::array({Json::array({"bot"})});
  CHECK_THROWS_AS(algebra_from_json(bad_pair), SchemaError);

  CHECK_THROWS_AS(algebra_from_json(Json::array()), SchemaError);

  // Well formed but not a lattice order.
  Json not_order = good;
  not_order["le"] = Json::array({Json::array({"bot", "top"})});
  CHECK_THROWS_AS(algebra_from_json(not_order), StructureError);
}

TEST_CASE("frame JSON") {
  const HTFrame k = make_k0();
  const Json j = frame_to_json(k);
  CHECK(j["states"] == Json::array({"t1", "t2"}));
  CHECK(j["s1"]["t2"] == "t1");
  CHECK(frame_from_json(j) == k);
  for (const auto& fr : enumerate_frames(3)) CHECK(frame_from_json(frame_to_json(fr)) == fr);

  Json extra = j;
  extra["name"] = "k0";
  CHECK_THROWS_AS(frame_from_json(extra), SchemaError);
  Json missing = j;
  missing.erase("R");
  CHECK_THROWS_AS(frame_from_json(missing), SchemaError);
  Json partial = j;
  partial["s2"].erase("t1");
  CHECK_THROWS_AS(frame_from_json(partial), SchemaError);
}

TEST_CASE("model JSON") {
  const HTModel m(make_k0(), {{"p", StateSet::of({1})}, {"q", StateSet{}}});
  const Json j = model_to_json(m);
  CHECK(j["m"]["p"] == Json::array({"t2"}));
  const HTModel back = model_from_json(j);
  CHECK(back.frame() == m.frame());
  CHECK(back.valuation() == m.valuation());

  Json no_m{{"frame", frame_to_json(make_k0())}};
  CHECK(model_from_json(no_m).valuation().empty());

  Json by_ref{{"frame", "k0.json"}, {"m", {{"p", {"t1", "t2"}}}}};
  CHECK_THROWS_AS(model_from_json(by_ref), SchemaError);
  std::string asked;
  const HTModel loaded = model_from_json(by_ref, [&](const std::string& ref) {
    asked = ref;
    return make_k0();
  });
  CHECK(asked == "k0.json");
  CHECK(loaded.value("p") == make_k0().all_states());

  Json extra = j;
  extra["notes"] = "";
  CHECK_THROWS_AS(model_from_json(extra), SchemaError);
  Json bad_state = j;
  bad_state["m"]["p"] = Json::array({"t9"});
  CHECK_THROWS_AS(model_from_json(bad_state), Error);
}

TEST_CASE("assignment and valuation JSON") {
  const FiniteAlgebra bt = make_bt();
  CHECK(assignment_to_json({{"p", 1}, {"q", 2}}, bt) == Json{{"p", "mid"}, {"q", "top"}});
  CHECK(valuation_to_json({{"p", StateSet::of({0, 1})}}, make_k0()) ==
        Json{{"p", {"t1", "t2"}}});
}

TEST_CASE("read_json_file") {
  const auto dir = std::filesystem::temp_directory_path() / "htlogic_test_json";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json", bad = dir / "bad.json";
  std::ofstream(good) << algebra_to_json(make_bt()).dump();
  std::ofstream(bad) << "{ not json";
  CHECK(algebra_from_json(read_json_file(good.string())) == make_bt());
  CHECK_THROWS_AS(read_json_file(bad.string()), SchemaError);
  CHECK_THROWS_AS(read_json_file((dir / "absent.json").string()), SchemaError);
  std::filesystem::remove_all(dir);
}
