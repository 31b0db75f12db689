#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "htlogic/cli.hpp"
#include "htlogic/duality.hpp"
#include "htlogic/json_io.hpp"

using namespace htlogic;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "htlogic_test_cli") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("cli decide") {
  auto v = run({"decide", "S1 p | ~S1 p"});
  CHECK(v.code == cli::kHolds);
  CHECK(v.out == "valid\n");

  auto r = run({"decide", "p | ~p"});
  CHECK(r.code == cli::kRefuted);
  CHECK(r.out.find("counter-assignment: p=mid") != std::string::npos);
  CHECK(r.out.find("fails at t1") != std::string::npos);

  auto h = run({"decide", "p", "--assume", "S1 p"});
  CHECK(h.code == cli::kHolds);
  CHECK(h.out == "holds\n");

  auto j = run({"--format", "json", "decide", "p", "--assume", "S2 p"});
  CHECK(j.code == cli::kRefuted);
  const Json doc = Json::parse(j.out);
  CHECK(doc["verdict"] == "refuted");
  CHECK(doc["gamma"] == Json::array({"S2 p"}));
  CHECK(doc["counter_assignment"]["p"] == "mid");
  CHECK(doc["failing_state"] == "t1");
  // Countermodel JSON re-parses and really is a countermodel.
  const HTModel m = model_from_json(doc["countermodel"]);
  CHECK(m.frame() == make_k0());
  CHECK(model_truth(m, parse_formula("S2 p")).holds);
  CHECK_FALSE(model_truth(m, parse_formula("p")).holds);
}

TEST_CASE("cli exit codes agree with embedded verdicts") {
  for (const char* text : {"S1 p -> p", "p -> S2 p", "p -> ~~p", "p | ~p", "~~p -> p", "S2 p -> p",
                           "((p -> r) -> q) -> (((q -> p) -> q) -> q)"}) {
    CAPTURE(text);
    auto o = run({"--format", "json", "decide", text});
    const Json doc = Json::parse(o.out);
    CHECK((o.code == cli::kHolds) == (doc["verdict"] == "valid"));
    CHECK((o.code == cli::kRefuted) == (doc["verdict"] == "refuted"));
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  auto bad = run({"decide", "p &"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"--format", "xml", "decide", "p"}).code == cli::kUsageError);
  CHECK(run({"--max-vars", "1", "decide", "p & q"}).code == cli::kUsageError);
  CHECK(run({"check-algebra", "/nonexistent/a.json"}).code == cli::kUsageError);
  CHECK(run({"dualize"}).code == cli::kUsageError);
  CHECK(run({"gen", "zz"}).code == cli::kUsageError);
  CHECK(run({"harness", "--frames", "4"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kHolds);
}

TEST_CASE("cli gen output re-parses") {
  CHECK(algebra_from_json(Json::parse(run({"gen", "bt"}).out)) == make_bt());
  CHECK(algebra_from_json(Json::parse(run({"gen", "b"}).out)) == make_b());
  CHECK(frame_from_json(Json::parse(run({"gen", "k0"}).out)) == make_k0());
}

TEST_CASE("cli dualize") {
  auto f = run({"dualize", "--to-frame", "bt"});
  CHECK(f.code == cli::kHolds);
  const HTFrame k = frame_from_json(Json::parse(f.out));
  const HTFrame k0 = frame_from_json(Json::parse(run({"gen", "k0"}).out));
  CHECK(frame_isomorphism(k, k0).has_value());

  auto a = run({"dualize", "--to-algebra", "k0"});
  CHECK(a.code == cli::kHolds);
  CHECK(check_isomorphic(algebra_from_json(Json::parse(a.out)), make_bt()).has_value());
}

TEST_CASE("cli check-algebra") {
  auto ok = run({"check-algebra", "bt"});
  CHECK(ok.code == cli::kHolds);
  CHECK(ok.out.find("complemented: bot top") != std::string::npos);
  CHECK(ok.out.find("identity") != std::string::npos);

  TempDir dir;
  Json j = algebra_to_json(make_bt());
  j["s2"] = j["s1"];
  const std::string path = dir.write("collapsed.json", j.dump());
  auto bad = run({"--format", "json", "check-algebra", path});
  CHECK(bad.code == cli::kRefuted);
  const Json doc = Json::parse(bad.out);
  CHECK(doc["passed"] == false);
  CHECK(doc["t_structure"]["violations"][0]["axiom"] == "T6");
  CHECK(doc["t_structure"]["violations"][0]["witness"] == Json::array({"bot", "mid"}));

  Json extra = algebra_to_json(make_b());
  extra["x"] = 1;
  CHECK(run({"check-algebra", dir.write("extra.json", extra.dump())}).code == cli::kUsageError);
}

TEST_CASE("cli check-frame, check-model, sat") {
  CHECK(run({"check-frame", "k0"}).code == cli::kHolds);

  TempDir dir;
  Json open = frame_to_json(make_k0());
  open["R"] = Json::array({Json::array({"t1", "t2"})});
  const std::string fpath = dir.write("open.json", open.dump());
  auto raw = run({"--format", "json", "check-frame", fpath});
  CHECK(raw.code == cli::kRefuted);
  CHECK(Json::parse(raw.out)["violations"][0]["axiom"] == "K1-reflexive");
  CHECK(run({"--close", "check-frame", fpath}).code == cli::kHolds);

  dir.write("k0.json", frame_to_json(make_k0()).dump());
  const std::string good =
      dir.write("good.json", Json{{"frame", "k0.json"}, {"m", {{"p", {"t2"}}}}}.dump());
  const std::string bad =
      dir.write("bad.json", Json{{"frame", "k0.json"}, {"m", {{"p", {"t1"}}}}}.dump());
  CHECK(run({"check-model", good}).code == cli::kHolds);
  auto b = run({"--format", "json", "check-model", bad});
  CHECK(b.code == cli::kRefuted);
  const Json doc = Json::parse(b.out);
  CHECK(doc["model"]["violations"][0]["witness"] == Json::array({"t1", "t2"}));
  CHECK(doc["model"]["violations"][0]["note"] == "p");

  CHECK(run({"sat", "S2 p", "--model", good, "--state", "t1"}).code == cli::kHolds);
  auto s = run({"sat", "~p", "--model", good, "--state", "t1"});
  CHECK(s.code == cli::kRefuted);
  CHECK(s.out == "false\n");
  CHECK(run({"sat", "p", "--model", good, "--state", "t9"}).code == cli::kUsageError);
}

TEST_CASE("cli eval") {
  auto e = run({"eval", "p | ~p", "--algebra", "bt", "--assign", "p=mid"});
  CHECK(e.code == cli::kHolds);
  CHECK(e.out == "mid\n");
  auto j = run({"--format", "json", "eval", "S2 p", "--algebra", "bt", "--assign", "p=mid"});
  CHECK(Json::parse(j.out)["value"] == "top");
  CHECK(run({"eval", "p", "--algebra", "bt"}).code == cli::kUsageError);
  CHECK(run({"eval", "p", "--algebra", "bt", "--assign", "p=zz"}).code == cli::kUsageError);
}

TEST_CASE("cli harness") {
  auto h = run({"harness", "--depth", "2", "--vars", "1", "--frames", "3"});
  CHECK(h.code == cli::kHolds);
  CHECK(h.out == "formulas: 169, valid: 44, refuted: 125, frames: 30, discrepancies: 0\n");
  auto j = run({"--format", "json", "--mod-iso", "harness", "--depth", "1", "--frames", "3"});
  const Json doc = Json::parse(j.out);
  CHECK(doc["frames"] == 11);
  CHECK(doc["passed"] == true);
}
