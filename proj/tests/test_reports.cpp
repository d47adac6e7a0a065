#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "reports.hpp"

using namespace rvt;

namespace {

ValidWord valid(const std::string& text) {
  auto parsed = parse_word(text);
  REQUIRE(std::holds_alternative<RvtWord>(parsed));
  auto result = ValidWord::make(std::get<RvtWord>(std::move(parsed)));
  REQUIRE(std::holds_alternative<ValidWord>(result));
  return std::get<ValidWord>(std::move(result));
}

std::string golden(const std::string& name) {
  const std::string path = std::string(RVT_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("delta rendering") {
  CHECK(reports::delta_string(PlaneRecord{PlaneSlot::T2, 1, 3}) ==
        "delta(1,3)");
}

TEST_CASE("letters line") {
  CHECK(reports::letters_line(successors_of_letter(Letter::T2)) ==
        "R V T2 L3");
  CHECK(reports::letters_line(LetterSet{}) == "");
}

TEST_CASE("analysis renderings match the pinned documents") {
  CHECK(reports::analysis_text(valid("RVL1")) == golden("analyze_rvl1.txt"));
  CHECK(reports::analysis_json(valid("RVL1")).dump(2) + "\n" ==
        golden("analyze_rvl1.json"));
  CHECK(reports::analysis_text(valid("RVL1T2")) ==
        golden("analyze_rvl1t2.txt"));
  CHECK(reports::analysis_json(valid("RVL1T2")).dump(2) + "\n" ==
        golden("analyze_rvl1t2.json"));
}

TEST_CASE("trace renderings match the pinned documents") {
  CHECK(reports::trace_text(valid("RVL1T2"), PlaneSlot::T1) ==
        golden("trace_rvl1t2_t1.txt"));
  CHECK(reports::trace_json(valid("RVL1T2"), PlaneSlot::T1).dump(2) + "\n" ==
        golden("trace_rvl1t2_t1.json"));
}

TEST_CASE("pinned json parses back to the same document") {
  for (const char* name :
       {"analyze_rvl1.json", "analyze_rvl1t2.json", "trace_rvl1t2_t1.json"}) {
    const std::string text = golden(name);
    const nlohmann::json parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
  }
}

TEST_CASE("analysis json carries the full level structure") {
  const nlohmann::json doc = reports::analysis_json(valid("RVL1"));
  CHECK(doc["word"] == "RVL1");
  CHECK(doc["base"]["coordinates"].size() == 3);
  REQUIRE(doc["levels"].size() == 3);
  const auto& level3 = doc["levels"][2];
  CHECK(level3["level"] == 3);
  CHECK(level3["letter"] == "L1");
  CHECK(level3["chart"]["u"] == "u3 = du1/dv2");
  CHECK(level3["chart"]["v"] == "v3 = du2/dv2");
  CHECK(level3["chart"]["denominator"] == "v2");
  CHECK(level3["fiber_coords"] == "[du1 : du2 : dv2]");
  CHECK(level3["coordinates"] == "(x, y, z, u1, v1, u2, v2, u3, v3)");
  CHECK(level3["configuration"] ==
        nlohmann::json::array({"V", "T1", "T2"}));
  REQUIRE(level3["planes"].size() == 3);
  CHECK(level3["planes"][1]["slot"] == "T1");
  CHECK(level3["planes"][1]["birth"] == 2);
  CHECK(level3["planes"][1]["steps"] == 1);
}

TEST_CASE("trace json describes the outcome") {
  const nlohmann::json found =
      reports::trace_json(valid("RVL1"), PlaneSlot::T2);
  CHECK(found["outcome"]["exists"] == true);
  CHECK(found["outcome"]["birth"] == 1);
  CHECK(found["outcome"]["steps"] == 2);
  REQUIRE(found["steps"].size() == 3);
  CHECK(found["steps"][2]["verdict"] == "vertical");

  const nlohmann::json base = reports::trace_json(valid("R"), PlaneSlot::T2);
  CHECK(base["outcome"]["exists"] == false);
  CHECK(base["outcome"]["reason"] == "reached_base");
  CHECK(!base["outcome"].contains("level"));
}

TEST_CASE("generated tables are deterministic and match the pinned copy") {
  const std::string first = reports::tables_markdown();
  const std::string second = reports::tables_markdown();
  CHECK(first == second);
  CHECK(first == golden("tables.md"));
}

TEST_CASE("generated tables carry the expected rows") {
  const std::string tables = reports::tables_markdown();
  CHECK(tables.find("| R | R, V | T1, T2, L1, L2, L3 |") != std::string::npos);
  CHECK(tables.find("| T2 | R, V, T2, L3 | T1, L1, L2 |") !=
        std::string::npos);
  CHECK(tables.find("| L1, L2, or L3 | V, T1, T2 |") != std::string::npos);
  CHECK(tables.find("| λ L1 L1 T2 | none | delta(k-3, 3) |") !=
        std::string::npos);
  CHECK(tables.find(
            "| λ V T1^m L1 L3 (m >= 0) | delta(k-1, 1) | delta(k-m-3, m+3) |") !=
        std::string::npos);
}

TEST_CASE("verify report text") {
  const std::string text = reports::verify_text(verify_counts(4));
  CHECK(text.find("k=4: enumerated 23, computed 23, ok") != std::string::npos);
  CHECK(text.find("all levels match") != std::string::npos);
}
