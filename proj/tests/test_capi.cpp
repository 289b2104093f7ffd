// exercises the shared-library boundary the CLI uses
#include <cassert>
#include <cstring>
#include <iostream>
#include <string>

#include <json.hpp>

#include "genus1.h"

using nlohmann::json;

namespace {
int failures = 0;
void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}
}  // namespace

int main() {
  // golden sequence through the C boundary
  {
    g1_result* r = nullptr;
    g1_status st = g1_eval(R"({"op":"stable-seq","args":{"r":19,"d":11}})", &r);
    expect(st == G1_OK, "stable-seq status");
    json body = json::parse(g1_result_json(r));
    expect(body.at("ok") == true, "stable-seq ok flag");
    expect(body.at("result").at("sequence") ==
               json::parse("[1,0,1,0,1,1,0,1,0,1,0,1,1,0,1,0,1,1,0]"),
           "stable-seq golden value");
    g1_result_free(r);
  }
  // validation errors map to G1_ERR_INVALID with a structured error object
  {
    g1_result* r = nullptr;
    g1_status st = g1_eval(R"({"op":"stable-seq","args":{"r":6,"d":3}})", &r);
    expect(st == G1_ERR_INVALID, "coprimality error status");
    json body = json::parse(g1_result_json(r));
    expect(body.at("ok") == false, "error ok flag");
    expect(body.at("error").at("code") == "no-stable-bundle", "error code");
    g1_result_free(r);
  }
  // malformed JSON is rejected, not crashed on
  {
    g1_result* r = nullptr;
    g1_status st = g1_eval("{not json", &r);
    expect(st == G1_ERR_INVALID, "parse error status");
    g1_result_free(r);
    st = g1_eval(nullptr, &r);
    expect(st == G1_ERR_INVALID, "null request status");
    g1_result_free(r);
  }
  // a full computation over a prime field
  {
    g1_result* r = nullptr;
    g1_status st = g1_eval(
        R"({"op":"cohomology","args":{"field":"f5","mode":"both",
            "descriptor":{"kind":"band","curve":{"cycle":2},"d":[0,1,1,3,1,-2],"m":1,"lambda":3}}})",
        &r);
    expect(st == G1_OK, "cohomology status");
    json body = json::parse(g1_result_json(r));
    expect(body.at("result").at("match") == true, "formula matches oracle through the C API");
    g1_result_free(r);
  }
  expect(std::strlen(g1_version()) > 0, "version string");
  if (failures == 0) std::cout << "test_capi: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
