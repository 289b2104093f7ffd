#include "genus1.h"

#include <cstring>
#include <new>
#include <string>

#include "genus1/json_io.hpp"

struct g1_result {
  std::string body;
  g1_status status = G1_OK;
};

extern "C" {

g1_status g1_eval(const char* request_json, g1_result** out) {
  if (out == nullptr) return G1_ERR_INVALID;
  *out = nullptr;
  auto* res = new (std::nothrow) g1_result;
  if (res == nullptr) return G1_ERR_NOMEM;
  auto finish = [&](g1_status st, g1::json body) {
    res->status = st;
    res->body = body.dump();
    *out = res;
    return st;
  };
  auto error_body = [](const std::string& code, const std::string& message,
                       const std::string& context) {
    return g1::json{{"ok", false},
                    {"error", {{"code", code}, {"message", message}, {"context", context}}}};
  };
  try {
    if (request_json == nullptr)
      return finish(G1_ERR_INVALID, error_body("invalid-argument", "null request", ""));
    g1::json req = g1::json::parse(request_json);
    std::string op = req.at("op").get<std::string>();
    g1::json args = req.value("args", g1::json::object());
    g1::json result = g1::run_op(op, args);
    return finish(G1_OK, g1::json{{"ok", true}, {"result", result}});
  } catch (const g1::error& e) {
    g1_status st = e.code() == "inconclusive" ? G1_ERR_INCONCLUSIVE
                   : e.code() == "internal"   ? G1_ERR_INTERNAL
                                              : G1_ERR_INVALID;
    return finish(st, error_body(e.code(), e.what(), e.context()));
  } catch (const g1::json::exception& e) {
    return finish(G1_ERR_INVALID, error_body("invalid-argument", e.what(), ""));
  } catch (const std::exception& e) {
    return finish(G1_ERR_INTERNAL, error_body("internal", e.what(), ""));
  }
}

const char* g1_result_json(const g1_result* r) { return r == nullptr ? "" : r->body.c_str(); }

void g1_result_free(g1_result* r) { delete r; }

const char* g1_version(void) { return "genus1 0.1.0"; }

}  // extern "C"
