#include <doctest.h>

#include <cstring>
#include <string>

#include "devsurf.h"

namespace {

const char* kHelix =
    R"({"family":"helix","range":[0.2,2.9],"samples":1024,"params":{"radius":1,"pitch":1}})";

struct Str {
  char* p = nullptr;
  ~Str() { ds_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("curve handle lifecycle and parse errors") {
  ds_curve* c = nullptr;
  CHECK(ds_curve_from_json(kHelix, &c) == DS_OK);
  REQUIRE(c != nullptr);
  ds_curve_free(c);

  ds_curve* bad = nullptr;
  CHECK(ds_curve_from_json("not json", &bad) == DS_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(ds_last_error()) > 0);

  CHECK(ds_curve_from_json(nullptr, &bad) == DS_ERR_INVALID);
  CHECK(ds_curve_from_json(kHelix, nullptr) == DS_ERR_INVALID);
}

TEST_CASE("surface export through the C surface") {
  ds_curve* c = nullptr;
  REQUIRE(ds_curve_from_json(kHelix, &c) == DS_OK);
  Str obj;
  CHECK(ds_surface_obj(c, 40, 10, 0.5, 2.0, &obj.p) == DS_OK);
  CHECK(obj.view().rfind("# devsurf mesh\n", 0) == 0);

  char* out = nullptr;
  CHECK(ds_surface_obj(c, 40, 10, 0.0, 2.0, &out) == DS_ERR_DOMAIN);
  CHECK(out == nullptr);
  CHECK(ds_surface_obj(nullptr, 40, 10, 0.5, 2.0, &out) == DS_ERR_INVALID);
  ds_curve_free(c);
}

TEST_CASE("unfolding exports and verification") {
  ds_curve* c = nullptr;
  REQUIRE(ds_curve_from_json(kHelix, &c) == DS_OK);

  Str svg;
  CHECK(ds_unfold_svg(c, 256, 16, 1.0, &svg.p) == DS_OK);
  CHECK(svg.view().rfind("<svg ", 0) == 0);

  Str csv;
  CHECK(ds_unfold_csv(c, 128, &csv.p) == DS_OK);
  CHECK(csv.view().rfind("tau,zeta,theta,omega,pd,qd,sigma\n", 0) == 0);

  Str rep;
  int pass = 0;
  CHECK(ds_unfold_report(c, 2048, 1e-4, 1e-6, 7, &rep.p, &pass) == DS_OK);
  CHECK(pass == 1);
  CHECK(rep.view().find("\"pass\"") != std::string::npos);
  ds_curve_free(c);
}

TEST_CASE("sextet report on the helix") {
  ds_curve* c = nullptr;
  REQUIRE(ds_curve_from_json(kHelix, &c) == DS_OK);
  Str rep;
  int pass = 0;
  CHECK(ds_sextet_report(c, 4096, 1e-3, 1e-5, &rep.p, &pass) == DS_OK);
  CHECK(pass == 1);
  CHECK(rep.view().find("sextet_orthogonality") != std::string::npos);
  CHECK(rep.view().find("tangent_rotation") != std::string::npos);
  ds_curve_free(c);
}

TEST_CASE("shadow surfaces and classification") {
  const char* a =
      R"({"family":"circle","range":[-1.5,1.5],"samples":257,"offset":0,"params":{"radius":1}})";
  const char* b =
      R"({"family":"circle","range":[-1.5,1.5],"samples":257,"offset":1,"params":{"radius":2}})";

  Str obj;
  CHECK(ds_shadow_obj(a, b, 1.0, 17, &obj.p) == DS_OK);
  CHECK(obj.view().rfind("# devsurf mesh\n", 0) == 0);

  Str cls;
  CHECK(ds_shadow_classify(a, b, 1.0, &cls.p) == DS_OK);
  CHECK(cls.view().find("\"cone\"") != std::string::npos);

  char* out = nullptr;
  CHECK(ds_shadow_classify("bad", b, 1.0, &out) == DS_ERR_PARSE);
  CHECK(out == nullptr);
}

TEST_CASE("implicit example verification") {
  Str rep;
  int pass = 0;
  CHECK(ds_verify_implicit(100, 1e-3, 1e-5, &rep.p, &pass) == DS_OK);
  CHECK(pass == 1);
  CHECK(rep.view().find("implicit_residual") != std::string::npos);
}

TEST_CASE("full acceptance run through the C surface") {
  Str log, json;
  int pass = 0;
  CHECK(ds_selftest(0x4519, &log.p, &json.p, &pass) == DS_OK);
  CHECK(pass == 1);
  CHECK(log.view().find("PASS") != std::string::npos);
  CHECK(log.view().find("FAIL") == std::string::npos);
  CHECK(json.view().find("\"checks\"") != std::string::npos);
}

TEST_CASE("singular geometry surfaces as DS_ERR_SINGULAR") {
  const char* vertical =
      R"({"family":"expressions","range":[0,1],"samples":64,)"
      R"("params":{"t":"0","u":"0","v":"tau"}})";
  ds_curve* c = nullptr;
  REQUIRE(ds_curve_from_json(vertical, &c) == DS_OK);
  char* out = nullptr;
  CHECK(ds_unfold_csv(c, 64, &out) == DS_ERR_SINGULAR);
  CHECK(out == nullptr);
  ds_curve_free(c);
}
