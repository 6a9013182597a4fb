#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "sheafdist/sheafdist.h"

namespace {

sd_barcode* parse(const char* text) {
  sd_barcode* b = nullptr;
  REQUIRE(sd_barcode_parse(text, &b) == SD_OK);
  return b;
}

}  // namespace

TEST_CASE("c api: circle distance and matching") {
  sd_barcode* f = parse("0 [-1,1]\n0 (-1,1)\n");
  sd_barcode* g = parse("0 [0,0]\n1 [0,0]\n");
  double d = -1;
  CHECK(sd_distance(f, g, &d) == SD_OK);
  CHECK(d == 1.0);
  CHECK(sd_bruteforce_distance(f, g, 6, &d) == SD_OK);
  CHECK(d == 1.0);

  sd_matching* m = nullptr;
  REQUIRE(sd_match(f, g, &m) == SD_OK);
  CHECK(sd_matching_distance(m) == 1.0);
  REQUIRE(sd_matching_size(m) == 2);
  sd_match_entry e;
  REQUIRE(sd_matching_entry(m, 0, &e) == SD_OK);
  CHECK(e.part == SD_PART_CENTRAL);
  CHECK(e.index == -1);
  CHECK(e.cost == 1.0);
  CHECK(sd_matching_entry(m, 2, &e) == SD_ERR_OUT_OF_RANGE);

  sd_barcode* mid = nullptr;
  REQUIRE(sd_interpolate(f, g, m, 0.5, sd_default_tolerance(), &mid) == SD_OK);
  char* text = nullptr;
  REQUIRE(sd_barcode_format(mid, &text) == SD_OK);
  CHECK(std::string(text) == "0 [-0.5,0.5]\n0 (-0.5,0.5)\n");
  sd_string_free(text);

  int same = 0;
  CHECK(sd_same_component(f, g, &same) == SD_OK);
  CHECK(same == 1);

  size_t count = 0;
  CHECK(sd_global_sections(f, 0, nullptr, nullptr, 0, &count) == SD_OK);
  CHECK(count == 2);
  int degrees[2];
  long dims[2];
  CHECK(sd_global_sections(f, 1, degrees, dims, 2, &count) == SD_OK);
  CHECK((degrees[0] == 0 && dims[0] == 1 && degrees[1] == 1 && dims[1] == 1));
  CHECK(sd_global_sections(f, 1, degrees, dims, 1, &count) == SD_ERR_OUT_OF_RANGE);

  sd_barcode_free(mid);
  sd_matching_free(m);
  sd_barcode_free(f);
  sd_barcode_free(g);
}

TEST_CASE("c api: errors carry codes and messages") {
  sd_barcode* b = nullptr;
  CHECK(sd_barcode_parse("0 [2,1]", &b) == SD_ERR_PARSE);
  CHECK(b == nullptr);
  CHECK(std::strstr(sd_last_error(), "line 1") != nullptr);
  CHECK(sd_barcode_read_file("/nonexistent.gbc", &b) == SD_ERR_IO);
  CHECK(sd_barcode_parse(nullptr, &b) == SD_ERR_INVALID_ARGUMENT);

  sd_interval bad{2, 1, 1, 1, 0};
  sd_interval_type t;
  CHECK(sd_classify(&bad, &t) == SD_ERR_INVALID_ARGUMENT);

  sd_interval ray{0, 1, INFINITY, 0, 0}, iv{0, 0, 1, 0, 0};
  int dim = 0;
  CHECK(sd_ext_oracle(&ray, &iv, 1e-9, &dim) == SD_ERR_UNSUPPORTED);
  CHECK(sd_hom_dim(&ray, &iv, 1e-9, &dim) == SD_OK);

  char buf[4];
  CHECK(sd_format_number(0.125, buf, sizeof buf) == SD_ERR_OUT_OF_RANGE);
  CHECK(sd_format_number(INFINITY, buf, sizeof buf) == SD_OK);
  CHECK(std::string(buf) == "inf");
}

TEST_CASE("c api: intervals, convolution, hom") {
  sd_interval iv;
  REQUIRE(sd_interval_parse("(0,2)@0", &iv) == SD_OK);
  sd_interval_type t;
  CHECK(sd_classify(&iv, &t) == SD_OK);
  CHECK(t == SD_CENTRAL_OPEN);

  sd_barcode* b = nullptr;
  REQUIRE(sd_barcode_from_intervals(&iv, 1, &b) == SD_OK);
  sd_barcode* c = nullptr;
  REQUIRE(sd_convolve(b, 3, &c) == SD_OK);
  sd_interval out;
  REQUIRE(sd_barcode_get(c, 0, &out) == SD_OK);
  char* text = nullptr;
  REQUIRE(sd_interval_format(&out, &text) == SD_OK);
  CHECK(std::string(text) == "[-1,3]@1");
  sd_string_free(text);
  CHECK(sd_barcode_get(c, 1, &out) == SD_ERR_OUT_OF_RANGE);

  sd_interval s, tg;
  REQUIRE(sd_interval_parse("[1,2]@1", &s) == SD_OK);
  REQUIRE(sd_interval_parse("(0,3)@0", &tg) == SD_OK);
  int dim = -1;
  CHECK(sd_hom_dim(&s, &tg, 1e-9, &dim) == SD_OK);
  CHECK(dim == 1);
  CHECK(sd_ext_oracle(&s, &tg, 1e-9, &dim) == SD_OK);
  CHECK(dim == 1);

  int eq = 0;
  CHECK(sd_barcode_equal(b, b, 1e-9, &eq) == SD_OK);
  CHECK(eq == 1);
  sd_barcode_free(b);
  sd_barcode_free(c);
}

TEST_CASE("c api: diagrams") {
  sd_barcode* b = parse("0 [0,3)\n1 (-2,5]\n");
  char* text = nullptr;
  REQUIRE(sd_barcode_export_diagram(b, SD_SIDE_LEFT, &text) == SD_OK);
  CHECK(std::string(text) == "1 -5 2\n");
  sd_barcode* back = nullptr;
  REQUIRE(sd_diagram_import(text, SD_SIDE_LEFT, &back) == SD_OK);
  sd_string_free(text);
  sd_interval iv;
  REQUIRE(sd_barcode_get(back, 0, &iv) == SD_OK);
  CHECK((iv.lo == -2 && iv.hi == 5 && iv.hi_closed && !iv.lo_closed && iv.degree == 1));
  CHECK(sd_diagram_import("0 -inf inf", SD_SIDE_LEFT, &back) != SD_OK);
  sd_barcode_free(back);
  sd_barcode_free(b);
}
